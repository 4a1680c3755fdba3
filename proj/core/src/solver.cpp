#include "sdepth/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "sdepth/bounds.hpp"
#include "sdepth/error.hpp"
#include "sdepth/primes.hpp"

namespace sdepth {

namespace {

using Code = CharacteristicPoset::Code;

struct BitsetHash {
  std::size_t operator()(const std::vector<std::uint64_t>& words) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : words) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

struct SharedState {
  std::uint64_t budget = 0;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> prunes{0};
  std::atomic<std::uint64_t> memo_hits{0};
  std::atomic<bool> stop{false};
};

struct Candidate {
  std::size_t top;
  std::size_t deficient_covered;
};

/// Calls f(element index) for every element of [bottom, top].
template <typename F>
void for_each_in_interval(const CharacteristicPoset& p, std::size_t bottom, std::size_t top, F&& f) {
  const auto lo = p.exponents(bottom);
  const auto hi = p.exponents(top);
  const auto strides = p.strides();
  const std::size_t n = lo.size();
  std::vector<Exponent> off(n, 0);
  Code code = p.code(bottom);
  while (true) {
    f(static_cast<std::size_t>(p.index_of_code(code)));
    std::size_t j = 0;
    for (; j < n; ++j) {
      if (lo[j] + off[j] < hi[j]) {
        ++off[j];
        code += strides[j];
        break;
      }
      code -= Code{off[j]} * strides[j];
      off[j] = 0;
    }
    if (j == n) return;
  }
}

// Backtracking search for an interval partition in which every deficient
// element (saturation < k) lies in an interval whose top has saturation >= k.
// Deficient elements are taken in element order; the first uncovered one is
// necessarily the bottom of its interval because everything below it is
// deficient and already covered.
//
// Tops are restricted to saturation exactly k. An interval [C, D] with
// sat(C) < k < sat(D) has a coordinate j with D_j = h_j > C_j, and splits
// into [C, D - e_j] and [C + (h_j - C_j) e_j, D]; repeating leaves tops at
// saturation max(k, sat(bottom)).
class DecisionSearch {
 public:
  DecisionSearch(const CharacteristicPoset& poset, std::size_t k, SharedState& shared,
                 std::size_t memo_limit)
      : p_(poset), k_(k), boolean_(poset.squarefree_cap()), shared_(shared), memo_limit_(memo_limit) {
    std::size_t max_rank = p_.ring().n;
    for (std::size_t i = 0; i < p_.size(); ++i) max_rank = std::max(max_rank, p_.rank(i));
    uncovered_at_rank_.assign(max_rank + 2, 0);
    need_at_rank_.assign(max_rank + 2, 0);
    if (boolean_) {
      choose_.assign(max_rank + 2, std::vector<std::int64_t>(max_rank + 2, 0));
      for (std::size_t a = 0; a < choose_.size(); ++a) {
        choose_[a][0] = 1;
        for (std::size_t b = 1; b <= a; ++b) choose_[a][b] = choose_[a - 1][b - 1] + (b < a ? choose_[a - 1][b] : 0);
      }
    }
    covered_.assign(p_.size(), 0);
    bits_.assign((p_.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < p_.size(); ++i) {
      ++uncovered_at_rank_[p_.rank(i)];
      if (p_.saturation(i) < k_) {
        deficient_.push_back(i);
        need_at_rank_[p_.rank(i)] += k_ - p_.saturation(i);
      }
    }
    const auto strides = p_.strides();
    up_free_.assign(p_.size(), 0);
    stamp_.assign(p_.size(), 0);
    for (std::size_t i = 0; i < p_.size(); ++i) {
      const auto e = p_.exponents(i);
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] < p_.cap()[j] && p_.index_of_code(p_.code(i) + strides[j]) != CharacteristicPoset::kAbsent) {
          ++up_free_[i];
        }
      }
      if (starved(i)) ++starved_count_;
    }
    down_free_.assign(p_.size(), 0);
    for (std::size_t i = 0; i < p_.size(); ++i) {
      const auto e = p_.exponents(i);
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] > 0 && p_.index_of_code(p_.code(i) - strides[j]) != CharacteristicPoset::kAbsent) {
          ++down_free_[i];
        }
      }
    }
  }

  /// An uncovered deficient element with fewer free upper neighbours than
  /// saturation it still lacks: any top above it raises at least that many
  /// coordinates, each giving a distinct upper neighbour inside the interval.
  bool starved(std::size_t i) const {
    return !covered_[i] && p_.saturation(i) < k_ && up_free_[i] < k_ - p_.saturation(i);
  }

  bool locally_feasible() const { return starved_count_ == 0; }

  std::size_t deficient_count() const noexcept { return deficient_.size(); }
  std::size_t deficient_at(std::size_t i) const noexcept { return deficient_[i]; }

  std::size_t first_uncovered(std::size_t start) const {
    while (start < deficient_.size() && covered_[deficient_[start]]) ++start;
    return start;
  }

  bool counting_feasible(std::size_t bottom) const {
    const std::size_t g = p_.rank(bottom);
    if (!boolean_) return need_at_rank_[g] <= uncovered_at_rank_[g + 1];

    // Every uncovered element below the top rank t lies in a future interval
    // topped at rank t; one with bottom rank b holds C(t-b, j-b) elements of
    // rank j. Solving rank by rank gives the number of bottoms at each rank,
    // which must be non-negative and fit under the rank-t elements.
    const std::size_t t = g + (k_ - p_.saturation(bottom));
    if (t >= uncovered_at_rank_.size()) return false;
    bottoms_.assign(t + 1, 0);
    std::int64_t total = 0;
    for (std::size_t j = g; j < t; ++j) {
      std::int64_t v = static_cast<std::int64_t>(uncovered_at_rank_[j]);
      for (std::size_t b = g; b < j && v >= 0; ++b) v -= bottoms_[b] * choose_[t - b][j - b];
      if (v < 0) return false;
      bottoms_[j] = v;
      total += v;
    }
    return total <= static_cast<std::int64_t>(uncovered_at_rank_[t]);
  }

  std::vector<Candidate> candidates(std::size_t bottom) const {
    const auto lo = p_.exponents(bottom);
    const auto cap = p_.cap();
    const auto strides = p_.strides();
    const std::size_t n = lo.size();

    std::vector<std::size_t> dims;
    std::vector<std::size_t> local_stride;
    std::size_t local_size = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (cap[j] > lo[j]) {
        dims.push_back(j);
        local_stride.push_back(local_size);
        local_size *= cap[j] - lo[j] + 1;
      }
    }

    // free_[x] : every element of [bottom, x] exists and is uncovered.
    std::vector<char> is_free(local_size, 0);
    std::vector<Exponent> off(dims.size(), 0);
    std::vector<Candidate> out;
    Code code = p_.code(bottom);
    for (std::size_t loc = 0; loc < local_size; ++loc) {
      if (loc > 0) {
        for (std::size_t d = 0; d < dims.size(); ++d) {
          const std::size_t j = dims[d];
          if (lo[j] + off[d] < cap[j]) {
            ++off[d];
            code += strides[j];
            break;
          }
          code -= Code{off[d]} * strides[j];
          off[d] = 0;
        }
      }
      const std::int32_t idx = p_.index_of_code(code);
      bool ok = idx != CharacteristicPoset::kAbsent && !covered_[static_cast<std::size_t>(idx)];
      for (std::size_t d = 0; d < dims.size() && ok; ++d) {
        if (off[d] > 0) ok = is_free[loc - local_stride[d]] != 0;
      }
      is_free[loc] = ok;
      const std::size_t sat = ok ? p_.saturation(static_cast<std::size_t>(idx)) : 0;
      if (ok && sat == k_) {
        out.push_back({static_cast<std::size_t>(idx), 0});
      }
    }

    for (auto& c : out) {
      for_each_in_interval(p_, bottom, c.top, [&](std::size_t e) {
        if (p_.saturation(e) < k_) ++c.deficient_covered;
      });
    }
    std::sort(out.begin(), out.end(), [&](const Candidate& a, const Candidate& b) {
      if (a.deficient_covered != b.deficient_covered) {
        return a.deficient_covered > b.deficient_covered;
      }
      return p_.code(a.top) < p_.code(b.top);
    });
    return out;
  }

  void set_interval(std::size_t bottom, std::size_t top, bool cover) {
    // Elements whose starved status may change: the interval and the lower
    // neighbours of its elements.
    ++epoch_;
    touched_.clear();
    const auto strides = p_.strides();
    auto touch = [&](std::size_t i) {
      if (stamp_[i] == epoch_) return;
      stamp_[i] = epoch_;
      touched_.push_back(i);
      if (starved(i)) --starved_count_;
    };
    for_each_in_interval(p_, bottom, top, [&](std::size_t e) {
      touch(e);
      const auto ex = p_.exponents(e);
      for (std::size_t j = 0; j < ex.size(); ++j) {
        if (ex[j] == 0) continue;
        const std::int32_t below = p_.index_of_code(p_.code(e) - strides[j]);
        if (below == CharacteristicPoset::kAbsent) continue;
        touch(static_cast<std::size_t>(below));
        if (cover) --up_free_[static_cast<std::size_t>(below)]; else ++up_free_[static_cast<std::size_t>(below)];
      }
      for (std::size_t j = 0; j < ex.size(); ++j) {
        if (ex[j] >= p_.cap()[j]) continue;
        const std::int32_t above = p_.index_of_code(p_.code(e) + strides[j]);
        if (above == CharacteristicPoset::kAbsent) continue;
        if (cover) --down_free_[static_cast<std::size_t>(above)]; else ++down_free_[static_cast<std::size_t>(above)];
      }
    });
    for_each_in_interval(p_, bottom, top, [&](std::size_t e) {
      covered_[e] = cover;
      bits_[e / 64] ^= std::uint64_t{1} << (e % 64);
      const std::size_t r = p_.rank(e);
      const std::size_t need = p_.saturation(e) < k_ ? k_ - p_.saturation(e) : 0;
      if (cover) {
        --uncovered_at_rank_[r];
        need_at_rank_[r] -= need;
      } else {
        ++uncovered_at_rank_[r];
        need_at_rank_[r] += need;
      }
    });
    for (std::size_t i : touched_) {
      if (starved(i)) ++starved_count_;
    }
  }

  /// Picks the next interval bottom: among uncovered deficient elements
  /// whose lower neighbours are all covered (each must bottom its own
  /// interval), the one with the fewest candidate tops. Returns false when
  /// some such element has none.
  bool pick(std::size_t start, std::size_t& bottom, std::vector<Candidate>& cands) const {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t s = start; s < deficient_.size(); ++s) {
      const std::size_t e = deficient_[s];
      if (covered_[e] || down_free_[e] != 0) continue;
      auto c = candidates(e);
      if (c.size() < best) {
        best = c.size();
        bottom = e;
        cands = std::move(c);
        if (best <= 1) break;
      }
    }
    return best > 0;
  }

  bool solve(std::size_t start) {
    if (shared_.stop.load(std::memory_order_relaxed)) return false;
    if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) >= shared_.budget) {
      throw ResourceLimit("node budget of " + std::to_string(shared_.budget) +
                          " exhausted in exact Stanley depth search");
    }
    start = first_uncovered(start);
    if (start == deficient_.size()) return true;

    if (!locally_feasible() || !counting_feasible(deficient_[start])) {
      shared_.prunes.fetch_add(1, std::memory_order_relaxed);
      return false;
    }
    if (failed_.contains(bits_)) {
      shared_.memo_hits.fetch_add(1, std::memory_order_relaxed);
      return false;
    }

    std::size_t bottom = 0;
    std::vector<Candidate> cands;
    if (pick(start, bottom, cands)) {
      for (const auto& cand : cands) {
        if (descend(bottom, cand.top, start)) return true;
        if (shared_.stop.load(std::memory_order_relaxed)) return false;
      }
    } else {
      shared_.prunes.fetch_add(1, std::memory_order_relaxed);
    }
    if (failed_.size() < memo_limit_) failed_.insert(bits_);
    return false;
  }

  /// Places [bottom, top] and searches on; undoes the placement on failure.
  bool descend(std::size_t bottom, std::size_t top, std::size_t start) {
    set_interval(bottom, top, true);
    chosen_.emplace_back(bottom, top);
    if (solve(start)) return true;
    chosen_.pop_back();
    set_interval(bottom, top, false);
    return false;
  }

  IntervalPartition partition() const {
    std::vector<std::pair<std::size_t, std::size_t>> pairs = chosen_;
    for (std::size_t i = 0; i < p_.size(); ++i) {
      if (!covered_[i]) pairs.emplace_back(i, i);
    }
    std::sort(pairs.begin(), pairs.end());
    IntervalPartition out;
    for (auto [b, t] : pairs) {
      const auto lo = p_.exponents(b);
      const auto hi = p_.exponents(t);
      out.intervals.push_back({{lo.begin(), lo.end()}, {hi.begin(), hi.end()}});
    }
    return out;
  }

 private:
  const CharacteristicPoset& p_;
  std::size_t k_;
  // Squarefree cap: the poset is a union of boolean intervals and rank
  // counting applies.
  bool boolean_;
  SharedState& shared_;
  std::size_t memo_limit_;

  std::vector<std::size_t> deficient_;
  std::vector<char> covered_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::size_t> uncovered_at_rank_;
  std::vector<std::size_t> need_at_rank_;
  std::vector<std::vector<std::int64_t>> choose_;
  mutable std::vector<std::int64_t> bottoms_;
  std::vector<std::uint32_t> up_free_;
  std::vector<std::uint32_t> down_free_;
  std::size_t starved_count_ = 0;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  std::vector<std::size_t> touched_;
  std::vector<std::pair<std::size_t, std::size_t>> chosen_;
  std::unordered_set<std::vector<std::uint64_t>, BitsetHash> failed_;
};

std::optional<IntervalPartition> run_search(const CharacteristicPoset& poset, std::size_t k,
                                            SharedState& shared, const SolverOptions& options) {
  DecisionSearch root(poset, k, shared, options.memo_limit);
  if (options.workers <= 1) {
    if (root.solve(0)) return root.partition();
    return std::nullopt;
  }

  // Fan out over the candidate tops of the first deficient element; each
  // worker owns a copy of the root state and its own failure memo.
  const std::size_t start = root.first_uncovered(0);
  if (start == root.deficient_count()) return root.partition();
  shared.nodes.fetch_add(1, std::memory_order_relaxed);
  std::size_t bottom = 0;
  std::vector<Candidate> cands;
  if (!root.locally_feasible() || !root.counting_feasible(root.deficient_at(start)) ||
      !root.pick(start, bottom, cands)) {
    shared.prunes.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  const std::size_t workers = std::min<std::size_t>(options.workers, cands.size());

  std::mutex mu;
  std::optional<IntervalPartition> found;
  std::exception_ptr error;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          DecisionSearch local = root;
          for (std::size_t i = w; i < cands.size(); i += workers) {
            if (shared.stop.load()) return;
            if (local.descend(bottom, cands[i].top, start)) {
              std::lock_guard lock(mu);
              if (!found) found = local.partition();
              shared.stop.store(true);
              return;
            }
          }
        } catch (...) {
          std::lock_guard lock(mu);
          if (!error) error = std::current_exception();
          shared.stop.store(true);
        }
      });
    }
  }
  if (found) return found;
  if (error) std::rethrow_exception(error);
  return std::nullopt;
}

std::size_t max_saturation(const CharacteristicPoset& poset) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < poset.size(); ++i) best = std::max(best, poset.saturation(i));
  return best;
}

void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InvalidArgument("Stanley depth of the zero ideal is not defined here");
  if (ideal.is_unit()) throw InvalidArgument("Stanley depth requires a proper ideal");
}

// Witness search for seeding only; kept small so that seeding never
// dominates the solve.
constexpr std::uint64_t kSeedAssCap = std::uint64_t{1} << 16;

}  // namespace

std::optional<IntervalPartition> decide_at_least(const CharacteristicPoset& poset, std::size_t k,
                                                 const SolverOptions& options,
                                                 SearchStats* stats) {
  if (poset.empty()) throw InvalidArgument("decision search on an empty poset");
  if (k > poset.ring().n) {
    throw InvalidArgument("k = " + std::to_string(k) + " exceeds the number of variables");
  }
  const auto t0 = std::chrono::steady_clock::now();
  SharedState shared;
  shared.budget = options.node_budget;
  auto result = run_search(poset, k, shared, options);
  if (stats != nullptr) {
    stats->nodes += shared.nodes.load();
    stats->prunes += shared.prunes.load();
    stats->memo_hits += shared.memo_hits.load();
    stats->ms += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  return result;
}

SdepthResult sdepth_exact(const CharacteristicPoset& poset, std::size_t lower_hint,
                          std::size_t upper_hint, const SolverOptions& options) {
  if (poset.empty()) throw InvalidArgument("Stanley depth of an empty poset");
  const std::size_t top = max_saturation(poset);
  std::size_t k = std::min(upper_hint, top);
  lower_hint = std::min(lower_hint, k);

  SdepthResult out;
  out.target = poset.kind();
  auto decide = [&](std::size_t level) {
    if (out.stats.nodes >= options.node_budget) {
      throw ResourceLimit("node budget of " + std::to_string(options.node_budget) +
                          " exhausted in exact Stanley depth search");
    }
    SolverOptions call = options;
    call.node_budget = options.node_budget - out.stats.nodes;
    return decide_at_least(poset, level, call, &out.stats);
  };

  auto found = decide(k);
  if (found) {
    while (k < top) {
      auto next = decide(k + 1);
      if (!next) break;
      found = std::move(next);
      ++k;
    }
  } else {
    // Descend; the lower hint is where this is expected to stop, but a
    // failure there keeps going rather than trusting it.
    while (!found) {
      --k;
      found = decide(k);
    }
  }

  out.value = k;
  out.witness = std::move(*found);
  if (!verify_partition(poset, out.witness, out.value)) {
    throw std::logic_error("solver produced an invalid interval partition");
  }
  return out;
}

namespace {

/// Best catalog bracket for `target`, evaluated cheaply: a small Ass search
/// and no exact per-block solves. Only a starting point for the search.
Bracket seed_bracket(const MonomialIdeal& ideal, BoundTarget target) {
  ReportOptions opts;
  opts.ass_cap = kSeedAssCap;
  opts.exact_block_box_limit = 0;
  try {
    const auto results = report_all(ideal, opts);
    return best_bracket(results, target);
  } catch (const Error&) {
    return {};
  }
}

std::size_t clamp_hint(std::optional<std::int64_t> v, std::size_t fallback) {
  if (!v) return fallback;
  return static_cast<std::size_t>(std::clamp<std::int64_t>(*v, 0, static_cast<std::int64_t>(fallback)));
}

// Membership of c in I depends on each c_j only through how many distinct
// generator exponents of x_j it reaches. Renumbering those exponents 1..r_j
// gives an ideal with the same Stanley depth on both sides: a partition of
// the small box lifts level by level, and a partition of the original box
// restricted to the points c_j in {e_{l+1} - 1} U {h_j} is one of the small
// box; both keep the saturated coordinates of every top.
struct ExponentLevels {
  MonomialIdeal compressed;
  std::vector<std::vector<Exponent>> levels;  ///< per variable, sorted distinct positive exponents
};

ExponentLevels compress_exponents(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ring().n;
  ExponentLevels out{ideal, std::vector<std::vector<Exponent>>(n)};
  for (const auto& g : ideal.generators()) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g.exponents()[j] > 0) out.levels[j].push_back(g.exponents()[j]);
    }
  }
  for (auto& l : out.levels) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> e(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& l = out.levels[j];
      e[j] = static_cast<Exponent>(std::lower_bound(l.begin(), l.end(), g.exponents()[j]) - l.begin() +
                                   (g.exponents()[j] > 0 ? 1 : 0));
    }
    gens.emplace_back(ideal.ring(), std::move(e));
  }
  out.compressed = MonomialIdeal::minimize_generators(ideal.ring(), std::move(gens));
  return out;
}

IntervalPartition lift_partition(const IntervalPartition& small, const ExponentLevels& lv) {
  IntervalPartition out;
  for (const auto& iv : small.intervals) {
    Interval big{iv.bottom, iv.top};
    for (std::size_t j = 0; j < lv.levels.size(); ++j) {
      const auto& l = lv.levels[j];
      big.bottom[j] = iv.bottom[j] == 0 ? 0 : l[iv.bottom[j] - 1];
      big.top[j] = iv.top[j] == l.size() ? (l.empty() ? 0 : l.back()) : l[iv.top[j]] - 1;
    }
    out.intervals.push_back(std::move(big));
  }
  return out;
}

using PosetBuilder = CharacteristicPoset (*)(const MonomialIdeal&, std::optional<std::vector<Exponent>>,
                                             std::uint64_t);

SdepthResult solve_compressed(const MonomialIdeal& ideal, PosetBuilder build, std::size_t lower,
                              std::size_t upper, const SolverOptions& options) {
  const auto lv = compress_exponents(ideal);
  auto out = sdepth_exact(build(lv.compressed, std::nullopt, options.box_limit), lower, upper, options);
  if (lv.compressed == ideal) return out;
  out.witness = lift_partition(out.witness, lv);
  try {
    if (!verify_partition(build(ideal, std::nullopt, options.box_limit), out.witness, out.value)) {
      throw std::logic_error("lifted interval partition is invalid");
    }
  } catch (const ResourceLimit&) {
    // The original box is too large to re-check; the compressed witness was verified.
  }
  return out;
}

}  // namespace

SdepthResult sdepth_exact_ideal(const MonomialIdeal& ideal, const SolverOptions& options) {
  require_proper_nonzero(ideal);
  const auto seed = seed_bracket(ideal, BoundTarget::ideal);
  const std::size_t n = ideal.ring().n;
  return solve_compressed(ideal, build_ideal_poset, clamp_hint(seed.lower, 0), clamp_hint(seed.upper, n), options);
}

SdepthResult sdepth_exact_quotient(const MonomialIdeal& ideal, const SolverOptions& options) {
  require_proper_nonzero(ideal);
  const auto seed = seed_bracket(ideal, BoundTarget::quotient);
  // sdepth(S/I) <= dim S/P for every P in Ass(S/I).
  std::size_t upper = clamp_hint(seed.upper, ideal.ring().n);
  try {
    for (const auto& aw : ass_primes(ideal, kSeedAssCap)) {
      upper = std::min(upper, ideal.ring().n - aw.prime.height());
    }
  } catch (const ResourceLimit&) {
  }
  return solve_compressed(ideal, build_quotient_poset, clamp_hint(seed.lower, 0), upper, options);
}

bool verify_partition(const CharacteristicPoset& poset, const IntervalPartition& partition,
                      std::size_t k) {
  const std::size_t n = poset.ring().n;
  std::vector<char> seen(poset.size(), 0);
  std::size_t covered = 0;
  for (const auto& iv : partition.intervals) {
    if (iv.bottom.size() != n || iv.top.size() != n) return false;
    if (!poset.contains(iv.bottom) || !poset.contains(iv.top)) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (iv.bottom[j] > iv.top[j]) return false;
    }
    if (poset.top_saturated_set(iv.top).size() < k) return false;

    std::vector<Exponent> point = iv.bottom;
    while (true) {
      const auto idx = poset.find(point);
      if (!idx || seen[*idx]) return false;
      seen[*idx] = 1;
      ++covered;
      std::size_t j = 0;
      for (; j < n; ++j) {
        if (point[j] < iv.top[j]) {
          ++point[j];
          break;
        }
        point[j] = iv.bottom[j];
      }
      if (j == n) break;
    }
  }
  return covered == poset.size();
}

std::size_t partition_sdepth(const CharacteristicPoset& poset, const IntervalPartition& partition) {
  if (partition.intervals.empty()) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& iv : partition.intervals) {
    best = std::min(best, poset.top_saturated_set(iv.top).size());
  }
  return best;
}

std::size_t oracle_sdepth(const CharacteristicPoset& poset) {
  const std::size_t size = poset.size();
  if (size == 0) throw InvalidArgument("oracle on an empty poset");
  if (size > kOracleMaxElements) {
    throw InvalidArgument("oracle is limited to " + std::to_string(kOracleMaxElements) +
                          " elements, poset has " + std::to_string(size));
  }
  const std::size_t n = poset.ring().n;
  auto leq = [&](std::size_t a, std::size_t b) {
    const auto x = poset.exponents(a), y = poset.exponents(b);
    for (std::size_t j = 0; j < n; ++j) {
      if (x[j] > y[j]) return false;
    }
    return true;
  };
  std::vector<std::uint64_t> above(size, 0), below(size, 0);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (leq(a, b)) {
        above[a] |= std::uint64_t{1} << b;
        below[b] |= std::uint64_t{1} << a;
      }
    }
  }
  const std::uint64_t full = size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
  const std::size_t unbounded = n + 1;

  // best(covered) = max over all interval partitions of the uncovered part of
  // the min top saturation. Every partition is reached exactly once by
  // always placing the lowest uncovered element (a minimal one, since element
  // order is a linear extension) as the bottom of the next interval.
  std::unordered_map<std::uint64_t, std::size_t> memo;
  auto best = [&](auto&& self, std::uint64_t covered) -> std::size_t {
    if (covered == full) return unbounded;
    if (auto it = memo.find(covered); it != memo.end()) return it->second;
    const std::size_t c = static_cast<std::size_t>(__builtin_ctzll(~covered));
    std::size_t value = 0;
    for (std::size_t d = c; d < size; ++d) {
      if (!(above[c] >> d & 1)) continue;
      const std::uint64_t interval = above[c] & below[d];
      if (interval & covered) continue;
      value = std::max(value, std::min(poset.saturation(d), self(self, covered | interval)));
    }
    memo.emplace(covered, value);
    return value;
  };
  return best(best, 0);
}

}  // namespace sdepth
