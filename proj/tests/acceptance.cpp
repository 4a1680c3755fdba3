// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Values are exact; each criterion has a wall-time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sdepth/bounds.hpp"
#include "sdepth/error.hpp"
#include "sdepth/primes.hpp"
#include "sdepth/solver.hpp"
#include "support/corpus.hpp"
#include "support/examples.hpp"

namespace {

using namespace sdepth;
using testing::prime_block;

struct Check {
  bool ok = true;
  std::ostringstream detail;
  std::size_t cases = 0;

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

const BoundResult* find(const std::vector<BoundResult>& all, const std::string& name, BoundTarget target) {
  for (const auto& b : all) {
    if (b.name == name && b.target == target && b.applicable) return &b;
  }
  return nullptr;
}

std::int64_t effective(const std::vector<BoundResult>& all, const std::string& name,
                       BoundTarget target = BoundTarget::ideal) {
  const auto* b = find(all, name, target);
  return b ? b->effective : -1;
}

// Corpus shared by oracle equivalence and the sandwich check.
struct Sample {
  MonomialIdeal ideal;
  std::size_t ideal_value = 0, quotient_value = 0;
};

std::vector<MonomialIdeal> oracle_corpus() {
  std::vector<MonomialIdeal> out;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto& i : testing::all_squarefree_ideals(n)) out.push_back(std::move(i));
  }
  std::mt19937_64 rng(20240517);
  for (int k = 0; k < 120; ++k) out.push_back(testing::random_squarefree_ideal(rng, 5));
  int extra = 0;
  while (extra < 40) {
    auto i = testing::random_ideal(rng, 5, 3, 4);
    if (i.is_unit() || i.is_squarefree() || build_ideal_poset(i).size() > kOracleMaxElements ||
        build_quotient_poset(i).size() > kOracleMaxElements) {
      continue;
    }
    out.push_back(std::move(i));
    ++extra;
  }
  return out;
}

std::vector<Sample> g_samples;

void criterion1(Check& c) {
  const auto six = sdepth_exact_ideal(testing::six_var_example()).value;
  const auto prime = sdepth_exact_ideal(prime_block(5, 1, 5)).value;
  c.expect(six == 4, "six-variable example = " + std::to_string(six));
  c.expect(prime == 3, "height-5 prime = " + std::to_string(prime));
  const std::vector<BlockSummary> blocks{{{1, 2, 3, 4, 5, 6}, 5, six}, {{7, 8, 9, 10, 11}, 5, prime}};
  const auto lb = lb_disjoint_blocks(blocks, 11).effective;
  c.expect(lb >= 7, "block lower bound = " + std::to_string(lb));
  const auto reported = effective(report_all(testing::eleven_var_example()), "lb_disjoint_blocks");
  c.expect(reported >= 7, "reported block lower bound = " + std::to_string(reported));
  c.detail << "exact 4 and 3, block lower bound " << lb;
}

void criterion2(Check& c) {
  const auto closed = ub_circular_three_primes({6, 4, 2}).effective;
  const auto generic = counting_ub_generic(build_ideal_poset(intersect_primes(primes_of(CircularShape{6, 4, 2})))).effective;
  c.expect(closed == 3, "closed form = " + std::to_string(closed));
  c.expect(generic == 3, "generic = " + std::to_string(generic));
  c.detail << "closed " << closed << ", poset count " << generic;
}

void criterion3(Check& c) {
  const auto all = report_all(testing::power_blocks({5, 5, 5}));
  const auto lo = effective(all, "lb_disjoint_blocks");
  const auto up = effective(all, "ub_disjoint_three_primes");
  const auto ex = effective(all, "derived_exact");
  c.expect(lo == 9 && up == 9 && ex == 9,
           "lower " + std::to_string(lo) + " upper " + std::to_string(up) + " derived " + std::to_string(ex));
  c.detail << "lower " << lo << ", upper " << up << ", derived exact " << ex;
}

void criterion4(Check& c) {
  const auto b = ub_chain_three_primes({10, 4, 4, 8, 6});
  c.expect(b.applicable && b.effective == 7, "chain bound = " + std::to_string(b.effective));
  c.detail << "bound " << b.effective;
}

void criterion5(Check& c) {
  const auto closed = ub_disjoint_four_primes({{5, 5, 5, 2}}).effective;
  const auto all = report_all(testing::power_blocks({5, 5, 5, 2}));
  const auto lo = effective(all, "lb_disjoint_blocks");
  const auto reported = effective(all, "ub_disjoint_four_primes");
  c.expect(closed == 11 && reported == 11, "four-prime bound = " + std::to_string(closed));
  c.expect(lo == 10, "block lower bound = " + std::to_string(lo));
  c.detail << "upper " << closed << ", lower " << lo << ", counting on radical " << effective(all, "counting_ub_generic");
}

void criterion6(Check& c) {
  std::size_t squarefree = 0;
  for (const auto& i : oracle_corpus()) {
    Sample s{i};
    s.ideal_value = sdepth_exact_ideal(i).value;
    s.quotient_value = sdepth_exact_quotient(i).value;
    c.expect(s.ideal_value == oracle_sdepth(build_ideal_poset(i)), "ideal " + i.to_string());
    c.expect(s.quotient_value == oracle_sdepth(build_quotient_poset(i)), "quotient " + i.to_string());
    squarefree += i.is_squarefree();
    g_samples.push_back(std::move(s));
  }
  c.detail << g_samples.size() << " ideals (" << squarefree << " squarefree), " << c.cases << " comparisons";
}

void criterion7(Check& c) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t d = 1; d <= n; ++d) {
      const auto v = sdepth_exact_ideal(prime_block(n, 1, d)).value;
      c.expect(v == n - d / 2, "n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  }
  c.detail << c.cases << " primes";
}

MonomialIdeal extend_ring(const MonomialIdeal& i, std::size_t n) {
  const Ring r(n);
  std::vector<Monomial> g;
  for (const auto& m : i.generators()) {
    std::vector<Exponent> e(m.exponents().begin(), m.exponents().end());
    e.resize(n, 0);
    g.emplace_back(r, std::move(e));
  }
  return MonomialIdeal::minimize_generators(r, std::move(g));
}

void criterion8(Check& c) {
  std::mt19937_64 rng(7);
  std::size_t primes = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 6;
    const auto i = testing::random_ideal(rng, n, 3, 5);
    if (i.is_unit()) continue;
    const auto value = sdepth_exact_ideal(i).value;
    for (const auto& aw : ass_primes(i)) {
      ++primes;
      c.expect(value <= n - aw.prime.height() / 2, "Ass bound on " + i.to_string());
    }
  }

  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 4;
    const auto big = testing::random_ideal(rng, n + 1, 3, 4);
    if (big.is_unit()) continue;
    const auto big_value = sdepth_exact_ideal(big).value;
    // Contraction to the first n variables loses at most one.
    std::vector<Monomial> kept;
    for (const auto& g : big.generators()) {
      if (g.exponent(n + 1) == 0) kept.push_back(g);
    }
    if (!kept.empty()) {
      std::vector<std::size_t> vars(n);
      for (std::size_t v = 0; v < n; ++v) vars[v] = v + 1;
      const auto small = restrict_to_block(MonomialIdeal::minimize_generators(big.ring(), kept), vars);
      c.expect(sdepth_exact_ideal(small).value + 1 >= big_value, "contraction of " + big.to_string());
    }
    // Adjoining a new variable generator gains at most one.
    const auto base = testing::random_ideal(rng, n, 3, 4);
    if (base.is_unit()) continue;
    const auto extended = extend_ring(base, n + 1);
    std::vector<Monomial> with(extended.generators().begin(), extended.generators().end());
    with.push_back(Monomial::variable(Ring(n + 1), n + 1));
    const auto adjoined = MonomialIdeal::minimize_generators(Ring(n + 1), std::move(with));
    c.expect(sdepth_exact_ideal(adjoined).value <= sdepth_exact_ideal(base).value + 1, "adjoin to " + base.to_string());
  }

  for (int t = 0; t < 60; ++t) {
    const auto a = testing::random_ideal(rng, 1 + t % 3, 2, 3);
    const auto b = testing::random_ideal(rng, 1 + (t / 3) % 3, 2, 3);
    if (a.is_unit() || b.is_unit()) continue;
    c.expect(sdepth_exact_ideal(testing::disjoint_product(a, b)).value >=
                 sdepth_exact_ideal(a).value + sdepth_exact_ideal(b).value,
             "superadditivity " + a.to_string() + " , " + b.to_string());
  }

  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 2 + t % 5;
    std::uniform_int_distribution<std::size_t> blocks_dist(1, n);
    const std::size_t m = blocks_dist(rng);
    std::vector<std::vector<std::size_t>> blocks(m);
    for (std::size_t v = 1; v <= n; ++v) blocks[v <= m ? v - 1 : rng() % m].push_back(v);
    const Ring r(n);
    MonomialIdeal all(r);
    for (const auto& vars : blocks) {
      const auto q = testing::random_primary(rng, r, vars, 3);
      all = all.is_zero() ? q : intersect(all, q);
    }
    c.expect(sdepth_exact_quotient(all).value + 1 >= m, "primary quotient " + all.to_string());
    c.expect(sdepth_exact_ideal(all).value >= m, "disjoint Ass " + all.to_string());
  }
  c.detail << c.cases << " checks (" << primes << " associated primes)";
}

void sandwich(Check& c, const MonomialIdeal& ideal, std::size_t up, std::size_t down) {
  for (const auto& b : report_all(ideal)) {
    if (!b.applicable || b.kind == BoundKind::info) continue;
    const auto exact = static_cast<std::int64_t>(b.target == BoundTarget::ideal ? up : down);
    if (b.kind != BoundKind::upper) c.expect(b.effective <= exact, b.name + " on " + ideal.to_string());
    if (b.kind != BoundKind::lower) c.expect(b.effective >= exact, b.name + " on " + ideal.to_string());
  }
}

void criterion9(Check& c) {
  for (const auto& s : g_samples) sandwich(c, s.ideal, s.ideal_value, s.quotient_value);
  std::size_t shapes = 0;
  for (std::size_t r = 1; r <= 6; ++r) {
    for (std::size_t e = r; r + e <= 7; ++e) {
      for (std::size_t q = e; r + e + q <= 8; ++q) {
        const auto i = intersect_primes(primes_of(DisjointShape{r, e, q}));
        sandwich(c, i, sdepth_exact_ideal(i).value, sdepth_exact_quotient(i).value);
        ++shapes;
      }
    }
  }
  c.detail << g_samples.size() << " corpus ideals, " << shapes << " shapes, " << c.cases << " bound checks";
}

void criterion10(Check& c) {
  std::size_t circular = 0, disjoint = 0;
  for (std::size_t n = 3; n <= 12; ++n) {
    for (std::size_t t = 2; t < n; ++t) {
      for (std::size_t u = 1; u < t; ++u) {
        const CircularShape s{n, t, u};
        const auto g = counting_ub_generic(build_ideal_poset(intersect_primes(primes_of(s))));
        c.expect(g.applicable && ub_circular_three_primes(s).raw == g.raw, "circular n=" + std::to_string(n));
        ++circular;
      }
    }
  }
  for (std::size_t r = 1; r <= 10; ++r) {
    for (std::size_t e = r; r + 2 * e <= 12; ++e) {
      for (std::size_t q = e; r + e + q <= 12; ++q) {
        const auto g = counting_ub_generic(build_ideal_poset(intersect_primes(primes_of(DisjointShape{r, e, q}))));
        c.expect(g.applicable && ub_disjoint_three_primes(r, e, q).raw == g.raw, "disjoint shape");
        ++disjoint;
      }
    }
  }
  c.detail << circular << " circular and " << disjoint << " disjoint shapes";
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "six- and eleven-variable examples", 10, criterion1},
      {2, "circular three-prime counting bound", 1, criterion2},
      {3, "three power blocks derive exact value", 1, criterion3},
      {4, "chain three-prime bound", 1, criterion4},
      {5, "four power blocks bracket", 1, criterion5},
      {6, "solver matches exhaustive oracle", 600, criterion6},
      {7, "prime ideal formula up to 8 variables", 300, criterion7},
      {8, "structural inequalities on random corpus", 900, criterion8},
      {9, "catalog bounds sandwich exact values", 600, criterion9},
      {10, "closed-form counting matches enumeration", 120, criterion10},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < cr.limit_seconds;
    const bool pass = c.ok && in_time;
    failures += !pass;
    std::printf("%s criterion %d: %s (%s; %.2f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", cr.id, cr.title,
                c.detail.str().c_str(), secs, cr.limit_seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
