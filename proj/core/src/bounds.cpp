#include "sdepth/bounds.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sdepth/error.hpp"
#include "sdepth/solver.hpp"

namespace sdepth {

namespace {

std::int64_t ceil_half(std::int64_t x) { return (x + 1) / 2; }
std::int64_t floor_half(std::int64_t x) { return x / 2; }
std::int64_t as_int(std::size_t x) { return static_cast<std::int64_t>(x); }

BoundResult make(std::string name, BoundKind kind, BoundTarget target, Rational raw,
                 std::string ref) {
  BoundResult b;
  b.name = std::move(name);
  b.kind = kind;
  b.target = target;
  b.raw = raw;
  b.effective = kind == BoundKind::lower ? raw.ceil() : raw.floor();
  b.applicable = true;
  b.paper_ref = std::move(ref);
  return b;
}

BoundResult not_applicable(std::string name, BoundKind kind, BoundTarget target,
                           std::string reason, std::string ref) {
  BoundResult b;
  b.name = std::move(name);
  b.kind = kind;
  b.target = target;
  b.applicable = false;
  b.reason = std::move(reason);
  b.paper_ref = std::move(ref);
  return b;
}

/// Adds `extra` free variables: both ideal and quotient Stanley depth grow by
/// one per variable not involved in the ideal.
BoundResult shifted(BoundResult b, std::size_t extra) {
  if (!b.applicable || extra == 0) return b;
  b.raw = b.raw + Rational(as_int(extra));
  b.effective += as_int(extra);
  return b;
}

const char* const kRefAssPrimes = "sdepth(I) <= min{ sdepth(P) : P in Ass(S/I) }";
const char* const kRefTallPrime =
    "m = |G(I)|, P in Ass(S/I) with height(P) = m (m even) or >= m-1 (m odd) => "
    "sdepth(I) = n - floor(m/2)";
const char* const kRefTwoNewVars =
    "sdepth((I, x_{n+1}, x_{n+2})) <= min{ n + 1 - floor(d_i/2) : d_i = height(P_i), "
    "P_i in Ass(S/I) }";
const char* const kRefGenerators = "sdepth(I) >= n - floor(m/2), m = |G(I)|";
const char* const kRefBlocks =
    "sdepth(I_1 S cap ... cap I_r S) >= sum sdepth(I_i) >= n - sum floor(m_i/2) for ideals "
    "on disjoint variable blocks";
const char* const kRefDisjointAss =
    "Ass(S/I) = {P_1..P_m} on pairwise disjoint variables => sdepth(I) >= m";
const char* const kRefDisjointPrimary =
    "I = Q_1 cap ... cap Q_m primary, radicals on disjoint variables => sdepth(S/I) >= m - 1";
const char* const kRefDepthInfo =
    "Min(S/I) = {P_1..P_s}, no P_i inside the sum of the others => depth(I) <= s, "
    "depth(S/I) <= s - 1";
const char* const kRefQuotientEQ = "I = P1 cap P2 cap P3 disjoint, r <= e <= q => sdepth(S/I) <= e + ceil(q/2)";
const char* const kRefQuotientImproved =
    "I = P1 cap P2 cap P3 disjoint => sdepth(S/I) <= r + min{e, ceil(q/2)}, except when "
    "e = r+1 and r is odd";
const char* const kRefQuotientLower =
    "I = P1 cap P2 cap P3 disjoint => sdepth(S/I) >= min{r+e, r+ceil(q/2), ceil(e/2)+ceil(q/2)}";
const char* const kRefQuotientExact =
    "I = P1 cap P2 cap P3 disjoint, r <= ceil(e/2) => sdepth(S/I) = r + min{e, ceil(q/2)}";
const char* const kRefCounting =
    "interval partition counting: N_g * (k - g) <= N_{g+1} on the characteristic poset";
const char* const kRefCircular =
    "circular three-prime intersection: sdepth(I) <= 2 + [C(n,3) - C(u,3) - C(t-u,3) - "
    "C(n-t,3)] / [C(n,2) - C(u,2) - C(t-u,2) - C(n-t,2)]";
const char* const kRefOverlapping =
    "sdepth(I) <= sdepth(I') + d, d = s-u + q-t + n-r, with the circular bound on I' in n-d "
    "variables";
const char* const kRefDisjointThree =
    "P1 cap P2 cap P3 disjoint: sdepth(I) <= 3 + [C(n,4) - sum C(d_i,4) - sum C(d_i,3)(n-d_i) - "
    "sum_{i<j} C(d_i,2) C(d_j,2)] / (d1 d2 d3)";
const char* const kRefChain =
    "P1 = (x_1..x_t), P2 = (x_{s+1}..x_r), P3 = (x_{q+1}..x_n): sdepth(I) <= "
    "min{(2n+t-r-s+2)/2, (n+r+s-q+2)/2, n-floor(t/2), n-floor((r-s)/2), n-floor((n-q)/2)}, "
    "and <= (n+q-t+2)/2 when t < q";
const char* const kRefFourReduced =
    "four disjoint primes d1>=d2>=d3>=d4=d: sdepth(I) <= d + (three-prime counting bound on "
    "P1+P2+P3 in n-d variables)";
const char* const kRefFourPrinted =
    "four disjoint primes, expression as printed: 3 + d + [C(n-d,4) - sum C(d_i,4) - sum "
    "C(d_i,3)(n-d_i) - sum C(d_i,2)C(d_j,2)] / (d1 d2 d3) with the full n";

std::vector<std::size_t> range_vars(std::size_t first, std::size_t last) {
  std::vector<std::size_t> v;
  for (std::size_t i = first; i <= last; ++i) v.push_back(i);
  return v;
}

bool disjoint_sets(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return true;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::upper: return "upper";
    case BoundKind::lower: return "lower";
    case BoundKind::exact: return "exact";
    case BoundKind::info: return "info";
  }
  return "info";
}

std::string to_string(BoundTarget target) {
  return target == BoundTarget::ideal ? "ideal" : "quotient";
}

std::int64_t binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b) return 0;
  b = std::min(b, a - b);
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= b; ++i) out = out * (a - b + i) / i;
  return out;
}

// --- shapes ----------------------------------------------------------------

void DisjointShape::validate() const {
  if (!(1 <= r && r <= e && e <= q)) {
    throw InvalidArgument("disjoint shape needs 1 <= r <= e <= q");
  }
}

void CircularShape::validate() const {
  if (!(0 < u && u < t && t < n)) throw InvalidArgument("circular shape needs 0 < u < t < n");
}

void GeneralShape::validate() const {
  if (!(0 < u && u <= s && s <= t && t <= q && q <= r && r <= n)) {
    throw InvalidArgument("overlapping shape needs 0 < u <= s <= t <= q <= r <= n");
  }
}

void ChainShape::validate() const {
  if (!(1 <= t && t <= n && s <= t && q <= r && r <= n && s < r && q < n)) {
    throw InvalidArgument("chain shape needs s <= t, q <= r, s < r within n variables");
  }
  // Runs [1,t], [s+1,r], [q+1,n] must be pairwise non-nested.
  const bool nested = (s == 0 && t <= r) || r <= t || s >= q || r == n || q == 0 || t == n;
  if (nested) throw InvalidArgument("chain shape primes are nested");
}

void FourPrimeShape::validate() const {
  if (d[3] < 1 || d[0] < d[1] || d[1] < d[2] || d[2] < d[3]) {
    throw InvalidArgument("four-prime shape needs d1 >= d2 >= d3 >= d4 >= 1");
  }
}

std::vector<PrimeIdeal> primes_of(const DisjointShape& shape, std::size_t extra_vars) {
  shape.validate();
  const Ring ring(shape.r + shape.e + shape.q + extra_vars);
  return {PrimeIdeal(ring, range_vars(1, shape.r)),
          PrimeIdeal(ring, range_vars(shape.r + 1, shape.r + shape.e)),
          PrimeIdeal(ring, range_vars(shape.r + shape.e + 1, shape.r + shape.e + shape.q))};
}

std::vector<PrimeIdeal> primes_of(const CircularShape& shape) {
  shape.validate();
  const Ring ring(shape.n);
  auto p3 = range_vars(shape.t + 1, shape.n);
  for (std::size_t i = 1; i <= shape.u; ++i) p3.push_back(i);
  return {PrimeIdeal(ring, range_vars(1, shape.t)), PrimeIdeal(ring, range_vars(shape.u + 1, shape.n)),
          PrimeIdeal(ring, p3)};
}

std::vector<PrimeIdeal> primes_of(const GeneralShape& shape) {
  shape.validate();
  const Ring ring(shape.n);
  auto p3 = range_vars(shape.q + 1, shape.n);
  for (std::size_t i = 1; i <= shape.u; ++i) p3.push_back(i);
  return {PrimeIdeal(ring, range_vars(1, shape.t)), PrimeIdeal(ring, range_vars(shape.s + 1, shape.r)),
          PrimeIdeal(ring, p3)};
}

std::vector<PrimeIdeal> primes_of(const ChainShape& shape) {
  shape.validate();
  const Ring ring(shape.n);
  return {PrimeIdeal(ring, range_vars(1, shape.t)), PrimeIdeal(ring, range_vars(shape.s + 1, shape.r)),
          PrimeIdeal(ring, range_vars(shape.q + 1, shape.n))};
}

// --- catalog ---------------------------------------------------------------

std::size_t sdepth_prime(std::size_t n, std::size_t d) {
  if (d < 1 || d > n) throw InvalidArgument("prime height must satisfy 1 <= d <= n");
  return n - d / 2;
}

BoundResult ub_assoc_primes(const MonomialIdeal& ideal, std::span<const AssWitness> ass) {
  if (ass.empty()) {
    return not_applicable("ub_assoc_primes", BoundKind::upper, BoundTarget::ideal,
                          "no associated primes", kRefAssPrimes);
  }
  std::size_t best = ideal.ring().n;
  for (const auto& aw : ass) best = std::min(best, sdepth_prime(ideal.ring().n, aw.prime.height()));
  return make("ub_assoc_primes", BoundKind::upper, BoundTarget::ideal, as_int(best), kRefAssPrimes);
}

BoundResult ub_assoc_primes(const MonomialIdeal& ideal, std::uint64_t ass_cap) {
  const auto ass = ass_primes(ideal, ass_cap);
  return ub_assoc_primes(ideal, ass);
}

BoundResult exact_from_tall_prime(const MonomialIdeal& ideal, std::span<const AssWitness> ass) {
  const std::size_t m = ideal.num_generators();
  const std::size_t n = ideal.ring().n;
  const bool tall = std::any_of(ass.begin(), ass.end(), [&](const AssWitness& aw) {
    return m % 2 == 0 ? aw.prime.height() == m : aw.prime.height() + 1 >= m;
  });
  if (m == 0 || !tall) {
    return not_applicable("exact_from_tall_prime", BoundKind::exact, BoundTarget::ideal,
                          m % 2 == 0 ? "no associated prime of height m = " + std::to_string(m)
                                     : "no associated prime of height >= m - 1 = " +
                                           std::to_string(m - 1),
                          kRefTallPrime);
  }
  return make("exact_from_tall_prime", BoundKind::exact, BoundTarget::ideal,
              as_int(n) - floor_half(as_int(m)), kRefTallPrime);
}

BoundResult ub_two_new_vars(const MonomialIdeal& base, std::span<const AssWitness> base_ass) {
  if (base_ass.empty()) {
    return not_applicable("ub_two_new_vars", BoundKind::upper, BoundTarget::ideal,
                          "base ideal has no associated primes", kRefTwoNewVars);
  }
  const std::int64_t n = as_int(base.ring().n);
  std::int64_t best = n + 2;
  for (const auto& aw : base_ass) {
    best = std::min(best, n + 1 - floor_half(as_int(aw.prime.height())));
  }
  return make("ub_two_new_vars", BoundKind::upper, BoundTarget::ideal, best, kRefTwoNewVars);
}

BoundResult lb_generators(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) {
    return not_applicable("lb_generators", BoundKind::lower, BoundTarget::ideal, "zero ideal",
                          kRefGenerators);
  }
  return make("lb_generators", BoundKind::lower, BoundTarget::ideal,
              as_int(ideal.ring().n) - floor_half(as_int(ideal.num_generators())), kRefGenerators);
}

BoundResult lb_disjoint_blocks(std::span<const BlockSummary> blocks, std::size_t n) {
  std::vector<char> used(n + 1, 0);
  std::int64_t total = 0;
  std::size_t block_vars = 0;
  for (const auto& b : blocks) {
    if (b.variables.empty()) throw InvalidArgument("empty variable block");
    for (std::size_t v : b.variables) {
      if (v == 0 || v > n) throw InvalidArgument("block variable outside the ring");
      if (used[v]) throw InvalidArgument("variable blocks overlap at x" + std::to_string(v));
      used[v] = 1;
    }
    block_vars += b.variables.size();
    total += b.exact_sdepth ? as_int(*b.exact_sdepth)
                            : as_int(b.variables.size()) - floor_half(as_int(b.num_generators));
  }
  total += as_int(n - block_vars);
  return make("lb_disjoint_blocks", BoundKind::lower, BoundTarget::ideal, total, kRefBlocks);
}

BoundResult lb_ideal_disjoint_ass(std::span<const AssWitness> ass) {
  for (std::size_t i = 0; i < ass.size(); ++i) {
    for (std::size_t j = i + 1; j < ass.size(); ++j) {
      if (!disjoint_sets(ass[i].prime.variables(), ass[j].prime.variables())) {
        return not_applicable("lb_ideal_disjoint_ass", BoundKind::lower, BoundTarget::ideal,
                              "associated primes share variables", kRefDisjointAss);
      }
    }
  }
  if (ass.empty()) {
    return not_applicable("lb_ideal_disjoint_ass", BoundKind::lower, BoundTarget::ideal,
                          "no associated primes", kRefDisjointAss);
  }
  return make("lb_ideal_disjoint_ass", BoundKind::lower, BoundTarget::ideal, as_int(ass.size()),
              kRefDisjointAss);
}

BoundResult lb_quotient_disjoint_primary(std::span<const MonomialIdeal> components) {
  if (components.empty()) throw InvalidArgument("no primary components given");
  std::vector<PrimeIdeal> radicals;
  for (const auto& q : components) {
    const auto ass = ass_primes(q);
    if (ass.size() != 1) {
      throw InvalidArgument("component " + q.to_string() + " is not primary");
    }
    radicals.push_back(ass.front().prime);
  }
  for (std::size_t i = 0; i < radicals.size(); ++i) {
    for (std::size_t j = i + 1; j < radicals.size(); ++j) {
      if (!disjoint_sets(radicals[i].variables(), radicals[j].variables())) {
        throw InvalidArgument("radicals of primary components share variables");
      }
    }
  }
  return make("lb_quotient_disjoint_primary", BoundKind::lower, BoundTarget::quotient,
              as_int(components.size()) - 1, kRefDisjointPrimary);
}

std::vector<BoundResult> depth_bound_info(std::span<const PrimeIdeal> minimal) {
  const std::size_t s = minimal.size();
  bool ok = s > 0;
  for (std::size_t i = 0; i < s && ok; ++i) {
    std::set<std::size_t> others;
    for (std::size_t j = 0; j < s; ++j) {
      if (j != i) others.insert(minimal[j].variables().begin(), minimal[j].variables().end());
    }
    const auto vars = minimal[i].variables();
    ok = !std::includes(others.begin(), others.end(), vars.begin(), vars.end());
  }
  if (!ok) {
    const char* why = s == 0 ? "no minimal primes" : "some minimal prime lies in the sum of the others";
    return {not_applicable("depth_bound_info", BoundKind::info, BoundTarget::ideal, why, kRefDepthInfo),
            not_applicable("depth_bound_info", BoundKind::info, BoundTarget::quotient, why, kRefDepthInfo)};
  }
  return {make("depth_bound_info", BoundKind::info, BoundTarget::ideal, as_int(s), kRefDepthInfo),
          make("depth_bound_info", BoundKind::info, BoundTarget::quotient, as_int(s) - 1, kRefDepthInfo)};
}

BoundResult ub_quotient_e_q(const DisjointShape& shape) {
  shape.validate();
  return make("ub_quotient_e_q", BoundKind::upper, BoundTarget::quotient,
              as_int(shape.e) + ceil_half(as_int(shape.q)), kRefQuotientEQ);
}

BoundResult ub_quotient_improved(const DisjointShape& shape) {
  shape.validate();
  if (shape.e == shape.r + 1 && shape.r % 2 == 1) {
    return not_applicable("ub_quotient_improved", BoundKind::upper, BoundTarget::quotient,
                          "e=r+1 and r odd", kRefQuotientImproved);
  }
  return make("ub_quotient_improved", BoundKind::upper, BoundTarget::quotient,
              as_int(shape.r) + std::min(as_int(shape.e), ceil_half(as_int(shape.q))),
              kRefQuotientImproved);
}

BoundResult lb_quotient_three(const DisjointShape& shape) {
  shape.validate();
  const std::int64_t r = as_int(shape.r), e = as_int(shape.e), q = as_int(shape.q);
  return make("lb_quotient_three", BoundKind::lower, BoundTarget::quotient,
              std::min({r + e, r + ceil_half(q), ceil_half(e) + ceil_half(q)}), kRefQuotientLower);
}

BoundResult exact_quotient_three(const DisjointShape& shape) {
  shape.validate();
  const std::int64_t r = as_int(shape.r), e = as_int(shape.e), q = as_int(shape.q);
  if (r > ceil_half(e)) {
    return not_applicable("exact_quotient_three", BoundKind::exact, BoundTarget::quotient,
                          "r > ceil(e/2)", kRefQuotientExact);
  }
  return make("exact_quotient_three", BoundKind::exact, BoundTarget::quotient,
              r + std::min(e, ceil_half(q)), kRefQuotientExact);
}

BoundResult counting_ub_generic(const CharacteristicPoset& poset) {
  const char* name = "counting_ub_generic";
  if (poset.kind() != PosetKind::ideal) {
    return not_applicable(name, BoundKind::upper, BoundTarget::ideal, "quotient-side poset", kRefCounting);
  }
  if (!poset.squarefree_cap()) {
    return not_applicable(name, BoundKind::upper, BoundTarget::ideal, "cap is not squarefree",
                          kRefCounting);
  }
  if (poset.empty()) {
    return not_applicable(name, BoundKind::upper, BoundTarget::ideal, "empty poset", kRefCounting);
  }
  const auto strides = poset.strides();
  std::optional<std::size_t> g;
  std::size_t g_sat = 0;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto e = poset.exponents(i);
    bool minimal = true;
    for (std::size_t j = 0; j < e.size() && minimal; ++j) {
      if (e[j] > 0 && poset.index_of_code(poset.code(i) - strides[j]) != CharacteristicPoset::kAbsent) {
        minimal = false;
      }
    }
    if (!minimal) continue;
    if (g && *g != poset.rank(i)) {
      return not_applicable(name, BoundKind::upper, BoundTarget::ideal,
                            "generators of mixed degree", kRefCounting);
    }
    g = poset.rank(i);
    g_sat = poset.saturation(i);
  }
  const auto counts = poset.rank_counts();
  const std::int64_t n_g = as_int(counts.at(*g));
  const auto next = counts.find(*g + 1);
  const std::int64_t n_next = next == counts.end() ? 0 : as_int(next->second);
  return make(name, BoundKind::upper, BoundTarget::ideal,
              Rational(as_int(g_sat)) + Rational(n_next, n_g), kRefCounting);
}

BoundResult ub_circular_three_primes(const CircularShape& shape) {
  shape.validate();
  const std::int64_t n = as_int(shape.n), t = as_int(shape.t), u = as_int(shape.u);
  const std::int64_t num = binomial(n, 3) - binomial(u, 3) - binomial(t - u, 3) - binomial(n - t, 3);
  const std::int64_t den = binomial(n, 2) - binomial(u, 2) - binomial(t - u, 2) - binomial(n - t, 2);
  return make("ub_circular_three_primes", BoundKind::upper, BoundTarget::ideal,
              Rational(2) + Rational(num, den), kRefCircular);
}

BoundResult ub_overlapping_three_primes(const GeneralShape& shape) {
  shape.validate();
  const std::int64_t d = as_int(shape.single_count());
  const std::int64_t reduced = as_int(shape.n) - d;
  if (reduced < 3) throw InvalidArgument("overlapping shape needs n - d >= 3");
  const std::int64_t b1 = as_int(shape.u), b2 = as_int(shape.t - shape.s), b3 = as_int(shape.r - shape.q);
  const std::int64_t num = binomial(reduced, 3) - binomial(b1, 3) - binomial(b2, 3) - binomial(b3, 3);
  const std::int64_t den = binomial(reduced, 2) - binomial(b1, 2) - binomial(b2, 2) - binomial(b3, 2);
  if (den == 0) {
    return not_applicable("ub_overlapping_three_primes", BoundKind::upper, BoundTarget::ideal,
                          "reduced intersection lives on a single block", kRefOverlapping);
  }
  return make("ub_overlapping_three_primes", BoundKind::upper, BoundTarget::ideal,
              Rational(2 + d) + Rational(num, den), kRefOverlapping);
}

namespace {

std::int64_t disjoint_three_bracket(std::int64_t n, std::array<std::int64_t, 3> d) {
  std::int64_t out = binomial(n, 4);
  for (std::int64_t di : d) out -= binomial(di, 4) + binomial(di, 3) * (n - di);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) out -= binomial(d[i], 2) * binomial(d[j], 2);
  }
  return out;
}

}  // namespace

BoundResult ub_disjoint_three_primes(std::size_t d1, std::size_t d2, std::size_t d3) {
  if (d1 == 0 || d2 == 0 || d3 == 0) throw InvalidArgument("prime heights must be positive");
  const std::array<std::int64_t, 3> d{as_int(d1), as_int(d2), as_int(d3)};
  const std::int64_t n = d[0] + d[1] + d[2];
  return make("ub_disjoint_three_primes", BoundKind::upper, BoundTarget::ideal,
              Rational(3) + Rational(disjoint_three_bracket(n, d), d[0] * d[1] * d[2]),
              kRefDisjointThree);
}

BoundResult ub_chain_three_primes(const ChainShape& shape) {
  shape.validate();
  const std::int64_t n = as_int(shape.n), t = as_int(shape.t), s = as_int(shape.s),
                     r = as_int(shape.r), q = as_int(shape.q);
  Rational best(2 * n + t - r - s + 2, 2);
  best = min(best, Rational(n + r + s - q + 2, 2));
  best = min(best, Rational(n - floor_half(t)));
  best = min(best, Rational(n - floor_half(r - s)));
  best = min(best, Rational(n - floor_half(n - q)));
  if (t < q) best = min(best, Rational(n + q - t + 2, 2));
  return make("ub_chain_three_primes", BoundKind::upper, BoundTarget::ideal, best, kRefChain);
}

BoundResult ub_disjoint_four_primes(const FourPrimeShape& shape, FourPrimeVariant variant) {
  shape.validate();
  const std::int64_t d = as_int(shape.d[3]);
  const std::array<std::int64_t, 3> top{as_int(shape.d[0]), as_int(shape.d[1]), as_int(shape.d[2])};
  const std::int64_t product = top[0] * top[1] * top[2];
  if (variant == FourPrimeVariant::reduced) {
    const std::int64_t reduced = top[0] + top[1] + top[2];
    return make("ub_disjoint_four_primes", BoundKind::upper, BoundTarget::ideal,
                Rational(3 + d) + Rational(disjoint_three_bracket(reduced, top), product),
                kRefFourReduced);
  }
  // The printed expression: C(n-d, 4) but (n - d_i) over the full n. It does
  // not reproduce the worked four-block value, so it is reported as
  // information only and never enters the aggregation.
  const std::int64_t n = as_int(shape.n());
  std::int64_t bracket = binomial(n - d, 4);
  for (std::int64_t di : top) bracket -= binomial(di, 4) + binomial(di, 3) * (n - di);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) bracket -= binomial(top[i], 2) * binomial(top[j], 2);
  }
  return make("ub_disjoint_four_primes", BoundKind::info, BoundTarget::ideal,
              Rational(3 + d) + Rational(bracket, product), kRefFourPrinted);
}

// --- detection -------------------------------------------------------------

DetectedShapes detect_shapes(std::span<const PrimeIdeal> minimal) {
  DetectedShapes out;
  if (minimal.empty()) return out;
  const std::size_t n = minimal.front().ring().n;
  std::vector<unsigned> membership(n + 1, 0);
  for (std::size_t i = 0; i < minimal.size() && i < 8; ++i) {
    for (std::size_t v : minimal[i].variables()) membership[v] |= 1u << i;
  }
  std::size_t used = 0;
  for (std::size_t v = 1; v <= n; ++v) used += membership[v] != 0;
  out.free_vars = n - used;

  out.disjoint_supports = true;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    for (std::size_t j = i + 1; j < minimal.size(); ++j) {
      if (!disjoint_sets(minimal[i].variables(), minimal[j].variables())) out.disjoint_supports = false;
    }
  }

  if (minimal.size() == 4 && out.disjoint_supports) {
    std::array<std::size_t, 4> d{};
    for (std::size_t i = 0; i < 4; ++i) d[i] = minimal[i].height();
    std::sort(d.begin(), d.end(), std::greater<>());
    out.four = FourPrimeShape{d};
  }
  if (minimal.size() != 3) return out;

  if (out.disjoint_supports) {
    std::array<std::size_t, 3> h{minimal[0].height(), minimal[1].height(), minimal[2].height()};
    std::sort(h.begin(), h.end());
    out.disjoint = DisjointShape{h[0], h[1], h[2]};
  }

  // Venn region sizes, indexed by membership mask over the three primes.
  std::array<std::size_t, 8> region{};
  for (std::size_t v = 1; v <= n; ++v) ++region[membership[v]];

  if (region[1] == 0 && region[2] == 0 && region[4] == 0 && region[7] == 0 && region[3] > 0 &&
      region[5] > 0 && region[6] > 0) {
    const std::size_t u = region[5], mid = region[3], last = region[6];
    out.circular = CircularShape{u + mid + last, u + mid, u};
  }

  std::array<unsigned, 3> perm{0, 1, 2};
  do {
    const unsigned a = 1u << perm[0], b = 1u << perm[1], c = 1u << perm[2];
    const std::size_t only_a = region[a], only_b = region[b], only_c = region[c];
    const std::size_t ab = region[a | b], bc = region[b | c], ac = region[a | c];
    const std::size_t abc = region[7];

    if (!out.general && abc == 0 && ac > 0) {
      // P1 = A, P2 = B, P3 = C laid out as
      // [A&C][A only][A&B][B only][B&C][C only].
      GeneralShape g;
      g.u = ac;
      g.s = g.u + only_a;
      g.t = g.s + ab;
      g.q = g.t + only_b;
      g.r = g.q + bc;
      g.n = g.r + only_c;
      out.general = g;
    }

    if (!out.disjoint_supports && ac == 0 && (only_b == 0 || abc == 0)) {
      // A, B, C as consecutive runs on a line with B in the middle.
      ChainShape ch;
      ch.s = only_a;
      ch.t = only_a + ab + abc;
      ch.q = only_a + ab + only_b;
      ch.r = ch.q + abc + bc;
      ch.n = ch.r + only_c;
      try {
        ch.validate();
        if (std::find(out.chains.begin(), out.chains.end(), ch) == out.chains.end()) {
          out.chains.push_back(ch);
        }
      } catch (const InvalidArgument&) {
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

MonomialIdeal restrict_to_block(const MonomialIdeal& ideal, std::span<const std::size_t> variables) {
  const Ring ring(variables.size());
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> e;
    for (std::size_t v : variables) e.push_back(g.exponent(v));
    gens.emplace_back(ring, std::move(e));
  }
  return MonomialIdeal::minimize_generators(ring, std::move(gens));
}

namespace {

MonomialIdeal project_in_place(const MonomialIdeal& ideal, std::span<const std::size_t> variables) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> e(ideal.ring().n, 0);
    for (std::size_t v : variables) e[v - 1] = g.exponent(v);
    gens.emplace_back(ideal.ring(), std::move(e));
  }
  return MonomialIdeal::minimize_generators(ideal.ring(), std::move(gens));
}

}  // namespace

std::vector<IdealBlock> factor_disjoint_blocks(const MonomialIdeal& ideal,
                                               std::span<const MonomialIdeal> components,
                                               std::span<const PrimeIdeal> minimal) {
  const std::size_t n = ideal.ring().n;
  std::vector<char> in_gens(n + 1, 0);
  for (const auto& g : ideal.generators()) {
    for (std::size_t v : g.support()) in_gens[v] = 1;
  }
  auto whole = [&]() {
    std::vector<std::size_t> vars;
    for (std::size_t v = 1; v <= n; ++v) {
      if (in_gens[v]) vars.push_back(v);
    }
    return std::vector<IdealBlock>{{vars, ideal}};
  };

  UnionFind uf(n + 1);
  std::vector<char> anchored(n + 1, 0);
  if (!components.empty()) {
    for (const auto& comp : components) {
      std::optional<std::size_t> first;
      for (const auto& g : comp.generators()) {
        for (std::size_t v : g.support()) {
          if (first) uf.unite(*first, v); else first = v;
          anchored[v] = 1;
        }
      }
    }
  } else {
    for (const auto& p : minimal) {
      const auto vars = p.variables();
      for (std::size_t v : vars) {
        uf.unite(vars.front(), v);
        anchored[v] = 1;
      }
    }
  }
  // Generator variables outside every candidate block join a block they
  // share a generator with.
  for (const auto& g : ideal.generators()) {
    const auto supp = g.support();
    std::optional<std::size_t> anchor;
    for (std::size_t v : supp) {
      if (anchored[v]) {
        anchor = v;
        break;
      }
    }
    for (std::size_t v : supp) {
      if (!anchored[v]) uf.unite(anchor.value_or(supp.front()), v);
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 1; v <= n; ++v) {
    if (in_gens[v]) groups[uf.find(v)].push_back(v);
  }
  if (groups.size() <= 1) return whole();

  std::vector<IdealBlock> blocks;
  for (auto& [root, vars] : groups) blocks.push_back({vars, project_in_place(ideal, vars)});
  MonomialIdeal check = blocks.front().ideal;
  for (std::size_t i = 1; i < blocks.size(); ++i) check = intersect(check, blocks[i].ideal);
  if (!(check == ideal)) return whole();
  return blocks;
}

// --- aggregation -----------------------------------------------------------

namespace {

int kind_order(BoundKind k) {
  switch (k) {
    case BoundKind::exact: return 0;
    case BoundKind::lower: return 1;
    case BoundKind::upper: return 2;
    case BoundKind::info: return 3;
  }
  return 4;
}

std::optional<std::size_t> block_exact_sdepth(const MonomialIdeal& block, const ReportOptions& options) {
  if (options.exact_block_box_limit == 0) return std::nullopt;
  SolverOptions solver;
  solver.box_limit = options.exact_block_box_limit;
  solver.node_budget = options.exact_block_node_budget;
  try {
    return sdepth_exact_ideal(block, solver).value;
  } catch (const ResourceLimit&) {
    return std::nullopt;
  }
}

// Ideal (I, x_a, x_b): pick the last two variable generators and strip them.
std::optional<MonomialIdeal> strip_two_variables(const MonomialIdeal& ideal) {
  std::vector<std::size_t> pure;
  for (const auto& g : ideal.generators()) {
    if (g.degree() == 1) pure.push_back(g.support().front());
  }
  if (pure.size() < 2 || ideal.num_generators() < 3 || ideal.ring().n < 3) return std::nullopt;
  std::sort(pure.begin(), pure.end());
  const std::size_t a = pure[pure.size() - 2], b = pure.back();
  std::vector<std::size_t> keep;
  for (std::size_t v = 1; v <= ideal.ring().n; ++v) {
    if (v != a && v != b) keep.push_back(v);
  }
  std::vector<Monomial> rest;
  for (const auto& g : ideal.generators()) {
    if (g != Monomial::variable(ideal.ring(), a) && g != Monomial::variable(ideal.ring(), b)) rest.push_back(g);
  }
  return restrict_to_block(MonomialIdeal::minimize_generators(ideal.ring(), std::move(rest)), keep);
}

// Ass(S/I) as the union over disjoint blocks. A block witness times one
// generator from every other block is a witness in the ambient ring.
std::vector<AssWitness> ass_by_blocks(const MonomialIdeal& ideal, const std::vector<IdealBlock>& blocks,
                                      std::uint64_t cap) {
  if (blocks.size() < 2) return ass_primes(ideal, cap);
  const Ring ring = ideal.ring();
  std::map<std::vector<std::size_t>, Monomial> found;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& vars = blocks[i].variables;
    for (const auto& aw : ass_primes(restrict_to_block(blocks[i].ideal, vars), cap)) {
      std::vector<Exponent> e(ring.n, 0);
      for (std::size_t k = 0; k < vars.size(); ++k) e[vars[k] - 1] = aw.witness.exponent(k + 1);
      Monomial w(ring, std::move(e));
      for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (k != i) w = w * blocks[k].ideal.generators().front();
      }
      std::vector<std::size_t> prime;
      for (std::size_t v : aw.prime.variables()) prime.push_back(vars[v - 1]);
      std::sort(prime.begin(), prime.end());
      if (colon(ideal, w) != PrimeIdeal(ring, prime).to_ideal()) return ass_primes(ideal, cap);
      found.emplace(std::move(prime), std::move(w));
    }
  }
  std::vector<AssWitness> out;
  for (auto& [vars, w] : found) out.push_back({PrimeIdeal(ring, vars), w});
  return out;
}

}  // namespace

std::vector<BoundResult> report_all(const MonomialIdeal& ideal, const ReportOptions& options) {
  if (ideal.is_zero()) throw InvalidArgument("bounds report for the zero ideal");
  if (ideal.is_unit()) throw InvalidArgument("bounds report for the unit ideal");
  const std::size_t n = ideal.ring().n;
  std::vector<BoundResult> out;
  auto add = [&](BoundResult b) { out.push_back(std::move(b)); };
  auto guarded = [&](const std::string& name, BoundKind kind, BoundTarget target, const char* ref,
                     auto&& fn) {
    try {
      add(fn());
    } catch (const Error& e) {
      add(not_applicable(name, kind, target, e.what(), ref));
    }
  };

  std::vector<PrimeIdeal> minimal;
  try {
    minimal = min_primes(ideal, options.ass_cap);
  } catch (const ResourceLimit&) {
  }
  const auto shapes = detect_shapes(minimal);
  const bool is_radical = !minimal.empty() && intersect_primes(minimal) == ideal;
  const auto blocks = factor_disjoint_blocks(ideal, options.components, minimal);

  std::optional<std::vector<AssWitness>> ass;
  std::string ass_reason;
  try {
    ass = ass_by_blocks(ideal, blocks, options.ass_cap);
  } catch (const ResourceLimit& e) {
    ass_reason = e.what();
  }

  // --- ideal side ---
  if (ass) {
    add(ub_assoc_primes(ideal, *ass));
    add(exact_from_tall_prime(ideal, *ass));
    add(lb_ideal_disjoint_ass(*ass));
  } else {
    add(not_applicable("ub_assoc_primes", BoundKind::upper, BoundTarget::ideal, ass_reason, kRefAssPrimes));
    add(not_applicable("exact_from_tall_prime", BoundKind::exact, BoundTarget::ideal, ass_reason, kRefTallPrime));
    add(not_applicable("lb_ideal_disjoint_ass", BoundKind::lower, BoundTarget::ideal, ass_reason, kRefDisjointAss));
  }

  if (auto base = strip_two_variables(ideal)) {
    guarded("ub_two_new_vars", BoundKind::upper, BoundTarget::ideal, kRefTwoNewVars, [&] {
      const auto base_ass = ass_primes(*base, options.ass_cap);
      return ub_two_new_vars(*base, base_ass);
    });
  } else {
    add(not_applicable("ub_two_new_vars", BoundKind::upper, BoundTarget::ideal,
                       "ideal is not (J, x_a, x_b) with J nonzero", kRefTwoNewVars));
  }

  add(lb_generators(ideal));

  if (blocks.size() >= 2) {
    std::vector<BlockSummary> summaries;
    for (const auto& b : blocks) {
      const auto local = restrict_to_block(b.ideal, b.variables);
      summaries.push_back({b.variables, b.ideal.num_generators(), block_exact_sdepth(local, options)});
    }
    add(lb_disjoint_blocks(summaries, n));
  } else {
    add(not_applicable("lb_disjoint_blocks", BoundKind::lower, BoundTarget::ideal,
                       "no factorization into disjoint variable blocks", kRefBlocks));
  }

  for (auto& b : depth_bound_info(minimal)) add(std::move(b));

  // Counting bound on sqrt(I): for squarefree I this is I itself; otherwise it
  // transfers to I when the minimal primes have disjoint supports.
  if (ideal.is_squarefree() || shapes.disjoint_supports) {
    guarded("counting_ub_generic", BoundKind::upper, BoundTarget::ideal, kRefCounting, [&] {
      return counting_ub_generic(build_ideal_poset(radical(ideal)));
    });
  } else {
    add(not_applicable("counting_ub_generic", BoundKind::upper, BoundTarget::ideal,
                       "non-squarefree ideal with overlapping minimal primes", kRefCounting));
  }

  if (shapes.disjoint) {
    add(shifted(ub_disjoint_three_primes(shapes.disjoint->r, shapes.disjoint->e, shapes.disjoint->q),
                shapes.free_vars));
  }
  if (minimal.size() == 3 && !shapes.disjoint_supports) {
    const char* need_radical = "three overlapping minimal primes but I is not radical";
    if (shapes.circular) {
      if (is_radical) {
        add(shifted(ub_circular_three_primes(*shapes.circular), shapes.free_vars));
      } else {
        add(not_applicable("ub_circular_three_primes", BoundKind::upper, BoundTarget::ideal,
                           need_radical, kRefCircular));
      }
    }
    if (shapes.general) {
      if (is_radical) {
        guarded("ub_overlapping_three_primes", BoundKind::upper, BoundTarget::ideal, kRefOverlapping,
                [&] { return shifted(ub_overlapping_three_primes(*shapes.general), shapes.free_vars); });
      } else {
        add(not_applicable("ub_overlapping_three_primes", BoundKind::upper, BoundTarget::ideal,
                           need_radical, kRefOverlapping));
      }
    }
  }
  if (minimal.size() == 3 && !shapes.chains.empty()) {
    if (is_radical || shapes.disjoint_supports) {
      std::optional<BoundResult> best;
      for (const auto& ch : shapes.chains) {
        auto b = ub_chain_three_primes(ch);
        if (!best || b.raw < best->raw) best = b;
      }
      add(shifted(*best, shapes.free_vars));
    } else {
      add(not_applicable("ub_chain_three_primes", BoundKind::upper, BoundTarget::ideal,
                         "three overlapping minimal primes but I is not radical", kRefChain));
    }
  }
  if (shapes.four) {
    add(shifted(ub_disjoint_four_primes(*shapes.four, options.four_prime_variant), shapes.free_vars));
  }

  // --- quotient side ---
  {
    std::vector<MonomialIdeal> comps;
    for (const auto& b : blocks) comps.push_back(b.ideal);
    guarded("lb_quotient_disjoint_primary", BoundKind::lower, BoundTarget::quotient,
            kRefDisjointPrimary, [&] { return lb_quotient_disjoint_primary(comps); });
  }
  if (shapes.disjoint) {
    add(shifted(ub_quotient_e_q(*shapes.disjoint), shapes.free_vars));
    add(shifted(ub_quotient_improved(*shapes.disjoint), shapes.free_vars));
    if (is_radical) {
      add(shifted(lb_quotient_three(*shapes.disjoint), shapes.free_vars));
      add(shifted(exact_quotient_three(*shapes.disjoint), shapes.free_vars));
    } else {
      const char* why = "three disjoint minimal primes but I is not radical";
      add(not_applicable("lb_quotient_three", BoundKind::lower, BoundTarget::quotient, why, kRefQuotientLower));
      add(not_applicable("exact_quotient_three", BoundKind::exact, BoundTarget::quotient, why, kRefQuotientExact));
    }
  }

  for (BoundTarget target : {BoundTarget::ideal, BoundTarget::quotient}) {
    const auto bracket = best_bracket(out, target);
    if (bracket.lower && bracket.upper && *bracket.lower == *bracket.upper) {
      add(make("derived_exact", BoundKind::exact, target, *bracket.lower,
               "best lower bound equals best upper bound"));
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const BoundResult& a, const BoundResult& b) {
    if (a.target != b.target) return a.target < b.target;
    if (a.kind != b.kind) return kind_order(a.kind) < kind_order(b.kind);
    return a.name < b.name;
  });
  return out;
}

Bracket best_bracket(std::span<const BoundResult> results, BoundTarget target) {
  Bracket out;
  for (const auto& b : results) {
    if (!b.applicable || b.target != target) continue;
    if (b.kind == BoundKind::lower || b.kind == BoundKind::exact) {
      out.lower = out.lower ? std::max(*out.lower, b.effective) : b.effective;
    }
    if (b.kind == BoundKind::upper || b.kind == BoundKind::exact) {
      out.upper = out.upper ? std::min(*out.upper, b.effective) : b.effective;
    }
  }
  return out;
}

}  // namespace sdepth
