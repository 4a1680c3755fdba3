#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdepth/ideal.hpp"
#include "sdepth/poset.hpp"
#include "sdepth/primes.hpp"
#include "sdepth/rational.hpp"

namespace sdepth {

enum class BoundKind { upper, lower, exact, info };
enum class BoundTarget { ideal, quotient };

std::string to_string(BoundKind kind);
std::string to_string(BoundTarget target);

/// One evaluated catalog entry. `effective` is the sharp integer consequence
/// of `raw`: floor for upper bounds, ceiling for lower bounds. Inapplicable
/// entries carry a reason and no meaningful value.
struct BoundResult {
  std::string name;
  BoundKind kind = BoundKind::info;
  BoundTarget target = BoundTarget::ideal;
  Rational raw;
  std::int64_t effective = 0;
  bool applicable = false;
  std::string reason;
  /// Human-readable statement of the result this entry evaluates.
  std::string paper_ref;
};

/// C(a, b), zero when a < b.
std::int64_t binomial(std::int64_t a, std::int64_t b);

// ---------------------------------------------------------------------------
// Shapes of intersections of three or four monomial primes.

/// P1, P2, P3 on pairwise disjoint variable blocks of sizes r <= e <= q.
struct DisjointShape {
  std::size_t r = 0, e = 0, q = 0;
  void validate() const;
  friend bool operator==(const DisjointShape&, const DisjointShape&) = default;
};

/// P1 = (x_1..x_t), P2 = (x_{u+1}..x_n), P3 = (x_{t+1}..x_n, x_1..x_u) with
/// 0 < u < t < n: every variable lies in exactly two of the primes.
struct CircularShape {
  std::size_t n = 0, t = 0, u = 0;
  void validate() const;
  friend bool operator==(const CircularShape&, const CircularShape&) = default;
};

/// P1 = (x_1..x_t), P2 = (x_{s+1}..x_r), P3 = (x_{q+1}..x_n, x_1..x_u) with
/// 0 < u <= s <= t <= q <= r <= n.
struct GeneralShape {
  std::size_t n = 0, t = 0, s = 0, u = 0, q = 0, r = 0;
  void validate() const;
  /// Number of variables lying in exactly one prime: s-u + q-t + n-r.
  std::size_t single_count() const { return s - u + q - t + n - r; }
  friend bool operator==(const GeneralShape&, const GeneralShape&) = default;
};

/// P1 = (x_1..x_t), P2 = (x_{s+1}..x_r), P3 = (x_{q+1}..x_n): three
/// pairwise non-nested runs of consecutive variables covering all n.
struct ChainShape {
  std::size_t n = 0, t = 0, s = 0, r = 0, q = 0;
  void validate() const;
  friend bool operator==(const ChainShape&, const ChainShape&) = default;
};

/// Four primes on disjoint blocks with heights d1 >= d2 >= d3 >= d4.
struct FourPrimeShape {
  std::array<std::size_t, 4> d{};
  void validate() const;
  std::size_t n() const { return d[0] + d[1] + d[2] + d[3]; }
  friend bool operator==(const FourPrimeShape&, const FourPrimeShape&) = default;
};

/// Which reading of the four-prime counting bound to evaluate.
enum class FourPrimeVariant {
  /// d + (three-prime counting bound in the n - d variables of P1 + P2 + P3).
  reduced,
  /// The expression with (n - d_i) factors taken over the full n variables.
  printed,
};

// ---------------------------------------------------------------------------
// Catalog.

/// Stanley depth of a height-d monomial prime in n variables: n - floor(d/2).
std::size_t sdepth_prime(std::size_t n, std::size_t d);

/// min over P in Ass(S/I) of sdepth_prime(n, height P).
BoundResult ub_assoc_primes(const MonomialIdeal& ideal, std::span<const AssWitness> ass);
/// Computes Ass itself; ResourceLimit propagates.
BoundResult ub_assoc_primes(const MonomialIdeal& ideal, std::uint64_t ass_cap = kDefaultAssSearchCap);

/// Exact n - floor(m/2) when some associated prime is tall enough relative
/// to m = |G(I)|.
BoundResult exact_from_tall_prime(const MonomialIdeal& ideal, std::span<const AssWitness> ass);

/// Upper bound for (I, x_{n+1}, x_{n+2}) in n + 2 variables, given I in n
/// variables and Ass(S/I).
BoundResult ub_two_new_vars(const MonomialIdeal& base, std::span<const AssWitness> base_ass);

/// n - floor(m/2) with m = |G(I)|.
BoundResult lb_generators(const MonomialIdeal& ideal);

/// Per-block data for the disjoint-block lower bound.
struct BlockSummary {
  std::vector<std::size_t> variables;  ///< 1-based, in the ambient ring
  std::size_t num_generators = 0;
  std::optional<std::size_t> exact_sdepth;
};

/// Sum over blocks of exact sdepth (when known) or |Z_i| - floor(m_i/2).
/// Ambient variables outside every block each add one. Throws
/// InvalidArgument when blocks overlap or leave the ring.
BoundResult lb_disjoint_blocks(std::span<const BlockSummary> blocks, std::size_t n);

/// |Ass| when the associated primes have pairwise disjoint supports.
BoundResult lb_ideal_disjoint_ass(std::span<const AssWitness> ass);

/// m - 1 for I = Q_1 cap ... cap Q_m, the Q_i primary with radicals on
/// pairwise disjoint variables. Throws InvalidArgument when a component is not
/// primary or radicals share variables.
BoundResult lb_quotient_disjoint_primary(std::span<const MonomialIdeal> components);

/// Informational depth bounds (s for I, s - 1 for S/I) from s minimal primes,
/// none contained in the sum of the others. Two records: ideal then quotient.
std::vector<BoundResult> depth_bound_info(std::span<const PrimeIdeal> minimal);

BoundResult ub_quotient_e_q(const DisjointShape& shape);
BoundResult ub_quotient_improved(const DisjointShape& shape);
BoundResult lb_quotient_three(const DisjointShape& shape);
BoundResult exact_quotient_three(const DisjointShape& shape);

/// g' + floor(N_{g+1} / N_g) on a squarefree ideal-side poset whose minimal
/// elements all have rank g (g' is their saturation).
BoundResult counting_ub_generic(const CharacteristicPoset& poset);

BoundResult ub_circular_three_primes(const CircularShape& shape);
BoundResult ub_overlapping_three_primes(const GeneralShape& shape);
BoundResult ub_disjoint_three_primes(std::size_t d1, std::size_t d2, std::size_t d3);
BoundResult ub_chain_three_primes(const ChainShape& shape);
BoundResult ub_disjoint_four_primes(const FourPrimeShape& shape,
                                    FourPrimeVariant variant = FourPrimeVariant::reduced);

// ---------------------------------------------------------------------------
// Shape detection and aggregation.

/// Primes realizing a shape, in the ring of `n` variables.
std::vector<PrimeIdeal> primes_of(const DisjointShape& shape, std::size_t extra_vars = 0);
std::vector<PrimeIdeal> primes_of(const CircularShape& shape);
std::vector<PrimeIdeal> primes_of(const GeneralShape& shape);
std::vector<PrimeIdeal> primes_of(const ChainShape& shape);

/// Shapes matched by three or four minimal primes up to relabeling of
/// variables. `free_vars` counts ring variables outside every prime.
struct DetectedShapes {
  std::size_t free_vars = 0;
  bool disjoint_supports = false;
  std::optional<DisjointShape> disjoint;
  std::optional<CircularShape> circular;
  std::optional<GeneralShape> general;
  std::vector<ChainShape> chains;
  std::optional<FourPrimeShape> four;
};

DetectedShapes detect_shapes(std::span<const PrimeIdeal> minimal);

/// A factor of I living on its own variable block.
struct IdealBlock {
  std::vector<std::size_t> variables;  ///< 1-based, ambient ring
  MonomialIdeal ideal;                 ///< in the ambient ring
};

/// Splits I into ideals on pairwise disjoint variable blocks whose
/// intersection is I. Candidate blocks come from `components` when given
/// (grouped by shared variables), otherwise from the minimal primes. Returns
/// a single block when no finer factorization verifies.
std::vector<IdealBlock> factor_disjoint_blocks(const MonomialIdeal& ideal,
                                               std::span<const MonomialIdeal> components,
                                               std::span<const PrimeIdeal> minimal);

/// `ideal` restricted to `variables`, re-indexed into a ring of that size.
MonomialIdeal restrict_to_block(const MonomialIdeal& ideal, std::span<const std::size_t> variables);

struct ReportOptions {
  /// Intersection terms as written by the user; used for block detection.
  std::vector<MonomialIdeal> components;
  FourPrimeVariant four_prime_variant = FourPrimeVariant::reduced;
  std::uint64_t ass_cap = kDefaultAssSearchCap;
  /// Compute exact per-block sdepth for the block lower bound when the block
  /// poset has at most this many box points (0 disables).
  std::uint64_t exact_block_box_limit = 4096;
  std::uint64_t exact_block_node_budget = 1'000'000;
};

/// Evaluates every catalog entry whose hypotheses can be checked on I,
/// sorted by target, kind, name. When the best lower and upper bound for a
/// target agree, a `derived_exact` record is appended for it.
std::vector<BoundResult> report_all(const MonomialIdeal& ideal, const ReportOptions& options = {});

/// Best applicable (lower, upper) effective values for `target`, if any.
struct Bracket {
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;
};
Bracket best_bracket(std::span<const BoundResult> results, BoundTarget target);

}  // namespace sdepth
