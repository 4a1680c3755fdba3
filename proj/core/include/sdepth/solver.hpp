#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "sdepth/ideal.hpp"
#include "sdepth/poset.hpp"

namespace sdepth {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SolverOptions {
  /// Total search nodes allowed across all decision calls of one solve.
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Parallel workers for the decision search. The value found never
  /// depends on this; the witness is reproducible only with one worker.
  unsigned workers = 1;
  std::uint64_t box_limit = kDefaultBoxLimit;
  /// Upper bound on remembered failed search states per decision call.
  std::size_t memo_limit = 1u << 21;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  std::uint64_t memo_hits = 0;
  double ms = 0.0;
};

struct SdepthResult {
  PosetKind target = PosetKind::ideal;
  std::size_t value = 0;
  IntervalPartition witness;
  SearchStats stats;
};

/// An interval partition of `poset` in which every interval top has at least
/// `k` saturated coordinates, or nullopt if none exists. Throws ResourceLimit
/// when the node budget runs out.
std::optional<IntervalPartition> decide_at_least(const CharacteristicPoset& poset, std::size_t k,
                                                 const SolverOptions& options = {},
                                                 SearchStats* stats = nullptr);

/// Largest k for which decide_at_least succeeds, with the failure at k + 1
/// confirmed. `upper_hint` is where the search starts and `lower_hint` the
/// floor it expects to reach; neither is trusted for correctness.
SdepthResult sdepth_exact(const CharacteristicPoset& poset, std::size_t lower_hint,
                          std::size_t upper_hint, const SolverOptions& options = {});

/// sdepth(I) for a nonzero proper monomial ideal.
SdepthResult sdepth_exact_ideal(const MonomialIdeal& ideal, const SolverOptions& options = {});

/// sdepth(S/I) for a nonzero proper monomial ideal.
SdepthResult sdepth_exact_quotient(const MonomialIdeal& ideal, const SolverOptions& options = {});

/// True iff `partition` covers `poset` exactly with disjoint intervals lying
/// in the poset, each topped by an element with at least `k` saturated
/// coordinates.
bool verify_partition(const CharacteristicPoset& poset, const IntervalPartition& partition,
                      std::size_t k);

/// min over intervals of the top's saturation; the Stanley depth of the
/// decomposition the partition induces.
std::size_t partition_sdepth(const CharacteristicPoset& poset, const IntervalPartition& partition);

inline constexpr std::size_t kOracleMaxElements = 64;

/// Reference value computed by exhausting every interval partition of the
/// poset. Throws InvalidArgument above kOracleMaxElements elements.
std::size_t oracle_sdepth(const CharacteristicPoset& poset);

}  // namespace sdepth
