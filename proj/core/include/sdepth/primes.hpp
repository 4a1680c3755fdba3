#pragma once

#include <cstdint>
#include <vector>

#include "sdepth/ideal.hpp"

namespace sdepth {

/// A prime P in Ass(S/I) together with a monomial w outside I such that
/// I : w = P.
struct AssWitness {
  PrimeIdeal prime;
  Monomial witness;
};

/// Default cap on the number of candidate witnesses, prod(h_j + 1).
inline constexpr std::uint64_t kDefaultAssSearchCap = 10'000'000;

/// Ass(S/I) by exhaustive search over witnesses w with 0 <= w <= lcm(G(I)).
/// Each prime carries the first witness found in mixed-radix order; primes
/// are returned sorted by variable set.
///
/// Throws InvalidArgument for the zero or unit ideal and ResourceLimit when
/// the witness box exceeds `cap`.
std::vector<AssWitness> ass_primes(const MonomialIdeal& ideal,
                                   std::uint64_t cap = kDefaultAssSearchCap);

/// Min(S/I): inclusion-minimal primes of Ass(S/sqrt(I)).
std::vector<PrimeIdeal> min_primes(const MonomialIdeal& ideal,
                                   std::uint64_t cap = kDefaultAssSearchCap);

}  // namespace sdepth
