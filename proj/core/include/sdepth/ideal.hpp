#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdepth/monomial.hpp"

namespace sdepth {

class PrimeIdeal;

/// A monomial ideal represented by its minimal generating set G(I), kept
/// in decreasing lexicographic order (x1 > x2 > ...). An empty generating set
/// is the zero ideal.
class MonomialIdeal {
 public:
  /// The zero ideal of `ring`.
  explicit MonomialIdeal(Ring ring);

  /// Minimizes `gens` under divisibility. Throws RingMismatch if any
  /// generator lives in a different ring.
  static MonomialIdeal minimize_generators(Ring ring, std::vector<Monomial> gens);

  const Ring& ring() const noexcept { return ring_; }
  std::span<const Monomial> generators() const noexcept { return gens_; }
  std::size_t num_generators() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;
  bool is_squarefree() const noexcept;

  /// Componentwise max exponent over G(I) (the lcm of the generators).
  std::vector<Exponent> lcm_exponents() const;

  bool contains(const Monomial& m) const;

  /// "(x1*x3, x2)" for nonzero ideals, "(0)" for the zero ideal.
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_ == b.ring_ && a.gens_ == b.gens_;
  }

 private:
  Ring ring_;
  std::vector<Monomial> gens_;
};

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// I : w = {u : u*w in I}.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& w);
MonomialIdeal radical(const MonomialIdeal& ideal);
/// Sum of ideals (union of generating sets).
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// A monomial prime ideal (x_i : i in variables).
class PrimeIdeal {
 public:
  /// Throws InvalidArgument on an empty or out-of-range variable set.
  PrimeIdeal(Ring ring, std::vector<std::size_t> variables);

  const Ring& ring() const noexcept { return ring_; }
  /// 1-based, ascending, duplicate free.
  std::span<const std::size_t> variables() const noexcept { return vars_; }
  std::size_t height() const noexcept { return vars_.size(); }
  bool contains_variable(std::size_t var) const;
  /// Inclusion of primes, i.e. of variable sets.
  bool is_subset_of(const PrimeIdeal& other) const;

  MonomialIdeal to_ideal() const;
  std::string to_string() const;

  friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) {
    return a.ring_ == b.ring_ && a.vars_ == b.vars_;
  }
  friend auto operator<=>(const PrimeIdeal& a, const PrimeIdeal& b) {
    return a.vars_ <=> b.vars_;
  }

 private:
  Ring ring_;
  std::vector<std::size_t> vars_;
};

/// The prime if every minimal generator is a single variable.
std::optional<PrimeIdeal> as_prime(const MonomialIdeal& ideal);

/// Intersection of the given primes (as monomial ideals).
MonomialIdeal intersect_primes(std::span<const PrimeIdeal> primes);

}  // namespace sdepth
