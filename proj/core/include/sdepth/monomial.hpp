#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sdepth {

using Exponent = std::uint32_t;

/// Polynomial ring K[x_1, ..., x_n]. Only the variable count matters; the
/// coefficient field never enters any computation.
struct Ring {
  std::size_t n = 0;

  explicit Ring(std::size_t vars);
  friend bool operator==(const Ring&, const Ring&) = default;
};

void require_same_ring(const Ring& a, const Ring& b);

/// A monomial x^c stored as its exponent vector. Variables are 1-based in the
/// public API (`exponent(1)` is the power of x_1).
class Monomial {
 public:
  /// The unit monomial 1.
  explicit Monomial(Ring ring);
  Monomial(Ring ring, std::vector<Exponent> exponents);
  Monomial(Ring ring, std::initializer_list<Exponent> exponents);

  /// x_var^power in `ring`.
  static Monomial variable(Ring ring, std::size_t var, Exponent power = 1);
  /// Squarefree monomial prod_{v in vars} x_v.
  static Monomial from_support(Ring ring, std::span<const std::size_t> vars);

  const Ring& ring() const noexcept { return ring_; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  Exponent exponent(std::size_t var) const;

  std::size_t degree() const noexcept;
  bool is_unit() const noexcept;
  bool is_squarefree() const noexcept;
  /// Indices of variables with positive exponent, ascending.
  std::vector<std::size_t> support() const;

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// this / other; requires other | this.
  Monomial divided_by(const Monomial& other) const;
  /// Every positive exponent clamped to 1.
  Monomial radical() const;

  /// Canonical text: `x1^2*x3`, or `1` for the unit.
  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  /// Lexicographic on the exponent vector.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  Ring ring_;
  std::vector<Exponent> exps_;
};

}  // namespace sdepth
