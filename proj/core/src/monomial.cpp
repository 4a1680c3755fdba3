#include "sdepth/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "sdepth/error.hpp"

namespace sdepth {

Ring::Ring(std::size_t vars) : n(vars) {
  if (vars == 0) throw InvalidArgument("a ring needs at least one variable");
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (a != b) {
    throw RingMismatch("ring mismatch: " + std::to_string(a.n) + " vs " +
                       std::to_string(b.n) + " variables");
  }
}

Monomial::Monomial(Ring ring) : ring_(ring), exps_(ring.n, 0) {}

Monomial::Monomial(Ring ring, std::vector<Exponent> exponents)
    : ring_(ring), exps_(std::move(exponents)) {
  if (exps_.size() != ring_.n) {
    throw InvalidArgument("exponent vector has length " + std::to_string(exps_.size()) +
                          ", ring has " + std::to_string(ring_.n) + " variables");
  }
}

Monomial::Monomial(Ring ring, std::initializer_list<Exponent> exponents)
    : Monomial(ring, std::vector<Exponent>(exponents)) {}

Monomial Monomial::variable(Ring ring, std::size_t var, Exponent power) {
  if (var == 0 || var > ring.n) {
    throw InvalidArgument("variable index " + std::to_string(var) + " out of range");
  }
  Monomial m(ring);
  m.exps_[var - 1] = power;
  return m;
}

Monomial Monomial::from_support(Ring ring, std::span<const std::size_t> vars) {
  Monomial m(ring);
  for (std::size_t v : vars) {
    if (v == 0 || v > ring.n) {
      throw InvalidArgument("variable index " + std::to_string(v) + " out of range");
    }
    m.exps_[v - 1] = 1;
  }
  return m;
}

Exponent Monomial::exponent(std::size_t var) const {
  if (var == 0 || var > ring_.n) {
    throw InvalidArgument("variable index " + std::to_string(var) + " out of range");
  }
  return exps_[var - 1];
}

std::size_t Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::size_t{0});
}

bool Monomial::is_unit() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) out.push_back(i + 1);
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ring(ring_, other.ring_);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_ring(ring_, other.ring_);
  Monomial out(ring_);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    out.exps_[i] = std::max(exps_[i], other.exps_[i]);
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  require_same_ring(ring_, other.ring_);
  Monomial out(ring_);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    out.exps_[i] = std::min(exps_[i], other.exps_[i]);
  }
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_ring(ring_, other.ring_);
  Monomial out(ring_);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = exps_[i] + other.exps_[i];
  return out;
}

Monomial Monomial::divided_by(const Monomial& other) const {
  if (!other.divides(*this)) {
    throw InvalidArgument(other.to_string() + " does not divide " + to_string());
  }
  Monomial out(ring_);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = exps_[i] - other.exps_[i];
  return out;
}

Monomial Monomial::radical() const {
  Monomial out(ring_);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = exps_[i] > 0 ? 1 : 0;
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (exps_[i] > 1) {
      out += '^';
      out += std::to_string(exps_[i]);
    }
  }
  return out.empty() ? "1" : out;
}

}  // namespace sdepth
