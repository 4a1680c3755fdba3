#include "sdepth/ideal.hpp"

#include <algorithm>
#include <functional>

#include "sdepth/error.hpp"

namespace sdepth {

MonomialIdeal::MonomialIdeal(Ring ring) : ring_(ring) {}

MonomialIdeal MonomialIdeal::minimize_generators(Ring ring, std::vector<Monomial> gens) {
  for (const auto& g : gens) require_same_ring(ring, g.ring());
  // Sorting by degree first lets each candidate be checked only against
  // already-kept generators.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  MonomialIdeal out(ring);
  for (auto& g : gens) {
    const bool redundant = std::any_of(out.gens_.begin(), out.gens_.end(),
                                       [&](const Monomial& kept) { return kept.divides(g); });
    if (!redundant) out.gens_.push_back(std::move(g));
  }
  std::sort(out.gens_.begin(), out.gens_.end(), std::greater<>());
  return out;
}

bool MonomialIdeal::is_unit() const noexcept {
  return gens_.size() == 1 && gens_.front().is_unit();
}

bool MonomialIdeal::is_squarefree() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

std::vector<Exponent> MonomialIdeal::lcm_exponents() const {
  std::vector<Exponent> h(ring_.n, 0);
  for (const auto& g : gens_) {
    const auto e = g.exponents();
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = std::max(h[i], e[i]);
  }
  return h;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_same_ring(ring_, m.ring());
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> lcms;
  lcms.reserve(a.num_generators() * b.num_generators());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) lcms.push_back(g.lcm(h));
  }
  return MonomialIdeal::minimize_generators(a.ring(), std::move(lcms));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& w) {
  require_same_ring(ideal.ring(), w.ring());
  std::vector<Monomial> quotients;
  quotients.reserve(ideal.num_generators());
  for (const auto& g : ideal.generators()) quotients.push_back(g.divided_by(g.gcd(w)));
  return MonomialIdeal::minimize_generators(ideal.ring(), std::move(quotients));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InvalidArgument("radical of the zero ideal");
  std::vector<Monomial> supports;
  for (const auto& g : ideal.generators()) supports.push_back(g.radical());
  return MonomialIdeal::minimize_generators(ideal.ring(), std::move(supports));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::minimize_generators(a.ring(), std::move(gens));
}

PrimeIdeal::PrimeIdeal(Ring ring, std::vector<std::size_t> variables)
    : ring_(ring), vars_(std::move(variables)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  if (vars_.empty()) throw InvalidArgument("a monomial prime needs at least one variable");
  if (vars_.front() == 0 || vars_.back() > ring_.n) {
    throw InvalidArgument("prime variable index out of range");
  }
}

bool PrimeIdeal::contains_variable(std::size_t var) const {
  return std::binary_search(vars_.begin(), vars_.end(), var);
}

bool PrimeIdeal::is_subset_of(const PrimeIdeal& other) const {
  require_same_ring(ring_, other.ring_);
  return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
}

MonomialIdeal PrimeIdeal::to_ideal() const {
  std::vector<Monomial> gens;
  for (std::size_t v : vars_) gens.push_back(Monomial::variable(ring_, v));
  return MonomialIdeal::minimize_generators(ring_, std::move(gens));
}

std::string PrimeIdeal::to_string() const { return to_ideal().to_string(); }

std::optional<PrimeIdeal> as_prime(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return std::nullopt;
  std::vector<std::size_t> vars;
  for (const auto& g : ideal.generators()) {
    if (g.degree() != 1) return std::nullopt;
    vars.push_back(g.support().front());
  }
  return PrimeIdeal(ideal.ring(), std::move(vars));
}

MonomialIdeal intersect_primes(std::span<const PrimeIdeal> primes) {
  if (primes.empty()) throw InvalidArgument("empty prime intersection");
  MonomialIdeal out = primes.front().to_ideal();
  for (std::size_t i = 1; i < primes.size(); ++i) out = intersect(out, primes[i].to_ideal());
  return out;
}

}  // namespace sdepth
