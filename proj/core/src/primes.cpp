#include "sdepth/primes.hpp"

#include <algorithm>
#include <map>

#include "sdepth/error.hpp"

namespace sdepth {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_zero()) throw InvalidArgument(std::string(what) + " of the zero ideal");
  if (ideal.is_unit()) throw InvalidArgument(std::string(what) + " of the unit ideal");
}

// Minimal transversals of the generator supports of a squarefree ideal,
// i.e. its minimal primes. Sets are bitmasks over variables 0..n-1.
std::vector<std::uint64_t> minimal_transversals(const MonomialIdeal& squarefree) {
  std::vector<std::uint64_t> current{0};
  for (const auto& g : squarefree.generators()) {
    std::uint64_t edge = 0;
    for (std::size_t v : g.support()) edge |= std::uint64_t{1} << (v - 1);

    std::vector<std::uint64_t> next;
    for (std::uint64_t t : current) {
      if (t & edge) {
        next.push_back(t);
        continue;
      }
      for (std::uint64_t rest = edge; rest != 0; rest &= rest - 1) {
        next.push_back(t | (rest & (~rest + 1)));
      }
    }
    std::sort(next.begin(), next.end(), [](std::uint64_t a, std::uint64_t b) {
      const int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
      return pa != pb ? pa < pb : a < b;
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current.clear();
    for (std::uint64_t t : next) {
      const bool dominated = std::any_of(current.begin(), current.end(),
                                         [&](std::uint64_t kept) { return (kept & t) == kept; });
      if (!dominated) current.push_back(t);
    }
  }
  return current;
}

}  // namespace

std::vector<AssWitness> ass_primes(const MonomialIdeal& ideal, std::uint64_t cap) {
  require_proper_nonzero(ideal, "associated primes");
  const std::size_t n = ideal.ring().n;
  const auto h = ideal.lcm_exponents();

  std::uint64_t box = 1;
  for (Exponent e : h) {
    if (box > cap / (std::uint64_t{e} + 1)) {
      throw ResourceLimit("too large for exact Ass enumeration (witness box exceeds " +
                          std::to_string(cap) + ")");
    }
    box *= std::uint64_t{e} + 1;
  }

  // Flattened generator exponents for the hot loop.
  const std::size_t m = ideal.num_generators();
  std::vector<Exponent> gens(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    const auto e = ideal.generators()[i].exponents();
    std::copy(e.begin(), e.end(), gens.begin() + static_cast<std::ptrdiff_t>(i * n));
  }

  std::map<std::vector<std::size_t>, Monomial> found;
  std::vector<Exponent> w(n, 0);
  std::vector<std::size_t> excess_var(m);
  std::vector<std::size_t> excess_deg(m);
  std::vector<char> in_prime(n);

  for (std::uint64_t idx = 0; idx < box; ++idx) {
    if (idx > 0) {
      for (std::size_t j = 0; j < n; ++j) {
        if (w[j] < h[j]) {
          ++w[j];
          break;
        }
        w[j] = 0;
      }
    }
    // For each generator g, deg(g / gcd(g, w)) and, when that degree is 1,
    // the variable it is.
    bool member = false;
    std::fill(in_prime.begin(), in_prime.end(), 0);
    for (std::size_t i = 0; i < m && !member; ++i) {
      const Exponent* g = &gens[i * n];
      std::size_t deg = 0, var = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (g[j] > w[j]) {
          deg += g[j] - w[j];
          var = j;
        }
      }
      excess_deg[i] = deg;
      excess_var[i] = var;
      if (deg == 0) member = true;
      if (deg == 1) in_prime[var] = 1;
    }
    if (member) continue;

    // I : w is the prime generated by the degree-one quotients iff every
    // other quotient is a multiple of one of them.
    bool prime = true;
    for (std::size_t i = 0; i < m && prime; ++i) {
      if (excess_deg[i] == 1) continue;
      const Exponent* g = &gens[i * n];
      bool covered = false;
      for (std::size_t j = 0; j < n && !covered; ++j) covered = in_prime[j] && g[j] > w[j];
      prime = covered;
    }
    if (!prime) continue;

    std::vector<std::size_t> vars;
    for (std::size_t j = 0; j < n; ++j) {
      if (in_prime[j]) vars.push_back(j + 1);
    }
    if (!found.contains(vars)) found.emplace(std::move(vars), Monomial(ideal.ring(), w));
  }

  std::vector<AssWitness> out;
  out.reserve(found.size());
  for (auto& [vars, witness] : found) {
    out.push_back({PrimeIdeal(ideal.ring(), vars), witness});
  }
  return out;
}

std::vector<PrimeIdeal> min_primes(const MonomialIdeal& ideal, std::uint64_t cap) {
  require_proper_nonzero(ideal, "minimal primes");
  const MonomialIdeal rad = radical(ideal);
  std::vector<PrimeIdeal> out;

  if (ideal.ring().n <= 64) {
    // Ass of a squarefree ideal is its set of minimal transversals.
    for (std::uint64_t t : minimal_transversals(rad)) {
      std::vector<std::size_t> vars;
      for (std::size_t j = 0; j < 64; ++j) {
        if (t >> j & 1) vars.push_back(j + 1);
      }
      out.emplace_back(ideal.ring(), std::move(vars));
    }
  } else {
    std::vector<PrimeIdeal> ass;
    for (auto& aw : ass_primes(rad, cap)) ass.push_back(aw.prime);
    for (const auto& p : ass) {
      const bool minimal = std::none_of(ass.begin(), ass.end(), [&](const PrimeIdeal& q) {
        return q != p && q.is_subset_of(p);
      });
      if (minimal) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sdepth
