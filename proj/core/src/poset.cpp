#include "sdepth/poset.hpp"

#include <algorithm>
#include <numeric>

#include "sdepth/error.hpp"

namespace sdepth {

std::string to_string(PosetKind kind) {
  return kind == PosetKind::ideal ? "ideal" : "quotient";
}

CharacteristicPoset::CharacteristicPoset(Ring ring, std::vector<Exponent> cap, PosetKind kind,
                                         std::uint64_t box_limit)
    : ring_(ring), cap_(std::move(cap)), kind_(kind) {
  if (cap_.size() != ring_.n) throw InvalidArgument("cap length differs from ring size");
  strides_.resize(ring_.n);
  for (std::size_t j = 0; j < ring_.n; ++j) {
    strides_[j] = box_size_;
    const std::uint64_t radix = std::uint64_t{cap_[j]} + 1;
    if (box_size_ > box_limit / radix) {
      throw ResourceLimit("characteristic poset box exceeds limit of " +
                          std::to_string(box_limit) + " points");
    }
    box_size_ *= radix;
  }
}

void CharacteristicPoset::finalize(std::vector<Code> codes) {
  const std::size_t n = ring_.n;
  std::vector<std::vector<Exponent>> decoded;
  decoded.reserve(codes.size());
  for (Code c : codes) decoded.push_back(decode(c));

  std::vector<std::size_t> order(codes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::uint32_t> rank(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i) {
    rank[i] = std::accumulate(decoded[i].begin(), decoded[i].end(), std::uint32_t{0});
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rank[a] != rank[b] ? rank[a] < rank[b] : decoded[a] < decoded[b];
  });

  codes_.resize(codes.size());
  ranks_.resize(codes.size());
  sats_.resize(codes.size());
  elem_exps_.resize(codes.size() * n);
  index_of_.assign(box_size_, kAbsent);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const std::size_t src = order[pos];
    codes_[pos] = codes[src];
    ranks_[pos] = rank[src];
    std::uint32_t sat = 0;
    for (std::size_t j = 0; j < n; ++j) {
      elem_exps_[pos * n + j] = decoded[src][j];
      if (decoded[src][j] == cap_[j]) ++sat;
    }
    sats_[pos] = sat;
    index_of_[codes[src]] = static_cast<std::int32_t>(pos);
  }
}

CharacteristicPoset CharacteristicPoset::from_elements(
    Ring ring, std::vector<Exponent> cap, PosetKind kind,
    const std::vector<std::vector<Exponent>>& elements, std::uint64_t box_limit) {
  CharacteristicPoset p(ring, std::move(cap), kind, box_limit);
  std::vector<char> present(p.box_size_, 0);
  std::vector<Code> codes;
  for (const auto& e : elements) {
    if (e.size() != ring.n) throw InvalidArgument("element length differs from ring size");
    for (std::size_t j = 0; j < ring.n; ++j) {
      if (e[j] > p.cap_[j]) throw InvalidArgument("element outside the cap box");
    }
    const Code c = p.encode(e);
    if (!present[c]) codes.push_back(c);
    present[c] = 1;
  }
  // Closure: every covering neighbour inside the box must be present.
  for (Code c : codes) {
    const auto e = p.decode(c);
    for (std::size_t j = 0; j < ring.n; ++j) {
      if (kind == PosetKind::ideal && e[j] < p.cap_[j] && !present[c + p.strides_[j]]) {
        throw InvalidArgument("ideal-side element set is not upward closed");
      }
      if (kind == PosetKind::quotient && e[j] > 0 && !present[c - p.strides_[j]]) {
        throw InvalidArgument("quotient-side element set is not downward closed");
      }
    }
  }
  p.finalize(std::move(codes));
  return p;
}

CharacteristicPoset CharacteristicPoset::of(const MonomialIdeal& ideal,
                                            std::optional<std::vector<Exponent>> cap,
                                            PosetKind kind, std::uint64_t box_limit) {
  if (ideal.is_zero()) throw InvalidArgument("characteristic poset of the zero ideal");
  if (kind == PosetKind::quotient && ideal.is_unit()) {
    throw InvalidArgument("quotient poset of the unit ideal is empty");
  }
  const auto lcm = ideal.lcm_exponents();
  std::vector<Exponent> h = cap.value_or(lcm);
  if (h.size() != ideal.ring().n) throw InvalidArgument("cap length differs from ring size");
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (h[j] < lcm[j]) {
      throw InvalidArgument("cap too small: h_" + std::to_string(j + 1) + " = " +
                            std::to_string(h[j]) + " below generator exponent " +
                            std::to_string(lcm[j]));
    }
  }

  CharacteristicPoset p(ideal.ring(), std::move(h), kind, box_limit);
  const std::size_t n = ideal.ring().n;

  // member[c] for the upward closure of the generators, swept in code order
  // so that c - e_j is always decided before c.
  std::vector<char> member(p.box_size_, 0);
  for (const auto& g : ideal.generators()) member[p.encode(g.exponents())] = 1;
  std::vector<Exponent> e(n, 0);
  std::vector<Code> codes;
  for (Code c = 0; c < p.box_size_; ++c) {
    if (c > 0) {
      for (std::size_t j = 0; j < n; ++j) {
        if (e[j] < p.cap_[j]) {
          ++e[j];
          break;
        }
        e[j] = 0;
      }
    }
    if (!member[c]) {
      for (std::size_t j = 0; j < n && !member[c]; ++j) {
        if (e[j] > 0 && member[c - p.strides_[j]]) member[c] = 1;
      }
    }
    if ((member[c] != 0) == (kind == PosetKind::ideal)) codes.push_back(c);
  }
  p.finalize(std::move(codes));
  return p;
}

bool CharacteristicPoset::squarefree_cap() const noexcept {
  return std::all_of(cap_.begin(), cap_.end(), [](Exponent e) { return e <= 1; });
}

CharacteristicPoset::Code CharacteristicPoset::encode(std::span<const Exponent> exps) const {
  Code c = 0;
  for (std::size_t j = 0; j < ring_.n; ++j) c += Code{exps[j]} * strides_[j];
  return c;
}

std::vector<Exponent> CharacteristicPoset::decode(Code code) const {
  std::vector<Exponent> out(ring_.n);
  for (std::size_t j = 0; j < ring_.n; ++j) {
    const Code radix = Code{cap_[j]} + 1;
    out[j] = static_cast<Exponent>(code % radix);
    code /= radix;
  }
  return out;
}

std::optional<std::size_t> CharacteristicPoset::find(std::span<const Exponent> exps) const {
  if (exps.size() != ring_.n) return std::nullopt;
  for (std::size_t j = 0; j < ring_.n; ++j) {
    if (exps[j] > cap_[j]) return std::nullopt;
  }
  const std::int32_t idx = index_of_[encode(exps)];
  if (idx == kAbsent) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

std::map<std::size_t, std::size_t> CharacteristicPoset::rank_counts() const {
  std::map<std::size_t, std::size_t> out;
  for (auto r : ranks_) ++out[r];
  return out;
}

std::vector<std::size_t> CharacteristicPoset::top_saturated_set(
    std::span<const Exponent> top) const {
  if (!contains(top)) throw InvalidArgument("interval top is not an element of the poset");
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < ring_.n; ++j) {
    if (top[j] == cap_[j]) out.push_back(j + 1);
  }
  return out;
}

void CharacteristicPoset::write(std::ostream& out) const {
  out << "h=";
  for (std::size_t j = 0; j < ring_.n; ++j) out << (j ? "," : "") << cap_[j];
  out << " kind=" << to_string(kind_) << '\n';
  for (std::size_t i = 0; i < size(); ++i) {
    const auto e = exponents(i);
    for (std::size_t j = 0; j < e.size(); ++j) out << (j ? "," : "") << e[j];
    out << '\n';
  }
}

CharacteristicPoset build_ideal_poset(const MonomialIdeal& ideal,
                                      std::optional<std::vector<Exponent>> cap,
                                      std::uint64_t box_limit) {
  return CharacteristicPoset::of(ideal, std::move(cap), PosetKind::ideal, box_limit);
}

CharacteristicPoset build_quotient_poset(const MonomialIdeal& ideal,
                                         std::optional<std::vector<Exponent>> cap,
                                         std::uint64_t box_limit) {
  return CharacteristicPoset::of(ideal, std::move(cap), PosetKind::quotient, box_limit);
}

}  // namespace sdepth
