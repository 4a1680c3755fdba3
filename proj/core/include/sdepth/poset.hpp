#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "sdepth/ideal.hpp"

namespace sdepth {

enum class PosetKind { ideal, quotient };

std::string to_string(PosetKind kind);

/// Closed box [bottom, top] of exponent vectors.
struct Interval {
  std::vector<Exponent> bottom;
  std::vector<Exponent> top;

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalPartition {
  std::vector<Interval> intervals;

  friend bool operator==(const IntervalPartition&, const IntervalPartition&) = default;
};

/// Default limit on the number of box points scanned while building a poset.
inline constexpr std::uint64_t kDefaultBoxLimit = std::uint64_t{1} << 24;

/// The characteristic poset of I (or S/I) with respect to a cap h: the
/// exponent vectors c with 0 <= c <= h whose monomial lies in I (ideal side)
/// or outside I (quotient side), ordered componentwise.
///
/// Box points are encoded as mixed-radix integers with radices h_j + 1; for a
/// squarefree cap this is a bitmask over the capped coordinates. Elements are
/// indexed 0..size()-1 in ascending (rank, lexicographic) order, which is a
/// linear extension of the partial order.
class CharacteristicPoset {
 public:
  using Code = std::uint64_t;
  static constexpr std::int32_t kAbsent = -1;

  /// Explicit construction from an element list. Throws InvalidArgument if an
  /// element leaves the box or the set is not upward (ideal) or downward
  /// (quotient) closed within the box.
  static CharacteristicPoset from_elements(Ring ring, std::vector<Exponent> cap, PosetKind kind,
                                           const std::vector<std::vector<Exponent>>& elements,
                                           std::uint64_t box_limit = kDefaultBoxLimit);

  /// Poset of `ideal` on the given side; see build_ideal_poset and
  /// build_quotient_poset.
  static CharacteristicPoset of(const MonomialIdeal& ideal, std::optional<std::vector<Exponent>> cap,
                                PosetKind kind, std::uint64_t box_limit);

  const Ring& ring() const noexcept { return ring_; }
  std::span<const Exponent> cap() const noexcept { return cap_; }
  PosetKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return codes_.size(); }
  bool empty() const noexcept { return codes_.empty(); }
  std::uint64_t box_size() const noexcept { return box_size_; }
  /// True when every cap entry is 0 or 1.
  bool squarefree_cap() const noexcept;

  std::span<const Exponent> exponents(std::size_t index) const noexcept {
    return {elem_exps_.data() + index * ring_.n, ring_.n};
  }
  Code code(std::size_t index) const noexcept { return codes_[index]; }
  std::size_t rank(std::size_t index) const noexcept { return ranks_[index]; }
  /// |{j : c_j = h_j}| for element `index`.
  std::size_t saturation(std::size_t index) const noexcept { return sats_[index]; }

  std::span<const Code> strides() const noexcept { return strides_; }
  Code encode(std::span<const Exponent> exps) const;
  std::vector<Exponent> decode(Code code) const;
  /// Element index of a box point, or kAbsent.
  std::int32_t index_of_code(Code code) const noexcept { return index_of_[code]; }
  std::optional<std::size_t> find(std::span<const Exponent> exps) const;
  bool contains(std::span<const Exponent> exps) const { return find(exps).has_value(); }

  /// Number of elements per rank (coordinate sum). Only occurring ranks.
  std::map<std::size_t, std::size_t> rank_counts() const;

  /// Coordinates (1-based) where `top` reaches the cap. Throws InvalidArgument
  /// if `top` is not an element.
  std::vector<std::size_t> top_saturated_set(std::span<const Exponent> top) const;

  /// Line-oriented export: header `h=<csv> kind=<ideal|quotient>`, then one
  /// element per line as comma-separated exponents, in element order.
  void write(std::ostream& out) const;

 private:
  CharacteristicPoset(Ring ring, std::vector<Exponent> cap, PosetKind kind, std::uint64_t box_limit);
  void finalize(std::vector<Code> codes);

  Ring ring_;
  std::vector<Exponent> cap_;
  PosetKind kind_;
  std::vector<Code> strides_;
  std::uint64_t box_size_ = 1;

  std::vector<Code> codes_;
  std::vector<Exponent> elem_exps_;
  std::vector<std::uint32_t> ranks_;
  std::vector<std::uint32_t> sats_;
  std::vector<std::int32_t> index_of_;
};

/// Elements c in the h-box with x^c in I. Default cap is lcm(G(I)).
/// Throws InvalidArgument for the zero ideal or a cap below some generator
/// exponent, ResourceLimit when the box exceeds `box_limit`.
CharacteristicPoset build_ideal_poset(const MonomialIdeal& ideal,
                                      std::optional<std::vector<Exponent>> cap = std::nullopt,
                                      std::uint64_t box_limit = kDefaultBoxLimit);

/// Elements c in the h-box with x^c not in I. Also rejects the unit ideal,
/// whose quotient poset is empty.
CharacteristicPoset build_quotient_poset(const MonomialIdeal& ideal,
                                         std::optional<std::vector<Exponent>> cap = std::nullopt,
                                         std::uint64_t box_limit = kDefaultBoxLimit);

}  // namespace sdepth
