#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdepth/ideal.hpp"

namespace sdepth {

/// A parsed ideal expression: an intersection of generator lists.
struct IdealExpression {
  /// Each term lists monomials as exponent vectors over `n` variables.
  std::vector<std::vector<std::vector<Exponent>>> terms;
  std::size_t n = 0;

  Ring ring() const { return Ring(n); }
  /// The ideal of each term, in the expression's ring.
  std::vector<MonomialIdeal> term_ideals() const;
  /// Intersection of all terms.
  MonomialIdeal to_ideal() const;
  /// Canonical text; parsing it again yields an equal expression.
  std::string to_string() const;

  friend bool operator==(const IdealExpression&, const IdealExpression&) = default;
};

/// Parses
///
///   expr     := term ('&' term)*
///   term     := '(' monomial (',' monomial)* ')'
///   monomial := factor ('*' factor)* | '1'
///   factor   := 'x' INT ('^' INT)?
///
/// ignoring whitespace. The UTF-8 sign for intersection is accepted in place
/// of '&'. The variable count is the largest index seen, or `vars` when
/// given; a smaller `vars` is an error. Throws ParseError with the byte
/// offset of the failure.
IdealExpression parse_ideal(std::string_view text, std::optional<std::size_t> vars = std::nullopt);

}  // namespace sdepth
