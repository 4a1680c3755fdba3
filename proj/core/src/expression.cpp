#include "sdepth/expression.hpp"

#include <charconv>
#include <limits>

#include "sdepth/error.hpp"

namespace sdepth {

namespace {

constexpr std::string_view kCap = "\xE2\x88\xA9";  // U+2229

using Factors = std::vector<std::pair<std::size_t, Exponent>>;
using RawTerm = std::vector<Factors>;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> out;
    out.push_back(term());
    while (true) {
      skip_space();
      if (at_end()) break;
      if (peek() == '&') {
        ++pos_;
      } else if (text_.substr(pos_).starts_with(kCap)) {
        pos_ += kCap.size();
      } else {
        fail("expected '&' or end of input");
      }
      out.push_back(term());
    }
    return out;
  }

  std::size_t max_var() const { return max_var_; }

 private:
  RawTerm term() {
    expect('(');
    RawTerm monos;
    monos.push_back(monomial());
    while (true) {
      skip_space();
      if (!at_end() && peek() == ',') {
        ++pos_;
        monos.push_back(monomial());
        continue;
      }
      expect(')');
      break;
    }
    return monos;
  }

  Factors monomial() {
    skip_space();
    Factors out;
    if (!at_end() && peek() == '1') {
      const std::size_t start = pos_;
      if (number(std::numeric_limits<std::uint64_t>::max()) != 1) {
        pos_ = start;
        fail("expected a variable or '1'");
      }
      return out;
    }
    out.push_back(factor());
    while (true) {
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
      out.push_back(factor());
    }
    return out;
  }

  std::pair<std::size_t, Exponent> factor() {
    skip_space();
    if (at_end() || peek() != 'x') fail("expected 'x'");
    ++pos_;
    const std::size_t at = pos_;
    const auto index = number(std::numeric_limits<std::uint32_t>::max());
    if (index == 0) {
      pos_ = at;
      fail("variable index must be positive");
    }
    Exponent power = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t at_power = pos_;
      power = static_cast<Exponent>(number(std::numeric_limits<Exponent>::max()));
      if (power == 0) {
        pos_ = at_power;
        fail("exponent must be positive");
      }
    }
    max_var_ = std::max<std::size_t>(max_var_, index);
    return {static_cast<std::size_t>(index), power};
  }

  std::uint64_t number(std::uint64_t limit) {
    skip_space();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ptr == first) fail("expected a number");
    if (ec == std::errc::result_out_of_range || value > limit) fail("number out of range");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r')) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t max_var_ = 0;
};

}  // namespace

IdealExpression parse_ideal(std::string_view text, std::optional<std::size_t> vars) {
  Parser parser(text);
  const auto raw = parser.parse();
  std::size_t n = parser.max_var();
  if (vars) {
    if (*vars < n) {
      throw ParseError("--vars " + std::to_string(*vars) + " is smaller than the largest index x" +
                           std::to_string(n),
                       0);
    }
    n = *vars;
  }
  // A ring needs at least one variable; "(1)" alone is the unit ideal of K[x1].
  n = std::max<std::size_t>(n, 1);
  IdealExpression expr;
  expr.n = n;
  for (const auto& monos : raw) {
    std::vector<std::vector<Exponent>> term;
    for (const auto& factors : monos) {
      std::vector<Exponent> e(n, 0);
      for (const auto& [var, power] : factors) e[var - 1] += power;
      term.push_back(std::move(e));
    }
    expr.terms.push_back(std::move(term));
  }
  return expr;
}

std::vector<MonomialIdeal> IdealExpression::term_ideals() const {
  const Ring r = ring();
  std::vector<MonomialIdeal> out;
  for (const auto& term : terms) {
    std::vector<Monomial> gens;
    for (const auto& e : term) gens.emplace_back(r, e);
    out.push_back(MonomialIdeal::minimize_generators(r, std::move(gens)));
  }
  return out;
}

MonomialIdeal IdealExpression::to_ideal() const {
  const auto ideals = term_ideals();
  if (ideals.empty()) throw InvalidArgument("empty expression");
  MonomialIdeal out = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) out = intersect(out, ideals[i]);
  return out;
}

std::string IdealExpression::to_string() const {
  const Ring r = ring();
  std::string out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (t > 0) out += " & ";
    out += '(';
    for (std::size_t i = 0; i < terms[t].size(); ++i) {
      if (i > 0) out += ", ";
      out += Monomial(r, terms[t][i]).to_string();
    }
    out += ')';
  }
  return out;
}

}  // namespace sdepth
