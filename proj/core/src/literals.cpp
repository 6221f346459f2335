#include <string>

#include "cotwist/error.hpp"
#include "cotwist/scalars.hpp"
#include "literal_cursor.hpp"

namespace cotwist {

namespace {

constexpr auto kNoHook = [](const std::string&, std::int64_t) { return false; };

}  // namespace

Rational parse_rational(std::string_view text) {
  detail::LiteralCursor cur(text);
  bool negative = cur.consume('-');
  if (!negative) cur.consume('+');
  Rational r = cur.unsigned_rational();
  if (!cur.at_end()) cur.fail("trailing characters");
  return negative ? Rational(-r) : r;
}

UnitScalar parse_unit(std::string_view text) {
  detail::LiteralCursor cur(text);
  UnitScalar u = detail::parse_unit_product(cur, true, kNoHook);
  if (!cur.at_end()) cur.fail("trailing characters");
  return u;
}

std::string render_unit(const UnitScalar& u) {
  const auto& entries = u.exponents().entries();
  std::string out;
  const Rational& c = u.coefficient();
  if (entries.empty()) return render_rational(c);
  if (c == -1) {
    out = "-";
  } else if (c != 1) {
    out = render_rational(c) + "*";
  }
  bool first = true;
  for (const auto& [name, exp] : entries) {
    if (!first) out += '*';
    first = false;
    out += name;
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out;
}

LaurentPolynomial parse_polynomial(std::string_view text) {
  detail::LiteralCursor cur(text);
  LaurentPolynomial out;
  if (cur.peek() == '0') {
    detail::LiteralCursor probe(text);
    probe.digits();
    if (probe.at_end()) return out;
  }
  out = detail::parse_polynomial_sum(cur);
  if (!cur.at_end()) cur.fail("trailing characters");
  return out;
}

LaurentPolynomial detail::parse_polynomial_sum(LiteralCursor& cur) {
  LaurentPolynomial out = parse_unit_product(cur, true, kNoHook);
  while (cur.peek() == '+' || cur.peek() == '-') out += parse_unit_product(cur, true, kNoHook);
  return out;
}

std::string render_polynomial(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exps, coeff] : p.terms()) {
    if (first) {
      out = render_unit(UnitScalar(coeff, exps));
      first = false;
    } else if (coeff < 0) {
      out += " - " + render_unit(UnitScalar(-coeff, exps));
    } else {
      out += " + " + render_unit(UnitScalar(coeff, exps));
    }
  }
  return out;
}

}  // namespace cotwist
