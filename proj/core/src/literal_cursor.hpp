#pragma once

// Character cursor shared by the unit, polynomial and element parsers.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "cotwist/error.hpp"
#include "cotwist/scalars.hpp"

namespace cotwist::detail {

class LiteralCursor {
 public:
  explicit LiteralCursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_name_start() { return std::isalpha(static_cast<unsigned char>(peek())) != 0; }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string name() {
    if (!at_name_start()) fail("expected a name");
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string digits() {
    if (!at_digit()) fail("expected digits");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  /// integer ['/' positive-integer], without sign.
  Rational unsigned_rational() {
    mpz_class num(digits());
    mpz_class den(1);
    if (consume('/')) {
      den = mpz_class(digits());
      if (den == 0) fail("zero denominator");
    }
    Rational out(num, den);
    out.canonicalize();
    return out;
  }

  /// Optionally signed integer, as used in exponents.
  std::int64_t signed_integer() {
    bool negative = false;
    if (consume('-')) {
      negative = true;
    } else {
      consume('+');
    }
    const std::string d = digits();
    if (d.size() > 17) fail("exponent out of range");
    const std::int64_t v = std::stoll(d);
    return negative ? -v : v;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                     ": " + message);
  }

  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

/// Parses `[sign] (coeff | factor) ('*' factor)*` where a factor is
/// `name ['^' integer]`. Every factor name is reported through `on_factor`,
/// which returns true when it consumed the factor (e.g. an algebra
/// generator); otherwise the factor becomes a parameter of the returned unit.
/// A leading sign is only read when `allow_sign` is set.
template <typename FactorHook>
UnitScalar parse_unit_product(LiteralCursor& cur, bool allow_sign, FactorHook&& on_factor) {
  bool negative = false;
  if (allow_sign) {
    if (cur.consume('-')) {
      negative = true;
    } else {
      cur.consume('+');
    }
  }
  Rational coeff(1);
  std::vector<ParamExponents::Entry> factors;
  bool first = true;
  do {
    if (first && cur.at_digit()) {
      coeff = cur.unsigned_rational();
    } else {
      std::string n = cur.name();
      std::int64_t e = 1;
      if (cur.consume('^')) e = cur.signed_integer();
      if (!on_factor(n, e)) factors.emplace_back(std::move(n), e);
    }
    first = false;
  } while (cur.consume('*'));
  if (coeff == 0) cur.fail("zero coefficient");
  if (negative) coeff = -coeff;
  return UnitScalar(coeff, ParamExponents::from_entries(std::move(factors)));
}

/// Parses `unit (('+' | '-') unit)*` at the cursor, stopping before any
/// other character (e.g. a closing parenthesis).
LaurentPolynomial parse_polynomial_sum(LiteralCursor& cur);

}  // namespace cotwist::detail
