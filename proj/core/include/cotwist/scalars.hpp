#pragma once

// Exact coefficient arithmetic: GMP rationals, invertible Laurent monomials
// in named parameters (UnitScalar), and sparse Laurent polynomials over Q.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cotwist {

using Rational = mpq_class;

/// Parses `integer ['/' positive-integer]` with an optional leading sign.
Rational parse_rational(std::string_view text);
std::string render_rational(const Rational& r);

/// Rational power with an integer (possibly negative) exponent.
Rational rational_pow(const Rational& base, std::int64_t k);

/// Laurent exponents of named parameters. Canonical form: sorted by name,
/// no repeated names, no zero exponents.
class ParamExponents {
 public:
  using Entry = std::pair<std::string, std::int64_t>;

  ParamExponents() = default;
  /// Sorts, merges repeated names and drops zero exponents.
  static ParamExponents from_entries(std::vector<Entry> entries);
  static ParamExponents single(std::string name, std::int64_t exponent = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::int64_t exponent(std::string_view name) const;

  ParamExponents operator+(const ParamExponents& other) const;
  ParamExponents operator-(const ParamExponents& other) const;
  ParamExponents operator-() const { return scaled(-1); }
  ParamExponents scaled(std::int64_t k) const;

  friend bool operator==(const ParamExponents&, const ParamExponents&) = default;
  friend auto operator<=>(const ParamExponents&, const ParamExponents&) = default;

 private:
  std::vector<Entry> entries_;
};

/// An invertible element c * q1^k1 * ... * qr^kr of Q[q^{±1}] with c != 0.
/// These are the values cocycles take.
class UnitScalar {
 public:
  UnitScalar() : coefficient_(1) {}
  explicit UnitScalar(Rational coefficient, ParamExponents exponents = {});
  static UnitScalar parameter(std::string name, std::int64_t exponent = 1);

  const Rational& coefficient() const { return coefficient_; }
  const ParamExponents& exponents() const { return exponents_; }
  bool is_one() const { return exponents_.empty() && coefficient_ == 1; }

  UnitScalar inverse() const;
  UnitScalar pow(std::int64_t k) const;

  UnitScalar& operator*=(const UnitScalar& other);
  UnitScalar& operator/=(const UnitScalar& other);
  friend UnitScalar operator*(UnitScalar a, const UnitScalar& b) { return a *= b; }
  friend UnitScalar operator/(UnitScalar a, const UnitScalar& b) { return a /= b; }
  friend bool operator==(const UnitScalar& a, const UnitScalar& b) {
    return a.coefficient_ == b.coefficient_ && a.exponents_ == b.exponents_;
  }

 private:
  Rational coefficient_;
  ParamExponents exponents_;
};

UnitScalar unit_mul(const UnitScalar& u, const UnitScalar& v);
UnitScalar unit_inv(const UnitScalar& u);
UnitScalar unit_pow(const UnitScalar& u, std::int64_t k);

/// Unit literal grammar:
///   unit   := [sign] coeff ('*' factor)* | [sign] factor ('*' factor)*
///   coeff  := integer ['/' positive-integer]
///   factor := name ['^' integer]
/// Throws ParseError on malformed text or a zero coefficient.
UnitScalar parse_unit(std::string_view text);
/// Canonical rendering: coefficient first (omitted when it is 1 and factors
/// follow), then factors sorted by parameter name.
std::string render_unit(const UnitScalar& u);

/// Sparse Laurent polynomial: exponent map -> nonzero rational.
class LaurentPolynomial {
 public:
  using Terms = std::map<ParamExponents, Rational>;

  LaurentPolynomial() = default;
  LaurentPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPolynomial(std::int64_t constant) : LaurentPolynomial(Rational(static_cast<long>(constant))) {}  // NOLINT
  LaurentPolynomial(const UnitScalar& unit);  // NOLINT(google-explicit-constructor)
  static LaurentPolynomial from_terms(const std::vector<std::pair<ParamExponents, Rational>>& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the polynomial is a single term, i.e. a unit of the ring.
  bool is_unit() const { return terms_.size() == 1; }
  /// The single term as a UnitScalar; throws InputError otherwise.
  UnitScalar as_unit() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const UnitScalar& unit);
  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const UnitScalar& u) { return a *= u; }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

  LaurentPolynomial pow(std::uint64_t k) const;

 private:
  void add_term(const ParamExponents& exps, const Rational& coeff);
  Terms terms_;
};

LaurentPolynomial poly_add(const LaurentPolynomial& p, const LaurentPolynomial& r);
LaurentPolynomial poly_mul(const LaurentPolynomial& p, const LaurentPolynomial& r);
LaurentPolynomial poly_scale(const LaurentPolynomial& p, const UnitScalar& u);

/// Sum of unit literals joined by '+' / '-'. "0" is the zero polynomial.
LaurentPolynomial parse_polynomial(std::string_view text);
std::string render_polynomial(const LaurentPolynomial& p);

using Assignment = std::map<std::string, Rational, std::less<>>;

/// Evaluates p at nonzero rational values of its parameters. Throws
/// InputError when a parameter is missing or assigned zero.
Rational specialize(const LaurentPolynomial& p, const Assignment& assignment);
Rational specialize(const UnitScalar& u, const Assignment& assignment);

/// Parameter names occurring in the value (sorted, unique).
std::vector<std::string> parameters_of(const UnitScalar& u);
std::vector<std::string> parameters_of(const LaurentPolynomial& p);

}  // namespace cotwist
