#include "cotwist/scalars.hpp"

#include <algorithm>
#include <set>

#include "cotwist/error.hpp"

namespace cotwist {

Rational rational_pow(const Rational& base, std::int64_t k) {
  if (k == 0) return Rational(1);
  if (base == 0) {
    if (k < 0) throw InputError("rational_pow: zero raised to a negative power");
    return Rational(0);
  }
  const unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational out = k > 0 ? Rational(num, den) : Rational(den, num);
  out.canonicalize();
  return out;
}

std::string render_rational(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------------------
// ParamExponents

ParamExponents ParamExponents::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  ParamExponents out;
  for (auto& [name, exp] : entries) {
    if (!out.entries_.empty() && out.entries_.back().first == name) {
      out.entries_.back().second += exp;
    } else {
      out.entries_.emplace_back(std::move(name), exp);
    }
  }
  std::erase_if(out.entries_, [](const Entry& e) { return e.second == 0; });
  return out;
}

ParamExponents ParamExponents::single(std::string name, std::int64_t exponent) {
  return from_entries({{std::move(name), exponent}});
}

std::int64_t ParamExponents::exponent(std::string_view name) const {
  for (const auto& [n, e] : entries_) {
    if (n == name) return e;
  }
  return 0;
}

ParamExponents ParamExponents::operator+(const ParamExponents& other) const {
  ParamExponents out;
  out.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      const std::int64_t sum = a->second + b->second;
      if (sum != 0) out.entries_.emplace_back(a->first, sum);
      ++a;
      ++b;
    }
  }
  return out;
}

ParamExponents ParamExponents::operator-(const ParamExponents& other) const {
  return *this + other.scaled(-1);
}

ParamExponents ParamExponents::scaled(std::int64_t k) const {
  ParamExponents out;
  if (k == 0) return out;
  out.entries_ = entries_;
  for (auto& e : out.entries_) e.second *= k;
  return out;
}

// ---------------------------------------------------------------------------
// UnitScalar

UnitScalar::UnitScalar(Rational coefficient, ParamExponents exponents)
    : coefficient_(std::move(coefficient)), exponents_(std::move(exponents)) {
  coefficient_.canonicalize();
  if (coefficient_ == 0) throw InputError("unit scalar with zero coefficient");
}

UnitScalar UnitScalar::parameter(std::string name, std::int64_t exponent) {
  return UnitScalar(Rational(1), ParamExponents::single(std::move(name), exponent));
}

UnitScalar UnitScalar::inverse() const {
  UnitScalar out;
  out.coefficient_ = 1 / coefficient_;
  out.exponents_ = -exponents_;
  return out;
}

UnitScalar UnitScalar::pow(std::int64_t k) const {
  if (k == 0) return UnitScalar();
  if (k == 1) return *this;
  UnitScalar out;
  out.coefficient_ = coefficient_ == 1 ? Rational(1) : rational_pow(coefficient_, k);
  out.exponents_ = exponents_.scaled(k);
  return out;
}

UnitScalar& UnitScalar::operator*=(const UnitScalar& other) {
  if (other.coefficient_ != 1) coefficient_ *= other.coefficient_;
  if (!other.exponents_.empty()) exponents_ = exponents_ + other.exponents_;
  return *this;
}

UnitScalar& UnitScalar::operator/=(const UnitScalar& other) {
  if (other.coefficient_ != 1) coefficient_ /= other.coefficient_;
  if (!other.exponents_.empty()) exponents_ = exponents_ - other.exponents_;
  return *this;
}

UnitScalar unit_mul(const UnitScalar& u, const UnitScalar& v) { return u * v; }
UnitScalar unit_inv(const UnitScalar& u) { return u.inverse(); }
UnitScalar unit_pow(const UnitScalar& u, std::int64_t k) { return u.pow(k); }

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(const Rational& constant) {
  add_term(ParamExponents(), constant);
}

LaurentPolynomial::LaurentPolynomial(const UnitScalar& unit) {
  terms_.emplace(unit.exponents(), unit.coefficient());
}

LaurentPolynomial LaurentPolynomial::from_terms(
    const std::vector<std::pair<ParamExponents, Rational>>& terms) {
  LaurentPolynomial out;
  for (const auto& [exps, coeff] : terms) out.add_term(exps, coeff);
  return out;
}

void LaurentPolynomial::add_term(const ParamExponents& exps, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

UnitScalar LaurentPolynomial::as_unit() const {
  if (terms_.size() != 1) throw InputError("polynomial is not a single-term unit");
  const auto& [exps, coeff] = *terms_.begin();
  return UnitScalar(coeff, exps);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, coeff);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, -coeff);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) out.add_term(ea + eb, ca * cb);
  }
  return *this = std::move(out);
}

LaurentPolynomial& LaurentPolynomial::operator*=(const UnitScalar& unit) {
  if (unit.is_one()) return *this;
  Terms scaled;
  for (const auto& [exps, coeff] : terms_) {
    // Translation by a fixed exponent map is injective but does not preserve
    // the lexicographic key order, so rebuild the map.
    scaled.emplace(exps + unit.exponents(), coeff * unit.coefficient());
  }
  terms_ = std::move(scaled);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& [exps, coeff] : out.terms_) coeff = -coeff;
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(std::uint64_t k) const {
  LaurentPolynomial result(Rational(1));
  LaurentPolynomial base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPolynomial poly_add(const LaurentPolynomial& p, const LaurentPolynomial& r) { return p + r; }
LaurentPolynomial poly_mul(const LaurentPolynomial& p, const LaurentPolynomial& r) { return p * r; }
LaurentPolynomial poly_scale(const LaurentPolynomial& p, const UnitScalar& u) { return p * u; }

// ---------------------------------------------------------------------------
// Specialization

Rational specialize(const UnitScalar& u, const Assignment& assignment) {
  Rational out = u.coefficient();
  for (const auto& [name, exp] : u.exponents().entries()) {
    auto it = assignment.find(name);
    if (it == assignment.end()) throw InputError("specialize: parameter '" + name + "' is not assigned");
    if (it->second == 0) throw InputError("specialize: parameter '" + name + "' is assigned zero");
    out *= rational_pow(it->second, exp);
  }
  return out;
}

Rational specialize(const LaurentPolynomial& p, const Assignment& assignment) {
  Rational out(0);
  for (const auto& [exps, coeff] : p.terms()) out += specialize(UnitScalar(coeff, exps), assignment);
  return out;
}

std::vector<std::string> parameters_of(const UnitScalar& u) {
  std::vector<std::string> out;
  for (const auto& [name, exp] : u.exponents().entries()) out.push_back(name);
  return out;
}

std::vector<std::string> parameters_of(const LaurentPolynomial& p) {
  std::set<std::string> names;
  for (const auto& [exps, coeff] : p.terms()) {
    for (const auto& [name, exp] : exps.entries()) names.insert(name);
  }
  return {names.begin(), names.end()};
}

}  // namespace cotwist
