#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "walg/error.hpp"

namespace walg {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& q);

// Dense univariate polynomial in k, coefficients low degree first, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(long c);  // NOLINT
  UPoly(const Rational& c);  // NOLINT
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly k();
  static UPoly linear(const Rational& a, const Rational& b);  // a*k + b

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& lead() const { return c_.back(); }
  Rational coeff(int i) const;
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const;

  Rational eval(const Rational& x) const;
  UPoly monic() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(const Rational& s) const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  // Euclidean division; b must be nonzero.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  static UPoly gcd(UPoly a, UPoly b);  // monic, gcd(0,0) = 0

  std::string str() const;
  int compare(const UPoly& o) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Multiplicative set generated by registered factors; a Scalar is admissible
// when its denominator divides a product of their powers.
class PoleSet {
 public:
  PoleSet() = default;
  PoleSet(std::initializer_list<UPoly> factors);
  void add(const UPoly& factor);
  bool admits(const UPoly& denom) const;
  const std::vector<UPoly>& factors() const { return f_; }

 private:
  std::vector<UPoly> f_;
};

// Element of Q(k): reduced fraction with monic denominator.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT
  Scalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  Scalar(const UPoly& p) : num_(p), den_(1) {}  // NOLINT
  Scalar(const UPoly& num, const UPoly& den);  // normalizes; throws ZeroDenominator
  Scalar(const UPoly& num, const UPoly& den, const PoleSet& allowed);

  static Scalar k() { return Scalar(UPoly::k()); }
  static Scalar from_string(const std::string& s);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }
  Rational constant_value() const;  // requires is_constant()
  bool is_integer() const;

  Rational eval(const Rational& k0) const;  // throws PoleAtEvaluationPoint

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar pow(int e) const;
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // Total order on normal forms (for canonical output only).
  int compare(const Scalar& o) const;

  std::string str() const;
  bool needs_parens() const;  // true when str() is a sum

 private:
  void normalize();
  UPoly num_;
  UPoly den_;
};

Scalar scalar_normalize(const UPoly& num, const UPoly& den);
Rational scalar_eval(const Scalar& s, const Rational& k0);
Rational parse_rational(const std::string& s);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// While set, Scalar::str() prints the value at k = k0 and throws
// PoleAtEvaluationPoint when k0 is a pole.  Process-wide.
void set_render_level(std::optional<Rational> k0);
const std::optional<Rational>& render_level();

}  // namespace walg
