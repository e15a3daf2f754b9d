#include "walg/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

namespace walg {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::PoleAtEvaluationPoint: return "PoleAtEvaluationPoint";
    case ErrorCode::DisallowedPole: return "DisallowedPole";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MixedTables: return "MixedTables";
    case ErrorCode::NonIntegralExponents: return "NonIntegralExponents";
    case ErrorCode::NotUnimodal: return "NotUnimodal";
    case ErrorCode::InvalidColumn: return "InvalidColumn";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NonUniqueSolution: return "NonUniqueSolution";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::BadSplit: return "BadSplit";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::SizeBound: return "SizeBound";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

UPoly::UPoly(const Rational& c) {
  if (c != 0) {
    c_.push_back(c);
    c_.back().canonicalize();
  }
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

UPoly UPoly::k() { return UPoly(std::vector<Rational>{0, 1}); }

UPoly UPoly::linear(const Rational& a, const Rational& b) {
  return UPoly(std::vector<Rational>{b, a});
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

bool UPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  return scaled(1 / c_.back());
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  const UPoly& big = a.c_.size() >= b.c_.size() ? a : b;
  const UPoly& small = a.c_.size() >= b.c_.size() ? b : a;
  UPoly r = big;
  for (size_t i = 0; i < small.c_.size(); ++i) r.c_[i] += small.c_[i];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly UPoly::scaled(const Rational& s) const {
  if (s == 0) return UPoly();
  UPoly r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  int da = a.degree();
  std::vector<Rational> quo(da >= db ? da - db + 1 : 0, Rational(0));
  const Rational inv = 1 / b.lead();
  for (int i = da; i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] * inv;
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

int UPoly::compare(const UPoly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size() ? -1 : 1;
  for (size_t i = c_.size(); i-- > 0;) {
    int c = cmp(c_[i], o.c_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string UPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "k";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

// ---------------------------------------------------------------- PoleSet

PoleSet::PoleSet(std::initializer_list<UPoly> factors) {
  for (const auto& f : factors) add(f);
}

void PoleSet::add(const UPoly& factor) {
  if (factor.is_zero()) throw Error(ErrorCode::ZeroDenominator, "zero pole factor");
  if (!factor.is_constant()) f_.push_back(factor.monic());
}

bool PoleSet::admits(const UPoly& denom) const {
  UPoly d = denom.monic();
  bool progress = true;
  while (!d.is_constant() && progress) {
    progress = false;
    for (const auto& f : f_) {
      UPoly q, r;
      UPoly::divmod(d, f, q, r);
      if (r.is_zero()) {
        d = q;
        progress = true;
      }
    }
  }
  return d.is_constant();
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const UPoly& num, const UPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator is the zero polynomial");
  normalize();
}

Scalar::Scalar(const UPoly& num, const UPoly& den, const PoleSet& allowed) : Scalar(num, den) {
  if (!allowed.admits(den_))
    throw Error(ErrorCode::DisallowedPole, "denominator " + den_.str() + " outside registered poles");
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    UPoly g = UPoly::gcd(num_, den_);
    if (!g.is_one()) {
      UPoly q, r;
      UPoly::divmod(num_, g, q, r);
      num_ = q;
      UPoly::divmod(den_, g, q, r);
      den_ = q;
    }
  }
  const Rational lc = den_.lead();
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
}

Scalar scalar_normalize(const UPoly& num, const UPoly& den) { return Scalar(num, den); }

Rational Scalar::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::InvalidArgument, "scalar " + str() + " depends on k");
  return num_.coeff(0);
}

bool Scalar::is_integer() const {
  if (!is_constant()) return false;
  return num_.coeff(0).get_den() == 1;
}

Rational Scalar::eval(const Rational& k0) const {
  Rational d = den_.eval(k0);
  if (d == 0)
    throw Error(ErrorCode::PoleAtEvaluationPoint,
                "(" + num_.str() + ")/(" + den_.str() + ") at k = " + to_string(k0));
  return num_.eval(k0) / d;
}

Rational scalar_eval(const Scalar& s, const Rational& k0) { return s.eval(k0); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ = num_ + o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = UPoly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  if (o.is_constant()) {
    num_ = num_.scaled(o.num_.coeff(0));
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero scalar");
  return Scalar(den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero scalar");
  if (o.is_constant()) {
    num_ = num_.scaled(1 / o.num_.coeff(0));
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

int Scalar::compare(const Scalar& o) const {
  int c = den_.compare(o.den_);
  if (c != 0) return c;
  return num_.compare(o.num_);
}

namespace {

int nonzero_terms(const UPoly& p) {
  int n = 0;
  for (const auto& c : p.coeffs()) n += (c != 0);
  return n;
}

bool atomic(const UPoly& p) {
  if (nonzero_terms(p) > 1) return false;
  if (p.is_zero()) return true;
  return p.lead().get_den() == 1 && p.lead() > 0;
}

}  // namespace

bool Scalar::needs_parens() const {
  if (render_level()) return false;
  if (!den_.is_one()) return false;
  return nonzero_terms(num_) > 1;
}

namespace {
std::optional<Rational> g_render_level;
}  // namespace

void set_render_level(std::optional<Rational> k0) { g_render_level = std::move(k0); }
const std::optional<Rational>& render_level() { return g_render_level; }

std::string Scalar::str() const {
  if (g_render_level) return to_string(eval(*g_render_level));
  if (den_.is_one()) return num_.str();
  std::string n = atomic(num_) ? num_.str() : "(" + num_.str() + ")";
  std::string d = atomic(den_) ? den_.str() : "(" + den_.str() + ")";
  return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

// ---------------------------------------------------------------- parser

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(const std::string& s) : s_(s) {}

  Scalar parse() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& m) {
    throw Error(ErrorCode::ParseError, m + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        v /= unary();
      } else {
        skip();
        if (pos_ < s_.size() && (s_[pos_] == 'k' || s_[pos_] == '(')) v *= power();
        else return v;
      }
    }
  }
  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Scalar power() {
    Scalar b = primary();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(s_.substr(start, pos_ - start));
      b = b.pow(neg ? -e : e);
    }
    return b;
  }
  Scalar primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'k') {
      ++pos_;
      return Scalar::k();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(Rational(Integer(s_.substr(start, pos_ - start))));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::from_string(const std::string& s) { return ScalarParser(s).parse(); }

Rational parse_rational(const std::string& s) {
  Scalar v = Scalar::from_string(s);
  if (!v.is_constant()) throw Error(ErrorCode::ParseError, "expected a rational number, got " + s);
  return v.constant_value();
}

}  // namespace walg
