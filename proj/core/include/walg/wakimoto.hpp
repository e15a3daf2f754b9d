#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "walg/glstruct.hpp"
#include "walg/report.hpp"
#include "walg/scalar.hpp"
#include "walg/vertex.hpp"

namespace walg {

// Polynomial in a fixed number of commuting variables with Scalar coefficients.
class Poly {
 public:
  using Exps = std::vector<int>;

  Poly() = default;
  explicit Poly(int nvars) : n_(nvars) {}
  static Poly constant(int nvars, const Scalar& s);
  static Poly var(int nvars, int v);

  int nvars() const { return n_; }
  const std::map<Exps, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Scalar constant_term() const;
  bool is_constant() const;
  // True when every variable in use has allowed[v] set.
  bool uses_only(const std::vector<bool>& allowed) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly diff(int v) const;
  std::string str(const std::vector<std::string>& names) const;

 private:
  void add_term(const Exps& e, const Scalar& c);
  int n_ = 0;
  std::map<Exps, Scalar> t_;
};

// First-order differential operator sum_b coeff[b] d/dx_b + mult.
struct DiffOp {
  std::vector<Poly> coeff;
  Poly mult;

  explicit DiffOp(int nvars = 0) : coeff(nvars, Poly(nvars)), mult(nvars) {}
  int nvars() const { return static_cast<int>(coeff.size()); }
  Poly apply(const Poly& p) const;
  bool is_zero() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(const Poly& p, const DiffOp& d);
  friend DiffOp operator*(const Scalar& s, const DiffOp& d);
  friend bool operator==(const DiffOp& a, const DiffOp& b) {
    return a.coeff == b.coeff && a.mult == b.mult;
  }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }
};

DiffOp commutator(const DiffOp& a, const DiffOp& b);

// Ordered positive roots; X is the product of exp(-x_b e_b) in this order.
// Positive-degree roots come first, ordered by (degree, height, lex), then
// the degree-zero roots by (height, lex).
struct Chart {
  Grading grading;
  std::vector<Root> roots;

  int nvars() const { return static_cast<int>(roots.size()); }
  int position(const Root& r) const;  // -1 when absent
  std::vector<std::string> var_names() const;
  bool degree_zero(int pos) const { return grading.twice_degree(roots.at(pos)) == 0; }
};

Chart make_chart(const Grading& g);
std::string diffop_str(const Chart& c, const DiffOp& d);

// Left vector fields rho(a), twisted rho_lambda(a), and right fields rho^R(e_b)
// computed in the defining representation.
class Wakimoto {
 public:
  explicit Wakimoto(const Grading& g);

  const Chart& chart() const { return chart_; }
  int N() const { return chart_.grading.N; }
  DiffOp left(const GlElem& a) const;
  DiffOp twisted(const GlElem& a, const std::vector<Scalar>& lambda) const;
  DiffOp right(const Root& b) const;
  DiffOp right(const GlElem& a) const;

  // Coefficient of d/dx_beta in rho(e_alpha), rho(f_alpha), rho^R(e_alpha).
  const Poly& P(const Root& alpha, const Root& beta) const;
  const Poly& Q(const Root& alpha, const Root& beta) const;
  const Poly& PR(const Root& alpha, const Root& beta) const;

 private:
  struct Solved {
    DiffOp op;
    std::vector<Poly> diag;  // diagonal of X^{-1} a X
  };
  Solved solve_left(const GlElem& a) const;
  DiffOp solve(const std::vector<Poly>& upper) const;

  Chart chart_;
  std::vector<Poly> x_, xinv_;           // X and X^{-1}, N x N row-major
  std::vector<std::vector<Poly>> m_;     // X_{>i}^{-1} e_i X_{>i}
  std::map<std::pair<int, int>, DiffOp> left_;  // rho(E_ij)
  std::map<int, DiffOp> right_;                 // rho^R(e_b) by chart position
};

// Lemma-level verification of rho, rho^R and the polynomial identities.
Report structural_checks(const Grading& g, const std::string& label);

// beta-gamma pairs on `bg_roots`, neutral fields on `phi_roots` (pairing
// chi([e_a, e_b])) and a Heisenberg b[1..N] with b_i b_j ~ (k+N) delta_ij.
struct FreeFields {
  TablePtr table;
  int N = 0;
  std::vector<Root> bg_roots, phi_roots;

  FieldState a(const Root& r) const;
  FieldState astar(const Root& r) const;
  FieldState phi(const Root& r) const;
  FieldState b(int i) const;
  bool has_bg(const Root& r) const;
};

FreeFields free_fields(const Grading& g, const std::vector<Root>& bg_roots,
                       const std::vector<Root>& phi_roots, const std::string& label);
// P(a*) for a chart polynomial; every variable in use needs a beta-gamma pair.
FieldState poly_field(const FreeFields& ff, const Chart& c, const Poly& p);

struct AffineLift {
  FreeFields ff;
  bool levi = false;
  // Images of E_ij: every positive root in scope, all diagonal units, and
  // e_{s+1,s} for simple roots s in scope.
  std::map<std::pair<int, int>, FieldState> images;
  std::map<int, Scalar> c;  // solved constants by simple root index
  Report audit;

  // Image of a linear combination of the basis above; false when outside.
  bool image(const GlElem& u, FieldState& out) const;
};

// Invariant form used for the lift: k tr(uv) + tr u tr v on gl_N, and for the
// Levi lift the shifted form k tr(uv) + tr u tr v + (kappa_gl_N - kappa_g0)/2.
Scalar lift_form(const Grading& g, bool levi, const GlElem& u, const GlElem& v);
std::vector<int> levi_blocks(const Grading& g);

// Builds the images with unknown constants, solves for them from the OPE
// relations, and audits every pair.  Levi mode uses the degree-zero roots only.
AffineLift affine_lift(const Grading& g, bool levi);

enum class ScreeningKind { Pi0, PiHalf, Pi1 };
const char* kind_name(ScreeningKind k);

struct ScreeningSpec {
  int alpha = 0;  // simple root index
  ScreeningKind kind = ScreeningKind::Pi1;
  FieldState dressing;
  // Exponent weight: coefficient of each Heisenberg generator b_i (index i-1).
  std::vector<Scalar> exponent;
  // Class members with their dressing polynomials P^{beta,R}_alpha(a*).
  std::vector<std::pair<Root, FieldState>> members;
};

ScreeningSpec screening_spec(const Wakimoto& w, const FreeFields& ff, int alpha);

}  // namespace walg
