#pragma once

#include <string>
#include <vector>

#include "walg/glstruct.hpp"
#include "walg/report.hpp"
#include "walg/vertex.hpp"

namespace walg {

// Square matrix of fields; size 1 for scalar Miura operators.
struct FieldMatrix {
  int n = 1;
  std::vector<FieldState> e;  // row-major

  static FieldMatrix zero(const TablePtr& t, int n);
  static FieldMatrix identity(const TablePtr& t, int n);
  static FieldMatrix scalar(const FieldState& f);
  FieldState& at(int i, int j) { return e.at(i * n + j); }
  const FieldState& at(int i, int j) const { return e.at(i * n + j); }
  bool is_zero() const;
  FieldMatrix& operator+=(const FieldMatrix& o);
  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) { return a.n == b.n && a.e == b.e; }
  friend bool operator!=(const FieldMatrix& a, const FieldMatrix& b) { return !(a == b); }
  std::string str() const;
};

// sum_i coeffs[i] dhat^i with [dhat, A] = c dA.
struct MiuraOperator {
  TablePtr table;
  Scalar c;
  std::vector<FieldMatrix> coeffs;

  static MiuraOperator constant(const FieldMatrix& a, const Scalar& c);
  // dhat + a
  static MiuraOperator first_order(const FieldMatrix& a, const Scalar& c);
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  int size() const { return coeffs.at(0).n; }
  // Coefficient of dhat^i, zero beyond the order.
  FieldMatrix coeff(int i) const;
};

MiuraOperator opmul(const MiuraOperator& p, const MiuraOperator& q);
// Folded from the right, so coefficients are right-nested: :a :b c::.
MiuraOperator opmul(const std::vector<MiuraOperator>& factors);

// Heisenberg h1..hN with h_i h_j ~ (k+N) delta_ij.
TablePtr principal_table(int N);
// W_0..W_N of (dhat+h1)...(dhat+hN) with c = k+N-1; W_i multiplies dhat^{N-i}.
std::vector<FieldState> principal_generators(int N);
std::vector<FieldState> principal_generators(const TablePtr& t, const std::vector<std::string>& names,
                                             const Scalar& c);
// Top-length part of a field without derivatives: the commutative symbol.
FieldState classical_shadow(const FieldState& f);
// Elementary symmetric polynomial as right-nested normal ordered products.
FieldState elementary_symmetric(const TablePtr& t, const std::vector<std::string>& names, int i);

// Currents e[t,i,j] (t = 1..l) of affine gl_n with
// kappa = (k+n(l-1)) tr(uv) + tr u tr v, one commuting copy per t.
TablePtr rectangular_table(int n, int l);
// A_t = (e[t,j,i])_{i,j}.
FieldMatrix rectangular_matrix(const TablePtr& t, int n, int col);
// W_0..W_l matrices of (dhat+A_1)...(dhat+A_l), c = k+n(l-1).
std::vector<FieldMatrix> rectangular_generators(int n, int l);
std::vector<FieldMatrix> rectangular_generators(const TablePtr& t, int n, const std::vector<int>& cols,
                                                const Scalar& c);

// Currents of V^tau(g_0) for a grading of gl_N: h1..hN for E_ii and eIJ for
// the roots of degree zero, with the shifted form tau.
TablePtr levi_current_table(const Grading& g, const std::string& label);

struct SubregularFields {
  TablePtr table;
  int N = 0, N1 = 0;
  Scalar c;
  FieldState H, Z, E, F, H1, Z1, E1, F1;
  std::vector<FieldState> W, P;  // W_0..W_{N2}, P_0..P_{N2}
};

// Grading of the pyramid (2,1,...,1) of gl_N.
Grading subregular_grading(int N);
// Throws BadSplit unless 2 <= N1 <= N.
SubregularFields subregular_generators(int N, int N1);

// Virasoro element in span{NO(W1,W1), D(W1), W2} for N = 2.
struct VirasoroResult {
  FieldState T;
  Scalar a, b, c;
  Scalar central_charge;
  Report report;
};
VirasoroResult virasoro_extraction();

}  // namespace walg
