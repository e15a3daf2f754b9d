#pragma once

#include <functional>
#include <string>
#include <vector>

#include "walg/glstruct.hpp"
#include "walg/report.hpp"
#include "walg/vertex.hpp"
#include "walg/wakimoto.hpp"

namespace walg {

// Weight lambda of a Fock module, written as the field sum_g lambda[g] g over
// the free bosons of a table.  The highest-weight vector is e^lambda.
struct FockWeight {
  TablePtr table;
  std::vector<Scalar> lambda;  // one entry per generator, zero off the bosons

  static FockWeight zero(const TablePtr& t);
  // Throws InvalidArgument when a name is not a free boson.
  static FockWeight from(const TablePtr& t, const std::vector<std::pair<std::string, Scalar>>& coeffs);

  bool is_zero() const;
  // Eigenvalues of g_(0) on e^lambda, one per generator.
  std::vector<Scalar> momentum() const;
  // Second-order pairing (lambda | mu).
  Scalar pairing(const FockWeight& mu) const;
  FockWeight operator+(const FockWeight& o) const;
  friend bool operator==(const FockWeight& a, const FockWeight& b) { return a.lambda == b.lambda; }
  std::string str() const;
};

// body acting on e^base.
struct FockState {
  FockWeight base;
  FieldState body;

  static FockState vacuum(const FieldState& body);
  bool is_zero() const { return body.is_zero(); }
  friend bool operator==(const FockState& a, const FockState& b) {
    return a.base == b.base && a.body == b.body;
  }
  std::string str() const;
};

// a_(n) v for a field a of the vertex algebra and a Fock state v.
FockState fock_nth_product(const FieldState& a, int n, const FockState& v);

// Mode X_(mode) of X(z) = :dressing(z) e^{int lambda}(z):, cocycle fixed to 1.
// The dressing must not involve free bosons.
FockState vertex_operator_apply(const FockWeight& lambda, const FieldState& dressing, int mode,
                                const FockState& v);

// Exponent of a screening as a weight over its own table.
FockWeight exponent_weight(const ScreeningSpec& spec);
// Zero mode of the dressed screening.
FockState screening_apply(const ScreeningSpec& spec, const FockState& v);

// Equivariance of the intertwiner states v_b = P^{b,R}_alpha(a*) e^{alpha~},
// b in [alpha], under the image of a degree-zero unit u in the Levi lift.
Report intertwiner_commutation_check(const AffineLift& levi, const Wakimoto& w, int alpha,
                                     const GlElem& u, const Root& beta);
// The above for every degree-zero unit u and every b in [alpha], for every
// simple root alpha of positive degree.
Report intertwiner_checks(const Grading& g, const std::string& label);

// Image of a field over a current table under the Levi lift; `unit` names the
// gl_N element of each generator.
FieldState realize_levi(const FieldState& x, const AffineLift& lift,
                        const std::function<GlElem(const std::string&)>& unit);

// Q_i(W_j) = 0 for the principal Miura generators of gl_N, all i and j.
Report principal_kernel_check(int N);
// Q_alpha(X) = 0 for X in {H, Z, E, F} of the pyramid (2,1,...,1), every
// simple root, computed in the Levi Wakimoto realization.
Report subregular_kernel_check(int N);
// Q_alpha(W_m[i,j]) = 0 for the rectangular pyramid with l columns of height n.
Report rectangular_kernel_check(int n, int l);

}  // namespace walg
