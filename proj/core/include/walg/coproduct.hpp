#pragma once

#include <string>
#include <utility>
#include <vector>

#include "walg/glstruct.hpp"
#include "walg/miura.hpp"
#include "walg/report.hpp"
#include "walg/vertex.hpp"

namespace walg {

// Result of a split verification.  `levels` lists (k_t, value) with
// k_t + N_t = k + N for every piece; `delta` holds the emitted images
// Delta(W_m) in the W1[i] / W2[j] alphabet.
struct SplitReport {
  std::string pyramid;
  std::vector<int> cuts;
  std::vector<std::pair<std::string, Scalar>> levels;
  std::vector<std::pair<std::string, FieldState>> delta;
  Report report;
};

// Miura factorization of a principal (all columns 1) or rectangular (all
// columns equal) pyramid at the column cut `after`.
SplitReport factorization_check(const Pyramid& pi, int after);
// Both refinements of a double cut agree.  Any pyramid is accepted; fields
// are compared when it is principal or rectangular, the Levi current data
// and level ledger always.  Throws InvalidColumn when c1 == c2.
SplitReport coassociativity_check(const Pyramid& pi, int c1, int c2);
// Delta(W_m) with every W1 / W2 symbol replaced by its free-field image
// equals the free-field W_m.
SplitReport miura_compatibility_check(const Pyramid& pi, int after);
// Coproduct identities for the pyramid (2,1,...,1) of gl_N cut into gl_N1
// and gl_N2 pieces.  Throws BadSplit unless 2 <= N1 <= N.
SplitReport subregular_coproduct_check(int N, int N1);
// binom(n-j, i) W^n_j(u_1..u_n) = sum over i-subsets removed of W^{n-i}_j,
// for all i, j >= 0 with i + j <= n.  Throws SizeBound above `bound`.
Report binomial_identity_check(int n, int bound = 6);

// s(k) -> s(k + d).
Scalar shift_level(const Scalar& s, const Rational& d);

}  // namespace walg
