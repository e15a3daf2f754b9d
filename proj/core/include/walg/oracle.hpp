#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "walg/report.hpp"
#include "walg/vertex.hpp"

namespace walg {

// Fock space of a free-field table as polynomials in creation modes g_(m),
// m < 0.  Fields act through their modes, composite fields through the
// normally ordered product formula, truncated by conformal weight.  Shares
// nothing with the OPE engine beyond the table data.
class ModeOracle {
 public:
  // (generator, mode) pairs, sorted.
  using Monomial = std::vector<std::pair<int, int>>;
  using State = std::map<Monomial, Scalar>;

  // Throws InvalidArgument unless every first-order pole is a constant.
  explicit ModeOracle(TablePtr t);

  State vacuum() const;
  // X_(n) v for X a right-nested word of the table.
  State apply(const Mono& word, int n, const State& v) const;
  State apply(const FieldState& x, int n, const State& v) const;
  // The state X_(-1)|0>.
  State state(const FieldState& x) const;

  static bool same(const State& a, const State& b);

 private:
  State apply_mode(int g, int m, const State& v) const;
  // apply() for a single Fock monomial with coefficient 1.
  State apply_word(const Mono& word, int n, const State& v) const;
  int twice_weight(const Monomial& m) const;
  int max_twice_weight(const State& v) const;

  TablePtr t_;
  mutable std::map<std::tuple<Mono, int, Monomial>, State> cache_;
};

// Compares nth_product(A, n, B) with the oracle for all monomials A, B of
// weight <= max_weight and at most max_symbols symbols, and every n from -2
// to the highest possible pole.
Report engine_oracle_check(const TablePtr& t, int max_weight, int max_symbols, const std::string& id);

// Monomials of the table with twice weight <= 2 * max_weight and at most
// max_symbols symbols (weight-zero generators count as symbols).
std::vector<Mono> monomials_up_to(const GeneratorTable& t, int max_weight, int max_symbols);

}  // namespace walg
