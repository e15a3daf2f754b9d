#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "walg/scalar.hpp"

namespace walg {

// ∂^der g for generator index g.
struct Sym {
  int gen = 0;
  int der = 0;
  friend bool operator==(const Sym& a, const Sym& b) { return a.gen == b.gen && a.der == b.der; }
  friend bool operator!=(const Sym& a, const Sym& b) { return !(a == b); }
  friend bool operator<(const Sym& a, const Sym& b) {
    return a.gen != b.gen ? a.gen < b.gen : a.der < b.der;
  }
  friend bool operator<=(const Sym& a, const Sym& b) { return !(b < a); }
};

// Right-nested normally ordered word :s1 :s2 ... sk::, symbols nondecreasing.
using Mono = std::vector<Sym>;

struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using Terms = std::map<Mono, Scalar, MonoLess>;

void add_to(Terms& acc, const Mono& m, const Scalar& c);
void add_to(Terms& acc, const Terms& t, const Scalar& c = Scalar(1));

// Linear combination of generators plus a constant: the allowed shape of a
// first-order pole between two generators.
struct LinGen {
  Scalar constant;
  std::vector<std::pair<int, Scalar>> gens;  // sorted by generator, nonzero
  bool is_zero() const { return constant.is_zero() && gens.empty(); }
  LinGen negated() const;
};

class GeneratorTable;
using TablePtr = std::shared_ptr<const GeneratorTable>;

class GeneratorTable : public std::enable_shared_from_this<GeneratorTable> {
 public:
  struct Gen {
    std::string name;
    int twice_weight;
  };

  const std::string& label() const { return label_; }
  int size() const { return static_cast<int>(gens_.size()); }
  const Gen& gen(int i) const { return gens_.at(i); }
  int index(const std::string& name) const;  // throws InvalidArgument
  int find(const std::string& name) const;   // -1 when absent
  const Scalar& pair2(int a, int b) const;
  const LinGen& pair1(int a, int b) const;
  // True for free bosons: no first-order pole with any generator.
  bool is_boson(int g) const { return boson_.at(g); }
  const PoleSet& poles() const { return poles_; }

 private:
  friend class TableBuilder;
  friend class Engine;
  GeneratorTable() = default;

  std::string label_;
  std::vector<Gen> gens_;
  std::map<std::string, int> by_name_;
  std::vector<std::vector<Scalar>> pair2_;
  std::vector<std::vector<LinGen>> pair1_;
  std::vector<bool> boson_;
  PoleSet poles_;

  struct KeyHash {
    size_t operator()(const std::vector<int>& v) const noexcept;
  };
  mutable std::mutex cache_mu_;
  mutable std::unordered_map<std::vector<int>, Terms, KeyHash> cache_;
};

class TableBuilder {
 public:
  explicit TableBuilder(std::string label);
  int add(const std::string& name, int twice_weight);
  // Sets the symmetric second-order pole.
  TableBuilder& pair2(const std::string& a, const std::string& b, const Scalar& s);
  // Sets a(z)b(w) first-order pole to v and b(z)a(w) to -v.
  TableBuilder& pair1(const std::string& a, const std::string& b, const LinGen& v);
  TableBuilder& pole(const UPoly& f);
  // Validates weights and skew-symmetry, then freezes.
  TablePtr build();
  int index(const std::string& name) const;

 private:
  std::shared_ptr<GeneratorTable> t_;
};

class FieldState {
 public:
  FieldState() = default;
  explicit FieldState(TablePtr t) : table_(std::move(t)) {}
  FieldState(TablePtr t, Terms terms);

  static FieldState one(TablePtr t);
  static FieldState scalar(TablePtr t, const Scalar& s);
  static FieldState gen(TablePtr t, const std::string& name, int der = 0);
  static FieldState sym(TablePtr t, Sym s);
  // Canonical form of the right-nested product of arbitrary (unsorted) symbols.
  static FieldState nested(TablePtr t, const std::vector<Sym>& word, const Scalar& c = Scalar(1));

  const TablePtr& table() const { return table_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Mono& m) const;
  // Coefficient of the vacuum.
  Scalar constant() const { return coeff(Mono{}); }

  FieldState operator-() const;
  FieldState& operator+=(const FieldState& o);
  FieldState& operator-=(const FieldState& o);
  FieldState& operator*=(const Scalar& s);
  friend FieldState operator+(FieldState a, const FieldState& b) { return a += b; }
  friend FieldState operator-(FieldState a, const FieldState& b) { return a -= b; }
  friend FieldState operator*(const Scalar& s, FieldState a) { return a *= s; }
  friend FieldState operator*(FieldState a, const Scalar& s) { return a *= s; }
  friend bool operator==(const FieldState& a, const FieldState& b);
  friend bool operator!=(const FieldState& a, const FieldState& b) { return !(a == b); }

  // Term grammar rendering.
  std::string str() const;
  // Distinct twice-weights of the monomials present.
  std::vector<int> twice_weights() const;
  bool homogeneous() const { return twice_weights().size() <= 1; }

 private:
  TablePtr table_;
  Terms terms_;
};

int twice_weight(const GeneratorTable& t, const Mono& m);
std::string mono_str(const GeneratorTable& t, const Mono& m);

FieldState normal_order(const FieldState& a, const FieldState& b);
// Right-nested product of several states in the given order.
FieldState normal_order(const std::vector<FieldState>& factors);
FieldState derive(const FieldState& a, int times = 1);
FieldState nth_product(const FieldState& a, int n, const FieldState& b);
// All nonnegative products a_(n)b, index n, trailing zeros dropped.
std::vector<FieldState> ope(const FieldState& a, const FieldState& b);
FieldState canonical_form(const FieldState& a);
FieldState parse_field(const TablePtr& t, const std::string& text);

// Image of a under the vertex algebra map fixed by generator images.
FieldState substitute(const FieldState& a, const TablePtr& target,
                      const std::vector<FieldState>& generator_images);

// Momentum-twisted action on a Heisenberg Fock module: mom[g] is the
// eigenvalue of g_(0) on the highest-weight vector (zero for non-bosons).
// Words are the body acting on that vector.
Terms module_nth_product(const GeneratorTable& t, const std::vector<Scalar>& mom, const Mono& a,
                         int n, const Mono& body);
Terms module_normal_order(const GeneratorTable& t, const std::vector<Scalar>& mom, const Mono& a,
                          const Mono& body);

void require_same_table(const FieldState& a, const FieldState& b);

}  // namespace walg
