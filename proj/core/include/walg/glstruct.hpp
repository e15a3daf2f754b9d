#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walg/report.hpp"
#include "walg/scalar.hpp"

namespace walg {

// Element of gl_N as a sparse matrix, indices 1-based.
class GlElem {
 public:
  using Entries = std::map<std::pair<int, int>, Scalar>;

  GlElem() = default;
  static GlElem unit(int i, int j, const Scalar& s = Scalar(1));

  const Entries& entries() const { return e_; }
  Scalar entry(int i, int j) const;
  bool is_zero() const { return e_.empty(); }
  void add(int i, int j, const Scalar& s);

  GlElem& operator+=(const GlElem& o);
  GlElem& operator-=(const GlElem& o);
  GlElem& operator*=(const Scalar& s);
  friend GlElem operator+(GlElem a, const GlElem& b) { return a += b; }
  friend GlElem operator-(GlElem a, const GlElem& b) { return a -= b; }
  friend GlElem operator*(const Scalar& s, GlElem a) { return a *= s; }
  friend bool operator==(const GlElem& a, const GlElem& b) { return a.e_ == b.e_; }
  friend bool operator!=(const GlElem& a, const GlElem& b) { return !(a == b); }

  std::string str() const;  // "e[i,j]" terms

 private:
  Entries e_;
};

GlElem matmul(const GlElem& a, const GlElem& b);
GlElem bracket(const GlElem& a, const GlElem& b);
Scalar trace(const GlElem& a);
Scalar trace_form(const GlElem& a, const GlElem& b);
// Killing-type form of a Levi gl_{s1} x ... x gl_{sr} (consecutive blocks):
// sum over blocks of 2 s tr(uv) - 2 tr(u) tr(v) on the block parts.
Scalar levi_killing(const GlElem& a, const GlElem& b, const std::vector<int>& blocks);

// Root eps_i - eps_j, i != j.
struct Root {
  int i = 0;
  int j = 0;
  bool positive() const { return i < j; }
  int height() const { return j - i; }
  GlElem elem() const { return GlElem::unit(i, j); }
  friend bool operator==(const Root& a, const Root& b) { return a.i == b.i && a.j == b.j; }
  friend bool operator<(const Root& a, const Root& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  }
  std::string str() const;  // "i,j"
};

std::vector<Root> positive_roots(int N);
// (eps_a - eps_b | eps_c - eps_d) for the trace form.
int root_pairing(const Root& a, const Root& b);
// Coefficient of e_gamma in [e_alpha, e_beta].
Scalar structure_constant(const Root& alpha, const Root& beta, const Root& gamma);

// Good grading of gl_N by simple-root degrees, together with its nilpotent f.
struct Grading {
  int N = 1;
  std::vector<int> twice_deg;  // twice the degree of alpha_1..alpha_{N-1}
  GlElem f;

  int twice_degree(const Root& r) const;
  bool in_pi0(int s) const { return twice_deg.at(s - 1) == 0; }
  std::vector<int> pi0() const;
  std::vector<int> pi_half() const;
  std::vector<int> pi_one() const;
  std::vector<int> pi_positive() const;
  // chi(x) = tr(f x).
  Scalar chi(const Root& r) const { return f.entry(r.j, r.i); }
};

// [alpha] for a simple root index s of positive degree.
struct RootClass {
  int alpha = 0;
  std::vector<Root> members;
};

std::vector<RootClass> root_classes(const Grading& g);
// Positive roots of positive degree whose support holds exactly one simple
// root of positive degree.
std::vector<Root> indecomposable_roots(const Grading& g);

struct LevelMap {
  int N = 0, N1 = 0, N2 = 0;
  Scalar k, k1, k2;
};

class Pyramid {
 public:
  static Pyramid from_columns(const std::vector<int>& q);
  static Pyramid parse(const std::string& columns);  // "1,3,2,1"

  const std::vector<int>& columns() const { return q_; }
  // Row lengths, top row first.
  const std::vector<int>& rows() const { return p_; }
  int size() const { return N_; }
  int height() const { return static_cast<int>(p_.size()); }
  int row(int box) const { return row_.at(box - 1); }
  int col(int box) const { return col_.at(box - 1); }
  int box(int row, int col) const;  // 0 when empty

  GlElem nilpotent() const;
  // Partition of f, nonincreasing.
  std::vector<int> jordan_type() const;
  std::vector<int> simple_degrees() const;
  Grading grading() const;

  std::string columns_str() const;

 private:
  std::vector<int> q_, p_, row_, col_;
  int N_ = 0;
};

struct PyramidSplit {
  Pyramid left, right;
  int after = 0;
  LevelMap levels;
  // Parent box of each child box (index 0 unused).
  std::vector<int> left_boxes, right_boxes;
};

PyramidSplit split_pyramid(const Pyramid& pi, int after);

std::vector<int> transpose_partition(const std::vector<int>& lambda);
// Dimension of the nilpotent orbit in gl_m with Jordan type lambda.
long orbit_dimension(const std::vector<int>& lambda);
// Jordan type of the block-diagonal part of a 0/1 chain nilpotent.
std::vector<int> levi_jordan_type(const GlElem& f, const std::vector<int>& blocks);

// Checks the Levi precondition and the dimension identity for the Levi with
// consecutive block sizes `blocks`.
Report induced_orbit_check(const Pyramid& pi, const std::vector<int>& blocks);
Report induced_orbit_check(const Pyramid& pi, int after);

enum class ClassicalType { SO, SP };

struct BCDPyramid {
  ClassicalType type = ClassicalType::SO;
  int n = 0, l = 0, N = 0, M = 0;
  // labels[r][c], rows top to bottom; 0 marks the center box.
  std::vector<std::vector<int>> labels;
  // Entries (i, j, sign) of f.
  struct FEntry {
    int i, j, sign;
  };
  std::vector<FEntry> f;
  int h_vee = 0;

  struct Split {
    int l1 = 0, l2 = 0, N1 = 0, N2 = 0;
    int gamma = 1, h_vee2 = 0;
    Scalar k1, k2;  // as functions of k
  };
  std::optional<Split> split;

  std::pair<int, int> position(int label) const;
};

const char* type_name(ClassicalType t);
ClassicalType parse_classical_type(const std::string& s);
int dual_coxeter(ClassicalType t, int N);
// Whether the signed matrix lies in so_N or sp_N for the symmetric numbering.
bool in_classical(ClassicalType t, const std::vector<BCDPyramid::FEntry>& x);
BCDPyramid bcd_pyramid(ClassicalType type, int n, int l, int l1 = 0);
Report bcd_check(const BCDPyramid& b);

std::string to_json(const Pyramid& p);
std::string to_json(const BCDPyramid& b);

}  // namespace walg
