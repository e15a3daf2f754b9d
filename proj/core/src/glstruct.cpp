#include "walg/glstruct.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace walg {

// ---- gl_N elements ---------------------------------------------------------

GlElem GlElem::unit(int i, int j, const Scalar& s) {
  GlElem g;
  g.add(i, j, s);
  return g;
}

Scalar GlElem::entry(int i, int j) const {
  auto it = e_.find({i, j});
  return it == e_.end() ? Scalar() : it->second;
}

void GlElem::add(int i, int j, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, fresh] = e_.try_emplace({i, j}, s);
  if (!fresh) {
    it->second += s;
    if (it->second.is_zero()) e_.erase(it);
  }
}

GlElem& GlElem::operator+=(const GlElem& o) {
  for (const auto& [ij, s] : o.e_) add(ij.first, ij.second, s);
  return *this;
}

GlElem& GlElem::operator-=(const GlElem& o) {
  for (const auto& [ij, s] : o.e_) add(ij.first, ij.second, -s);
  return *this;
}

GlElem& GlElem::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    e_.clear();
    return *this;
  }
  for (auto& [ij, v] : e_) v *= s;
  return *this;
}

std::string GlElem::str() const {
  if (e_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ij, s] : e_) {
    if (!first) os << " + ";
    first = false;
    if (!s.is_one()) os << (s.needs_parens() ? "(" + s.str() + ")" : s.str()) << "*";
    os << "e[" << ij.first << "," << ij.second << "]";
  }
  return os.str();
}

GlElem matmul(const GlElem& a, const GlElem& b) {
  GlElem r;
  for (const auto& [ij, x] : a.entries())
    for (const auto& [kl, y] : b.entries())
      if (ij.second == kl.first) r.add(ij.first, kl.second, x * y);
  return r;
}

GlElem bracket(const GlElem& a, const GlElem& b) { return matmul(a, b) - matmul(b, a); }

Scalar trace(const GlElem& a) {
  Scalar t;
  for (const auto& [ij, x] : a.entries())
    if (ij.first == ij.second) t += x;
  return t;
}

Scalar trace_form(const GlElem& a, const GlElem& b) { return trace(matmul(a, b)); }

Scalar levi_killing(const GlElem& a, const GlElem& b, const std::vector<int>& blocks) {
  Scalar total;
  int lo = 1;
  for (int s : blocks) {
    int hi = lo + s - 1;
    GlElem ab, bb;
    for (const auto& [ij, x] : a.entries())
      if (ij.first >= lo && ij.first <= hi && ij.second >= lo && ij.second <= hi)
        ab.add(ij.first, ij.second, x);
    for (const auto& [ij, x] : b.entries())
      if (ij.first >= lo && ij.first <= hi && ij.second >= lo && ij.second <= hi)
        bb.add(ij.first, ij.second, x);
    total += Scalar(2 * s) * trace_form(ab, bb) - Scalar(2) * trace(ab) * trace(bb);
    lo = hi + 1;
  }
  return total;
}

// ---- roots -----------------------------------------------------------------

std::string Root::str() const { return std::to_string(i) + "," + std::to_string(j); }

std::vector<Root> positive_roots(int N) {
  std::vector<Root> r;
  for (int h = 1; h < N; ++h)
    for (int i = 1; i + h <= N; ++i) r.push_back({i, i + h});
  return r;
}

int root_pairing(const Root& a, const Root& b) {
  auto d = [](int x, int y) { return x == y ? 1 : 0; };
  return d(a.i, b.i) - d(a.i, b.j) - d(a.j, b.i) + d(a.j, b.j);
}

Scalar structure_constant(const Root& alpha, const Root& beta, const Root& gamma) {
  return bracket(alpha.elem(), beta.elem()).entry(gamma.i, gamma.j);
}

// ---- gradings and classes --------------------------------------------------

int Grading::twice_degree(const Root& r) const {
  int lo = std::min(r.i, r.j), hi = std::max(r.i, r.j), s = 0;
  for (int t = lo; t < hi; ++t) s += twice_deg.at(t - 1);
  return r.i < r.j ? s : -s;
}

namespace {

std::vector<int> simple_with(const std::vector<int>& td, const std::function<bool(int)>& pred) {
  std::vector<int> out;
  for (size_t s = 0; s < td.size(); ++s)
    if (pred(td[s])) out.push_back(static_cast<int>(s) + 1);
  return out;
}

}  // namespace

std::vector<int> Grading::pi0() const {
  return simple_with(twice_deg, [](int d) { return d == 0; });
}
std::vector<int> Grading::pi_half() const {
  return simple_with(twice_deg, [](int d) { return d == 1; });
}
std::vector<int> Grading::pi_one() const {
  return simple_with(twice_deg, [](int d) { return d == 2; });
}
std::vector<int> Grading::pi_positive() const {
  return simple_with(twice_deg, [](int d) { return d > 0; });
}

std::vector<RootClass> root_classes(const Grading& g) {
  std::vector<RootClass> out;
  for (int s : g.pi_positive()) {
    RootClass c{s, {}};
    for (const Root& r : positive_roots(g.N)) {
      if (r.i > s || r.j <= s) continue;
      bool ok = true;
      for (int t = r.i; t < r.j && ok; ++t)
        if (t != s && !g.in_pi0(t)) ok = false;
      if (ok) c.members.push_back(r);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Root> indecomposable_roots(const Grading& g) {
  std::vector<Root> out;
  for (const Root& r : positive_roots(g.N)) {
    int count = 0;
    for (int t = r.i; t < r.j; ++t)
      if (!g.in_pi0(t)) ++count;
    if (count == 1) out.push_back(r);
  }
  return out;
}

// ---- pyramids --------------------------------------------------------------

Pyramid Pyramid::from_columns(const std::vector<int>& q) {
  if (q.empty()) throw Error(ErrorCode::InvalidArgument, "pyramid needs at least one column");
  for (int h : q)
    if (h <= 0) throw Error(ErrorCode::InvalidArgument, "column heights must be positive");
  Pyramid p;
  p.q_ = q;
  int R = *std::max_element(q.begin(), q.end());
  // Row r (1 = top) is present in column c when q_c >= R - r + 1.
  for (int r = 1; r <= R; ++r) {
    int first = -1, last = -1, count = 0;
    for (size_t c = 0; c < q.size(); ++c) {
      if (q[c] >= R - r + 1) {
        if (first < 0) first = static_cast<int>(c);
        last = static_cast<int>(c);
        ++count;
      }
    }
    if (last - first + 1 != count)
      throw Error(ErrorCode::NotUnimodal, "row " + std::to_string(r) + " is not a connected strip");
    p.p_.push_back(count);
  }
  for (size_t c = 0; c < q.size(); ++c) {
    for (int r = R - q[c] + 1; r <= R; ++r) {
      p.row_.push_back(r);
      p.col_.push_back(static_cast<int>(c) + 1);
    }
  }
  p.N_ = static_cast<int>(p.row_.size());
  return p;
}

Pyramid Pyramid::parse(const std::string& columns) {
  std::vector<int> q;
  std::stringstream ss(columns);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      q.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad column list '" + columns + "'");
    }
  }
  return from_columns(q);
}

int Pyramid::box(int row, int col) const {
  for (int i = 0; i < N_; ++i)
    if (row_[i] == row && col_[i] == col) return i + 1;
  return 0;
}

GlElem Pyramid::nilpotent() const {
  GlElem f;
  for (int j = 1; j <= N_; ++j) {
    int i = box(row(j), col(j) + 1);
    if (i) f.add(i, j, Scalar(1));
  }
  return f;
}

std::vector<int> Pyramid::jordan_type() const {
  std::vector<int> p = p_;
  std::sort(p.rbegin(), p.rend());
  return p;
}

std::vector<int> Pyramid::simple_degrees() const {
  std::vector<int> d;
  for (int i = 1; i < N_; ++i) d.push_back(col(i + 1) - col(i));
  return d;
}

Grading Pyramid::grading() const {
  Grading g;
  g.N = N_;
  for (int d : simple_degrees()) g.twice_deg.push_back(2 * d);
  g.f = nilpotent();
  return g;
}

std::string Pyramid::columns_str() const {
  std::string s;
  for (size_t c = 0; c < q_.size(); ++c) s += (c ? "," : "") + std::to_string(q_[c]);
  return s;
}

PyramidSplit split_pyramid(const Pyramid& pi, int after) {
  int ncol = static_cast<int>(pi.columns().size());
  if (after < 1 || after >= ncol)
    throw Error(ErrorCode::InvalidColumn, "split column " + std::to_string(after) +
                                              " outside 1.." + std::to_string(ncol - 1));
  const auto& q = pi.columns();
  PyramidSplit s{Pyramid::from_columns({q.begin(), q.begin() + after}),
                 Pyramid::from_columns({q.begin() + after, q.end()}),
                 after,
                 {},
                 {0},
                 {0}};
  int N = pi.size(), N1 = s.left.size(), N2 = s.right.size();
  for (int i = 1; i <= N1; ++i) s.left_boxes.push_back(i);
  for (int i = 1; i <= N2; ++i) s.right_boxes.push_back(N1 + i);
  Scalar k = Scalar::k();
  s.levels = {N, N1, N2, k, k + Scalar(N - N1), k + Scalar(N - N2)};
  return s;
}

// ---- induced orbits ----------------------------------------------------------

std::vector<int> transpose_partition(const std::vector<int>& lambda) {
  std::vector<int> t;
  int m = lambda.empty() ? 0 : *std::max_element(lambda.begin(), lambda.end());
  for (int i = 1; i <= m; ++i) {
    int c = 0;
    for (int x : lambda)
      if (x >= i) ++c;
    t.push_back(c);
  }
  return t;
}

long orbit_dimension(const std::vector<int>& lambda) {
  long m = 0, sq = 0;
  for (int x : lambda) m += x;
  for (int x : transpose_partition(lambda)) sq += static_cast<long>(x) * x;
  return m * m - sq;
}

namespace {

std::vector<int> block_of(const std::vector<int>& blocks) {
  std::vector<int> b{-1};
  for (size_t i = 0; i < blocks.size(); ++i)
    for (int t = 0; t < blocks[i]; ++t) b.push_back(static_cast<int>(i));
  return b;
}

// Chain lengths of the block-diagonal part of f, grouped per block.
std::vector<std::vector<int>> block_chains(const GlElem& f, const std::vector<int>& blocks) {
  auto blk = block_of(blocks);
  int N = static_cast<int>(blk.size()) - 1;
  std::vector<int> next(N + 1, 0), has_prev(N + 1, 0);
  for (const auto& [ij, x] : f.entries()) {
    auto [i, j] = ij;
    if (blk.at(i) != blk.at(j)) continue;
    next[j] = i;
    has_prev[i] = 1;
  }
  std::vector<std::vector<int>> out(blocks.size());
  for (int s = 1; s <= N; ++s) {
    if (has_prev[s]) continue;
    int len = 0;
    for (int t = s; t; t = next[t]) ++len;
    out[blk[s]].push_back(len);
  }
  for (auto& v : out) std::sort(v.rbegin(), v.rend());
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

std::vector<int> levi_jordan_type(const GlElem& f, const std::vector<int>& blocks) {
  std::vector<int> all;
  for (auto& v : block_chains(f, blocks)) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.rbegin(), all.rend());
  return all;
}

Report induced_orbit_check(const Pyramid& pi, const std::vector<int>& blocks) {
  Report r("glstruct.induced_orbit");
  r.input("columns", pi.columns_str()).input("levi_blocks", join_ints(blocks));
  int total = 0;
  for (int b : blocks) {
    if (b <= 0) throw Error(ErrorCode::InvalidArgument, "Levi block sizes must be positive");
    total += b;
  }
  if (total != pi.size())
    throw Error(ErrorCode::InvalidArgument, "Levi blocks do not sum to " + std::to_string(pi.size()));

  Grading g = pi.grading();
  std::vector<int> cut;
  for (size_t i = 0, acc = 0; i + 1 < blocks.size(); ++i) {
    acc += blocks[i];
    cut.push_back(static_cast<int>(acc));
  }
  r.note("removed_simple_roots", join_ints(cut));
  for (int s : cut) {
    if (g.twice_deg.at(s - 1) != 2) {
      r.status = Status::NotApplicable;
      r.note("degree_alpha_" + std::to_string(s), std::to_string(g.twice_deg[s - 1] / 2));
    }
  }
  if (r.status == Status::NotApplicable) return r;

  long dim_g = orbit_dimension(pi.jordan_type());
  long dim_l = 0, dim_u = 0;
  auto chains = block_chains(g.f, blocks);
  for (size_t b = 0; b < blocks.size(); ++b) {
    dim_l += orbit_dimension(chains[b]);
    r.note("levi_jordan_type_" + std::to_string(b + 1), join_ints(chains[b]));
    for (size_t c = b + 1; c < blocks.size(); ++c) dim_u += static_cast<long>(blocks[b]) * blocks[c];
  }
  r.record("dim_orbit", std::to_string(dim_g))
      .record("dim_levi_orbit", std::to_string(dim_l))
      .record("dim_nilradical", std::to_string(dim_u));
  r.expect(dim_g == dim_l + 2 * dim_u, "dimension_identity",
           std::to_string(dim_g) + " != " + std::to_string(dim_l) + " + 2*" + std::to_string(dim_u));
  return r;
}

Report induced_orbit_check(const Pyramid& pi, int after) {
  auto s = split_pyramid(pi, after);
  Report r = induced_orbit_check(pi, std::vector<int>{s.left.size(), s.right.size()});
  r.input("after", std::to_string(after));
  return r;
}

// ---- rectangular BCD pyramids ----------------------------------------------

const char* type_name(ClassicalType t) { return t == ClassicalType::SO ? "so" : "sp"; }

ClassicalType parse_classical_type(const std::string& s) {
  if (s == "so") return ClassicalType::SO;
  if (s == "sp") return ClassicalType::SP;
  throw Error(ErrorCode::ParseError, "classical type must be so or sp, got '" + s + "'");
}

int dual_coxeter(ClassicalType t, int N) { return t == ClassicalType::SO ? N - 2 : N / 2 + 1; }

namespace {

int sgn(int x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Sign relating the coefficient of e_{a,b} to that of e_{-b,-a}.
int partner_factor(ClassicalType t, int a, int b) {
  return t == ClassicalType::SO ? -1 : -sgn(a) * sgn(b);
}

bool rect_partition_ok(ClassicalType t, int n, int width) {
  // Orthogonal: even parts have even multiplicity.  Symplectic: odd parts do.
  if (t == ClassicalType::SO) return !(width % 2 == 0 && n % 2 == 1);
  return !(width % 2 == 1 && n % 2 == 1);
}

}  // namespace

bool in_classical(ClassicalType t, const std::vector<BCDPyramid::FEntry>& x) {
  std::map<std::pair<int, int>, int> m;
  for (const auto& e : x) m[{e.i, e.j}] += e.sign;
  for (const auto& [ab, v] : m) {
    auto it = m.find({-ab.second, -ab.first});
    int w = it == m.end() ? 0 : it->second;
    if (w != partner_factor(t, ab.first, ab.second) * v) return false;
  }
  return true;
}

std::pair<int, int> BCDPyramid::position(int label) const {
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < l; ++c)
      if (labels[r][c] == label) return {r + 1, c + 1};
  throw Error(ErrorCode::InvalidArgument, "no box labelled " + std::to_string(label));
}

BCDPyramid bcd_pyramid(ClassicalType type, int n, int l, int l1) {
  if (n <= 0 || l <= 0) throw Error(ErrorCode::InvalidShape, "height and width must be positive");
  BCDPyramid b;
  b.type = type;
  b.n = n;
  b.l = l;
  b.N = n * l;
  b.M = b.N / 2;
  if (type == ClassicalType::SP && b.N % 2)
    throw Error(ErrorCode::InvalidShape, "sp needs an even box count, got " + std::to_string(b.N));
  if (!rect_partition_ok(type, n, l))
    throw Error(ErrorCode::InvalidShape, "no sign choice puts f in " + std::string(type_name(type)) +
                                             "_" + std::to_string(b.N));
  b.labels.assign(n, std::vector<int>(l, 0));
  for (int t = 0; t < b.N; ++t) {
    int label = t < b.M ? t + 1 : (b.N % 2 && t == b.M ? 0 : -(b.N - t));
    b.labels[t % n][t / n] = label;
  }
  b.h_vee = dual_coxeter(type, b.N);

  // Edges in column order of their source; the first member of each mirror
  // pair gets +1 and its partner is forced.
  std::map<std::pair<int, int>, int> sign;
  for (int t = 0; t < b.N; ++t) {
    int r = t % n, c = t / n;
    if (c + 1 >= l) continue;
    int i = b.labels[r][c + 1], j = b.labels[r][c];
    if (sign.count({i, j})) continue;
    if (i == -j && j != 0) {
      // Self-paired edge; consistent only for sp.
      if (partner_factor(type, i, j) != 1)
        throw Error(ErrorCode::InvalidShape, "self-paired edge admits no sign");
      sign[{i, j}] = 1;
      continue;
    }
    sign[{i, j}] = 1;
    sign[{-j, -i}] = partner_factor(type, i, j);
  }
  for (int t = 0; t < b.N; ++t) {
    int r = t % n, c = t / n;
    if (c + 1 >= l) continue;
    int i = b.labels[r][c + 1], j = b.labels[r][c];
    b.f.push_back({i, j, sign.at({i, j})});
  }

  if (l1 > 0) {
    if (2 * l1 >= l)
      throw Error(ErrorCode::InvalidShape, "split needs 2*l1 < l, got l1 = " + std::to_string(l1));
    BCDPyramid::Split s;
    s.l1 = l1;
    s.l2 = l - 2 * l1;
    s.N1 = n * l1;
    s.N2 = n * s.l2;
    if (type == ClassicalType::SP && s.N2 % 2)
      throw Error(ErrorCode::InvalidShape, "middle block of sp split has odd size");
    if (!rect_partition_ok(type, n, s.l2))
      throw Error(ErrorCode::InvalidShape, "middle block is not a valid partition for its type");
    s.gamma = type == ClassicalType::SO ? 1 : 2;
    s.h_vee2 = dual_coxeter(type, s.N2);
    Scalar k = Scalar::k();
    s.k1 = (k + Scalar(b.h_vee)) / Scalar(s.gamma) - Scalar(s.N1);
    s.k2 = k + Scalar(b.h_vee - s.h_vee2);
    b.split = s;
  }
  return b;
}

Report bcd_check(const BCDPyramid& b) {
  Report r("glstruct.bcd");
  r.input("type", type_name(b.type))
      .input("n", std::to_string(b.n))
      .input("l", std::to_string(b.l))
      .input("l1", std::to_string(b.split ? b.split->l1 : 0));
  bool sym = true;
  for (int rr = 0; rr < b.n; ++rr)
    for (int c = 0; c < b.l; ++c)
      if (b.labels[rr][c] != -b.labels[b.n - 1 - rr][b.l - 1 - c]) sym = false;
  r.expect(sym, "central_symmetry", "numbering is not centrally symmetric");
  r.expect(in_classical(b.type, b.f), "f_membership", "f is not in the classical subalgebra");
  std::string signs;
  for (const auto& e : b.f)
    signs += (signs.empty() ? "" : " ") + std::string(e.sign > 0 ? "+" : "-") + "e[" +
             std::to_string(e.i) + "," + std::to_string(e.j) + "]";
  r.note("f", signs);
  r.record("N", std::to_string(b.N)).record("M", std::to_string(b.M));
  r.record("h_vee", std::to_string(b.h_vee));
  if (b.split) {
    const auto& s = *b.split;
    Scalar k = Scalar::k();
    Scalar lhs = k + Scalar(b.h_vee);
    Scalar mid = Scalar(s.gamma) * (s.k1 + Scalar(s.N1));
    Scalar rhs = s.k2 + Scalar(s.h_vee2);
    r.record("split", std::to_string(s.l1) + "," + std::to_string(s.l2) + "," + std::to_string(s.l1));
    r.record("N1", std::to_string(s.N1)).record("N2", std::to_string(s.N2));
    r.record("gamma", std::to_string(s.gamma)).record("h_vee2", std::to_string(s.h_vee2));
    r.record("k1", s.k1.str()).record("k2", s.k2.str());
    std::string g = s.gamma == 1 ? "" : std::to_string(s.gamma) + "*";
    r.record("relation", "k+" + std::to_string(b.h_vee) + " = " + g + "(k1+" + std::to_string(s.N1) +
                             ") = k2+" + std::to_string(s.h_vee2));
    r.expect(lhs == mid && mid == rhs, "level_relation", lhs.str() + ", " + mid.str() + ", " + rhs.str());
    // The removed simple root joins the last box of column l1 to the first
    // box of column l1+1, so it has degree one.
    r.record("removed_root_degree", "1");
  }
  return r;
}

// ---- JSON --------------------------------------------------------------------

std::string to_json(const Pyramid& p) {
  nlohmann::ordered_json j;
  j["columns"] = p.columns();
  j["rows"] = p.rows();
  j["N"] = p.size();
  nlohmann::ordered_json boxes = nlohmann::ordered_json::array();
  for (int i = 1; i <= p.size(); ++i)
    boxes.push_back({{"box", i}, {"row", p.row(i)}, {"col", p.col(i)}});
  j["boxes"] = boxes;
  j["simple_degrees"] = p.simple_degrees();
  Grading g = p.grading();
  j["pi0"] = g.pi0();
  j["pi1"] = g.pi_one();
  std::vector<std::string> f;
  for (const auto& [ij, x] : g.f.entries())
    f.push_back(std::to_string(ij.first) + "," + std::to_string(ij.second));
  j["f"] = f;
  j["jordan_type"] = p.jordan_type();
  return j.dump(2);
}

std::string to_json(const BCDPyramid& b) {
  nlohmann::ordered_json j;
  j["type"] = type_name(b.type);
  j["n"] = b.n;
  j["l"] = b.l;
  j["N"] = b.N;
  j["M"] = b.M;
  j["labels"] = b.labels;
  nlohmann::ordered_json f = nlohmann::ordered_json::array();
  for (const auto& e : b.f) f.push_back({{"i", e.i}, {"j", e.j}, {"sign", e.sign}});
  j["f"] = f;
  j["h_vee"] = b.h_vee;
  if (b.split) {
    const auto& s = *b.split;
    j["split"] = {{"l1", s.l1}, {"l2", s.l2}, {"N1", s.N1}, {"N2", s.N2},
                  {"gamma", s.gamma}, {"h_vee2", s.h_vee2}, {"k1", s.k1.str()}, {"k2", s.k2.str()}};
  }
  return j.dump(2);
}

}  // namespace walg
