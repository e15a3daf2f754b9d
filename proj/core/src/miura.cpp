#include "walg/miura.hpp"

#include <map>
#include <optional>
#include <set>

#include "walg/linsolve.hpp"
#include "walg/wakimoto.hpp"

namespace walg {

// ---- matrices ------------------------------------------------------------------

FieldMatrix FieldMatrix::zero(const TablePtr& t, int n) { return FieldMatrix{n, std::vector<FieldState>(n * n, FieldState(t))}; }

FieldMatrix FieldMatrix::identity(const TablePtr& t, int n) {
  FieldMatrix m = zero(t, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = FieldState::one(t);
  return m;
}

FieldMatrix FieldMatrix::scalar(const FieldState& f) { return FieldMatrix{1, {f}}; }

bool FieldMatrix::is_zero() const {
  for (const auto& x : e)
    if (!x.is_zero()) return false;
  return true;
}

FieldMatrix& FieldMatrix::operator+=(const FieldMatrix& o) {
  if (o.n != n) throw Error(ErrorCode::ShapeMismatch, "matrix sizes differ");
  for (size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
  return *this;
}

std::string FieldMatrix::str() const {
  if (n == 1) return e[0].str();
  std::string s = "[";
  for (int i = 0; i < n; ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < n; ++j) s += (j ? ", " : "") + at(i, j).str();
  }
  return s + "]";
}

// ---- operators ---------------------------------------------------------------------

MiuraOperator MiuraOperator::constant(const FieldMatrix& a, const Scalar& c) {
  return MiuraOperator{a.e.at(0).table(), c, {a}};
}

MiuraOperator MiuraOperator::first_order(const FieldMatrix& a, const Scalar& c) {
  const TablePtr& t = a.e.at(0).table();
  return MiuraOperator{t, c, {a, FieldMatrix::identity(t, a.n)}};
}

FieldMatrix MiuraOperator::coeff(int i) const {
  if (i < 0 || i > order()) return FieldMatrix::zero(table, size());
  return coeffs[i];
}

namespace {

Rational binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rational r = 1;
  for (int t = 0; t < k; ++t) r = r * (n - t) / (t + 1);
  return r;
}

}  // namespace

MiuraOperator opmul(const MiuraOperator& p, const MiuraOperator& q) {
  if (p.table != q.table) throw Error(ErrorCode::MixedTables, "Miura operators over different tables");
  if (p.c != q.c) throw Error(ErrorCode::InvalidArgument, "Miura operators with different dhat constants");
  if (p.size() != q.size()) throw Error(ErrorCode::ShapeMismatch, "Miura matrix sizes differ");
  const int n = p.size();
  MiuraOperator r{p.table, p.c, std::vector<FieldMatrix>(p.order() + q.order() + 1, FieldMatrix::zero(p.table, n))};
  for (int i = 0; i <= p.order(); ++i) {
    const FieldMatrix& a = p.coeffs[i];
    if (a.is_zero()) continue;
    for (int j = 0; j <= q.order(); ++j) {
      const FieldMatrix& b = q.coeffs[j];
      if (b.is_zero()) continue;
      for (int s = 0; s <= i; ++s) {
        Scalar f = Scalar(binom(i, s)) * p.c.pow(s);
        if (f.is_zero()) continue;
        FieldMatrix& out = r.coeffs[i + j - s];
        for (int x = 0; x < n; ++x)
          for (int m = 0; m < n; ++m) {
            if (a.at(x, m).is_zero()) continue;
            for (int y = 0; y < n; ++y) {
              if (b.at(m, y).is_zero()) continue;
              out.at(x, y) += f * normal_order(a.at(x, m), derive(b.at(m, y), s));
            }
          }
      }
    }
  }
  return r;
}

MiuraOperator opmul(const std::vector<MiuraOperator>& factors) {
  if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "empty Miura product");
  MiuraOperator r = factors.back();
  for (size_t i = factors.size() - 1; i-- > 0;) r = opmul(factors[i], r);
  return r;
}

// ---- principal ---------------------------------------------------------------------

TablePtr principal_table(int N) {
  TableBuilder tb("principal_gl" + std::to_string(N));
  for (int i = 1; i <= N; ++i) tb.add("h" + std::to_string(i), 2);
  for (int i = 1; i <= N; ++i) tb.pair2("h" + std::to_string(i), "h" + std::to_string(i), Scalar::k() + Scalar(N));
  tb.pole(UPoly::linear(1, N));
  return tb.build();
}

std::vector<FieldState> principal_generators(const TablePtr& t, const std::vector<std::string>& names,
                                             const Scalar& c) {
  std::vector<MiuraOperator> f;
  for (const auto& n : names) f.push_back(MiuraOperator::first_order(FieldMatrix::scalar(FieldState::gen(t, n)), c));
  const int N = static_cast<int>(names.size());
  if (N == 0) return {FieldState::one(t)};
  MiuraOperator L = opmul(f);
  std::vector<FieldState> w;
  for (int i = 0; i <= N; ++i) w.push_back(L.coeff(N - i).e[0]);
  return w;
}

std::vector<FieldState> principal_generators(int N) {
  TablePtr t = principal_table(N);
  std::vector<std::string> names;
  for (int i = 1; i <= N; ++i) names.push_back("h" + std::to_string(i));
  return principal_generators(t, names, Scalar::k() + Scalar(N - 1));
}

FieldState classical_shadow(const FieldState& f) {
  size_t len = 0;
  for (const auto& [m, c] : f.terms()) len = std::max(len, m.size());
  Terms top;
  for (const auto& [m, c] : f.terms())
    if (m.size() == len) add_to(top, m, c);
  return FieldState(f.table(), top);
}

FieldState elementary_symmetric(const TablePtr& t, const std::vector<std::string>& names, int i) {
  FieldState out(t);
  const int n = static_cast<int>(names.size());
  if (i == 0) return FieldState::one(t);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != i) continue;
    std::vector<Sym> word;
    for (int b = 0; b < n; ++b)
      if (mask & (1u << b)) word.push_back(Sym{t->index(names[b]), 0});
    out += FieldState::nested(t, word);
  }
  return out;
}

// ---- rectangular ---------------------------------------------------------------------

namespace {

std::string rect_name(int t, int i, int j) {
  return "e[" + std::to_string(t) + "," + std::to_string(i) + "," + std::to_string(j) + "]";
}

LinGen lin(const std::map<int, Scalar>& m) {
  LinGen l;
  for (const auto& [g, s] : m)
    if (!s.is_zero()) l.gens.emplace_back(g, s);
  return l;
}

}  // namespace

TablePtr rectangular_table(int n, int l) {
  TableBuilder tb("rectangular_" + std::to_string(n) + "x" + std::to_string(l));
  for (int t = 1; t <= l; ++t)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) tb.add(rect_name(t, i, j), 2);
  Scalar K = Scalar::k() + Scalar(n * (l - 1));
  for (int t = 1; t <= l; ++t)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int a = 1; a <= n; ++a)
          for (int b = 1; b <= n; ++b) {
            int x = tb.index(rect_name(t, i, j)), y = tb.index(rect_name(t, a, b));
            if (x > y) continue;
            Scalar p2 = (j == a && b == i ? K : Scalar()) + (i == j && a == b ? Scalar(1) : Scalar());
            if (!p2.is_zero()) tb.pair2(rect_name(t, i, j), rect_name(t, a, b), p2);
            if (x == y) continue;
            std::map<int, Scalar> br;
            if (j == a) br[tb.index(rect_name(t, i, b))] += Scalar(1);
            if (b == i) br[tb.index(rect_name(t, a, j))] -= Scalar(1);
            LinGen lg = lin(br);
            if (!lg.is_zero()) tb.pair1(rect_name(t, i, j), rect_name(t, a, b), lg);
          }
  tb.pole(UPoly::linear(1, n * (l - 1)));
  tb.pole(UPoly::linear(1, n * l));
  return tb.build();
}

FieldMatrix rectangular_matrix(const TablePtr& t, int n, int col) {
  FieldMatrix m = FieldMatrix::zero(t, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.at(i - 1, j - 1) = FieldState::gen(t, rect_name(col, j, i));
  return m;
}

std::vector<FieldMatrix> rectangular_generators(const TablePtr& t, int n, const std::vector<int>& cols,
                                                const Scalar& c) {
  if (cols.empty()) return {FieldMatrix::identity(t, n)};
  std::vector<MiuraOperator> f;
  for (int col : cols) f.push_back(MiuraOperator::first_order(rectangular_matrix(t, n, col), c));
  MiuraOperator L = opmul(f);
  const int l = static_cast<int>(cols.size());
  std::vector<FieldMatrix> w;
  for (int i = 0; i <= l; ++i) w.push_back(L.coeff(l - i));
  return w;
}

std::vector<FieldMatrix> rectangular_generators(int n, int l) {
  std::vector<int> cols;
  for (int t = 1; t <= l; ++t) cols.push_back(t);
  return rectangular_generators(rectangular_table(n, l), n, cols, Scalar::k() + Scalar(n * (l - 1)));
}

// ---- Levi currents and the subregular family ---------------------------------------------

namespace {

std::string levi_name(int i, int j) {
  return i == j ? "h" + std::to_string(i) : "e" + std::to_string(i) + std::to_string(j);
}

}  // namespace

TablePtr levi_current_table(const Grading& g, const std::string& label) {
  const int N = g.N;
  std::vector<std::pair<int, int>> basis;
  for (int i = 1; i <= N; ++i) basis.emplace_back(i, i);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i == j) continue;
      Root r = i < j ? Root{i, j} : Root{j, i};
      if (g.twice_degree(r) == 0) basis.emplace_back(i, j);
    }
  TableBuilder tb(label);
  for (const auto& [i, j] : basis) tb.add(levi_name(i, j), 2);
  for (size_t x = 0; x < basis.size(); ++x)
    for (size_t y = x; y < basis.size(); ++y) {
      GlElem u = GlElem::unit(basis[x].first, basis[x].second);
      GlElem v = GlElem::unit(basis[y].first, basis[y].second);
      Scalar p2 = lift_form(g, true, u, v);
      std::string a = levi_name(basis[x].first, basis[x].second), b = levi_name(basis[y].first, basis[y].second);
      if (!p2.is_zero()) tb.pair2(a, b, p2);
      if (x == y) continue;
      std::map<int, Scalar> br;
      const GlElem uv = bracket(u, v);
      for (const auto& [ij, s] : uv.entries()) br[tb.index(levi_name(ij.first, ij.second))] += s;
      LinGen lg = lin(br);
      if (!lg.is_zero()) tb.pair1(a, b, lg);
    }
  tb.pole(UPoly::linear(1, N));
  return tb.build();
}

Grading subregular_grading(int N) {
  std::vector<int> q{2};
  for (int i = 3; i <= N; ++i) q.push_back(1);
  return Pyramid::from_columns(q).grading();
}

SubregularFields subregular_generators(int N, int N1) {
  if (N1 < 2 || N1 > N)
    throw Error(ErrorCode::BadSplit, "subregular split needs 2 <= N1 <= N, got N1 = " + std::to_string(N1));
  SubregularFields s;
  s.N = N;
  s.N1 = N1;
  s.table = levi_current_table(subregular_grading(N), "subregular_gl" + std::to_string(N));
  s.c = Scalar::k() + Scalar(N - 1);
  const TablePtr& t = s.table;
  auto h = [&](int i) { return FieldState::gen(t, levi_name(i, i)); };
  auto sum = [&](int a, int b) {
    FieldState x(t);
    for (int i = a; i <= b; ++i) x += h(i);
    return x;
  };
  auto first = [&](const FieldState& a) { return MiuraOperator::first_order(FieldMatrix::scalar(a), s.c); };
  auto lowering = [&](int n) {
    MiuraOperator L = MiuraOperator::constant(FieldMatrix::scalar(FieldState::gen(t, "e21")), s.c);
    std::vector<MiuraOperator> f;
    for (int i = n; i >= 3; --i) f.push_back(first(h(1) - h(i)));
    f.push_back(L);
    return opmul(f).coeff(0).e[0];
  };
  s.Z = sum(1, N);
  s.H = h(1) - Scalar(Rational(1, N)) * s.Z;
  s.E = FieldState::gen(t, "e12");
  s.F = lowering(N);
  s.Z1 = sum(1, N1);
  s.H1 = h(1) - Scalar(Rational(1, N1)) * s.Z1;
  s.E1 = s.E;
  s.F1 = lowering(N1);

  const int N2 = N - N1;
  s.W = {FieldState::one(t)};
  if (N2 > 0) {
    std::vector<MiuraOperator> f;
    for (int i = N; i > N1; --i) f.push_back(first(-h(i)));
    MiuraOperator L = opmul(f);
    for (int i = 1; i <= N2; ++i) s.W.push_back(L.coeff(N2 - i).e[0]);
  }
  s.P = {FieldState::one(t)};
  for (int i = 1; i <= N2; ++i) {
    std::vector<MiuraOperator> f(i - 1, first(-h(1)));
    f.push_back(MiuraOperator::constant(FieldMatrix::scalar(h(1)), s.c));
    s.P.push_back(opmul(f).coeff(0).e[0]);
  }
  return s;
}

// ---- Virasoro ---------------------------------------------------------------------------

namespace {

// Solves r0 + sum_j x_j cols[j] = 0 coefficientwise; unknowns whose column
// vanishes identically are left unset.
std::vector<std::optional<Scalar>> solve_fields(const std::vector<FieldState>& r0,
                                                const std::vector<std::vector<FieldState>>& cols) {
  std::vector<size_t> live;
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& f : cols[j])
      if (!f.is_zero()) {
        live.push_back(j);
        break;
      }
  std::vector<std::vector<Scalar>> A;
  std::vector<Scalar> b;
  for (size_t i = 0; i < r0.size(); ++i) {
    std::set<Mono, MonoLess> monos;
    for (const auto& [m, s] : r0[i].terms()) monos.insert(m);
    for (size_t j : live)
      for (const auto& [m, s] : cols[j][i].terms()) monos.insert(m);
    for (const Mono& m : monos) {
      std::vector<Scalar> row;
      for (size_t j : live) row.push_back(cols[j][i].coeff(m));
      A.push_back(row);
      b.push_back(-r0[i].coeff(m));
    }
  }
  std::vector<std::optional<Scalar>> out(cols.size());
  if (live.empty()) {
    for (const Scalar& x : b)
      if (!x.is_zero()) throw Error(ErrorCode::NoSolution, "inconsistent constant conditions");
    return out;
  }
  auto x = solve_linear(A, b);
  for (size_t j = 0; j < live.size(); ++j) out[live[j]] = x[j];
  return out;
}

std::vector<FieldState> diff(const std::vector<FieldState>& a, const std::vector<FieldState>& b) {
  std::vector<FieldState> r;
  for (size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
  return r;
}

}  // namespace

VirasoroResult virasoro_extraction() {
  TablePtr t = principal_table(2);
  auto W = principal_generators(t, {"h1", "h2"}, Scalar::k() + Scalar(1));
  const FieldState X1 = normal_order(W[1], W[1]), X2 = derive(W[1]), X3 = W[2];
  auto T_of = [&](const Scalar& a, const Scalar& b, const Scalar& c) { return a * X1 + b * X2 + c * X3; };
  std::vector<FieldState> gens{FieldState::gen(t, "h1"), FieldState::gen(t, "h2")};

  // Translation and weight on the generators, and W1 primary; all linear in
  // (a, b, c).  Without the last condition D(W1) only shifts the central charge.
  auto conditions = [&](const Scalar& a, const Scalar& b, const Scalar& c) {
    FieldState T = T_of(a, b, c);
    std::vector<FieldState> r;
    for (const auto& h : gens) {
      r.push_back(nth_product(T, 0, h) - derive(h));
      r.push_back(nth_product(T, 1, h) - h);
    }
    r.push_back(nth_product(T, 2, W[1]));
    return r;
  };
  auto r0 = conditions(0, 0, 0);
  std::vector<std::vector<FieldState>> cols{diff(conditions(1, 0, 0), r0), diff(conditions(0, 1, 0), r0),
                                            diff(conditions(0, 0, 1), r0)};
  auto x = solve_fields(r0, cols);
  VirasoroResult v;
  v.report = Report("miura.virasoro");
  v.report.input("N", "2").input("ansatz", "a*NO(W1,W1) + b*D(W1) + c*W2");
  v.report.record("normalization", "W1 primary of weight 1");
  if (!x[0] || !x[1] || !x[2]) throw Error(ErrorCode::NonUniqueSolution, "Virasoro conditions leave a coefficient free");
  v.a = *x[0];
  v.b = *x[1];
  v.c = *x[2];
  v.T = T_of(v.a, v.b, v.c);

  auto ope_tt = ope(v.T, v.T);
  auto pole = [&](size_t n) { return n < ope_tt.size() ? ope_tt[n] : FieldState(t); };
  FieldState c4 = pole(3);
  v.central_charge = Scalar(2) * c4.constant();
  Report& r = v.report;
  r.expect(c4 == FieldState::scalar(t, c4.constant()), "T_(3)T", c4.str());
  r.expect(pole(2).is_zero(), "T_(2)T", pole(2).str());
  r.expect(pole(1) == Scalar(2) * v.T, "T_(1)T", pole(1).str());
  r.expect(pole(0) == derive(v.T), "T_(0)T", pole(0).str());
  r.expect(ope_tt.size() <= 4, "T_(n)T, n >= 4", std::to_string(ope_tt.size()) + " products");
  r.note("T", v.T.str());
  r.record("a", v.a.str()).record("b", v.b.str()).record("c", v.c.str());
  r.record("central_charge", v.central_charge.str());
  return v;
}

}  // namespace walg
