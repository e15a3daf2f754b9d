#include "walg/wakimoto.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>
#include <sstream>

#include "walg/linsolve.hpp"

namespace walg {

// ---- Poly --------------------------------------------------------------------

Poly Poly::constant(int nvars, const Scalar& s) {
  Poly p(nvars);
  p.add_term(Exps(nvars, 0), s);
  return p;
}

Poly Poly::var(int nvars, int v) {
  Poly p(nvars);
  Exps e(nvars, 0);
  e.at(v) = 1;
  p.add_term(e, Scalar(1));
  return p;
}

void Poly::add_term(const Exps& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Scalar Poly::constant_term() const {
  auto it = t_.find(Exps(n_, 0));
  return it == t_.end() ? Scalar() : it->second;
}

bool Poly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.count(Exps(n_, 0))); }

bool Poly::uses_only(const std::vector<bool>& allowed) const {
  for (const auto& [e, c] : t_)
    for (int v = 0; v < n_; ++v)
      if (e[v] && !allowed.at(v)) return false;
  return true;
}

Poly& Poly::operator+=(const Poly& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [e, c] : t_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(std::max(a.n_, b.n_));
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      Poly::Exps e(ea);
      for (size_t v = 0; v < e.size(); ++v) e[v] += eb[v];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

Poly Poly::diff(int v) const {
  Poly r(n_);
  for (const auto& [e, c] : t_) {
    if (!e[v]) continue;
    Exps d(e);
    --d[v];
    r.add_term(d, c * Scalar(e[v]));
  }
  return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (!first) os << " + ";
    first = false;
    std::string mono;
    for (int v = 0; v < n_; ++v) {
      if (!e[v]) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(v);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      os << c.str();
    } else {
      if (!c.is_one()) os << (c.needs_parens() ? "(" + c.str() + ")" : c.str()) << "*";
      os << mono;
    }
  }
  return os.str();
}

// ---- DiffOp ------------------------------------------------------------------

Poly DiffOp::apply(const Poly& p) const {
  Poly r = mult * p;
  for (int v = 0; v < nvars(); ++v)
    if (!coeff[v].is_zero()) r += coeff[v] * p.diff(v);
  return r;
}

bool DiffOp::is_zero() const {
  if (!mult.is_zero()) return false;
  for (const auto& c : coeff)
    if (!c.is_zero()) return false;
  return true;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  for (int v = 0; v < nvars(); ++v) coeff[v] += o.coeff[v];
  mult += o.mult;
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  for (int v = 0; v < nvars(); ++v) coeff[v] -= o.coeff[v];
  mult -= o.mult;
  return *this;
}

DiffOp operator*(const Poly& p, const DiffOp& d) {
  DiffOp r(d.nvars());
  for (int v = 0; v < d.nvars(); ++v) r.coeff[v] = p * d.coeff[v];
  r.mult = p * d.mult;
  return r;
}

DiffOp operator*(const Scalar& s, const DiffOp& d) {
  DiffOp r(d);
  for (auto& c : r.coeff) c *= s;
  r.mult *= s;
  return r;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) {
  DiffOp r(a.nvars());
  for (int v = 0; v < a.nvars(); ++v) {
    DiffOp a0 = a, b0 = b;
    a0.mult = Poly(a.nvars());
    b0.mult = Poly(a.nvars());
    r.coeff[v] = a0.apply(b.coeff[v]) - b0.apply(a.coeff[v]);
  }
  DiffOp a0 = a, b0 = b;
  a0.mult = Poly(a.nvars());
  b0.mult = Poly(a.nvars());
  r.mult = a0.apply(b.mult) - b0.apply(a.mult);
  return r;
}

// ---- charts ------------------------------------------------------------------

int Chart::position(const Root& r) const {
  for (int p = 0; p < nvars(); ++p)
    if (roots[p] == r) return p;
  return -1;
}

std::vector<std::string> Chart::var_names() const {
  std::vector<std::string> n;
  for (const auto& r : roots) n.push_back("x[" + r.str() + "]");
  return n;
}

Chart make_chart(const Grading& g) {
  Chart c{g, {}};
  std::vector<Root> pos, zero;
  for (const Root& r : positive_roots(g.N)) (g.twice_degree(r) > 0 ? pos : zero).push_back(r);
  auto key = [&](const Root& r) { return std::make_tuple(g.twice_degree(r), r.height(), r.i, r.j); };
  std::sort(pos.begin(), pos.end(), [&](const Root& a, const Root& b) { return key(a) < key(b); });
  std::sort(zero.begin(), zero.end(), [&](const Root& a, const Root& b) { return key(a) < key(b); });
  c.roots = pos;
  c.roots.insert(c.roots.end(), zero.begin(), zero.end());
  return c;
}

std::string diffop_str(const Chart& c, const DiffOp& d) {
  auto names = c.var_names();
  std::string s;
  for (int v = 0; v < d.nvars(); ++v) {
    if (d.coeff[v].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + d.coeff[v].str(names) + ")*dd[" + c.roots[v].str() + "]";
  }
  if (!d.mult.is_zero()) s += (s.empty() ? "" : " + ") + d.mult.str(names);
  return s.empty() ? "0" : s;
}

// ---- vector fields -------------------------------------------------------------

namespace {

using PMat = std::vector<Poly>;

PMat identity(int N, int R) {
  PMat m(N * N, Poly(R));
  for (int i = 0; i < N; ++i) m[i * N + i] = Poly::constant(R, Scalar(1));
  return m;
}

PMat mul(const PMat& a, const PMat& b, int N) {
  int R = a[0].nvars();
  PMat r(N * N, Poly(R));
  for (int i = 0; i < N; ++i)
    for (int l = 0; l < N; ++l) {
      if (a[i * N + l].is_zero()) continue;
      for (int j = 0; j < N; ++j)
        if (!b[l * N + j].is_zero()) r[i * N + j] += a[i * N + l] * b[l * N + j];
    }
  return r;
}

PMat constant_mat(const GlElem& a, int N, int R) {
  PMat m(N * N, Poly(R));
  for (const auto& [ij, s] : a.entries()) m[(ij.first - 1) * N + ij.second - 1] = Poly::constant(R, s);
  return m;
}

}  // namespace

Wakimoto::Wakimoto(const Grading& g) : chart_(make_chart(g)) {
  const int N = g.N, R = chart_.nvars();
  std::vector<PMat> fac, facinv;
  for (int p = 0; p < R; ++p) {
    PMat f = identity(N, R), fi = identity(N, R);
    const Root& r = chart_.roots[p];
    f[(r.i - 1) * N + r.j - 1] = -Poly::var(R, p);
    fi[(r.i - 1) * N + r.j - 1] = Poly::var(R, p);
    fac.push_back(f);
    facinv.push_back(fi);
  }
  // suffix[p] = fac[p+1] ... fac[R-1] and its inverse.
  std::vector<PMat> suffix(R + 1, identity(N, R)), suffix_inv(R + 1, identity(N, R));
  for (int p = R - 1; p >= 0; --p) {
    suffix[p] = p + 1 < R ? mul(fac[p + 1], suffix[p + 1], N) : identity(N, R);
    suffix_inv[p] = p + 1 < R ? mul(suffix_inv[p + 1], facinv[p + 1], N) : identity(N, R);
  }
  for (int p = 0; p < R; ++p)
    m_.push_back(mul(mul(suffix_inv[p], constant_mat(chart_.roots[p].elem(), N, R), N), suffix[p], N));
  if (R) {
    x_ = mul(fac[0], suffix[0], N);
    xinv_ = mul(suffix_inv[0], facinv[0], N);
  } else {
    x_ = xinv_ = identity(N, R);
  }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) left_.emplace(std::make_pair(i, j), solve_left(GlElem::unit(i, j)).op);
  for (int p = 0; p < R; ++p) {
    const Root& r = chart_.roots[p];
    PMat y(N * N, Poly(R));
    y[(r.i - 1) * N + r.j - 1] = Poly::constant(R, Scalar(1));
    right_.emplace(p, solve(y));
  }
}

DiffOp Wakimoto::solve(const std::vector<Poly>& upper) const {
  const int N = chart_.grading.N, R = chart_.nvars();
  std::vector<int> order(R);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return chart_.roots[a].height() < chart_.roots[b].height();
  });
  DiffOp d(R);
  std::vector<bool> done(R, false);
  for (int p : order) {
    const Root& g = chart_.roots[p];
    int idx = (g.i - 1) * N + g.j - 1;
    Poly c = upper[idx];
    for (int q = 0; q < R; ++q)
      if (q != p && done[q] && !m_[q][idx].is_zero()) c -= d.coeff[q] * m_[q][idx];
    d.coeff[p] = c;
    done[p] = true;
  }
  // The system is unitriangular; confirm the full matrix identity.
  PMat check(N * N, Poly(R));
  for (int q = 0; q < R; ++q)
    for (int e = 0; e < N * N; ++e)
      if (!m_[q][e].is_zero()) check[e] += d.coeff[q] * m_[q][e];
  for (int e = 0; e < N * N; ++e)
    if (check[e] != upper[e]) throw Error(ErrorCode::SingularSystem, "vector field system has no solution");
  return d;
}

Wakimoto::Solved Wakimoto::solve_left(const GlElem& a) const {
  const int N = chart_.grading.N, R = chart_.nvars();
  PMat y = mul(mul(xinv_, constant_mat(a, N, R), N), x_, N);
  PMat upper(N * N, Poly(R));
  std::vector<Poly> diag;
  for (int i = 0; i < N; ++i) {
    diag.push_back(y[i * N + i]);
    for (int j = i + 1; j < N; ++j) upper[i * N + j] = y[i * N + j];
  }
  return {solve(upper), diag};
}

DiffOp Wakimoto::left(const GlElem& a) const {
  DiffOp d(chart_.nvars());
  for (const auto& [ij, s] : a.entries()) d += s * left_.at(ij);
  return d;
}

DiffOp Wakimoto::twisted(const GlElem& a, const std::vector<Scalar>& lambda) const {
  Solved s = solve_left(a);
  for (int i = 0; i < N(); ++i) s.op.mult += s.diag[i] * lambda.at(i);
  return s.op;
}

DiffOp Wakimoto::right(const Root& b) const {
  int p = chart_.position(b);
  if (p < 0) throw Error(ErrorCode::InvalidArgument, "right action needs a positive root");
  return right_.at(p);
}

DiffOp Wakimoto::right(const GlElem& a) const {
  DiffOp d(chart_.nvars());
  for (const auto& [ij, s] : a.entries()) d += s * right(Root{ij.first, ij.second});
  return d;
}

const Poly& Wakimoto::P(const Root& alpha, const Root& beta) const {
  return left_.at({alpha.i, alpha.j}).coeff.at(chart_.position(beta));
}

const Poly& Wakimoto::Q(const Root& alpha, const Root& beta) const {
  return left_.at({alpha.j, alpha.i}).coeff.at(chart_.position(beta));
}

const Poly& Wakimoto::PR(const Root& alpha, const Root& beta) const {
  return right_.at(chart_.position(alpha)).coeff.at(chart_.position(beta));
}

// ---- structural checks ---------------------------------------------------------

namespace {

// Weight of a root in the eps basis.
std::vector<int> eps(int N, const Root& r, int sign = 1) {
  std::vector<int> v(N, 0);
  v[r.i - 1] += sign;
  v[r.j - 1] -= sign;
  return v;
}

std::vector<int> add(std::vector<int> a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

bool q_degree_is(const Poly& p, const Chart& c, const std::vector<int>& target) {
  int N = c.grading.N;
  for (const auto& [e, s] : p.terms()) {
    std::vector<int> d(N, 0);
    for (int v = 0; v < c.nvars(); ++v)
      if (e[v]) d = add(d, [&] {
        auto w = eps(N, c.roots[v]);
        for (auto& x : w) x *= e[v];
        return w;
      }());
    if (d != target) return false;
  }
  return true;
}

// beta - gamma lies in the root lattice of the degree-zero part.
bool same_class(const Grading& g, const Root& b, const Root& c) {
  std::vector<int> v = add(eps(g.N, b), eps(g.N, c, -1));
  int partial = 0;
  for (int t = 1; t < g.N; ++t) {
    partial += v[t - 1];
    if (partial != 0 && !g.in_pi0(t)) return false;
  }
  return true;
}

Scalar struct_const(const Root& gamma, const GlElem& u, const Root& beta) {
  return bracket(gamma.elem(), u).entry(beta.i, beta.j);
}

struct Counter {
  Report r;
  long checked = 0;
  explicit Counter(std::string id) : r(std::move(id)) {}
  void check(bool ok, const std::string& what, const std::string& detail) {
    ++checked;
    if (!ok) r.fail(what, detail);
  }
  Report done() {
    r.record("checked", std::to_string(checked));
    return r;
  }
};

std::string rs(const Root& r) { return "(" + r.str() + ")"; }

}  // namespace

Report structural_checks(const Grading& g, const std::string& label) {
  Wakimoto w(g);
  const Chart& c = w.chart();
  const int N = g.N, R = c.nvars();
  const auto names = c.var_names();
  const std::string pre = "wakimoto." + label + ".";
  Report top("wakimoto.structure");
  top.input("grading", label).input("N", std::to_string(N));
  std::string chart_str;
  for (const auto& r : c.roots) chart_str += (chart_str.empty() ? "" : " ") + rs(r);
  top.note("chart", chart_str);

  std::vector<bool> zero_vars(R), pos_vars(R);
  for (int p = 0; p < R; ++p) {
    zero_vars[p] = c.degree_zero(p);
    pos_vars[p] = !zero_vars[p];
  }
  auto roots = positive_roots(N);
  std::vector<Root> simple;
  for (int s = 1; s < N; ++s) simple.push_back({s, s + 1});

  {
    Counter h(pre + "hom");
    std::vector<Scalar> lambda;
    for (int i = 1; i <= N; ++i) lambda.push_back(Scalar(i) * Scalar::k() + Scalar(i * i));
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        for (int k = 1; k <= N; ++k)
          for (int l = 1; l <= N; ++l) {
            GlElem u = GlElem::unit(i, j), v = GlElem::unit(k, l);
            std::string tag = "[e" + std::to_string(i) + std::to_string(j) + ",e" + std::to_string(k) +
                              std::to_string(l) + "]";
            h.check(commutator(w.left(u), w.left(v)) == w.left(bracket(u, v)), "rho" + tag, "not closed");
            h.check(commutator(w.twisted(u, lambda), w.twisted(v, lambda)) ==
                        w.twisted(bracket(u, v), lambda),
                    "rho_lambda" + tag, "not closed");
          }
    top.add(h.done());
  }
  {
    Counter a(pre + "right_antihom");
    for (const Root& u : roots)
      for (const Root& v : roots)
        a.check(commutator(w.right(u), w.right(v)) == Scalar(-1) * w.right(bracket(u.elem(), v.elem())),
                "rhoR[" + rs(u) + "," + rs(v) + "]", "not anti-closed");
    top.add(a.done());
  }
  {
    Counter m(pre + "left_right_commute");
    for (const Root& u : roots)
      for (const Root& v : roots)
        m.check(commutator(w.left(u.elem()), w.right(v)).is_zero(), "[" + rs(u) + "," + rs(v) + "]",
                "left and right fields do not commute");
    top.add(m.done());
  }
  {
    Counter m(pre + "levi_right_bracket");
    for (const Root& a : simple)
      for (const Root& b : simple) {
        DiffOp lhs = commutator(w.left(GlElem::unit(a.j, a.i)), w.right(b));
        DiffOp rhs = (Poly::var(R, c.position(a)) * Scalar(root_pairing(a, b))) * w.right(b);
        m.check(lhs == rhs, "[f" + rs(a) + ",e" + rs(b) + "]", diffop_str(c, lhs));
      }
    top.add(m.done());
  }
  {
    Counter p0(pre + "block_preserving");
    for (const Root& b : roots) {
      int pb = c.position(b);
      if (pos_vars[pb]) {
        DiffOp d = w.left(b.elem());
        for (int v = 0; v < R; ++v) {
          bool ok = d.coeff[v].uses_only(pos_vars) && (pos_vars[v] || d.coeff[v].is_zero());
          p0.check(ok, "rho" + rs(b), "leaves the positive-degree block");
        }
      } else {
        DiffOp d = w.right(b);
        for (int v = 0; v < R; ++v) {
          bool ok = d.coeff[v].uses_only(zero_vars) && (zero_vars[v] || d.coeff[v].is_zero());
          p0.check(ok, "rhoR" + rs(b), "leaves the degree-zero block");
        }
      }
    }
    top.add(p0.done());
  }
  {
    Counter p1(pre + "equal_degree_coefficients");
    for (const Root& a : roots)
      for (const Root& b : roots) {
        if (g.twice_degree(a) != g.twice_degree(b)) continue;
        p1.check(w.P(a, b).uses_only(zero_vars), "P" + rs(a) + rs(b), w.P(a, b).str(names));
        p1.check(w.PR(a, b).uses_only(zero_vars), "PR" + rs(a) + rs(b), w.PR(a, b).str(names));
      }
    top.add(p1.done());
  }
  {
    Counter p2(pre + "unitriangular");
    for (const Root& a : roots) {
      if (!pos_vars[c.position(a)]) continue;
      p2.check(w.P(a, a) == Poly::constant(R, Scalar(1)), "P" + rs(a) + rs(a), w.P(a, a).str(names));
      for (const Root& b : roots) {
        if (b == a || w.P(a, b).is_zero()) continue;
        bool ok = g.twice_degree(b) > g.twice_degree(a);
        p2.check(ok, "P" + rs(a) + rs(b), w.P(a, b).str(names));
      }
    }
    top.add(p2.done());
  }
  {
    Counter gr(pre + "grading");
    for (const Root& a : roots)
      for (const Root& b : roots) {
        gr.check(q_degree_is(w.P(a, b), c, add(eps(N, b), eps(N, a, -1))), "P" + rs(a) + rs(b), "Q-degree");
        gr.check(q_degree_is(w.PR(a, b), c, add(eps(N, b), eps(N, a, -1))), "PR" + rs(a) + rs(b),
                 "Q-degree");
        gr.check(q_degree_is(w.Q(a, b), c, add(eps(N, b), eps(N, a))), "Q" + rs(a) + rs(b), "Q-degree");
      }
    for (int i = 1; i <= N; ++i) {
      DiffOp expect(R);
      for (int p = 0; p < R; ++p) {
        const Root& b = c.roots[p];
        int bh = (b.i == i) - (b.j == i);
        if (bh) expect.coeff[p] = Poly::var(R, p) * Scalar(-bh);
      }
      gr.check(w.left(GlElem::unit(i, i)) == expect, "rho(e" + std::to_string(i) + std::to_string(i) + ")",
               diffop_str(c, w.left(GlElem::unit(i, i))));
    }
    top.add(gr.done());
  }
  auto classes = root_classes(g);
  {
    Counter cs(pre + "class_support");
    for (const auto& cl : classes) {
      Root a{cl.alpha, cl.alpha + 1};
      for (const Root& b : roots) {
        if (g.twice_degree(b) != g.twice_degree(a)) continue;
        bool member = std::find(cl.members.begin(), cl.members.end(), b) != cl.members.end();
        if (!member) cs.check(w.PR(a, b).is_zero(), "PR" + rs(a) + rs(b), w.PR(a, b).str(names));
      }
    }
    top.add(cs.done());
  }
  {
    Counter m1(pre + "levi_derivatives");
    for (int s : g.pi0()) {
      Root a{s, s + 1};
      GlElem e = a.elem(), f = GlElem::unit(s + 1, s);
      for (const Root& b : roots)
        for (const Root& gm : roots) {
          if (!pos_vars[c.position(b)] || !pos_vars[c.position(gm)] || !same_class(g, b, gm)) continue;
          int pg = c.position(gm);
          m1.check(w.P(a, b).diff(pg) == Poly::constant(R, struct_const(gm, e, b)),
                   "dP" + rs(a) + rs(b) + "/d" + rs(gm), w.P(a, b).diff(pg).str(names));
          m1.check(w.Q(a, b).diff(pg) == Poly::constant(R, struct_const(gm, f, b)),
                   "dQ" + rs(a) + rs(b) + "/d" + rs(gm), w.Q(a, b).diff(pg).str(names));
        }
    }
    top.add(m1.done());
  }
  {
    Counter ml(pre + "class_intertwining");
    for (int s : g.pi0()) {
      Root a{s, s + 1};
      GlElem e = a.elem(), f = GlElem::unit(s + 1, s);
      for (const auto& cl : classes) {
        Root eps_root{cl.alpha, cl.alpha + 1};
        for (const Root& b : cl.members) {
          Poly l1(R), r1(R), l2(R), r2(R);
          for (int p = 0; p < R; ++p) {
            if (!zero_vars[p]) continue;
            Poly d = w.PR(eps_root, b).diff(p);
            l1 += w.P(a, c.roots[p]) * d;
            l2 += w.Q(a, c.roots[p]) * d;
          }
          for (const Root& gm : cl.members) {
            r1 += w.PR(eps_root, gm) * struct_const(gm, e, b);
            r2 += w.PR(eps_root, gm) * struct_const(gm, f, b);
          }
          r2 += Poly::var(R, c.position(a)) * w.PR(eps_root, b) * Scalar(root_pairing(a, eps_root));
          std::string tag = rs(a) + rs(eps_root) + rs(b);
          ml.check(l1 == r1, "(1)" + tag, l1.str(names) + " != " + r1.str(names));
          ml.check(l2 == r2, "(2)" + tag, l2.str(names) + " != " + r2.str(names));
        }
      }
    }
    top.add(ml.done());
  }
  return top;
}

// ---- free fields ---------------------------------------------------------------

namespace {

std::string rname(const char* base, const Root& r) { return std::string(base) + "[" + r.str() + "]"; }

}  // namespace

FieldState FreeFields::a(const Root& r) const { return FieldState::gen(table, rname("a", r)); }
FieldState FreeFields::astar(const Root& r) const { return FieldState::gen(table, rname("astar", r)); }
FieldState FreeFields::phi(const Root& r) const { return FieldState::gen(table, rname("phi", r)); }
FieldState FreeFields::b(int i) const { return FieldState::gen(table, "b[" + std::to_string(i) + "]"); }
bool FreeFields::has_bg(const Root& r) const {
  return std::find(bg_roots.begin(), bg_roots.end(), r) != bg_roots.end();
}

FreeFields free_fields(const Grading& g, const std::vector<Root>& bg_roots,
                       const std::vector<Root>& phi_roots, const std::string& label) {
  TableBuilder tb(label);
  for (const Root& r : bg_roots) {
    tb.add(rname("a", r), 2);
    tb.add(rname("astar", r), 0);
  }
  for (const Root& r : phi_roots) tb.add(rname("phi", r), 1);
  for (int i = 1; i <= g.N; ++i) tb.add("b[" + std::to_string(i) + "]", 2);
  for (const Root& r : bg_roots) tb.pair1(rname("a", r), rname("astar", r), LinGen{Scalar(1), {}});
  for (size_t x = 0; x < phi_roots.size(); ++x)
    for (size_t y = x + 1; y < phi_roots.size(); ++y) {
      GlElem br = bracket(phi_roots[x].elem(), phi_roots[y].elem());
      Scalar chi = trace_form(g.f, br);
      if (!chi.is_zero()) tb.pair1(rname("phi", phi_roots[x]), rname("phi", phi_roots[y]), LinGen{chi, {}});
    }
  Scalar level = Scalar::k() + Scalar(g.N);
  for (int i = 1; i <= g.N; ++i) {
    std::string n = "b[" + std::to_string(i) + "]";
    tb.pair2(n, n, level);
  }
  tb.pole(UPoly::linear(1, g.N));
  return FreeFields{tb.build(), g.N, bg_roots, phi_roots};
}

FieldState poly_field(const FreeFields& ff, const Chart& c, const Poly& p) {
  FieldState out(ff.table);
  for (const auto& [e, s] : p.terms()) {
    std::vector<Sym> word;
    for (int v = 0; v < c.nvars(); ++v) {
      if (!e[v]) continue;
      if (!ff.has_bg(c.roots[v]))
        throw Error(ErrorCode::InvalidArgument, "polynomial uses x[" + c.roots[v].str() + "] outside the table");
      int g = ff.table->index(rname("astar", c.roots[v]));
      for (int t = 0; t < e[v]; ++t) word.push_back({g, 0});
    }
    out += FieldState::nested(ff.table, word, s);
  }
  return out;
}

// ---- affine lift -----------------------------------------------------------------

std::vector<int> levi_blocks(const Grading& g) {
  std::vector<int> blocks{1};
  for (int s = 1; s < g.N; ++s) {
    if (g.in_pi0(s))
      ++blocks.back();
    else
      blocks.push_back(1);
  }
  return blocks;
}

Scalar lift_form(const Grading& g, bool levi, const GlElem& u, const GlElem& v) {
  Scalar base = Scalar::k() * trace_form(u, v) + trace(u) * trace(v);
  if (!levi) return base;
  Scalar half(Rational(1, 2));
  return base + half * levi_killing(u, v, {g.N}) - half * levi_killing(u, v, levi_blocks(g));
}

bool AffineLift::image(const GlElem& u, FieldState& out) const {
  out = FieldState(ff.table);
  for (const auto& [ij, s] : u.entries()) {
    auto it = images.find(ij);
    if (it == images.end()) return false;
    out += s * it->second;
  }
  return true;
}

namespace {

struct LiftBuilder {
  const Wakimoto& w;
  const FreeFields& ff;
  std::vector<Root> scope;
  std::vector<int> simple;

  std::map<std::pair<int, int>, FieldState> images(const std::map<int, Scalar>& c) const {
    const Chart& ch = w.chart();
    std::map<std::pair<int, int>, FieldState> out;
    auto current = [&](const std::function<const Poly&(const Root&)>& coeff) {
      FieldState s(ff.table);
      for (const Root& b : scope) {
        const Poly& p = coeff(b);
        if (!p.is_zero()) s += normal_order(poly_field(ff, ch, p), ff.a(b));
      }
      return s;
    };
    for (const Root& a : scope)
      out[{a.i, a.j}] = current([&](const Root& b) -> const Poly& { return w.P(a, b); });
    for (int i = 1; i <= w.N(); ++i) {
      FieldState s = ff.b(i);
      for (const Root& b : scope) {
        int bh = (b.i == i) - (b.j == i);
        if (bh) s -= Scalar(bh) * normal_order(ff.astar(b), ff.a(b));
      }
      out[{i, i}] = s;
    }
    for (int sidx : simple) {
      Root a{sidx, sidx + 1};
      FieldState s = current([&](const Root& b) -> const Poly& { return w.Q(a, b); });
      s += normal_order(ff.b(sidx) - ff.b(sidx + 1), ff.astar(a));
      s += (Scalar::k() + c.at(sidx)) * derive(ff.astar(a));
      out[{sidx + 1, sidx}] = s;
    }
    return out;
  }
};

struct PairCheck {
  std::pair<int, int> u, v;
  std::vector<FieldState> residual;
};

std::vector<PairCheck> residuals(const Grading& g, bool levi,
                                 const std::map<std::pair<int, int>, FieldState>& imgs,
                                 const TablePtr& t) {
  AffineLift tmp;
  tmp.ff.table = t;
  tmp.images = imgs;
  std::vector<PairCheck> out;
  for (const auto& [ku, fu] : imgs)
    for (const auto& [kv, fv] : imgs) {
      GlElem u = GlElem::unit(ku.first, ku.second), v = GlElem::unit(kv.first, kv.second);
      FieldState br;
      if (!tmp.image(bracket(u, v), br)) continue;
      std::vector<FieldState> got = ope(fu, fv);
      std::vector<FieldState> want{br, FieldState::scalar(t, lift_form(g, levi, u, v))};
      size_t n = std::max(got.size(), want.size());
      PairCheck pc{ku, kv, {}};
      for (size_t i = 0; i < n; ++i) {
        FieldState a = i < got.size() ? got[i] : FieldState(t);
        FieldState b = i < want.size() ? want[i] : FieldState(t);
        pc.residual.push_back(a - b);
      }
      out.push_back(std::move(pc));
    }
  return out;
}

std::string unit_str(const std::pair<int, int>& ij) {
  return "e[" + std::to_string(ij.first) + "," + std::to_string(ij.second) + "]";
}

}  // namespace

AffineLift affine_lift(const Grading& g, bool levi) {
  Wakimoto w(g);
  std::vector<Root> scope;
  std::vector<int> simple;
  for (const Root& r : positive_roots(g.N))
    if (!levi || g.twice_degree(r) == 0) scope.push_back(r);
  for (int s = 1; s < g.N; ++s)
    if (!levi || g.in_pi0(s)) simple.push_back(s);

  AffineLift lift;
  lift.levi = levi;
  lift.ff = free_fields(g, scope, {}, levi ? "wakimoto_levi" : "wakimoto_full");
  LiftBuilder lb{w, lift.ff, scope, simple};

  std::map<int, Scalar> zero;
  for (int s : simple) zero[s] = Scalar();
  auto flatten = [&](const std::map<int, Scalar>& c) {
    std::vector<FieldState> flat;
    for (auto& pc : residuals(g, levi, lb.images(c), lift.ff.table))
      for (auto& r : pc.residual) flat.push_back(r);
    return flat;
  };
  if (!simple.empty()) {
    auto r0 = flatten(zero);
    std::vector<std::vector<FieldState>> cols;
    for (int s : simple) {
      auto c = zero;
      c[s] = Scalar(1);
      auto rs = flatten(c);
      for (size_t i = 0; i < rs.size(); ++i) rs[i] -= r0[i];
      cols.push_back(std::move(rs));
    }
    std::vector<std::vector<Scalar>> A;
    std::vector<Scalar> rhs;
    for (size_t i = 0; i < r0.size(); ++i) {
      std::set<Mono, MonoLess> monos;
      for (const auto& [m, s] : r0[i].terms()) monos.insert(m);
      for (const auto& col : cols)
        for (const auto& [m, s] : col[i].terms()) monos.insert(m);
      for (const Mono& m : monos) {
        std::vector<Scalar> row;
        for (const auto& col : cols) row.push_back(col[i].coeff(m));
        A.push_back(row);
        rhs.push_back(-r0[i].coeff(m));
      }
    }
    auto x = solve_linear(A, rhs);
    for (size_t j = 0; j < simple.size(); ++j) lift.c[simple[j]] = x[j];
  }
  lift.images = lb.images(lift.c);

  Report audit(levi ? "wakimoto.affine_lift.levi" : "wakimoto.affine_lift.full");
  audit.input("N", std::to_string(g.N));
  std::string pi0;
  for (int s : g.pi0()) pi0 += (pi0.empty() ? "" : ",") + std::to_string(s);
  audit.input("pi0", pi0);
  long pairs = 0;
  for (const auto& pc : residuals(g, levi, lift.images, lift.ff.table)) {
    ++pairs;
    for (size_t n = 0; n < pc.residual.size(); ++n)
      if (!pc.residual[n].is_zero())
        audit.fail(unit_str(pc.u) + "_(" + std::to_string(n) + ")" + unit_str(pc.v), pc.residual[n].str());
  }
  audit.record("pairs", std::to_string(pairs));
  for (const auto& [s, v] : lift.c) audit.record("c_" + std::to_string(s), v.str());
  lift.audit = audit;
  return lift;
}

// ---- screening data -------------------------------------------------------------------

const char* kind_name(ScreeningKind k) {
  switch (k) {
    case ScreeningKind::Pi0: return "pi0";
    case ScreeningKind::PiHalf: return "pi_half";
    case ScreeningKind::Pi1: return "pi1";
  }
  return "pi1";
}

ScreeningSpec screening_spec(const Wakimoto& w, const FreeFields& ff, int alpha) {
  const Grading& g = w.chart().grading;
  if (alpha < 1 || alpha >= g.N) throw Error(ErrorCode::InvalidArgument, "no simple root " + std::to_string(alpha));
  Root a{alpha, alpha + 1};
  ScreeningSpec s;
  s.alpha = alpha;
  s.dressing = FieldState(ff.table);
  int td = g.twice_deg.at(alpha - 1);
  s.kind = td == 0 ? ScreeningKind::Pi0 : (td == 1 ? ScreeningKind::PiHalf : ScreeningKind::Pi1);
  if (s.kind == ScreeningKind::Pi0) {
    for (const Root& b : positive_roots(g.N)) {
      if (g.twice_degree(b) != 0 || w.PR(a, b).is_zero()) continue;
      s.dressing += normal_order(poly_field(ff, w.chart(), w.PR(a, b)), ff.a(b));
    }
  } else {
    RootClass cls;
    for (auto& c : root_classes(g))
      if (c.alpha == alpha) cls = c;
    for (const Root& b : cls.members) {
      FieldState p = poly_field(ff, w.chart(), w.PR(a, b));
      s.members.emplace_back(b, p);
      if (s.kind == ScreeningKind::PiHalf)
        s.dressing += normal_order(p, ff.phi(b));
      else
        s.dressing += g.chi(b) * p;
    }
  }
  Scalar inv = (Scalar::k() + Scalar(g.N)).inverse();
  s.exponent.assign(g.N, Scalar());
  s.exponent[alpha - 1] = -inv;
  s.exponent[alpha] = inv;
  return s;
}

}  // namespace walg
