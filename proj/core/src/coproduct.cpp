#include "walg/coproduct.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "walg/wakimoto.hpp"

namespace walg {

Scalar shift_level(const Scalar& s, const Rational& d) {
  auto compose = [&](const UPoly& p) {
    UPoly r;
    const UPoly x = UPoly::linear(1, d);
    for (int i = p.degree(); i >= 0; --i) r = r * x + UPoly(p.coeff(i));
    return r;
  };
  return Scalar(compose(s.num()), compose(s.den()));
}

namespace {

enum class Shape { Principal, Rectangular, Other };

Shape shape_of(const Pyramid& pi) {
  const auto& q = pi.columns();
  if (std::all_of(q.begin(), q.end(), [](int x) { return x == 1; })) return Shape::Principal;
  if (std::all_of(q.begin(), q.end(), [&](int x) { return x == q.front(); })) return Shape::Rectangular;
  return Shape::Other;
}

Rational binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rational r = 1;
  for (int t = 0; t < k; ++t) r = r * (n - t) / (t + 1);
  return r;
}

// Free-field side: one first-order factor per column over a shared table.
struct FreeModel {
  TablePtr table;
  Scalar c;
  int n = 1;     // matrix size
  int ncol = 0;  // columns

  explicit FreeModel(const Pyramid& pi) {
    ncol = static_cast<int>(pi.columns().size());
    if (shape_of(pi) == Shape::Principal) {
      table = principal_table(pi.size());
      c = Scalar::k() + Scalar(pi.size() - 1);
    } else if (shape_of(pi) == Shape::Rectangular) {
      n = pi.columns().front();
      table = rectangular_table(n, ncol);
      c = Scalar::k() + Scalar(n * (ncol - 1));
    } else {
      throw Error(ErrorCode::InvalidShape,
                  "pyramid " + pi.columns_str() + " is neither principal nor rectangular");
    }
  }

  MiuraOperator factor(int col) const {
    if (n == 1)
      return MiuraOperator::first_order(FieldMatrix::scalar(FieldState::gen(table, "h" + std::to_string(col))), c);
    return MiuraOperator::first_order(rectangular_matrix(table, n, col), c);
  }

  // W_0..W_m of the columns first..last.
  std::vector<FieldMatrix> generators(int first, int last) const {
    if (n == 1) {
      std::vector<std::string> names;
      for (int i = first; i <= last; ++i) names.push_back("h" + std::to_string(i));
      std::vector<FieldMatrix> w;
      for (const auto& f : principal_generators(table, names, c)) w.push_back(FieldMatrix::scalar(f));
      return w;
    }
    std::vector<int> cols;
    for (int i = first; i <= last; ++i) cols.push_back(i);
    return rectangular_generators(table, n, cols, c);
  }
};

MiuraOperator operator_of(const std::vector<FieldMatrix>& w, const Scalar& c) {
  const int l = static_cast<int>(w.size()) - 1;
  MiuraOperator L{w.front().e.front().table(), c, std::vector<FieldMatrix>(l + 1)};
  for (int i = 0; i <= l; ++i) L.coeffs[l - i] = w[i];
  return L;
}

std::string wname(const std::string& piece, int i, int n, int a, int b) {
  std::string s = "W" + piece + "[" + std::to_string(i);
  if (n > 1) s += "," + std::to_string(a) + "," + std::to_string(b);
  return s + "]";
}

// Formal alphabet W<p>[i] (or W<p>[i,a,b]) with trivial OPEs, one family per piece.
struct Alphabet {
  TablePtr table;
  std::vector<std::string> pieces;
  std::vector<int> lengths;
  std::vector<int> family;  // piece index of each generator
  int n = 1;

  Alphabet(const std::vector<std::string>& names, const std::vector<int>& lens, int size)
      : pieces(names), lengths(lens), n(size) {
    TableBuilder tb("alphabet");
    for (size_t p = 0; p < pieces.size(); ++p)
      for (int i = 1; i <= lengths[p]; ++i)
        for (int a = 1; a <= n; ++a)
          for (int b = 1; b <= n; ++b) {
            tb.add(wname(pieces[p], i, n, a, b), 2 * i);
            family.push_back(static_cast<int>(p));
          }
    table = tb.build();
  }

  std::vector<FieldMatrix> generators(size_t p, const Scalar&) const {
    std::vector<FieldMatrix> w{FieldMatrix::identity(table, n)};
    for (int i = 1; i <= lengths[p]; ++i) {
      FieldMatrix m = FieldMatrix::zero(table, n);
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) m.at(a - 1, b - 1) = FieldState::gen(table, wname(pieces[p], i, n, a, b));
      w.push_back(m);
    }
    return w;
  }

  MiuraOperator op(size_t p, const Scalar& c) const { return operator_of(generators(p, c), c); }
};

std::string entry_label(int m, int n, int a, int b) {
  std::string s = "W" + std::to_string(m);
  if (n > 1) s += "[" + std::to_string(a) + "," + std::to_string(b) + "]";
  return s;
}

// Delta(W_m) entries, m = 1..l, from the product of the two piece operators.
std::vector<std::pair<std::string, FieldState>> delta_images(const Alphabet& al, const Scalar& c) {
  MiuraOperator D = opmul(al.op(0, c), al.op(1, c));
  const int l = D.order();
  std::vector<std::pair<std::string, FieldState>> out;
  for (int m = 1; m <= l; ++m)
    for (int a = 1; a <= al.n; ++a)
      for (int b = 1; b <= al.n; ++b)
        out.emplace_back(entry_label(m, al.n, a, b), D.coeff(l - m).at(a - 1, b - 1));
  return out;
}

std::vector<std::pair<std::string, FieldState>> free_entries(const std::vector<FieldMatrix>& w) {
  std::vector<std::pair<std::string, FieldState>> out;
  const int n = w.front().n;
  for (size_t m = 1; m < w.size(); ++m)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        out.emplace_back(entry_label(static_cast<int>(m), n, a, b), w[m].at(a - 1, b - 1));
  return out;
}

// At most one symbol per piece in every monomial, pieces in increasing order.
bool split_discipline(const Alphabet& al, const FieldState& f, std::string& bad) {
  for (const auto& [mono, coef] : f.terms()) {
    std::vector<int> seen;
    for (const Sym& s : mono) seen.push_back(al.family.at(s.gen));
    bool ok = std::is_sorted(seen.begin(), seen.end()) &&
              std::adjacent_find(seen.begin(), seen.end()) == seen.end();
    if (!ok) {
      bad = mono_str(*al.table, mono);
      return false;
    }
  }
  return true;
}

// Images of the alphabet generators under the free-field realization.
std::vector<FieldState> alphabet_images(const Alphabet& al, const std::vector<std::vector<FieldMatrix>>& free) {
  std::vector<FieldState> img;
  for (size_t p = 0; p < al.pieces.size(); ++p)
    for (int i = 1; i <= al.lengths[p]; ++i)
      for (int a = 1; a <= al.n; ++a)
        for (int b = 1; b <= al.n; ++b) img.push_back(free[p].at(i).at(a - 1, b - 1));
  return img;
}

void add_levels(SplitReport& r, const PyramidSplit& s) {
  const LevelMap& L = s.levels;
  r.levels = {{"k", L.k}, {"k1", L.k1}, {"k2", L.k2}};
  for (const auto& [name, v] : r.levels) r.report.record(name, v.str());
  Scalar a = L.k + Scalar(L.N), b = L.k1 + Scalar(L.N1), c = L.k2 + Scalar(L.N2);
  r.report.expect(a == b && b == c, "level_ledger",
                  "k+N = " + a.str() + ", k1+N1 = " + b.str() + ", k2+N2 = " + c.str());
}

// sum_w c_w :w_1 :w_2 ... :w_r y:...: over the words w of p.
FieldState nest_into(const FieldState& p, const FieldState& y) {
  FieldState out(y.table());
  for (const auto& [word, coef] : p.terms()) {
    FieldState z = y;
    for (auto it = word.rbegin(); it != word.rend(); ++it) z = normal_order(FieldState::sym(y.table(), *it), z);
    out += coef * z;
  }
  return out;
}

SplitReport start(const std::string& check, const Pyramid& pi, std::vector<int> cuts) {
  SplitReport r;
  r.pyramid = pi.columns_str();
  r.cuts = std::move(cuts);
  r.report = Report(check);
  r.report.input("columns", r.pyramid);
  std::string c;
  for (size_t i = 0; i < r.cuts.size(); ++i) c += (i ? "," : "") + std::to_string(r.cuts[i]);
  r.report.input(r.cuts.size() == 1 ? "after" : "cuts", c);
  return r;
}

// ---- Levi data of a refinement ------------------------------------------------------

struct Piece {
  Pyramid pyr;
  int offset = 0;  // parent box of local box b is offset + b
  Scalar level;
};

std::vector<Piece> refine(const Pyramid& pi, const std::vector<int>& order, const std::vector<int>& cuts,
                          Report& audit, const std::string& route) {
  // Cuts are applied in `order`; each is a parent column index.
  std::vector<std::pair<int, Piece>> pieces{{0, Piece{pi, 0, Scalar::k()}}};  // (first column - 1, piece)
  for (int idx : order) {
    int cut = cuts[idx];
    auto it = std::find_if(pieces.begin(), pieces.end(), [&](const auto& p) {
      return p.first < cut && cut < p.first + static_cast<int>(p.second.pyr.columns().size());
    });
    if (it == pieces.end()) throw Error(ErrorCode::InvalidColumn, "cut " + std::to_string(cut) + " is not interior");
    auto [start_col, parent] = *it;
    PyramidSplit s = split_pyramid(parent.pyr, cut - start_col);
    Report ind = induced_orbit_check(parent.pyr, cut - start_col);
    ind.check = "coproduct.coassoc.levi." + route + ".cut" + std::to_string(cut);
    audit.add(ind);
    Scalar shift = parent.level - Scalar::k();
    Piece left{s.left, parent.offset, s.levels.k1 + shift};
    Piece right{s.right, parent.offset + s.left.size(), s.levels.k2 + shift};
    *it = {start_col, left};
    pieces.insert(it + 1, {cut, right});
  }
  std::vector<Piece> out;
  for (auto& p : pieces) out.push_back(p.second);
  return out;
}

bool same_pieces(const std::vector<Piece>& a, const std::vector<Piece>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].pyr.columns() != b[i].pyr.columns() || a[i].offset != b[i].offset || a[i].level != b[i].level)
      return false;
  return true;
}

bool degree_zero(const Grading& g, int a, int b) { return a == b || g.twice_degree(Root{a, b}) == 0; }

// The parent Levi algebra with its form tau_k is the tensor product of the
// pieces' Levi algebras with tau at their own levels.
Report levi_data_check(const Pyramid& pi, const std::vector<Piece>& pieces, const std::string& id) {
  Report r(id);
  const Grading g = pi.grading();
  const int N = pi.size();
  std::vector<int> owner(N + 1, -1), local(N + 1, 0);
  for (size_t p = 0; p < pieces.size(); ++p)
    for (int b = 1; b <= pieces[p].pyr.size(); ++b) {
      owner[pieces[p].offset + b] = static_cast<int>(p);
      local[pieces[p].offset + b] = b;
    }
  std::vector<Grading> pg;
  for (const auto& p : pieces) pg.push_back(p.pyr.grading());

  std::vector<std::pair<int, int>> units;
  int mismatched = 0;
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b) {
      bool parent0 = degree_zero(g, a, b);
      bool piece0 = owner[a] == owner[b] && degree_zero(pg[owner[a]], local[a], local[b]);
      if (parent0 != piece0) {
        ++mismatched;
        r.fail("g0." + std::to_string(a) + "," + std::to_string(b), parent0 ? "parent only" : "piece only");
      }
      if (parent0) units.emplace_back(a, b);
    }
  int checked = 0;
  for (auto [a, b] : units)
    for (auto [c, d] : units) {
      Scalar parent = lift_form(g, true, GlElem::unit(a, b), GlElem::unit(c, d));
      Scalar expect;
      if (owner[a] == owner[c]) {
        const Piece& p = pieces[owner[a]];
        Scalar own = lift_form(pg[owner[a]], true, GlElem::unit(local[a], local[b]), GlElem::unit(local[c], local[d]));
        expect = shift_level(own, (p.level - Scalar::k()).constant_value());
      }
      ++checked;
      if (parent != expect)
        r.fail("tau.e" + std::to_string(a) + std::to_string(b) + ".e" + std::to_string(c) + std::to_string(d),
               parent.str() + " != " + expect.str());
    }
  r.record("g0_dimension", std::to_string(units.size()));
  r.record("pairs_checked", std::to_string(checked));
  if (mismatched == 0) r.note("g0", "direct sum of the pieces");
  return r;
}

}  // namespace

// ---- factorization ----------------------------------------------------------------------

SplitReport factorization_check(const Pyramid& pi, int after) {
  SplitReport r = start("coproduct.factorization", pi, {after});
  PyramidSplit s = split_pyramid(pi, after);
  FreeModel fm(pi);
  add_levels(r, s);

  std::vector<MiuraOperator> factors;
  for (int col = 1; col <= fm.ncol; ++col) factors.push_back(fm.factor(col));
  MiuraOperator full = opmul(factors);
  MiuraOperator split = opmul(operator_of(fm.generators(1, after), fm.c),
                              operator_of(fm.generators(after + 1, fm.ncol), fm.c));
  bool equal = full.order() == split.order();
  for (int i = 0; equal && i <= full.order(); ++i) equal = full.coeff(i) == split.coeff(i);
  r.report.expect(equal, "product", equal ? "all dhat coefficients agree" : "coefficients differ");

  Alphabet al({"1", "2"}, {after, fm.ncol - after}, fm.n);
  r.delta = delta_images(al, fm.c);
  std::set<Mono> leads;
  std::string bad;
  bool discipline = true, distinct = true;
  for (const auto& [name, d] : r.delta) {
    r.report.witness.emplace_back("Delta(" + name + ")", d.str());
    if (!split_discipline(al, d, bad)) {
      discipline = false;
      r.report.fail("discipline." + name, bad);
    }
    if (d.is_zero()) continue;
    const Mono lead = d.terms().rbegin()->first;
    distinct = leads.insert(lead).second && distinct;
  }
  r.report.expect(discipline, "tensor_split", "one symbol per piece, W1 before W2");
  r.report.expect(distinct, "leading_monomials", std::to_string(leads.size()) + " distinct");
  return r;
}

// ---- Miura compatibility -------------------------------------------------------------------

SplitReport miura_compatibility_check(const Pyramid& pi, int after) {
  SplitReport r = start("coproduct.compat", pi, {after});
  PyramidSplit s = split_pyramid(pi, after);
  FreeModel fm(pi);
  add_levels(r, s);
  Alphabet al({"1", "2"}, {after, fm.ncol - after}, fm.n);
  r.delta = delta_images(al, fm.c);
  auto images = alphabet_images(al, {fm.generators(1, after), fm.generators(after + 1, fm.ncol)});
  auto direct = free_entries(fm.generators(1, fm.ncol));
  for (size_t i = 0; i < r.delta.size(); ++i) {
    FieldState sub = substitute(r.delta[i].second, fm.table, images);
    Report item("coproduct.compat." + direct[i].first);
    item.expect(sub == direct[i].second, "mu(Delta)", sub.str());
    item.record("W", direct[i].second.str());
    r.report.add(item);
  }
  return r;
}

// ---- coassociativity -----------------------------------------------------------------------

SplitReport coassociativity_check(const Pyramid& pi, int c1, int c2) {
  if (c1 == c2) throw Error(ErrorCode::InvalidColumn, "both cuts at column " + std::to_string(c1));
  if (c1 > c2) std::swap(c1, c2);
  const int ncol = static_cast<int>(pi.columns().size());
  if (c1 < 1 || c2 >= ncol)
    throw Error(ErrorCode::InvalidColumn, "cuts must lie in 1.." + std::to_string(ncol - 1));
  SplitReport r = start("coproduct.coassoc", pi, {c1, c2});
  const std::vector<int> cuts{c1, c2};

  Report levi("coproduct.coassoc.levi");
  auto left = refine(pi, {1, 0}, cuts, levi, "outer_right");
  auto right = refine(pi, {0, 1}, cuts, levi, "outer_left");
  levi.expect(same_pieces(left, right), "pieces", "both refinements give the same pieces, boxes and levels");
  for (size_t p = 0; p < left.size(); ++p) {
    std::string name = "k" + std::to_string(p + 1);
    r.levels.emplace_back(name, left[p].level);
    levi.record(name, left[p].level.str());
    Scalar lhs = left[p].level + Scalar(left[p].pyr.size());
    levi.expect(lhs == Scalar::k() + Scalar(pi.size()), "ledger." + name, name + "+N" + std::to_string(p + 1) + " = " + lhs.str());
  }
  levi.add(levi_data_check(pi, left, "coproduct.coassoc.levi.tau"));
  r.report.add(levi);

  if (shape_of(pi) == Shape::Other) {
    r.report.note("fields", "pyramid is neither principal nor rectangular; Levi data compared");
    return r;
  }

  FreeModel fm(pi);
  const int l1 = c1, l2 = c2 - c1, l3 = ncol - c2;
  const Scalar& c = fm.c;
  Alphabet al({"1", "2", "3"}, {l1, l2, l3}, fm.n);
  // Left route: Delta_{12,3} then Delta_{1,2}; right route: Delta_{1,23} then Delta_{2,3}.
  MiuraOperator L12 = opmul(al.op(0, c), al.op(1, c));
  MiuraOperator L23 = opmul(al.op(1, c), al.op(2, c));
  MiuraOperator lhs = opmul(L12, al.op(2, c));
  MiuraOperator rhs = opmul(al.op(0, c), L23);
  auto images = alphabet_images(al, {fm.generators(1, c1), fm.generators(c1 + 1, c2), fm.generators(c2 + 1, ncol)});
  auto direct = free_entries(fm.generators(1, ncol));
  const int l = ncol;
  size_t idx = 0;
  for (int m = 1; m <= l; ++m)
    for (int a = 0; a < fm.n; ++a)
      for (int b = 0; b < fm.n; ++b, ++idx) {
        const FieldState x = lhs.coeff(l - m).at(a, b);
        const FieldState y = rhs.coeff(l - m).at(a, b);
        Report item("coproduct.coassoc." + direct[idx].first);
        item.expect(x == y, "routes_agree", x.str());
        std::string bad;
        item.expect(split_discipline(al, x, bad), "tensor_split", bad.empty() ? "ok" : bad);
        FieldState sub = substitute(x, fm.table, images);
        item.expect(sub == direct[idx].second, "mu", sub.str());
        r.delta.emplace_back(direct[idx].first, x);
        r.report.add(item);
      }
  return r;
}

// ---- subregular --------------------------------------------------------------------------

SplitReport subregular_coproduct_check(int N, int N1) {
  if (N1 < 2 || N1 > N)
    throw Error(ErrorCode::BadSplit, "subregular split needs 2 <= N1 <= N, got N1 = " + std::to_string(N1));
  std::vector<int> cols{2};
  for (int i = 3; i <= N; ++i) cols.push_back(1);
  Pyramid pi = Pyramid::from_columns(cols);
  SplitReport r = start("coproduct.subregular", pi, {N1 - 1});
  r.report.input("N", std::to_string(N));
  r.report.input("N1", std::to_string(N1));
  const int N2 = N - N1;
  if (N2 > 0) add_levels(r, split_pyramid(pi, N1 - 1));

  SubregularFields s = subregular_generators(N, N1);
  const TablePtr& t = s.table;
  FieldState W1 = N2 > 0 ? s.W.at(1) : FieldState(t);
  // The Miura product (dhat - h_N)...(dhat - h_{N1+1}) gives W1 = -(h_{N1+1} + ... + h_N);
  // the Heisenberg identities need the sum itself.
  FieldState Z2 = -W1;

  auto item = [&](const std::string& name, const FieldState& lhs, const FieldState& rhs) {
    Report it("coproduct.subregular." + name);
    it.expect(lhs == rhs, name, rhs.str());
    if (lhs != rhs) it.record("lhs", lhs.str());
    return it;
  };
  const Scalar invN = Scalar(Rational(1, N));
  Report eq1 = item("eq1", s.H, s.H1 + Scalar(Rational(N2, N * N1)) * s.Z1 - invN * Z2);
  Report eq2 = item("eq2", s.Z, s.Z1 + Z2);
  if (N2 > 0) {
    FieldState lit1 = s.H1 + Scalar(Rational(N2, N * N1)) * s.Z1 - invN * W1;
    FieldState lit2 = s.Z1 + W1;
    eq1.note("with_W1", lit1 == s.H ? "holds" : "fails; the sign of W1 is reversed");
    eq2.note("with_W1", lit2 == s.Z ? "holds" : "fails; the sign of W1 is reversed");
  }
  r.report.add(eq1);
  r.report.add(eq2);
  r.report.add(item("eq3", s.E, s.E1));

  // Words of P_i are nested into F1.  With flip, (h1 - dhat)^{i-1} h1 = (-1)^{i-1} P_i
  // replaces P_i.
  auto eq4_rhs = [&](bool flip) {
    FieldState rhs(t);
    for (int i = 0; i <= N2; ++i) {
      Scalar sign = flip && i > 0 && (i - 1) % 2 ? Scalar(-1) : Scalar(1);
      FieldState PF = sign * nest_into(s.P.at(i), s.F1);
      for (int j = 0; j <= N2 - i; ++j) {
        const int m = N2 - j - i;
        rhs += Scalar(binom(N2 - j, i)) * s.c.pow(m) * normal_order(s.W.at(j), derive(PF, m));
      }
    }
    return rhs;
  };
  FieldState rhs = eq4_rhs(true);
  Report eq4 = item("eq4", s.F, rhs);
  eq4.record("F", s.F.str());
  if (N2 > 1) eq4.note("with_P", eq4_rhs(false) == s.F ? "holds" : "fails; P_i needs the factor (-1)^(i-1)");
  r.report.add(eq4);
  return r;
}

// ---- binomial lemma ----------------------------------------------------------------------

Report binomial_identity_check(int n, int bound) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "binomial lemma needs n >= 1");
  if (n > bound)
    throw Error(ErrorCode::SizeBound, "n = " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  Report r("binom.n" + std::to_string(n));
  r.input("n", std::to_string(n));
  TableBuilder tb("binom_u" + std::to_string(n));
  for (int t = 1; t <= n; ++t) tb.add("u" + std::to_string(t), 2);
  for (int t = 1; t <= n; ++t) tb.pair2("u" + std::to_string(t), "u" + std::to_string(t), Scalar::k() + Scalar(n));
  tb.pole(UPoly::linear(1, n));
  TablePtr table = tb.build();
  const Scalar c = Scalar::k() + Scalar(n - 1);

  // W^{|S|}_j(u_S) for every subset S (bit mask), factors in increasing index.
  std::map<unsigned, std::vector<FieldState>> W;
  auto w_of = [&](unsigned mask) -> const std::vector<FieldState>& {
    auto it = W.find(mask);
    if (it != W.end()) return it->second;
    std::vector<MiuraOperator> f;
    for (int t = 1; t <= n; ++t)
      if (mask & (1u << (t - 1)))
        f.push_back(MiuraOperator::first_order(FieldMatrix::scalar(-FieldState::gen(table, "u" + std::to_string(t))), c));
    std::vector<FieldState> w;
    if (f.empty()) {
      w.push_back(FieldState::one(table));  // the empty product
    } else {
      MiuraOperator L = opmul(f);
      for (int j = 0; j <= L.order(); ++j) w.push_back(L.coeff(L.order() - j).at(0, 0));
    }
    return W.emplace(mask, std::move(w)).first->second;
  };

  const unsigned all = (1u << n) - 1;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      FieldState lhs = Scalar(binom(n - j, i)) * w_of(all).at(j);
      FieldState rhs(table);
      int subsets = 0;
      for (unsigned removed = 0; removed <= all; ++removed) {
        if (__builtin_popcount(removed) != i) continue;
        rhs += w_of(all & ~removed).at(j);
        ++subsets;
      }
      Report it("binom.n" + std::to_string(n) + ".i" + std::to_string(i) + ".j" + std::to_string(j));
      it.expect(lhs == rhs, "identity", lhs.str());
      it.record("subsets", std::to_string(subsets));
      if (lhs != rhs) it.record("rhs", rhs.str());
      r.add(it);
    }
  r.note("empty_product", "W^0_0 = 1");
  return r;
}

}  // namespace walg
