#include "walg/fock.hpp"

#include <algorithm>
#include <cstdio>

#include "walg/miura.hpp"

namespace walg {

FockWeight FockWeight::zero(const TablePtr& t) { return FockWeight{t, std::vector<Scalar>(t->size())}; }

FockWeight FockWeight::from(const TablePtr& t, const std::vector<std::pair<std::string, Scalar>>& coeffs) {
  FockWeight w = zero(t);
  for (const auto& [name, c] : coeffs) {
    int g = t->index(name);
    if (!t->is_boson(g)) throw Error(ErrorCode::InvalidArgument, name + " is not a free boson");
    w.lambda[g] += c;
  }
  return w;
}

bool FockWeight::is_zero() const {
  return std::all_of(lambda.begin(), lambda.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::vector<Scalar> FockWeight::momentum() const {
  std::vector<Scalar> m(lambda.size());
  for (size_t g = 0; g < lambda.size(); ++g) {
    if (!table->is_boson(static_cast<int>(g))) continue;
    for (size_t h = 0; h < lambda.size(); ++h)
      if (!lambda[h].is_zero()) m[g] += table->pair2(static_cast<int>(g), static_cast<int>(h)) * lambda[h];
  }
  return m;
}

Scalar FockWeight::pairing(const FockWeight& mu) const {
  Scalar s;
  auto m = mu.momentum();
  for (size_t g = 0; g < lambda.size(); ++g)
    if (!lambda[g].is_zero()) s += lambda[g] * m[g];
  return s;
}

FockWeight FockWeight::operator+(const FockWeight& o) const {
  FockWeight r = *this;
  for (size_t g = 0; g < lambda.size(); ++g) r.lambda[g] += o.lambda[g];
  return r;
}

std::string FockWeight::str() const {
  std::string s;
  for (size_t g = 0; g < lambda.size(); ++g) {
    if (lambda[g].is_zero()) continue;
    if (!s.empty()) s += " + ";
    const Scalar& c = lambda[g];
    if (!c.is_one()) s += (c.needs_parens() ? "(" + c.str() + ")" : c.str()) + "*";
    s += table->gen(static_cast<int>(g)).name;
  }
  return s.empty() ? "0" : s;
}

FockState FockState::vacuum(const FieldState& body) { return FockState{FockWeight::zero(body.table()), body}; }

std::string FockState::str() const {
  if (base.is_zero()) return body.str();
  return "(" + body.str() + ") e^(" + base.str() + ")";
}

namespace {

Terms act(const GeneratorTable& t, const std::vector<Scalar>& mom, const FieldState& a, int n,
          const Terms& body) {
  Terms out;
  if (n < 0) {
    // a_(-1-j) = (D^j a)_(-1) / j!
    const int j = -n - 1;
    Rational fact = 1;
    for (int i = 2; i <= j; ++i) fact *= i;
    FieldState da = derive(a, j);
    for (const auto& [ma, ca] : da.terms())
      for (const auto& [mb, cb] : body) {
        Scalar c = ca * cb / Scalar(fact);
        if (ma.empty())
          add_to(out, mb, c);
        else
          add_to(out, module_normal_order(t, mom, ma, mb), c);
      }
    return out;
  }
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : body)
      if (!ma.empty()) add_to(out, module_nth_product(t, mom, ma, n, mb), ca * cb);
  return out;
}

int max_weight(const Terms& body, const GeneratorTable& t) {
  int tw = 0;
  for (const auto& [m, c] : body) tw = std::max(tw, twice_weight(t, m));
  return (tw + 1) / 2;
}

}  // namespace

FockState fock_nth_product(const FieldState& a, int n, const FockState& v) {
  require_same_table(a, v.body);
  const TablePtr& t = v.body.table();
  return FockState{v.base, FieldState(t, act(*t, v.base.momentum(), a, n, v.body.terms()))};
}

FockState vertex_operator_apply(const FockWeight& lambda, const FieldState& dressing, int mode,
                                const FockState& v) {
  require_same_table(dressing, v.body);
  const TablePtr& t = v.body.table();
  if (lambda.table != t || v.base.table != t) throw Error(ErrorCode::MixedTables, "Fock weight over another table");
  for (const auto& [m, c] : dressing.terms())
    for (const Sym& s : m)
      if (t->is_boson(s.gen)) throw Error(ErrorCode::InvalidArgument, "dressing involves a free boson");

  Scalar s = lambda.pairing(v.base);
  if (!s.is_integer())
    throw Error(ErrorCode::NonIntegralExponents, "exponent pairing " + s.str() + " is not an integer");
  const long shift = s.constant_value().get_num().get_si();

  FockWeight target = v.base + lambda;
  const auto mom_src = v.base.momentum();
  const auto mom_dst = target.momentum();
  std::vector<int> support;
  for (int g = 0; g < t->size(); ++g)
    if (!lambda.lambda[g].is_zero()) support.push_back(g);

  // Positive modes: v_p is the z^{-p} coefficient of exp(-sum_n lambda_(n) z^{-n}/n) v.
  const int pmax = max_weight(v.body.terms(), *t);
  std::vector<Terms> vp{v.body.terms()};
  for (int p = 1; p <= pmax; ++p) {
    Terms next;
    for (int n = 1; n <= p; ++n)
      for (int g : support)
        for (const auto& [m, c] : vp[p - n])
          add_to(next, module_nth_product(*t, mom_src, Mono{Sym{g, 0}}, n, m),
                 -lambda.lambda[g] * c / Scalar(p));
    vp.push_back(std::move(next));
  }

  // Negative modes on the shifted module, z^q coefficient of exp(sum_m lambda_(-m) z^m/m).
  auto raise = [&](const Terms& y, int q) {
    std::vector<Terms> e{y};
    for (int r = 1; r <= q; ++r) {
      Terms next;
      for (int m = 1; m <= r; ++m) {
        Rational f = 1;
        for (int i = 2; i < m; ++i) f *= i;
        for (int g : support)
          for (const auto& [w, c] : e[r - m])
            add_to(next, module_normal_order(*t, mom_dst, Mono{Sym{g, m - 1}}, w),
                   lambda.lambda[g] * c / Scalar(f * r));
      }
      e.push_back(std::move(next));
    }
    return e.back();
  };

  int dmax = 0;
  for (const auto& [m, c] : dressing.terms()) dmax = std::max(dmax, twice_weight(*t, m));
  Terms out;
  for (int p = 0; p <= pmax; ++p) {
    if (vp[p].empty()) continue;
    const int nmax = (dmax + 1) / 2 + max_weight(vp[p], *t) + 1;
    for (long n = shift + mode - p; n <= nmax; ++n) {
      Terms y = act(*t, mom_src, dressing, static_cast<int>(n), vp[p]);
      if (y.empty()) continue;
      add_to(out, raise(y, static_cast<int>(p + n - shift - mode)));
    }
  }
  return FockState{target, FieldState(t, out)};
}

FockWeight exponent_weight(const ScreeningSpec& spec) {
  const TablePtr& t = spec.dressing.table();
  std::vector<std::pair<std::string, Scalar>> coeffs;
  for (size_t i = 0; i < spec.exponent.size(); ++i)
    if (!spec.exponent[i].is_zero()) coeffs.emplace_back("b[" + std::to_string(i + 1) + "]", spec.exponent[i]);
  return FockWeight::from(t, coeffs);
}

FockState screening_apply(const ScreeningSpec& spec, const FockState& v) {
  return vertex_operator_apply(exponent_weight(spec), spec.dressing, 0, v);
}

Report intertwiner_commutation_check(const AffineLift& levi, const Wakimoto& w, int alpha,
                                     const GlElem& u, const Root& beta) {
  const Grading& g = w.chart().grading;
  Report r("fock.intertwiner");
  r.input("alpha", std::to_string(alpha)).input("u", u.str()).input("beta", beta.str());
  r.record("cocycle", "1");

  ScreeningSpec spec = screening_spec(w, levi.ff, alpha);
  FockWeight at = exponent_weight(spec);
  r.record("weight", at.str());
  Root a{alpha, alpha + 1};
  std::vector<Root> members;
  for (const auto& cl : root_classes(g))
    if (cl.alpha == alpha) members = cl.members;
  auto state = [&](const Root& b) { return FockState{at, poly_field(levi.ff, w.chart(), w.PR(a, b))}; };

  FieldState img;
  if (!levi.image(u, img)) throw Error(ErrorCode::InvalidArgument, u.str() + " is outside the Levi lift");
  FockState vb = state(beta);
  for (int n = 1; n <= 3; ++n) {
    FockState x = fock_nth_product(img, n, vb);
    r.expect(x.is_zero(), "u_(" + std::to_string(n) + ")v", x.str());
  }
  FockState lhs = fock_nth_product(img, 0, vb);
  FieldState rhs(levi.ff.table);
  for (const Root& gm : members) {
    Scalar c = bracket(gm.elem(), u).entry(beta.i, beta.j);
    if (!c.is_zero()) rhs += c * state(gm).body;
  }
  r.expect(lhs.body == rhs, "u_(0)v", lhs.body.str() + " != " + rhs.str());
  return r;
}

Report intertwiner_checks(const Grading& g, const std::string& label) {
  Report top("fock.intertwiner." + label);
  top.input("grading", label);
  AffineLift levi = affine_lift(g, true);
  Wakimoto w(g);
  for (const auto& cl : root_classes(g))
    for (const auto& [ij, img] : levi.images)
      for (const Root& b : cl.members) {
        Report r = intertwiner_commutation_check(levi, w, cl.alpha, GlElem::unit(ij.first, ij.second), b);
        r.check = "fock.intertwiner." + label + ".a" + std::to_string(cl.alpha) + ".e" +
                  std::to_string(ij.first) + std::to_string(ij.second) + ".b" + std::to_string(b.i) +
                  std::to_string(b.j);
        top.add(std::move(r));
      }
  return top;
}

FieldState realize_levi(const FieldState& x, const AffineLift& lift,
                        const std::function<GlElem(const std::string&)>& unit) {
  const TablePtr& t = x.table();
  std::vector<FieldState> images;
  for (int g = 0; g < t->size(); ++g) {
    FieldState img;
    if (!lift.image(unit(t->gen(g).name), img))
      throw Error(ErrorCode::InvalidArgument, t->gen(g).name + " has no image in the Levi lift");
    images.push_back(img);
  }
  return substitute(x, lift.ff.table, images);
}

namespace {

void kernel_item(Report& top, const std::string& id, const std::string& q, const std::string& x,
                 const FockState& out, const FockWeight& exponent) {
  Report r(id);
  r.input("screening", q).input("field", x);
  r.record("weight", out.base.str()).record("cocycle", "1");
  r.expect(out.base == exponent, "weight shift", out.base.str());
  r.expect(out.is_zero(), "Q(" + x + ")", out.body.str());
  top.add(std::move(r));
}

}  // namespace

Report principal_kernel_check(int N) {
  Report top("screen.principal.gl" + std::to_string(N));
  top.input("N", std::to_string(N));
  TablePtr t = principal_table(N);
  std::vector<std::string> names;
  for (int i = 1; i <= N; ++i) names.push_back("h" + std::to_string(i));
  auto W = principal_generators(t, names, Scalar::k() + Scalar(N - 1));
  Scalar inv = (Scalar::k() + Scalar(N)).inverse();
  for (int i = 1; i < N; ++i) {
    FockWeight lam = FockWeight::from(t, {{names[i - 1], -inv}, {names[i], inv}});
    for (int j = 1; j <= N; ++j) {
      FockState out = vertex_operator_apply(lam, FieldState::one(t), 0, FockState::vacuum(W[j]));
      kernel_item(top, top.check + ".Q" + std::to_string(i) + ".W" + std::to_string(j), "Q" + std::to_string(i),
                  "W" + std::to_string(j), out, lam + FockWeight::zero(t));
    }
  }
  return top;
}

namespace {

GlElem levi_unit(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'h') {
    int i = std::stoi(name.substr(1));
    return GlElem::unit(i, i);
  }
  if (name.size() == 3 && name[0] == 'e') return GlElem::unit(name[1] - '0', name[2] - '0');
  throw Error(ErrorCode::InvalidArgument, "not a Levi current: " + name);
}

void screen_all(Report& top, const Grading& g, const AffineLift& lift,
                const std::vector<std::pair<std::string, FieldState>>& fields) {
  Wakimoto w(g);
  for (int s = 1; s < g.N; ++s) {
    ScreeningSpec spec = screening_spec(w, lift.ff, s);
    FockWeight lam = exponent_weight(spec);
    top.record("Q" + std::to_string(s), std::string(kind_name(spec.kind)) + ": " + spec.dressing.str());
    for (const auto& [name, x] : fields) {
      FockState out = screening_apply(spec, FockState::vacuum(x));
      kernel_item(top, top.check + ".Q" + std::to_string(s) + "." + name, "Q" + std::to_string(s), name, out, lam);
    }
  }
}

}  // namespace

Report subregular_kernel_check(int N) {
  Report top("screen.subregular.gl" + std::to_string(N));
  top.input("N", std::to_string(N));
  Grading g = subregular_grading(N);
  AffineLift lift = affine_lift(g, true);
  top.add(lift.audit);
  SubregularFields f = subregular_generators(N, N);
  std::vector<std::pair<std::string, FieldState>> fields;
  for (const auto& [name, x] : std::vector<std::pair<std::string, FieldState>>{{"H", f.H}, {"Z", f.Z}, {"E", f.E}, {"F", f.F}})
    fields.emplace_back(name, realize_levi(x, lift, levi_unit));
  screen_all(top, g, lift, fields);
  return top;
}

Report rectangular_kernel_check(int n, int l) {
  Report top("screen.rectangular." + std::to_string(n) + "x" + std::to_string(l));
  top.input("n", std::to_string(n)).input("l", std::to_string(l));
  Grading g = Pyramid::from_columns(std::vector<int>(l, n)).grading();
  AffineLift lift = affine_lift(g, true);
  top.add(lift.audit);
  auto W = rectangular_generators(n, l);
  auto unit = [n](const std::string& name) {
    // e[t,i,j]
    int t = 0, i = 0, j = 0;
    if (std::sscanf(name.c_str(), "e[%d,%d,%d]", &t, &i, &j) != 3)
      throw Error(ErrorCode::InvalidArgument, "not a rectangular current: " + name);
    return GlElem::unit((t - 1) * n + i, (t - 1) * n + j);
  };
  std::vector<std::pair<std::string, FieldState>> fields;
  for (int m = 1; m <= l; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        fields.emplace_back("W" + std::to_string(m) + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
                            realize_levi(W[m].at(i, j), lift, unit));
  screen_all(top, g, lift, fields);
  return top;
}

}  // namespace walg
