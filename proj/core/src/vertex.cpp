#include "walg/vertex.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace walg {

namespace {

Rational factorial(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational falling(int m, int i) {
  Rational r = 1;
  for (int t = 0; t < i; ++t) r *= (m - t);
  return r;
}

Rational binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  return falling(n, k) / factorial(k);
}

int mode_bound(int twice_a, int twice_b) {
  // a_(m)b vanishes unless m <= wt(a) + wt(b) - 1
  int s = twice_a + twice_b;
  return (s >= 0 ? s / 2 : -((-s + 1) / 2)) - 1;
}

struct SymLin {
  std::vector<std::pair<Sym, Scalar>> syms;
  Scalar constant;
  bool empty() const { return syms.empty() && constant.is_zero(); }
};

}  // namespace

void add_to(Terms& acc, const Mono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = acc.find(m);
  if (it == acc.end()) {
    acc.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

void add_to(Terms& acc, const Terms& t, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [m, v] : t) add_to(acc, m, c.is_one() ? v : v * c);
}

LinGen LinGen::negated() const {
  LinGen r = *this;
  r.constant = -r.constant;
  for (auto& [g, s] : r.gens) s = -s;
  return r;
}

size_t GeneratorTable::KeyHash::operator()(const std::vector<int>& v) const noexcept {
  size_t h = 1469598103934665603ull;
  for (int x : v) {
    h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

int GeneratorTable::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

int GeneratorTable::index(const std::string& name) const {
  int i = find(name);
  if (i < 0) throw Error(ErrorCode::InvalidArgument, "unknown generator " + name + " in table " + label_);
  return i;
}

const Scalar& GeneratorTable::pair2(int a, int b) const { return pair2_.at(a).at(b); }
const LinGen& GeneratorTable::pair1(int a, int b) const { return pair1_.at(a).at(b); }

// ---------------------------------------------------------------- builder

TableBuilder::TableBuilder(std::string label) : t_(new GeneratorTable()) { t_->label_ = std::move(label); }

int TableBuilder::add(const std::string& name, int twice_weight) {
  if (t_->by_name_.count(name)) throw Error(ErrorCode::InvalidArgument, "duplicate generator " + name);
  if (twice_weight < 0) throw Error(ErrorCode::InvalidArgument, "negative weight for " + name);
  int i = static_cast<int>(t_->gens_.size());
  t_->gens_.push_back({name, twice_weight});
  t_->by_name_[name] = i;
  for (auto& row : t_->pair2_) row.emplace_back();
  for (auto& row : t_->pair1_) row.emplace_back();
  t_->pair2_.emplace_back(i + 1);
  t_->pair1_.emplace_back(i + 1);
  return i;
}

int TableBuilder::index(const std::string& name) const { return t_->index(name); }

TableBuilder& TableBuilder::pair2(const std::string& a, const std::string& b, const Scalar& s) {
  int i = index(a), j = index(b);
  t_->pair2_[i][j] = s;
  t_->pair2_[j][i] = s;
  return *this;
}

TableBuilder& TableBuilder::pair1(const std::string& a, const std::string& b, const LinGen& v) {
  int i = index(a), j = index(b);
  LinGen sorted = v;
  std::sort(sorted.gens.begin(), sorted.gens.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  sorted.gens.erase(std::remove_if(sorted.gens.begin(), sorted.gens.end(),
                                   [](const auto& x) { return x.second.is_zero(); }),
                    sorted.gens.end());
  if (i == j && !sorted.is_zero())
    throw Error(ErrorCode::InvalidArgument, "even generator " + a + " cannot have a first-order self pole");
  t_->pair1_[i][j] = sorted;
  t_->pair1_[j][i] = sorted.negated();
  return *this;
}

TableBuilder& TableBuilder::pole(const UPoly& f) {
  t_->poles_.add(f);
  return *this;
}

TablePtr TableBuilder::build() {
  auto& t = *t_;
  int n = t.size();
  t.boson_.assign(n, true);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int ta = t.gens_[a].twice_weight, tb = t.gens_[b].twice_weight;
      if (!t.pair2_[a][b].is_zero() && ta + tb != 4)
        throw Error(ErrorCode::InvalidArgument,
                    "second-order pole between " + t.gens_[a].name + " and " + t.gens_[b].name +
                        " violates weight additivity");
      const LinGen& p = t.pair1_[a][b];
      if (!p.constant.is_zero() && ta + tb != 2)
        throw Error(ErrorCode::InvalidArgument, "constant first-order pole with wrong weights");
      for (const auto& [g, s] : p.gens)
        if (t.gens_[g].twice_weight != ta + tb - 2)
          throw Error(ErrorCode::InvalidArgument, "first-order pole with wrong weight");
      if (!p.is_zero()) {
        t.boson_[a] = false;
        t.boson_[b] = false;
      }
    }
  }
  TablePtr out = t_;
  t_.reset();
  return out;
}

// ---------------------------------------------------------------- engine

class Engine {
 public:
  Engine(const GeneratorTable& t, const std::vector<Scalar>* mom) : t_(t), mom_(mom) {}

  SymLin lin_prod(Sym s, int j, Sym t) const {
    SymLin out;
    if (j < s.der) return out;
    int m = j - s.der;
    Rational f = falling(j, s.der);
    if (s.der % 2) f = -f;
    for (int i = 0; i <= std::min(t.der, m); ++i) {
      int mm = m - i;
      if (mm > 1) continue;
      Scalar c = Scalar(f * binom(t.der, i) * falling(m, i));
      int dd = t.der - i;
      if (mm == 0) {
        const LinGen& p = t_.pair1(s.gen, t.gen);
        for (const auto& [g, v] : p.gens) out.syms.push_back({Sym{g, dd}, c * v});
        if (dd == 0 && !p.constant.is_zero()) out.constant += c * p.constant;
      } else if (dd == 0) {
        const Scalar& p2 = t_.pair2(s.gen, t.gen);
        if (!p2.is_zero()) out.constant += c * p2;
      }
    }
    return out;
  }

  Terms insert(Sym s, const Mono& w) {
    if (w.empty() || s <= w.front()) {
      Mono r;
      r.reserve(w.size() + 1);
      r.push_back(s);
      r.insert(r.end(), w.begin(), w.end());
      return Terms{{r, Scalar(1)}};
    }
    std::vector<int> key;
    if (cacheable()) {
      key = {0, s.gen, s.der};
      push(key, w);
      if (auto hit = lookup(key)) return *hit;
    }
    Sym t = w.front();
    Mono rest(w.begin() + 1, w.end());
    Terms out;
    for (const auto& [y, c] : insert(s, rest)) add_to(out, insert(t, y), c);
    for (int j = 0; j <= s.der + t.der + 1; ++j) {
      SymLin l = lin_prod(s, j, t);
      if (l.syms.empty()) continue;
      Scalar coef = Scalar(Rational((j % 2) ? -1 : 1) / factorial(j + 1));
      for (const auto& [u, cu] : l.syms) add_to(out, insert(Sym{u.gen, u.der + j + 1}, rest), coef * cu);
    }
    if (cacheable()) store(key, out);
    return out;
  }

  Terms act(Sym s, int m, const Mono& w) {
    if (m < s.der) return {};
    Rational f = falling(m, s.der);
    if (s.der % 2) f = -f;
    Terms r = act_gen(s.gen, m - s.der, w);
    if (f == 1) return r;
    Terms out;
    add_to(out, r, Scalar(f));
    return out;
  }

  Terms act_gen(int g, int j, const Mono& w) {
    if (w.empty()) {
      if (j == 0 && mom_ && !(*mom_)[g].is_zero()) return Terms{{Mono{}, (*mom_)[g]}};
      return {};
    }
    std::vector<int> key;
    if (cacheable()) {
      key = {1, g, j};
      push(key, w);
      if (auto hit = lookup(key)) return *hit;
    }
    Sym t = w.front();
    Mono rest(w.begin() + 1, w.end());
    Terms out;
    for (const auto& [y, c] : act_gen(g, j, rest)) add_to(out, insert(t, y), c);
    for (int i = 0; i <= std::min(j, t.der + 1); ++i) {
      SymLin l = lin_prod(Sym{g, 0}, i, t);
      if (l.empty()) continue;
      Scalar b = Scalar(binom(j, i));
      if (i == j) {
        for (const auto& [u, cu] : l.syms) add_to(out, insert(u, rest), b * cu);
        if (!l.constant.is_zero()) add_to(out, rest, b * l.constant);
      } else {
        for (const auto& [u, cu] : l.syms) add_to(out, act(u, j - 1 - i, rest), b * cu);
      }
    }
    if (cacheable()) store(key, out);
    return out;
  }

  Terms derive(const Mono& w) {
    if (w.empty()) return {};
    std::vector<int> key;
    if (cacheable()) {
      key = {4};
      push(key, w);
      if (auto hit = lookup(key)) return *hit;
    }
    Sym t = w.front();
    Mono rest(w.begin() + 1, w.end());
    Terms out = insert(Sym{t.gen, t.der + 1}, rest);
    for (const auto& [y, c] : derive(rest)) add_to(out, insert(t, y), c);
    if (cacheable()) store(key, out);
    return out;
  }

  Terms derive_n(const Mono& w, int times) {
    Terms cur{{w, Scalar(1)}};
    for (int i = 0; i < times; ++i) {
      Terms next;
      for (const auto& [y, c] : cur) add_to(next, derive(y), c);
      cur.swap(next);
    }
    return cur;
  }

  Terms nprod(const Mono& a, int n, const Mono& x) {
    if (a.empty()) return {};
    if (n > mode_bound(tw(a), tw(x))) return {};
    if (a.size() == 1) return act(a.front(), n, x);
    std::vector<int> key;
    if (cacheable()) {
      key = {2, n, static_cast<int>(a.size())};
      push(key, a);
      push(key, x);
      if (auto hit = lookup(key)) return *hit;
    }
    Sym s = a.front();
    Mono rest(a.begin() + 1, a.end());
    Terms out;
    const int b1 = mode_bound(tw(rest), tw(x));
    for (int j = 0; n + j <= b1; ++j) {
      Terms y = nprod(rest, n + j, x);
      Scalar inv = Scalar(1 / factorial(j));
      for (const auto& [w, c] : y) add_to(out, insert(Sym{s.gen, s.der + j}, w), c * inv);
    }
    const int b2 = mode_bound(t_.gen(s.gen).twice_weight + 2 * s.der, tw(x));
    for (int j = 0; j <= b2; ++j) {
      Terms z = act(s, j, x);
      if (z.empty()) continue;
      if (n - 1 - j >= 0) {
        for (const auto& [w, c] : z) add_to(out, nprod(rest, n - 1 - j, w), c);
      } else {
        int i = j - n;
        Scalar inv = Scalar(1 / factorial(i));
        Terms d = derive_n(rest, i);
        for (const auto& [dw, dc] : d)
          for (const auto& [w, c] : z) add_to(out, no(dw, w), dc * c * inv);
      }
    }
    if (cacheable()) store(key, out);
    return out;
  }

  Terms no(const Mono& a, const Mono& x) {
    if (a.empty()) return Terms{{x, Scalar(1)}};
    if (a.size() == 1) return insert(a.front(), x);
    std::vector<int> key;
    if (cacheable()) {
      key = {3, static_cast<int>(a.size())};
      push(key, a);
      push(key, x);
      if (auto hit = lookup(key)) return *hit;
    }
    Sym s = a.front();
    Mono rest(a.begin() + 1, a.end());
    Terms out;
    for (const auto& [w, c] : no(rest, x)) add_to(out, insert(s, w), c);
    const int b1 = mode_bound(tw(rest), tw(x));
    for (int j = 1; j - 1 <= b1; ++j) {
      Terms y = nprod(rest, j - 1, x);
      Scalar inv = Scalar(1 / factorial(j));
      for (const auto& [w, c] : y) add_to(out, insert(Sym{s.gen, s.der + j}, w), c * inv);
    }
    const int b2 = mode_bound(t_.gen(s.gen).twice_weight + 2 * s.der, tw(x));
    for (int j = 0; j <= b2; ++j) {
      Terms z = act(s, j, x);
      if (z.empty()) continue;
      Scalar inv = Scalar(1 / factorial(j + 1));
      Terms d = derive_n(rest, j + 1);
      for (const auto& [dw, dc] : d)
        for (const auto& [w, c] : z) add_to(out, no(dw, w), dc * c * inv);
    }
    if (cacheable()) store(key, out);
    return out;
  }

  int tw(const Mono& m) const { return twice_weight(t_, m); }

 private:
  bool cacheable() const { return mom_ == nullptr; }
  static void push(std::vector<int>& key, const Mono& m) {
    key.push_back(-1);
    for (const auto& s : m) {
      key.push_back(s.gen);
      key.push_back(s.der);
    }
  }
  const Terms* lookup(const std::vector<int>& key) {
    std::lock_guard<std::mutex> lock(t_.cache_mu_);
    auto it = t_.cache_.find(key);
    if (it == t_.cache_.end()) return nullptr;
    scratch_ = it->second;
    return &scratch_;
  }
  void store(const std::vector<int>& key, const Terms& v) {
    std::lock_guard<std::mutex> lock(t_.cache_mu_);
    t_.cache_.emplace(key, v);
  }

  const GeneratorTable& t_;
  const std::vector<Scalar>* mom_;
  Terms scratch_;
};

// ---------------------------------------------------------------- FieldState

int twice_weight(const GeneratorTable& t, const Mono& m) {
  int w = 0;
  for (const auto& s : m) w += t.gen(s.gen).twice_weight + 2 * s.der;
  return w;
}

FieldState::FieldState(TablePtr t, Terms terms) : table_(std::move(t)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero()) it = terms_.erase(it);
    else ++it;
  }
}

FieldState FieldState::one(TablePtr t) { return scalar(std::move(t), Scalar(1)); }

FieldState FieldState::scalar(TablePtr t, const Scalar& s) {
  FieldState f(std::move(t));
  add_to(f.terms_, Mono{}, s);
  return f;
}

FieldState FieldState::gen(TablePtr t, const std::string& name, int der) {
  int g = t->index(name);
  return sym(std::move(t), Sym{g, der});
}

FieldState FieldState::sym(TablePtr t, Sym s) {
  FieldState f(std::move(t));
  f.terms_.emplace(Mono{s}, Scalar(1));
  return f;
}

FieldState FieldState::nested(TablePtr t, const std::vector<Sym>& word, const Scalar& c) {
  Engine e(*t, nullptr);
  Terms cur{{Mono{}, c}};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    Terms next;
    for (const auto& [w, v] : cur) add_to(next, e.insert(*it, w), v);
    cur.swap(next);
  }
  return FieldState(std::move(t), std::move(cur));
}

Scalar FieldState::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

FieldState FieldState::operator-() const {
  FieldState r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

FieldState& FieldState::operator+=(const FieldState& o) {
  if (o.terms_.empty()) {
    if (!table_) table_ = o.table_;
    return *this;
  }
  if (!table_) table_ = o.table_;
  require_same_table(*this, o);
  add_to(terms_, o.terms_);
  return *this;
}

FieldState& FieldState::operator-=(const FieldState& o) { return *this += -o; }

FieldState& FieldState::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

bool operator==(const FieldState& a, const FieldState& b) {
  if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
  if (a.table_ != b.table_) return false;
  return a.terms_ == b.terms_;
}

std::vector<int> FieldState::twice_weights() const {
  std::set<int> w;
  for (const auto& [m, c] : terms_) w.insert(twice_weight(*table_, m));
  return {w.begin(), w.end()};
}

namespace {

std::string factor_str(const GeneratorTable& t, Sym s) {
  const std::string& n = t.gen(s.gen).name;
  if (s.der == 0) return n;
  return "D^" + std::to_string(s.der) + "(" + n + ")";
}

std::string coeff_str(const Scalar& c) {
  if (c.is_constant()) return c.str();
  return "(" + c.str() + ")";
}

}  // namespace

std::string mono_str(const GeneratorTable& t, const Mono& m) {
  if (m.empty()) return "1";
  if (m.size() == 1) return factor_str(t, m.front());
  std::string s = "NO(";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += factor_str(t, m[i]);
  }
  return s + ")";
}

std::string FieldState::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += coeff_str(c) + "*" + mono_str(*table_, m);
  }
  return out;
}

void require_same_table(const FieldState& a, const FieldState& b) {
  if (a.table() && b.table() && a.table() != b.table())
    throw Error(ErrorCode::MixedTables,
                "operands over tables " + a.table()->label() + " and " + b.table()->label());
}

namespace {

TablePtr common_table(const FieldState& a, const FieldState& b) {
  require_same_table(a, b);
  TablePtr t = a.table() ? a.table() : b.table();
  if (!t) throw Error(ErrorCode::InvalidArgument, "field state without a generator table");
  return t;
}

}  // namespace

FieldState normal_order(const FieldState& a, const FieldState& b) {
  TablePtr t = common_table(a, b);
  Engine e(*t, nullptr);
  Terms out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) add_to(out, e.no(ma, mb), ca * cb);
  return FieldState(t, std::move(out));
}

FieldState normal_order(const std::vector<FieldState>& factors) {
  if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "empty normal-ordered product");
  FieldState acc = factors.back();
  for (size_t i = factors.size() - 1; i-- > 0;) acc = normal_order(factors[i], acc);
  return acc;
}

FieldState derive(const FieldState& a, int times) {
  if (a.is_zero() || times == 0) return a;
  Engine e(*a.table(), nullptr);
  Terms out;
  for (const auto& [m, c] : a.terms()) add_to(out, e.derive_n(m, times), c);
  return FieldState(a.table(), std::move(out));
}

FieldState nth_product(const FieldState& a, int n, const FieldState& b) {
  if (n < 0) {
    FieldState d = derive(a, -n - 1);
    return normal_order(d, b) * Scalar(1 / factorial(-n - 1));
  }
  TablePtr t = common_table(a, b);
  Engine e(*t, nullptr);
  Terms out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) add_to(out, e.nprod(ma, n, mb), ca * cb);
  return FieldState(t, std::move(out));
}

std::vector<FieldState> ope(const FieldState& a, const FieldState& b) {
  std::vector<FieldState> out;
  if (a.is_zero() || b.is_zero()) return out;
  TablePtr t = common_table(a, b);
  int top = -1;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      top = std::max(top, mode_bound(twice_weight(*t, ma), twice_weight(*t, mb)));
  for (int n = 0; n <= top; ++n) out.push_back(nth_product(a, n, b));
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

FieldState canonical_form(const FieldState& a) {
  if (!a.table()) return a;
  FieldState out(a.table());
  for (const auto& [m, c] : a.terms()) out += FieldState::nested(a.table(), m, c);
  return out;
}

FieldState substitute(const FieldState& a, const TablePtr& target,
                      const std::vector<FieldState>& images) {
  if (!a.table()) return FieldState(target);
  if (static_cast<int>(images.size()) != a.table()->size())
    throw Error(ErrorCode::InvalidArgument, "substitute needs one image per generator");
  std::map<Sym, FieldState> memo;
  auto image = [&](Sym s) -> const FieldState& {
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    FieldState base = images[s.gen];
    if (base.table() && base.table() != target)
      throw Error(ErrorCode::MixedTables, "image not over the target table");
    FieldState img = base.is_zero() ? FieldState(target) : derive(base, s.der);
    return memo.emplace(s, img).first->second;
  };
  FieldState out(target);
  for (const auto& [m, c] : a.terms()) {
    FieldState acc = FieldState::one(target);
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
      const FieldState& f = image(*it);
      if (f.is_zero()) {
        acc = FieldState(target);
        break;
      }
      acc = normal_order(f, acc);
    }
    out += acc * c;
  }
  return out;
}

Terms module_nth_product(const GeneratorTable& t, const std::vector<Scalar>& mom, const Mono& a, int n,
                         const Mono& body) {
  Engine e(t, &mom);
  return e.nprod(a, n, body);
}

Terms module_normal_order(const GeneratorTable& t, const std::vector<Scalar>& mom, const Mono& a,
                          const Mono& body) {
  Engine e(t, &mom);
  return e.no(a, body);
}

// ---------------------------------------------------------------- parser

namespace {

std::string strip(const std::string& s) {
  std::string r;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) r += c;
  return r;
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  out.push_back(cur);
  return out;
}

Sym parse_factor(const GeneratorTable& t, const std::string& f) {
  if (f.rfind("D^", 0) == 0) {
    size_t open = f.find('(');
    if (open == std::string::npos || f.back() != ')')
      throw Error(ErrorCode::ParseError, "bad derivative factor " + f);
    int m = std::stoi(f.substr(2, open - 2));
    return Sym{t.index(f.substr(open + 1, f.size() - open - 2)), m};
  }
  if (f.rfind("D(", 0) == 0 && f.back() == ')') return Sym{t.index(f.substr(2, f.size() - 3)), 1};
  int g = t.find(f);
  if (g < 0) throw Error(ErrorCode::ParseError, "unknown generator " + f);
  return Sym{g, 0};
}

std::vector<Sym> parse_mono(const GeneratorTable& t, const std::string& m) {
  if (m == "1") return {};
  if (m.rfind("NO(", 0) == 0 && m.back() == ')') {
    std::vector<Sym> out;
    for (const auto& f : split_top(m.substr(3, m.size() - 4), ',')) out.push_back(parse_factor(t, f));
    return out;
  }
  return {parse_factor(t, m)};
}

}  // namespace

FieldState parse_field(const TablePtr& t, const std::string& text) {
  std::string s = strip(text);
  FieldState out(t);
  if (s == "0") return out;
  for (const auto& term : split_top(s, '+')) {
    if (term.empty()) throw Error(ErrorCode::ParseError, "empty term in " + text);
    std::vector<std::string> parts = split_top(term, '*');
    Scalar c(1);
    std::string mono;
    if (parts.size() == 1) {
      mono = parts[0];
    } else if (parts.size() == 2) {
      c = Scalar::from_string(parts[0]);
      mono = parts[1];
    } else {
      throw Error(ErrorCode::ParseError, "bad term " + term);
    }
    out += FieldState::nested(t, parse_mono(*t, mono), c);
  }
  return out;
}

}  // namespace walg
