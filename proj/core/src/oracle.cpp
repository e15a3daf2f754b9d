#include "walg/oracle.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace walg {

namespace {

Scalar falling(int n, int d) {
  Scalar r(1);
  for (int i = 0; i < d; ++i) r *= Scalar(n - i);
  return r;
}

int floor_div2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

void accumulate(ModeOracle::State& acc, const ModeOracle::State& s, const Scalar& c = Scalar(1)) {
  for (const auto& [m, v] : s) {
    Scalar& slot = acc[m];
    slot += c * v;
    if (slot.is_zero()) acc.erase(m);
  }
}

}  // namespace

ModeOracle::ModeOracle(TablePtr t) : t_(std::move(t)) {
  for (int a = 0; a < t_->size(); ++a)
    for (int b = 0; b < t_->size(); ++b)
      if (!t_->pair1(a, b).gens.empty())
        throw Error(ErrorCode::InvalidArgument, "mode oracle needs a free-field table; " + t_->gen(a).name +
                                                    " and " + t_->gen(b).name + " have a current pole");
}

ModeOracle::State ModeOracle::vacuum() const { return {{Monomial{}, Scalar(1)}}; }

int ModeOracle::twice_weight(const Monomial& m) const {
  int w = 0;
  for (auto [g, mode] : m) w += t_->gen(g).twice_weight - 2 * mode - 2;
  return w;
}

int ModeOracle::max_twice_weight(const State& v) const {
  int w = 0;
  for (const auto& [m, c] : v) w = std::max(w, twice_weight(m));
  return w;
}

ModeOracle::State ModeOracle::apply_mode(int g, int m, const State& v) const {
  State out;
  if (m < 0) {
    for (const auto& [mono, c] : v) {
      Monomial x = mono;
      x.insert(std::upper_bound(x.begin(), x.end(), std::make_pair(g, m)), {g, m});
      accumulate(out, {{x, c}});
    }
    return out;
  }
  // Annihilation acts as a derivation on the creation modes.
  for (const auto& [mono, c] : v)
    for (size_t i = 0; i < mono.size(); ++i) {
      if (i > 0 && mono[i] == mono[i - 1]) continue;
      auto [h, n] = mono[i];
      Scalar br;
      if (m + n == -1) br += t_->pair1(g, h).constant;
      if (m + n == 0) br += Scalar(m) * t_->pair2(g, h);
      if (br.is_zero()) continue;
      const long mult = std::count(mono.begin(), mono.end(), mono[i]);
      Monomial x = mono;
      x.erase(x.begin() + static_cast<long>(i));
      accumulate(out, {{x, c * br * Scalar(mult)}});
    }
  return out;
}

ModeOracle::State ModeOracle::apply(const Mono& word, int n, const State& v) const {
  if (word.empty()) return n == -1 ? v : State{};
  if (v.size() == 1 && v.begin()->second.is_one()) {
    auto key = std::make_tuple(word, n, v.begin()->first);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    State out = apply_word(word, n, v);
    cache_.emplace(std::move(key), out);
    return out;
  }
  State out;
  for (const auto& [mono, c] : v) accumulate(out, apply(word, n, State{{mono, Scalar(1)}}), c);
  return out;
}

ModeOracle::State ModeOracle::apply_word(const Mono& word, int n, const State& v) const {
  const Sym a = word.front();
  if (word.size() == 1) {
    Scalar f = falling(n, a.der);
    if (a.der % 2) f = -f;
    if (f.is_zero()) return {};
    State out = apply_mode(a.gen, n - a.der, v);
    for (auto& [m, c] : out) c *= f;
    return out;
  }
  const Mono rest(word.begin() + 1, word.end());
  const Mono head{a};
  const int twv = max_twice_weight(v);
  const int twa = t_->gen(a.gen).twice_weight + 2 * a.der;
  int twb = 0;
  for (const Sym& s : rest) twb += t_->gen(s.gen).twice_weight + 2 * s.der;
  State out;
  // (:A B:)_(n) = sum_{j<0} A_(j) B_(n-j-1) + sum_{j>=0} B_(n-j-1) A_(j)
  for (int j = -1; 2 * n - 2 * j - 2 + 2 <= twv + twb; --j) accumulate(out, apply(head, j, apply(rest, n - j - 1, v)));
  for (int j = 0; 2 * j + 2 <= twv + twa; ++j) accumulate(out, apply(rest, n - j - 1, apply(head, j, v)));
  return out;
}

ModeOracle::State ModeOracle::apply(const FieldState& x, int n, const State& v) const {
  State out;
  for (const auto& [word, c] : x.terms()) accumulate(out, apply(word, n, v), c);
  return out;
}

ModeOracle::State ModeOracle::state(const FieldState& x) const { return apply(x, -1, vacuum()); }

bool ModeOracle::same(const State& a, const State& b) { return a == b; }

std::vector<Mono> monomials_up_to(const GeneratorTable& t, int max_weight, int max_symbols) {
  std::vector<std::pair<Sym, int>> syms;  // symbol, twice weight
  for (int g = 0; g < t.size(); ++g)
    for (int d = 0; t.gen(g).twice_weight + 2 * d <= 2 * max_weight; ++d)
      syms.push_back({Sym{g, d}, t.gen(g).twice_weight + 2 * d});
  std::sort(syms.begin(), syms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Mono> out;
  Mono cur;
  std::function<void(size_t, int)> rec = [&](size_t from, int budget) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_symbols) return;
    for (size_t i = from; i < syms.size(); ++i) {
      if (syms[i].second > budget) continue;
      cur.push_back(syms[i].first);
      rec(i, budget - syms[i].second);
      cur.pop_back();
    }
  };
  rec(0, 2 * max_weight);
  return out;
}

Report engine_oracle_check(const TablePtr& t, int max_weight, int max_symbols, const std::string& id) {
  Report r(id);
  r.input("table", t->label());
  r.input("max_weight", std::to_string(max_weight));
  r.input("max_symbols", std::to_string(max_symbols));
  const auto monos = monomials_up_to(*t, max_weight, max_symbols);
  // Rows of the product table are split across workers, each with its own oracle cache.
  const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<long> compared(workers), failures(workers);
  std::vector<std::vector<std::string>> bad(workers);
  auto run = [&](unsigned w) {
    ModeOracle oracle(t);
    std::vector<ModeOracle::State> states;
    for (const auto& m : monos) states.push_back(oracle.state(FieldState(t, Terms{{m, Scalar(1)}})));
    for (size_t i = w; i < monos.size(); i += workers) {
      const FieldState A(t, Terms{{monos[i], Scalar(1)}});
      const int twa = walg::twice_weight(*t, monos[i]);
      for (size_t j = 0; j < monos.size(); ++j) {
        const FieldState B(t, Terms{{monos[j], Scalar(1)}});
        const int top = floor_div2(twa + walg::twice_weight(*t, monos[j])) + 1;
        for (int n = -2; n <= top; ++n) {
          ++compared[w];
          if (oracle.state(nth_product(A, n, B)) != oracle.apply(monos[i], n, states[j]) && ++failures[w] <= 5)
            bad[w].push_back(A.str() + " (" + std::to_string(n) + ") " + B.str());
        }
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  long total = 0, failed = 0;
  for (unsigned w = 0; w < workers; ++w) {
    total += compared[w];
    failed += failures[w];
    for (const auto& b : bad[w]) r.fail("nprod", b);
  }
  r.record("monomials", std::to_string(monos.size()));
  r.record("products_compared", std::to_string(total));
  r.expect(failed == 0, "mismatches", std::to_string(failed));
  return r;
}

}  // namespace walg
