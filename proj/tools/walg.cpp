#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "walg/acceptance.hpp"
#include "walg/coproduct.hpp"
#include "walg/fock.hpp"
#include "walg/glstruct.hpp"
#include "walg/miura.hpp"
#include "walg/wakimoto.hpp"

using namespace walg;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int max_n_bound() {
  const char* env = std::getenv("WALG_MAX_N");
  if (!env) return 7;
  try {
    size_t used = 0;
    int v = std::stoi(env, &used);
    if (used == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidArgument, std::string("WALG_MAX_N must be a positive integer, got '") + env + "'");
}

void bound(int N, const std::string& what) {
  const int m = max_n_bound();
  if (N > m)
    throw Error(ErrorCode::SizeBound, what + " has N = " + std::to_string(N) + " above the bound " + std::to_string(m) +
                                          " (raise WALG_MAX_N)");
}

Pyramid columns_arg(const std::string& s) {
  Pyramid p = Pyramid::parse(s);
  bound(p.size(), "pyramid " + s);
  return p;
}

enum class Shape { Principal, Subregular, Rectangular, Other };

Shape shape_of(const Pyramid& p) {
  const auto& q = p.columns();
  if (std::all_of(q.begin(), q.end(), [](int c) { return c == 1; })) return Shape::Principal;
  if (std::all_of(q.begin(), q.end(), [&](int c) { return c == q.front(); })) return Shape::Rectangular;
  if (q.front() == 2 && std::all_of(q.begin() + 1, q.end(), [](int c) { return c == 1; })) return Shape::Subregular;
  return Shape::Other;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

void print_human(const Report& r, int depth, bool details, std::ostream& os) {
  const std::string pad(2 * depth, ' ');
  os << pad << status_name(r.status) << "  " << r.check << "\n";
  if (details || !r.passed()) {
    for (const auto& [k, v] : r.inputs) os << pad << "    input   " << k << " = " << v << "\n";
    for (const auto& [k, v] : r.ledger) os << pad << "    ledger  " << k << " = " << v << "\n";
    for (const auto& [k, v] : r.witness) os << pad << "    witness " << k << " = " << v << "\n";
  }
  for (const auto& c : r.items) print_human(c, depth + 1, false, os);
}

int emit(std::vector<Report> reports, bool json) {
  for (auto& r : reports) r.canonicalize();
  std::sort(reports.begin(), reports.end(), [](const Report& a, const Report& b) { return a.check < b.check; });
  if (json) {
    std::cout << to_json(reports) << "\n";
  } else {
    for (const auto& r : reports) print_human(r, 0, true, std::cout);
  }
  const bool failed = std::any_of(reports.begin(), reports.end(), [](const Report& r) { return r.status == Status::Fail; });
  return failed ? kExitFail : 0;
}

Report pyramid_report(const Pyramid& p) {
  Report r("glstruct.pyramid");
  r.input("columns", p.columns_str());
  r.record("rows", join(p.rows()));
  r.record("N", std::to_string(p.size()));
  r.record("jordan_type", join(p.jordan_type()));
  r.record("simple_degrees", join(p.simple_degrees()));
  Grading g = p.grading();
  r.record("pi1", join(g.pi_one()));
  r.record("f", p.nilpotent().str());
  return r;
}

Report split_report(const Pyramid& p, int after) {
  PyramidSplit s = split_pyramid(p, after);
  Report r("glstruct.split");
  r.input("columns", p.columns_str()).input("after", std::to_string(after));
  r.record("left", s.left.columns_str()).record("right", s.right.columns_str());
  r.record("N1", std::to_string(s.levels.N1)).record("N2", std::to_string(s.levels.N2));
  r.record("k1", s.levels.k1.str()).record("k2", s.levels.k2.str());
  std::vector<int> lb(s.left_boxes.begin() + 1, s.left_boxes.end());
  std::vector<int> rb(s.right_boxes.begin() + 1, s.right_boxes.end());
  r.record("left_boxes", join(lb)).record("right_boxes", join(rb));
  r.add(induced_orbit_check(p, after));
  return r;
}

Report miura_principal(int N) {
  Report r("miura.principal.gl" + std::to_string(N));
  r.input("N", std::to_string(N));
  TablePtr t = principal_table(N);
  std::vector<std::string> names;
  for (int i = 1; i <= N; ++i) names.push_back("h" + std::to_string(i));
  auto W = principal_generators(t, names, Scalar::k() + Scalar(N - 1));
  r.record("c", (Scalar::k() + Scalar(N - 1)).str());
  for (int i = 1; i <= N; ++i) {
    r.witness.emplace_back("W" + std::to_string(i), W[i].str());
    r.expect(classical_shadow(W[i]) == elementary_symmetric(t, names, i), "shadow.W" + std::to_string(i),
             classical_shadow(W[i]).str());
  }
  return r;
}

Report miura_rectangular(int n, int l) {
  Report r("miura.rectangular." + std::to_string(n) + "x" + std::to_string(l));
  r.input("height", std::to_string(n)).input("width", std::to_string(l));
  auto W = rectangular_generators(n, l);
  r.record("c", (Scalar::k() + Scalar(n * (l - 1))).str());
  for (int m = 1; m <= l; ++m)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        r.witness.emplace_back("W" + std::to_string(m) + "[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "]",
                               W[m].at(a, b).str());
  return r;
}

Report miura_subregular(int N, int N1) {
  Report r("miura.subregular.gl" + std::to_string(N));
  r.input("N", std::to_string(N)).input("n1", std::to_string(N1));
  SubregularFields f = subregular_generators(N, N1);
  r.record("c", f.c.str());
  for (const auto& [name, x] : std::vector<std::pair<std::string, FieldState>>{{"H", f.H}, {"Z", f.Z}, {"E", f.E}, {"F", f.F}})
    r.witness.emplace_back(name, x.str());
  return r;
}

Report screen(const Pyramid& p, const std::string& target) {
  Report r;
  const auto& q = p.columns();
  switch (shape_of(p)) {
    case Shape::Principal: r = principal_kernel_check(p.size()); break;
    case Shape::Subregular: r = subregular_kernel_check(p.size()); break;
    case Shape::Rectangular: r = rectangular_kernel_check(q.front(), static_cast<int>(q.size())); break;
    default:
      throw Error(ErrorCode::InvalidShape, "screening generators are available for principal, subregular (2,1,...,1) "
                                           "and rectangular pyramids, not " + p.columns_str());
  }
  if (target.empty()) return r;
  auto field_of = [](const Report& c) {
    for (const auto& [k, v] : c.inputs)
      if (k == "field") return v;
    return std::string();
  };
  auto any_fail = [](const std::vector<Report>& v) {
    return std::any_of(v.begin(), v.end(), [](const Report& c) { return c.status == Status::Fail; });
  };
  const bool own_fail = r.status == Status::Fail && !any_fail(r.items);
  std::vector<Report> kept;
  for (auto& c : r.items) {
    std::string f = field_of(c);
    if (f.empty() || f == target) kept.push_back(std::move(c));
  }
  if (std::none_of(kept.begin(), kept.end(), [&](const Report& c) { return field_of(c) == target; }))
    throw Error(ErrorCode::InvalidArgument, "no generator named " + target + " for pyramid " + p.columns_str());
  r.items = std::move(kept);
  r.status = own_fail || any_fail(r.items) ? Status::Fail : Status::Pass;
  r.input("target", target);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"walg: exact free-field computations for W-algebras of gl_N"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  std::string level;
  app.add_flag("--json", json, "Print reports as JSON");
  app.add_option("--level", level, "Evaluate scalars at this rational level, e.g. 3/2");

  std::string columns, mode = "principal", check_kind = "all", target;
  int after = 0, after2 = 0, N = 0, height = 0, width = 0, n1 = 0, n = 0, max_N = 3;

  auto* pyr = app.add_subcommand("pyramid", "Pyramid data: rows, boxes, grading, f");
  pyr->add_option("--columns", columns, "Column heights, e.g. 1,3,2,1")->required();

  auto* spl = app.add_subcommand("split", "Split a pyramid after a column");
  spl->add_option("--columns", columns)->required();
  spl->add_option("--after", after, "Number of columns in the left piece")->required();

  auto* wak = app.add_subcommand("wakimoto", "Wakimoto structure, affine lift and Fock checks");
  wak->add_option("--N", N)->required();
  wak->add_option("--columns", columns)->required();
  wak->add_option("--check", check_kind)->check(CLI::IsMember({"all", "structure", "lift", "fock"}));

  auto* mia = app.add_subcommand("miura", "Quantum Miura generators");
  mia->add_option("--mode", mode)->check(CLI::IsMember({"principal", "rectangular", "subregular"}));
  mia->add_option("--N", N);
  auto* h_opt = mia->add_option("--height", height);
  auto* w_opt = mia->add_option("--width", width);
  auto* n1_opt = mia->add_option("--n1", n1);
  h_opt->needs(w_opt);
  w_opt->needs(h_opt);
  n1_opt->excludes(h_opt)->excludes(w_opt);

  auto* scr = app.add_subcommand("screen", "Screening kernels of the Miura generators");
  scr->add_option("--columns", columns)->required();
  scr->add_option("--target", target, "Only this generator, e.g. W2 or H");

  auto* cop = app.add_subcommand("coproduct", "Coproduct checks for a pyramid split");
  cop->add_option("--columns", columns)->required();
  cop->add_option("--after", after)->required();
  auto* after2_opt = cop->add_option("--after2", after2, "Second cut for coassociativity");
  cop->add_option("--check", check_kind)
      ->required()
      ->check(CLI::IsMember({"factorization", "coassoc", "compat", "subregular"}));

  auto* bin = app.add_subcommand("binom", "Binomial identity for the W-generators");
  bin->add_option("--n", n)->required();

  auto* ver = app.add_subcommand("verify-all", "Run every acceptance suite");
  ver->add_option("--max-N", max_N, "Largest gl_N fixture to include");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (!level.empty()) set_render_level(parse_rational(level));
    std::vector<Report> out;
    if (*pyr) {
      Pyramid p = columns_arg(columns);
      if (json) {
        std::cout << to_json(p) << "\n";
        return 0;
      }
      return emit({pyramid_report(p)}, false);
    }
    if (*spl) {
      out.push_back(split_report(columns_arg(columns), after));
    } else if (*wak) {
      Pyramid p = columns_arg(columns);
      if (p.size() != N)
        throw Error(ErrorCode::InvalidArgument, "--N " + std::to_string(N) + " does not match pyramid size " +
                                                    std::to_string(p.size()));
      std::string label = "gl" + std::to_string(N) + "_q" + p.columns_str();
      std::replace(label.begin(), label.end(), ',', '-');
      Grading g = p.grading();
      if (check_kind == "all" || check_kind == "structure") out.push_back(structural_checks(g, label));
      if (check_kind == "all" || check_kind == "lift") {
        Report a = affine_lift(g, false).audit;
        a.check += "." + label;
        out.push_back(a);
      }
      if (check_kind == "all" || check_kind == "fock") out.push_back(intertwiner_checks(g, label));
    } else if (*mia) {
      if (mode == "rectangular") {
        if (height <= 0 || width <= 0) throw Error(ErrorCode::InvalidArgument, "rectangular mode needs --height and --width");
        bound(height * width, "rectangular pyramid");
        out.push_back(miura_rectangular(height, width));
      } else {
        if (N <= 0) throw Error(ErrorCode::InvalidArgument, mode + " mode needs --N");
        bound(N, "gl_" + std::to_string(N));
        out.push_back(mode == "principal" ? miura_principal(N) : miura_subregular(N, *n1_opt ? n1 : N));
      }
    } else if (*scr) {
      out.push_back(screen(columns_arg(columns), target));
    } else if (*cop) {
      Pyramid p = columns_arg(columns);
      if (check_kind == "coassoc") {
        if (!*after2_opt) throw Error(ErrorCode::InvalidArgument, "coassoc needs --after2");
        out.push_back(coassociativity_check(p, after, after2).report);
      } else if (check_kind == "factorization") {
        out.push_back(factorization_check(p, after).report);
      } else if (check_kind == "compat") {
        out.push_back(miura_compatibility_check(p, after).report);
      } else {
        if (shape_of(p) != Shape::Subregular)
          throw Error(ErrorCode::InvalidShape, "subregular check needs a pyramid (2,1,...,1), got " + p.columns_str());
        out.push_back(subregular_coproduct_check(p.size(), after + 1).report);
      }
    } else if (*bin) {
      out.push_back(binomial_identity_check(n, max_n_bound()));
    } else if (*ver) {
      if (max_N < 2) throw Error(ErrorCode::InvalidArgument, "--max-N must be at least 2");
      bound(max_N, "verify-all");
      out = verify_all(max_N);
    }
    return emit(std::move(out), json);
  } catch (const Error& e) {
    std::cerr << "walg: " << e.what() << "\n";
    return kExitUsage;
  }
}
