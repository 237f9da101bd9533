#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include "discdeg/closed_forms.hpp"
#include "discdeg/degree_engine.hpp"
#include "discdeg/errors.hpp"
#include "discdeg/fg_polynomial.hpp"
#include "discdeg/gl_symfun.hpp"
#include "discdeg/group_spec.hpp"
#include "discdeg/verify.hpp"

namespace discdeg::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Output { table, json };

struct Common {
  std::string group;
  std::string weight;
  std::vector<std::string> methods;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string output = "table";

  EngineOptions engine() const { return {std::max(1u, jobs), kDefaultEnumerationBound}; }
  Output format() const { return output == "json" ? Output::json : Output::table; }
};

/// Method disagreement; reported with both values and exit code 2.
class Disagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(x.to_string());
  return arr;
}

std::string joined(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s;
}

void print_rows(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
}

// Reads the weight, moves it into the dominant chamber (with a note on err)
// and returns the canonical engine input.
Weight dominant_input(const RootSystem& rs, const std::string& spec, std::ostream& err) {
  const Weight raw = parse_weight(rs, spec);
  const Weight projected = rs.project_to_root_span(raw);
  if (projected != raw)
    err << "note: dropped the central part of the weight on semisimple blocks: " << projected.to_string() << "\n";
  auto [dominant, moved] = rs.dominant_representative(projected);
  if (moved) err << "warning: weight reflected into the dominant chamber: " << dominant.to_string() << "\n";
  return dominant;
}

bool all_gl(const RootSystem& rs) {
  return std::all_of(rs.factors().begin(), rs.factors().end(),
                     [](const Factor& f) { return f.kind == FactorKind::GL; });
}

gl::Blocks gl_blocks(const RootSystem& rs, Method m) {
  if (!all_gl(rs))
    throw std::invalid_argument("method " + std::string(to_string(m)) + " needs GL factors only");
  gl::Blocks blocks;
  for (const auto& f : rs.factors()) blocks.sizes.push_back(f.dim);
  return blocks;
}

DegreeReport run_method(Method m, const RootSystem& rs, const Weight& lambda, const Common& c) {
  const EngineOptions opts = c.engine();
  if (m == Method::orbit) return degree(rs, lambda, c.seed, opts);
  if (m == Method::symmetric) return degree_symmetric(rs, lambda, c.seed, opts);
  if (m == Method::fg) return degree_from_fg(rs, fg_polynomial(rs, c.seed, opts), lambda);

  // the remaining routes reuse the engine's bookkeeping fields
  const Weight lam = normalize_weight(rs, lambda);
  const TangentData td = tangent_data(rs, lam);
  DegreeReport report;
  report.epsilon = td.epsilon;
  report.stabilizer_order = td.stabilizer_order;
  report.method = m;
  const auto& coeffs = lam.coords();
  switch (m) {
    case Method::closed_form: {
      const auto value = closed::family_degree(rs, lam);
      if (!value) throw std::invalid_argument("no closed form covers this group and weight");
      report.degree = *value;
      break;
    }
    case Method::jacobi: report.degree = gl::degree_via_jacobi(gl_blocks(rs, m), coeffs); break;
    case Method::permanent: report.degree = gl::degree_via_permanent(gl_blocks(rs, m), coeffs); break;
    case Method::scalar_product:
      if (gl_blocks(rs, m).sizes.size() != 1) throw std::invalid_argument("method scalar needs a single GL factor");
      report.degree = gl::degree_via_scalar_product(lam.size(), coeffs);
      break;
    default: break;
  }
  report.is_hypersurface = !report.degree.is_zero();
  return report;
}

int cmd_degree(const Common& c, std::ostream& out, std::ostream& err) {
  const RootSystem rs = parse_group(c.group);
  const Weight lambda = dominant_input(rs, c.weight, err);
  std::vector<Method> methods;
  for (const auto& name : c.methods) methods.push_back(parse_method(name));
  if (methods.empty()) methods.push_back(Method::orbit);

  std::vector<DegreeReport> reports;
  for (Method m : methods) reports.push_back(run_method(m, rs, lambda, c));
  for (const auto& r : reports)
    if (r.degree != reports.front().degree) {
      std::string msg = "methods disagree:";
      for (const auto& s : reports) msg += " " + std::string(to_string(s.method)) + "=" + s.degree.to_string();
      throw Disagreement(msg);
    }

  const DegreeReport& head = reports.front();
  std::vector<std::uint64_t> seeds;
  for (const auto& r : reports)
    for (const auto& p : r.points_used)
      if (std::find(seeds.begin(), seeds.end(), p.seed) == seeds.end()) seeds.push_back(p.seed);
  const auto y = rs.fundamental_coordinates(lambda);

  if (c.format() == Output::json) {
    Json j;
    j["group"] = rs.label();
    j["weight_L"] = to_json(lambda.coords());
    j["weight_y"] = to_json(y);
    j["degree"] = head.degree.to_string();
    j["hypersurface"] = head.is_hypersurface;
    j["epsilon"] = head.epsilon;
    j["stabilizer_order"] = head.stabilizer_order;
    Json names = Json::array();
    for (const auto& r : reports) names.push_back(std::string(to_string(r.method)));
    j["methods"] = names;
    j["seeds"] = seeds;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  std::vector<std::pair<std::string, std::string>> rows{
      {"group", rs.label()},
      {"weight (L)", joined(lambda.coords())},
      {"weight (w)", joined(y)},
      {"degree", head.degree.to_string()},
      {"hypersurface", head.is_hypersurface ? "yes" : "no"},
      {"epsilon", std::to_string(head.epsilon)},
      {"stabilizer order", std::to_string(head.stabilizer_order)},
  };
  for (const auto& r : reports) rows.emplace_back("method " + std::string(to_string(r.method)), r.degree.to_string());
  std::string seed_list;
  for (std::size_t i = 0; i < seeds.size(); ++i) seed_list += (i ? "," : "") + std::to_string(seeds[i]);
  if (!seeds.empty()) rows.emplace_back("seeds", seed_list);
  print_rows(out, rows);
  return kExitOk;
}

int cmd_class(const Common& c, std::ostream& out, std::ostream& err) {
  const RootSystem rs = parse_group(c.group);
  const Weight lambda = dominant_input(rs, c.weight, err);
  const LinearClass cls = equivariant_class(rs, lambda, c.seed, c.engine());
  if (c.format() == Output::json) {
    Json j;
    j["group"] = rs.label();
    j["weight_L"] = to_json(lambda.coords());
    j["class_L"] = to_json(cls.coords);
    j["class_u"] = cls.u_coefficient.to_string();
    j["degree"] = (-cls.u_coefficient).to_string();
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  std::string form;
  for (std::size_t i = 0; i < cls.coords.size(); ++i)
    if (!cls.coords[i].is_zero()) form += "(" + cls.coords[i].to_string() + ")L" + std::to_string(i + 1) + " + ";
  form += "(" + cls.u_coefficient.to_string() + ")u";
  print_rows(out, {{"group", rs.label()},
                   {"weight (L)", joined(lambda.coords())},
                   {"class", form},
                   {"degree", (-cls.u_coefficient).to_string()}});
  return kExitOk;
}

int cmd_fg(const Common& c, const std::string& basis, std::ostream& out) {
  const RootSystem rs = parse_group(c.group);
  const FgPolynomial fg = fg_polynomial(rs, c.seed, c.engine());
  const bool in_y = basis == "y";
  const MultiPoly& poly = in_y ? fg.in_y : fg.in_x;
  const std::string text = poly.to_string(default_names(rs.rank(), in_y ? "y" : "x"));
  if (c.format() == Output::json) {
    Json j;
    j["group"] = rs.label();
    j["basis"] = in_y ? "y" : "x";
    j["polynomial"] = text;
    out << j.dump(2) << "\n";
  } else {
    out << text << "\n";
  }
  return kExitOk;
}

int print_value(const Common& c, const std::string& label, const Rational& value, std::ostream& out) {
  if (c.format() == Output::json) {
    Json j;
    j["formula"] = label;
    j["degree"] = value.to_string();
    j["hypersurface"] = !value.is_zero();
    out << j.dump(2) << "\n";
  } else {
    print_rows(out, {{"formula", label}, {"degree", value.to_string()}, {"hypersurface", value.is_zero() ? "no" : "yes"}});
  }
  return kExitOk;
}

int cmd_verify(const Common& c, const std::string& suite, std::ostream& out) {
  const auto results = run_verification(parse_suite(suite), c.seed, c.engine());
  std::size_t failed = 0;
  Json arr = Json::array();
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    if (c.format() == Output::json) {
      arr.push_back({{"check", r.name}, {"expected", r.expected}, {"actual", r.actual}, {"passed", r.passed}});
    } else {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << ": expected " << r.expected << ", got " << r.actual << "\n";
    }
  }
  if (c.format() == Output::json) {
    out << Json{{"checks", arr}, {"failed", failed}}.dump(2) << "\n";
  } else {
    out << results.size() - failed << "/" << results.size() << " checks passed\n";
  }
  return failed == 0 ? kExitOk : kExitInconsistent;
}

void add_output(CLI::App* sub, Common& c) {
  sub->add_option("--output", c.output, "table or json")->check(CLI::IsMember({"table", "json"}));
}

void add_engine(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "seed for the generic evaluation points");
  sub->add_option("--jobs", c.jobs, "worker threads for the exact sums")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degrees of discriminants of irreducible representations"};
  app.require_subcommand(1);
  Common c;

  auto* degree_cmd = app.add_subcommand("degree", "degree of the discriminant for a group and highest weight");
  degree_cmd->add_option("--group", c.group, "e.g. A2, B2, G2, A1+A2, GL4, GL2xGL2xGL3")->required();
  degree_cmd->add_option("--weight", c.weight, "L:a1,a2,... or w:y1,y2,...")->required();
  degree_cmd->add_option("--method", c.methods, "orbit, symmetric, fg, closed-form, jacobi, permanent, scalar")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  add_engine(degree_cmd, c);
  add_output(degree_cmd, c);

  auto* class_cmd = app.add_subcommand("class", "equivariant class as a linear form in L_i and u");
  class_cmd->add_option("--group", c.group)->required();
  class_cmd->add_option("--weight", c.weight)->required();
  add_engine(class_cmd, c);
  add_output(class_cmd, c);

  std::string basis = "x";
  auto* fg_cmd = app.add_subcommand("fg", "universal degree polynomial of a semisimple group");
  fg_cmd->add_option("--group", c.group)->required();
  fg_cmd->add_option("--basis", basis, "x (default, y = x + 1) or y")->check(CLI::IsMember({"x", "y"}));
  add_engine(fg_cmd, c);
  add_output(fg_cmd, c);

  int n = 0, k = 0, a = 0, b = 0;
  auto* boole_cmd = app.add_subcommand("boole", "GL(n), lambda = a L_1");
  boole_cmd->add_option("--n", n)->required();
  boole_cmd->add_option("--a", a)->required();
  add_output(boole_cmd, c);

  auto* grass_cmd = app.add_subcommand("grassmannian", "dual of Gr_k(C^n) in the Pluecker embedding");
  grass_cmd->add_option("--n", n)->required();
  grass_cmd->add_option("--k", k)->required();
  add_output(grass_cmd, c);

  auto* gr3_cmd = app.add_subcommand("gr3", "dual of Gr_3(C^n) via the angle-bracket formula");
  gr3_cmd->add_option("--n", n)->required();
  add_output(gr3_cmd, c);

  std::vector<int> dims;
  auto* hyper_cmd = app.add_subcommand("hyperdet", "hyperdeterminant of format n_1 x ... x n_k");
  hyper_cmd->add_option("--dims,dims", dims, "sizes, e.g. 2,2,3")->required()->delimiter(',');
  add_engine(hyper_cmd, c);
  add_output(hyper_cmd, c);

  bool ab = false, two_row = false, aabb = false;
  auto* family_cmd = app.add_subcommand("family", "closed-form GL(n) families");
  auto* fam = family_cmd->add_option_group("family", "which family");
  fam->add_flag("--ab", ab, "lambda = (a+b) L_1 + b (L_2 + ... + L_{n-1})");
  fam->add_flag("--two-row", two_row, "lambda = a L_1 + b L_2, a > b >= 1");
  fam->add_flag("--aabb", aabb, "lambda = a L_1 + a L_2");
  fam->require_option(1);
  family_cmd->add_option("--n", n)->required();
  family_cmd->add_option("--a", a)->required();
  family_cmd->add_option("--b", b, "unused by --aabb");
  add_output(family_cmd, c);

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run the built-in verification suites");
  verify_cmd->add_option("--suite", suite, "reference (alias paper), oracle or all")
      ->check(CLI::IsMember({"reference", "paper", "oracle", "all"}));
  add_engine(verify_cmd, c);
  add_output(verify_cmd, c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*degree_cmd) return cmd_degree(c, out, err);
    if (*class_cmd) return cmd_class(c, out, err);
    if (*fg_cmd) return cmd_fg(c, basis, out);
    if (*boole_cmd) return print_value(c, "boole", closed::boole_degree(n, a), out);
    if (*grass_cmd) return print_value(c, "grassmannian", closed::grassmannian_degree(n, k), out);
    if (*gr3_cmd) return print_value(c, "gr3", closed::gr3_degree(n), out);
    if (*hyper_cmd) {
      const auto r = closed::hyperdet_degree(dims, c.seed, c.engine());
      return print_value(c, r.method == Method::closed_form ? "hyperdet boundary rule" : "hyperdet via engine",
                         r.degree, out);
    }
    if (*family_cmd) {
      if (ab) return print_value(c, "ab", closed::gammaab_degree(n, a, b), out);
      if (two_row) return print_value(c, "two-row", closed::abn_degree(n, a, b), out);
      return print_value(c, "aabb", closed::aa_degree(n, a), out);
    }
    if (*verify_cmd) return cmd_verify(c, suite, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Disagreement& e) {
    err << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const InconsistencyError& e) {
    err << "error: internal inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInconsistent;
  }
  return kExitUsage;
}

}  // namespace discdeg::cli
