#include "quadop/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "quadop/algcheck.hpp"
#include "quadop/duality.hpp"
#include "quadop/error.hpp"
#include "quadop/koszul.hpp"

namespace quadop {

namespace {

using Json = nlohmann::ordered_json;

struct Target {
  Presentation presentation;
  bool is_builtin = false;
  // Set for file targets: how the symmetric-group closure changed the
  // parsed relations.
  int generator_count = 0;
  int input_span_dim = 0;
  int closed_dim = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("unknown operad and unreadable file: '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string file_stem(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name.resize(dot);
  return name;
}

Target resolve_target(const std::string& name, std::ostream& err) {
  if (auto b = builtin_from_name(name)) return Target{builtin(*b), true};
  ParsedPresentation parsed = parse_presentation(read_file(name), file_stem(name));
  for (int line : parsed.zero_relation_lines)
    err << "warning: relation on line " << line << " cancels to zero\n";
  return Target{std::move(parsed.presentation), false, parsed.generator_count,
                parsed.input_span_dim, parsed.closed_dim};
}

void print_closure_info(const Target& t, std::ostream& out) {
  if (t.is_builtin) return;
  out << "closure: " << t.generator_count << " parsed relations, input span dim "
      << t.input_span_dim << ", closed dim " << t.closed_dim << "\n";
}

Json dims_json(const DimensionTable& t) {
  Json j = Json::object();
  for (const auto& [arity, d] : t.dims) j[std::to_string(arity)] = d;
  return j;
}

Json series_json(const PoincareSeries& s) {
  Json j = Json::object();
  for (int d = 1; d <= s.order; ++d) j[std::to_string(d)] = rat_str(s.coeff(d));
  return j;
}

Json skeleton(const std::string& name) {
  Json j = Json::object();
  j["name"] = name;
  j["dims"] = nullptr;
  j["series"] = nullptr;
  j["verdict"] = nullptr;
  j["identities"] = nullptr;
  return j;
}

void emit(const Json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

const char* kNecessaryOnly =
    "the composition test is a necessary condition: PASS does not prove Koszulity";

std::vector<std::string> note_lines(const KoszulReport& report) {
  std::vector<std::string> lines;
  for (const auto& n : report.notes) {
    std::string s = "reference x^" + std::to_string(n.degree) + " coefficient " +
                    rat_str(n.reference) + " for the " + n.series +
                    " series differs from the computed " + rat_str(n.computed) +
                    " (dim " + std::to_string(n.computed_dim) + ")";
    if (n.impossible_dimension)
      s += "; no nonnegative integer dimension d satisfies (-1)^" +
           std::to_string(n.degree) + " d/" + std::to_string(n.degree) +
           "! = " + rat_str(n.reference) + ", so the reference value cannot be a "
           "dimension coefficient";
    lines.push_back(std::move(s));
  }
  lines.push_back(kNecessaryOnly);
  return lines;
}

int cmd_dims(const Target& t, int max_arity, const std::string& format, std::ostream& out) {
  const DimensionTable table = dimension_table(t.presentation, max_arity);
  if (format == "json") {
    Json j = skeleton(table.operad_name);
    j["dims"] = dims_json(table);
    emit(j, out);
  } else {
    out << "operad: " << table.operad_name << "\n";
    print_closure_info(t, out);
    for (const auto& [arity, d] : table.dims)
      out << "P(" << arity << ") = " << d << "\n";
  }
  return 0;
}

int cmd_series(const Target& t, int max_arity, const std::string& format, std::ostream& out) {
  const DimensionTable table = dimension_table(t.presentation, max_arity);
  const PoincareSeries s = PoincareSeries::from_dims(table, max_arity);
  if (format == "json") {
    Json j = skeleton(table.operad_name);
    j["dims"] = dims_json(table);
    j["series"] = series_json(s);
    emit(j, out);
  } else {
    out << "operad: " << table.operad_name << "\n";
    print_closure_info(t, out);
    out << "g(x) = " << s.str() << "\n";
  }
  return 0;
}

int cmd_dual(const Target& t, const std::string& format, std::ostream& out) {
  const Presentation dual = dual_presentation(t.presentation);
  std::vector<std::string> basis_text;
  for (const auto& row : dual.relations.basis())
    basis_text.push_back(OperadElement::from_sparse_coords(3, row).str());

  std::optional<DualReport> report;
  if (auto b = builtin_from_name(t.presentation.name)) report = verify_dual_identities(*b);

  if (format == "json") {
    Json j = skeleton(t.presentation.name);
    j["dual_name"] = dual.name;
    j["relations_dim"] = t.presentation.relations.dim();
    j["dual_dim"] = dual.relations.dim();
    j["dual_basis"] = basis_text;
    if (report) {
      Json ids = Json::array();
      for (const auto& ic : report->identities)
        ids.push_back(Json{{"name", ic.name}, {"holds", ic.holds}});
      j["identities"] = ids;
      j["closure_matches"] = report->closure_matches;
      j["verdict"] = report->pass ? "ok" : "mismatch";
    }
    emit(j, out);
  } else {
    out << "presentation: " << t.presentation.name << "\n";
    print_closure_info(t, out);
    out << "relations dim: " << t.presentation.relations.dim() << "\n";
    out << "dual: " << dual.name << "\n";
    out << "dual relations dim: " << dual.relations.dim() << "\n";
    out << "dual basis:\n";
    for (const auto& row : basis_text) out << "  " << row << "\n";
    if (report) {
      out << "identity checks:\n";
      for (const auto& ic : report->identities)
        out << "  " << ic.name << ": " << (ic.holds ? "ok" : "missing") << "\n";
      out << "  closure matches dual relations: "
          << (report->closure_matches ? "ok" : "mismatch") << "\n";
      out << "result: " << (report->pass ? "ok" : "mismatch") << "\n";
    }
  }
  return 0;
}

int cmd_koszul(const Target& t, int order, const std::string& format, std::ostream& out) {
  const KoszulReport report = koszul_necessary_check(t.presentation, order);
  const std::string verdict =
      report.pass ? "PASS"
                  : "FAIL at degree " + std::to_string(report.first_fail_degree);

  if (format == "json") {
    Json j = skeleton(report.name);
    j["dims"] = dims_json(report.dims);
    j["series"] = series_json(report.series);
    j["verdict"] = verdict;
    j["dual_name"] = report.dual_name;
    j["dual_dims"] = dims_json(report.dual_dims);
    j["dual_series"] = series_json(report.dual_series);
    j["composition"] = series_json(report.composition);
    if (!report.pass) j["first_fail_coefficient"] = rat_str(report.first_fail_coeff);
    j["notes"] = note_lines(report);
    emit(j, out);
  } else {
    out << "operad: " << report.name << "\n";
    print_closure_info(t, out);
    auto dims_line = [&](const DimensionTable& table) {
      std::string s;
      for (const auto& [arity, d] : table.dims) {
        if (!s.empty()) s += " ";
        s += std::to_string(d);
      }
      return s;
    };
    out << "dims: " << dims_line(report.dims) << "\n";
    out << "dual: " << report.dual_name << "\n";
    out << "dual dims: " << dims_line(report.dual_dims) << "\n";
    out << "g(x)        = " << report.series.str() << "\n";
    out << "g_dual(x)   = " << report.dual_series.str() << "\n";
    out << "g(g_dual(x)) = " << report.composition.str() << "\n";
    out << "verdict: " << verdict;
    if (!report.pass) out << " (coefficient " << rat_str(report.first_fail_coeff) << ")";
    out << "\n";
    for (const auto& line : note_lines(report)) out << "note: " << line << "\n";
  }
  return 0;
}

int cmd_expand_report(const Target& t, int max_arity, const std::string& format,
                      std::ostream& out) {
  const auto stats = expansion_report(t.presentation, max_arity);
  if (format == "json") {
    Json j = skeleton(t.presentation.name);
    Json dims = Json::object();
    dims["1"] = 1;
    dims["2"] = 2;
    for (const auto& s : stats) dims[std::to_string(s.arity)] = s.operad_dim;
    j["dims"] = dims;
    Json rows = Json::array();
    for (const auto& s : stats)
      rows.push_back(Json{{"arity", s.arity},
                          {"free_dim", s.free_dim},
                          {"spanning_vectors", s.spanning_vectors},
                          {"ideal_dim", s.ideal_dim},
                          {"operad_dim", s.operad_dim}});
    j["expansion"] = rows;
    emit(j, out);
  } else {
    out << "operad: " << t.presentation.name << "\n";
    print_closure_info(t, out);
    for (const auto& s : stats)
      out << "arity " << s.arity << ": free dim " << s.free_dim << ", spanning vectors "
          << s.spanning_vectors << ", ideal dim " << s.ideal_dim << ", operad dim "
          << s.operad_dim << "\n";
  }
  return 0;
}

int cmd_check(const std::string& path, const std::string& format, std::ostream& out) {
  const AlgebraData algebra = AlgebraData::parse(read_file(path));
  const AlgebraReport report = check_algebra(algebra);

  std::vector<IdentityCheck> checks;
  for (int i = 0; i < 6; ++i)
    checks.push_back({subgroup_name(all_subgroups()[i]) + "-associative", report.gi[i]});
  checks.push_back({"lie-admissible", report.lie_admissible});
  checks.push_back({"commutator-jacobi", report.commutator_jacobi});

  if (format == "json") {
    Json j = skeleton(file_stem(path));
    j["algebra_dim"] = report.dim;
    Json ids = Json::array();
    for (const auto& c : checks) ids.push_back(Json{{"name", c.name}, {"holds", c.holds}});
    j["identities"] = ids;
    emit(j, out);
  } else {
    out << "algebra: " << file_stem(path) << " (dim " << report.dim << ")\n";
    for (int i = 0; i < 6; ++i)
      out << subgroup_name(all_subgroups()[i]) << "-associative: "
          << (report.gi[i] ? "yes" : "no") << "\n";
    out << "lie-admissible: " << (report.lie_admissible ? "yes" : "no") << "\n";
    out << "commutator satisfies Jacobi: " << (report.commutator_jacobi ? "yes" : "no")
        << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact workbench for binary quadratic operads"};
  app.name("quadop");
  app.require_subcommand(1);

  struct {
    std::string target;
    int max_arity = 4;
    std::string format = "text";
  } opt;

  auto add_common = [&](CLI::App* sub, bool with_arity) {
    sub->add_option("target", opt.target,
                    "builtin operad (ass vinb prelie g4ass g5ass lieadm) or file")
        ->required();
    if (with_arity)
      sub->add_option("--max-arity", opt.max_arity, "largest arity computed (3..5)");
    sub->add_option("--format", opt.format, "output format: text or json");
    return sub;
  };

  CLI::App* dims = add_common(app.add_subcommand("dims", "component dimensions"), true);
  CLI::App* dual = add_common(
      app.add_subcommand("dual", "dual presentation and identity checks"), false);
  CLI::App* koszul = add_common(
      app.add_subcommand("koszul", "series composition test against the dual"), true);
  CLI::App* series = add_common(
      app.add_subcommand("series", "generating series from computed dimensions"), true);
  CLI::App* expand = add_common(
      app.add_subcommand("expand-report", "ideal expansion statistics"), true);
  CLI::App* check = add_common(
      app.add_subcommand("check", "identity checks for a structure-constant file"), false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (opt.format != "text" && opt.format != "json")
      throw invalid_input("format must be 'text' or 'json'");
    if (opt.max_arity < 3 || opt.max_arity > 5)
      throw invalid_input("--max-arity must be in 3..5");

    if (check->parsed()) return cmd_check(opt.target, opt.format, out);
    const Target target = resolve_target(opt.target, err);
    if (dims->parsed()) return cmd_dims(target, opt.max_arity, opt.format, out);
    if (series->parsed()) return cmd_series(target, opt.max_arity, opt.format, out);
    if (dual->parsed()) return cmd_dual(target, opt.format, out);
    if (koszul->parsed()) return cmd_koszul(target, opt.max_arity, opt.format, out);
    if (expand->parsed()) return cmd_expand_report(target, opt.max_arity, opt.format, out);
    throw internal_error("no subcommand dispatched");
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const invalid_input& e) {
    err << "invalid input: " << e.what() << "\n";
    return 3;
  } catch (const internal_error& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace quadop
