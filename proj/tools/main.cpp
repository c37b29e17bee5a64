#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mulideal/errors.hpp"
#include "mulideal/howald.hpp"
#include "mulideal/io.hpp"
#include "mulideal/newton.hpp"
#include "mulideal/resolution.hpp"
#include "mulideal/symbolic.hpp"
#include "mulideal/theorems.hpp"
#include "report_output.hpp"
#include "svg.hpp"

namespace {

using namespace mulideal;
using io::Json;

using cli::Output;
using cli::kSuccess;
using cli::kCheckFailed;
using cli::kInputError;
using cli::check_output;
using cli::report_table;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

io::IdealSpec load_ideal(const std::string& path) {
  try {
    return io::parse_ideal_spec(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

ResolutionDatum load_resolution(const std::string& path) {
  try {
    return io::parse_resolution_datum(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Rational parse_rational(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const InputError& e) {
    throw InputError(flag + ": " + e.what());
  }
}

std::string monomial_text(const ExponentVector& g, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < g.dimension(); ++i) {
    if (g[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (g[i] > 1) out += "^" + std::to_string(g[i]);
  }
  return out.empty() ? "1" : out;
}

std::string ideal_text(const MonomialIdeal& ideal, const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) out += ", ";
    out += monomial_text(ideal.generators()[i], names);
  }
  return out + ")";
}

Json spec_json(const io::IdealSpec& spec) {
  Json out;
  out["dimension"] = spec.ideal.dimension();
  if (spec.variables) out["variables"] = *spec.variables;
  out["generators"] = io::generators_json(spec.ideal);
  return out;
}

Json resolution_json(const ResolutionDatum& data) {
  Json entries = Json::array();
  for (const auto& e : data.entries()) {
    entries.push_back(Json{{"r", e.r.to_string()}, {"b", e.b}, {"label", e.label}});
  }
  return Json{{"entries", entries}};
}

Output computed(Json input, Json parameters, Json result, std::string table) {
  return Output{Json{{"input", std::move(input)}, {"parameters", std::move(parameters)}, {"result", std::move(result)}},
                std::move(table), kSuccess};
}

struct Options {
  std::string format;
  std::string json_path;

  std::string file;
  std::string second_file;
  std::string svg_path;
  std::string coefficient;
  std::string other_coefficient;
  std::string bound;
  std::int64_t m = 0;
  std::int64_t l = 0;
  std::int64_t k = 0;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::vector<std::string> coefficients;
};

Output run_newton(const Options& o) {
  const auto spec = load_ideal(o.file);
  const auto names = spec.variable_names();
  const auto poly = newton_polyhedron(spec.ideal);
  Json facets = Json::array();
  std::ostringstream table;
  table << "Newton polyhedron of " << ideal_text(spec.ideal, names) << '\n';
  for (const auto& f : poly.facets()) {
    Json record = io::facet_json(f);
    record["inequality"] = f.to_string(names);
    facets.push_back(record);
    table << "  " << f.to_string(names) << '\n';
  }
  Json vertices = io::polyhedron_json(poly)["vertices"];
  table << "vertices:";
  for (const auto& v : poly.vertices()) {
    table << " (";
    for (std::size_t i = 0; i < v.size(); ++i) table << (i ? ", " : "") << v[i].to_string();
    table << ')';
  }
  table << '\n';
  Json parameters = Json::object();
  if (!o.svg_path.empty()) {
    write_file(o.svg_path, cli::render_newton_svg(spec.ideal, poly));
    parameters["svg"] = o.svg_path;
  }
  return computed(spec_json(spec), parameters, Json{{"facets", facets}, {"vertices", vertices}}, table.str());
}

Output run_mi(const Options& o) {
  const auto spec = load_ideal(o.file);
  const Rational c = parse_rational(o.coefficient, "-c");
  if (c.sign() < 0) throw InputError("-c: coefficient must be non-negative");
  const auto j = multiplier_ideal(spec.ideal, c);
  return computed(spec_json(spec), Json{{"c", c.to_string()}}, io::generators_json(j),
                  "J(a^" + c.to_string() + ") = " + ideal_text(j, spec.variable_names()) + "\n");
}

Output run_mixed_mi(const Options& o) {
  const auto a = load_ideal(o.file);
  const auto b = load_ideal(o.second_file);
  const Rational c = parse_rational(o.coefficient, "-c");
  const Rational e = parse_rational(o.other_coefficient, "-e");
  const auto j = mixed_multiplier_ideal(a.ideal, c, b.ideal, e);
  return computed(Json{{"a", spec_json(a)}, {"b", spec_json(b)}}, Json{{"c", c.to_string()}, {"e", e.to_string()}},
                  io::generators_json(j),
                  "J(a^" + c.to_string() + " b^" + e.to_string() + ") = " + ideal_text(j, a.variable_names()) + "\n");
}

Output run_lct(const Options& o) {
  const auto spec = load_ideal(o.file);
  const auto value = lct(spec.ideal);
  return computed(spec_json(spec), Json::object(), value.to_string(), "lct = " + value.to_string() + "\n");
}

Output run_jumps(const Options& o) {
  const auto spec = load_ideal(o.file);
  const Rational bound = parse_rational(o.bound, "-T");
  if (bound.sign() <= 0) throw InputError("-T: bound must be positive");
  const auto seq = jumping_numbers(spec.ideal, bound);
  Json values = Json::array();
  std::ostringstream table;
  for (const auto& j : seq.jumps) {
    values.push_back(j.value.to_string());
    table << j.value.to_string() << "  " << ideal_text(j.ideal_after, spec.variable_names()) << '\n';
  }
  if (seq.jumps.empty()) table << "no jumping numbers in (0, " << bound.to_string() << "]\n";
  return computed(spec_json(spec), Json{{"T", bound.to_string()}}, values, table.str());
}

Output run_symbolic_power(const Options& o) {
  const auto spec = load_ideal(o.file);
  const auto q = analyze(spec.ideal);
  const auto power = symbolic_power(q, o.m);
  return computed(spec_json(spec), Json{{"m", o.m}}, io::generators_json(power),
                  "q^(" + std::to_string(o.m) + ") = " + ideal_text(power, spec.variable_names()) + "\n");
}

Output run_res_lct(const Options& o) {
  const auto data = load_resolution(o.file);
  const auto value = lct_from_resolution(data);
  return computed(resolution_json(data), Json::object(), value.to_string(), "lct = " + value.to_string() + "\n");
}

Output run_res_jumps(const Options& o) {
  const auto data = load_resolution(o.file);
  const Rational bound = parse_rational(o.bound, "-T");
  if (bound.sign() <= 0) throw InputError("-T: bound must be positive");
  Json values = Json::array();
  std::string table;
  for (const auto& x : candidate_jumping_numbers(data, bound)) {
    values.push_back(x.to_string());
    table += x.to_string() + "\n";
  }
  return computed(resolution_json(data), Json{{"T", bound.to_string()}}, values, table);
}

Output run_classify(const Options& o) {
  const auto data = load_resolution(o.file);
  const Rational c = parse_rational(o.coefficient, "-c");
  if (c.sign() <= 0) throw InputError("-c: coefficient must be positive");
  const std::string verdict = to_string(classify(data, c));
  return computed(resolution_json(data), Json{{"c", c.to_string()}}, verdict, verdict + "\n");
}

Output run_snc(const Options& o) {
  std::vector<Rational> coefficients;
  Json input = Json::array();
  for (const auto& text : o.coefficients) {
    coefficients.push_back(parse_rational(text, "coefficient"));
    input.push_back(coefficients.back().to_string());
  }
  const auto rounded = snc_multiplier_coefficients(coefficients);
  std::string table;
  for (std::size_t i = 0; i < rounded.size(); ++i) table += (i ? " " : "") + std::to_string(rounded[i]);
  return computed(Json{{"coefficients", input}}, Json::object(), rounded, table + "\n");
}

Output run_check_skoda(const Options& o) {
  const auto a = load_ideal(o.file);
  const auto b = o.second_file.empty() ? MonomialIdeal::unit(a.ideal.dimension()) : load_ideal(o.second_file).ideal;
  return check_output(check_skoda(a.ideal, o.m, b, parse_rational(o.coefficient, "-c")));
}

Output run_check_subadd(const Options& o) {
  const auto a = load_ideal(o.file);
  const auto b = load_ideal(o.second_file);
  return check_output(check_subadditivity(a.ideal, parse_rational(o.coefficient, "-c"), b.ideal,
                                          parse_rational(o.other_coefficient, "-e")));
}

Output run_check_restrict(const Options& o) {
  const auto a = load_ideal(o.file);
  const auto d = static_cast<std::int64_t>(a.ideal.dimension());
  if (o.k < 1 || o.k > d) throw InputError("-k: coordinate must lie in 1.." + std::to_string(d));
  return check_output(check_restriction(a.ideal, static_cast<std::size_t>(o.k - 1), parse_rational(o.coefficient, "-c")));
}

Output run_check_mustata(const Options& o) {
  const auto a = load_ideal(o.file);
  const Rational bound = parse_rational(o.bound, "-T");
  if (bound.sign() <= 0) throw InputError("-T: bound must be positive");
  return check_output(check_mustata_chain(a.ideal, bound));
}

Output run_check_nullstellensatz(const Options& o) {
  const auto a = load_ideal(o.file);
  return check_output(nullstellensatz_sigma(a.ideal).report);
}

Output run_check_symbolic(const Options& o) {
  const auto q = analyze(load_ideal(o.file).ideal);
  return check_output(check_symbolic_containment(q, o.m));
}

Output run_check_graded_chain(const Options& o) {
  const auto q = analyze(load_ideal(o.file).ideal);
  return check_output(check_graded_chain(q, o.l, o.m));
}

Output run_check_campaign(const Options& o) {
  const auto reports = run_campaign(o.seed, o.count);
  Output out{Json::array(), "", kSuccess};
  std::size_t failed = 0;
  std::ostringstream table;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    out.json.push_back(io::report_json(reports[i]));
    table << "instance " << i << ": " << (reports[i].passed ? "pass" : "fail") << "  a = "
          << reports[i].instance["a"]["generators"].dump() << "  b = " << reports[i].instance["b"]["generators"].dump()
          << '\n';
    if (!reports[i].passed) {
      ++failed;
      table << report_table(reports[i]);
    }
  }
  table << reports.size() - failed << " of " << reports.size() << " instances passed (seed " << o.seed << ")\n";
  out.table = table.str();
  out.code = failed == 0 ? kSuccess : kCheckFailed;
  return out;
}

void emit(const Output& out, const Options& o, const std::string& default_format) {
  const std::string format = o.format.empty() ? default_format : o.format;
  const std::string json_text = io::dump(out.json) + "\n";
  if (format == "json") {
    std::cout << json_text;
  } else {
    std::cout << out.table;
  }
  if (!o.json_path.empty()) write_file(o.json_path, json_text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplier ideals of monomial ideals: Newton polyhedra, thresholds, jumping numbers, checks"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format on standard output")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--json", o.json_path, "Also write the JSON output to this path");

  std::function<Output(const Options&)> action;
  std::string default_format = "table";
  auto bind = [&](CLI::App* sub, Output (*fn)(const Options&), const char* format) {
    sub->callback([&, fn, format] {
      action = fn;
      default_format = format;
    });
  };
  auto ideal_file = [&](CLI::App* sub, std::string& target, const char* name = "ideal") {
    sub->add_option(name, target, "Ideal file (JSON)")->required();
  };

  auto* newton = app.add_subcommand("newton", "Facets and vertices of the Newton polyhedron");
  ideal_file(newton, o.file);
  newton->add_option("--svg", o.svg_path, "Write an SVG picture (d = 2 only)");
  bind(newton, run_newton, "table");

  auto* mi = app.add_subcommand("mi", "Multiplier ideal J(a^c)");
  ideal_file(mi, o.file);
  mi->add_option("-c,--coefficient", o.coefficient, "Coefficient c >= 0")->required();
  bind(mi, run_mi, "table");

  auto* mixed = app.add_subcommand("mixed-mi", "Mixed multiplier ideal J(a^c b^e)");
  ideal_file(mixed, o.file, "a");
  ideal_file(mixed, o.second_file, "b");
  mixed->add_option("-c,--coefficient", o.coefficient, "Coefficient of a")->required();
  mixed->add_option("-e", o.other_coefficient, "Coefficient of b")->required();
  bind(mixed, run_mixed_mi, "table");

  auto* lct_cmd = app.add_subcommand("lct", "Log-canonical threshold");
  ideal_file(lct_cmd, o.file);
  bind(lct_cmd, run_lct, "table");

  auto* jumps = app.add_subcommand("jumps", "Jumping numbers up to a bound");
  ideal_file(jumps, o.file);
  jumps->add_option("-T,--bound", o.bound, "Upper bound T")->required();
  bind(jumps, run_jumps, "table");

  auto* sympow = app.add_subcommand("symbolic-power", "Symbolic power of a squarefree ideal");
  ideal_file(sympow, o.file);
  sympow->add_option("-m", o.m, "Exponent m >= 1")->required();
  bind(sympow, run_symbolic_power, "table");

  auto* res_lct = app.add_subcommand("res-lct", "lct from log-resolution data");
  res_lct->add_option("data", o.file, "Resolution data file (JSON)")->required();
  bind(res_lct, run_res_lct, "table");

  auto* res_jumps = app.add_subcommand("res-jumps", "Candidate jumping numbers (b + m)/r from resolution data");
  res_jumps->add_option("data", o.file, "Resolution data file (JSON)")->required();
  res_jumps->add_option("-T,--bound", o.bound, "Upper bound T")->required();
  bind(res_jumps, run_res_jumps, "table");

  auto* classify_cmd = app.add_subcommand("classify", "KLT / log-canonical classification of c*D");
  classify_cmd->add_option("data", o.file, "Resolution data file (JSON)")->required();
  classify_cmd->add_option("-c,--coefficient", o.coefficient, "Coefficient c > 0")->required();
  bind(classify_cmd, run_classify, "table");

  auto* snc = app.add_subcommand("snc", "Round-down coefficients of an SNC divisor");
  snc->add_option("coefficients", o.coefficients, "Rational coefficients a_i >= 0")->required();
  bind(snc, run_snc, "table");

  auto* check = app.add_subcommand("check", "Verify a theorem on a concrete instance");
  check->require_subcommand(1);

  auto* skoda = check->add_subcommand("skoda", "J(a^m b^c) = a * J(a^(m-1) b^c) for m >= d");
  ideal_file(skoda, o.file, "a");
  skoda->add_option("b", o.second_file, "Second ideal (default: unit ideal)");
  skoda->add_option("-m", o.m, "Exponent m >= d")->required();
  skoda->add_option("-c,--coefficient", o.coefficient, "Coefficient of b")->default_val("0");
  bind(skoda, run_check_skoda, "json");

  auto* subadd = check->add_subcommand("subadd", "J(a^c b^e) ⊆ J(a^c) * J(b^e)");
  ideal_file(subadd, o.file, "a");
  ideal_file(subadd, o.second_file, "b");
  subadd->add_option("-c,--coefficient", o.coefficient, "Coefficient of a")->default_val("1");
  subadd->add_option("-e", o.other_coefficient, "Coefficient of b")->default_val("1");
  bind(subadd, run_check_subadd, "json");

  auto* restrict_cmd = check->add_subcommand("restrict", "J(a|H ^c) ⊆ J(a^c)|H for H = {x_k = 0}");
  ideal_file(restrict_cmd, o.file);
  restrict_cmd->add_option("-k", o.k, "Coordinate index, 1-based")->required();
  restrict_cmd->add_option("-c,--coefficient", o.coefficient, "Coefficient c")->default_val("1");
  bind(restrict_cmd, run_check_restrict, "json");

  auto* mustata = check->add_subcommand("mustata", "sqrt(a) * J(a^xi_i) ⊆ J(a^xi_(i+1)) along the jumps");
  ideal_file(mustata, o.file);
  mustata->add_option("-T,--bound", o.bound, "Upper bound T")->required();
  bind(mustata, run_check_mustata, "json");

  auto* nullstellensatz = check->add_subcommand("nullstellensatz", "sqrt(a)^sigma ⊆ a with sigma from the jumps");
  ideal_file(nullstellensatz, o.file);
  bind(nullstellensatz, run_check_nullstellensatz, "json");

  auto add_symbolic = [&](CLI::App* parent, const char* name) {
    auto* sub = parent->add_subcommand(name, "q^(em) ⊆ q^m for a squarefree ideal q");
    ideal_file(sub, o.file);
    sub->add_option("-m", o.m, "Exponent m >= 1")->required();
    bind(sub, run_check_symbolic, "json");
  };
  auto add_graded_chain = [&](CLI::App* parent, const char* name) {
    auto* sub = parent->add_subcommand(name, "a_l^m ⊆ a_(lm) ⊆ J(a_.^(lm)) ⊆ J(a_.^l)^m for symbolic powers");
    ideal_file(sub, o.file);
    sub->add_option("-l", o.l, "l >= 1")->required();
    sub->add_option("-m", o.m, "m >= 1")->required();
    bind(sub, run_check_graded_chain, "json");
  };
  add_symbolic(check, "symbolic");
  add_graded_chain(check, "graded-chain");
  add_symbolic(&app, "symbolic-check");
  add_graded_chain(&app, "graded-chain");

  auto* campaign = check->add_subcommand("campaign", "Seeded random theorem campaign");
  campaign->add_option("--seed", o.seed, "Random seed")->required();
  campaign->add_option("--count", o.count, "Number of random instances")->required();
  bind(campaign, run_check_campaign, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    const Output out = action(o);
    emit(out, o, default_format);
    return out.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
