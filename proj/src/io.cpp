#include "mulideal/io.hpp"

#include <sstream>

#include "mulideal/errors.hpp"

namespace mulideal::io {

namespace {

using Plain = nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& message) {
  throw InputError("field '" + field + "': " + message);
}

Plain parse_json(std::string_view text) {
  try {
    return Plain::parse(text.begin(), text.end());
  } catch (const Plain::parse_error& e) {
    // Translate the byte offset into line and column.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                     e.what());
  }
}

Rational rational_field(const Plain& value, const std::string& field) {
  if (value.is_string()) {
    try {
      return Rational::parse(value.get<std::string>());
    } catch (const InputError& e) {
      field_error(field, e.what());
    }
  }
  if (value.is_number_integer()) return Rational(static_cast<long>(value.get<std::int64_t>()));
  field_error(field, "expected a rational string \"p/q\" or an integer");
}

void dump_into(std::ostringstream& os, const Json& value, int indent);

bool is_flat(const Json& value) {
  if (!value.is_array()) return !value.is_object();
  for (const auto& x : value) {
    if (x.is_object()) return false;
    if (x.is_array() && !is_flat(x)) return false;
  }
  return true;
}

void dump_into(std::ostringstream& os, const Json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (value.is_object()) {
    if (value.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (const auto& [key, item] : value.items()) {
      if (!first) os << ",\n";
      first = false;
      os << pad << Json(key).dump() << ": ";
      dump_into(os, item, indent + 2);
    }
    os << "\n" << std::string(static_cast<std::size_t>(indent), ' ') << "}";
  } else if (value.is_array() && !is_flat(value)) {
    os << "[\n";
    bool first = true;
    for (const auto& item : value) {
      if (!first) os << ",\n";
      first = false;
      os << pad;
      dump_into(os, item, indent + 2);
    }
    os << "\n" << std::string(static_cast<std::size_t>(indent), ' ') << "]";
  } else {
    os << value.dump();
  }
}

}  // namespace

std::vector<std::string> IdealSpec::variable_names() const {
  return variables ? *variables : default_variables(ideal.dimension());
}

IdealSpec parse_ideal_spec(std::string_view text) {
  const Plain doc = parse_json(text);
  if (!doc.is_object()) throw InputError("ideal file must contain a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "dimension" && key != "variables" && key != "generators") field_error(key, "unknown field");
  }
  if (!doc.contains("dimension")) field_error("dimension", "missing");
  const auto& dim = doc["dimension"];
  if (!dim.is_number_integer() || dim.get<std::int64_t>() <= 0) field_error("dimension", "expected a positive integer");
  const auto d = static_cast<std::size_t>(dim.get<std::int64_t>());

  std::optional<std::vector<std::string>> variables;
  if (doc.contains("variables")) {
    const auto& vars = doc["variables"];
    if (!vars.is_array() || vars.size() != d) field_error("variables", "expected " + std::to_string(d) + " names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (!vars[i].is_string() || vars[i].get<std::string>().empty()) {
        field_error("variables[" + std::to_string(i) + "]", "expected a non-empty string");
      }
      names.push_back(vars[i].get<std::string>());
    }
    variables = std::move(names);
  }

  if (!doc.contains("generators")) field_error("generators", "missing");
  const auto& gens = doc["generators"];
  if (!gens.is_array()) field_error("generators", "expected a list of exponent lists");
  if (gens.empty()) field_error("generators", "empty (the zero ideal is not supported)");
  std::vector<ExponentVector> raw;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string where = "generators[" + std::to_string(g) + "]";
    if (!gens[g].is_array() || gens[g].size() != d) field_error(where, "expected " + std::to_string(d) + " exponents");
    std::vector<std::int64_t> c;
    for (std::size_t i = 0; i < d; ++i) {
      const auto& x = gens[g][i];
      if (!x.is_number_integer() || x.get<std::int64_t>() < 0) {
        field_error(where + "[" + std::to_string(i) + "]", "expected a non-negative integer");
      }
      c.push_back(x.get<std::int64_t>());
    }
    raw.emplace_back(std::move(c));
  }
  return IdealSpec{MonomialIdeal::minimalize(d, std::move(raw)), std::move(variables)};
}

std::string serialize_ideal_spec(const IdealSpec& spec) {
  Json doc;
  doc["dimension"] = spec.ideal.dimension();
  if (spec.variables) doc["variables"] = *spec.variables;
  doc["generators"] = generators_json(spec.ideal);
  return dump(doc) + "\n";
}

ResolutionDatum parse_resolution_datum(std::string_view text) {
  const Plain doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
    field_error("entries", "expected a list of {r, b, label} records");
  }
  std::vector<ResolutionEntry> entries;
  const auto& list = doc["entries"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "entries[" + std::to_string(i) + "]";
    const auto& item = list[i];
    if (!item.is_object()) field_error(where, "expected an object");
    if (!item.contains("r")) field_error(where + ".r", "missing");
    if (!item.contains("b")) field_error(where + ".b", "missing");
    ResolutionEntry e;
    e.r = rational_field(item["r"], where + ".r");
    if (!item["b"].is_number_integer() || item["b"].get<std::int64_t>() < 0) {
      field_error(where + ".b", "expected a non-negative integer");
    }
    e.b = item["b"].get<std::int64_t>();
    if (item.contains("label")) {
      if (!item["label"].is_string()) field_error(where + ".label", "expected a string");
      e.label = item["label"].get<std::string>();
    }
    entries.push_back(std::move(e));
  }
  return ResolutionDatum(std::move(entries));
}

Json exponent_json(const ExponentVector& v) {
  Json out = Json::array();
  for (auto x : v.coords()) out.push_back(x);
  return out;
}

Json generators_json(const MonomialIdeal& ideal) {
  Json out = Json::array();
  for (const auto& g : ideal.generators()) out.push_back(exponent_json(g));
  return out;
}

Json ideal_json(const MonomialIdeal& ideal) {
  return Json{{"dimension", ideal.dimension()}, {"generators", generators_json(ideal)}};
}

namespace {

// Facet data are integral in practice; anything else stays a "p/q" string.
Json integer_or_string(const Rational& x) {
  if (x.is_integer() && fits_int64(x.numerator())) return to_int64(x.numerator());
  return x.to_string();
}

}  // namespace

Json facet_json(const Facet& facet) {
  Json normal = Json::array();
  for (const auto& x : facet.normal) normal.push_back(integer_or_string(x));
  return Json{{"normal", normal}, {"offset", integer_or_string(facet.offset)}};
}

Json polyhedron_json(const NewtonPolyhedron& polyhedron) {
  Json facets = Json::array();
  for (const auto& f : polyhedron.facets()) facets.push_back(facet_json(f));
  Json vertices = Json::array();
  for (const auto& v : polyhedron.vertices()) {
    Json point = Json::array();
    for (const auto& x : v) point.push_back(x.to_string());
    vertices.push_back(point);
  }
  return Json{{"dimension", polyhedron.dimension()}, {"facets", facets}, {"vertices", vertices}};
}

Json report_json(const CheckReport& report) {
  Json out;
  out["check"] = report.name;
  out["verdict"] = report.passed ? "pass" : "fail";
  out["instance"] = report.instance;
  if (report.seed) out["seed"] = *report.seed;
  Json comparisons = Json::array();
  for (const auto& c : report.comparisons) {
    comparisons.push_back(Json{{"label", c.label},
                               {"relation", c.relation == Relation::Subset ? "subset" : "equal"},
                               {"holds", c.holds},
                               {"lhs", generators_json(c.lhs)},
                               {"rhs", generators_json(c.rhs)}});
  }
  out["comparisons"] = comparisons;
  if (report.witness) {
    const auto& w = *report.witness;
    out["witness"] = Json{{"comparison", w.comparison},
                          {"exponent", exponent_json(w.exponent)},
                          {"coefficient", w.coefficient ? Json(w.coefficient->to_string()) : Json(nullptr)},
                          {"lhs", generators_json(w.lhs)},
                          {"rhs", generators_json(w.rhs)}};
  } else {
    out["witness"] = nullptr;
  }
  if (!report.notes.empty()) out["notes"] = report.notes;
  return out;
}

std::string dump(const Json& value) {
  std::ostringstream os;
  dump_into(os, value, 0);
  return os.str();
}

}  // namespace mulideal::io
