#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mulideal/check_report.hpp"
#include "mulideal/monomial_ideal.hpp"
#include "mulideal/newton.hpp"
#include "mulideal/resolution.hpp"

namespace mulideal::io {

using Json = nlohmann::ordered_json;

/// Contents of an ideal file: {"dimension": d, "variables": [...], "generators": [[...], ...]}.
struct IdealSpec {
  MonomialIdeal ideal;
  std::optional<std::vector<std::string>> variables;

  std::vector<std::string> variable_names() const;
};

/// Parse errors name the field and, for malformed JSON, the line and column.
IdealSpec parse_ideal_spec(std::string_view text);
/// Canonical text; parse_ideal_spec followed by this is the identity on canonical files.
std::string serialize_ideal_spec(const IdealSpec& spec);

ResolutionDatum parse_resolution_datum(std::string_view text);

Json generators_json(const MonomialIdeal& ideal);
Json ideal_json(const MonomialIdeal& ideal);
Json exponent_json(const ExponentVector& v);
Json facet_json(const Facet& facet);
Json polyhedron_json(const NewtonPolyhedron& polyhedron);
Json report_json(const CheckReport& report);

/// One line per element, without the outer indentation nlohmann would add to
/// nested integer arrays.
std::string dump(const Json& value);

}  // namespace mulideal::io
