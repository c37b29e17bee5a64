#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mulideal/howald.hpp"
#include "mulideal/io.hpp"
#include "mulideal/newton.hpp"
#include "mulideal/resolution.hpp"
#include "mulideal/symbolic.hpp"
#include "mulideal/theorems.hpp"

namespace py = pybind11;
using namespace mulideal;

namespace {

// Ideals cross the boundary as (dimension, generator lists), rationals as "p/q".
using Generators = std::vector<std::vector<std::int64_t>>;

MonomialIdeal make(std::size_t d, const Generators& gens) {
  std::vector<ExponentVector> raw;
  raw.reserve(gens.size());
  for (const auto& g : gens) raw.emplace_back(g);
  return MonomialIdeal::minimalize(d, std::move(raw));
}

Generators unmake(const MonomialIdeal& i) {
  Generators out;
  for (const auto& g : i.generators()) out.emplace_back(g.coords().begin(), g.coords().end());
  return out;
}

Rational rat(const std::string& text) { return Rational::parse(text); }

std::string report(const CheckReport& r) { return io::dump(io::report_json(r)); }

ResolutionDatum datum(const std::vector<std::pair<std::string, std::int64_t>>& entries) {
  std::vector<ResolutionEntry> out;
  for (const auto& [r, b] : entries) out.push_back(ResolutionEntry{rat(r), b, ""});
  return ResolutionDatum(std::move(out));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multiplier ideals of monomial ideals";

  m.def("minimalize", [](std::size_t d, const Generators& g) { return unmake(make(d, g)); });
  m.def("contains", [](std::size_t d, const Generators& g, const std::vector<std::int64_t>& w) {
    return make(d, g).contains(ExponentVector(w));
  });
  m.def("product", [](std::size_t d, const Generators& a, const Generators& b) {
    return unmake(product(make(d, a), make(d, b)));
  });
  m.def("power", [](std::size_t d, const Generators& a, std::int64_t k) { return unmake(power(make(d, a), k)); });

  m.def("newton_facets", [](std::size_t d, const Generators& g) {
    std::vector<std::pair<std::vector<std::string>, std::string>> out;
    const auto polyhedron = newton_polyhedron(make(d, g));
    for (const auto& f : polyhedron.facets()) {
      std::vector<std::string> normal;
      for (const auto& x : f.normal) normal.push_back(x.to_string());
      out.emplace_back(std::move(normal), f.offset.to_string());
    }
    return out;
  });

  m.def("multiplier_ideal", [](std::size_t d, const Generators& g, const std::string& c) {
    return unmake(multiplier_ideal(make(d, g), rat(c)));
  });
  m.def("mixed_multiplier_ideal",
        [](std::size_t d, const Generators& a, const std::string& c, const Generators& b, const std::string& e) {
          return unmake(mixed_multiplier_ideal(make(d, a), rat(c), make(d, b), rat(e)));
        });
  m.def("lct", [](std::size_t d, const Generators& g) { return lct(make(d, g)).to_string(); });
  m.def("entry_threshold", [](std::size_t d, const Generators& g, const std::vector<std::int64_t>& w) {
    return entry_threshold(make(d, g), ExponentVector(w)).to_string();
  });
  m.def("jumping_numbers", [](std::size_t d, const Generators& g, const std::string& bound) {
    std::vector<std::pair<std::string, Generators>> out;
    for (const auto& j : jumping_numbers(make(d, g), rat(bound)).jumps) {
      out.emplace_back(j.value.to_string(), unmake(j.ideal_after));
    }
    return out;
  });

  m.def("symbolic_power", [](std::size_t d, const Generators& g, std::int64_t k) {
    return unmake(symbolic_power(analyze(make(d, g)), k));
  });
  m.def("minimal_primes", [](std::size_t d, const Generators& g) { return analyze(make(d, g)).minimal_primes(); });

  m.def("lct_from_resolution", [](const std::vector<std::pair<std::string, std::int64_t>>& entries) {
    return lct_from_resolution(datum(entries)).to_string();
  });
  m.def("classify", [](const std::vector<std::pair<std::string, std::int64_t>>& entries, const std::string& c) {
    return std::string(to_string(classify(datum(entries), rat(c))));
  });

  m.def("check_skoda", [](std::size_t d, const Generators& a, std::int64_t k) {
    return report(check_skoda(make(d, a), k, MonomialIdeal::unit(d), Rational(0)));
  });
  m.def("check_subadditivity",
        [](std::size_t d, const Generators& a, const std::string& c, const Generators& b, const std::string& e) {
          return report(check_subadditivity(make(d, a), rat(c), make(d, b), rat(e)));
        });
  m.def("check_restriction", [](std::size_t d, const Generators& a, std::size_t k, const std::string& c) {
    return report(check_restriction(make(d, a), k, rat(c)));
  });
  m.def("check_symbolic", [](std::size_t d, const Generators& g, std::int64_t k) {
    return report(check_symbolic_containment(analyze(make(d, g)), k));
  });
  m.def("run_campaign", [](std::uint64_t seed, std::size_t count) {
    std::vector<std::string> out;
    for (const auto& r : run_campaign(seed, count)) out.push_back(report(r));
    return out;
  });
}
