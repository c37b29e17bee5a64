#include "svg.hpp"

#include <algorithm>
#include <sstream>

#include "mulideal/errors.hpp"

namespace mulideal::cli {

namespace {

constexpr long kUnit = 40;
constexpr long kMargin = 40;

struct Canvas {
  long width_units;
  long height_units;

  long px(const Rational& x) const { return kMargin + (x * Rational(kUnit)).floor().get_si(); }
  long py(const Rational& y) const { return kMargin + ((Rational(height_units) - y) * Rational(kUnit)).floor().get_si(); }
  long width() const { return 2 * kMargin + width_units * kUnit; }
  long height() const { return 2 * kMargin + height_units * kUnit; }
};

}  // namespace

std::string render_newton_svg(const MonomialIdeal& ideal, const NewtonPolyhedron& polyhedron) {
  if (ideal.dimension() != 2) throw InputError("SVG only for d = 2");

  std::vector<RationalPoint> vertices = polyhedron.vertices();
  std::sort(vertices.begin(), vertices.end(), [](const RationalPoint& a, const RationalPoint& b) {
    return a[0] != b[0] ? a[0] < b[0] : a[1] > b[1];
  });
  std::int64_t xmax = 0, ymax = 0;
  for (const auto& g : ideal.generators()) {
    xmax = std::max(xmax, g[0]);
    ymax = std::max(ymax, g[1]);
  }
  const Canvas canvas{xmax + 2, ymax + 2};
  const Rational right(canvas.width_units), top(canvas.height_units);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas.width() << "\" height=\"" << canvas.height()
     << "\" viewBox=\"0 0 " << canvas.width() << ' ' << canvas.height() << "\">\n";
  os << "  <title>Newton polygon of " << ideal.to_string() << "</title>\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Region: up from the first vertex, along the staircase, out to the right edge.
  os << "  <polygon class=\"region\" fill=\"#cfe2f3\" stroke=\"none\" points=\"";
  os << canvas.px(vertices.front()[0]) << ',' << canvas.py(top);
  for (const auto& v : vertices) os << ' ' << canvas.px(v[0]) << ',' << canvas.py(v[1]);
  os << ' ' << canvas.px(right) << ',' << canvas.py(vertices.back()[1]);
  os << ' ' << canvas.px(right) << ',' << canvas.py(top) << "\"/>\n";

  for (std::int64_t x = 0; x <= canvas.width_units; ++x) {
    for (std::int64_t y = 0; y <= canvas.height_units; ++y) {
      os << "  <circle class=\"lattice\" cx=\"" << canvas.px(Rational(static_cast<long>(x))) << "\" cy=\""
         << canvas.py(Rational(static_cast<long>(y))) << "\" r=\"1.5\" fill=\"#999999\"/>\n";
    }
  }

  os << "  <line class=\"axis\" x1=\"" << canvas.px(0) << "\" y1=\"" << canvas.py(0) << "\" x2=\"" << canvas.px(right)
     << "\" y2=\"" << canvas.py(0) << "\" stroke=\"black\"/>\n";
  os << "  <line class=\"axis\" x1=\"" << canvas.px(0) << "\" y1=\"" << canvas.py(0) << "\" x2=\"" << canvas.px(0)
     << "\" y2=\"" << canvas.py(top) << "\" stroke=\"black\"/>\n";

  os << "  <polyline class=\"boundary\" fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"2\" points=\"";
  os << canvas.px(vertices.front()[0]) << ',' << canvas.py(top);
  for (const auto& v : vertices) os << ' ' << canvas.px(v[0]) << ',' << canvas.py(v[1]);
  os << ' ' << canvas.px(right) << ',' << canvas.py(vertices.back()[1]) << "\"/>\n";

  for (const auto& g : ideal.generators()) {
    os << "  <circle class=\"generator\" cx=\"" << canvas.px(Rational(static_cast<long>(g[0]))) << "\" cy=\""
       << canvas.py(Rational(static_cast<long>(g[1]))) << "\" r=\"5\" fill=\"#c00000\"><title>" << g.to_string()
       << "</title></circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace mulideal::cli
