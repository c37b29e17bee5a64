#include "mulideal/newton.hpp"

#include <algorithm>
#include <sstream>

#include "mulideal/cone.hpp"
#include "mulideal/errors.hpp"

namespace mulideal {

namespace {

void require_dimension_within(std::size_t d, const Limits& limits) {
  if (d > limits.dimension_cap) {
    throw InputError("dimension " + std::to_string(d) + " exceeds the configured cap " +
                     std::to_string(limits.dimension_cap));
  }
}

Rational sum_of(const std::vector<Rational>& v) {
  Rational s;
  for (const auto& x : v) s += x;
  return s;
}

bool facet_before(const Facet& a, const Facet& b) {
  if (a.is_coordinate() != b.is_coordinate()) return !a.is_coordinate();
  if (a.is_coordinate()) {
    // Coordinate facets are unit normals; earlier index first.
    return a.normal > b.normal;
  }
  const Rational sa = sum_of(a.normal), sb = sum_of(b.normal);
  for (std::size_t i = 0; i < a.normal.size(); ++i) {
    const Rational lhs = a.normal[i] * sb, rhs = b.normal[i] * sa;
    if (lhs != rhs) return lhs > rhs;
  }
  return a.offset < b.offset;
}

bool point_before(const RationalPoint& a, const RationalPoint& b) {
  const Rational sa = sum_of(a), sb = sum_of(b);
  if (sa != sb) return sa < sb;
  return a > b;
}

/// Canonical facet from a (possibly non-primitive) integer normal and offset.
Facet make_facet(const IntegerVector& normal, const mpq_class& offset) {
  mpz_class g = 0;
  for (const auto& x : normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  Facet f;
  for (const auto& x : normal) f.normal.emplace_back(x, g);
  f.offset = Rational(mpq_class(offset / g));
  return f;
}

std::vector<RationalPoint> extreme_points(std::size_t d, const std::vector<Facet>& facets,
                                          std::span<const RationalPoint> points) {
  std::vector<RationalPoint> out;
  for (const auto& p : points) {
    std::vector<std::vector<mpq_class>> tight;
    for (const auto& f : facets) {
      if (f.evaluate(p) == f.offset) {
        std::vector<mpq_class> row;
        for (const auto& x : f.normal) row.push_back(x.raw());
        tight.push_back(std::move(row));
      }
    }
    if (rank(std::move(tight)) == d) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), point_before);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

RationalPoint to_rational_point(const ExponentVector& v) {
  RationalPoint p;
  p.reserve(v.dimension());
  for (auto c : v.coords()) p.emplace_back(static_cast<long>(c));
  return p;
}

Rational Facet::evaluate(std::span<const Rational> point) const {
  Rational s;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    if (normal[i].sign() != 0) s += normal[i] * point[i];
  }
  return s;
}

std::string Facet::to_string(std::span<const std::string> variables) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    if (normal[i].sign() == 0) continue;
    if (!first) os << " + ";
    if (normal[i] != Rational(1)) os << normal[i] << '*';
    os << variables[i];
    first = false;
  }
  os << " >= " << offset;
  return os.str();
}

const char* to_string(Position p) {
  switch (p) {
    case Position::Outside: return "outside";
    case Position::Boundary: return "boundary";
    case Position::Interior: return "interior";
  }
  return "?";
}

NewtonPolyhedron::NewtonPolyhedron(std::size_t dimension, std::vector<Facet> facets,
                                   std::vector<RationalPoint> vertices)
    : dimension_(dimension), facets_(std::move(facets)), vertices_(std::move(vertices)) {
  std::sort(facets_.begin(), facets_.end(), facet_before);
}

Position NewtonPolyhedron::member(std::span<const Rational> point, const Rational& scale) const {
  if (scale.sign() <= 0) throw InputError("polyhedron scale must be positive");
  if (point.size() != dimension_) throw InputError("point has the wrong dimension");
  for (const auto& x : point) {
    if (x.sign() < 0) throw InputError("point must be non-negative");
  }
  bool boundary = false;
  for (const auto& f : facets_) {
    const Rational slack = f.evaluate(point) - scale * f.offset;
    if (slack.sign() < 0) return Position::Outside;
    if (slack.sign() == 0) boundary = true;
  }
  return boundary ? Position::Boundary : Position::Interior;
}

Position NewtonPolyhedron::member(const ExponentVector& point, const Rational& scale) const {
  const auto p = to_rational_point(point);
  return member(p, scale);
}

NewtonPolyhedron hull_polyhedron(std::size_t dimension, std::span<const RationalPoint> points,
                                 const Limits& limits) {
  require_dimension_within(dimension, limits);
  if (points.empty()) throw InputError("hull of an empty point set");
  const std::size_t n = dimension + 1;
  std::vector<IntegerVector> rows;
  for (std::size_t i = 0; i < dimension; ++i) {
    IntegerVector row(n, 0);
    row[i] = 1;
    rows.push_back(std::move(row));
  }
  for (const auto& p : points) {
    if (p.size() != dimension) throw InputError("point has the wrong dimension");
    mpz_class den = 1;
    for (const auto& x : p) {
      if (x.sign() < 0) throw InputError("hull points must be non-negative");
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.raw().get_den_mpz_t());
    }
    IntegerVector row(n);
    for (std::size_t i = 0; i < dimension; ++i) row[i] = mpq_class(p[i].raw() * den).get_num();
    row[dimension] = -den;
    rows.push_back(std::move(row));
  }

  std::vector<Facet> facets;
  for (const auto& ray : extreme_rays(rows, n)) {
    const mpz_class& q = ray[dimension];
    if (q < 0) continue;  // the trivial inequality 0 >= -1
    IntegerVector normal(ray.begin(), ray.begin() + static_cast<std::ptrdiff_t>(dimension));
    facets.push_back(make_facet(normal, mpq_class(q)));
  }
  auto vertices = extreme_points(dimension, facets, points);
  return NewtonPolyhedron(dimension, std::move(facets), std::move(vertices));
}

NewtonPolyhedron staircase_polyhedron_2d(const MonomialIdeal& ideal) {
  if (ideal.dimension() != 2) throw InputError("staircase hull requires dimension 2");
  std::vector<ExponentVector> pts(ideal.generators().begin(), ideal.generators().end());
  // Minimal generators form an antichain: x ascending means y descending.
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });

  auto cross = [](const ExponentVector& a, const ExponentVector& b, const ExponentVector& c) {
    return (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
  };
  std::vector<ExponentVector> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }

  std::vector<Facet> facets;
  facets.push_back(make_facet({1, 0}, mpq_class(hull.front()[0])));
  facets.push_back(make_facet({0, 1}, mpq_class(hull.back()[1])));
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const auto& p = hull[i];
    const auto& q = hull[i + 1];
    const long nx = p[1] - q[1], ny = q[0] - p[0];
    facets.push_back(make_facet({nx, ny}, mpq_class(nx * p[0] + ny * p[1])));
  }
  std::vector<RationalPoint> vertices;
  for (const auto& p : hull) vertices.push_back(to_rational_point(p));
  std::sort(vertices.begin(), vertices.end(), point_before);
  return NewtonPolyhedron(2, std::move(facets), std::move(vertices));
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal, const Limits& limits) {
  require_dimension_within(ideal.dimension(), limits);
  if (ideal.dimension() == 2) return staircase_polyhedron_2d(ideal);
  std::vector<RationalPoint> pts;
  for (const auto& g : ideal.generators()) pts.push_back(to_rational_point(g));
  return hull_polyhedron(ideal.dimension(), pts, limits);
}

MonomialIdeal vertex_ideal(const MonomialIdeal& ideal, const Limits& limits) {
  const auto poly = newton_polyhedron(ideal, limits);
  std::vector<ExponentVector> gens;
  for (const auto& v : poly.vertices()) {
    std::vector<std::int64_t> c;
    for (const auto& x : v) c.push_back(to_int64(x.numerator()));
    gens.emplace_back(std::move(c));
  }
  return MonomialIdeal::minimalize(ideal.dimension(), std::move(gens));
}

ScaledPolyhedron scale_combination(const MonomialIdeal& a, const Rational& c, const MonomialIdeal& b,
                                   const Rational& e, const Limits& limits) {
  if (a.dimension() != b.dimension()) throw InputError("dimension mismatch in mixed combination");
  if (c.sign() < 0 || e.sign() < 0) throw InputError("combination weights must be non-negative");
  if (c.sign() == 0 && e.sign() == 0) throw InputError("combination weights are both zero");
  const mpz_class m = lcm_of_denominators(c, e);
  const mpz_class mc = mpq_class(c.raw() * m).get_num();
  const mpz_class me = mpq_class(e.raw() * m).get_num();
  if (mc > limits.exponent_bound || me > limits.exponent_bound) {
    throw InputError("mixed exponent exceeds the bound " + std::to_string(limits.exponent_bound) +
                     " (m*c = " + mc.get_str() + ", m*e = " + me.get_str() + ")");
  }
  // P(a^p b^q) = p*P(a) + q*P(b) = conv{p*v + q*u} + R^d_+ over vertices v, u.
  const auto va = vertex_ideal(a, limits), vb = vertex_ideal(b, limits);
  const auto p = to_int64(mc), q = to_int64(me);
  std::vector<ExponentVector> pts;
  for (const auto& v : va.generators()) {
    for (const auto& u : vb.generators()) pts.push_back(v.scaled(p) + u.scaled(q));
  }
  auto combined = MonomialIdeal::minimalize(a.dimension(), std::move(pts));
  return ScaledPolyhedron{newton_polyhedron(combined, limits), Rational(mpz_class(1), m)};
}

std::vector<std::string> default_variables(std::size_t dimension) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dimension; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

}  // namespace mulideal
