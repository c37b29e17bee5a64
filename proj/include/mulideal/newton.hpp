#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mulideal/limits.hpp"
#include "mulideal/monomial_ideal.hpp"
#include "mulideal/rational.hpp"

namespace mulideal {

using RationalPoint = std::vector<Rational>;

RationalPoint to_rational_point(const ExponentVector& v);

/// The half-space <normal, xi> >= offset. Normals are non-negative primitive
/// integer vectors; offset 0 means a coordinate half-space xi_i >= 0.
struct Facet {
  std::vector<Rational> normal;
  Rational offset;

  bool is_coordinate() const { return offset.sign() == 0; }
  Rational evaluate(std::span<const Rational> point) const;
  /// Integer-normal inequality such as "3*x1 + x2 >= 5".
  std::string to_string(std::span<const std::string> variables) const;

  friend bool operator==(const Facet&, const Facet&) = default;
};

enum class Position { Outside, Boundary, Interior };

const char* to_string(Position p);

/// conv(points) + R^d_+ held as an irredundant facet list together with its
/// extreme points. Facets are ordered: positive offsets first, by normal
/// direction (normalized to coordinate sum 1) descending lexicographically,
/// then coordinate facets by index.
class NewtonPolyhedron {
 public:
  NewtonPolyhedron(std::size_t dimension, std::vector<Facet> facets, std::vector<RationalPoint> vertices);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<RationalPoint>& vertices() const { return vertices_; }

  /// Position of `point` relative to scale * P. Throws InputError if scale <= 0
  /// or the point has negative entries.
  Position member(std::span<const Rational> point, const Rational& scale = Rational(1)) const;
  Position member(const ExponentVector& point, const Rational& scale = Rational(1)) const;

  friend bool operator==(const NewtonPolyhedron&, const NewtonPolyhedron&) = default;

 private:
  std::size_t dimension_;
  std::vector<Facet> facets_;
  std::vector<RationalPoint> vertices_;
};

/// P(I) for a monomial ideal. Uses the staircase hull when d == 2 and the
/// double-description engine otherwise.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal, const Limits& limits = default_limits());

/// Dimension-general construction from arbitrary non-negative rational points.
NewtonPolyhedron hull_polyhedron(std::size_t dimension, std::span<const RationalPoint> points,
                                 const Limits& limits = default_limits());

/// The d == 2 lower-staircase hull; exposed so it can be cross-checked.
NewtonPolyhedron staircase_polyhedron_2d(const MonomialIdeal& ideal);

/// scale * polyhedron, the form in which weighted combinations are returned.
struct ScaledPolyhedron {
  NewtonPolyhedron polyhedron;
  Rational scale;

  Position member(std::span<const Rational> point, const Rational& c = Rational(1)) const {
    return polyhedron.member(point, c * scale);
  }
};

/// c*P(a) + e*P(b) realized as (1/m) * P(a^{mc} b^{me}) with m the least common
/// denominator of c and e. Throws InputError if c or e is negative, both are
/// zero, the dimensions differ, or m*c or m*e exceeds limits.exponent_bound.
ScaledPolyhedron scale_combination(const MonomialIdeal& a, const Rational& c, const MonomialIdeal& b,
                                   const Rational& e, const Limits& limits = default_limits());

/// The ideal generated by the vertices of P(I); it has the same Newton polyhedron.
MonomialIdeal vertex_ideal(const MonomialIdeal& ideal, const Limits& limits = default_limits());

std::vector<std::string> default_variables(std::size_t dimension);

}  // namespace mulideal
