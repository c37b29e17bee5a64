#pragma once

#include <string>

#include "mulideal/monomial_ideal.hpp"
#include "mulideal/newton.hpp"

namespace mulideal::cli {

/// Static picture of a planar Newton polygon: shaded region, boundary
/// staircase, lattice dots, and one marker per minimal generator.
/// Throws InputError unless the dimension is 2.
std::string render_newton_svg(const MonomialIdeal& ideal, const NewtonPolyhedron& polyhedron);

}  // namespace mulideal::cli
