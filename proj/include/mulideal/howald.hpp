#pragma once

#include <vector>

#include "mulideal/limits.hpp"
#include "mulideal/monomial_ideal.hpp"
#include "mulideal/newton.hpp"
#include "mulideal/rational.hpp"

namespace mulideal {

/// The monomial ideal spanned by x^w with w + 1 in the interior of
/// c * scale * polyhedron. c == 0 gives the unit ideal.
MonomialIdeal interior_lattice_ideal(const NewtonPolyhedron& polyhedron, const Rational& scale,
                                     const Rational& c, const Limits& limits = default_limits());

/// J(a^c) by Howald's criterion w + 1 in int(c * P(a)).
MonomialIdeal multiplier_ideal(const MonomialIdeal& a, const Rational& c,
                               const Limits& limits = default_limits());

/// J(a^c b^e) against the combined polyhedron c*P(a) + e*P(b).
MonomialIdeal mixed_multiplier_ideal(const MonomialIdeal& a, const Rational& c, const MonomialIdeal& b,
                                     const Rational& e, const Limits& limits = default_limits());

/// c*(w): x^w lies in J(a^c) exactly when c < c*(w). Throws InputError for the unit ideal.
Rational entry_threshold(const MonomialIdeal& a, const ExponentVector& w,
                         const Limits& limits = default_limits());

/// Log-canonical threshold, c*(0). Throws InputError for the unit ideal.
Rational lct(const MonomialIdeal& a, const Limits& limits = default_limits());

struct Jump {
  Rational value;
  MonomialIdeal ideal_after;
};

struct JumpingSequence {
  MonomialIdeal ideal;
  Rational bound;
  std::vector<Jump> jumps;  // strictly increasing, all <= bound
};

/// All jumping numbers in (0, bound] with the multiplier ideal on [xi_i, xi_{i+1}).
JumpingSequence jumping_numbers(const MonomialIdeal& a, const Rational& bound,
                                const Limits& limits = default_limits());

}  // namespace mulideal
