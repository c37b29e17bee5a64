#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mulideal/check_report.hpp"
#include "mulideal/limits.hpp"
#include "mulideal/monomial_ideal.hpp"
#include "mulideal/rational.hpp"

namespace mulideal {

// Structural theorems about multiplier ideals, evaluated on concrete monomial
// instances. A violated hypothesis throws InputError; a failed verdict always
// means the computed ideals contradict the statement.

/// J(a^m b^c) = a * J(a^{m-1} b^c), plus the iterated form
/// J(a^m b^c) = a^{m+1-d} * J(a^{d-1} b^c). Requires m >= d.
CheckReport check_skoda(const MonomialIdeal& a, std::int64_t m, const MonomialIdeal& b, const Rational& c,
                        const Limits& limits = default_limits());

/// J(a^c b^e) ⊆ J(a^c) * J(b^e).
CheckReport check_subadditivity(const MonomialIdeal& a, const Rational& c, const MonomialIdeal& b,
                                const Rational& e, const Limits& limits = default_limits());

/// J(a|_H ^c) ⊆ J(a^c)|_H for the coordinate hyperplane H = {x_index = 0} (0-based index).
CheckReport check_restriction(const MonomialIdeal& a, std::size_t index, const Rational& c,
                              const Limits& limits = default_limits());

/// sqrt(a) * J(a^{xi_i}) ⊆ J(a^{xi_{i+1}}) for consecutive jumps up to the bound,
/// and sqrt(a)^m ⊆ J(a^{xi_m}) for every m.
CheckReport check_mustata_chain(const MonomialIdeal& a, const Rational& bound,
                                const Limits& limits = default_limits());

/// 1/ord(a) <= lct(a) <= d/ord(a).
CheckReport check_lct_bounds(const MonomialIdeal& a, const Limits& limits = default_limits());

struct NullstellensatzResult {
  std::int64_t sigma = 0;
  CheckReport report;
};

/// sigma = index of the first jumping number >= d; checks sqrt(a)^sigma ⊆ a.
NullstellensatzResult nullstellensatz_sigma(const MonomialIdeal& a, const Limits& limits = default_limits());

/// Seeded generator for campaign instances: dimension 1..max_dimension,
/// 1..max_generators generators, exponents 0..max_exponent, never the unit ideal.
struct InstanceGenerator {
  std::size_t max_dimension = 3;
  std::size_t max_generators = 5;
  std::int64_t max_exponent = 5;

  MonomialIdeal operator()(std::mt19937_64& rng) const;
  MonomialIdeal operator()(std::mt19937_64& rng, std::size_t dimension) const;
};

/// One aggregated report per random instance, in instance order. Each instance
/// runs Skoda (m = d, d+1), subadditivity (c, e in {1/2, 1, 3/2}), restriction
/// (every admissible hyperplane, c = 1), the Mustata chain (bound d+2) and the
/// lct bounds.
std::vector<CheckReport> run_campaign(std::uint64_t seed, std::size_t count,
                                      const Limits& limits = default_limits());

CheckReport campaign_instance(std::uint64_t seed, std::size_t index, const Limits& limits = default_limits());

}  // namespace mulideal
