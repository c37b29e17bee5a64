#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mulideal/check_report.hpp"
#include "mulideal/limits.hpp"
#include "mulideal/monomial_ideal.hpp"
#include "mulideal/newton.hpp"

namespace mulideal {

/// A squarefree monomial ideal together with its minimal primes. Each prime is
/// the set of (0-based) variable indices generating it.
class SquarefreeIdeal {
 public:
  const MonomialIdeal& base() const { return base_; }
  const std::vector<std::vector<std::size_t>>& minimal_primes() const { return primes_; }

  /// Common size of the minimal primes, or 0 when they differ.
  std::size_t pure_codimension() const;

  friend SquarefreeIdeal analyze(const MonomialIdeal& q, const Limits& limits);

 private:
  SquarefreeIdeal(MonomialIdeal base, std::vector<std::vector<std::size_t>> primes)
      : base_(std::move(base)), primes_(std::move(primes)) {}

  MonomialIdeal base_;
  std::vector<std::vector<std::size_t>> primes_;
};

/// Minimal primes are the minimal vertex covers of the generator supports.
/// Throws InputError for non-squarefree input or the unit ideal.
SquarefreeIdeal analyze(const MonomialIdeal& q, const Limits& limits = default_limits());

/// q^(m) as the intersection of P^m over the minimal primes P.
MonomialIdeal symbolic_power(const SquarefreeIdeal& q, std::int64_t m);

/// The limit polyhedron of (1/p) P(q^(p)): one facet sum_{j in P} xi_j >= 1
/// per minimal prime, plus the coordinate facets that are not implied.
NewtonPolyhedron symbolic_polyhedron(const SquarefreeIdeal& q, const Limits& limits = default_limits());

/// J(q_(.)^c): monomials x^w with w + 1 in int(c * symbolic_polyhedron(q)).
MonomialIdeal asymptotic_multiplier_ideal(const SquarefreeIdeal& q, const Rational& c,
                                          const Limits& limits = default_limits());

/// a_l^m ⊆ a_{lm} ⊆ J(a_.^{lm}) ⊆ J(a_.^l)^m for the symbolic family a_k = q^(k).
CheckReport check_graded_chain(const SquarefreeIdeal& q, std::int64_t l, std::int64_t m,
                               const Limits& limits = default_limits());

/// q^(e m) ⊆ q^m with e the pure codimension, or e = d for mixed codimension.
/// The notes record e and the least monomial of q^(m) outside q^m, if any.
CheckReport check_symbolic_containment(const SquarefreeIdeal& q, std::int64_t m);

}  // namespace mulideal
