#include <gtest/gtest.h>

#include "mulideal/errors.hpp"
#include "mulideal/howald.hpp"
#include "mulideal/symbolic.hpp"
#include "support.hpp"

using namespace mulideal;
using namespace mulideal::testing;

namespace {

MonomialIdeal triangle() { return ideal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}); }

using Primes = std::vector<std::vector<std::size_t>>;

/// Minimal vertex covers by brute force over all subsets, checked by divisibility.
Primes brute_force_primes(const MonomialIdeal& q) {
  const std::size_t d = q.dimension();
  auto is_cover = [&](unsigned set) {
    for (const auto& g : q.generators()) {
      bool hit = false;
      for (std::size_t i = 0; i < d; ++i) hit = hit || (g[i] > 0 && ((set >> i) & 1U));
      if (!hit) return false;
    }
    return true;
  };
  Primes out;
  for (unsigned set = 1; set < (1U << d); ++set) {
    if (!is_cover(set)) continue;
    bool minimal = true;
    for (unsigned sub = (set - 1) & set; sub != 0 && minimal; sub = (sub - 1) & set) minimal = !is_cover(sub);
    if (!minimal) continue;
    std::vector<std::size_t> p;
    for (std::size_t i = 0; i < d; ++i) {
      if ((set >> i) & 1U) p.push_back(i);
    }
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal random_squarefree(std::mt19937_64& rng, std::size_t d) {
  std::vector<ExponentVector> raw;
  const std::size_t count = 1 + rng() % 4;
  while (raw.size() < count) {
    std::vector<std::int64_t> c(d);
    bool nonzero = false;
    for (auto& x : c) {
      x = static_cast<std::int64_t>(rng() % 2);
      nonzero = nonzero || x != 0;
    }
    if (nonzero) raw.emplace_back(std::move(c));
  }
  return MonomialIdeal::minimalize(d, raw);
}

}  // namespace

TEST(Analyze, Triangle) {
  const auto q3 = analyze(triangle());
  const Primes expected = {{0, 1}, {0, 2}, {1, 2}};
  EXPECT_EQ(q3.minimal_primes(), expected);
  EXPECT_EQ(q3.pure_codimension(), 2u);
}

TEST(Analyze, PrincipalAndErrors) {
  const auto x = analyze(ideal(1, {{1}}));
  EXPECT_EQ(x.minimal_primes(), Primes({{0}}));
  EXPECT_THROW(analyze(ideal(2, {{2, 1}})), InputError);
  EXPECT_THROW(analyze(MonomialIdeal::unit(2)), InputError);
}

TEST(Analyze, MatchesBruteForceCovers) {
  std::mt19937_64 rng(400);
  for (int t = 0; t < 100; ++t) {
    const auto q = random_squarefree(rng, 1 + rng() % 5);
    if (q.is_unit()) continue;
    auto primes = analyze(q).minimal_primes();
    std::sort(primes.begin(), primes.end());
    EXPECT_EQ(primes, brute_force_primes(q)) << q;
  }
}

TEST(SymbolicPower, TriangleStrictness) {
  const auto q3 = analyze(triangle());
  const auto xyz = ev({1, 1, 1});
  EXPECT_TRUE(symbolic_power(q3, 2).contains(xyz));
  EXPECT_FALSE(power(triangle(), 2).contains(xyz));
  EXPECT_EQ(symbolic_power(q3, 1), triangle());
}

TEST(SymbolicPower, SmoothCollapse) {
  for (const auto& base : {ideal(1, {{1}}), ideal(3, {{1, 0, 0}, {0, 1, 0}}), ideal(2, {{1, 0}, {0, 1}})}) {
    const auto q = analyze(base);
    for (std::int64_t m = 1; m <= 5; ++m) EXPECT_EQ(symbolic_power(q, m), power(base, m));
  }
  EXPECT_THROW(symbolic_power(analyze(triangle()), 0), InputError);
}

TEST(SymbolicPower, FamilyLaws) {
  std::mt19937_64 rng(401);
  for (int t = 0; t < 40; ++t) {
    const auto base = random_squarefree(rng, 2 + rng() % 3);
    if (base.is_unit()) continue;
    const auto q = analyze(base);
    for (std::int64_t m = 1; m <= 5; ++m) {
      EXPECT_TRUE(symbolic_power(q, m).contains(power(base, m))) << base << " m=" << m;
      for (std::int64_t l = 1; l + m <= 5; ++l) {
        EXPECT_TRUE(symbolic_power(q, l + m).contains(product(symbolic_power(q, l), symbolic_power(q, m))));
      }
    }
  }
}

TEST(SymbolicPower, MembershipByPrimeOrders) {
  // x^w in q^(m) iff sum_{j in P} w_j >= m for every minimal prime P.
  const auto q3 = analyze(triangle());
  for (std::int64_t m = 1; m <= 4; ++m) {
    const auto s = symbolic_power(q3, m);
    for (const auto& w : box(3, 5)) {
      bool expected = true;
      for (const auto& p : q3.minimal_primes()) {
        std::int64_t order = 0;
        for (auto j : p) order += w[j];
        expected = expected && order >= m;
      }
      EXPECT_EQ(s.contains(w), expected);
    }
  }
}

TEST(SymbolicPolyhedron, Facets) {
  const auto p = symbolic_polyhedron(analyze(triangle()));
  std::vector<std::string> text;
  for (const auto& f : p.facets()) text.push_back(f.to_string(default_variables(3)));
  const std::vector<std::string> expected = {"x1 + x2 >= 1", "x1 + x3 >= 1", "x2 + x3 >= 1", "x1 >= 0", "x2 >= 0",
                                             "x3 >= 0"};
  EXPECT_EQ(text, expected);
  const auto single = symbolic_polyhedron(analyze(ideal(1, {{1}})));
  ASSERT_EQ(single.facets().size(), 1u);
  EXPECT_EQ(single.facets()[0].to_string(default_variables(1)), "x1 >= 1");
  const auto prime = symbolic_polyhedron(analyze(MonomialIdeal::maximal(2)));
  EXPECT_EQ(prime.facets()[0].to_string(default_variables(2)), "x1 + x2 >= 1");
}

TEST(SymbolicPolyhedron, StabilizesAlongEvenPowers) {
  // (1/p) P(q^(p)) ⊆ the limit polyhedron for every p, with equality once
  // p clears the denominators of its vertices; (1/2,1/2,1/2) needs p even.
  const auto q3 = analyze(triangle());
  const auto limit = symbolic_polyhedron(q3);
  for (std::int64_t p = 1; p <= 6; ++p) {
    const auto scaled = newton_polyhedron(symbolic_power(q3, p));
    // Compare on the lattice (1/2p) Z^3, fine enough to see the half-integral vertex.
    const Rational scale(static_cast<long>(2 * p));
    bool equal = true;
    for (const auto& w : box(3, 4 * p)) {
      const bool at_p = scaled.member(w, q(2)) != Position::Outside;
      const bool in_limit = limit.member(w, scale) != Position::Outside;
      if (at_p) EXPECT_TRUE(in_limit);
      equal = equal && at_p == in_limit;
    }
    if (p % 2 == 0) {
      EXPECT_TRUE(equal) << "p = " << p;
      std::vector<Facet> normalized = scaled.facets();
      for (auto& f : normalized) f.offset = f.offset / Rational(static_cast<long>(p));
      EXPECT_EQ(NewtonPolyhedron(3, normalized, {}).facets(), limit.facets()) << "p = " << p;
    } else {
      EXPECT_FALSE(equal) << "odd p = " << p << " unexpectedly reaches (1/2,1/2,1/2)";
    }
  }
  std::vector<RationalPoint> expected_vertex = {{q(1, 2), q(1, 2), q(1, 2)}};
  EXPECT_NE(std::find(limit.vertices().begin(), limit.vertices().end(), expected_vertex[0]), limit.vertices().end());
}

TEST(AsymptoticMultiplierIdeal, Examples) {
  const auto q3 = analyze(triangle());
  EXPECT_TRUE(triangle().contains(asymptotic_multiplier_ideal(q3, q(2))));
  // Threshold of the limit polyhedron at 1: min over primes of |P| = 2.
  EXPECT_TRUE(asymptotic_multiplier_ideal(q3, q(19, 10)).is_unit());
  EXPECT_FALSE(asymptotic_multiplier_ideal(q3, q(2)).is_unit());
  const auto smooth = ideal(3, {{1, 0, 0}, {0, 1, 0}});
  EXPECT_EQ(asymptotic_multiplier_ideal(analyze(smooth), q(2)), smooth);
  EXPECT_THROW(asymptotic_multiplier_ideal(q3, q(0)), InputError);
}

TEST(AsymptoticMultiplierIdeal, AgreesWithLargeEvenPower) {
  // J(q_.^c) = J((q^(p))^(c/p)) once p is large and even.
  const auto q3 = analyze(triangle());
  for (long c = 1; c <= 4; ++c) {
    EXPECT_EQ(asymptotic_multiplier_ideal(q3, q(c)), multiplier_ideal(symbolic_power(q3, 6), q(c, 6)));
  }
}

TEST(GradedChain, Examples) {
  const auto q3 = analyze(triangle());
  EXPECT_TRUE(check_graded_chain(q3, 2, 2).passed);
  EXPECT_TRUE(check_graded_chain(q3, 1, 1).passed);
  const auto smooth = analyze(ideal(2, {{1, 0}}));
  const auto report = check_graded_chain(smooth, 2, 3);
  EXPECT_TRUE(report.passed);
  for (const auto& c : report.comparisons) EXPECT_EQ(c.lhs, c.rhs) << c.label;
  EXPECT_THROW(check_graded_chain(q3, 0, 1), InputError);
}

TEST(SymbolicContainment, Triangle) {
  const auto q3 = analyze(triangle());
  for (std::int64_t m = 1; m <= 4; ++m) {
    const auto report = check_symbolic_containment(q3, m);
    EXPECT_TRUE(report.passed) << m;
    EXPECT_EQ(report.notes["e"], 2);
  }
  const auto report = check_symbolic_containment(q3, 2);
  EXPECT_EQ(report.notes["strictness_witness"], nlohmann::ordered_json::parse("[1,1,1]"));
}

TEST(SymbolicContainment, MixedCodimensionUsesDimension) {
  // (xy, xz) = (x) ∩ (y, z): primes of sizes 1 and 2.
  const auto q = analyze(ideal(3, {{1, 1, 0}, {1, 0, 1}}));
  EXPECT_EQ(q.pure_codimension(), 0u);
  const auto report = check_symbolic_containment(q, 2);
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(report.notes["e"], 3);
  // (x, yz) has primes {x,y}, {x,z}: equidimensional of codimension 2.
  EXPECT_EQ(analyze(ideal(3, {{1, 0, 0}, {0, 1, 1}})).pure_codimension(), 2u);
}
