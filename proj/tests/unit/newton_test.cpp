#include <gtest/gtest.h>

#include <algorithm>

#include "fm_oracle.hpp"
#include "mulideal/errors.hpp"
#include "mulideal/newton.hpp"
#include "support.hpp"

using namespace mulideal;
using namespace mulideal::testing;

namespace {

Facet facet(std::initializer_list<long> normal, long offset) {
  Facet f;
  for (long x : normal) f.normal.emplace_back(x);
  f.offset = Rational(offset);
  return f;
}

std::vector<Rational> point(std::initializer_list<Rational> xs) { return std::vector<Rational>(xs); }

Position from_oracle(oracle::Location l) {
  switch (l) {
    case oracle::Location::Outside: return Position::Outside;
    case oracle::Location::Boundary: return Position::Boundary;
    case oracle::Location::Interior: return Position::Interior;
  }
  return Position::Outside;
}

}  // namespace

TEST(NewtonPolyhedron, StaircaseFacets) {
  const auto p = newton_polyhedron(staircase());
  const std::vector<Facet> expected = {facet({3, 1}, 5), facet({1, 1}, 3), facet({1, 2}, 4), facet({1, 0}, 0),
                                       facet({0, 1}, 0)};
  EXPECT_EQ(p.facets(), expected);
  const auto names = default_variables(2);
  EXPECT_EQ(p.facets()[0].to_string(names), "3*x1 + x2 >= 5");
  EXPECT_EQ(p.vertices().size(), 4u);
  // Every generator satisfies every inequality.
  const auto a = staircase();
  for (const auto& g : a.generators()) {
    for (const auto& f : p.facets()) EXPECT_GE(f.evaluate(to_rational_point(g)), f.offset);
  }
}

TEST(NewtonPolyhedron, DiagonalHasOneSlantedFacet) {
  const auto p = newton_polyhedron(MonomialIdeal::diagonal(std::vector<std::int64_t>{2, 3, 4}));
  const std::vector<Facet> expected = {facet({6, 4, 3}, 12), facet({1, 0, 0}, 0), facet({0, 1, 0}, 0),
                                       facet({0, 0, 1}, 0)};
  EXPECT_EQ(p.facets(), expected);
}

TEST(NewtonPolyhedron, UnitIdealIsOrthant) {
  const auto p = newton_polyhedron(MonomialIdeal::unit(3));
  ASSERT_EQ(p.facets().size(), 3u);
  for (const auto& f : p.facets()) EXPECT_TRUE(f.is_coordinate());
}

TEST(NewtonPolyhedron, PrincipalIdealDropsCoordinateFacets) {
  const auto p = newton_polyhedron(ideal(2, {{2, 3}}));
  const std::vector<Facet> expected = {facet({1, 0}, 2), facet({0, 1}, 3)};
  EXPECT_EQ(p.facets(), expected);
}

TEST(NewtonPolyhedron, DimensionCap) {
  Limits small;
  small.dimension_cap = 3;
  EXPECT_THROW(newton_polyhedron(MonomialIdeal::maximal(4), small), InputError);
  EXPECT_NO_THROW(newton_polyhedron(MonomialIdeal::maximal(3), small));
}

TEST(Member, Examples) {
  const auto p = newton_polyhedron(staircase());
  EXPECT_EQ(p.member(ev({3, 1})), Position::Interior);
  EXPECT_EQ(p.member(ev({2, 1})), Position::Boundary);
  EXPECT_EQ(p.member(ev({1, 1})), Position::Outside);
  const auto diag = newton_polyhedron(ideal(2, {{2, 0}, {0, 3}}));
  EXPECT_EQ(diag.member(point({q(1), q(1)}), q(5, 6)), Position::Boundary);
  EXPECT_EQ(diag.member(point({q(1), q(1)}), q(4, 5)), Position::Interior);
  EXPECT_EQ(diag.member(point({q(1), q(1)}), q(6, 7)), Position::Outside);
  EXPECT_THROW(p.member(ev({1, 1}), q(0)), InputError);
  EXPECT_THROW(p.member(point({q(-1), q(1)})), InputError);
}

TEST(NewtonPolyhedron, StaircaseMatchesGeneralEngine) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_ideal(rng, 2, 7, 9);
    std::vector<RationalPoint> pts;
    for (const auto& g : a.generators()) pts.push_back(to_rational_point(g));
    EXPECT_EQ(staircase_polyhedron_2d(a), hull_polyhedron(2, pts)) << a;
  }
}

TEST(NewtonPolyhedron, VerticesAgreeWithOracle) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 150; ++t) {
    const auto a = random_ideal(rng, 1 + rng() % 3, 6, 5);
    const auto p = newton_polyhedron(a);
    const auto gens = a.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const bool listed = std::find(p.vertices().begin(), p.vertices().end(), to_rational_point(gens[i])) !=
                          p.vertices().end();
      EXPECT_EQ(listed, oracle::is_extreme(gens, i)) << a << " generator " << gens[i];
    }
  }
}

TEST(NewtonPolyhedron, OracleEquivalenceAtRationalPoints) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 120; ++t) {
    const std::size_t d = 1 + rng() % 3;
    const auto a = random_ideal(rng, d, 5, 5);
    const auto p = newton_polyhedron(a);
    for (int s = 0; s < 15; ++s) {
      std::vector<Rational> x;
      for (std::size_t i = 0; i < d; ++i) x.push_back(q(static_cast<long>(rng() % 25), 1 + static_cast<long>(rng() % 4)));
      EXPECT_EQ(p.member(x), from_oracle(oracle::locate(a.generators(), x))) << a;
    }
    // Lattice points: membership in a implies membership in P(a).
    for (const auto& w : box(d, 6)) {
      if (a.contains(w)) EXPECT_NE(p.member(w), Position::Outside);
    }
  }
}

TEST(NewtonPolyhedron, FacetsAreSupportedAndIrredundant) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 1 + rng() % 3;
    const auto a = random_ideal(rng, d, 5, 5);
    const auto p = newton_polyhedron(a);
    for (std::size_t fi = 0; fi < p.facets().size(); ++fi) {
      const auto& f = p.facets()[fi];
      // Relative interior point of the face: centroid of its vertices plus its recession directions.
      std::vector<RationalPoint> on;
      for (const auto& v : p.vertices()) {
        if (f.evaluate(v) == f.offset) on.push_back(v);
      }
      ASSERT_FALSE(on.empty()) << "unsupported facet " << f.to_string(default_variables(d)) << " of " << a;
      RationalPoint x(d);
      for (const auto& v : on) {
        for (std::size_t i = 0; i < d; ++i) x[i] += v[i] / Rational(static_cast<long>(on.size()));
      }
      for (std::size_t i = 0; i < d; ++i) {
        if (f.normal[i].sign() == 0) x[i] += Rational(1);
      }
      ASSERT_EQ(p.member(x), Position::Boundary);
      // Dropping xi_i >= 0 only admits negative points, which are outside the domain.
      if (f.is_coordinate()) continue;
      // Step outward just far enough to break this facet and no other.
      Rational step(1);
      for (std::size_t gi = 0; gi < p.facets().size(); ++gi) {
        if (gi == fi) continue;
        const auto& g = p.facets()[gi];
        const Rational slack = g.evaluate(x) - g.offset;
        ASSERT_GT(slack.sign(), 0);
        const Rational rate = g.evaluate(f.normal);
        if (rate.sign() > 0) step = std::min(step, slack / (rate * Rational(2)));
      }
      RationalPoint y(d);
      for (bool negative = true; negative; step /= Rational(2)) {
        negative = false;
        for (std::size_t i = 0; i < d; ++i) {
          y[i] = x[i] - step * f.normal[i];
          negative = negative || y[i].sign() < 0;
        }
        if (!negative) break;
      }
      EXPECT_EQ(p.member(y), Position::Outside);
      EXPECT_EQ(oracle::locate(a.generators(), y), oracle::Location::Outside) << a;
      for (std::size_t gi = 0; gi < p.facets().size(); ++gi) {
        if (gi != fi) EXPECT_GT(p.facets()[gi].evaluate(y), p.facets()[gi].offset);
      }
    }
  }
}

TEST(Member, MonotoneAndScaleConsistent) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 1 + rng() % 3;
    const auto a = random_ideal(rng, d, 5, 5);
    const auto p = newton_polyhedron(a);
    const Rational c = q(1 + static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 5));
    for (const auto& w : box(d, 5)) {
      const auto pos = p.member(w, c);
      std::vector<Rational> scaled;
      for (auto x : w.coords()) scaled.push_back(Rational(static_cast<long>(x)) / c);
      EXPECT_EQ(pos, p.member(scaled, Rational(1)));
      if (pos == Position::Interior) {
        for (std::size_t i = 0; i < d; ++i) {
          EXPECT_EQ(p.member(w + ExponentVector::unit_vector(d, i), c), Position::Interior);
        }
      }
    }
  }
}

TEST(ScaleCombination, Examples) {
  const auto a = staircase();
  const auto same = scale_combination(a, q(1), a, q(0));
  const auto halves = scale_combination(a, q(1, 2), a, q(1, 2));
  const auto p = newton_polyhedron(a);
  for (const auto& w : box(2, 8)) {
    EXPECT_EQ(same.member(to_rational_point(w)), p.member(w));
    EXPECT_EQ(halves.member(to_rational_point(w)), p.member(w));
  }
  const auto product_polyhedron = scale_combination(ideal(2, {{2, 0}}), q(1), ideal(2, {{0, 3}}), q(1));
  EXPECT_EQ(product_polyhedron.scale, q(1));
  const std::vector<Facet> expected = {facet({1, 0}, 2), facet({0, 1}, 3)};
  EXPECT_EQ(product_polyhedron.polyhedron.facets(), expected);
}

TEST(ScaleCombination, MatchesMinkowskiSumOracle) {
  // c P(a) + e P(b) = conv{c g + e h} + orthant; the oracle sees those points directly.
  std::mt19937_64 rng(13);
  const Rational choices[] = {q(1, 2), q(1), q(3, 2), q(2, 3)};
  for (int t = 0; t < 60; ++t) {
    const std::size_t d = 1 + rng() % 3;
    const auto a = random_ideal(rng, d, 4, 4);
    const auto b = random_ideal(rng, d, 4, 4);
    const Rational c = choices[rng() % 4], e = choices[rng() % 4];
    const auto combined = scale_combination(a, c, b, e);
    const auto m = lcm_of_denominators(c, e);
    // Oracle generators: m*(c g + e h), an integer point set, compared at scale m.
    std::vector<ExponentVector> pts;
    for (const auto& g : a.generators()) {
      for (const auto& h : b.generators()) {
        std::vector<std::int64_t> x(d);
        for (std::size_t i = 0; i < d; ++i) {
          x[i] = to_int64((Rational(mpz_class(m), mpz_class(1)) * (c * Rational(static_cast<long>(g[i])) +
                                                                    e * Rational(static_cast<long>(h[i]))))
                              .numerator());
        }
        pts.emplace_back(std::move(x));
      }
    }
    for (int s = 0; s < 10; ++s) {
      std::vector<Rational> x, mx;
      for (std::size_t i = 0; i < d; ++i) {
        x.push_back(q(static_cast<long>(rng() % 20), 1 + static_cast<long>(rng() % 3)));
        mx.push_back(x.back() * Rational(mpz_class(m), mpz_class(1)));
      }
      EXPECT_EQ(combined.member(x), from_oracle(oracle::locate(pts, mx)));
    }
  }
}

TEST(ScaleCombination, Guards) {
  const auto a = staircase();
  EXPECT_THROW(scale_combination(a, q(65), a, q(0)), InputError);
  EXPECT_THROW(scale_combination(a, q(1, 2), a, q(65, 2)), InputError);
  EXPECT_THROW(scale_combination(a, q(0), a, q(0)), InputError);
  EXPECT_THROW(scale_combination(a, q(-1), a, q(1)), InputError);
  EXPECT_THROW(scale_combination(a, q(1), MonomialIdeal::maximal(3), q(1)), InputError);
  EXPECT_NO_THROW(scale_combination(a, q(1, 65), a, q(0)));
  EXPECT_NO_THROW(scale_combination(a, q(64), a, q(0)));
}

TEST(VertexIdeal, SamePolyhedron) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_ideal(rng, 1 + rng() % 3, 6, 5);
    const auto v = vertex_ideal(a);
    EXPECT_TRUE(a.contains(v));
    EXPECT_EQ(newton_polyhedron(v), newton_polyhedron(a)) << a;
  }
}
