#include <gtest/gtest.h>

#include "fm_oracle.hpp"
#include "mulideal/errors.hpp"
#include "mulideal/howald.hpp"
#include "mulideal/io.hpp"
#include "mulideal/theorems.hpp"
#include "support.hpp"

using namespace mulideal;
using namespace mulideal::testing;

namespace {

/// J(a^c) recomputed pointwise from the oracle inside [0, bound]^d.
MonomialIdeal oracle_multiplier_ideal(const MonomialIdeal& a, const Rational& c, std::int64_t bound) {
  std::vector<ExponentVector> members;
  for (const auto& w : box(a.dimension(), bound)) {
    if (oracle::in_multiplier_ideal(a, w, c)) members.push_back(w);
  }
  return MonomialIdeal::minimalize(a.dimension(), members);
}

MonomialIdeal drop_first(const MonomialIdeal& i) {
  std::vector<ExponentVector> rest(i.generators().begin() + 1, i.generators().end());
  return MonomialIdeal::minimalize(i.dimension(), rest);
}

}  // namespace

TEST(Skoda, Examples) {
  const auto m = MonomialIdeal::maximal(2);
  const auto unit = MonomialIdeal::unit(2);
  EXPECT_TRUE(check_skoda(m, 2, unit, q(0)).passed);
  EXPECT_EQ(multiplier_ideal(m, q(2)), m);

  const auto a = staircase();
  const auto report = check_skoda(a, 2, unit, q(0));
  EXPECT_TRUE(report.passed);
  // Both sides against the oracle: J(a^2) and a * J(a).
  EXPECT_EQ(multiplier_ideal(a, q(2)), oracle_multiplier_ideal(a, q(2), 10));
  EXPECT_EQ(product(a, oracle_multiplier_ideal(a, q(1), 10)), multiplier_ideal(a, q(2)));

  EXPECT_THROW(check_skoda(MonomialIdeal::maximal(3), 2, MonomialIdeal::unit(3), q(0)), InputError);
  EXPECT_THROW(check_skoda(a, 2, unit, q(-1)), InputError);
}

TEST(Subadditivity, Examples) {
  const auto a = staircase();
  EXPECT_TRUE(check_subadditivity(a, q(1), a, q(1)).passed);
  EXPECT_TRUE(check_subadditivity(a, q(3, 2), MonomialIdeal::unit(2), q(5)).passed);
  const auto diag = ideal(2, {{2, 0}, {0, 3}});
  const auto report = check_subadditivity(diag, q(1), MonomialIdeal::maximal(2), q(1));
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(multiplier_ideal(diag, q(1)), oracle_multiplier_ideal(diag, q(1), 6));
}

TEST(RestrictionCheck, Examples) {
  const auto diag = ideal(2, {{2, 0}, {0, 3}});
  EXPECT_EQ(multiplier_ideal(diag, q(1)), MonomialIdeal::maximal(2));
  EXPECT_EQ(multiplier_ideal(ideal(1, {{2}}), q(1)), ideal(1, {{2}}));
  EXPECT_TRUE(check_restriction(diag, 1, q(1)).passed);
  EXPECT_TRUE(check_restriction(ideal(2, {{2, 0}}), 1, q(1)).passed);
  EXPECT_TRUE(check_restriction(staircase(), 0, q(1)).passed);
  EXPECT_THROW(check_restriction(ideal(2, {{1, 1}}), 0, q(1)), InputError);
  EXPECT_EQ(check_restriction(diag, 1, q(1)).instance["k"], 2);
}

TEST(MustataChain, Examples) {
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto report = check_mustata_chain(MonomialIdeal::maximal(d), Rational(static_cast<long>(d + 3)));
    EXPECT_TRUE(report.passed);
    // Consecutive ideals m^l, m^(l+1) make the first containment an equality.
    for (std::size_t i = 2; i < report.comparisons.size(); i += 2) {
      EXPECT_EQ(report.comparisons[i].lhs, report.comparisons[i].rhs);
    }
  }
  EXPECT_TRUE(check_mustata_chain(ideal(2, {{2, 0}, {0, 3}}), q(2)).passed);
  EXPECT_TRUE(check_mustata_chain(ideal(2, {{2, 0}, {0, 2}}), q(3)).passed);
  EXPECT_THROW(check_mustata_chain(MonomialIdeal::unit(2), q(2)), InputError);
}

TEST(Nullstellensatz, Examples) {
  const auto m = nullstellensatz_sigma(MonomialIdeal::maximal(2));
  EXPECT_EQ(m.sigma, 1);
  EXPECT_TRUE(m.report.passed);

  const auto a = ideal(2, {{2, 0}, {0, 2}});
  const auto r = nullstellensatz_sigma(a);
  EXPECT_FALSE(a.contains(power(MonomialIdeal::maximal(2), 2)));
  EXPECT_GE(r.sigma, 3);
  EXPECT_TRUE(r.report.passed);
  // Jumps of (x^2, y^2): (w1+1)/2 + (w2+1)/2, i.e. 1, 3/2, 2, ... so sigma = 3.
  EXPECT_EQ(r.sigma, 3);

  const auto xy = ideal(2, {{1, 1}});
  EXPECT_TRUE(nullstellensatz_sigma(xy).report.passed);
  EXPECT_THROW(nullstellensatz_sigma(MonomialIdeal::unit(2)), InputError);
}

TEST(LctBounds, Report) {
  const auto report = check_lct_bounds(staircase());
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(report.notes["lct"], "2/3");
  EXPECT_EQ(report.notes["lower"], "1/3");
  EXPECT_EQ(report.notes["upper"], "2/3");
}

TEST(Reports, FailureInjectionYieldsValidWitness) {
  std::mt19937_64 rng(200);
  int injected = 0;
  for (int t = 0; t < 60; ++t) {
    const std::size_t d = 1 + rng() % 3;
    const auto a = random_ideal(rng, d, 4, 4);
    const auto lhs = multiplier_ideal(a, q(static_cast<long>(d)));
    const auto rhs = product(a, multiplier_ideal(a, q(static_cast<long>(d - 1))));
    CheckReport good;
    good.name = "skoda";
    good.add(compare_equal("J(a^d) = a * J(a^(d-1))", lhs, rhs), Rational(static_cast<long>(d)));
    EXPECT_TRUE(good.passed);
    if (rhs.size() < 2) continue;
    CheckReport bad;
    bad.name = "skoda";
    bad.add(compare_equal("J(a^d) = a * J(a^(d-1))", lhs, drop_first(rhs)), Rational(static_cast<long>(d)));
    ASSERT_FALSE(bad.passed);
    ASSERT_TRUE(bad.witness.has_value());
    EXPECT_TRUE(witness_is_valid(*bad.witness));
    EXPECT_EQ(bad.witness->exponent, rhs.generators().front());
    ++injected;
  }
  EXPECT_GT(injected, 10);
}

TEST(Reports, SubsetWitnessIsGradedLexLeast) {
  const auto lhs = ideal(2, {{2, 0}, {1, 1}, {0, 2}});
  const auto rhs = ideal(2, {{2, 0}, {0, 2}});
  const auto c = compare_subset("test", lhs, rhs);
  EXPECT_FALSE(c.holds);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(*c.witness, ev({1, 1}));
  EXPECT_FALSE(compare_subset("ok", rhs, lhs).witness.has_value());
}

TEST(Reports, DeterministicOnReserializedInstance) {
  const auto a = staircase();
  const auto first = check_skoda(a, 3, ideal(2, {{1, 0}, {0, 2}}), q(1, 2));
  const auto text = io::dump(first.instance["a"]);
  const auto again = io::parse_ideal_spec(text).ideal;
  const auto b = io::parse_ideal_spec(io::dump(first.instance["b"])).ideal;
  const auto second = check_skoda(again, first.instance["m"].get<std::int64_t>(), b,
                                  Rational::parse(first.instance["c"].get<std::string>()));
  EXPECT_EQ(io::dump(io::report_json(first)), io::dump(io::report_json(second)));
}

TEST(Campaign, GeneratorRespectsBounds) {
  std::mt19937_64 rng(5);
  const InstanceGenerator generate;
  for (int t = 0; t < 300; ++t) {
    const auto a = generate(rng);
    EXPECT_GE(a.dimension(), 1u);
    EXPECT_LE(a.dimension(), 3u);
    EXPECT_LE(a.size(), 5u);
    EXPECT_FALSE(a.is_unit());
    for (const auto& g : a.generators()) {
      for (auto x : g.coords()) EXPECT_LE(x, 5);
    }
  }
}

TEST(Campaign, SeededAndOrdered) {
  const auto first = run_campaign(7, 12);
  const auto second = run_campaign(7, 12);
  ASSERT_EQ(first.size(), 12u);
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_TRUE(first[i].passed) << io::dump(io::report_json(first[i]));
    EXPECT_EQ(first[i].seed, std::optional<std::uint64_t>(7));
    EXPECT_EQ(first[i].instance["index"], i);
    EXPECT_EQ(io::dump(io::report_json(first[i])), io::dump(io::report_json(second[i])));
    EXPECT_EQ(io::dump(io::report_json(first[i])), io::dump(io::report_json(campaign_instance(7, i))));
  }
}
