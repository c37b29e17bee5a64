#include "mulideal/check_report.hpp"

#include <algorithm>

namespace mulideal {

namespace {

std::optional<ExponentVector> least_outside(const MonomialIdeal& sub, const MonomialIdeal& sup) {
  // Generators are stored in graded-lex order, and the least element of
  // sub \ sup is always a generator of sub.
  for (const auto& g : sub.generators()) {
    if (!sup.contains(g)) return g;
  }
  return std::nullopt;
}

}  // namespace

Comparison compare_subset(std::string label, MonomialIdeal lhs, MonomialIdeal rhs) {
  Comparison c{std::move(label), Relation::Subset, std::move(lhs), std::move(rhs), true, std::nullopt};
  c.witness = least_outside(c.lhs, c.rhs);
  c.holds = !c.witness.has_value();
  return c;
}

Comparison compare_equal(std::string label, MonomialIdeal lhs, MonomialIdeal rhs) {
  Comparison c{std::move(label), Relation::Equal, std::move(lhs), std::move(rhs), true, std::nullopt};
  auto left = least_outside(c.lhs, c.rhs);
  auto right = least_outside(c.rhs, c.lhs);
  if (left && right) {
    c.witness = graded_lex_less(*left, *right) ? left : right;
  } else {
    c.witness = left ? left : right;
  }
  c.holds = !c.witness.has_value();
  return c;
}

void CheckReport::add(Comparison comparison, std::optional<Rational> coefficient) {
  if (!comparison.holds) {
    passed = false;
    if (!witness) {
      witness = Witness{comparison.label, *comparison.witness, std::move(coefficient), comparison.lhs,
                        comparison.rhs};
    }
  }
  comparisons.push_back(std::move(comparison));
}

bool witness_is_valid(const Witness& witness) {
  return witness.lhs.contains(witness.exponent) != witness.rhs.contains(witness.exponent);
}

}  // namespace mulideal
