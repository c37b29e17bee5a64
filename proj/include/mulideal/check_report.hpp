#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mulideal/monomial_ideal.hpp"
#include "mulideal/rational.hpp"

namespace mulideal {

enum class Relation { Subset, Equal };

/// One ideal comparison inside a check: lhs ⊆ rhs or lhs == rhs.
struct Comparison {
  std::string label;
  Relation relation = Relation::Subset;
  MonomialIdeal lhs;
  MonomialIdeal rhs;
  bool holds = true;
  /// Graded-lex least monomial on which membership in lhs and rhs disagrees in
  /// the forbidden direction; present exactly when the comparison fails.
  std::optional<ExponentVector> witness;
};

Comparison compare_subset(std::string label, MonomialIdeal lhs, MonomialIdeal rhs);
Comparison compare_equal(std::string label, MonomialIdeal lhs, MonomialIdeal rhs);

/// The offending monomial of the first failing comparison, with the ideals
/// it separates: exactly one of lhs, rhs contains it.
struct Witness {
  std::string comparison;
  ExponentVector exponent;
  std::optional<Rational> coefficient;
  MonomialIdeal lhs;
  MonomialIdeal rhs;
};

struct CheckReport {
  std::string name;
  bool passed = true;
  std::vector<Comparison> comparisons;
  std::optional<Witness> witness;
  nlohmann::ordered_json instance;
  std::optional<std::uint64_t> seed;
  /// Check-specific extras (sigma, strictness witnesses, ...).
  nlohmann::ordered_json notes = nlohmann::ordered_json::object();

  /// Appends a comparison and folds it into the verdict and witness.
  void add(Comparison comparison, std::optional<Rational> coefficient = std::nullopt);
};

/// Re-derives the verdict from the witness alone: true iff the witness
/// separates its two ideals.
bool witness_is_valid(const Witness& witness);

}  // namespace mulideal
