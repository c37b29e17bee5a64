#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mulideal/rational.hpp"

namespace mulideal {

/// A divisor E_i on a log resolution: its coefficient r in the pullback of D
/// and its coefficient b in the relative canonical divisor.
struct ResolutionEntry {
  Rational r;
  std::int64_t b = 0;
  std::string label;
};

/// Abstract log-resolution data. Entries carry no incidence information, so
/// every formula below takes the minimum over all of them; callers wanting a
/// value at a point must pass only the divisors lying over it.
class ResolutionDatum {
 public:
  /// Throws InputError if some r < 0, some b < 0, or no entry has r > 0.
  explicit ResolutionDatum(std::vector<ResolutionEntry> entries);

  const std::vector<ResolutionEntry>& entries() const { return entries_; }

 private:
  std::vector<ResolutionEntry> entries_;
};

/// min (b + 1) / r over entries with r > 0.
Rational lct_from_resolution(const ResolutionDatum& data);

/// Every (b + m) / r <= bound with m >= 1, sorted and deduplicated. This is a
/// superset of the jumping numbers, not the jumping numbers themselves.
std::vector<Rational> candidate_jumping_numbers(const ResolutionDatum& data, const Rational& bound);

enum class Singularity { KLT, LCNotKLT, NotLC };

const char* to_string(Singularity s);

/// KLT iff floor(c*r) <= b for every entry; log-canonical iff c*r <= b + 1 for every entry.
Singularity classify(const ResolutionDatum& data, const Rational& c);

/// Round-down coefficients of an SNC divisor: J(D) = O(-sum floor(a_i) D_i).
/// Throws InputError on a negative coefficient.
std::vector<std::int64_t> snc_multiplier_coefficients(const std::vector<Rational>& coefficients);

}  // namespace mulideal
