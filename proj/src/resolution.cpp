#include "mulideal/resolution.hpp"

#include <algorithm>
#include <optional>

#include "mulideal/errors.hpp"

namespace mulideal {

ResolutionDatum::ResolutionDatum(std::vector<ResolutionEntry> entries) : entries_(std::move(entries)) {
  bool positive = false;
  for (const auto& e : entries_) {
    if (e.r.sign() < 0) throw InputError("resolution coefficient r must be non-negative");
    if (e.b < 0) throw InputError("discrepancy b must be a non-negative integer");
    positive = positive || e.r.sign() > 0;
  }
  if (!positive) throw InputError("resolution data needs at least one entry with r > 0");
}

Rational lct_from_resolution(const ResolutionDatum& data) {
  std::optional<Rational> best;
  for (const auto& e : data.entries()) {
    if (e.r.sign() == 0) continue;
    Rational value = Rational(e.b + 1) / e.r;
    if (!best || value < *best) best = std::move(value);
  }
  return *best;
}

std::vector<Rational> candidate_jumping_numbers(const ResolutionDatum& data, const Rational& bound) {
  if (bound.sign() <= 0) throw InputError("bound must be positive");
  std::vector<Rational> out;
  for (const auto& e : data.entries()) {
    if (e.r.sign() == 0) continue;
    for (std::int64_t m = 1;; ++m) {
      Rational value = Rational(e.b + m) / e.r;
      if (value > bound) break;
      out.push_back(std::move(value));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const char* to_string(Singularity s) {
  switch (s) {
    case Singularity::KLT: return "KLT";
    case Singularity::LCNotKLT: return "LC_not_KLT";
    case Singularity::NotLC: return "Not_LC";
  }
  return "?";
}

Singularity classify(const ResolutionDatum& data, const Rational& c) {
  if (c.sign() <= 0) throw InputError("coefficient must be positive");
  bool klt = true;
  for (const auto& e : data.entries()) {
    const Rational excess = c * e.r - Rational(e.b);
    if (excess > Rational(1)) return Singularity::NotLC;
    if (excess == Rational(1)) klt = false;
  }
  return klt ? Singularity::KLT : Singularity::LCNotKLT;
}

std::vector<std::int64_t> snc_multiplier_coefficients(const std::vector<Rational>& coefficients) {
  std::vector<std::int64_t> out;
  out.reserve(coefficients.size());
  for (const auto& a : coefficients) {
    if (a.sign() < 0) throw InputError("SNC coefficients must be non-negative");
    out.push_back(to_int64(a.floor()));
  }
  return out;
}

}  // namespace mulideal
