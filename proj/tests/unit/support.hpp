#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "mulideal/monomial_ideal.hpp"
#include "mulideal/rational.hpp"

namespace mulideal::testing {

inline ExponentVector ev(std::initializer_list<std::int64_t> c) { return ExponentVector(std::vector<std::int64_t>(c)); }

inline MonomialIdeal ideal(std::size_t d, std::initializer_list<std::initializer_list<std::int64_t>> gens) {
  std::vector<ExponentVector> raw;
  for (const auto& g : gens) raw.push_back(ev(g));
  return MonomialIdeal::minimalize(d, std::move(raw));
}

inline Rational q(long p, long r = 1) { return Rational(mpz_class(p), mpz_class(r)); }

inline MonomialIdeal staircase() { return ideal(2, {{4, 0}, {2, 1}, {1, 2}, {0, 5}}); }

inline MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t d, std::size_t max_gens, std::int64_t max_exp) {
  const std::size_t count = 1 + rng() % max_gens;
  std::vector<ExponentVector> raw;
  while (raw.size() < count) {
    std::vector<std::int64_t> c(d);
    bool nonzero = false;
    for (auto& x : c) {
      x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_exp + 1));
      nonzero = nonzero || x != 0;
    }
    if (nonzero) raw.emplace_back(std::move(c));
  }
  return MonomialIdeal::minimalize(d, std::move(raw));
}

/// Every exponent vector in [0, bound]^d.
inline std::vector<ExponentVector> box(std::size_t d, std::int64_t bound) {
  std::vector<ExponentVector> out;
  std::vector<std::int64_t> c(d, 0);
  while (true) {
    out.emplace_back(c);
    std::size_t i = 0;
    while (i < d && c[i] == bound) c[i++] = 0;
    if (i == d) break;
    ++c[i];
  }
  return out;
}

}  // namespace mulideal::testing
