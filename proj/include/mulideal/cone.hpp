#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace mulideal {

using IntegerVector = std::vector<mpz_class>;

/// Extreme rays of the pointed cone { y in R^n : <row, y> >= 0 for every row },
/// computed by the double-description method over exact integers.
///
/// Rays come back primitive (gcd of entries 1) in an unspecified order.
/// Throws InputError if the rows do not span R^n (the cone has a lineality space).
std::vector<IntegerVector> extreme_rays(const std::vector<IntegerVector>& rows, std::size_t n);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntegerVector primitive(IntegerVector v);

/// Rank over Q.
std::size_t rank(std::vector<std::vector<mpq_class>> rows);

}  // namespace mulideal
