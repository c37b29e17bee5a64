#pragma once

#include <cstddef>
#include <cstdint>

namespace mulideal {

/// Size guards for the exponential parts of the computation.
struct Limits {
  /// Largest ambient dimension accepted by polyhedron construction and lattice scans.
  std::size_t dimension_cap = 8;
  /// Largest exponent m*c allowed when a mixed combination is cleared to a product ideal.
  std::int64_t exponent_bound = 64;

  /// Defaults, with MI_DIM_CAP overriding the dimension cap.
  static Limits from_environment();
};

/// Process-wide limits, read from the environment once.
const Limits& default_limits();

}  // namespace mulideal
