#pragma once

#include <cstddef>

#include "exotica/ring.hpp"

namespace exotica {

/// Node cap for the ball in truncated_regular. Larger than the generic
/// enumeration cap: the F_2 ball of radius 12 alone has 1,062,881 words.
inline constexpr std::size_t kTruncatedBallCap = 4'194'304;

struct TruncatedRegularResult {
  double lower_bound = 0.0;  // ||A v|| for the final unit vector v
  int radius = 0;
  std::size_t ball_size = 0;
  int iterations = 0;
  bool converged = false;
};

/// Lower bound for ||lambda(x)|| on F_d: power iteration for A*A started at
/// delta_e, where A is the compression of lambda(x) to l^2 of the ball B_R.
/// Every iterate yields a valid bound ||A v|| <= ||A|| <= ||lambda(x)||.
/// Stops when successive estimates differ by < 1e-10, or after 10^4 steps.
TruncatedRegularResult truncated_regular(const GroupRingElement& x, int radius,
                                         std::size_t cap = kTruncatedBallCap);

inline double truncated_regular_lower_bound(const GroupRingElement& x, int radius,
                                            std::size_t cap = kTruncatedBallCap) {
  return truncated_regular(x, radius, cap).lower_bound;
}

}  // namespace exotica
