#pragma once

#include <cstdint>
#include <optional>

#include "crucialis/constructions.hpp"

namespace crucialis {

/// Known bracket on the minimal crucial length l_k(n).
struct Bounds {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::optional<std::uint64_t> exact;
  /// Construction whose length equals `upper`.
  Family upper_family = Family::ZiminK;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// lower: max of nk-1, k(3n-4)-1 (n >= 5, k >= 4) and 9n-13 (k = 3, n >= 5).
/// upper: min of k^n-1, k(k-1)^(n-1)-1 (k >= 3) and k^2(n-1)-k-1 (n >= 4).
/// exact: 4n-7 (k = 2, n >= 3), 3 (k = 2, n = 2), 9n-13 (k = 3, n >= 5),
/// 2/5/11/20 (k = 3, n <= 4); empty elsewhere.
Bounds bounds(int n, int k);

}  // namespace crucialis
