#include "crucialis/bounds.hpp"

#include <algorithm>
#include <string>

#include "crucialis/errors.hpp"

namespace crucialis {

Bounds bounds(int n, int k) {
  if (n < 1 || n > kMaxAlphabet) throw ArgumentError("alphabet size out of range: " + std::to_string(n));
  if (k < 2) throw ArgumentError("exponent must be >= 2, got " + std::to_string(k));
  const auto un = static_cast<std::uint64_t>(n);
  const auto uk = static_cast<std::uint64_t>(k);

  Bounds b;
  b.lower = un * uk - 1;
  if (n >= 5 && k >= 4) b.lower = std::max(b.lower, uk * (3 * un - 4) - 1);
  if (k == 3 && n >= 5) b.lower = std::max(b.lower, 9 * un - 13);

  // Candidates in preference order; strict improvement needed to switch.
  b.upper = family_length(Family::ZiminK, n, k);
  b.upper_family = Family::ZiminK;
  for (Family f : {Family::DoublingK, Family::DnK}) {
    if (!in_domain(f, n, k)) continue;
    const auto len = family_length(f, n, k);
    if (len < b.upper) {
      b.upper = len;
      b.upper_family = f;
    }
  }

  if (k == 2 && n >= 3) b.exact = 4 * un - 7;
  if (k == 2 && n == 2) b.exact = 3;
  if (k == 3 && n >= 5) b.exact = 9 * un - 13;
  if (k == 3 && n <= 4) b.exact = greedy_length(n);
  return b;
}

}  // namespace crucialis
