#pragma once

#include <cstddef>
#include <optional>

#include "crucialis/word.hpp"

namespace crucialis {

/// k consecutive length-b blocks starting after position `start`.
struct PowerOccurrence {
  std::size_t start = 0;
  std::size_t block_length = 0;
  int exponent = 0;

  std::size_t end() const { return start + block_length * static_cast<std::size_t>(exponent); }
  friend bool operator==(const PowerOccurrence&, const PowerOccurrence&) = default;
};

/// Single-letter blocks ("trivial powers") are reported unless filtered out.
enum class PowerFilter { Any, NonTrivial };

/// Abelian k-th power with the smallest end position, ties broken by the
/// smallest block length. Throws ArgumentError if k < 2.
std::optional<PowerOccurrence> find_abelian_power(const Word& w, int k,
                                                  PowerFilter filter = PowerFilter::Any);

bool is_abelian_power_free(const Word& w, int k);

/// Smallest b such that the suffix of length k*b is an abelian k-th power.
std::optional<std::size_t> suffix_abelian_power(const Word& w, int k);

/// Same contract as find_abelian_power, but blocks must be equal as sequences.
std::optional<PowerOccurrence> find_exact_power(const Word& w, int k,
                                                PowerFilter filter = PowerFilter::Any);

// Table-level primitives shared with the cruciality checks and the search.

/// Is (end - k*b, end] an abelian k-th power with block length b? Requires k*b <= end.
inline bool is_power_ending_at(const ParikhTable& t, std::size_t end, std::size_t b, int k) {
  const std::size_t s = end - b * static_cast<std::size_t>(k);
  for (int j = 1; j < k; ++j) {
    if (!t.same_content(s, s + j * b, b)) return false;
  }
  return true;
}

/// Smallest b with (end - k*b, end] an abelian k-th power, considering b >= min_block.
std::optional<std::size_t> suffix_power_at(const ParikhTable& t, std::size_t end, int k,
                                           std::size_t min_block = 1);

/// Is the length-k*b suffix of (prefix of length `end`)·x an abelian k-th power?
/// Requires k*b <= end + 1.
bool is_power_with_appended(const ParikhTable& t, std::size_t end, Letter x, std::size_t b,
                            int k);

/// Smallest b for which the suffix of (prefix of length `end`)·x is an abelian k-th power.
std::optional<std::size_t> suffix_power_with_appended(const ParikhTable& t, std::size_t end,
                                                      Letter x, int k);

void require_exponent(int k);

}  // namespace crucialis
