#include "crucialis/abelian_power.hpp"

#include <algorithm>
#include <string>

#include "crucialis/errors.hpp"

namespace crucialis {

void require_exponent(int k) {
  if (k < 2) throw ArgumentError("exponent must be >= 2, got " + std::to_string(k));
}

std::optional<std::size_t> suffix_power_at(const ParikhTable& t, std::size_t end, int k,
                                           std::size_t min_block) {
  const auto uk = static_cast<std::size_t>(k);
  for (std::size_t b = std::max<std::size_t>(min_block, 1); b * uk <= end; ++b) {
    if (is_power_with_appended(t, end, 0, b, k)) return b;
  }
  return std::nullopt;
}

bool is_power_with_appended(const ParikhTable& t, std::size_t end, Letter x, std::size_t b,
                            int k) {
  // x == 0 means nothing is appended.
  if (x == 0) return is_power_ending_at(t, end, b, k);
  const std::size_t total = end + 1;
  const std::size_t s = total - b * static_cast<std::size_t>(k);
  // Last block is (s + (k-1)b, end] plus x; compare it with the first block.
  const std::size_t last = s + (k - 1) * b;
  const auto lo = t.row(last);
  const auto hi = t.row(end);
  const auto f0 = t.row(s);
  const auto f1 = t.row(s + b);
  const int n = t.alphabet_size();
  for (int c = 0; c < n; ++c) {
    const std::uint32_t tail = hi[c] - lo[c] + (c == x - 1 ? 1u : 0u);
    if (tail != f1[c] - f0[c]) return false;
  }
  for (int j = 1; j + 1 < k; ++j) {
    if (!t.same_content(s, s + j * b, b)) return false;
  }
  return true;
}

std::optional<std::size_t> suffix_power_with_appended(const ParikhTable& t, std::size_t end,
                                                      Letter x, int k) {
  const auto uk = static_cast<std::size_t>(k);
  for (std::size_t b = 1; b * uk <= end + 1; ++b) {
    if (is_power_with_appended(t, end, x, b, k)) return b;
  }
  return std::nullopt;
}

std::optional<PowerOccurrence> find_abelian_power(const Word& w, int k, PowerFilter filter) {
  require_exponent(k);
  const ParikhTable t(w);
  const std::size_t min_block = filter == PowerFilter::NonTrivial ? 2 : 1;
  const auto uk = static_cast<std::size_t>(k);
  for (std::size_t end = uk; end <= w.size(); ++end) {
    if (auto b = suffix_power_at(t, end, k, min_block)) {
      return PowerOccurrence{end - *b * uk, *b, k};
    }
  }
  return std::nullopt;
}

bool is_abelian_power_free(const Word& w, int k) { return !find_abelian_power(w, k); }

std::optional<std::size_t> suffix_abelian_power(const Word& w, int k) {
  require_exponent(k);
  const ParikhTable t(w);
  return suffix_power_at(t, w.size(), k);
}

std::optional<PowerOccurrence> find_exact_power(const Word& w, int k, PowerFilter filter) {
  require_exponent(k);
  const auto letters = w.letters();
  const std::size_t min_block = filter == PowerFilter::NonTrivial ? 2 : 1;
  const auto uk = static_cast<std::size_t>(k);
  for (std::size_t end = uk; end <= w.size(); ++end) {
    for (std::size_t b = min_block; b * uk <= end; ++b) {
      const std::size_t s = end - b * uk;
      bool ok = true;
      for (std::size_t j = 1; j < uk && ok; ++j) {
        ok = std::equal(letters.begin() + s, letters.begin() + s + b,
                        letters.begin() + s + j * b);
      }
      if (ok) return PowerOccurrence{s, b, k};
    }
  }
  return std::nullopt;
}

}  // namespace crucialis
