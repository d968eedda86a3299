#pragma once

// Brute-force reference checks. Deliberately share nothing with the library:
// plain int vectors, blocks compared by sorting copies.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace naive {

using Seq = std::vector<int>;

inline bool blocks_are_anagrams(const Seq& w, std::size_t start, std::size_t b, int k) {
  Seq first(w.begin() + start, w.begin() + start + b);
  std::sort(first.begin(), first.end());
  for (int j = 1; j < k; ++j) {
    Seq other(w.begin() + start + j * b, w.begin() + start + (j + 1) * b);
    std::sort(other.begin(), other.end());
    if (other != first) return false;
  }
  return true;
}

/// (start, block) of the abelian k-th power with the smallest end, then smallest block.
inline std::optional<std::pair<std::size_t, std::size_t>> find_power(const Seq& w, int k) {
  for (std::size_t end = 1; end <= w.size(); ++end) {
    for (std::size_t b = 1; b * k <= end; ++b) {
      if (blocks_are_anagrams(w, end - b * k, b, k)) return std::make_pair(end - b * k, b);
    }
  }
  return std::nullopt;
}

inline bool is_free(const Seq& w, int k) { return !find_power(w, k); }

inline std::optional<std::size_t> suffix_power(const Seq& w, int k) {
  for (std::size_t b = 1; b * k <= w.size(); ++b) {
    if (blocks_are_anagrams(w, w.size() - b * k, b, k)) return b;
  }
  return std::nullopt;
}

inline bool is_crucial(const Seq& w, int n, int k) {
  if (!is_free(w, k)) return false;
  for (int x = 1; x <= n; ++x) {
    Seq e = w;
    e.push_back(x);
    if (!suffix_power(e, k)) return false;
  }
  return true;
}

inline bool is_maximal(const Seq& w, int n, int k) {
  if (!is_crucial(w, n, k)) return false;
  for (int x = 1; x <= n; ++x) {
    Seq e{x};
    e.insert(e.end(), w.begin(), w.end());
    bool prefix_power = false;
    for (std::size_t b = 1; b * k <= e.size() && !prefix_power; ++b) {
      prefix_power = blocks_are_anagrams(e, 0, b, k);
    }
    if (!prefix_power) return false;
  }
  return true;
}

/// Calls f on every word of length `len` over {1..n}, in lexicographic order.
template <class F>
void for_each_word(int n, std::size_t len, F&& f) {
  Seq w(len, 1);
  while (true) {
    f(w);
    std::size_t i = len;
    while (i > 0 && w[i - 1] == n) w[--i] = 1;
    if (i == 0) return;
    ++w[i - 1];
  }
}

/// Minimal crucial length by exhaustive enumeration of all words (no pruning at all).
inline std::optional<std::size_t> minimal_crucial_length(int n, int k, std::size_t max_len) {
  for (std::size_t len = 1; len <= max_len; ++len) {
    bool found = false;
    for_each_word(n, len, [&](const Seq& w) {
      if (!found && is_crucial(w, n, k)) found = true;
    });
    if (found) return len;
  }
  return std::nullopt;
}

}  // namespace naive
