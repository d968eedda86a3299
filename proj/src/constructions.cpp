#include "crucialis/constructions.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "crucialis/cruciality.hpp"
#include "crucialis/errors.hpp"

namespace crucialis {
namespace {

using Letters = std::vector<Letter>;
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = sat_mul(r, base);
  return r;
}

std::uint64_t minus_one(std::uint64_t v) { return v == kSaturated ? v : v - 1; }

std::string describe(Family f, int n, int k) {
  return std::string(family_name(f)) + " (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
         ")";
}

void require_domain(Family f, int n, int k) {
  if (!in_domain(f, n, k)) throw DomainError(describe(f, n, k) + " is outside the family's domain");
}

void require_capacity(Family f, int n, int k, const ConstructionLimits& limits) {
  const auto len = family_length(f, n, k);
  if (len > limits.max_length) {
    throw CapacityError(describe(f, n, k) + " has length " +
                        (len == kSaturated ? std::string("> 2^64") : std::to_string(len)) +
                        ", above the cap of " + std::to_string(limits.max_length));
  }
}

Word finish(Letters letters, int n, [[maybe_unused]] int k) {
  Word w(std::move(letters), n);
#ifndef NDEBUG
  if (w.size() <= 4096 && !is_crucial(w, k)) {
    throw StateError("construction self-check failed: result is not crucial");
  }
#endif
  return w;
}

Word join(const std::vector<Word>& blocks, int n) {
  Letters v;
  for (const auto& b : blocks) v.insert(v.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(v), n);
}

void append_run(Letters& v, int from, int to) {
  const int step = from <= to ? 1 : -1;
  for (int x = from;; x += step) {
    v.push_back(static_cast<Letter>(x));
    if (x == to) break;
  }
}

/// Inserts a copy of the rightmost occurrence of each letter in `which`,
/// immediately after it. Absent letters are left alone.
Letters duplicate_rightmost(Letters block, const Letters& which) {
  for (Letter x : which) {
    auto it = std::find(block.rbegin(), block.rend(), x);
    if (it == block.rend()) continue;
    block.insert(it.base(), x);
  }
  return block;
}

std::vector<Letters> w3_blocks(int n) {
  Letters b1, b2, b3;
  for (int i = n - 1; i >= 1; --i) {
    b1.push_back(static_cast<Letter>(i));
    b1.push_back(static_cast<Letter>(i + 1));
    b1.push_back(static_cast<Letter>(i + 1));
  }
  b2.push_back(static_cast<Letter>(n));
  for (int x = n - 1; x >= 2; --x) b2.insert(b2.end(), 2, static_cast<Letter>(x));
  b2.push_back(1);
  append_run(b2, n, 2);
  append_run(b3, n - 1, 1);
  for (int x = 2; x <= n - 1; ++x) b3.insert(b3.end(), 2, static_cast<Letter>(x));
  b3.push_back(static_cast<Letter>(n));
  return {b1, b2, b3};
}

std::vector<Letters> d2_blocks(int n) {
  Letters b1, b2;
  for (int i = n - 1; i >= 2; --i) {
    b1.push_back(static_cast<Letter>(i));
    b1.push_back(static_cast<Letter>(i + 1));
  }
  b1.push_back(1);
  append_run(b2, n - 1, 2);
  if (n - 1 >= 3) append_run(b2, 3, n - 1);
  b2.push_back(1);
  return {b1, b2};
}

std::vector<Word> to_words(const std::vector<Letters>& blocks, int n) {
  std::vector<Word> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.emplace_back(b, n);
  return out;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Zimin: return "zimin";
    case Family::ZiminK: return "zimink";
    case Family::DoublingCube: return "doubling";
    case Family::DoublingK: return "doublingk";
    case Family::Wn: return "wn";
    case Family::WnK: return "wnk";
    case Family::Dn: return "dn";
    case Family::En: return "en";
    case Family::DnK: return "dnk";
    case Family::GreedyOptimalSmall: return "smallopt";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::optional<int> fixed_exponent(Family f) {
  switch (f) {
    case Family::Zimin:
    case Family::Dn: return 2;
    case Family::DoublingCube:
    case Family::Wn:
    case Family::En:
    case Family::GreedyOptimalSmall: return 3;
    default: return std::nullopt;
  }
}

bool in_domain(Family f, int n, int k) {
  if (n < 1 || n > kMaxAlphabet || k < 2) return false;
  if (auto fixed = fixed_exponent(f); fixed && *fixed != k) return false;
  switch (f) {
    case Family::Zimin:
    case Family::ZiminK:
    case Family::DoublingCube: return true;
    case Family::DoublingK: return k >= 3;
    case Family::Wn:
    case Family::WnK: return n >= 4 && k >= 3;
    case Family::Dn:
    case Family::En:
    case Family::DnK: return n >= 4;
    case Family::GreedyOptimalSmall: return n <= 4;
  }
  return false;
}

std::uint64_t family_length(Family f, int n, int k) {
  require_domain(f, n, k);
  const auto un = static_cast<std::uint64_t>(n);
  const auto uk = static_cast<std::uint64_t>(k);
  switch (f) {
    case Family::Zimin:
    case Family::ZiminK: return minus_one(sat_pow(uk, n));
    case Family::DoublingCube:
    case Family::DoublingK: return minus_one(sat_mul(uk, sat_pow(uk - 1, n - 1)));
    case Family::Wn:
    case Family::WnK: return uk * uk * (un - 1) - 1;
    case Family::Dn:
    case Family::En:
    case Family::DnK: return uk * uk * (un - 1) - uk - 1;
    case Family::GreedyOptimalSmall: return greedy_length(n);
  }
  return 0;
}

Word construct(Family f, int n, int k, const ConstructionLimits& limits) {
  require_domain(f, n, k);
  switch (f) {
    case Family::Zimin:
    case Family::ZiminK: return construct_zimin(n, k, limits);
    case Family::DoublingCube:
    case Family::DoublingK: return construct_doubling_k(n, k, limits);
    case Family::Wn:
    case Family::WnK: return construct_W(n, k);
    case Family::Dn:
    case Family::DnK: return construct_D(n, k);
    case Family::En: return construct_E(n);
    case Family::GreedyOptimalSmall: return optimal_small_word(n);
  }
  throw DomainError("unknown family");
}

Word construct_zimin(int n, int k, const ConstructionLimits& limits) {
  require_domain(Family::ZiminK, n, k);
  require_capacity(Family::ZiminK, n, k, limits);
  Letters x(k - 1, 1);
  for (int m = 2; m <= n; ++m) {
    Letters next;
    next.reserve(x.size() * k + k - 1);
    for (int r = 0; r < k - 1; ++r) {
      next.insert(next.end(), x.begin(), x.end());
      next.push_back(static_cast<Letter>(m));
    }
    next.insert(next.end(), x.begin(), x.end());
    x = std::move(next);
  }
  return finish(std::move(x), n, k);
}

Word construct_doubling_cube(int n, const ConstructionLimits& limits) {
  return construct_doubling_k(n, 3, limits);
}

Word construct_doubling_k(int n, int k, const ConstructionLimits& limits) {
  require_domain(Family::DoublingK, n, k);
  require_capacity(Family::DoublingK, n, k, limits);
  // Each letter y becomes (y+1) 1^{k-2}; the result is padded with 1^{k-3} on
  // the left and a single 1 on the right.
  Letters x(k - 1, 1);
  for (int m = 2; m <= n; ++m) {
    Letters next(k - 3, 1);
    next.reserve(x.size() * (k - 1) + k - 2);
    for (Letter y : x) {
      next.push_back(static_cast<Letter>(y + 1));
      next.insert(next.end(), k - 2, 1);
    }
    next.push_back(1);
    x = std::move(next);
  }
  return finish(std::move(x), n, k);
}

std::vector<Word> construct_W_blocks(int n, int k) {
  require_domain(Family::WnK, n, k);
  require_capacity(Family::WnK, n, k, ConstructionLimits{});
  auto blocks = w3_blocks(n);
  Letters all;
  for (int x = 2; x <= n; ++x) all.push_back(static_cast<Letter>(x));
  Letters down;
  append_run(down, n, 2);
  for (int e = 4; e <= k; ++e) {
    std::vector<Letters> next;
    next.reserve(blocks.size() + 1);
    next.push_back(duplicate_rightmost(blocks[0], all));
    Letters second = blocks[0];
    second.insert(second.end(), down.begin(), down.end());
    next.push_back(std::move(second));
    for (std::size_t i = 1; i < blocks.size(); ++i) {
      next.push_back(duplicate_rightmost(blocks[i], all));
    }
    blocks = std::move(next);
  }
  return to_words(blocks, n);
}

Word construct_W(int n, int k) {
  auto blocks = construct_W_blocks(n, k);
  const Word w = join(blocks, n);
  return finish(Letters(w.letters().begin(), w.letters().end()), n, k);
}

std::vector<Word> construct_D_blocks(int n, int k) {
  require_domain(Family::DnK, n, k);
  require_capacity(Family::DnK, n, k, ConstructionLimits{});
  auto blocks = d2_blocks(n);
  Letters inner;  // 1, 3, ..., n-1
  inner.push_back(1);
  for (int x = 3; x <= n - 1; ++x) inner.push_back(static_cast<Letter>(x));
  Letters with_n = inner;
  with_n.push_back(static_cast<Letter>(n));
  Letters tail = with_n;  // 1 3 4 ... n, appended to the copied first block
  for (int e = 3; e <= k; ++e) {
    std::vector<Letters> next;
    next.reserve(blocks.size() + 1);
    next.push_back(duplicate_rightmost(blocks[0], with_n));
    Letters second = blocks[0];
    second.insert(second.end(), tail.begin(), tail.end());
    next.push_back(std::move(second));
    for (std::size_t i = 1; i + 1 < blocks.size(); ++i) {
      next.push_back(duplicate_rightmost(blocks[i], with_n));
    }
    // The last block is Omega' (its final n is implicit): it gains one n,
    // placed right before the leftmost 1.
    Letters last = duplicate_rightmost(blocks.back(), inner);
    last.insert(std::find(last.begin(), last.end(), Letter{1}), static_cast<Letter>(n));
    next.push_back(std::move(last));
    blocks = std::move(next);
  }
  return to_words(blocks, n);
}

Word construct_D(int n, int k) {
  const Word w = join(construct_D_blocks(n, k), n);
  return finish(Letters(w.letters().begin(), w.letters().end()), n, k);
}

std::vector<Word> construct_E_blocks(int n) {
  require_domain(Family::En, n, 3);
  Letters b1, b2, b3;
  for (int i = n - 1; i >= 2; --i) {
    b1.push_back(static_cast<Letter>(i));
    b1.push_back(static_cast<Letter>(i + 1));
    b1.push_back(static_cast<Letter>(i + 1));
  }
  b1.insert(b1.end(), {1, 1});
  for (int i = n - 1; i >= 2; --i) {
    b2.push_back(static_cast<Letter>(i));
    b2.push_back(static_cast<Letter>(i + 1));
  }
  b2.insert(b2.end(), {1, 1});
  append_run(b2, 3, n);
  append_run(b3, n - 1, 2);
  for (int x = 3; x <= n - 1; ++x) b3.insert(b3.end(), 2, static_cast<Letter>(x));
  b3.push_back(static_cast<Letter>(n));
  b3.insert(b3.end(), {1, 1});
  return to_words({b1, b2, b3}, n);
}

Word construct_E(int n) {
  const Word w = join(construct_E_blocks(n), n);
  return finish(Letters(w.letters().begin(), w.letters().end()), n, 3);
}

Word optimal_small_word(int n) {
  static constexpr std::array<std::string_view, 4> kWords = {"11", "21211", "11231321211",
                                                             "42131214231211321211"};
  if (n < 1 || n > 4) {
    throw DomainError("stored optimal words exist for 1 <= n <= 4, got n=" + std::to_string(n));
  }
  return parse_word(kWords[n - 1], WordFormat::Compact, n);
}

std::uint64_t greedy_length(int n) {
  if (n < 1) throw ArgumentError("greedy_length needs n >= 1");
  std::uint64_t total = 0;
  for (int j = 0; j <= (n - 1) / 2; ++j) total += 2 * sat_pow(3, j);
  for (int j = 1; j <= n / 2; ++j) total += sat_pow(3, j);
  return total;
}

}  // namespace crucialis
