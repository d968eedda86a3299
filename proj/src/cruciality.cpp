#include "crucialis/cruciality.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "crucialis/abelian_power.hpp"
#include "crucialis/errors.hpp"

namespace crucialis {
namespace {

void require_nonempty(const Word& w) {
  if (w.empty()) throw ArgumentError("the empty word is never a crucial-word candidate");
}

bool is_free_table(const ParikhTable& t, int k) {
  for (std::size_t end = static_cast<std::size_t>(k); end <= t.length(); ++end) {
    if (suffix_power_at(t, end, k)) return false;
  }
  return true;
}

bool every_extension_has_power(const ParikhTable& t, int k) {
  for (int x = 1; x <= t.alphabet_size(); ++x) {
    if (!suffix_power_with_appended(t, t.length(), static_cast<Letter>(x), k)) return false;
  }
  return true;
}

}  // namespace

bool is_crucial(const Word& w, int k) {
  require_exponent(k);
  require_nonempty(w);
  const ParikhTable t(w);
  return every_extension_has_power(t, k) && is_free_table(t, k);
}

bool is_maximal(const Word& w, int k) {
  require_exponent(k);
  require_nonempty(w);
  const ParikhTable t(w);
  if (!every_extension_has_power(t, k) || !is_free_table(t, k)) return false;
  // x·w starts with a power iff reverse(w)·x ends with one.
  return every_extension_has_power(ParikhTable(w.reversed()), k);
}

std::vector<std::size_t> extension_blocks(const Word& w, int k) {
  require_exponent(k);
  const ParikhTable t(w);
  std::vector<std::size_t> out(w.alphabet_size(), 0);
  for (int x = 1; x <= w.alphabet_size(); ++x) {
    if (auto b = suffix_power_with_appended(t, w.size(), static_cast<Letter>(x), k)) out[x - 1] = *b;
  }
  return out;
}

CrucialDecomposition::CrucialDecomposition(Word word, int exponent,
                                           std::vector<std::size_t> block_lengths)
    : word_(std::move(word)), k_(exponent), blocks_(std::move(block_lengths)) {}

Word CrucialDecomposition::delta(Letter i) const {
  return word_.factor(word_.size() - delta_length(i), word_.size());
}

Word CrucialDecomposition::gap(Letter i) const {
  if (i < 2 || i > alphabet_size()) throw ArgumentError("gap Y_i is defined for 2 <= i <= n");
  const std::size_t L = word_.size();
  return word_.factor(L - delta_length(i), L - delta_length(i - 1));
}

Word CrucialDecomposition::block(Letter i, int j) const {
  if (j < 1 || j > k_) throw ArgumentError("block index must be in 1..k");
  const Word ext = delta(i).appended(i);
  const std::size_t b = block_length(i);
  return ext.factor((j - 1) * b, j * b);
}

Word CrucialDecomposition::head() const {
  return word_.factor(0, word_.size() - delta_length(static_cast<Letter>(alphabet_size())));
}

Word CrucialDecomposition::recompose() const {
  Word out = head();
  for (int i = alphabet_size(); i >= 2; --i) out = out + gap(static_cast<Letter>(i));
  return out + delta(1);
}

CrucialDecomposition decompose(const Word& w, int k) {
  if (!is_crucial(w, k)) throw StateError("decompose: word is not crucial");
  auto blocks = extension_blocks(w, k);
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    if (blocks[i] <= blocks[i - 1]) {
      throw NamingError("Delta chain not strictly nested between letters " + std::to_string(i) +
                            " and " + std::to_string(i + 1) + "; normalize first",
                        static_cast<int>(i), static_cast<int>(i + 1));
    }
  }
  return CrucialDecomposition(w, k, std::move(blocks));
}

Word rename(const Word& w, const std::vector<Letter>& renaming) {
  std::vector<Letter> v(w.letters().begin(), w.letters().end());
  for (auto& x : v) x = renaming[x - 1];
  return Word(std::move(v), w.alphabet_size());
}

Normalized normalize(const Word& w, int k) {
  if (!is_crucial(w, k)) throw StateError("normalize: word is not crucial");
  const auto blocks = extension_blocks(w, k);
  const int n = w.alphabet_size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return blocks[a] < blocks[b]; });
  for (int r = 1; r < n; ++r) {
    if (blocks[order[r]] == blocks[order[r - 1]]) {
      throw NamingError("letters " + std::to_string(order[r - 1] + 1) + " and " +
                            std::to_string(order[r] + 1) + " have Delta suffixes of equal length",
                        order[r - 1] + 1, order[r] + 1);
    }
  }
  std::vector<Letter> renaming(n);
  for (int r = 0; r < n; ++r) renaming[order[r]] = static_cast<Letter>(r + 1);
  return {rename(w, renaming), std::move(renaming)};
}

OccurrenceProfile occurrence_profile(const Word& w) {
  const auto counts = parikh(w, 0, w.size()).counts;
  OccurrenceProfile p;
  p.a0 = counts.back();
  p.rest.assign(counts.begin(), counts.end() - 1);
  std::sort(p.rest.begin(), p.rest.end());
  return p;
}

std::string_view to_string(ViolationTag tag) {
  switch (tag) {
    case ViolationTag::Divisibility: return "DIVISIBILITY";
    case ViolationTag::Pair33: return "PAIR_3_3";
    case ViolationTag::Triple666: return "TRIPLE_6_6_6";
    case ViolationTag::Triple366: return "TRIPLE_3_6_6";
    case ViolationTag::Quint23699: return "QUINT_2_3_6_9_9";
  }
  return "UNKNOWN";
}

ProfileCheck profile_violations(const OccurrenceProfile& p, int k) {
  require_exponent(k);
  const auto uk = static_cast<std::uint32_t>(k);
  ProfileCheck out;
  const bool divisible = p.a0 % uk == uk - 1 &&
                         std::all_of(p.rest.begin(), p.rest.end(),
                                     [uk](std::uint32_t a) { return a % uk == 0; });
  if (!divisible) out.violations.push_back(ViolationTag::Divisibility);
  if (k != 3) {
    out.configurations_checked = false;
    return out;
  }
  const auto threes = std::count(p.rest.begin(), p.rest.end(), 3u);
  const auto sixes = std::count(p.rest.begin(), p.rest.end(), 6u);
  if (threes >= 2) out.violations.push_back(ViolationTag::Pair33);
  if (sixes >= 3) out.violations.push_back(ViolationTag::Triple666);
  if (threes >= 1 && sixes >= 2) out.violations.push_back(ViolationTag::Triple366);
  if (p.a0 == 2 && p.rest.size() >= 4 && p.rest[0] == 3 && p.rest[1] == 6 && p.rest[2] == 9 &&
      p.rest[3] == 9) {
    out.violations.push_back(ViolationTag::Quint23699);
  }
  return out;
}

}  // namespace crucialis
