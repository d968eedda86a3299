#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "crucialis/word.hpp"

namespace crucialis {

/// Abelian-k-power-free, and every one-letter right extension ends with an
/// abelian k-th power. Throws ArgumentError for the empty word or k < 2.
bool is_crucial(const Word& w, int k);

/// Crucial on the right and on the left: x·w starts with an abelian k-th power
/// for every letter x as well.
bool is_maximal(const Word& w, int k);

/// For each letter x of the alphabet, the smallest b such that w·x ends with an
/// abelian k-th power of block length b; 0 when there is none.
std::vector<std::size_t> extension_blocks(const Word& w, int k);

/// The nested suffix chain of a crucial word X.
///
/// Delta_i is the shortest suffix of X with Delta_i·i an abelian k-th power,
/// so |Delta_i| = k*b_i - 1. Under a proper naming |Delta_1| < ... < |Delta_n|
/// and Delta_i = Y_i Delta_{i-1}. Blocks Omega_{i,1..k} split Delta_i·i.
class CrucialDecomposition {
 public:
  CrucialDecomposition(Word word, int exponent, std::vector<std::size_t> block_lengths);

  const Word& word() const { return word_; }
  int exponent() const { return k_; }
  int alphabet_size() const { return word_.alphabet_size(); }

  std::size_t block_length(Letter i) const { return blocks_[i - 1]; }
  std::size_t delta_length(Letter i) const { return blocks_[i - 1] * k_ - 1; }

  Word delta(Letter i) const;
  /// Y_i for 2 <= i <= n.
  Word gap(Letter i) const;
  /// Omega_{i,j} for 1 <= j <= k; the last block carries the appended letter i.
  Word block(Letter i, int j) const;
  /// Part of X to the left of Delta_n; empty when Delta_n = X.
  Word head() const;
  /// head · Y_n · ... · Y_2 · Delta_1.
  Word recompose() const;

 private:
  Word word_;
  int k_;
  std::vector<std::size_t> blocks_;
};

/// Throws StateError if w is not crucial, NamingError if the chain is not
/// strictly nested under the current letter names.
CrucialDecomposition decompose(const Word& w, int k);

struct Normalized {
  Word word;
  /// renaming[old - 1] is the new name of letter `old`.
  std::vector<Letter> renaming;
};

/// Renames letters so that |Delta_1| < ... < |Delta_n|. Throws StateError if
/// w is not crucial; NamingError if two letters share a Delta length.
Normalized normalize(const Word& w, int k);

/// Applies renaming[old - 1] to every letter.
Word rename(const Word& w, const std::vector<Letter>& renaming);

struct OccurrenceProfile {
  /// Occurrences of letter n.
  std::uint32_t a0 = 0;
  /// Occurrences of letters 1..n-1, sorted non-decreasingly.
  std::vector<std::uint32_t> rest;
  friend bool operator==(const OccurrenceProfile&, const OccurrenceProfile&) = default;
};

OccurrenceProfile occurrence_profile(const Word& w);

enum class ViolationTag { Divisibility, Pair33, Triple666, Triple366, Quint23699 };

/// Stable ASCII name: DIVISIBILITY, PAIR_3_3, TRIPLE_6_6_6, TRIPLE_3_6_6, QUINT_2_3_6_9_9.
std::string_view to_string(ViolationTag tag);

struct ProfileCheck {
  std::vector<ViolationTag> violations;
  /// The four forbidden configurations are only known for cubes; for other
  /// exponents only the divisibility constraint is evaluated.
  bool configurations_checked = true;

  bool ok() const { return violations.empty(); }
};

ProfileCheck profile_violations(const OccurrenceProfile& p, int k = 3);

}  // namespace crucialis
