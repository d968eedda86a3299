#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crucialis {

/// A letter of the alphabet {1, ..., n}. Zero is never a valid letter.
using Letter = std::uint8_t;

inline constexpr int kMaxAlphabet = 64;

/// Finite word over {1..alphabet_size}. Letters are 1-based at every interface.
///
/// The alphabet size travels with the word: whether a word is crucial depends
/// on n even when some letters have not appeared yet.
class Word {
 public:
  Word() = default;
  Word(std::vector<Letter> letters, int alphabet_size);

  /// Alphabet size inferred as the largest letter present (1 for the empty word).
  static Word from_letters(std::vector<Letter> letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int alphabet_size() const { return alphabet_size_; }

  /// 0-based index, 1-based letter value.
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }

  /// Letters at 0-based indices [start, end), i.e. the half-open factor (start, end].
  Word factor(std::size_t start, std::size_t end) const;
  Word reversed() const;
  Word appended(Letter x) const;
  Word with_alphabet(int alphabet_size) const;

  /// Concatenation; the result uses the larger alphabet.
  friend Word operator+(const Word& a, const Word& b);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<Letter> letters_;
  int alphabet_size_ = 1;
};

struct ParikhVector {
  std::vector<std::uint32_t> counts;

  std::uint32_t operator[](Letter c) const { return counts[c - 1]; }
  std::uint64_t total() const;
  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
  friend ParikhVector operator+(const ParikhVector& a, const ParikhVector& b);
};

/// Prefix letter counts: row i holds the Parikh vector of the length-i prefix.
///
/// Supports push_back/pop_back so a depth-first search can keep one table
/// for the whole branch it is exploring.
class ParikhTable {
 public:
  explicit ParikhTable(int alphabet_size);
  explicit ParikhTable(const Word& w);

  int alphabet_size() const { return n_; }
  std::size_t length() const { return rows_.size() / n_ - 1; }

  void push_back(Letter x);
  void pop_back();
  void reserve(std::size_t length) { rows_.reserve((length + 1) * n_); }

  std::span<const std::uint32_t> row(std::size_t i) const {
    return {rows_.data() + i * n_, static_cast<std::size_t>(n_)};
  }

  /// Counts over (start, end]. Throws RangeError unless start <= end <= length().
  ParikhVector factor(std::size_t start, std::size_t end) const;

  /// True iff (a, a+len] and (b, b+len] have equal Parikh vectors. Unchecked.
  bool same_content(std::size_t a, std::size_t b, std::size_t len) const {
    const std::uint32_t* ra = rows_.data() + a * n_;
    const std::uint32_t* rb = rows_.data() + b * n_;
    const std::uint32_t* ea = ra + len * n_;
    const std::uint32_t* eb = rb + len * n_;
    for (int c = 0; c < n_; ++c) {
      if (ea[c] - ra[c] != eb[c] - rb[c]) return false;
    }
    return true;
  }

 private:
  int n_;
  std::vector<std::uint32_t> rows_;
};

/// Letter counts of the half-open factor (start, end] of w.
ParikhVector parikh(const Word& w, std::size_t start, std::size_t end);
ParikhVector parikh(const ParikhTable& table, std::size_t start, std::size_t end);

enum class WordFormat { Compact, Spaced };

/// Compact: contiguous digits 1-9. Spaced: whitespace-separated decimal integers.
/// Surrounding whitespace is ignored. `alphabet_size`, when given, must cover
/// every letter present.
Word parse_word(std::string_view text, WordFormat format,
                std::optional<int> alphabet_size = std::nullopt);

std::string render_word(const Word& w, WordFormat format);

/// One word per line; blank lines and lines starting with '#' are skipped.
std::vector<Word> read_corpus(std::istream& in, WordFormat format);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace crucialis
