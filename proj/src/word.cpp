#include "crucialis/word.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>

#include "crucialis/errors.hpp"

namespace crucialis {
namespace {

void check_alphabet(int n) {
  if (n < 1 || n > kMaxAlphabet) {
    throw ArgumentError("alphabet size must be in [1, " + std::to_string(kMaxAlphabet) +
                        "], got " + std::to_string(n));
  }
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

}  // namespace

Word::Word(std::vector<Letter> letters, int alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
  check_alphabet(alphabet_size);
  for (Letter x : letters_) {
    if (x < 1 || x > alphabet_size) {
      throw ArgumentError("letter " + std::to_string(x) + " outside alphabet {1.." +
                          std::to_string(alphabet_size) + "}");
    }
  }
}

Word Word::from_letters(std::vector<Letter> letters) {
  int n = 1;
  for (Letter x : letters) n = std::max<int>(n, x);
  return Word(std::move(letters), n);
}

Word Word::factor(std::size_t start, std::size_t end) const {
  if (start > end || end > size()) {
    throw RangeError("factor (" + std::to_string(start) + ", " + std::to_string(end) +
                     "] outside word of length " + std::to_string(size()));
  }
  return Word(std::vector<Letter>(letters_.begin() + start, letters_.begin() + end),
              alphabet_size_);
}

Word Word::reversed() const {
  return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend()), alphabet_size_);
}

Word Word::appended(Letter x) const {
  std::vector<Letter> v = letters_;
  v.push_back(x);
  return Word(std::move(v), alphabet_size_);
}

Word Word::with_alphabet(int alphabet_size) const { return Word(letters_, alphabet_size); }

Word operator+(const Word& a, const Word& b) {
  std::vector<Letter> v = a.letters_;
  v.insert(v.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(v), std::max(a.alphabet_size_, b.alphabet_size_));
}

std::uint64_t ParikhVector::total() const {
  std::uint64_t s = 0;
  for (auto c : counts) s += c;
  return s;
}

ParikhVector operator+(const ParikhVector& a, const ParikhVector& b) {
  ParikhVector r = a;
  r.counts.resize(std::max(a.counts.size(), b.counts.size()), 0);
  for (std::size_t i = 0; i < b.counts.size(); ++i) r.counts[i] += b.counts[i];
  return r;
}

ParikhTable::ParikhTable(int alphabet_size) : n_(alphabet_size), rows_(alphabet_size, 0) {
  check_alphabet(alphabet_size);
}

ParikhTable::ParikhTable(const Word& w) : ParikhTable(w.alphabet_size()) {
  reserve(w.size());
  for (Letter x : w.letters()) push_back(x);
}

void ParikhTable::push_back(Letter x) {
  const std::size_t base = rows_.size() - n_;
  rows_.resize(rows_.size() + n_);
  std::copy_n(rows_.begin() + base, n_, rows_.begin() + base + n_);
  ++rows_[base + n_ + (x - 1)];
}

void ParikhTable::pop_back() {
  if (length() == 0) throw RangeError("pop_back on an empty ParikhTable");
  rows_.resize(rows_.size() - n_);
}

ParikhVector ParikhTable::factor(std::size_t start, std::size_t end) const {
  if (start > end || end > length()) {
    throw RangeError("factor (" + std::to_string(start) + ", " + std::to_string(end) +
                     "] outside prefix table of length " + std::to_string(length()));
  }
  ParikhVector p;
  p.counts.resize(n_);
  auto hi = row(end);
  auto lo = row(start);
  for (int c = 0; c < n_; ++c) p.counts[c] = hi[c] - lo[c];
  return p;
}

ParikhVector parikh(const Word& w, std::size_t start, std::size_t end) {
  if (start > end || end > w.size()) {
    throw RangeError("factor (" + std::to_string(start) + ", " + std::to_string(end) +
                     "] outside word of length " + std::to_string(w.size()));
  }
  ParikhVector p;
  p.counts.assign(w.alphabet_size(), 0);
  for (std::size_t i = start; i < end; ++i) ++p.counts[w[i] - 1];
  return p;
}

ParikhVector parikh(const ParikhTable& table, std::size_t start, std::size_t end) {
  return table.factor(start, end);
}

Word parse_word(std::string_view text, WordFormat format, std::optional<int> alphabet_size) {
  text = trim(text);
  std::vector<Letter> letters;
  if (format == WordFormat::Compact) {
    letters.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw ParseError(std::string("invalid character '") + c + "' in compact word");
      }
      if (c == '0') throw ParseError("letter 0 is not allowed");
      letters.push_back(static_cast<Letter>(c - '0'));
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_space(text[i])) ++i;
      std::size_t j = i;
      while (j < text.size() && !is_space(text[j])) ++j;
      if (j == i) break;
      const std::string_view tok = text.substr(i, j - i);
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.front() == '+' ||
          tok.front() == '-') {
        throw ParseError("invalid token '" + std::string(tok) + "' in spaced word");
      }
      if (value < 1) throw ParseError("letter " + std::to_string(value) + " is not allowed");
      if (value > kMaxAlphabet) {
        throw ParseError("letter " + std::to_string(value) + " exceeds maximum alphabet size " +
                         std::to_string(kMaxAlphabet));
      }
      letters.push_back(static_cast<Letter>(value));
      i = j;
    }
  }
  int max_letter = 1;
  for (Letter x : letters) max_letter = std::max<int>(max_letter, x);
  if (alphabet_size) {
    if (*alphabet_size < max_letter || *alphabet_size > kMaxAlphabet) {
      throw ParseError("alphabet size " + std::to_string(*alphabet_size) +
                       " does not cover letter " + std::to_string(max_letter));
    }
    return Word(std::move(letters), *alphabet_size);
  }
  return Word(std::move(letters), max_letter);
}

std::string render_word(const Word& w, WordFormat format) {
  std::string out;
  if (format == WordFormat::Compact) {
    if (w.alphabet_size() > 9) {
      throw FormatError("compact format needs alphabet size <= 9, got " +
                        std::to_string(w.alphabet_size()));
    }
    out.reserve(w.size());
    for (Letter x : w.letters()) out.push_back(static_cast<char>('0' + x));
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(w[i]);
  }
  return out;
}

std::vector<Word> read_corpus(std::istream& in, WordFormat format) {
  std::vector<Word> words;
  std::string line;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    words.push_back(parse_word(t, format));
  }
  return words;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << render_word(w, w.alphabet_size() <= 9 ? WordFormat::Compact : WordFormat::Spaced);
}

}  // namespace crucialis
