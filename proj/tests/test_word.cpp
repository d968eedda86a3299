#include <algorithm>
#include <random>
#include <sstream>

#include "crucialis/errors.hpp"
#include "crucialis/word.hpp"
#include "doctest.h"
#include "support/words.hpp"

using namespace crucialis;

TEST_CASE("parikh counts factors") {
  const Word w = W("121");
  CHECK(parikh(w, 0, 3).counts == std::vector<std::uint32_t>{2, 1});
  CHECK(parikh(w, 2, 2).counts == std::vector<std::uint32_t>{0, 0});

  const Word cube = W("123312213");
  const ParikhTable t(cube);
  const std::vector<std::uint32_t> ones{1, 1, 1};
  CHECK(parikh(t, 0, 3).counts == ones);
  CHECK(parikh(t, 3, 6).counts == ones);
  CHECK(parikh(t, 6, 9).counts == ones);
}

TEST_CASE("parikh rejects bad ranges") {
  const Word w = W("121");
  CHECK_THROWS_AS(parikh(w, 2, 1), RangeError);
  CHECK_THROWS_AS(parikh(w, 0, 4), RangeError);
  CHECK_THROWS_AS(parikh(ParikhTable(w), 1, 5), RangeError);
}

TEST_CASE("parse_word formats") {
  const Word a = parse_word("21211", WordFormat::Compact);
  CHECK(a.alphabet_size() == 2);
  CHECK(std::vector<Letter>(a.letters().begin(), a.letters().end()) ==
        std::vector<Letter>{2, 1, 2, 1, 1});

  const Word b = parse_word("10 2 10", WordFormat::Spaced);
  CHECK(b.alphabet_size() == 10);
  CHECK(b.size() == 3);
  CHECK(b[0] == 10);
  CHECK(b[1] == 2);

  const Word e = parse_word("", WordFormat::Compact);
  CHECK(e.empty());

  CHECK(parse_word("12", WordFormat::Compact, 5).alphabet_size() == 5);
}

TEST_CASE("parse_word errors") {
  CHECK_THROWS_AS(parse_word("12a", WordFormat::Compact), ParseError);
  CHECK_THROWS_AS(parse_word("102", WordFormat::Compact), ParseError);
  CHECK_THROWS_AS(parse_word("1 0 2", WordFormat::Spaced), ParseError);
  CHECK_THROWS_AS(parse_word("1 -2", WordFormat::Spaced), ParseError);
  CHECK_THROWS_AS(parse_word("1 x", WordFormat::Spaced), ParseError);
  CHECK_THROWS_AS(parse_word("1 2.5", WordFormat::Spaced), ParseError);
  CHECK_THROWS_AS(parse_word("1 65", WordFormat::Spaced), ParseError);
  CHECK_THROWS_AS(parse_word("123", WordFormat::Compact, 2), ParseError);
}

TEST_CASE("render_word") {
  const Word w = W("21211");
  CHECK(render_word(w, WordFormat::Compact) == "21211");
  CHECK(render_word(w, WordFormat::Spaced) == "2 1 2 1 1");
  CHECK_THROWS_AS(render_word(Word::from_letters({1, 2, 10}), WordFormat::Compact), FormatError);
}

TEST_CASE("read_corpus skips comments and blanks") {
  std::istringstream in("# header\n21211\n\n  11 \n# tail\n");
  const auto words = read_corpus(in, WordFormat::Compact);
  REQUIRE(words.size() == 2);
  CHECK(words[0] == W("21211"));
  CHECK(words[1] == W("11"));
}

TEST_CASE("property: render/parse round trip and table consistency") {
  std::mt19937 rng(12345);
  for (int iter = 0; iter < 2000; ++iter) {
    const int n = std::uniform_int_distribution<int>(1, 20)(rng);
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, 40)(rng);
    std::vector<Letter> v(len);
    for (auto& x : v) x = static_cast<Letter>(std::uniform_int_distribution<int>(1, n)(rng));
    const Word w(v, n);

    CHECK(parse_word(render_word(w, WordFormat::Spaced), WordFormat::Spaced, n) == w);
    if (n <= 9) CHECK(parse_word(render_word(w, WordFormat::Compact), WordFormat::Compact, n) == w);

    const ParikhTable t(w);
    std::uniform_int_distribution<std::size_t> pos(0, len);
    std::size_t i = pos(rng), j = pos(rng), m = pos(rng);
    std::size_t ord[3] = {i, j, m};
    std::sort(ord, ord + 3);
    CHECK(parikh(t, ord[0], ord[2]) == parikh(w, ord[0], ord[2]));
    CHECK(parikh(t, ord[0], ord[2]) == parikh(t, ord[0], ord[1]) + parikh(t, ord[1], ord[2]));
    CHECK(parikh(t, ord[0], ord[2]).total() == ord[2] - ord[0]);
  }
}

TEST_CASE("ParikhTable push/pop") {
  ParikhTable t(3);
  t.push_back(2);
  t.push_back(3);
  t.push_back(2);
  CHECK(t.length() == 3);
  CHECK(t.factor(0, 3).counts == std::vector<std::uint32_t>{0, 2, 1});
  t.pop_back();
  CHECK(t.factor(0, 2).counts == std::vector<std::uint32_t>{0, 1, 1});
  t.pop_back();
  t.pop_back();
  CHECK_THROWS_AS(t.pop_back(), RangeError);
}

TEST_CASE("Word rejects letters outside its alphabet") {
  CHECK_THROWS_AS(Word({1, 3}, 2), ArgumentError);
  CHECK_THROWS_AS(Word({1}, 65), ArgumentError);
  CHECK_THROWS_AS(W("12").factor(1, 3), RangeError);
}
