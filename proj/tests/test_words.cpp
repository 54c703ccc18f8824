#include "doctest.h"

#include "metab/errors.hpp"
#include "metab/words.hpp"
#include "test_support.hpp"

#include <random>

using namespace metab;

namespace {

const std::vector<std::string> kAB{"a", "b"};
const std::vector<std::string> kABC{"a", "b", "c"};

GroupWord w(std::string_view text, const std::vector<std::string>& alphabet = kAB) {
  return parse_word(text, alphabet);
}

Letter L(std::size_t g, int s) { return {Generator{g}, s}; }

ExponentVector vec(std::initializer_list<std::int64_t> xs) {
  ExponentVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST_SUITE("words") {
  TEST_CASE("parse expands powers and commutators") {
    // [a,b] = a^-1 b^-1 a b, so a^2 [a,b]^-1 = a a b^-1 a^-1 b a
    const std::vector<Letter> expect{L(0, 1), L(0, 1), L(1, -1), L(0, -1), L(1, 1), L(0, 1)};
    CHECK(w("a^2 [a,b]^-1") == GroupWord(2, expect));
    CHECK(w("") == GroupWord(2));
    CHECK(w("a a^-1 b") == letter_word(2, 1));
    CHECK(w("a a^-1 b").length() == 1);
    CHECK(w("(a b)^2") == w("a b a b"));
    CHECK(w("(a b)^-2") == w("b^-1 a^-1 b^-1 a^-1"));
    CHECK(w("[a b, b]") == w("b^-1 a^-1 b^-1 a b b"));
    CHECK(w("1") == GroupWord(2));
    CHECK(w("a 1 a") == w("a^2"));
    CHECK(w("  a ^ -3  ") == w("a^-1 a^-1 a^-1"));
  }

  TEST_CASE("parse errors carry positions") {
    auto col_of = [](std::string_view text) -> std::size_t {
      try {
        parse_word(text, kAB);
      } catch (const ParseError& e) {
        return e.column();
      }
      return 0;
    };
    CHECK(col_of("a c") == 3);       // unknown generator
    CHECK(col_of("a^x") == 3);       // malformed exponent
    CHECK(col_of("a^") == 3);
    CHECK(col_of("(a b") == 1);      // unbalanced
    CHECK(col_of("[a, b") == 1);
    CHECK(col_of("[a b]") == 5);     // missing comma
    CHECK(col_of("a)") == 2);
    CHECK(col_of("ab") == 1);        // multi-letter names are single identifiers
    CHECK_THROWS_AS(parse_word("a^99999999999999999999", kAB), ParseError);
    CHECK_THROWS_AS(parse_word("a^2000000", kAB), LimitError);
  }

  TEST_CASE("free reduction") {
    CHECK(free_reduce(2, std::vector{L(0, 1), L(1, 1), L(1, -1), L(0, 1)}) ==
          GroupWord(2, std::vector{L(0, 1), L(0, 1)}));
    CHECK(free_reduce(2, std::vector{L(0, 1), L(0, -1)}).empty());
    const std::vector<Letter> reduced{L(0, 1), L(1, -1), L(0, -1)};
    CHECK(std::ranges::equal(free_reduce(2, reduced).letters(), reduced));
    CHECK_THROWS_AS(free_reduce(2, std::vector{L(2, 1)}), std::out_of_range);
    CHECK_THROWS_AS(free_reduce(2, std::vector{L(0, 2)}), std::invalid_argument);
  }

  TEST_CASE("free reduction is idempotent and sign-free of order") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
      auto letters = testing::random_letters(rng, 3, rng() % 20);
      GroupWord once = free_reduce(3, letters);
      GroupWord twice = free_reduce(3, once.letters());
      CHECK(once == twice);
      // no adjacent inverse pair survives
      for (std::size_t i = 0; i + 1 < once.length(); ++i) CHECK(once[i] != once[i + 1].inverse());
    }
  }

  TEST_CASE("concat and invert") {
    CHECK(concat(w("a"), w("a^-1")).empty());
    CHECK(invert(w("a b")) == w("b^-1 a^-1"));
    CHECK_THROWS_AS(concat(w("a"), parse_word("a", kABC)), std::invalid_argument);

    // concat(invert(u), u) is empty for every word of length <= 6 over {a, b}
    std::size_t checked = 0;
    for (std::size_t len = 0; len <= 6; ++len) {
      std::size_t count = 1;
      for (std::size_t i = 0; i < len; ++i) count *= 4;
      for (std::size_t code = 0; code < count; ++code) {
        std::vector<Letter> ls;
        std::size_t c = code;
        for (std::size_t i = 0; i < len; ++i, c /= 4) ls.push_back(L((c % 4) / 2, c % 2 ? -1 : 1));
        const GroupWord u = free_reduce(2, ls);
        CHECK(concat(invert(u), u).empty());
        CHECK(concat(u, invert(u)).empty());
        ++checked;
      }
    }
    CHECK(checked == 5461);
  }

  TEST_CASE("powers") {
    CHECK(power(w("a b"), 3) == w("a b a b a b"));
    CHECK(power(w("a b a^-1"), 4) == w("a b^4 a^-1"));
    CHECK(power(w("a b"), -1) == invert(w("a b")));
    CHECK(power(w("a"), 0).empty());
    CHECK_THROWS_AS(power(w("a b"), 600'000), LimitError);
    CHECK(power(w("a"), 1'000'000).length() == 1'000'000);
  }

  TEST_CASE("exponent vectors") {
    CHECK(exponent_vector(w("[a,b]"), 2) == vec({0, 0}));
    CHECK(exponent_vector(w("a^2 [a,b]^-1"), 2) == vec({2, 0}));
    CHECK(exponent_vector(w("a b a^-1 b"), 2) == vec({0, 2}));
    CHECK_THROWS_AS(exponent_vector(w("b"), 1), std::out_of_range);
  }

  TEST_CASE("exponent vector is a homomorphism with parity of the raw length") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
      const auto raw_u = testing::random_letters(rng, 3, rng() % 15);
      const auto raw_v = testing::random_letters(rng, 3, rng() % 15);
      const GroupWord u = free_reduce(3, raw_u);
      const GroupWord v = free_reduce(3, raw_v);
      CHECK(exponent_vector(concat(u, v)) == exponent_vector(u) + exponent_vector(v));
      CHECK(exponent_vector(invert(u)) == -exponent_vector(u));
      CHECK(((exponent_vector(u).sum() - static_cast<std::int64_t>(raw_u.size())) % 2) == 0);
      // reordering letters does not change exponent sums
      auto shuffled = raw_u;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(exponent_vector(free_reduce(3, shuffled)) == exponent_vector(u));
    }
  }

  TEST_CASE("commutator words") {
    CHECK(is_commutator_word(w("[a,b]")));
    CHECK_FALSE(is_commutator_word(w("a")));
    CHECK(is_commutator_word(parse_word("[a,b] [b,c]^3", kABC)));
    CHECK(is_commutator_word(GroupWord(2)));
  }

  TEST_CASE("Nielsen shortening") {
    CHECK(nielsen_shorten({w("b a b a b"), w("a b")}) == std::vector{w("a"), w("b")});
    CHECK(nielsen_shorten({w("a^-1")}) == std::vector{w("a")});
    CHECK(nielsen_shorten({w("[a,b]"), w("a")}) == std::vector{w("a"), w("b^-1 a b")});
    CHECK(nielsen_shorten({}).empty());

    // Random Nielsen moves on {a, b, c} shorten back to the letters.
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<GroupWord> basis{parse_word("a", kABC), parse_word("b", kABC),
                                   parse_word("c", kABC)};
      for (int step = 0; step < 4; ++step) {
        const std::size_t i = rng() % 3, j = (i + 1 + rng() % 2) % 3;
        basis[i] = rng() % 2 ? concat(basis[i], basis[j]) : concat(invert(basis[j]), basis[i]);
      }
      const auto out = nielsen_shorten(basis);
      CHECK(out == std::vector{parse_word("a", kABC), parse_word("b", kABC), parse_word("c", kABC)});
    }
  }

  TEST_CASE("substitution") {
    // a -> a b, b -> b
    const std::vector<GroupWord> images{w("a b"), w("b")};
    CHECK(substitute(w("a^2 b^-1"), images) == w("a b a"));
    CHECK(substitute(w("a^-1"), images) == w("b^-1 a^-1"));
    CHECK_THROWS_AS(substitute(w("a"), std::vector<GroupWord>{w("a")}), std::invalid_argument);
    // into a larger alphabet
    const std::vector<GroupWord> up{parse_word("c", kABC), parse_word("a b", kABC)};
    CHECK(substitute(w("a b"), up) == parse_word("c a b", kABC));
  }

  TEST_CASE("render round-trips") {
    CHECK(render(w("a a b^-1 a^-1 b a"), kAB) == "a^2 b^-1 a^-1 b a");
    CHECK(render(GroupWord(2), kAB) == "1");
    std::mt19937_64 rng(3);
    const std::vector<std::string> names{"x", "y_1", "Long_name"};
    for (int trial = 0; trial < 300; ++trial) {
      const GroupWord u = free_reduce(3, testing::random_letters(rng, 3, rng() % 25));
      CHECK(parse_word(render(u, names), names) == u);
    }
  }

  TEST_CASE("generator names") {
    CHECK(is_valid_generator_name("a"));
    CHECK(is_valid_generator_name("_x9"));
    CHECK_FALSE(is_valid_generator_name("9a"));
    CHECK_FALSE(is_valid_generator_name(""));
    CHECK_FALSE(is_valid_generator_name("a-b"));
  }
}
