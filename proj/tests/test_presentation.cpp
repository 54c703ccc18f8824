#include "doctest.h"

#include "metab/errors.hpp"
#include "metab/presentation.hpp"
#include "test_support.hpp"

#include <random>

using namespace metab;

namespace {

IntMatrix mat(Index r, Index c, std::initializer_list<long> xs) {
  IntMatrix m(r, c);
  auto it = xs.begin();
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = *it++;
  return m;
}

}  // namespace

TEST_SUITE("presentation") {
  TEST_CASE("relation matrices of the reference presentations") {
    CHECK(relation_matrix(parse_presentation("< a, b | a^2 [a,b]^-1 >")) == mat(1, 2, {2, 0}));
    CHECK(relation_matrix(parse_presentation("< a1, a2, a3, a4 | [a1,a3], [a2,a4] >")) ==
          IntMatrix::Zero(2, 4));
    CHECK(relation_matrix(parse_presentation(
              "< a1, a2, a3, a4 | a1^2 [a1,a3]^-1, a2^3 [a2,a4]^-1 >")) ==
          mat(2, 4, {2, 0, 0, 0, 0, 3, 0, 0}));
  }

  TEST_CASE("equations become relators u v^-1") {
    const auto p = parse_presentation("< a, b | a^2 = [a,b] >");
    CHECK(p == parse_presentation("< a, b | a^2 [a,b]^-1 >"));
    const auto q = parse_presentation("gens: a, b\na b = b a\n");
    CHECK(q.relators()[0] == parse_word("a b a^-1 b^-1", q.generator_names()));
  }

  TEST_CASE("file format") {
    const auto p = parse_presentation(
        "# Baumslag-Solitar BS(1,3)\n"
        "gens: a, b   # two generators\n"
        "\n"
        "a^2 = [a, b]\n");
    CHECK(p.generator_count() == 2);
    CHECK(p.relator_count() == 1);
    CHECK(relation_matrix(p) == mat(1, 2, {2, 0}));
    CHECK(parse_presentation(to_text(p)) == p);
    CHECK(parse_presentation(to_angle_form(p)) == p);
    CHECK(parse_presentation("gens: x\n").relator_count() == 0);
  }

  TEST_CASE("parse errors report line and column") {
    auto where = [](std::string_view text) -> std::pair<std::size_t, std::size_t> {
      try {
        parse_presentation(text);
      } catch (const ParseError& e) {
        return {e.line(), e.column()};
      }
      return {0, 0};
    };
    CHECK(where("gens: a, b\na c\n") == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(where("gens: a, a\n") == std::pair<std::size_t, std::size_t>{1, 10});
    CHECK(where("a b\n") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(where("< a, b | a = b = a >").first == 1);
    CHECK(where("< a, b | a^2 [a,b >") == std::pair<std::size_t, std::size_t>{1, 14});
    CHECK(where("< a | a ") .first == 1);
    CHECK(where("<  | a >").first == 1);
    CHECK(where("< a, 9b | a >") == std::pair<std::size_t, std::size_t>{1, 6});
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(Presentation({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Presentation({"a", "a"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Presentation({"a"}, {letter_word(2, 1)}), std::invalid_argument);
  }

  TEST_CASE("empty relators are kept with a warning") {
    const auto p = parse_presentation("< a, b | a a^-1, b >");
    CHECK(p.relator_count() == 2);
    CHECK(p.relators()[0].empty());
    REQUIRE(p.warnings().size() == 1);
    CHECK(p.warnings()[0] == "relator 1 is the empty word");
    CHECK(relation_matrix(p) == mat(2, 2, {0, 0, 0, 1}));
    CHECK_FALSE(is_full_rank(p));
  }

  TEST_CASE("deficiency") {
    CHECK(deficiency(parse_presentation("< a, b | a^2 [a,b]^-1 >")) == 1);
    CHECK(deficiency(parse_presentation("< a | >")) == 1);
    const auto p = parse_presentation("< a, b | a, b, [a,b] >");
    CHECK(deficiency(p) == -1);
    CHECK_FALSE(deficiency_defined(p));
  }

  TEST_CASE("full rank") {
    CHECK(is_full_rank(parse_presentation("< a, b | a^2 [a,b]^-1 >")));
    CHECK_FALSE(is_full_rank(parse_presentation("< a1, a2, a3, a4 | [a1,a3], [a2,a4] >")));
    CHECK_FALSE(is_full_rank(parse_presentation("< a, b | [a,b] >")));
    CHECK(is_full_rank(parse_presentation("< a, b | >")));
    CHECK(is_full_rank(parse_presentation("< a, b | a, b, [a,b] >")));
  }

  TEST_CASE("relation matrix invariances") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      const Presentation p = testing::random_presentation(rng, 4, 4, 12);
      if (p.relator_count() == 0) continue;
      const IntMatrix m = relation_matrix(p);
      auto rel = p.relators();
      // cyclic permutation of relator 0
      const auto ls = rel[0].letters();
      if (!ls.empty()) {
        std::vector<Letter> rot(ls.begin() + 1, ls.end());
        rot.push_back(ls.front());
        rel[0] = free_reduce(p.generator_count(), rot);
      }
      rel.back() = invert(rel.back());
      const IntMatrix m2 = relation_matrix(Presentation(p.generator_names(), rel));
      IntMatrix expect = m;
      expect.row(expect.rows() - 1) = -expect.row(expect.rows() - 1);
      CHECK(m2 == expect);
      if (rel.size() >= 2) {
        std::swap(rel[0], rel[1]);
        IntMatrix swapped = expect;
        swapped.row(0).swap(swapped.row(1));
        CHECK(relation_matrix(Presentation(p.generator_names(), rel)) == swapped);
      }
    }
  }

  TEST_CASE("duplicate relators stay as duplicate rows") {
    const auto p = parse_presentation("< a, b | a^2, a^2 >");
    CHECK(relation_matrix(p) == mat(2, 2, {2, 0, 2, 0}));
    CHECK_FALSE(is_full_rank(p));
  }
}
