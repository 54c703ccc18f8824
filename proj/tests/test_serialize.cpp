#include "doctest.h"

#include "metab/serialize.hpp"

using namespace metab;

TEST_SUITE("serialize") {
  TEST_CASE("integers beyond 64 bits travel as strings") {
    CHECK(integer_to_json(BigInt(-12)) == Json(-12));
    const BigInt big("-123456789012345678901234567890");
    CHECK(integer_to_json(big) == Json("-123456789012345678901234567890"));
    CHECK(integer_from_json(integer_to_json(big)) == big);
    CHECK(integer_from_json(Json("+7")) == 7);
    CHECK_THROWS_AS(integer_from_json(Json("1x")), std::invalid_argument);
    CHECK_THROWS_AS(integer_from_json(Json("-")), std::invalid_argument);
    CHECK_THROWS_AS(integer_from_json(Json(1.5)), std::invalid_argument);
  }

  TEST_CASE("matrix round trip") {
    IntMatrix m(2, 3);
    m << 1, -2, 3, BigInt("99999999999999999999999"), 0, 5;
    const Json j = matrix_to_json(m);
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 3);
    CHECK(j["entries"][1][0].is_string());
    CHECK(matrix_from_json(j) == m);
    CHECK(matrix_from_json(Json::parse("[[2,4],[4,4]]")).rows() == 2);
    CHECK(matrix_from_json(Json::parse(R"({"rows":0,"cols":3,"entries":[]})")).cols() == 3);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1,2],[3]]")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":3,"entries":[[1]]})")),
                    std::invalid_argument);
  }

  TEST_CASE("op round trip") {
    using Op = ElementaryOp<BigInt>;
    for (const Op& op : {Op{OpKind::swap_rows, 0, 2, 0}, Op{OpKind::negate_col, 1, 1, 0},
                         Op{OpKind::add_row_multiple, 2, 0, -7}, Op{OpKind::add_col_multiple, 0, 3, 4}}) {
      CHECK(op_from_json(op_to_json(op)) == op);
    }
    const Json neg = op_to_json(Op{OpKind::negate_row, 1, 1, 0});
    CHECK_FALSE(neg.contains("source"));
    CHECK_FALSE(neg.contains("multiplier"));
    CHECK_THROWS_AS(op_from_json(Json::parse(R"({"kind":"shear","target":0})")),
                    std::invalid_argument);
  }

  TEST_CASE("smith JSON") {
    IntMatrix m(2, 2);
    m << 2, 4, 4, 4;
    const Json j = smith_to_json(smith_normal_form(m));
    CHECK(j["rank"] == 2);
    CHECK(j["invariant_factors"] == Json::parse("[2, 4]"));
    CHECK(j["D"]["entries"] == Json::parse("[[2, 0], [0, 4]]"));
  }

  TEST_CASE("experiment CSV and JSON") {
    ExperimentResult r;
    r.config.n = 2;
    r.config.m = 1;
    r.config.master_seed = 9;
    r.rows.push_back({4, 10, 7, 0.7, 0.3, 0.9});
    CHECK(experiment_to_csv(r) ==
          "n,m,ell,trials,successes,p_hat,ci_low,ci_high,seed\n"
          "2,1,4,10,7,0.7,0.3,0.9,9\n");
    const Json j = experiment_to_json(r);
    CHECK(j["rows"][0]["successes"] == 7);
    CHECK(j["config"]["seed"] == 9);
  }

  TEST_CASE("exact probability JSON") {
    const Json j = exact_probability_to_json(2, 1, 2, BigRational(BigInt(3), BigInt(4)));
    CHECK(j["probability"] == "3/4");
    CHECK(j["numerator"] == "3");
    CHECK(j["value"] == 0.75);
  }

  TEST_CASE("format_double is shortest round-trip") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0) == "1");
    CHECK(std::stod(format_double(0.1 + 0.2)) == 0.1 + 0.2);
  }
}
