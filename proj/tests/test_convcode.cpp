#include "doctest.h"

#include "convlab/search.hpp"
#include "test_util.hpp"

using namespace convlab;

TEST_CASE("derived code parameters at desk scale") {
  CodeParams p = CodeParams::make(3, 1, 1);
  CHECK(p.L == 1);
  CHECK(p.M == 2);
  CHECK(p.r == 1);
  CHECK(p.rprime == 0);
  CHECK(p.singleton == 6);
  CHECK(p.col_bound(1) == 5);

  p = CodeParams::make(2, 1, 2);
  CHECK(p.L == 4);
  CHECK(p.M == 4);
  CHECK(p.r == 0);
  CHECK(p.singleton == 6);

  p = CodeParams::make(4, 2, 1);
  CHECK(p.L == 0);
  CHECK(p.M == 1);
  CHECK(p.r == 1);
  CHECK(p.singleton == 4);
  CHECK(p.col_bound(0) == 3);

  p = CodeParams::make(4, 1, 2);
  CHECK(p.L == 2);
  CHECK(p.M == 3);
  CHECK(p.r == 2);
  CHECK(p.singleton == 12);
  CHECK(p.col_bound(2) == 10);

  CHECK_THROWS_AS(CodeParams::make(2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(CodeParams::make(3, 1, -1), std::invalid_argument);
}

TEST_CASE("code constructor validates minimality and degree") {
  Field f = Field::make(5, 1);
  Rng rng(61);
  PolyMat g = testutil::random_minimal_generator(f, 3, 1, 2, rng);
  CHECK_NOTHROW(ConvCode(f, CodeParams::make(3, 1, 2), g));
  CHECK_THROWS_AS(ConvCode(f, CodeParams::make(3, 1, 1), g), std::invalid_argument);
  // a non-minimal generator: column multiplied by s is no longer a summand
  std::vector<Mat> coeffs(g.dmax() + 2, Mat(f, 3, 1));
  for (int t = 0; t <= g.dmax(); ++t) coeffs[t + 1] = g.coeff(t);
  PolyMat shifted(f, 3, 1, coeffs);
  CHECK_THROWS_AS(ConvCode(f, CodeParams::make(3, 1, 3), shifted), std::invalid_argument);
}

TEST_CASE("weight counts nonzero entries over all coefficients") {
  Field f = Field::make(3, 1);
  Mat c0(f, 2, 1), c1(f, 2, 1);
  c0.set(0, 0, 2);
  c1.set(0, 0, 1);
  c1.set(1, 0, 1);
  CHECK(weight(PolyMat(f, 2, 1, {c0, c1})) == 3);
  CHECK(weight(PolyMat(f, 2, 1, {Mat(f, 2, 1)})) == 0);
}

TEST_CASE("column distances of a certified code match their bounds") {
  SearchConfig cfg;
  cfg.params = CodeParams::make(3, 1, 1);
  cfg.ladder = {Field::make(5, 1)};
  cfg.seed = 12;
  cfg.oracle = OracleMode::Off;
  SearchResult res = search(cfg);
  REQUIRE(res.success);
  const ConvCode& c = *res.code;
  auto profile = column_distance_profile(c, 2);
  REQUIRE(profile.size() == 3);
  CHECK(*profile[0] == 3);
  CHECK(*profile[1] == 5);
  CHECK(*profile[2] == 6);
  CHECK(*is_mdp(c));
  CHECK(*is_smds(c));
  CHECK(*free_distance_oracle(c) == 6);
  CHECK(*is_mds(c));
}

TEST_CASE("oracle budget exhaustion reports infeasible, never a guess") {
  Field f = Field::make(5, 1);
  Rng rng(71);
  ConvCode c = testutil::random_code(f, 3, 1, 1, rng);
  OracleBudget tiny;
  tiny.max_candidates = 4;  // 5^1 already over
  CHECK(column_distance_oracle(c, 0, tiny) == std::nullopt);
  CHECK(is_mdp(c, tiny) == std::nullopt);
}

TEST_CASE("column distance profile respects monotonicity on random codes") {
  Field f = Field::make(3, 1);
  Rng rng(81);
  for (int i = 0; i < 10; ++i) {
    ConvCode c = testutil::random_code(f, 3, 1, 1, rng);
    auto profile = column_distance_profile(c, 3);
    for (int j = 0; j <= 3; ++j) {
      REQUIRE(profile[j].has_value());
      CHECK(*profile[j] <= c.params.col_bound(j));
      if (j > 0) CHECK(*profile[j] >= *profile[j - 1]);
    }
  }
}
