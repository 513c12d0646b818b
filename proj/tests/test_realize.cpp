#include "doctest.h"

#include "convlab/realize.hpp"
#include "test_util.hpp"

using namespace convlab;

namespace {

MarkovSeq scalar_seq(const Field& f, std::vector<fe> values) {
  // n = 2, k = 1: one scalar block per index
  CodeParams p = CodeParams::make(2, 1, 1);
  REQUIRE(values.size() == static_cast<std::size_t>(p.M + 1));
  std::vector<Mat> blocks;
  for (fe v : values) {
    Mat m(f, 1, 1);
    m.set(0, 0, v);
    blocks.push_back(std::move(m));
  }
  return MarkovSeq(f, p, blocks);
}

}  // namespace

TEST_CASE("Hankel blocks and shapes") {
  Field f = Field::make(5, 1);
  CodeParams p = CodeParams::make(3, 1, 1);
  std::vector<Mat> blocks;
  for (int t = 0; t <= p.M; ++t) {
    Mat m(f, 2, 1);
    m.set(0, 0, t + 1);
    blocks.push_back(std::move(m));
  }
  MarkovSeq seq(f, p, blocks);
  CHECK(hankel(seq, 1, 1) == blocks[1]);
  Mat h12 = hankel(seq, 1, 2);
  CHECK(h12.rows() == 2);
  CHECK(h12.cols() == 2);
  CHECK(h12.at(0, 0) == 2);
  CHECK(h12.at(0, 1) == 3);
  Mat h21 = hankel(seq, 2, 1);
  CHECK(h21.rows() == 4);
  CHECK(h21.at(2, 0) == 3);
  CHECK_THROWS_AS(hankel(seq, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(hankel(seq, 0, 1), std::invalid_argument);
}

TEST_CASE("minimal degree formula on scalar sequences") {
  Field f = Field::make(5, 1);
  // delta=1 at (2,1): M = 2
  {
    CodeParams p = CodeParams::make(2, 1, 1);
    Mat z(f, 1, 1), one(f, 1, 1);
    one.set(0, 0, 1);
    MarkovSeq geometric(f, p, {z, one, one});
    CHECK(minimal_degree(geometric) == 1);
    MarkovSeq zero(f, p, {one, z, z});
    CHECK(minimal_degree(zero) == 0);
  }
}

TEST_CASE("xbar values and identities") {
  CHECK(xbar(CodeParams::make(3, 1, 1)) == 1);
  CHECK(xbar(CodeParams::make(4, 2, 1)) == 1);
  CHECK(xbar(CodeParams::make(4, 1, 2)) == 1);
  CHECK(xbar(CodeParams::make(2, 1, 2)) == 2);
}

TEST_CASE("shift realization of a scalar sequence") {
  Field f = Field::make(5, 1);
  for (fe lambda : {fe{1}, fe{2}, fe{3}}) {
    MarkovSeq seq = scalar_seq(f, {0, 1, lambda});
    Realization r = partial_realization(seq, 1);
    CHECK(r.A.at(0, 0) == lambda);
    CHECK(mul(r.C, r.B).at(0, 0) == 1);
    CHECK(verify_realization(r, seq));
  }
}

TEST_CASE("degree-zero sequences realize with an empty state space") {
  Field f = Field::make(3, 1);
  CodeParams p = CodeParams::make(3, 1, 0);
  Mat f0(f, 2, 1);
  f0.set(0, 0, 2);
  MarkovSeq seq(f, p, {f0});  // M = 0, so the sequence is F_0 alone
  Realization r = partial_realization(seq, 0);
  CHECK(r.A.rows() == 0);
  CHECK(r.D == f0);
  CHECK(verify_realization(r, seq));
  CHECK_THROWS_AS(partial_realization(seq, 1), std::invalid_argument);
}

TEST_CASE("partial realization after markov is the identity on Markov data") {
  Field f = Field::make(5, 1);
  Rng rng(91);
  for (const auto& [n, k, delta] : {std::tuple{3, 1, 1}, {2, 1, 2}, {4, 2, 1}}) {
    CodeParams p = CodeParams::make(n, k, delta);
    int done = 0;
    for (int i = 0; i < 40 && done < 10; ++i) {
      Realization r = testutil::random_minimal_realization(f, p, rng);
      MarkovSeq seq(f, p, markov(r, p.M + 1));
      if (minimal_degree(seq) != p.delta) continue;  // truncation lost rank
      ++done;
      Realization back = partial_realization(seq, p.delta);
      CHECK(verify_realization(back, seq));
    }
    CHECK(done > 0);
  }
}

TEST_CASE("completion produces a certified full sequence") {
  Field f = Field::make(5, 1);
  CodeParams p = CodeParams::make(3, 1, 1);
  Rng rng(101);
  int done = 0;
  for (int i = 0; i < 200 && done < 5; ++i) {
    std::vector<Mat> prefix;
    for (int t = 0; t <= p.L; ++t) prefix.push_back(testutil::random_mat(f, 2, 1, rng));
    if (!certify_mdp(prefix, p).ok()) continue;
    ++done;
    MarkovSeq seq = complete_fm(prefix, p, rng);
    CHECK(certify_smds(seq.blocks, p).ok());
    CHECK(minimal_degree(seq) == p.delta);
    CHECK(rank(hankel(seq, xbar(p), p.M + 1 - xbar(p))) == 1);
    FM1Report rep = check_fm1(seq);
    CHECK(rep.ok());
  }
  CHECK(done == 5);
}

TEST_CASE("an exhausted retry budget reports the field as too small") {
  Field f = Field::make(5, 1);
  CodeParams p = CodeParams::make(3, 1, 1);
  Rng rng(111);
  std::vector<Mat> prefix;
  do {
    prefix.clear();
    for (int t = 0; t <= p.L; ++t) prefix.push_back(testutil::random_mat(f, 2, 1, rng));
  } while (!certify_mdp(prefix, p).ok());
  CHECK_THROWS_AS(complete_fm(prefix, p, rng, 0), field_too_small);
}

TEST_CASE("Markov data read back from a represented code") {
  Field f = Field::make(3, 1);
  CodeParams p = CodeParams::make(3, 1, 1);
  Rng rng(121);
  for (int i = 0; i < 10; ++i) {
    Realization r = testutil::random_minimal_realization(f, p, rng);
    ConvCode c = code_from_realization(r);
    std::vector<Mat> fs = markov_from_code(c, p.M + 1);
    std::vector<Mat> want = markov(r, p.M + 1);
    for (int t = 0; t <= p.M; ++t) CHECK(fs[t] == want[t]);
  }
}

TEST_CASE("rank-pattern report flags an uncertified sequence") {
  Field f = Field::make(3, 1);
  CodeParams p = CodeParams::make(3, 1, 1);
  Mat z(f, 2, 1);
  // all-zero F_1, F_2: ranks collapse, so the certified pattern cannot hold
  Mat f0(f, 2, 1);
  f0.set(0, 0, 1);
  f0.set(1, 0, 1);
  MarkovSeq seq(f, p, {f0, z, z});
  CHECK_FALSE(check_fm1(seq).ok());
}
