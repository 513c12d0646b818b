#include "doctest.h"

#include <sstream>

#include "convlab/search.hpp"
#include "test_util.hpp"

using namespace convlab;

TEST_CASE("element and field serialization round-trips") {
  Field f5 = Field::make(5, 1);
  CHECK(format_element(f5, 3) == "3");
  CHECK(parse_element(f5, "3") == 3);
  Field f9 = Field::make(3, 2);
  CHECK(format_element(f9, 5) == "2:1");
  CHECK(parse_element(f9, "2:1") == 5);
  CHECK(format_field(f9) == "field 3 2 1 0 1");
  CHECK_THROWS_AS(parse_element(f5, "7"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(f9, "1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(f9, "1:2:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(f5, "x"), std::invalid_argument);
}

TEST_CASE("code, realization, and markov files round-trip byte-exactly") {
  SearchConfig cfg;
  cfg.params = CodeParams::make(3, 1, 1);
  cfg.ladder = {Field::make(3, 1), Field::make(5, 1)};
  cfg.seed = 5;
  cfg.oracle = OracleMode::Off;
  SearchResult res = search(cfg);
  REQUIRE(res.success);

  auto roundtrip = [](auto writer, const auto& obj) {
    std::ostringstream first;
    writer(first, obj);
    std::istringstream in(first.str());
    AnyObject back = read_any(in);
    std::ostringstream second;
    writer(second, std::get<std::decay_t<decltype(obj)>>(back));
    CHECK(first.str() == second.str());
    return back;
  };
  AnyObject c = roundtrip([](std::ostream& os, const ConvCode& x) { write_code(os, x); },
                          *res.code);
  CHECK(std::get<ConvCode>(c).G == res.code->G);
  AnyObject r = roundtrip(
      [](std::ostream& os, const Realization& x) { write_realization(os, x); },
      *res.realization);
  CHECK(std::get<Realization>(r).A == res.realization->A);
  AnyObject m = roundtrip([](std::ostream& os, const MarkovSeq& x) { write_markov(os, x); },
                          *res.seq);
  CHECK(std::get<MarkovSeq>(m).blocks == res.seq->blocks);
}

TEST_CASE("parse errors carry line numbers") {
  auto expect_error = [](const std::string& text, std::size_t line) {
    std::istringstream in(text);
    try {
      read_any(in);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line == line);
    }
  };
  expect_error("hello\n", 1);
  expect_error("convlab v1\nnot a field\n", 2);
  expect_error("convlab v1\nfield 5 1 0 1\nbogus 1 2 3\n", 3);
  expect_error("convlab v1\nfield 5 1 0 1\nreal 3 1 1\nmat 1 1\nx\n", 5);
  expect_error("convlab v1\nfield 5 1 0 1\nreal 3 1 1\nmat 1 1\n1 2\n", 5);
  // wrong realization shape is reported against its header
  expect_error(
      "convlab v1\nfield 5 1 0 1\nreal 3 1 1\n"
      "mat 1 1\n1\nmat 1 1\n1\nmat 1 1\n1\nmat 2 1\n1\n1\n",
      3);
}

TEST_CASE("markov files must match their derived degree") {
  // (3,1,?) with three blocks claims M = 2, so the derived degree must be 1;
  // an all-zero tail derives degree 0 and is rejected
  std::istringstream in(
      "convlab v1\nfield 5 1 0 1\nmarkov 3 1 2\n"
      "mat 2 1\n1\n1\nmat 2 1\n0\n0\nmat 2 1\n0\n0\n");
  CHECK_THROWS_AS(read_any(in), ParseError);
}

TEST_CASE("default ladders") {
  std::vector<Field> l = SearchConfig::default_ladder();
  REQUIRE(l.size() == 7);
  CHECK(l.front().q() == 4);
  CHECK(l.back().q() == 256);
  std::vector<Field> l3 = SearchConfig::default_ladder(3);
  REQUIRE(l3.size() == 5);  // 3, 9, 27, 81, 243
  CHECK(l3[1].q() == 9);
  CHECK_THROWS_AS(SearchConfig::default_ladder(6), std::invalid_argument);
}

TEST_CASE("search is deterministic and verified end to end") {
  SearchConfig cfg;
  cfg.params = CodeParams::make(3, 1, 1);
  cfg.ladder = SearchConfig::default_ladder();
  cfg.seed = 42;
  SearchResult a = search(cfg);
  SearchResult b = search(cfg);
  REQUIRE(a.success);
  CHECK(render_report(cfg, a) == render_report(cfg, b));
  CHECK(a.oracle.status == OracleReport::Status::Confirmed);
  CHECK(*a.oracle.d_L == 5);
  CHECK(*a.oracle.d_M == 6);
  CHECK(*a.oracle.d_free == 6);
  CHECK(a.mdp_report.ok());
  CHECK(a.smds_report.ok());
  CHECK(verify_realization(*a.realization, *a.seq));
}

TEST_CASE("the r = 0 search path reuses the square certificate") {
  SearchConfig cfg;
  cfg.params = CodeParams::make(2, 1, 2);
  cfg.ladder = SearchConfig::default_ladder();
  cfg.seed = 9;
  cfg.oracle = OracleMode::Auto;
  SearchResult res = search(cfg);
  REQUIRE(res.success);
  CHECK(res.mdp_report.scanned == res.smds_report.scanned);
  CHECK(res.fm_retries_used == 0);
  if (res.oracle.status == OracleReport::Status::Confirmed) {
    CHECK(*res.oracle.d_M == 6);
    CHECK(*res.oracle.d_free == 6);
  }
}

TEST_CASE("a failed search returns counters, never a partial artifact") {
  SearchConfig cfg;
  cfg.params = CodeParams::make(3, 1, 1);
  cfg.ladder = {Field::make(2, 1)};  // MDP is impossible over GF(2)
  cfg.trials = 50;
  cfg.seed = 3;
  SearchResult res = search(cfg);
  CHECK_FALSE(res.success);
  CHECK(res.trials_used == 50);
  CHECK_FALSE(res.code.has_value());
  std::string rep = render_report(cfg, res);
  CHECK(rep.find("status failed") != std::string::npos);
}

TEST_CASE("search config validation") {
  SearchConfig cfg;
  cfg.params = CodeParams::make(3, 1, 1);
  cfg.ladder = {};
  CHECK_THROWS_AS(search(cfg), std::invalid_argument);
  cfg.ladder = {Field::make(5, 1), Field::make(3, 1)};
  CHECK_THROWS_AS(search(cfg), std::invalid_argument);
  cfg.ladder = {Field::make(5, 1)};
  cfg.trials = 0;
  CHECK_THROWS_AS(search(cfg), std::invalid_argument);
}
