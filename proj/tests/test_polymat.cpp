#include "doctest.h"

#include "test_util.hpp"

using namespace convlab;
using testutil::random_minimal_generator;

namespace {

Poly random_poly(const Field& f, int maxdeg, Rng& rng) {
  Poly p(rng.below(maxdeg + 1) + 1);
  for (fe& c : p) c = f.random_element(rng);
  return polyops::trim(std::move(p));
}

PolyMat column_of(const PolyMat& g, std::size_t j) {
  std::vector<Mat> coeffs;
  for (int t = 0; t <= g.dmax(); ++t) {
    Mat c(g.field(), g.n(), 1);
    for (std::size_t i = 0; i < g.n(); ++i) c.set(i, 0, g.coeff(t).at(i, j));
    coeffs.push_back(std::move(c));
  }
  return PolyMat(g.field(), g.n(), 1, coeffs);
}

}  // namespace

TEST_CASE("scalar polynomial division and gcd") {
  Field f = Field::make(5, 1);
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    Poly a = random_poly(f, 6, rng);
    Poly b = random_poly(f, 4, rng);
    if (polyops::deg(b) < 0) continue;
    auto [q, r] = polyops::divmod(f, a, b);
    CHECK(polyops::add(f, polyops::mul(f, q, b), r) == a);
    CHECK(polyops::deg(r) < polyops::deg(b));
    Poly g = polyops::gcd(f, a, b);
    if (polyops::deg(g) >= 0) {
      CHECK(g.back() == f.one());  // monic
      CHECK(polyops::deg(polyops::divmod(f, a, g).second) < 0);
      CHECK(polyops::deg(polyops::divmod(f, b, g).second) < 0);
    }
  }
}

TEST_CASE("construction trims trailing zero coefficients") {
  Field f = Field::make(2, 1);
  Mat m(f, 2, 1);
  m.set(0, 0, 1);
  PolyMat g(f, 2, 1, {m, Mat(f, 2, 1), Mat(f, 2, 1)});
  CHECK(g.dmax() == 0);
  CHECK(g.coeff(5).is_zero());
  CHECK(g.entry(0, 0) == Poly{1});
  CHECK(g.entry(1, 0).empty());
}

TEST_CASE("column degrees, high-order and constant matrices on a pinned example") {
  // G(s) = (1, s, 1+s)^T over GF(2): degree-1 single column
  Field f = Field::make(2, 1);
  Mat g0(f, 3, 1), g1(f, 3, 1);
  g0.set(0, 0, 1);
  g0.set(2, 0, 1);
  g1.set(1, 0, 1);
  g1.set(2, 0, 1);
  PolyMat g(f, 3, 1, {g0, g1});
  CHECK(column_degrees(g) == std::vector<int>{1});
  CHECK(high_order_matrix(g) == g1);
  CHECK(constant_matrix(g) == g0);
  CHECK(code_degree(g) == 1);
  CHECK(full_column_rank(g));
  CHECK(minors_gcd_is_unit(g));
}

TEST_CASE("maximal minor of a 2x2 polynomial block") {
  // G(s) = [[1, s], [s, 1]] over GF(3): det = 1 - s^2
  Field f = Field::make(3, 1);
  Mat g0(f, 2, 2), g1(f, 2, 2);
  g0.set(0, 0, 1);
  g0.set(1, 1, 1);
  g1.set(0, 1, 1);
  g1.set(1, 0, 1);
  PolyMat g(f, 2, 2, {g0, g1});
  CHECK(maximal_minor(g, {1, 2}) == Poly{1, 0, 2});
  CHECK(code_degree(g) == 2);
}

TEST_CASE("minimalize preserves the column space and reaches full high-order rank") {
  Field f = Field::make(5, 1);
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    PolyMat g = random_minimal_generator(f, 4, 2, 2, rng);
    // break column-reducedness: col2 += s^2 * col1 (unimodular right factor)
    std::vector<Mat> coeffs;
    for (int t = 0; t <= g.dmax() + 2; ++t) coeffs.push_back(g.coeff(t));
    for (int t = 0; t <= g.dmax(); ++t)
      for (std::size_t r = 0; r < g.n(); ++r)
        coeffs[t + 2].set(r, 1, f.add(coeffs[t + 2].at(r, 1), g.coeff(t).at(r, 0)));
    PolyMat messy(f, 4, 2, coeffs);
    PolyMat back = minimalize(messy);
    CHECK(rank(high_order_matrix(back)) == 2);
    CHECK(code_degree(back) == code_degree(g));
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(in_column_space(back, column_of(g, j)));
      CHECK(in_column_space(g, column_of(back, j)));
    }
  }
}

TEST_CASE("reversal is an involution preserving column degrees") {
  Field f = Field::make(2, 2);
  Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    PolyMat g = random_minimal_generator(f, 3, 2, 3, rng);
    PolyMat rev = reverse(g);
    CHECK(column_degrees(rev) == column_degrees(g));
    CHECK(reverse(rev) == g);
    // constant matrix of the reversal is the high-order matrix of the source
    CHECK(constant_matrix(rev) == high_order_matrix(g));
  }
}

TEST_CASE("vector product and truncation") {
  Field f = Field::make(3, 1);
  Mat g0(f, 2, 1), g1(f, 2, 1);
  g0.set(0, 0, 1);
  g1.set(1, 0, 2);
  PolyMat g(f, 2, 1, {g0, g1});  // (1, 2s)^T
  Mat u0(f, 1, 1), u1(f, 1, 1);
  u0.set(0, 0, 2);
  u1.set(0, 0, 1);
  PolyMat u(f, 1, 1, {u0, u1});  // 2 + s
  PolyMat v = mul_vec(g, u);     // (2+s, 4s+2s^2) = (2+s, s+2s^2)
  CHECK(v.entry(0, 0) == Poly{2, 1});
  CHECK(v.entry(1, 0) == Poly{0, 1, 2});
  PolyMat tv = truncate(v, 1);
  CHECK(tv.entry(1, 0) == Poly{0, 1});
}

TEST_CASE("in_column_space accepts codewords and rejects outsiders") {
  Field f = Field::make(5, 1);
  Rng rng(53);
  PolyMat g = random_minimal_generator(f, 3, 1, 2, rng);
  Mat u0(f, 1, 1), u1(f, 1, 1);
  u0.set(0, 0, 3);
  u1.set(0, 0, 4);
  PolyMat u(f, 1, 1, {u0, u1});
  PolyMat w = mul_vec(g, u);
  CHECK(in_column_space(g, w));
  // perturb one coefficient out of the module
  std::vector<Mat> coeffs;
  for (int t = 0; t <= w.dmax(); ++t) coeffs.push_back(w.coeff(t));
  coeffs[0].set(1, 0, f.add(coeffs[0].at(1, 0), 1));
  PolyMat bad(f, 3, 1, coeffs);
  CHECK_FALSE(in_column_space(g, bad));
}

TEST_CASE("degenerate inputs are rejected") {
  Field f = Field::make(2, 1);
  PolyMat zero(f, 2, 1, {Mat(f, 2, 1)});
  CHECK_THROWS_AS(column_degrees(zero), std::invalid_argument);
  CHECK_FALSE(full_column_rank(zero));
  CHECK_THROWS_AS(code_degree(zero), std::invalid_argument);
  CHECK_THROWS_AS(minors_gcd_is_unit(zero), std::invalid_argument);
}
