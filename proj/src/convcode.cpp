#include "convlab/convcode.hpp"

#include <numeric>
#include <stdexcept>

namespace convlab {

CodeParams CodeParams::make(int n, int k, int delta) {
  if (k <= 0 || k >= n) throw std::invalid_argument("code parameters need 0 < k < n");
  if (delta < 0) throw std::invalid_argument("code degree must be nonnegative");
  CodeParams p;
  p.n = n;
  p.k = k;
  p.delta = delta;
  int nk = n - k;
  p.L = delta / k + delta / nk;
  p.M = delta / k + (delta + nk - 1) / nk;
  p.r = delta % nk;
  p.rprime = delta % k;
  p.singleton = static_cast<long>(nk) * (delta / k + 1) + delta + 1;
  // consistency of the derived constants
  if (p.r == 0 ? p.L != p.M : p.M != p.L + 1)
    throw std::logic_error("inconsistent derived code parameters");
  return p;
}

ConvCode::ConvCode(Field f, CodeParams p, PolyMat g)
    : field(std::move(f)), params(p), G(std::move(g)) {
  if (G.field() != field) throw std::invalid_argument("generator matrix field mismatch");
  if (G.n() != static_cast<std::size_t>(params.n) ||
      G.k() != static_cast<std::size_t>(params.k))
    throw std::invalid_argument("generator matrix dimension mismatch");
  if (rank(high_order_matrix(G)) != G.k())
    throw std::invalid_argument("generator matrix is not minimal");
  if (!minors_gcd_is_unit(G))
    throw std::invalid_argument("generator matrix does not generate a module summand");
  std::vector<int> degs = column_degrees(G);
  int degsum = std::accumulate(degs.begin(), degs.end(), 0);
  if (code_degree(G) != params.delta || degsum != params.delta)
    throw std::invalid_argument("generator matrix degree does not match delta");
}

long weight(const PolyMat& v) {
  long w = 0;
  for (const Mat& c : v.coeffs())
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j)
        if (c.at(i, j) != 0) ++w;
  return w;
}

namespace {

// q^e with saturation so budget comparisons never overflow
std::uint64_t sat_pow(std::uint64_t q, std::uint64_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > cap / q) return cap + 1;
    r *= q;
  }
  return r;
}

}  // namespace

std::optional<long> column_distance_oracle(const ConvCode& c, int j,
                                           const OracleBudget& budget) {
  if (j < 0) throw std::invalid_argument("column distance index must be nonnegative");
  const Field& f = c.field;
  std::uint64_t q = f.q();
  std::size_t digits = static_cast<std::size_t>(j + 1) * c.params.k;
  std::uint64_t total = sat_pow(q, digits, budget.max_candidates);
  if (total > budget.max_candidates) return std::nullopt;

  long best = -1;
  std::vector<fe> u(digits, 0);  // u[t*k + i] = entry i of u_t
  // odometer enumeration in enumerate_elements order; digit 0 first
  for (std::uint64_t count = 0; count < total; ++count) {
    bool u0_nonzero = false;
    for (int i = 0; i < c.params.k; ++i) u0_nonzero |= (u[i] != 0);
    if (u0_nonzero) {
      std::vector<Mat> ucoeffs;
      ucoeffs.reserve(j + 1);
      for (int t = 0; t <= j; ++t) {
        Mat m(f, c.params.k, 1);
        for (int i = 0; i < c.params.k; ++i) m.set(i, 0, u[t * c.params.k + i]);
        ucoeffs.push_back(std::move(m));
      }
      PolyMat upoly(f, c.params.k, 1, ucoeffs);
      PolyMat v = truncate(mul_vec(c.G, upoly), static_cast<std::size_t>(j));
      long w = weight(v);
      if (best < 0 || w < best) best = w;
    }
    std::size_t d = 0;
    while (d < digits && ++u[d] == q) u[d++] = 0;
  }
  return best;
}

std::vector<std::optional<long>> column_distance_profile(const ConvCode& c, int jmax,
                                                         const OracleBudget& budget) {
  std::vector<std::optional<long>> profile;
  for (int j = 0; j <= jmax; ++j) profile.push_back(column_distance_oracle(c, j, budget));
  for (int j = 1; j <= jmax; ++j) {
    if (!profile[j] || !profile[j - 1]) continue;
    if (*profile[j] < *profile[j - 1])
      throw std::logic_error("column distance profile is not monotone");
  }
  for (int j = jmax; j >= 0; --j) {
    if (!profile[j]) continue;
    if (*profile[j] == c.params.col_bound(j))
      for (int i = 0; i < j; ++i)
        if (profile[i] && *profile[i] != c.params.col_bound(i))
          throw std::logic_error("column distance bound attainment did not propagate");
  }
  return profile;
}

std::optional<bool> is_mdp(const ConvCode& c, const OracleBudget& budget) {
  std::optional<long> d = column_distance_oracle(c, c.params.L, budget);
  if (!d) return std::nullopt;
  return *d == c.params.col_bound(c.params.L);
}

std::optional<bool> is_smds(const ConvCode& c, const OracleBudget& budget) {
  std::optional<long> d = column_distance_oracle(c, c.params.M, budget);
  if (!d) return std::nullopt;
  return *d == c.params.singleton;
}

}  // namespace convlab
