// Predicates on ConvCode that need the state-graph machinery: the code is
// rebuilt as the represented code of a minimal realization recovered from its
// Markov data, and the realization sweep supplies the distance.
#include "convlab/convcode.hpp"
#include "convlab/realize.hpp"

namespace convlab {

namespace {

PolyMat column_of(const PolyMat& g, std::size_t j) {
  std::vector<Mat> coeffs;
  for (int t = 0; t <= g.dmax(); ++t) {
    Mat c(g.field(), g.n(), 1);
    for (std::size_t i = 0; i < g.n(); ++i) c.set(i, 0, g.coeff(t).at(i, j));
    coeffs.push_back(std::move(c));
  }
  return PolyMat(g.field(), g.n(), 1, coeffs);
}

bool same_code(const PolyMat& a, const PolyMat& b) {
  if (a.n() != b.n() || a.k() != b.k() || a.field() != b.field()) return false;
  for (std::size_t j = 0; j < a.k(); ++j)
    if (!in_column_space(b, column_of(a, j)) || !in_column_space(a, column_of(b, j)))
      return false;
  return true;
}

// Minimal realization whose represented code equals c; the recovered
// realization is cross-checked by regenerating the code from it.
Realization recover_realization(const ConvCode& c) {
  std::vector<Mat> fs = markov_from_code(c, c.params.M + 1);
  MarkovSeq seq(c.field, c.params, fs);
  Realization r = partial_realization(seq, c.params.delta);
  ConvCode back = code_from_realization(r);
  if (!same_code(back.G, c.G))
    throw std::invalid_argument(
        "code is not recoverable from its truncated Markov data");
  return r;
}

}  // namespace

std::optional<long> free_distance_oracle(const ConvCode& c, const OracleBudget& budget) {
  return free_distance_oracle(recover_realization(c), budget);
}

std::optional<bool> is_mds(const ConvCode& c, const OracleBudget& budget) {
  std::optional<long> d = free_distance_oracle(c, budget);
  if (!d) return std::nullopt;
  return *d == c.params.singleton;
}

}  // namespace convlab
