#pragma once

#include <optional>

#include "convlab/polymat.hpp"

namespace convlab {

/// Code parameters (n, k, delta) with the derived constants used by the
/// column-distance machinery.
struct CodeParams {
  int n = 0, k = 0, delta = 0;
  int L = 0;        // floor(delta/k) + floor(delta/(n-k))
  int M = 0;        // floor(delta/k) + ceil(delta/(n-k))
  int r = 0;        // delta mod (n-k)
  int rprime = 0;   // delta mod k
  long singleton = 0;  // (n-k)(floor(delta/k)+1) + delta + 1

  static CodeParams make(int n, int k, int delta);

  long col_bound(int j) const { return static_cast<long>(n - k) * (j + 1) + 1; }

  bool operator==(const CodeParams& o) const {
    return n == o.n && k == o.k && delta == o.delta;
  }
};

/// A rate k/n degree-delta convolutional code, held as a minimal generator
/// matrix whose maximal-minor gcd is a unit. The constructor checks all of
/// that and rejects anything else.
struct ConvCode {
  Field field;
  CodeParams params;
  PolyMat G;

  ConvCode(Field f, CodeParams p, PolyMat g);
};

/// Accumulated Hamming weight: nonzero entries over all coefficient vectors.
long weight(const PolyMat& v);

/// Enumeration limits for the brute-force oracles. Exceeding a budget yields
/// an explicit "infeasible" (nullopt), never an approximate answer.
struct OracleBudget {
  std::uint64_t max_candidates = std::uint64_t{1} << 26;
  std::uint64_t max_states = std::uint64_t{1} << 22;
};

/// Exact j-th column distance by exhausting all message prefixes
/// (u_0, ..., u_j) with u_0 != 0.
std::optional<long> column_distance_oracle(const ConvCode& c, int j,
                                           const OracleBudget& budget = {});

/// d_0 .. d_jmax; verifies monotonicity and downward propagation of bound
/// attainment on the computed prefix.
std::vector<std::optional<long>> column_distance_profile(const ConvCode& c, int jmax,
                                                         const OracleBudget& budget = {});

std::optional<bool> is_mdp(const ConvCode& c, const OracleBudget& budget = {});
std::optional<bool> is_smds(const ConvCode& c, const OracleBudget& budget = {});

/// Needs the state-graph sweep, so the code must be recoverable as the code
/// represented by a minimal realization (defined in convcode_pred.cpp).
std::optional<bool> is_mds(const ConvCode& c, const OracleBudget& budget = {});
std::optional<long> free_distance_oracle(const ConvCode& c, const OracleBudget& budget = {});

}  // namespace convlab
