#pragma once

#include "convlab/lsys.hpp"
#include "convlab/toeplitz_cert.hpp"

namespace convlab {

/// Markov-parameter sequence F_0..F_M of (n-k) x k blocks for a fixed
/// parameter set.
struct MarkovSeq {
  Field field;
  CodeParams params;
  std::vector<Mat> blocks;

  MarkovSeq(Field f, CodeParams p, std::vector<Mat> b);
};

/// Block Hankel matrix with block (s, t) = F_{s+t-1}; x(n-k) rows, yk columns.
/// Needs x, y >= 1 and x+y-1 <= M.
Mat hankel(const MarkovSeq& seq, int x, int y);

/// Degree of a minimal partial realization of the sequence:
/// sum_{x=1}^{M} rank F_{x,M+1-x} - sum_{x=1}^{M-1} rank F_{x,M-x}.
int minimal_degree(const MarkovSeq& seq);

/// ceil(Mk/n); for r >= 1 also asserts the identities
/// floor(delta/(n-k)) = xbar - 1 and (M - xbar)k = delta - r'.
int xbar(const CodeParams& params);

/// Rank pattern report for a certified sequence. Any violation means an
/// upstream certification bug, not bad input data.
struct FM1Report {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks, against a sequence whose first L+1 blocks passed the square
/// Toeplitz-submatrix certification:
/// rank F_{x,M-x} = min{x(n-k), (M-x)k} for x in 1..M-1;
/// rank F_{x,M+1-x} = min{x(n-k), (M+1-x)k} for x != xbar;
/// minimal_degree = rank F_{xbar,M+1-xbar}.
FM1Report check_fm1(const MarkovSeq& seq);

/// Retry budget for the randomized completion step exhausted; the caller
/// should move to a larger field.
struct field_too_small : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Extends a certified prefix F_0..F_L (r >= 1, so M = L+1) by one block F_M:
/// the top r rows are sampled until the top M(n-k)+r rows of T_M pass the
/// square-submatrix certification, the bottom n-k-r rows are the unique linear
/// combinations that keep rank F_{xbar,M+1-xbar} = delta. The result is
/// asserted to pass the surplus-row certification.
MarkovSeq complete_fm(const std::vector<Mat>& prefix, const CodeParams& params,
                      Rng& rng, int max_retries = 64,
                      std::uint64_t ceiling = 10'000'000,
                      int* retries_used = nullptr);

/// Minimal realization of the sequence: D = F_0 and C A^{i-1} B = F_i for
/// 1 <= i <= M, with state dimension delta = minimal_degree(seq). Built by
/// shift realization on the rank factorization of F_{xbar,M+1-xbar}.
Realization partial_realization(const MarkovSeq& seq, int delta);

/// Exact check: markov(R, M+1) equals the sequence block by block, and the
/// realization is reachable and observable.
bool verify_realization(const Realization& r, const MarkovSeq& seq);

/// Markov parameters F_0..F_{count-1} of the code represented by some minimal
/// realization, read off the reversed generator matrix by power-series
/// division. Requires the reversed generator to have an invertible input
/// block at s = 0.
std::vector<Mat> markov_from_code(const ConvCode& c, int count);

}  // namespace convlab
