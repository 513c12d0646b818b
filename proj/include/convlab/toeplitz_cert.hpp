#pragma once

#include <functional>

#include "convlab/convcode.hpp"

namespace convlab {

/// Lower-triangular block Toeplitz matrix built from blocks F_0..F_j:
/// dense block (s, t) = F_{s-t} for s >= t, zero above the block diagonal.
struct ToeplitzLT {
  std::vector<Mat> blocks;  // F_0..F_j, each (n-k) x k
  int j = 0;
  Mat dense;

  static ToeplitzLT build(const std::vector<Mat>& blocks);
};

/// Row/column selection of the dense matrix, 1-based strictly increasing;
/// rows carry a surplus c >= 0 over the columns.
struct SubmatrixIndex {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  std::size_t surplus() const { return rows.size() - cols.size(); }
};

/// Shared-indeterminate index of a dense position (1-based): repeated
/// Toeplitz blocks map to the same indeterminate, structural zeros to none.
std::optional<std::size_t> indet_index(std::size_t row, std::size_t col, int nk, int k);

/// Combinatorial trivial-rank-deficiency test:
/// true iff j_t > ceil(i_{t+c} / (n-k)) * k for some t.
bool is_trd(const SubmatrixIndex& idx, int nk, int k);

/// Randomized symbolic-determinant test for a square index: substitutes
/// independent uniform values from a large prime field for the shared
/// indeterminates and reports "identically zero" iff the determinant
/// vanishes in every trial (one-sided error by polynomial identity testing).
bool symbolic_zero_oracle(const SubmatrixIndex& idx, int nk, int k, int j,
                          int trials = 16, std::uint64_t seed = 0x5eed);

/// Exhaustive, duplicate-free stream of all (l+c) x l index selections of a
/// rows x cols dense matrix with 1 <= l <= min(rows, cols) - c, l ascending,
/// then rows and columns in lexicographic order. TRD pruning belongs to the
/// consumer. (Certification scans the wider range l <= min(rows - c, cols)
/// internally.)
void enumerate_submatrices(std::size_t rows, std::size_t cols, std::size_t c,
                           const std::function<void(const SubmatrixIndex&)>& fn);

struct CertReport {
  enum class Status { Pass, Fail, Refused };
  Status status = Status::Pass;
  std::optional<SubmatrixIndex> witness;  // first failure, minimal l, lex order
  std::uint64_t scanned = 0;              // non-TRD indices rank-checked
  std::uint64_t pruned = 0;               // TRD indices skipped

  bool ok() const { return status == Status::Pass; }
};

/// Core scan: every (l+c) x l index within the top `row_limit` dense rows of
/// T_j that is not trivially rank deficient must have full rank. Refuses when
/// the surviving index count exceeds `ceiling`.
CertReport certify_submatrices(const std::vector<Mat>& blocks, int nk, int k,
                               std::size_t c, std::size_t row_limit,
                               std::uint64_t ceiling = 10'000'000);

/// MDP criterion on T_L (square submatrices, c = 0). Block count must be L+1.
CertReport certify_mdp(const std::vector<Mat>& blocks, const CodeParams& params,
                       std::uint64_t ceiling = 10'000'000);

/// sMDS criterion on T_M with row surplus c = n-k-r; for r = 0 this delegates
/// to the MDP criterion (L = M). Block count must be M+1.
CertReport certify_smds(const std::vector<Mat>& blocks, const CodeParams& params,
                        std::uint64_t ceiling = 10'000'000);

}  // namespace convlab
