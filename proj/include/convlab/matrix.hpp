#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "convlab/gf.hpp"

namespace convlab {

/// Dense matrix over a finite field, row-major.
class Mat {
 public:
  Mat(Field f, std::size_t rows, std::size_t cols)
      : field_(std::move(f)), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

  static Mat identity(const Field& f, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  fe at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, fe v) { e_[r * cols_ + c] = v; }

  bool is_zero() const;

  bool operator==(const Mat& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<fe> e_;
};

Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Mat neg(const Mat& a);
Mat mul(const Mat& a, const Mat& b);
Mat scalar_mul(fe c, const Mat& a);
Mat mat_pow(const Mat& a, std::uint64_t e);
Mat transpose(const Mat& a);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

/// Rows [r0, r1) and columns [c0, c1), 0-based half-open.
Mat block(const Mat& a, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1);

/// 1-based, strictly increasing row and column selections.
Mat submatrix(const Mat& a, const std::vector<std::size_t>& row_idx,
              const std::vector<std::size_t>& col_idx);

std::size_t rank(const Mat& a);

/// Reduced row echelon form and the pivot columns (0-based). Column order is
/// never permuted, so pivot columns are reported faithfully.
std::pair<Mat, std::vector<std::size_t>> rref(const Mat& a);

/// Basis of { v : a v = 0 } as column vectors; size = cols - rank.
std::vector<Mat> right_kernel_basis(const Mat& a);

fe det(const Mat& a);

/// Solves a x = b (b may have several columns); nullopt when inconsistent.
std::optional<Mat> solve_right(const Mat& a, const Mat& b);

/// Solves x r = v for a coefficient row (v a row vector or stack of rows);
/// nullopt when v is outside the row space of r.
std::optional<Mat> solve_left(const Mat& r, const Mat& v);

/// True matrix inverse; nullopt when singular.
std::optional<Mat> inverse(const Mat& a);

}  // namespace convlab
