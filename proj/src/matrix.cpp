#include "convlab/matrix.hpp"

#include <stdexcept>

namespace convlab {

namespace {

void require_same_field(const Mat& a, const Mat& b) {
  if (a.field() != b.field())
    throw std::invalid_argument("matrix operands belong to different fields");
}

}  // namespace

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, f.one());
  return m;
}

bool Mat::is_zero() const {
  for (fe v : e_)
    if (v != 0) return false;
  return true;
}

Mat add(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("dimension mismatch in matrix add");
  Mat r(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r.set(i, j, a.field().add(a.at(i, j), b.at(i, j)));
  return r;
}

Mat neg(const Mat& a) {
  Mat r(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a.field().neg(a.at(i, j)));
  return r;
}

Mat sub(const Mat& a, const Mat& b) { return add(a, neg(b)); }

Mat mul(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in matrix mul");
  const Field& f = a.field();
  Mat r(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t t = 0; t < a.cols(); ++t) {
      fe v = a.at(i, t);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        r.set(i, j, f.add(r.at(i, j), f.mul(v, b.at(t, j))));
    }
  return r;
}

Mat scalar_mul(fe c, const Mat& a) {
  Mat r(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a.field().mul(c, a.at(i, j)));
  return r;
}

Mat mat_pow(const Mat& a, std::uint64_t e) {
  if (a.rows() != a.cols()) throw std::invalid_argument("mat_pow of non-square matrix");
  Mat r = Mat::identity(a.field(), a.rows());
  Mat base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Mat transpose(const Mat& a) {
  Mat r(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.set(j, i, a.at(i, j));
  return r;
}

Mat hstack(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Mat r(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
  }
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Mat r(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) r.set(i, j, a.at(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i) r.set(a.rows() + i, j, b.at(i, j));
  }
  return r;
}

Mat block(const Mat& a, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
  if (r1 > a.rows() || c1 > a.cols() || r0 > r1 || c0 > c1)
    throw std::invalid_argument("block bounds out of range");
  Mat r(a.field(), r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) r.set(i - r0, j - c0, a.at(i, j));
  return r;
}

Mat submatrix(const Mat& a, const std::vector<std::size_t>& row_idx,
              const std::vector<std::size_t>& col_idx) {
  auto validate = [](const std::vector<std::size_t>& idx, std::size_t limit) {
    std::size_t prev = 0;
    for (std::size_t v : idx) {
      if (v < 1 || v > limit) throw std::invalid_argument("submatrix index out of range");
      if (v <= prev) throw std::invalid_argument("submatrix indices not strictly increasing");
      prev = v;
    }
  };
  validate(row_idx, a.rows());
  validate(col_idx, a.cols());
  Mat r(a.field(), row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      r.set(i, j, a.at(row_idx[i] - 1, col_idx[j] - 1));
  return r;
}

std::pair<Mat, std::vector<std::size_t>> rref(const Mat& a) {
  const Field& f = a.field();
  Mat r = a;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < r.rows() && r.at(sel, col) == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != lead)
      for (std::size_t j = 0; j < r.cols(); ++j) {
        fe t = r.at(sel, j);
        r.set(sel, j, r.at(lead, j));
        r.set(lead, j, t);
      }
    fe piv_inv = f.inv(r.at(lead, col));
    for (std::size_t j = col; j < r.cols(); ++j) r.set(lead, j, f.mul(piv_inv, r.at(lead, j)));
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead) continue;
      fe factor = r.at(i, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < r.cols(); ++j)
        r.set(i, j, f.sub(r.at(i, j), f.mul(factor, r.at(lead, j))));
    }
    pivots.push_back(col);
    ++lead;
  }
  return {r, pivots};
}

std::size_t rank(const Mat& a) { return rref(a).second.size(); }

std::vector<Mat> right_kernel_basis(const Mat& a) {
  auto [r, pivots] = rref(a);
  const Field& f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Mat> basis;
  for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Mat v(f, a.cols(), 1);
    v.set(free_col, 0, f.one());
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      v.set(pivots[pi], 0, f.neg(r.at(pi, free_col)));
    basis.push_back(std::move(v));
  }
  return basis;
}

fe det(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const Field& f = a.field();
  Mat r = a;
  std::size_t n = r.rows();
  bool negate = false;
  fe d = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && r.at(sel, col) == 0) ++sel;
    if (sel == n) return f.zero();
    if (sel != col) {
      negate = !negate;
      for (std::size_t j = 0; j < n; ++j) {
        fe t = r.at(sel, j);
        r.set(sel, j, r.at(col, j));
        r.set(col, j, t);
      }
    }
    fe piv = r.at(col, col);
    d = f.mul(d, piv);
    fe piv_inv = f.inv(piv);
    for (std::size_t i = col + 1; i < n; ++i) {
      fe factor = f.mul(r.at(i, col), piv_inv);
      if (factor == 0) continue;
      for (std::size_t j = col; j < n; ++j)
        r.set(i, j, f.sub(r.at(i, j), f.mul(factor, r.at(col, j))));
    }
  }
  return negate ? f.neg(d) : d;
}

std::optional<Mat> solve_right(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_right row mismatch");
  auto [r, pivots] = rref(hstack(a, b));
  // consistency: no pivot may fall inside the b-block
  for (std::size_t c : pivots)
    if (c >= a.cols()) return std::nullopt;
  Mat x(a.field(), a.cols(), b.cols());
  for (std::size_t pi = 0; pi < pivots.size(); ++pi)
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(pivots[pi], j, r.at(pi, a.cols() + j));
  return x;
}

std::optional<Mat> solve_left(const Mat& r, const Mat& v) {
  auto xt = solve_right(transpose(r), transpose(v));
  if (!xt) return std::nullopt;
  return transpose(*xt);
}

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  if (rank(a) != a.rows()) return std::nullopt;
  return solve_right(a, Mat::identity(a.field(), a.rows()));
}

}  // namespace convlab
