#pragma once

#include <vector>

#include "convlab/matrix.hpp"

namespace convlab {

/// Scalar polynomial over a finite field, coefficients little-endian.
/// Normalized form has no trailing zeros; the zero polynomial is empty.
using Poly = std::vector<fe>;

namespace polyops {

Poly trim(Poly a);
int deg(const Poly& a);  // -1 for the zero polynomial
Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
/// (quotient, remainder); b must be nonzero.
std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Field& f, Poly a, Poly b);

}  // namespace polyops

/// An n x k polynomial matrix G(s) = sum_t coeff(t) s^t over a finite field.
class PolyMat {
 public:
  /// Trailing all-zero coefficient matrices are trimmed on construction.
  PolyMat(Field f, std::size_t n, std::size_t k, std::vector<Mat> coeffs);

  static PolyMat constant(const Mat& m);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  const Field& field() const { return field_; }
  int dmax() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Mat>& coeffs() const { return coeffs_; }

  /// Coefficient of s^t; zero matrix beyond dmax.
  Mat coeff(std::size_t t) const;

  Poly entry(std::size_t i, std::size_t j) const;

  bool operator==(const PolyMat& o) const;
  bool operator!=(const PolyMat& o) const { return !(*this == o); }

 private:
  Field field_;
  std::size_t n_, k_;
  std::vector<Mat> coeffs_;
};

/// Max entry degree per column. Throws if some column is zero.
std::vector<int> column_degrees(const PolyMat& g);

/// G_inf: column j holds the coefficients of s^{delta_j} in column j.
Mat high_order_matrix(const PolyMat& g);

/// G(0).
Mat constant_matrix(const PolyMat& g);

/// Determinant of the square polynomial matrix formed by the selected rows
/// (1-based, strictly increasing, size k).
Poly maximal_minor(const PolyMat& g, const std::vector<std::size_t>& row_idx);

/// True iff some k x k minor is a nonzero polynomial.
bool full_column_rank(const PolyMat& g);

/// Max degree among the k x k minors. Throws on rank-deficient input.
int code_degree(const PolyMat& g);

/// True iff the gcd of all k x k minors is a unit. Throws on rank-deficient input.
bool minors_gcd_is_unit(const PolyMat& g);

/// Column reduction by unimodular right factors until the high-order
/// coefficient matrix has full column rank. Column space is unchanged.
PolyMat minimalize(const PolyMat& g);

/// Per-column coefficient reversal with that column's degree. Requires a
/// minimal generator matrix whose maximal-minor gcd is a unit; an involution
/// on that domain.
PolyMat reverse(const PolyMat& g);

/// G(s) * u(s) for a k x 1 polynomial vector u.
PolyMat mul_vec(const PolyMat& g, const PolyMat& u);

/// Keeps the coefficients of s^0..s^j.
PolyMat truncate(const PolyMat& v, std::size_t j);

/// True iff w(s) = g(s) z(s) has a polynomial solution z with
/// deg z <= deg w; decided by exact linear elimination on coefficients.
bool in_column_space(const PolyMat& g, const PolyMat& w);

}  // namespace convlab
