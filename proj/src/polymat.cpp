#include "convlab/polymat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace convlab {

namespace polyops {

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int deg(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

Poly add(const Field& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    fe av = i < a.size() ? a[i] : 0;
    fe bv = i < b.size() ? b[i] : 0;
    r[i] = f.add(av, bv);
  }
  return trim(std::move(r));
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  Poly nb(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) nb[i] = f.neg(b[i]);
  return add(f, a, nb);
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (deg(a) < 0 || deg(b) < 0) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  return trim(std::move(r));
}

std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b) {
  int db = deg(b);
  if (db < 0) throw std::invalid_argument("polynomial division by zero");
  Poly rem = trim(a);
  Poly quot(rem.size() > static_cast<std::size_t>(db) ? rem.size() - db : 0, 0);
  fe lead_inv = f.inv(b[db]);
  for (int da = deg(rem); da >= db; da = deg(rem)) {
    fe c = f.mul(rem[da], lead_inv);
    quot[da - db] = c;
    for (int i = 0; i <= db; ++i)
      rem[da - db + i] = f.sub(rem[da - db + i], f.mul(c, b[i]));
  }
  return {trim(std::move(quot)), trim(std::move(rem))};
}

Poly gcd(const Field& f, Poly a, Poly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (deg(b) >= 0) {
    Poly r = divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  int d = deg(a);
  if (d >= 0) {
    fe c = f.inv(a[d]);
    for (fe& v : a) v = f.mul(c, v);
  }
  return a;
}

}  // namespace polyops

PolyMat::PolyMat(Field f, std::size_t n, std::size_t k, std::vector<Mat> coeffs)
    : field_(std::move(f)), n_(n), k_(k), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back(field_, n_, k_);
  for (const Mat& m : coeffs_) {
    if (m.rows() != n_ || m.cols() != k_)
      throw std::invalid_argument("polynomial matrix coefficient dimension mismatch");
    if (m.field() != field_)
      throw std::invalid_argument("polynomial matrix coefficient field mismatch");
  }
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PolyMat PolyMat::constant(const Mat& m) {
  return PolyMat(m.field(), m.rows(), m.cols(), {m});
}

Mat PolyMat::coeff(std::size_t t) const {
  if (t < coeffs_.size()) return coeffs_[t];
  return Mat(field_, n_, k_);
}

Poly PolyMat::entry(std::size_t i, std::size_t j) const {
  Poly p(coeffs_.size());
  for (std::size_t t = 0; t < coeffs_.size(); ++t) p[t] = coeffs_[t].at(i, j);
  return polyops::trim(std::move(p));
}

bool PolyMat::operator==(const PolyMat& o) const {
  return field_ == o.field_ && n_ == o.n_ && k_ == o.k_ && coeffs_ == o.coeffs_;
}

std::vector<int> column_degrees(const PolyMat& g) {
  std::vector<int> degs(g.k(), -1);
  for (std::size_t j = 0; j < g.k(); ++j) {
    for (std::size_t i = 0; i < g.n(); ++i)
      degs[j] = std::max(degs[j], polyops::deg(g.entry(i, j)));
    if (degs[j] < 0)
      throw std::invalid_argument("column degree undefined for a zero column");
  }
  return degs;
}

Mat high_order_matrix(const PolyMat& g) {
  std::vector<int> degs = column_degrees(g);
  Mat r(g.field(), g.n(), g.k());
  for (std::size_t j = 0; j < g.k(); ++j) {
    Mat c = g.coeff(static_cast<std::size_t>(degs[j]));
    for (std::size_t i = 0; i < g.n(); ++i) r.set(i, j, c.at(i, j));
  }
  return r;
}

Mat constant_matrix(const PolyMat& g) { return g.coeff(0); }

namespace {

Poly poly_det(const Field& f, const std::vector<std::vector<Poly>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly acc;
  for (std::size_t i = 0; i < n; ++i) {
    if (polyops::deg(m[i][0]) < 0) continue;
    std::vector<std::vector<Poly>> minor_rows;
    minor_rows.reserve(n - 1);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      std::vector<Poly> row(m[r].begin() + 1, m[r].end());
      minor_rows.push_back(std::move(row));
    }
    Poly term = polyops::mul(f, m[i][0], poly_det(f, minor_rows));
    if (i % 2 == 0)
      acc = polyops::add(f, acc, term);
    else
      acc = polyops::sub(f, acc, term);
  }
  return acc;
}

}  // namespace

Poly maximal_minor(const PolyMat& g, const std::vector<std::size_t>& row_idx) {
  if (row_idx.size() != g.k())
    throw std::invalid_argument("maximal minor needs exactly k rows");
  std::vector<std::vector<Poly>> m(g.k(), std::vector<Poly>(g.k()));
  for (std::size_t i = 0; i < g.k(); ++i) {
    std::size_t r = row_idx[i];
    if (r < 1 || r > g.n()) throw std::invalid_argument("minor row index out of range");
    for (std::size_t j = 0; j < g.k(); ++j) m[i][j] = g.entry(r - 1, j);
  }
  return poly_det(g.field(), m);
}

namespace {

template <typename Fn>
void for_each_row_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 1);
  for (;;) {
    fn(idx);
    // next combination in lexicographic order
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] < n - (k - 1 - i)) {
        ++idx[i];
        for (std::size_t t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace

bool full_column_rank(const PolyMat& g) {
  bool found = false;
  for_each_row_subset(g.n(), g.k(), [&](const std::vector<std::size_t>& rows) {
    if (!found && polyops::deg(maximal_minor(g, rows)) >= 0) found = true;
  });
  return found;
}

int code_degree(const PolyMat& g) {
  int best = -1;
  for_each_row_subset(g.n(), g.k(), [&](const std::vector<std::size_t>& rows) {
    best = std::max(best, polyops::deg(maximal_minor(g, rows)));
  });
  if (best < 0) throw std::invalid_argument("code degree of a rank-deficient matrix");
  return best;
}

bool minors_gcd_is_unit(const PolyMat& g) {
  Poly acc;
  for_each_row_subset(g.n(), g.k(), [&](const std::vector<std::size_t>& rows) {
    acc = polyops::gcd(g.field(), acc, maximal_minor(g, rows));
  });
  if (polyops::deg(acc) < 0)
    throw std::invalid_argument("minor gcd of a rank-deficient matrix");
  return polyops::deg(acc) == 0;
}

PolyMat minimalize(const PolyMat& g) {
  if (!full_column_rank(g)) throw std::invalid_argument("minimalize needs full column rank");
  const Field& f = g.field();
  PolyMat cur = g;
  for (;;) {
    std::vector<int> degs = column_degrees(cur);
    Mat ginf = high_order_matrix(cur);
    std::vector<Mat> kernel = right_kernel_basis(ginf);
    if (kernel.empty()) return cur;
    const Mat& w = kernel.front();
    // cancel the leading coefficient of the highest-degree involved column
    std::size_t target = 0;
    int dmax = -1;
    for (std::size_t j = 0; j < cur.k(); ++j)
      if (w.at(j, 0) != 0 && degs[j] > dmax) {
        dmax = degs[j];
        target = j;
      }
    fe wt_inv = f.inv(w.at(target, 0));
    std::vector<Mat> coeffs = cur.coeffs();
    std::vector<Mat> out;
    int out_deg = dmax;
    out.reserve(out_deg + 1);
    for (int t = 0; t <= out_deg; ++t) out.push_back(coeffs.size() > static_cast<std::size_t>(t) ? coeffs[t] : Mat(f, cur.n(), cur.k()));
    // column target <- sum_j (w_j / w_target) s^{dmax - deg_j} column_j
    for (int t = 0; t <= out_deg; ++t)
      for (std::size_t i = 0; i < cur.n(); ++i) out[t].set(i, target, 0);
    for (std::size_t j = 0; j < cur.k(); ++j) {
      fe c = f.mul(wt_inv, w.at(j, 0));
      if (c == 0) continue;
      int shift = dmax - degs[j];
      for (std::size_t i = 0; i < cur.n(); ++i) {
        Poly e = cur.entry(i, j);
        for (std::size_t t = 0; t < e.size(); ++t) {
          int pos = static_cast<int>(t) + shift;
          out[pos].set(i, target, f.add(out[pos].at(i, target), f.mul(c, e[t])));
        }
      }
    }
    PolyMat next(f, cur.n(), cur.k(), out);
    // the leading coefficient of the target column cancels, so the degree sum
    // strictly decreases and the loop terminates
    cur = std::move(next);
  }
}

PolyMat reverse(const PolyMat& g) {
  if (rank(high_order_matrix(g)) != g.k())
    throw std::invalid_argument("reverse needs a minimal generator matrix");
  if (!minors_gcd_is_unit(g))
    throw std::invalid_argument("reverse needs a generator matrix of a module summand");
  std::vector<int> degs = column_degrees(g);
  int dmax = *std::max_element(degs.begin(), degs.end());
  std::vector<Mat> out(dmax + 1, Mat(g.field(), g.n(), g.k()));
  for (std::size_t j = 0; j < g.k(); ++j)
    for (int t = 0; t <= degs[j]; ++t) {
      Mat c = g.coeff(static_cast<std::size_t>(degs[j] - t));
      for (std::size_t i = 0; i < g.n(); ++i) out[t].set(i, j, c.at(i, j));
    }
  return PolyMat(g.field(), g.n(), g.k(), out);
}

PolyMat mul_vec(const PolyMat& g, const PolyMat& u) {
  if (u.k() != 1 || u.n() != g.k())
    throw std::invalid_argument("mul_vec needs a k x 1 polynomial vector");
  if (g.field() != u.field()) throw std::invalid_argument("mul_vec field mismatch");
  int dg = g.dmax(), du = u.dmax();
  std::vector<Mat> out(dg + du + 1, Mat(g.field(), g.n(), 1));
  for (int a = 0; a <= dg; ++a)
    for (int b = 0; b <= du; ++b) {
      Mat term = mul(g.coeff(a), u.coeff(b));
      out[a + b] = add(out[a + b], term);
    }
  return PolyMat(g.field(), g.n(), 1, out);
}

PolyMat truncate(const PolyMat& v, std::size_t j) {
  std::vector<Mat> out;
  for (std::size_t t = 0; t <= j; ++t) out.push_back(v.coeff(t));
  return PolyMat(v.field(), v.n(), v.k(), out);
}

bool in_column_space(const PolyMat& g, const PolyMat& w) {
  if (w.k() != 1 || w.n() != g.n())
    throw std::invalid_argument("in_column_space needs an n x 1 vector");
  const Field& f = g.field();
  int dw = w.dmax();
  int dz = dw;  // degree bound valid for column-reduced g
  int rows_deg = std::max(g.dmax() + dz, dw);
  std::size_t unknowns = g.k() * static_cast<std::size_t>(dz + 1);
  Mat a(f, g.n() * static_cast<std::size_t>(rows_deg + 1), unknowns);
  Mat b(f, a.rows(), 1);
  for (int t = 0; t <= rows_deg; ++t) {
    Mat wt = w.coeff(static_cast<std::size_t>(t));
    for (std::size_t i = 0; i < g.n(); ++i)
      b.set(static_cast<std::size_t>(t) * g.n() + i, 0, wt.at(i, 0));
    for (int tz = 0; tz <= dz; ++tz) {
      int tg = t - tz;
      if (tg < 0 || tg > g.dmax()) continue;
      Mat gc = g.coeff(static_cast<std::size_t>(tg));
      for (std::size_t i = 0; i < g.n(); ++i)
        for (std::size_t j = 0; j < g.k(); ++j)
          a.set(static_cast<std::size_t>(t) * g.n() + i,
                static_cast<std::size_t>(tz) * g.k() + j, gc.at(i, j));
    }
  }
  return solve_right(a, b).has_value();
}

}  // namespace convlab
