#include "convlab/toeplitz_cert.hpp"

#include <stdexcept>

namespace convlab {

ToeplitzLT ToeplitzLT::build(const std::vector<Mat>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("at least one block required");
  const Field& f = blocks[0].field();
  std::size_t nk = blocks[0].rows();
  std::size_t k = blocks[0].cols();
  for (const Mat& b : blocks)
    if (b.rows() != nk || b.cols() != k || b.field() != f)
      throw std::invalid_argument("ragged Toeplitz blocks");
  int j = static_cast<int>(blocks.size()) - 1;
  Mat dense(f, (j + 1) * nk, (j + 1) * k);
  for (int br = 0; br <= j; ++br)
    for (int bc = 0; bc <= br; ++bc) {
      const Mat& blk = blocks[br - bc];
      for (std::size_t i = 0; i < nk; ++i)
        for (std::size_t jj = 0; jj < k; ++jj)
          dense.set(br * nk + i, bc * k + jj, blk.at(i, jj));
    }
  return ToeplitzLT{blocks, j, std::move(dense)};
}

std::optional<std::size_t> indet_index(std::size_t row, std::size_t col, int nk, int k) {
  std::size_t br = (row - 1) / nk;
  std::size_t bc = (col - 1) / k;
  if (bc > br) return std::nullopt;  // structural zero
  std::size_t i = br - bc;           // block F_i
  std::size_t s = (row - 1) % nk;
  std::size_t t = (col - 1) % k;
  return i * static_cast<std::size_t>(nk) * k + s * k + t;
}

bool is_trd(const SubmatrixIndex& idx, int nk, int k) {
  if (idx.rows.size() < idx.cols.size())
    throw std::invalid_argument("submatrix index needs at least as many rows as columns");
  std::size_t c = idx.surplus();
  for (std::size_t t = 0; t < idx.cols.size(); ++t) {
    std::size_t cap = (idx.rows[t + c] + nk - 1) / nk * k;
    if (idx.cols[t] > cap) return true;
  }
  return false;
}

bool symbolic_zero_oracle(const SubmatrixIndex& idx, int nk, int k, int j,
                          int trials, std::uint64_t seed) {
  if (idx.rows.size() != idx.cols.size())
    throw std::invalid_argument("symbolic zero oracle needs a square index");
  static const Field big = Field::make(2147483647, 1);  // 2^31 - 1
  std::size_t nindet = static_cast<std::size_t>(j + 1) * nk * k;
  Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<fe> values(nindet);
    for (fe& v : values) v = big.random_element(rng);
    Mat m(big, idx.rows.size(), idx.cols.size());
    for (std::size_t a = 0; a < idx.rows.size(); ++a)
      for (std::size_t b = 0; b < idx.cols.size(); ++b) {
        auto ii = indet_index(idx.rows[a], idx.cols[b], nk, k);
        m.set(a, b, ii ? values[*ii] : big.zero());
      }
    if (det(m) != big.zero()) return false;
  }
  return true;
}

namespace {

template <typename Fn>
void combinations(std::size_t limit, std::size_t size,
                  std::vector<std::size_t>& buf, std::size_t start, Fn&& fn) {
  if (buf.size() == size) {
    fn(buf);
    return;
  }
  for (std::size_t v = start; v + (size - buf.size()) - 1 <= limit; ++v) {
    buf.push_back(v);
    combinations(limit, size, buf, v + 1, fn);
    buf.pop_back();
  }
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t binom_sat(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (r > UINT64_MAX / (n - k + i)) return UINT64_MAX;
    r = r * (n - k + i) / i;
  }
  return r;
}

// Enumerates, for a fixed row tuple, all non-TRD column tuples: strictly
// increasing with col[t] <= cap[t]. A single structural nonzero in position
// (i, j) forces j <= ceil(i/(n-k))k, which is what makes this pruning exact.
template <typename Fn>
void column_tuples(const std::vector<std::size_t>& caps, std::size_t total_cols,
                   std::vector<std::size_t>& buf, Fn&& fn) {
  std::size_t t = buf.size();
  if (t == caps.size()) {
    fn(buf);
    return;
  }
  std::size_t lo = buf.empty() ? 1 : buf.back() + 1;
  std::size_t hi = std::min(caps[t], total_cols);
  for (std::size_t v = lo; v <= hi; ++v) {
    buf.push_back(v);
    column_tuples(caps, total_cols, buf, fn);
    buf.pop_back();
  }
}

}  // namespace

void enumerate_submatrices(std::size_t rows, std::size_t cols, std::size_t c,
                           const std::function<void(const SubmatrixIndex&)>& fn) {
  std::size_t side = std::min(rows, cols);
  std::size_t lmax = side > c ? side - c : 0;
  for (std::size_t l = 1; l <= lmax; ++l) {
    std::vector<std::size_t> rbuf;
    combinations(rows, l + c, rbuf, 1, [&](const std::vector<std::size_t>& rsel) {
      std::vector<std::size_t> cbuf;
      combinations(cols, l, cbuf, 1, [&](const std::vector<std::size_t>& csel) {
        fn(SubmatrixIndex{rsel, csel});
      });
    });
  }
}

CertReport certify_submatrices(const std::vector<Mat>& blocks, int nk, int k,
                               std::size_t c, std::size_t row_limit,
                               std::uint64_t ceiling) {
  ToeplitzLT t = ToeplitzLT::build(blocks);
  std::size_t total_rows = std::min(row_limit, t.dense.rows());
  std::size_t total_cols = t.dense.cols();
  std::size_t lmax = std::min(total_rows > c ? total_rows - c : 0, total_cols);

  std::uint64_t total_indices = 0;
  for (std::size_t l = 1; l <= lmax; ++l)
    total_indices = sat_add(total_indices,
                            sat_mul(binom_sat(total_rows, l + c), binom_sat(total_cols, l)));

  // first pass: count the surviving (non-TRD) indices without rank work
  auto scan = [&](bool do_rank, CertReport& rep) {
    for (std::size_t l = 1; l <= lmax; ++l) {
      std::vector<std::size_t> rbuf;
      bool stop = false;
      std::function<void(std::size_t)> rec_rows = [&](std::size_t start) {
        if (stop) return;
        if (rbuf.size() == l + c) {
          std::vector<std::size_t> caps(l);
          for (std::size_t i = 0; i < l; ++i)
            caps[i] = (rbuf[i + c] + nk - 1) / nk * k;
          std::vector<std::size_t> cbuf;
          column_tuples(caps, total_cols, cbuf, [&](const std::vector<std::size_t>& csel) {
            if (stop) return;
            ++rep.scanned;
            if (!do_rank) {
              if (rep.scanned > ceiling) stop = true;
              return;
            }
            SubmatrixIndex idx{rbuf, csel};
            Mat sub = submatrix(t.dense, idx.rows, idx.cols);
            if (rank(sub) != l) {
              rep.status = CertReport::Status::Fail;
              rep.witness = idx;
              stop = true;
            }
          });
          return;
        }
        // a partial row tuple is viable only if caps can still admit an
        // increasing column tuple: cap[t] >= t+1 for every decided t
        std::size_t pos = rbuf.size();
        if (pos > c) {
          std::size_t tcol = pos - c;  // caps decided so far
          std::size_t cap = (rbuf.back() + nk - 1) / nk * k;
          if (cap < tcol) return;
        }
        for (std::size_t v = start; v + (l + c - rbuf.size()) - 1 <= total_rows; ++v) {
          rbuf.push_back(v);
          rec_rows(v + 1);
          rbuf.pop_back();
          if (stop) return;
        }
      };
      rec_rows(1);
      if (stop) return;
    }
  };

  CertReport count_rep;
  scan(false, count_rep);
  if (count_rep.scanned > ceiling) {
    CertReport rep;
    rep.status = CertReport::Status::Refused;
    rep.scanned = count_rep.scanned;
    rep.pruned = total_indices >= count_rep.scanned ? total_indices - count_rep.scanned : 0;
    return rep;
  }

  CertReport rep;
  scan(true, rep);
  rep.pruned = total_indices >= count_rep.scanned ? total_indices - count_rep.scanned : 0;
  rep.scanned = count_rep.scanned;
  return rep;
}

CertReport certify_mdp(const std::vector<Mat>& blocks, const CodeParams& params,
                       std::uint64_t ceiling) {
  if (static_cast<int>(blocks.size()) != params.L + 1)
    throw std::invalid_argument("MDP certification needs blocks F_0..F_L");
  int nk = params.n - params.k;
  return certify_submatrices(blocks, nk, params.k, 0,
                             static_cast<std::size_t>(params.L + 1) * nk, ceiling);
}

CertReport certify_smds(const std::vector<Mat>& blocks, const CodeParams& params,
                        std::uint64_t ceiling) {
  if (static_cast<int>(blocks.size()) != params.M + 1)
    throw std::invalid_argument("sMDS certification needs blocks F_0..F_M");
  if (params.r == 0) return certify_mdp(blocks, params, ceiling);
  int nk = params.n - params.k;
  std::size_t c = static_cast<std::size_t>(nk - params.r);
  return certify_submatrices(blocks, nk, params.k, c,
                             static_cast<std::size_t>(params.M + 1) * nk, ceiling);
}

}  // namespace convlab
