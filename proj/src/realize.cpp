#include "convlab/realize.hpp"

#include <stdexcept>
#include <string>

namespace convlab {

MarkovSeq::MarkovSeq(Field f, CodeParams p, std::vector<Mat> b)
    : field(std::move(f)), params(p), blocks(std::move(b)) {
  if (blocks.size() != static_cast<std::size_t>(params.M + 1))
    throw std::invalid_argument("Markov sequence needs exactly M+1 blocks");
  for (const Mat& m : blocks)
    if (m.field() != field || m.rows() != static_cast<std::size_t>(params.n - params.k) ||
        m.cols() != static_cast<std::size_t>(params.k))
      throw std::invalid_argument("Markov block dimension or field mismatch");
}

Mat hankel(const MarkovSeq& seq, int x, int y) {
  if (x < 1 || y < 1) throw std::invalid_argument("Hankel block counts must be positive");
  if (x + y - 1 > seq.params.M)
    throw std::invalid_argument("Hankel matrix needs blocks beyond F_M");
  int nk = seq.params.n - seq.params.k;
  int k = seq.params.k;
  Mat h(seq.field, static_cast<std::size_t>(x) * nk, static_cast<std::size_t>(y) * k);
  for (int s = 1; s <= x; ++s)
    for (int t = 1; t <= y; ++t) {
      const Mat& blk = seq.blocks[s + t - 1];
      for (int i = 0; i < nk; ++i)
        for (int j = 0; j < k; ++j)
          h.set((s - 1) * nk + i, (t - 1) * k + j, blk.at(i, j));
    }
  return h;
}

int minimal_degree(const MarkovSeq& seq) {
  int M = seq.params.M;
  if (M < 1) return 0;  // no shifted data: both rank sums are empty
  long d = 0;
  for (int x = 1; x <= M; ++x) d += static_cast<long>(rank(hankel(seq, x, M + 1 - x)));
  for (int x = 1; x <= M - 1; ++x) d -= static_cast<long>(rank(hankel(seq, x, M - x)));
  return static_cast<int>(d);
}

int xbar(const CodeParams& params) {
  int xb = (params.M * params.k + params.n - 1) / params.n;
  if (params.r >= 1) {
    int nk = params.n - params.k;
    if (params.delta / nk != xb - 1)
      throw std::logic_error("xbar identity floor(delta/(n-k)) = xbar-1 violated");
    if ((params.M - xb) * params.k != params.delta - params.rprime)
      throw std::logic_error("xbar identity (M-xbar)k = delta-r' violated");
  }
  return xb;
}

FM1Report check_fm1(const MarkovSeq& seq) {
  FM1Report rep;
  const CodeParams& p = seq.params;
  int nk = p.n - p.k;
  int xb = xbar(p);
  for (int x = 1; x <= p.M - 1; ++x) {
    std::size_t want = static_cast<std::size_t>(std::min(x * nk, (p.M - x) * p.k));
    std::size_t got = rank(hankel(seq, x, p.M - x));
    if (got != want)
      rep.violations.push_back("rank F_{" + std::to_string(x) + "," +
                               std::to_string(p.M - x) + "} = " + std::to_string(got) +
                               ", expected " + std::to_string(want));
  }
  for (int x = 1; x <= p.M; ++x) {
    if (x == xb) continue;
    std::size_t want = static_cast<std::size_t>(std::min(x * nk, (p.M + 1 - x) * p.k));
    std::size_t got = rank(hankel(seq, x, p.M + 1 - x));
    if (got != want)
      rep.violations.push_back("rank F_{" + std::to_string(x) + "," +
                               std::to_string(p.M + 1 - x) + "} = " + std::to_string(got) +
                               ", expected " + std::to_string(want));
  }
  std::size_t reduced = rank(hankel(seq, xb, p.M + 1 - xb));
  int full = minimal_degree(seq);
  if (static_cast<std::size_t>(full) != reduced)
    rep.violations.push_back("degree formula " + std::to_string(full) +
                             " != rank F_{xbar,M+1-xbar} = " + std::to_string(reduced));
  return rep;
}

MarkovSeq complete_fm(const std::vector<Mat>& prefix, const CodeParams& params,
                      Rng& rng, int max_retries, std::uint64_t ceiling,
                      int* retries_used) {
  if (params.r < 1) throw std::invalid_argument("completion step applies only when r >= 1");
  if (prefix.size() != static_cast<std::size_t>(params.L + 1))
    throw std::invalid_argument("completion needs the prefix F_0..F_L");
  const Field& f = prefix[0].field();
  int nk = params.n - params.k;
  int k = params.k;
  int M = params.M;
  int xb = xbar(params);

  // step (a): sample the top r rows of F_M until the top M(n-k)+r rows of
  // T_M pass the square-submatrix certification
  std::vector<Mat> blocks = prefix;
  blocks.emplace_back(f, nk, k);  // provisional F_M, bottom rows still zero
  bool found = false;
  for (int attempt = 0; attempt < max_retries && !found; ++attempt) {
    if (retries_used) ++*retries_used;
    for (int i = 0; i < params.r; ++i)
      for (int j = 0; j < k; ++j) blocks[M].set(i, j, f.random_element(rng));
    CertReport rep = certify_submatrices(blocks, nk, k, 0,
                                         static_cast<std::size_t>(M) * nk + params.r,
                                         ceiling);
    if (rep.status == CertReport::Status::Refused)
      throw std::runtime_error("certification ceiling exceeded during completion");
    found = rep.ok();
  }
  if (!found)
    throw field_too_small("no completion found within the retry budget; raise q");

  // steps (b) and (c): the bottom n-k-r rows of F_M are the unique linear
  // combinations keeping rank F_{xbar,M+1-xbar} at delta
  MarkovSeq provisional(f, params, blocks);
  int wide = (M - xb) * k;  // = delta - r'
  if (wide > 0) {
    Mat body = hankel(provisional, xb, M - xb);
    Mat top = block(body, 0, params.delta, 0, body.cols());
    // greedy leftmost independent rows among the top delta rows
    std::vector<std::size_t> chosen;
    Mat acc(f, 0, body.cols());
    for (std::size_t i = 0; i < top.rows() && chosen.size() < static_cast<std::size_t>(wide); ++i) {
      Mat cand = vstack(acc, block(top, i, i + 1, 0, top.cols()));
      if (rank(cand) == chosen.size() + 1) {
        chosen.push_back(i + 1);
        acc = std::move(cand);
      }
    }
    if (chosen.size() != static_cast<std::size_t>(wide))
      throw std::logic_error("top rows of the certified Hankel block are rank deficient");
    std::vector<std::size_t> allcols(body.cols());
    for (std::size_t j = 0; j < body.cols(); ++j) allcols[j] = j + 1;
    Mat v = submatrix(body, chosen, allcols);  // wide x wide, invertible

    // extension column block: rows of [F_{M+1-xbar}; ...; F_M'] matching
    // the chosen rows and the rows to be expressed
    Mat ext(f, static_cast<std::size_t>(xb) * nk, k);
    for (int s = 1; s <= xb; ++s) {
      const Mat& blk = blocks[s + M - xb];
      for (int i = 0; i < nk; ++i)
        for (int j = 0; j < k; ++j) ext.set((s - 1) * nk + i, j, blk.at(i, j));
    }
    for (int i = 0; i < nk - params.r; ++i) {
      std::size_t row = params.delta + i;  // 0-based row of the bottom n-k-r
      Mat target = block(body, row, row + 1, 0, body.cols());
      auto combo = solve_left(v, target);
      if (!combo) throw std::logic_error("dependent row escaped the chosen row space");
      Mat chosen_ext(f, wide, k);
      for (int t = 0; t < wide; ++t)
        for (int j = 0; j < k; ++j) chosen_ext.set(t, j, ext.at(chosen[t] - 1, j));
      Mat value = mul(*combo, chosen_ext);  // 1 x k
      for (int j = 0; j < k; ++j) blocks[M].set(params.r + i, j, value.at(0, j));
    }
  }
  // wide == 0: the expressing row set is empty, so the bottom rows stay zero

  // step (d): both consequences of the construction, asserted
  MarkovSeq seq(f, params, blocks);
  if (rank(hankel(seq, xb, M + 1 - xb)) != static_cast<std::size_t>(params.delta))
    throw std::logic_error("completed sequence misses the target Hankel rank");
  if (!certify_smds(seq.blocks, params, ceiling).ok())
    throw std::logic_error("completed sequence failed the surplus-row certification");
  return seq;
}

Realization partial_realization(const MarkovSeq& seq, int delta) {
  const Field& f = seq.field;
  const CodeParams& p = seq.params;
  int nk = p.n - p.k;
  int k = p.k;
  if (minimal_degree(seq) != delta)
    throw std::invalid_argument("sequence does not admit a degree-" +
                                std::to_string(delta) + " minimal realization");
  if (delta == 0) {
    Mat a(f, 0, 0), b(f, 0, k), c(f, nk, 0);
    return Realization(f, p, a, b, c, seq.blocks[0]);
  }

  int xb = xbar(p);
  Mat h = hankel(seq, xb, p.M + 1 - xb);
  auto [r, pivots] = rref(h);
  if (pivots.size() != static_cast<std::size_t>(delta))
    throw std::logic_error("reduced Hankel rank disagrees with the degree formula");
  // rank factorization h = pm * qm: pm the pivot columns, qm the top rows of
  // the reduced form
  std::vector<std::size_t> allrows(h.rows());
  for (std::size_t i = 0; i < h.rows(); ++i) allrows[i] = i + 1;
  std::vector<std::size_t> pivcols(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) pivcols[i] = pivots[i] + 1;
  Mat pm = submatrix(h, allrows, pivcols);          // x̄(n-k) x delta
  Mat qm = block(r, 0, delta, 0, h.cols());         // delta x (M+1-x̄)k

  // A from the shift structure: A q_t = q_{t+1} per block column of qm and
  // p_s A = p_{s+1} per block row of pm; any solution reproduces every F_i
  std::size_t ncols_shift = h.cols() - k;           // (M - x̄)k
  std::size_t nrows_shift = h.rows() - nk;          // (x̄ - 1)(n-k)
  std::size_t eqs = ncols_shift * delta + nrows_shift * delta;
  Mat sys(f, eqs, static_cast<std::size_t>(delta) * delta);
  Mat rhs(f, eqs, 1);
  std::size_t e = 0;
  for (std::size_t c = 0; c < ncols_shift; ++c)
    for (int i = 0; i < delta; ++i, ++e) {
      for (int j = 0; j < delta; ++j) sys.set(e, i * delta + j, qm.at(j, c));
      rhs.set(e, 0, qm.at(i, c + k));
    }
  for (std::size_t rr = 0; rr < nrows_shift; ++rr)
    for (int j = 0; j < delta; ++j, ++e) {
      for (int i = 0; i < delta; ++i) sys.set(e, i * delta + j, pm.at(rr, i));
      rhs.set(e, 0, pm.at(rr + nk, j));
    }
  auto avec = solve_right(sys, rhs);
  if (!avec) throw std::logic_error("inconsistent shift system for a minimal-degree sequence");
  Mat a(f, delta, delta);
  for (int i = 0; i < delta; ++i)
    for (int j = 0; j < delta; ++j) a.set(i, j, avec->at(i * delta + j, 0));

  Mat b = block(qm, 0, delta, 0, k);
  Mat c = block(pm, 0, nk, 0, delta);
  Realization real(f, p, a, b, c, seq.blocks[0]);
  if (!verify_realization(real, seq))
    throw std::logic_error("shift realization failed its own verification");
  return real;
}

bool verify_realization(const Realization& r, const MarkovSeq& seq) {
  if (r.field != seq.field || !(r.params == seq.params)) return false;
  std::vector<Mat> got = markov(r, seq.params.M + 1);
  for (std::size_t i = 0; i < got.size(); ++i)
    if (got[i] != seq.blocks[i]) return false;
  return is_reachable(r.A, r.B) && is_observable(r.A, r.C);
}

std::vector<Mat> markov_from_code(const ConvCode& c, int count) {
  const Field& f = c.field;
  int nk = c.params.n - c.params.k;
  int k = c.params.k;
  // split the generator into output rows Y(s) on top and input rows U(s)
  // below; the represented trajectories satisfy Y(s) = F(s) U(s) as power
  // series, which pins every F_t once U(0) is invertible
  Mat u0(f, k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) u0.set(i, j, c.G.coeff(0).at(nk + i, j));
  auto u0inv = inverse(u0);
  if (!u0inv)
    throw std::invalid_argument(
        "input block at s = 0 is singular; the code is not in represented form");
  auto ublock = [&](int t) {
    Mat m(f, k, k);
    Mat ct = c.G.coeff(t);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m.set(i, j, ct.at(nk + i, j));
    return m;
  };
  auto yblock = [&](int t) {
    Mat m(f, nk, k);
    Mat ct = c.G.coeff(t);
    for (int i = 0; i < nk; ++i)
      for (int j = 0; j < k; ++j) m.set(i, j, ct.at(i, j));
    return m;
  };
  std::vector<Mat> fs;
  for (int t = 0; t < count; ++t) {
    Mat acc = yblock(t);
    for (int i = 0; i < t; ++i) acc = sub(acc, mul(fs[i], ublock(t - i)));
    fs.push_back(mul(acc, *u0inv));
  }
  return fs;
}

}  // namespace convlab
