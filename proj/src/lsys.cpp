#include "convlab/lsys.hpp"

#include <queue>
#include <stdexcept>
#include <tuple>

namespace convlab {

Realization::Realization(Field f, CodeParams p, Mat a, Mat b, Mat c, Mat d)
    : field(std::move(f)),
      params(p),
      A(std::move(a)),
      B(std::move(b)),
      C(std::move(c)),
      D(std::move(d)) {
  std::size_t delta = static_cast<std::size_t>(params.delta);
  std::size_t k = static_cast<std::size_t>(params.k);
  std::size_t nk = static_cast<std::size_t>(params.n - params.k);
  if (A.rows() != delta || A.cols() != delta || B.rows() != delta || B.cols() != k ||
      C.rows() != nk || C.cols() != delta || D.rows() != nk || D.cols() != k)
    throw std::invalid_argument("realization matrix dimensions inconsistent with (n,k,delta)");
  for (const Mat* m : {&A, &B, &C, &D})
    if (m->field() != field)
      throw std::invalid_argument("realization matrix field mismatch");
}

bool is_reachable(const Mat& a, const Mat& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    throw std::invalid_argument("reachability needs conforming (A, B)");
  std::size_t delta = a.rows();
  if (delta == 0) return true;
  Mat k = b;
  Mat power = b;
  for (std::size_t i = 1; i < delta; ++i) {
    power = mul(a, power);
    k = hstack(k, power);
  }
  return rank(k) == delta;
}

bool is_observable(const Mat& a, const Mat& c) {
  return is_reachable(transpose(a), transpose(c));
}

bool is_minimal(const Realization& r) {
  return is_reachable(r.A, r.B) && is_observable(r.A, r.C);
}

std::vector<Mat> markov(const Realization& r, int count) {
  if (count < 1) throw std::invalid_argument("markov needs count >= 1");
  std::vector<Mat> f;
  f.reserve(count);
  f.push_back(r.D);
  Mat power = Mat::identity(r.field, r.A.rows());
  for (int i = 1; i < count; ++i) {
    f.push_back(mul(mul(r.C, power), r.B));
    power = mul(power, r.A);
  }
  return f;
}

Trajectory run(const Realization& r, const std::vector<Mat>& inputs) {
  Trajectory t;
  Mat x(r.field, r.A.rows(), 1);
  t.states.push_back(x);
  for (const Mat& u : inputs) {
    if (u.rows() != static_cast<std::size_t>(r.params.k) || u.cols() != 1)
      throw std::invalid_argument("input vector dimension mismatch");
    t.inputs.push_back(u);
    t.outputs.push_back(add(mul(r.C, x), mul(r.D, u)));
    x = add(mul(r.A, x), mul(r.B, u));
    t.states.push_back(x);
  }
  return t;
}

std::vector<Mat> drive_to_zero(const Realization& r, const std::vector<Mat>& prefix) {
  if (!is_reachable(r.A, r.B))
    throw std::invalid_argument("drive_to_zero needs a reachable pair");
  Mat x = run(r, prefix).states.back();
  if (x.is_zero()) return {};
  std::size_t delta = r.A.rows();
  // smallest e with A^e x in the column space of [A^{e-1}B ... B]
  for (std::size_t e = 1; e <= delta; ++e) {
    Mat target = neg(mul(mat_pow(r.A, e), x));
    Mat k = mat_pow(r.A, e - 1);
    Mat stacked = mul(k, r.B);
    for (std::size_t i = 1; i < e; ++i) stacked = hstack(stacked, mul(mat_pow(r.A, e - 1 - i), r.B));
    std::optional<Mat> sol = solve_right(stacked, target);
    if (!sol) continue;
    std::vector<Mat> ext;
    for (std::size_t i = 0; i < e; ++i)
      ext.push_back(block(*sol, i * r.params.k, (i + 1) * r.params.k, 0, 1));
    return ext;
  }
  throw std::logic_error("reachable pair failed to steer state to zero");
}

namespace {

// polynomial column vector as a list of coefficient column matrices
using PolyVec = std::vector<Mat>;

// flatten coefficients 0..d of v into one (d+1)*gamma column
Mat flatten(const Field& f, const PolyVec& v, int d, std::size_t gamma) {
  Mat out(f, static_cast<std::size_t>(d + 1) * gamma, 1);
  for (std::size_t t = 0; t < v.size() && t <= static_cast<std::size_t>(d); ++t)
    for (std::size_t i = 0; i < gamma; ++i) out.set(t * gamma + i, 0, v[t].at(i, 0));
  return out;
}

}  // namespace

ConvCode code_from_realization(const Realization& r) {
  if (!is_minimal(r))
    throw std::invalid_argument("code recovery needs a minimal realization");
  const Field& f = r.field;
  std::size_t delta = static_cast<std::size_t>(r.params.delta);
  std::size_t k = static_cast<std::size_t>(r.params.k);
  std::size_t nk = static_cast<std::size_t>(r.params.n - r.params.k);
  std::size_t rows = delta + nk;        // equations
  std::size_t gamma = delta + nk + k;   // unknowns per coefficient (x, y, u)

  // K(s) = K0 + s K1 with K(s) (x y u)^T = 0 characterizing finite-weight runs
  Mat k0(f, rows, gamma);
  for (std::size_t i = 0; i < delta; ++i) {
    for (std::size_t j = 0; j < delta; ++j) k0.set(i, j, f.neg(r.A.at(i, j)));
    for (std::size_t j = 0; j < k; ++j) k0.set(i, delta + nk + j, f.neg(r.B.at(i, j)));
  }
  for (std::size_t i = 0; i < nk; ++i) {
    for (std::size_t j = 0; j < delta; ++j) k0.set(delta + i, j, f.neg(r.C.at(i, j)));
    k0.set(delta + i, delta + i, f.one());
    for (std::size_t j = 0; j < k; ++j) k0.set(delta + i, delta + nk + j, f.neg(r.D.at(i, j)));
  }
  Mat k1(f, rows, gamma);
  for (std::size_t i = 0; i < delta; ++i) k1.set(i, i, f.one());

  // minimal polynomial basis of the right kernel, degree by degree
  std::vector<PolyVec> chosen;
  std::vector<int> chosen_deg;
  int dbound = 2 * r.params.delta + 1;
  for (int d = 0; d <= dbound && chosen.size() < k; ++d) {
    // stacked coefficient system for degree-d kernel vectors
    Mat s(f, static_cast<std::size_t>(d + 2) * rows, static_cast<std::size_t>(d + 1) * gamma);
    for (int t = 0; t <= d + 1; ++t)
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < gamma; ++j) {
          if (t <= d && k0.at(i, j) != 0)
            s.set(static_cast<std::size_t>(t) * rows + i,
                  static_cast<std::size_t>(t) * gamma + j, k0.at(i, j));
          if (t >= 1 && k1.at(i, j) != 0)
            s.set(static_cast<std::size_t>(t) * rows + i,
                  static_cast<std::size_t>(t - 1) * gamma + j, k1.at(i, j));
        }
    std::vector<Mat> kernel = right_kernel_basis(s);
    if (kernel.empty()) continue;

    // span of s^a-shifts of already chosen vectors inside degree-d space
    std::vector<Mat> span_cols;
    for (std::size_t b = 0; b < chosen.size(); ++b)
      for (int a = 0; chosen_deg[b] + a <= d; ++a) {
        PolyVec shifted(static_cast<std::size_t>(chosen_deg[b] + a + 1), Mat(f, gamma, 1));
        for (std::size_t t = 0; t < chosen[b].size(); ++t) shifted[t + a] = chosen[b][t];
        span_cols.push_back(flatten(f, shifted, d, gamma));
      }
    auto span_rank = [&]() {
      if (span_cols.empty()) return std::size_t{0};
      Mat m = span_cols[0];
      for (std::size_t i = 1; i < span_cols.size(); ++i) m = hstack(m, span_cols[i]);
      return rank(m);
    };
    std::size_t current = span_rank();
    for (const Mat& v : kernel) {
      if (chosen.size() >= k) break;
      span_cols.push_back(v);
      std::size_t next = span_rank();
      if (next == current) {
        span_cols.pop_back();
        continue;
      }
      current = next;
      PolyVec pv;
      for (int t = 0; t <= d; ++t) {
        Mat c(f, gamma, 1);
        for (std::size_t i = 0; i < gamma; ++i)
          c.set(i, 0, v.at(static_cast<std::size_t>(t) * gamma + i, 0));
        pv.push_back(std::move(c));
      }
      chosen.push_back(std::move(pv));
      chosen_deg.push_back(d);
    }
  }
  if (chosen.size() != k)
    throw std::logic_error("kernel basis incomplete within the degree bound");

  // project away the state block; columns become the generator matrix
  int gdeg = 0;
  for (int d : chosen_deg) gdeg = std::max(gdeg, d);
  std::vector<Mat> gcoeffs(static_cast<std::size_t>(gdeg + 1),
                           Mat(f, static_cast<std::size_t>(r.params.n), k));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t t = 0; t < chosen[j].size(); ++t)
      for (std::size_t i = 0; i < nk + k; ++i)
        gcoeffs[t].set(i, j, chosen[j][t].at(delta + i, 0));
  PolyMat g = minimalize(PolyMat(f, static_cast<std::size_t>(r.params.n), k, gcoeffs));
  return ConvCode(f, r.params, reverse(g));
}

namespace {

std::uint64_t sat_pow(std::uint64_t q, std::uint64_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > cap / q) return cap + 1;
    r *= q;
  }
  return r;
}

long vec_weight(const Mat& v) {
  long w = 0;
  for (std::size_t i = 0; i < v.rows(); ++i)
    if (v.at(i, 0) != 0) ++w;
  return w;
}

}  // namespace

std::optional<long> column_distance_from_realization(const Realization& r, int j,
                                                     const OracleBudget& budget) {
  const Field& f = r.field;
  std::uint64_t q = f.q();
  std::size_t digits = static_cast<std::size_t>(j + 1) * r.params.k;
  std::uint64_t total = sat_pow(q, digits, budget.max_candidates);
  if (total > budget.max_candidates) return std::nullopt;

  long best = -1;
  std::vector<fe> u(digits, 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    bool u0_nonzero = false;
    for (int i = 0; i < r.params.k; ++i) u0_nonzero |= (u[i] != 0);
    if (u0_nonzero) {
      long w = 0;
      Mat x(f, r.A.rows(), 1);
      for (int t = 0; t <= j; ++t) {
        Mat ut(f, static_cast<std::size_t>(r.params.k), 1);
        for (int i = 0; i < r.params.k; ++i) ut.set(i, 0, u[t * r.params.k + i]);
        Mat yt = add(mul(r.C, x), mul(r.D, ut));
        w += vec_weight(ut) + vec_weight(yt);
        x = add(mul(r.A, x), mul(r.B, ut));
      }
      if (best < 0 || w < best) best = w;
    }
    std::size_t d = 0;
    while (d < digits && ++u[d] == q) u[d++] = 0;
  }
  return best;
}

std::optional<long> free_distance_oracle(const Realization& r, const OracleBudget& budget) {
  const Field& f = r.field;
  std::uint64_t q = f.q();
  std::size_t delta = r.A.rows();
  std::uint64_t nstates = sat_pow(q, delta, budget.max_states);
  if (nstates > budget.max_states) return std::nullopt;
  std::uint64_t ninputs = sat_pow(q, static_cast<std::uint64_t>(r.params.k), budget.max_candidates);
  if (ninputs > budget.max_candidates) return std::nullopt;

  auto decode_state = [&](std::uint64_t idx) {
    Mat x(f, delta, 1);
    for (std::size_t i = 0; i < delta; ++i) {
      x.set(i, 0, idx % q);
      idx /= q;
    }
    return x;
  };
  auto encode_state = [&](const Mat& x) {
    std::uint64_t idx = 0;
    for (std::size_t i = delta; i > 0; --i) idx = idx * q + x.at(i - 1, 0);
    return idx;
  };
  auto decode_input = [&](std::uint64_t idx) {
    Mat u(f, static_cast<std::size_t>(r.params.k), 1);
    for (int i = 0; i < r.params.k; ++i) {
      u.set(i, 0, idx % q);
      idx /= q;
    }
    return u;
  };

  // answer is bounded by the generalized Singleton bound, which makes
  // weight-based pruning at `best` sound
  long best = r.params.singleton + 1;
  if (delta == 0) {
    for (std::uint64_t ui = 1; ui < ninputs; ++ui) {
      Mat u = decode_input(ui);
      long w = vec_weight(u) + vec_weight(mul(r.D, u));
      best = std::min(best, w);
    }
    return best;
  }

  const long INF = -1;
  std::vector<long> dist(nstates, INF);
  using Item = std::pair<long, std::uint64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;

  // first step from state zero with u_0 != 0; returning to zero closes a walk
  for (std::uint64_t ui = 1; ui < ninputs; ++ui) {
    Mat u = decode_input(ui);
    long w = vec_weight(u) + vec_weight(mul(r.D, u));
    std::uint64_t nxt = encode_state(mul(r.B, u));
    if (nxt == 0) {
      best = std::min(best, w);
    } else if (dist[nxt] == INF || w < dist[nxt]) {
      dist[nxt] = w;
      pq.emplace(w, nxt);
    }
  }
  while (!pq.empty()) {
    auto [w, s] = pq.top();
    pq.pop();
    if (dist[s] != w || w >= best) continue;
    Mat x = decode_state(s);
    Mat ax = mul(r.A, x);
    Mat cx = mul(r.C, x);
    for (std::uint64_t ui = 0; ui < ninputs; ++ui) {
      Mat u = decode_input(ui);
      long ew = vec_weight(u) + vec_weight(add(cx, mul(r.D, u)));
      long nw = w + ew;
      std::uint64_t nxt = encode_state(add(ax, mul(r.B, u)));
      if (nxt == 0) {
        best = std::min(best, nw);
      } else if (nw < best && (dist[nxt] == INF || nw < dist[nxt])) {
        dist[nxt] = nw;
        pq.emplace(nw, nxt);
      }
    }
  }
  if (best > r.params.singleton)
    throw std::logic_error("free distance exceeded the generalized Singleton bound");
  return best;
}

}  // namespace convlab
