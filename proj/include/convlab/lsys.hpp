#pragma once

#include "convlab/convcode.hpp"

namespace convlab {

/// Input-state-output realization x_{t+1} = A x_t + B u_t, y_t = C x_t + D u_t
/// over a finite field, with state dimension delta, inputs of size k and
/// outputs of size n-k.
struct Realization {
  Field field;
  CodeParams params;
  Mat A, B, C, D;

  Realization(Field f, CodeParams p, Mat a, Mat b, Mat c, Mat d);
};

/// A run of the recurrence from x_0 = 0; states has one more entry than
/// inputs/outputs.
struct Trajectory {
  std::vector<Mat> inputs;   // k x 1
  std::vector<Mat> states;   // delta x 1, size inputs.size() + 1
  std::vector<Mat> outputs;  // (n-k) x 1

  bool finite_weight() const { return states.empty() || states.back().is_zero(); }
};

bool is_reachable(const Mat& a, const Mat& b);
bool is_observable(const Mat& a, const Mat& c);
bool is_minimal(const Realization& r);

/// Markov parameters F_0 = D, F_i = C A^{i-1} B for i >= 1.
std::vector<Mat> markov(const Realization& r, int count);

Trajectory run(const Realization& r, const std::vector<Mat>& inputs);

/// Inputs (at most delta of them) that steer the state reached after the
/// prefix back to zero. Requires a reachable pair.
std::vector<Mat> drive_to_zero(const Realization& r, const std::vector<Mat>& prefix);

/// The code whose codewords are the finite-weight sequences of r read in
/// ascending time order. Requires a minimal realization; built from a minimal
/// polynomial basis of the kernel of [sI-A 0 -B; -C I -D] followed by
/// per-column coefficient reversal.
ConvCode code_from_realization(const Realization& r);

/// Min over input prefixes with u_0 != 0 of the accumulated weight of
/// (y_t, u_t), t = 0..j. Equals the j-th column distance of the represented
/// code.
std::optional<long> column_distance_from_realization(const Realization& r, int j,
                                                     const OracleBudget& budget = {});

/// Exact free distance of the represented code: min-weight nonzero closed
/// walk at state zero in the state digraph, found by a shortest-path sweep.
std::optional<long> free_distance_oracle(const Realization& r,
                                         const OracleBudget& budget = {});

}  // namespace convlab
