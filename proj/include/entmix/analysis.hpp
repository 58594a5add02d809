// Copyright 2026 The entmix authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTMIX_ANALYSIS_HPP
#define ENTMIX_ANALYSIS_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace entmix {

/// Integer bin for an entropy value: nearest integer, ties round half-up,
/// clamped into [0, n_a].
int entropy_bin(double entropy_bits, int n_a);

/// Counts of entropy values rounded to the nearest integer bin 0..N_A
/// (ties round half-up).
struct EntropyHistogram {
  int n_qubits = 0;
  int n_a = 0;
  std::int64_t step = -1;
  std::int64_t total = 0;
  std::vector<std::int64_t> counts;

  EntropyHistogram() = default;
  EntropyHistogram(int n_qubits, int n_a, std::int64_t step);

  int bins() const { return static_cast<int>(counts.size()); }
  void add(double entropy_bits);
  std::vector<double> normalized() const;
};

/// Half the L1 distance between the normalized histograms.
double tv_distance(const EntropyHistogram& h1, const EntropyHistogram& h2);

/// Half the L1 distance between two probability vectors on the same domain.
double tv_distance(const Eigen::VectorXd& p, const Eigen::VectorXd& q);

/// Linearized Monte Carlo error of tv_distance(h1, h2) from multinomial
/// bin-count variances.
double tv_distance_error(const EntropyHistogram& h1,
                         const EntropyHistogram& h2);

struct TvPoint {
  std::int64_t step = 0;
  double tv = 0.0;
  double tv_err = 0.0;
};

struct TvCurve {
  std::vector<TvPoint> points;
};

/// Cutoff summary: location = step where TV first crosses 0.5; window =
/// distance between the 0.9 and 0.1 crossings; ratio = window / location.
/// Crossings are linearly interpolated between sampled steps. complete is
/// false when a crossing never happens inside the curve.
struct CutoffReport {
  int n_qubits = 0;
  bool complete = false;
  double location = 0.0;
  double window = 0.0;
  double ratio = 0.0;
  double cross_090 = -1.0;
  double cross_050 = -1.0;
  double cross_010 = -1.0;
};

CutoffReport detect_cutoff(const TvCurve& curve, int n_qubits);

}  // namespace entmix

#endif
