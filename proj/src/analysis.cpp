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

#include "entmix/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace entmix {

EntropyHistogram::EntropyHistogram(int n_qubits, int n_a, std::int64_t step)
    : n_qubits(n_qubits), n_a(n_a), step(step) {
  if (n_a < 1 || n_a >= n_qubits) {
    throw std::invalid_argument("EntropyHistogram: bad block size");
  }
  counts.assign(n_a + 1, 0);
}

int entropy_bin(double entropy_bits, int n_a) {
  // Round half-up, then clamp into the valid bin range to absorb float
  // fuzz just outside [0, n_a].
  auto bin = static_cast<int>(std::floor(entropy_bits + 0.5));
  return std::max(0, std::min(n_a, bin));
}

void EntropyHistogram::add(double entropy_bits) {
  ++counts[entropy_bin(entropy_bits, n_a)];
  ++total;
}

std::vector<double> EntropyHistogram::normalized() const {
  if (total == 0) {
    throw std::invalid_argument("EntropyHistogram: empty histogram");
  }
  std::vector<double> p(counts.size());
  for (size_t i = 0; i < counts.size(); ++i) {
    p[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  return p;
}

double tv_distance(const EntropyHistogram& h1, const EntropyHistogram& h2) {
  if (h1.bins() != h2.bins()) {
    throw std::invalid_argument("tv_distance: mismatched bin domains");
  }
  std::vector<double> p = h1.normalized();
  std::vector<double> q = h2.normalized();
  double l1 = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    l1 += std::abs(p[i] - q[i]);
  }
  return 0.5 * l1;
}

double tv_distance(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("tv_distance: mismatched domains");
  }
  return 0.5 * (p - q).cwiseAbs().sum();
}

double tv_distance_error(const EntropyHistogram& h1,
                         const EntropyHistogram& h2) {
  if (h1.bins() != h2.bins()) {
    throw std::invalid_argument("tv_distance_error: mismatched bin domains");
  }
  std::vector<double> p = h1.normalized();
  std::vector<double> q = h2.normalized();
  double variance = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    variance += p[i] * (1.0 - p[i]) / static_cast<double>(h1.total);
    variance += q[i] * (1.0 - q[i]) / static_cast<double>(h2.total);
  }
  return 0.5 * std::sqrt(variance);
}

namespace {

/// First downward crossing of `threshold`, linearly interpolated; negative
/// when the curve never drops below the threshold.
double first_crossing(const TvCurve& curve, double threshold) {
  const auto& pts = curve.points;
  if (pts.front().tv < threshold) {
    return static_cast<double>(pts.front().step);
  }
  for (size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].tv < threshold) {
      double run = static_cast<double>(pts[i].step - pts[i - 1].step);
      double drop = pts[i - 1].tv - pts[i].tv;
      double frac = drop > 0.0 ? (pts[i - 1].tv - threshold) / drop : 1.0;
      return static_cast<double>(pts[i - 1].step) + frac * run;
    }
  }
  return -1.0;
}

}  // namespace

CutoffReport detect_cutoff(const TvCurve& curve, int n_qubits) {
  if (curve.points.empty()) {
    throw std::invalid_argument("detect_cutoff: empty curve");
  }
  for (size_t i = 1; i < curve.points.size(); ++i) {
    if (curve.points[i].step <= curve.points[i - 1].step) {
      throw std::invalid_argument("detect_cutoff: steps must increase");
    }
  }
  CutoffReport report;
  report.n_qubits = n_qubits;
  report.cross_090 = first_crossing(curve, 0.9);
  report.cross_050 = first_crossing(curve, 0.5);
  report.cross_010 = first_crossing(curve, 0.1);
  if (report.cross_090 < 0.0 || report.cross_050 <= 0.0 ||
      report.cross_010 < 0.0) {
    return report;
  }
  report.location = report.cross_050;
  report.window = report.cross_010 - report.cross_090;
  report.ratio = report.window / report.location;
  report.complete = true;
  return report;
}

}  // namespace entmix
