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

#ifndef ENTMIX_FORMULAS_HPP
#define ENTMIX_FORMULAS_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace entmix {

/// Mean purity of an N_A block of a uniformly random pure state:
/// (2^{N_A} + 2^{N_B}) / (2^N + 1).
inline double haar_average_purity(int n_a, int n_b) {
  if (n_a < 1 || n_b < 1) {
    throw std::invalid_argument("haar_average_purity: block sizes >= 1");
  }
  return (std::pow(2.0, n_a) + std::pow(2.0, n_b)) /
         (std::pow(2.0, n_a + n_b) + 1.0);
}

/// Asymptotic mean-entropy floor N_A - 2^{-t} / ln 2, with t = N_B - N_A.
inline double haar_entropy_floor(int n_a, int offset_t) {
  if (offset_t < 0) {
    throw std::invalid_argument("haar_entropy_floor: negative offset");
  }
  return n_a - std::pow(2.0, -offset_t) / std::numbers::ln2;
}

/// Smallest step count n with n >= 9 N (N-1) [(3 ln 2) N + ln(1/eps)] / 4.
inline std::int64_t theorem1_threshold(int n_qubits, double epsilon) {
  if (n_qubits < 2) {
    throw std::invalid_argument("theorem1_threshold: needs N >= 2");
  }
  if (!(epsilon > 0.0) || epsilon >= 1.0) {
    throw std::invalid_argument("theorem1_threshold: epsilon out of (0, 1)");
  }
  double bound = 9.0 * n_qubits * (n_qubits - 1) *
                 (3.0 * std::numbers::ln2 * n_qubits + std::log(1.0 / epsilon)) /
                 4.0;
  return static_cast<std::int64_t>(std::ceil(bound));
}

struct TheoremFloors {
  double entropy_floor = 0.0;
  double fidelity_floor = 0.0;
};

/// Finite-n floors at the threshold step count:
/// mean entropy >= N_A - (2^{-t} + eps) / ln 2 and
/// mean max-entangled overlap >= 1 - sqrt((2^{-t} + eps) / (2 ln 2)).
inline TheoremFloors theorem1_floors(int n_a, int offset_t, double epsilon) {
  if (n_a < 1 || offset_t < 0) {
    throw std::invalid_argument("theorem1_floors: bad partition");
  }
  if (!(epsilon > 0.0) || epsilon >= 1.0) {
    throw std::invalid_argument("theorem1_floors: epsilon out of (0, 1)");
  }
  double defect = std::pow(2.0, -offset_t) + epsilon;
  TheoremFloors floors;
  floors.entropy_floor = n_a - defect / std::numbers::ln2;
  floors.fidelity_floor = 1.0 - std::sqrt(defect / (2.0 * std::numbers::ln2));
  return floors;
}

}  // namespace entmix

#endif
