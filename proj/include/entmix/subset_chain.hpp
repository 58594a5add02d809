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

#ifndef ENTMIX_SUBSET_CHAIN_HPP
#define ENTMIX_SUBSET_CHAIN_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "entmix/pauli.hpp"
#include "entmix/rng.hpp"

namespace entmix {

/// Dense transition matrices get allocated up to this qubit count.
inline constexpr int kMaxDenseChainQubits = 14;
/// The full label chain is 4^N-dimensional; keep it tiny.
inline constexpr int kMaxFullChainQubits = 5;

/// The chain's state space Omega is all nonempty subsets of {1..N},
/// enumerated by their N-bit mask value: index = mask - 1. The empty set
/// is an isolated state handled outside the matrix.
inline std::int64_t omega_dimension(int n_qubits) {
  return (std::int64_t{1} << n_qubits) - 1;
}
inline std::int64_t omega_index(std::uint64_t mask) {
  return static_cast<std::int64_t>(mask) - 1;
}
inline std::uint64_t omega_mask(std::int64_t index) {
  return static_cast<std::uint64_t>(index) + 1;
}

/// Distribution over all 2^N subsets (mask-indexed, the empty set at 0)
/// induced by a computational basis state: uniform weight 2^{-N} each,
/// independent of which basis state.
Eigen::VectorXd initial_subset_distribution(int n_qubits,
                                            std::uint64_t basis_bits = 0);

/// Uniform random subset: each qubit is a member with probability 1/2.
SubsetState sample_initial_subset(int n_qubits, RngStream& rng);

/// One chain step: draw a uniform ordered (control, target) pair; if the
/// subset misses both, it is unchanged; otherwise update the two
/// memberships by the local occupation kernel.
SubsetState subset_chain_step(const SubsetState& s, RngStream& rng);

/// Row-stochastic transition matrix Q over Omega, averaging the local
/// kernel over all N(N-1) ordered pairs. Entries are exact multiples of
/// 1/(9N(N-1)) rounded once to double.
Eigen::MatrixXd exact_subset_transition_matrix(int n_qubits);

/// Exact integer numerators of one row of Q: (omega index, numerator) pairs
/// with denominator 9N(N-1). Used for exact stochasticity and reversibility
/// checks without float error.
std::vector<std::pair<std::int64_t, std::int64_t>> exact_subset_row_ninths(
    int n_qubits, std::uint64_t from_mask);

/// Stationary law on Omega: M(S) = 3^{|S|} / (4^N - 1).
Eigen::VectorXd stationary_distribution(int n_qubits);

/// Exact distribution over subsets. The empty set's weight is conserved by
/// the dynamics, so it rides along as a scalar next to the Omega vector.
struct SubsetDistribution {
  int n_qubits = 0;
  double empty_weight = 0.0;
  Eigen::VectorXd omega;

  static SubsetDistribution initial(int n_qubits);
  /// One exact step: omega <- Q^T omega.
  void step(const Eigen::MatrixXd& q);
  double total() const;
  /// Pr[S is contained in A], empty set included.
  double containment(const SubsetState& a) const;
  /// Mask-indexed vector over all 2^N subsets, empty set at index 0.
  Eigen::VectorXd to_full_vector() const;
};

/// 2^{N_B} * Pr[S contained in A].
double purity_from_containment(double containment_probability, int n_b);

struct ContainmentEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t trials = 0;
};

/// Monte Carlo estimate of Pr[S(n_steps) contained in A] over independent
/// trajectories with per-trajectory streams (seed, trial index).
ContainmentEstimate estimate_containment(int n_qubits, const SubsetState& a,
                                         std::int64_t n_steps,
                                         std::int64_t trials,
                                         std::uint64_t seed);

/// Full label-chain transition matrix over all 4^N Pauli codes (base-4,
/// digit q = qubit q+1's label). Its support marginal must reproduce Q.
Eigen::MatrixXd exact_full_chain_matrix(int n_qubits);

/// Projects a distribution over 4^N label codes onto support masks
/// (mask-indexed vector of size 2^N).
Eigen::VectorXd support_marginal(int n_qubits, const Eigen::VectorXd& code_dist);

/// Coordinate-triplet serialization, header row_index,col_index,value.
std::string matrix_coo_csv(const Eigen::MatrixXd& m, double drop_below = 0.0);

/// Distribution serialization for mask-indexed subset vectors, header
/// subset_bits,probability.
std::string subset_distribution_csv(const Eigen::VectorXd& full_vector);

}  // namespace entmix

#endif
