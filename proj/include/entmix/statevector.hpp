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

#ifndef ENTMIX_STATEVECTOR_HPP
#define ENTMIX_STATEVECTOR_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "entmix/gates.hpp"
#include "entmix/pauli.hpp"

namespace entmix {

/// Dense N-qubit pure state. Amplitude index bit q (0-based) holds the
/// computational basis value of qubit q+1. Capped at N <= 14.
class StateVector {
 public:
  static constexpr int kMaxQubits = 14;

  static StateVector zero_state(int n_qubits);
  static StateVector basis_state(int n_qubits, std::uint64_t bits);

  int n_qubits() const { return n_; }
  std::uint64_t dim() const { return std::uint64_t{1} << n_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
  std::complex<double>& amp(std::uint64_t index) { return amps_[index]; }

  double norm() const;

  void apply_single_qubit(const Mat2& u, int qubit);
  void apply_cnot(int control, int target);
  void apply_gate_event(const GateEvent& event);

 private:
  explicit StateVector(int n_qubits);

  int n_;
  std::vector<std::complex<double>> amps_;
};

/// Reduced density matrix of the block A, a 2^{N_A} square Hermitian matrix.
Eigen::MatrixXcd reduced_density_matrix(const StateVector& state,
                                        const QubitPartition& partition);

/// Eigenvalues of the reduced state, descending, clipped into [0, 1].
Eigen::VectorXd reduced_spectrum(const StateVector& state,
                                 const QubitPartition& partition);

/// Tr[rho_A^2], computed without diagonalizing.
double reduced_purity(const StateVector& state,
                      const QubitPartition& partition);

/// Von Neumann entropy of the reduced state, in bits.
double entanglement_entropy(const StateVector& state,
                            const QubitPartition& partition);

/// Largest overlap with a maximally entangled state across the cut,
/// max_Phi |<Phi|psi>|^2 = (sum_k sqrt(lambda_k))^2 / 2^{N_A}.
/// Requires N_A <= N_B.
double max_overlap_max_entangled(const StateVector& state,
                                 const QubitPartition& partition);

/// All 4^N normalized Pauli coefficients of |psi><psi|. Entry index encodes
/// the operator in base 4, digit q (weight 4^q) giving qubit q+1's label in
/// the order I, X, Y, Z. Capped at N <= 8.
std::vector<double> pauli_coefficients(const StateVector& state);

/// Label string for a base-4 operator code, e.g. code 6 on 2 qubits = "YX".
PauliString pauli_string_from_code(int n_qubits, std::uint64_t code);

/// Support mask (bit q = qubit q+1 non-identity) of a base-4 operator code.
std::uint64_t pauli_code_support_mask(int n_qubits, std::uint64_t code);

}  // namespace entmix

#endif
