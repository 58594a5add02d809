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

#include "entmix/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace entmix {

namespace {

std::vector<int> member_positions(const SubsetState& s) {
  std::vector<int> out;
  for (int q = 0; q < s.n_qubits(); ++q) {
    if (s.contains(q)) {
      out.push_back(q);
    }
  }
  return out;
}

std::uint64_t extract_bits(std::uint64_t value,
                           const std::vector<int>& positions) {
  std::uint64_t out = 0;
  for (size_t k = 0; k < positions.size(); ++k) {
    out |= ((value >> positions[k]) & 1) << k;
  }
  return out;
}

/// Rectangular amplitude matrix K with K(row_A, col_B) = psi(basis index),
/// so rho_A = K K^dagger and rho_B = (K^dagger K)^T.
Eigen::MatrixXcd amplitude_matrix(const StateVector& state,
                                  const QubitPartition& partition) {
  if (partition.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument("amplitude_matrix: partition size mismatch");
  }
  std::vector<int> a_pos = member_positions(partition.a());
  std::vector<int> b_pos = member_positions(partition.complement());
  Eigen::MatrixXcd k(std::int64_t{1} << partition.n_a(),
                     std::int64_t{1} << partition.n_b());
  const auto& amps = state.amplitudes();
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    k(extract_bits(i, a_pos), extract_bits(i, b_pos)) = amps[i];
  }
  return k;
}

/// Eigenvalues of the smaller-side Gram matrix, descending, clipped to
/// [0, 1]. These are the nonzero eigenvalues of rho_A (padded with zeros).
Eigen::VectorXd gram_spectrum(const StateVector& state,
                              const QubitPartition& partition) {
  Eigen::MatrixXcd k = amplitude_matrix(state, partition);
  Eigen::MatrixXcd gram;
  if (k.rows() <= k.cols()) {
    gram = k * k.adjoint();
  } else {
    gram = k.adjoint() * k;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("gram_spectrum: eigensolver failed");
  }
  Eigen::VectorXd values = solver.eigenvalues().reverse();
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    values[i] = std::min(1.0, std::max(0.0, values[i]));
  }
  return values;
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("StateVector: qubit count out of range");
  }
  amps_.assign(std::uint64_t{1} << n_qubits, 0.0);
}

StateVector StateVector::zero_state(int n_qubits) {
  return basis_state(n_qubits, 0);
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t bits) {
  StateVector state(n_qubits);
  if (bits >= state.dim()) {
    throw std::invalid_argument("StateVector::basis_state: bits out of range");
  }
  state.amps_[bits] = 1.0;
  return state;
}

double StateVector::norm() const {
  double total = 0.0;
  for (const auto& a : amps_) {
    total += std::norm(a);
  }
  return std::sqrt(total);
}

void StateVector::apply_single_qubit(const Mat2& u, int qubit) {
  if (qubit < 0 || qubit >= n_) {
    throw std::invalid_argument("apply_single_qubit: qubit out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const std::complex<double> u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0),
                             u11 = u(1, 1);
  for (std::uint64_t base = 0; base < dim(); ++base) {
    if (base & bit) {
      continue;
    }
    std::complex<double> a0 = amps_[base];
    std::complex<double> a1 = amps_[base | bit];
    amps_[base] = u00 * a0 + u01 * a1;
    amps_[base | bit] = u10 * a0 + u11 * a1;
  }
}

void StateVector::apply_cnot(int control, int target) {
  if (control < 0 || control >= n_ || target < 0 || target >= n_ ||
      control == target) {
    throw std::invalid_argument("apply_cnot: bad qubit pair");
  }
  const std::uint64_t cbit = std::uint64_t{1} << control;
  const std::uint64_t tbit = std::uint64_t{1} << target;
  for (std::uint64_t i = 0; i < dim(); ++i) {
    if ((i & cbit) && !(i & tbit)) {
      std::swap(amps_[i], amps_[i | tbit]);
    }
  }
}

void StateVector::apply_gate_event(const GateEvent& event) {
  apply_single_qubit(event.on_control.matrix, event.control);
  apply_single_qubit(event.on_target.matrix, event.target);
  apply_cnot(event.control, event.target);
}

Eigen::MatrixXcd reduced_density_matrix(const StateVector& state,
                                        const QubitPartition& partition) {
  Eigen::MatrixXcd k = amplitude_matrix(state, partition);
  return k * k.adjoint();
}

Eigen::VectorXd reduced_spectrum(const StateVector& state,
                                 const QubitPartition& partition) {
  Eigen::VectorXd nonzero = gram_spectrum(state, partition);
  Eigen::Index full = Eigen::Index{1} << partition.n_a();
  if (nonzero.size() >= full) {
    return nonzero.head(full);
  }
  Eigen::VectorXd out = Eigen::VectorXd::Zero(full);
  out.head(nonzero.size()) = nonzero;
  return out;
}

double reduced_purity(const StateVector& state,
                      const QubitPartition& partition) {
  Eigen::MatrixXcd k = amplitude_matrix(state, partition);
  if (k.rows() <= k.cols()) {
    return (k * k.adjoint()).squaredNorm();
  }
  return (k.adjoint() * k).squaredNorm();
}

double entanglement_entropy(const StateVector& state,
                            const QubitPartition& partition) {
  Eigen::VectorXd spectrum = gram_spectrum(state, partition);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    if (spectrum[i] > 1e-12) {
      entropy -= spectrum[i] * std::log2(spectrum[i]);
    }
  }
  return entropy;
}

double max_overlap_max_entangled(const StateVector& state,
                                 const QubitPartition& partition) {
  if (partition.n_a() > partition.n_b()) {
    throw std::invalid_argument(
        "max_overlap_max_entangled: needs N_A <= N_B");
  }
  Eigen::VectorXd spectrum = gram_spectrum(state, partition);
  double root_sum = 0.0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    root_sum += std::sqrt(spectrum[i]);
  }
  return root_sum * root_sum / static_cast<double>(std::uint64_t{1}
                                                   << partition.n_a());
}

PauliString pauli_string_from_code(int n_qubits, std::uint64_t code) {
  PauliString p;
  p.labels.reserve(n_qubits);
  for (int q = 0; q < n_qubits; ++q) {
    p.labels.push_back(static_cast<Pauli>(code & 3));
    code >>= 2;
  }
  if (code != 0) {
    throw std::invalid_argument("pauli_string_from_code: code out of range");
  }
  return p;
}

std::uint64_t pauli_code_support_mask(int n_qubits, std::uint64_t code) {
  std::uint64_t mask = 0;
  for (int q = 0; q < n_qubits; ++q) {
    if ((code & 3) != 0) {
      mask |= std::uint64_t{1} << q;
    }
    code >>= 2;
  }
  if (code != 0) {
    throw std::invalid_argument("pauli_code_support_mask: code out of range");
  }
  return mask;
}

std::vector<double> pauli_coefficients(const StateVector& state) {
  const int n = state.n_qubits();
  if (n > 8) {
    throw std::invalid_argument("pauli_coefficients: capped at 8 qubits");
  }
  const std::uint64_t n_codes = std::uint64_t{1} << (2 * n);
  const double scale = std::pow(2.0, -0.5 * n);
  const auto& amps = state.amplitudes();
  std::vector<double> coefficients(n_codes);
  for (std::uint64_t code = 0; code < n_codes; ++code) {
    std::uint64_t xmask = 0, ymask = 0, zmask = 0;
    std::uint64_t c = code;
    for (int q = 0; q < n; ++q) {
      switch (static_cast<Pauli>(c & 3)) {
        case Pauli::I:
          break;
        case Pauli::X:
          xmask |= std::uint64_t{1} << q;
          break;
        case Pauli::Y:
          ymask |= std::uint64_t{1} << q;
          break;
        case Pauli::Z:
          zmask |= std::uint64_t{1} << q;
          break;
      }
      c >>= 2;
    }
    const std::uint64_t flip = xmask | ymask;
    const std::uint64_t sign_mask = ymask | zmask;
    // i^ny for Hermitian sigma_p combines with the (-1) pattern to a real
    // expectation; accumulate the full complex value and keep the real part.
    static const std::complex<double> kQuarterTurns[4] = {
        {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::complex<double> phase_y = kQuarterTurns[std::popcount(ymask) & 3];
    std::complex<double> total = 0.0;
    for (std::uint64_t b = 0; b < state.dim(); ++b) {
      double sign = (std::popcount(b & sign_mask) & 1) ? -1.0 : 1.0;
      total += std::conj(amps[b ^ flip]) * sign * amps[b];
    }
    coefficients[code] = (phase_y * total).real() * scale;
  }
  return coefficients;
}

}  // namespace entmix
