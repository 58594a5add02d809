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

#ifndef ENTMIX_GATES_HPP
#define ENTMIX_GATES_HPP

#include <Eigen/Dense>

#include "entmix/rng.hpp"

namespace entmix {

using Mat2 = Eigen::Matrix2cd;

enum class GateId {
  haar,
  pauli_x,
  pauli_y,
  pauli_z,
  phase_s,
  hadamard,
};

const char* gate_name(GateId id);

/// The fixed matrix for a named gate; throws for GateId::haar.
Mat2 gate_matrix(GateId id);

struct SingleQubitGate {
  GateId id = GateId::haar;
  Mat2 matrix;
};

/// Which single-qubit distribution the circuit draws from.
enum class GateSet {
  haar,
  stabilizer,
};

/// One random circuit step: CNOT[control, target] preceded by independent
/// single-qubit gates on the control and the target. Qubit indices are
/// 0-based in code and 1-based in serialized output.
struct GateEvent {
  int control = 0;
  int target = 0;
  SingleQubitGate on_control;
  SingleQubitGate on_target;
};

bool is_unitary(const Mat2& u, double tol = 1e-12);

/// Haar-distributed U(2) element: QR of a complex Ginibre sample with the
/// R diagonal phase convention fixed.
Mat2 sample_haar_u2(RngStream& rng);

/// Uniform element of {X, Y, Z, S, H}.
SingleQubitGate sample_stabilizer_gate(RngStream& rng);

/// Uniform ordered pair (control, target), control != target, plus the two
/// single-qubit draws for the chosen gate set.
GateEvent sample_gate_event(RngStream& rng, int n_qubits, GateSet set);

}  // namespace entmix

#endif
