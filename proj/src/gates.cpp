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

#include "entmix/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace entmix {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

const char* gate_name(GateId id) {
  switch (id) {
    case GateId::haar:
      return "haar";
    case GateId::pauli_x:
      return "X";
    case GateId::pauli_y:
      return "Y";
    case GateId::pauli_z:
      return "Z";
    case GateId::phase_s:
      return "S";
    case GateId::hadamard:
      return "H";
  }
  throw std::invalid_argument("gate_name: bad id");
}

Mat2 gate_matrix(GateId id) {
  Mat2 m;
  switch (id) {
    case GateId::haar:
      throw std::invalid_argument("gate_matrix: haar has no fixed matrix");
    case GateId::pauli_x:
      m << 0, 1, 1, 0;
      return m;
    case GateId::pauli_y:
      m << 0, -kI, kI, 0;
      return m;
    case GateId::pauli_z:
      m << 1, 0, 0, -1;
      return m;
    case GateId::phase_s:
      m << 1, 0, 0, kI;
      return m;
    case GateId::hadamard:
      m << 1, 1, 1, -1;
      return m / std::sqrt(2.0);
  }
  throw std::invalid_argument("gate_matrix: bad id");
}

bool is_unitary(const Mat2& u, double tol) {
  return (u.adjoint() * u - Mat2::Identity()).cwiseAbs().maxCoeff() <= tol;
}

Mat2 sample_haar_u2(RngStream& rng) {
  // Gram-Schmidt on a complex Ginibre matrix. Forcing the triangular
  // factor's diagonal to be real positive makes the Q factor exactly Haar.
  std::complex<double> a = rng.complex_normal();
  std::complex<double> b = rng.complex_normal();
  std::complex<double> c = rng.complex_normal();
  std::complex<double> d = rng.complex_normal();

  double na = std::sqrt(std::norm(a) + std::norm(c));
  std::complex<double> q00 = a / na;
  std::complex<double> q10 = c / na;
  std::complex<double> proj = std::conj(q00) * b + std::conj(q10) * d;
  std::complex<double> r0 = b - proj * q00;
  std::complex<double> r1 = d - proj * q10;
  double nr = std::sqrt(std::norm(r0) + std::norm(r1));
  std::complex<double> q01 = r0 / nr;
  std::complex<double> q11 = r1 / nr;

  Mat2 u;
  u << q00, q01, q10, q11;
  return u;
}

SingleQubitGate sample_stabilizer_gate(RngStream& rng) {
  static const GateId kSet[5] = {GateId::pauli_x, GateId::pauli_y,
                                 GateId::pauli_z, GateId::phase_s,
                                 GateId::hadamard};
  GateId id = kSet[rng.uniform_int(5)];
  return SingleQubitGate{id, gate_matrix(id)};
}

GateEvent sample_gate_event(RngStream& rng, int n_qubits, GateSet set) {
  if (n_qubits < 2) {
    throw std::invalid_argument("sample_gate_event: needs at least 2 qubits");
  }
  GateEvent ev;
  ev.control = static_cast<int>(rng.uniform_int(n_qubits));
  int t = static_cast<int>(rng.uniform_int(n_qubits - 1));
  ev.target = t + (t >= ev.control ? 1 : 0);
  if (set == GateSet::haar) {
    ev.on_control = SingleQubitGate{GateId::haar, sample_haar_u2(rng)};
    ev.on_target = SingleQubitGate{GateId::haar, sample_haar_u2(rng)};
  } else {
    ev.on_control = sample_stabilizer_gate(rng);
    ev.on_target = sample_stabilizer_gate(rng);
  }
  return ev;
}

}  // namespace entmix
