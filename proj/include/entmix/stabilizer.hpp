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

#ifndef ENTMIX_STABILIZER_HPP
#define ENTMIX_STABILIZER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "entmix/gates.hpp"
#include "entmix/pauli.hpp"

namespace entmix {

/// Rank over GF(2) of a bit-packed row-major matrix; destroys `rows`.
int gf2_rank(std::vector<std::uint64_t>& rows, int words_per_row);

/// Stabilizer generator tableau for an N-qubit stabilizer state.
///
/// Generator g's X and Z bits for qubit q live at bit g of column words, so
/// every gate update touches O(N / 64) words per column. Signs are tracked
/// exactly; they do not affect entanglement but keep the state well defined.
class StabilizerTableau {
 public:
  static constexpr int kMaxQubits = 4096;

  /// Starts in the all-zeros computational basis state (generators Z_q).
  explicit StabilizerTableau(int n_qubits);

  int n_qubits() const { return n_; }

  void apply_x(int qubit);
  void apply_y(int qubit);
  void apply_z(int qubit);
  void apply_s(int qubit);
  void apply_h(int qubit);
  void apply_cnot(int control, int target);

  /// Applies the two single-qubit gates then the CNOT; throws if either
  /// single-qubit gate is GateId::haar.
  void apply_gate_event(const GateEvent& event);

  bool generator_x(int generator, int qubit) const;
  bool generator_z(int generator, int qubit) const;
  bool generator_sign(int generator) const;

  /// Entanglement entropy of the block, in bits (an exact integer):
  /// rank over GF(2) of the generators restricted to A, minus N_A.
  int entanglement_entropy(const QubitPartition& partition) const;

  /// Tr[rho_A^2] = 2^{-entropy}.
  double reduced_purity(const QubitPartition& partition) const;

  /// One line per generator: N X-bits, N Z-bits, sign bit, space separated.
  std::string to_text() const;

  /// Generators are independent (full GF(2) rank) and pairwise commuting.
  bool check_invariants() const;

 private:
  int column_offset(int qubit) const { return qubit * words_; }

  int n_;
  int words_;                        // words per column, over generators
  std::vector<std::uint64_t> xcol_;  // n_ columns x words_
  std::vector<std::uint64_t> zcol_;
  std::vector<std::uint64_t> sign_;  // one bit per generator
};

}  // namespace entmix

#endif
