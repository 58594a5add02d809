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

#ifndef ENTMIX_PAULI_HPP
#define ENTMIX_PAULI_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace entmix {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// Set of qubit positions, stored as a packed bit vector.
///
/// Qubit indices are 0-based in code; serialized index lists are 1-based.
class SubsetState {
 public:
  SubsetState() = default;
  explicit SubsetState(int n_qubits);
  static SubsetState from_mask(int n_qubits, std::uint64_t mask);
  static SubsetState from_indices_one_based(int n_qubits,
                                            const std::vector<int>& indices);

  int n_qubits() const { return n_; }
  bool contains(int qubit) const;
  void set(int qubit, bool in_set);
  int count() const;
  bool empty() const { return count() == 0; }
  bool is_subset_of(const SubsetState& other) const;

  /// Bit i of the result corresponds to qubit i (0-based). Requires N <= 64.
  std::uint64_t to_mask() const;
  std::vector<int> indices_one_based() const;
  /// Serializes as a 1-based index list, e.g. "{1,3}".
  std::string to_index_list() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const SubsetState&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Pauli labels on an ordered (control, target) qubit pair, with a sign.
struct PauliPair {
  Pauli control = Pauli::I;
  Pauli target = Pauli::I;
  int sign = +1;

  bool operator==(const PauliPair&) const = default;
};

/// Conjugates control(x)target by CNOT with the control on the first slot.
/// The map is an involution; only the XZ <-> YY transitions flip the sign.
PauliPair cnot_conjugate(const PauliPair& p);

/// Records which of the (control, target) labels are non-identity.
struct OccupationPair {
  bool control = false;
  bool target = false;

  int index() const { return (control ? 2 : 0) | (target ? 1 : 0); }
  static OccupationPair from_index(int index);

  bool operator==(const OccupationPair&) const = default;
};

OccupationPair occupation_of(const PauliPair& p);

/// Occupation kernel of one two-qubit gate, as exact ninths: entry k is
/// 9 * Pr[next occupation has index k]. Each row sums to 9.
std::array<int, 4> local_transition_ninths(const OccupationPair& occ);
std::array<double, 4> local_transition_distribution(const OccupationPair& occ);

/// An N-qubit Pauli operator as a label per qubit (sign ignored).
struct PauliString {
  std::vector<Pauli> labels;

  int n_qubits() const { return static_cast<int>(labels.size()); }
  SubsetState support() const;
  /// Parses an uppercase string over {I,X,Y,Z}; character k addresses
  /// qubit k+1.
  static PauliString from_string(std::string_view s);
  std::string str() const;

  bool operator==(const PauliString&) const = default;
};

/// Bipartition of the qubits into a block A and its complement B.
class QubitPartition {
 public:
  QubitPartition(int n_qubits, SubsetState a);
  /// The first n_a qubits form A.
  static QubitPartition first(int n_qubits, int n_a);

  int n_qubits() const { return n_; }
  const SubsetState& a() const { return a_; }
  SubsetState complement() const;
  int n_a() const { return n_a_; }
  int n_b() const { return n_ - n_a_; }
  /// Size offset t = N_B - N_A.
  int offset() const { return n_b() - n_a(); }

 private:
  int n_;
  int n_a_;
  SubsetState a_;
};

}  // namespace entmix

#endif
