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

#include "entmix/pauli.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace entmix {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I:
      return 'I';
    case Pauli::X:
      return 'X';
    case Pauli::Y:
      return 'Y';
    case Pauli::Z:
      return 'Z';
  }
  throw std::invalid_argument("pauli_char: bad label");
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I':
      return Pauli::I;
    case 'X':
      return Pauli::X;
    case 'Y':
      return Pauli::Y;
    case 'Z':
      return Pauli::Z;
    default:
      throw std::invalid_argument(std::string("pauli_from_char: bad label '") +
                                  c + "'");
  }
}

SubsetState::SubsetState(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 0) {
    throw std::invalid_argument("SubsetState: negative qubit count");
  }
  words_.assign((n_qubits + 63) / 64, 0);
}

SubsetState SubsetState::from_mask(int n_qubits, std::uint64_t mask) {
  if (n_qubits > 64) {
    throw std::invalid_argument("SubsetState::from_mask: needs N <= 64");
  }
  if (n_qubits < 64 && (mask >> n_qubits) != 0) {
    throw std::invalid_argument("SubsetState::from_mask: mask out of range");
  }
  SubsetState s(n_qubits);
  if (!s.words_.empty()) {
    s.words_[0] = mask;
  }
  return s;
}

SubsetState SubsetState::from_indices_one_based(int n_qubits,
                                                const std::vector<int>& indices) {
  SubsetState s(n_qubits);
  for (int q : indices) {
    if (q < 1 || q > n_qubits) {
      throw std::invalid_argument("SubsetState: qubit index out of range");
    }
    s.set(q - 1, true);
  }
  return s;
}

bool SubsetState::contains(int qubit) const {
  if (qubit < 0 || qubit >= n_) {
    throw std::out_of_range("SubsetState::contains: qubit out of range");
  }
  return (words_[qubit / 64] >> (qubit % 64)) & 1;
}

void SubsetState::set(int qubit, bool in_set) {
  if (qubit < 0 || qubit >= n_) {
    throw std::out_of_range("SubsetState::set: qubit out of range");
  }
  std::uint64_t bit = std::uint64_t{1} << (qubit % 64);
  if (in_set) {
    words_[qubit / 64] |= bit;
  } else {
    words_[qubit / 64] &= ~bit;
  }
}

int SubsetState::count() const {
  int total = 0;
  for (std::uint64_t w : words_) {
    total += std::popcount(w);
  }
  return total;
}

bool SubsetState::is_subset_of(const SubsetState& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("SubsetState::is_subset_of: size mismatch");
  }
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) {
      return false;
    }
  }
  return true;
}

std::uint64_t SubsetState::to_mask() const {
  if (n_ > 64) {
    throw std::invalid_argument("SubsetState::to_mask: needs N <= 64");
  }
  return words_.empty() ? 0 : words_[0];
}

std::vector<int> SubsetState::indices_one_based() const {
  std::vector<int> out;
  for (int q = 0; q < n_; ++q) {
    if (contains(q)) {
      out.push_back(q + 1);
    }
  }
  return out;
}

std::string SubsetState::to_index_list() const {
  std::ostringstream ss;
  ss << '{';
  bool first = true;
  for (int q : indices_one_based()) {
    if (!first) {
      ss << ',';
    }
    ss << q;
    first = false;
  }
  ss << '}';
  return ss.str();
}

namespace {

struct ConjEntry {
  Pauli control;
  Pauli target;
  int sign;
};

// Indexed by 4 * control + target of the input pair.
constexpr ConjEntry kCnotConj[16] = {
    {Pauli::I, Pauli::I, +1},  // II
    {Pauli::I, Pauli::X, +1},  // IX
    {Pauli::Z, Pauli::Y, +1},  // IY
    {Pauli::Z, Pauli::Z, +1},  // IZ
    {Pauli::X, Pauli::X, +1},  // XI
    {Pauli::X, Pauli::I, +1},  // XX
    {Pauli::Y, Pauli::Z, +1},  // XY
    {Pauli::Y, Pauli::Y, -1},  // XZ
    {Pauli::Y, Pauli::X, +1},  // YI
    {Pauli::Y, Pauli::I, +1},  // YX
    {Pauli::X, Pauli::Z, -1},  // YY
    {Pauli::X, Pauli::Y, +1},  // YZ
    {Pauli::Z, Pauli::I, +1},  // ZI
    {Pauli::Z, Pauli::X, +1},  // ZX
    {Pauli::I, Pauli::Y, +1},  // ZY
    {Pauli::I, Pauli::Z, +1},  // ZZ
};

}  // namespace

PauliPair cnot_conjugate(const PauliPair& p) {
  if (p.sign != +1 && p.sign != -1) {
    throw std::invalid_argument("cnot_conjugate: sign must be +1 or -1");
  }
  const ConjEntry& e =
      kCnotConj[4 * static_cast<int>(p.control) + static_cast<int>(p.target)];
  return PauliPair{e.control, e.target, p.sign * e.sign};
}

OccupationPair OccupationPair::from_index(int index) {
  if (index < 0 || index > 3) {
    throw std::invalid_argument("OccupationPair::from_index: out of range");
  }
  return OccupationPair{(index & 2) != 0, (index & 1) != 0};
}

OccupationPair occupation_of(const PauliPair& p) {
  return OccupationPair{p.control != Pauli::I, p.target != Pauli::I};
}

std::array<int, 4> local_transition_ninths(const OccupationPair& occ) {
  // Enumerate the single-qubit twirl over non-identity labels on each
  // occupied slot, push every combination through cnot_conjugate, and tally
  // the resulting occupations. Each occupied slot contributes a factor 1/3,
  // scaled to ninths.
  std::array<int, 4> tally = {0, 0, 0, 0};
  std::array<Pauli, 3> non_identity = {Pauli::X, Pauli::Y, Pauli::Z};
  std::vector<Pauli> control_choices =
      occ.control ? std::vector<Pauli>(non_identity.begin(), non_identity.end())
                  : std::vector<Pauli>{Pauli::I};
  std::vector<Pauli> target_choices =
      occ.target ? std::vector<Pauli>(non_identity.begin(), non_identity.end())
                 : std::vector<Pauli>{Pauli::I};
  int weight = 9 / static_cast<int>(control_choices.size() *
                                    target_choices.size());
  for (Pauli c : control_choices) {
    for (Pauli t : target_choices) {
      PauliPair image = cnot_conjugate(PauliPair{c, t, +1});
      tally[occupation_of(image).index()] += weight;
    }
  }
  return tally;
}

std::array<double, 4> local_transition_distribution(const OccupationPair& occ) {
  std::array<int, 4> ninths = local_transition_ninths(occ);
  return {ninths[0] / 9.0, ninths[1] / 9.0, ninths[2] / 9.0, ninths[3] / 9.0};
}

SubsetState PauliString::support() const {
  SubsetState s(n_qubits());
  for (int q = 0; q < n_qubits(); ++q) {
    if (labels[q] != Pauli::I) {
      s.set(q, true);
    }
  }
  return s;
}

PauliString PauliString::from_string(std::string_view s) {
  PauliString p;
  p.labels.reserve(s.size());
  for (char c : s) {
    p.labels.push_back(pauli_from_char(c));
  }
  return p;
}

std::string PauliString::str() const {
  std::string out;
  out.reserve(labels.size());
  for (Pauli p : labels) {
    out.push_back(pauli_char(p));
  }
  return out;
}

QubitPartition::QubitPartition(int n_qubits, SubsetState a)
    : n_(n_qubits), n_a_(a.count()), a_(std::move(a)) {
  if (n_qubits < 2) {
    throw std::invalid_argument("QubitPartition: needs at least two qubits");
  }
  if (a_.n_qubits() != n_qubits) {
    throw std::invalid_argument("QubitPartition: subset size mismatch");
  }
  if (n_a_ == 0 || n_a_ == n_qubits) {
    throw std::invalid_argument("QubitPartition: block must be proper");
  }
}

QubitPartition QubitPartition::first(int n_qubits, int n_a) {
  if (n_a < 1 || n_a >= n_qubits) {
    throw std::invalid_argument("QubitPartition::first: bad block size");
  }
  SubsetState a(n_qubits);
  for (int q = 0; q < n_a; ++q) {
    a.set(q, true);
  }
  return QubitPartition(n_qubits, a);
}

SubsetState QubitPartition::complement() const {
  SubsetState b(n_);
  for (int q = 0; q < n_; ++q) {
    b.set(q, !a_.contains(q));
  }
  return b;
}

}  // namespace entmix
