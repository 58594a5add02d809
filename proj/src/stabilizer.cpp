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

#include "entmix/stabilizer.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace entmix {

int gf2_rank(std::vector<std::uint64_t>& rows, int words_per_row) {
  if (words_per_row <= 0 || rows.size() % words_per_row != 0) {
    throw std::invalid_argument("gf2_rank: bad row width");
  }
  const int n_rows = static_cast<int>(rows.size()) / words_per_row;
  auto row = [&](int r) { return rows.data() + r * words_per_row; };
  int rank = 0;
  for (int w = 0; w < words_per_row && rank < n_rows; ++w) {
    for (int bit = 0; bit < 64 && rank < n_rows; ++bit) {
      const std::uint64_t mask = std::uint64_t{1} << bit;
      int pivot = -1;
      for (int r = rank; r < n_rows; ++r) {
        if (row(r)[w] & mask) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) {
        continue;
      }
      for (int k = 0; k < words_per_row; ++k) {
        std::swap(row(pivot)[k], row(rank)[k]);
      }
      for (int r = rank + 1; r < n_rows; ++r) {
        if (row(r)[w] & mask) {
          for (int k = 0; k < words_per_row; ++k) {
            row(r)[k] ^= row(rank)[k];
          }
        }
      }
      ++rank;
    }
  }
  return rank;
}

StabilizerTableau::StabilizerTableau(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("StabilizerTableau: qubit count out of range");
  }
  words_ = (n_qubits + 63) / 64;
  xcol_.assign(static_cast<size_t>(n_) * words_, 0);
  zcol_.assign(static_cast<size_t>(n_) * words_, 0);
  sign_.assign(words_, 0);
  // Generator g is Z on qubit g.
  for (int g = 0; g < n_; ++g) {
    zcol_[column_offset(g) + g / 64] |= std::uint64_t{1} << (g % 64);
  }
}

namespace {

void check_qubit(int qubit, int n_qubits, const char* where) {
  if (qubit < 0 || qubit >= n_qubits) {
    throw std::invalid_argument(std::string(where) + ": qubit out of range");
  }
}

}  // namespace

void StabilizerTableau::apply_x(int qubit) {
  // X: Z -> -Z, Y -> -Y.
  check_qubit(qubit, n_, "apply_x");
  const std::uint64_t* z = zcol_.data() + column_offset(qubit);
  for (int w = 0; w < words_; ++w) {
    sign_[w] ^= z[w];
  }
}

void StabilizerTableau::apply_y(int qubit) {
  // Y: X -> -X, Z -> -Z.
  check_qubit(qubit, n_, "apply_y");
  const std::uint64_t* x = xcol_.data() + column_offset(qubit);
  const std::uint64_t* z = zcol_.data() + column_offset(qubit);
  for (int w = 0; w < words_; ++w) {
    sign_[w] ^= x[w] ^ z[w];
  }
}

void StabilizerTableau::apply_z(int qubit) {
  // Z: X -> -X, Y -> -Y.
  check_qubit(qubit, n_, "apply_z");
  const std::uint64_t* x = xcol_.data() + column_offset(qubit);
  for (int w = 0; w < words_; ++w) {
    sign_[w] ^= x[w];
  }
}

void StabilizerTableau::apply_s(int qubit) {
  // S: X -> Y, Y -> -X, Z -> Z.
  check_qubit(qubit, n_, "apply_s");
  std::uint64_t* x = xcol_.data() + column_offset(qubit);
  std::uint64_t* z = zcol_.data() + column_offset(qubit);
  for (int w = 0; w < words_; ++w) {
    sign_[w] ^= x[w] & z[w];
    z[w] ^= x[w];
  }
}

void StabilizerTableau::apply_h(int qubit) {
  // H: X <-> Z, Y -> -Y.
  check_qubit(qubit, n_, "apply_h");
  std::uint64_t* x = xcol_.data() + column_offset(qubit);
  std::uint64_t* z = zcol_.data() + column_offset(qubit);
  for (int w = 0; w < words_; ++w) {
    sign_[w] ^= x[w] & z[w];
    std::swap(x[w], z[w]);
  }
}

void StabilizerTableau::apply_cnot(int control, int target) {
  if (control == target) {
    throw std::invalid_argument("apply_cnot: control equals target");
  }
  check_qubit(control, n_, "apply_cnot");
  check_qubit(target, n_, "apply_cnot");
  std::uint64_t* xc = xcol_.data() + column_offset(control);
  std::uint64_t* zc = zcol_.data() + column_offset(control);
  std::uint64_t* xt = xcol_.data() + column_offset(target);
  std::uint64_t* zt = zcol_.data() + column_offset(target);
  for (int w = 0; w < words_; ++w) {
    sign_[w] ^= xc[w] & zt[w] & ~(xt[w] ^ zc[w]);
    xt[w] ^= xc[w];
    zc[w] ^= zt[w];
  }
}

void StabilizerTableau::apply_gate_event(const GateEvent& event) {
  auto apply_one = [&](const SingleQubitGate& gate, int qubit) {
    switch (gate.id) {
      case GateId::haar:
        throw std::invalid_argument(
            "StabilizerTableau: haar gate is not a Clifford operation");
      case GateId::pauli_x:
        apply_x(qubit);
        return;
      case GateId::pauli_y:
        apply_y(qubit);
        return;
      case GateId::pauli_z:
        apply_z(qubit);
        return;
      case GateId::phase_s:
        apply_s(qubit);
        return;
      case GateId::hadamard:
        apply_h(qubit);
        return;
    }
    throw std::invalid_argument("StabilizerTableau: bad gate id");
  };
  apply_one(event.on_control, event.control);
  apply_one(event.on_target, event.target);
  apply_cnot(event.control, event.target);
}

bool StabilizerTableau::generator_x(int generator, int qubit) const {
  return (xcol_[column_offset(qubit) + generator / 64] >> (generator % 64)) & 1;
}

bool StabilizerTableau::generator_z(int generator, int qubit) const {
  return (zcol_[column_offset(qubit) + generator / 64] >> (generator % 64)) & 1;
}

bool StabilizerTableau::generator_sign(int generator) const {
  return (sign_[generator / 64] >> (generator % 64)) & 1;
}

int StabilizerTableau::entanglement_entropy(
    const QubitPartition& partition) const {
  if (partition.n_qubits() != n_) {
    throw std::invalid_argument("entanglement_entropy: partition mismatch");
  }
  const int n_a = partition.n_a();
  const int bits_per_row = 2 * n_a;
  const int words_per_row = (bits_per_row + 63) / 64;
  std::vector<std::uint64_t> rows(static_cast<size_t>(n_) * words_per_row, 0);
  int k = 0;
  for (int q = 0; q < n_; ++q) {
    if (!partition.a().contains(q)) {
      continue;
    }
    const std::uint64_t* x = xcol_.data() + column_offset(q);
    const std::uint64_t* z = zcol_.data() + column_offset(q);
    for (int g = 0; g < n_; ++g) {
      std::uint64_t* row = rows.data() + static_cast<size_t>(g) * words_per_row;
      if ((x[g / 64] >> (g % 64)) & 1) {
        row[k / 64] |= std::uint64_t{1} << (k % 64);
      }
      int kz = n_a + k;
      if ((z[g / 64] >> (g % 64)) & 1) {
        row[kz / 64] |= std::uint64_t{1} << (kz % 64);
      }
    }
    ++k;
  }
  return gf2_rank(rows, words_per_row) - n_a;
}

double StabilizerTableau::reduced_purity(const QubitPartition& partition) const {
  return std::ldexp(1.0, -entanglement_entropy(partition));
}

std::string StabilizerTableau::to_text() const {
  std::ostringstream ss;
  for (int g = 0; g < n_; ++g) {
    for (int q = 0; q < n_; ++q) {
      ss << (generator_x(g, q) ? '1' : '0');
    }
    ss << ' ';
    for (int q = 0; q < n_; ++q) {
      ss << (generator_z(g, q) ? '1' : '0');
    }
    ss << ' ' << (generator_sign(g) ? '1' : '0') << '\n';
  }
  return ss.str();
}

bool StabilizerTableau::check_invariants() const {
  // Row-major copy of the generators.
  const int words_per_side = (n_ + 63) / 64;
  std::vector<std::uint64_t> xrow(static_cast<size_t>(n_) * words_per_side, 0);
  std::vector<std::uint64_t> zrow(static_cast<size_t>(n_) * words_per_side, 0);
  for (int g = 0; g < n_; ++g) {
    for (int q = 0; q < n_; ++q) {
      if (generator_x(g, q)) {
        xrow[static_cast<size_t>(g) * words_per_side + q / 64] |=
            std::uint64_t{1} << (q % 64);
      }
      if (generator_z(g, q)) {
        zrow[static_cast<size_t>(g) * words_per_side + q / 64] |=
            std::uint64_t{1} << (q % 64);
      }
    }
  }
  // Pairwise commutation: the symplectic product must vanish.
  for (int g = 0; g < n_; ++g) {
    for (int h = g + 1; h < n_; ++h) {
      int parity = 0;
      for (int w = 0; w < words_per_side; ++w) {
        std::uint64_t gx = xrow[static_cast<size_t>(g) * words_per_side + w];
        std::uint64_t gz = zrow[static_cast<size_t>(g) * words_per_side + w];
        std::uint64_t hx = xrow[static_cast<size_t>(h) * words_per_side + w];
        std::uint64_t hz = zrow[static_cast<size_t>(h) * words_per_side + w];
        parity ^= (std::popcount(gx & hz) ^ std::popcount(gz & hx)) & 1;
      }
      if (parity) {
        return false;
      }
    }
  }
  // Independence: the N x 2N bit matrix has full rank.
  const int words_per_row = (2 * n_ + 63) / 64;
  std::vector<std::uint64_t> rows(static_cast<size_t>(n_) * words_per_row, 0);
  for (int g = 0; g < n_; ++g) {
    std::uint64_t* row = rows.data() + static_cast<size_t>(g) * words_per_row;
    for (int q = 0; q < n_; ++q) {
      if (generator_x(g, q)) {
        row[q / 64] |= std::uint64_t{1} << (q % 64);
      }
      int qz = n_ + q;
      if (generator_z(g, q)) {
        row[qz / 64] |= std::uint64_t{1} << (qz % 64);
      }
    }
  }
  return gf2_rank(rows, words_per_row) == n_;
}

}  // namespace entmix
