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

#include "entmix/subset_chain.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "entmix/statevector.hpp"

namespace entmix {

namespace {

void check_chain_qubits(int n_qubits, int cap) {
  if (n_qubits < 1 || n_qubits > cap) {
    throw std::invalid_argument("subset chain: qubit count out of range");
  }
}

/// Applies one sampled occupation outcome to the (control, target) bits of
/// a mask.
std::uint64_t apply_outcome(std::uint64_t mask, int control, int target,
                            int outcome_index) {
  OccupationPair occ = OccupationPair::from_index(outcome_index);
  std::uint64_t cbit = std::uint64_t{1} << control;
  std::uint64_t tbit = std::uint64_t{1} << target;
  mask = occ.control ? (mask | cbit) : (mask & ~cbit);
  mask = occ.target ? (mask | tbit) : (mask & ~tbit);
  return mask;
}

}  // namespace

Eigen::VectorXd initial_subset_distribution(int n_qubits,
                                            std::uint64_t basis_bits) {
  check_chain_qubits(n_qubits, kMaxDenseChainQubits);
  std::uint64_t n_subsets = std::uint64_t{1} << n_qubits;
  if (basis_bits >= n_subsets) {
    throw std::invalid_argument(
        "initial_subset_distribution: basis state out of range");
  }
  // Any computational basis state expands into the 2^N Z-type Pauli
  // operators with equal squared coefficients, so the support distribution
  // is uniform regardless of basis_bits.
  return Eigen::VectorXd::Constant(n_subsets, std::ldexp(1.0, -n_qubits));
}

SubsetState sample_initial_subset(int n_qubits, RngStream& rng) {
  SubsetState s(n_qubits);
  for (int q = 0; q < n_qubits; q += 64) {
    std::uint64_t word = rng.next_u64();
    int width = std::min(64, n_qubits - q);
    if (width < 64) {
      word &= (std::uint64_t{1} << width) - 1;
    }
    for (int b = 0; b < width; ++b) {
      if ((word >> b) & 1) {
        s.set(q + b, true);
      }
    }
  }
  return s;
}

SubsetState subset_chain_step(const SubsetState& s, RngStream& rng) {
  const int n = s.n_qubits();
  if (n < 2) {
    throw std::invalid_argument("subset_chain_step: needs at least 2 qubits");
  }
  int control = static_cast<int>(rng.uniform_int(n));
  int t = static_cast<int>(rng.uniform_int(n - 1));
  int target = t + (t >= control ? 1 : 0);
  OccupationPair occ{s.contains(control), s.contains(target)};
  if (occ.index() == 0) {
    return s;
  }
  std::array<double, 4> dist = local_transition_distribution(occ);
  double r = rng.uniform01();
  int outcome = 3;
  double acc = 0.0;
  for (int k = 0; k < 4; ++k) {
    acc += dist[k];
    if (r < acc) {
      outcome = k;
      break;
    }
  }
  SubsetState next = s;
  OccupationPair out = OccupationPair::from_index(outcome);
  next.set(control, out.control);
  next.set(target, out.target);
  return next;
}

std::vector<std::pair<std::int64_t, std::int64_t>> exact_subset_row_ninths(
    int n_qubits, std::uint64_t from_mask) {
  check_chain_qubits(n_qubits, kMaxDenseChainQubits);
  if (from_mask == 0 || from_mask >= (std::uint64_t{1} << n_qubits)) {
    throw std::invalid_argument("exact_subset_row_ninths: bad mask");
  }
  // Accumulate integer numerators over the denominator 9N(N-1).
  std::vector<std::int64_t> row(omega_dimension(n_qubits), 0);
  for (int control = 0; control < n_qubits; ++control) {
    for (int target = 0; target < n_qubits; ++target) {
      if (control == target) {
        continue;
      }
      OccupationPair occ{((from_mask >> control) & 1) != 0,
                         ((from_mask >> target) & 1) != 0};
      std::array<int, 4> ninths = local_transition_ninths(occ);
      for (int k = 0; k < 4; ++k) {
        if (ninths[k] == 0) {
          continue;
        }
        std::uint64_t to_mask = apply_outcome(from_mask, control, target, k);
        row[omega_index(to_mask)] += ninths[k];
      }
    }
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> entries;
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(row.size()); ++j) {
    if (row[j] != 0) {
      entries.emplace_back(j, row[j]);
    }
  }
  return entries;
}

Eigen::MatrixXd exact_subset_transition_matrix(int n_qubits) {
  check_chain_qubits(n_qubits, kMaxDenseChainQubits);
  if (n_qubits < 2) {
    throw std::invalid_argument(
        "exact_subset_transition_matrix: needs at least 2 qubits");
  }
  const std::int64_t dim = omega_dimension(n_qubits);
  const double denom = 9.0 * n_qubits * (n_qubits - 1);
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(dim, dim);
  for (std::int64_t i = 0; i < dim; ++i) {
    for (const auto& [j, ninths] : exact_subset_row_ninths(
             n_qubits, omega_mask(i))) {
      q(i, j) = static_cast<double>(ninths) / denom;
    }
  }
  return q;
}

Eigen::VectorXd stationary_distribution(int n_qubits) {
  check_chain_qubits(n_qubits, kMaxDenseChainQubits);
  const std::int64_t dim = omega_dimension(n_qubits);
  const double z = std::pow(4.0, n_qubits) - 1.0;
  Eigen::VectorXd m(dim);
  for (std::int64_t i = 0; i < dim; ++i) {
    m[i] = std::pow(3.0, std::popcount(omega_mask(i))) / z;
  }
  return m;
}

SubsetDistribution SubsetDistribution::initial(int n_qubits) {
  check_chain_qubits(n_qubits, kMaxDenseChainQubits);
  SubsetDistribution d;
  d.n_qubits = n_qubits;
  d.empty_weight = std::ldexp(1.0, -n_qubits);
  d.omega = Eigen::VectorXd::Constant(omega_dimension(n_qubits),
                                      std::ldexp(1.0, -n_qubits));
  return d;
}

void SubsetDistribution::step(const Eigen::MatrixXd& q) {
  if (q.rows() != omega.size() || q.cols() != omega.size()) {
    throw std::invalid_argument("SubsetDistribution::step: size mismatch");
  }
  omega = q.transpose() * omega;
}

double SubsetDistribution::total() const {
  return empty_weight + omega.sum();
}

double SubsetDistribution::containment(const SubsetState& a) const {
  if (a.n_qubits() != n_qubits) {
    throw std::invalid_argument("SubsetDistribution::containment: mismatch");
  }
  const std::uint64_t a_mask = a.to_mask();
  double prob = empty_weight;
  // Walk the nonempty submasks of a_mask.
  std::uint64_t sub = a_mask;
  while (sub != 0) {
    prob += omega[omega_index(sub)];
    sub = (sub - 1) & a_mask;
  }
  return prob;
}

Eigen::VectorXd SubsetDistribution::to_full_vector() const {
  Eigen::VectorXd full(omega.size() + 1);
  full[0] = empty_weight;
  full.tail(omega.size()) = omega;
  return full;
}

double purity_from_containment(double containment_probability, int n_b) {
  if (containment_probability < 0.0 || containment_probability > 1.0) {
    throw std::invalid_argument(
        "purity_from_containment: probability out of range");
  }
  if (n_b < 0) {
    throw std::invalid_argument("purity_from_containment: negative N_B");
  }
  return std::ldexp(containment_probability, n_b);
}

ContainmentEstimate estimate_containment(int n_qubits, const SubsetState& a,
                                         std::int64_t n_steps,
                                         std::int64_t trials,
                                         std::uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument("estimate_containment: needs trials >= 1");
  }
  if (a.n_qubits() != n_qubits) {
    throw std::invalid_argument("estimate_containment: subset size mismatch");
  }
  std::int64_t hits = 0;
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    RngStream rng(seed, static_cast<std::uint64_t>(trial));
    SubsetState s = sample_initial_subset(n_qubits, rng);
    for (std::int64_t step = 0; step < n_steps; ++step) {
      s = subset_chain_step(s, rng);
    }
    if (s.is_subset_of(a)) {
      ++hits;
    }
  }
  ContainmentEstimate est;
  est.trials = trials;
  est.value = static_cast<double>(hits) / static_cast<double>(trials);
  est.std_error =
      std::sqrt(est.value * (1.0 - est.value) / static_cast<double>(trials));
  return est;
}

Eigen::MatrixXd exact_full_chain_matrix(int n_qubits) {
  check_chain_qubits(n_qubits, kMaxFullChainQubits);
  if (n_qubits < 2) {
    throw std::invalid_argument(
        "exact_full_chain_matrix: needs at least 2 qubits");
  }
  const std::int64_t dim = std::int64_t{1} << (2 * n_qubits);
  const double pair_weight = 1.0 / (n_qubits * (n_qubits - 1));
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(dim, dim);
  const std::array<Pauli, 3> non_identity = {Pauli::X, Pauli::Y, Pauli::Z};
  for (std::int64_t code = 0; code < dim; ++code) {
    for (int control = 0; control < n_qubits; ++control) {
      for (int target = 0; target < n_qubits; ++target) {
        if (control == target) {
          continue;
        }
        auto label_at = [&](int q) {
          return static_cast<Pauli>((code >> (2 * q)) & 3);
        };
        Pauli lc = label_at(control);
        Pauli lt = label_at(target);
        std::vector<Pauli> control_choices =
            lc == Pauli::I ? std::vector<Pauli>{Pauli::I}
                           : std::vector<Pauli>(non_identity.begin(),
                                                non_identity.end());
        std::vector<Pauli> target_choices =
            lt == Pauli::I ? std::vector<Pauli>{Pauli::I}
                           : std::vector<Pauli>(non_identity.begin(),
                                                non_identity.end());
        double twirl_weight =
            1.0 / (control_choices.size() * target_choices.size());
        for (Pauli c : control_choices) {
          for (Pauli t : target_choices) {
            PauliPair image = cnot_conjugate(PauliPair{c, t, +1});
            std::int64_t next = code;
            next &= ~(std::int64_t{3} << (2 * control));
            next &= ~(std::int64_t{3} << (2 * target));
            next |= static_cast<std::int64_t>(image.control) << (2 * control);
            next |= static_cast<std::int64_t>(image.target) << (2 * target);
            p(code, next) += pair_weight * twirl_weight;
          }
        }
      }
    }
  }
  return p;
}

Eigen::VectorXd support_marginal(int n_qubits,
                                 const Eigen::VectorXd& code_dist) {
  const std::int64_t dim = std::int64_t{1} << (2 * n_qubits);
  if (code_dist.size() != dim) {
    throw std::invalid_argument("support_marginal: size mismatch");
  }
  Eigen::VectorXd marginal =
      Eigen::VectorXd::Zero(std::int64_t{1} << n_qubits);
  for (std::int64_t code = 0; code < dim; ++code) {
    marginal[pauli_code_support_mask(n_qubits, code)] += code_dist[code];
  }
  return marginal;
}

std::string matrix_coo_csv(const Eigen::MatrixXd& m, double drop_below) {
  std::ostringstream ss;
  ss.precision(17);
  ss << "row_index,col_index,value\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (std::abs(m(i, j)) > drop_below) {
        ss << i << ',' << j << ',' << m(i, j) << '\n';
      }
    }
  }
  return ss.str();
}

std::string subset_distribution_csv(const Eigen::VectorXd& full_vector) {
  std::ostringstream ss;
  ss.precision(17);
  ss << "subset_bits,probability\n";
  for (Eigen::Index mask = 0; mask < full_vector.size(); ++mask) {
    ss << mask << ',' << full_vector[mask] << '\n';
  }
  return ss.str();
}

}  // namespace entmix
