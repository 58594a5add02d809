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

#ifndef ENTMIX_SPECTRAL_HPP
#define ENTMIX_SPECTRAL_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "entmix/rng.hpp"

namespace entmix {

/// Dense symmetric eigensolve guard: |Omega| = 2^12 - 1 at twelve qubits.
inline constexpr Eigen::Index kMaxDenseEigenDim = 4095;

struct GapReport {
  int n_qubits = 0;
  double gap_exact = 0.0;
  double gap_paper_bound = 0.0;  // 4 / (9 N (N-1))
  double alpha = 0.0;            // 4 / (3 (N-1))
  double gap_r = 0.0;            // comparison chain gap
};

double comparison_alpha(int n_qubits);
double chain_gap_bound(int n_qubits);

/// Spectral gap of a reversible chain: 1 minus the second-largest
/// eigenvalue, from the dense symmetrization D^{1/2} Q D^{-1/2}.
/// Throws if (Q, m) fails detailed balance.
double spectral_gap(const Eigen::MatrixXd& q, const Eigen::VectorXd& m);

/// Same gap via deflated power iteration on the symmetrized matrix; usable
/// past the dense-eigensolve guard. Requires the second eigenvalue to be
/// positive (true for the chains here, whose most negative eigenvalue is
/// tiny).
double spectral_gap_power(const Eigen::MatrixXd& q, const Eigen::VectorXd& m,
                          double tol = 1e-10, std::int64_t max_iters = 200000);

/// The second eigenfunction f (Qf = (1 - gap) f), normalized, via the dense
/// decomposition.
Eigen::VectorXd second_eigenfunction(const Eigen::MatrixXd& q,
                                     const Eigen::VectorXd& m);

/// Variational ratio
///   sum_{S,S'} M(S) Q(S,S') (f(S)-f(S'))^2
///   -------------------------------------- ,
///   sum_{T,T'} M(T) M(T') (f(T)-f(T'))^2
/// always >= the spectral gap; equality at the second eigenfunction.
double dirichlet_ratio(const Eigen::VectorXd& f, const Eigen::MatrixXd& q,
                       const Eigen::VectorXd& m);

/// Minimizes the variational ratio from random starts, each refined by
/// mean-deflated power iteration, and returns the smallest ratio seen.
double min_dirichlet_ratio(const Eigen::MatrixXd& q, const Eigen::VectorXd& m,
                           int restarts, int refine_iters, RngStream& rng);

/// The comparison chain R on Omega: pick a uniform qubit j; add it if
/// absent; if present, remove with probability 1/3 unless that would empty
/// the set. Reversible with the same stationary law as Q.
Eigen::MatrixXd comparison_chain_matrix(int n_qubits);

struct DominationReport {
  bool holds = false;
  double alpha = 0.0;
  /// Minimum over off-diagonal pairs of Q(S,S') - alpha R(S,S');
  /// negative means a violation.
  double worst_margin = 0.0;
  std::int64_t worst_from = -1;
  std::int64_t worst_to = -1;
};

/// Certifies alpha R(S,S') <= Q(S,S') over all off-diagonal pairs (the
/// entries that enter the Dirichlet form).
DominationReport verify_comparison_domination(const Eigen::MatrixXd& q,
                                              const Eigen::MatrixXd& r,
                                              double alpha);

struct ConvergenceBound {
  double sharp = 0.0;  // e^{-lambda n} sqrt((4^N - 1) / 3)
  double loose = 0.0;  // 2^N e^{-lambda n}
};

ConvergenceBound convergence_bound(double lambda, int n_qubits,
                                   double n_steps);

/// 4^N exp(-4 n / (9 N (N-1))).
double lemma1_envelope(int n_qubits, double n_steps);

}  // namespace entmix

#endif
