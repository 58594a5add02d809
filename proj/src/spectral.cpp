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

#include "entmix/spectral.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "entmix/subset_chain.hpp"

namespace entmix {

namespace {

void check_square_match(const Eigen::MatrixXd& q, const Eigen::VectorXd& m) {
  if (q.rows() != q.cols() || q.rows() != m.size() || q.rows() < 2) {
    throw std::invalid_argument("spectral: dimension mismatch");
  }
}

/// D^{1/2} Q D^{-1/2}, forced exactly symmetric; throws if detailed balance
/// fails beyond tolerance.
Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& q,
                           const Eigen::VectorXd& m) {
  check_square_match(q, m);
  const Eigen::Index dim = q.rows();
  Eigen::VectorXd root = m.cwiseSqrt();
  Eigen::MatrixXd a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      a(i, j) = root[i] * q(i, j) / root[j];
    }
  }
  double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) {
    throw std::invalid_argument("spectral: chain is not reversible");
  }
  return 0.5 * (a + a.transpose());
}

}  // namespace

double comparison_alpha(int n_qubits) {
  if (n_qubits < 2) {
    throw std::invalid_argument("comparison_alpha: needs N >= 2");
  }
  return 4.0 / (3.0 * (n_qubits - 1));
}

double chain_gap_bound(int n_qubits) {
  if (n_qubits < 2) {
    throw std::invalid_argument("chain_gap_bound: needs N >= 2");
  }
  return 4.0 / (9.0 * n_qubits * (n_qubits - 1));
}

double spectral_gap(const Eigen::MatrixXd& q, const Eigen::VectorXd& m) {
  if (q.rows() > kMaxDenseEigenDim) {
    throw std::invalid_argument("spectral_gap: past dense guard");
  }
  Eigen::MatrixXd a = symmetrize(q, m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("spectral_gap: eigensolver failed");
  }
  const auto& values = solver.eigenvalues();  // ascending
  return 1.0 - values[values.size() - 2];
}

double spectral_gap_power(const Eigen::MatrixXd& q, const Eigen::VectorXd& m,
                          double tol, std::int64_t max_iters) {
  Eigen::MatrixXd a = symmetrize(q, m);
  const Eigen::Index dim = a.rows();
  // Top eigenvector of the symmetrization is sqrt(M); deflate it and power
  // iterate for the second eigenvalue.
  Eigen::VectorXd top = m.cwiseSqrt();
  top.normalize();
  Eigen::VectorXd v = Eigen::VectorXd::Ones(dim) +
                      Eigen::VectorXd::LinSpaced(dim, 0.0, 1.0);
  v -= top * top.dot(v);
  v.normalize();
  double lambda = 0.0;
  double prev = 2.0;
  for (std::int64_t iter = 0; iter < max_iters; ++iter) {
    v = a * v;
    v -= top * top.dot(v);
    double norm = v.norm();
    if (norm == 0.0) {
      throw std::runtime_error("spectral_gap_power: degenerate start");
    }
    v /= norm;
    lambda = v.dot(a * v);
    if (std::abs(lambda - prev) < tol) {
      break;
    }
    prev = lambda;
  }
  return 1.0 - lambda;
}

Eigen::VectorXd second_eigenfunction(const Eigen::MatrixXd& q,
                                     const Eigen::VectorXd& m) {
  if (q.rows() > kMaxDenseEigenDim) {
    throw std::invalid_argument("second_eigenfunction: past dense guard");
  }
  Eigen::MatrixXd a = symmetrize(q, m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("second_eigenfunction: eigensolver failed");
  }
  Eigen::VectorXd v = solver.eigenvectors().col(a.rows() - 2);
  // Back to function space: f = D^{-1/2} v.
  Eigen::VectorXd f = v.cwiseQuotient(m.cwiseSqrt());
  f.normalize();
  return f;
}

double dirichlet_ratio(const Eigen::VectorXd& f, const Eigen::MatrixXd& q,
                       const Eigen::VectorXd& m) {
  check_square_match(q, m);
  if (f.size() != m.size()) {
    throw std::invalid_argument("dirichlet_ratio: size mismatch");
  }
  const Eigen::Index dim = m.size();
  double num = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      double d = f[i] - f[j];
      num += m[i] * q(i, j) * d * d;
    }
  }
  double mean = m.dot(f);
  double var = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    double d = f[i] - mean;
    var += m[i] * d * d;
  }
  // Denominator sum_{T,T'} M M (f - f')^2 collapses to twice the variance,
  // as does the numerator relative to the half-sum Dirichlet form.
  if (var < 1e-300) {
    throw std::invalid_argument("dirichlet_ratio: constant function");
  }
  return num / (2.0 * var);
}

double min_dirichlet_ratio(const Eigen::MatrixXd& q, const Eigen::VectorXd& m,
                           int restarts, int refine_iters, RngStream& rng) {
  check_square_match(q, m);
  if (restarts < 1) {
    throw std::invalid_argument("min_dirichlet_ratio: needs restarts >= 1");
  }
  const Eigen::Index dim = m.size();
  double best = std::numeric_limits<double>::infinity();
  for (int start = 0; start < restarts; ++start) {
    Eigen::VectorXd f(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      f[i] = 2.0 * rng.uniform01() - 1.0;
    }
    for (int iter = 0; iter <= refine_iters; ++iter) {
      f.array() -= m.dot(f);   // project out the constant mode
      double norm = f.norm();
      if (norm < 1e-300) {
        break;
      }
      f /= norm;
      best = std::min(best, dirichlet_ratio(f, q, m));
      if (iter < refine_iters) {
        f = q * f;
      }
    }
  }
  return best;
}

Eigen::MatrixXd comparison_chain_matrix(int n_qubits) {
  if (n_qubits < 2 || n_qubits > kMaxDenseChainQubits) {
    throw std::invalid_argument("comparison_chain_matrix: N out of range");
  }
  const std::int64_t dim = omega_dimension(n_qubits);
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(dim, dim);
  const double per_site = 1.0 / n_qubits;
  for (std::int64_t i = 0; i < dim; ++i) {
    const std::uint64_t mask = omega_mask(i);
    const int size = std::popcount(mask);
    for (int j = 0; j < n_qubits; ++j) {
      const std::uint64_t bit = std::uint64_t{1} << j;
      if (!(mask & bit)) {
        r(i, omega_index(mask | bit)) += per_site;
      } else if (size >= 2) {
        r(i, omega_index(mask & ~bit)) += per_site / 3.0;
        r(i, i) += per_site * 2.0 / 3.0;
      } else {
        r(i, i) += per_site;
      }
    }
  }
  return r;
}

DominationReport verify_comparison_domination(const Eigen::MatrixXd& q,
                                              const Eigen::MatrixXd& r,
                                              double alpha) {
  if (q.rows() != r.rows() || q.cols() != r.cols() || q.rows() != q.cols()) {
    throw std::invalid_argument(
        "verify_comparison_domination: shape mismatch");
  }
  DominationReport report;
  report.alpha = alpha;
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < q.rows(); ++i) {
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
      if (i == j) {
        continue;
      }
      double margin = q(i, j) - alpha * r(i, j);
      if (margin < report.worst_margin) {
        report.worst_margin = margin;
        report.worst_from = i;
        report.worst_to = j;
      }
    }
  }
  report.holds = report.worst_margin >= -1e-12;
  return report;
}

ConvergenceBound convergence_bound(double lambda, int n_qubits,
                                   double n_steps) {
  if (lambda <= 0.0 || lambda > 1.0) {
    throw std::invalid_argument("convergence_bound: lambda out of (0, 1]");
  }
  if (n_steps < 0.0) {
    throw std::invalid_argument("convergence_bound: negative step count");
  }
  ConvergenceBound bound;
  double decay = std::exp(-lambda * n_steps);
  bound.sharp = decay * std::sqrt((std::pow(4.0, n_qubits) - 1.0) / 3.0);
  bound.loose = decay * std::pow(2.0, n_qubits);
  return bound;
}

double lemma1_envelope(int n_qubits, double n_steps) {
  if (n_qubits < 2) {
    throw std::invalid_argument("lemma1_envelope: needs N >= 2");
  }
  if (n_steps < 0.0) {
    throw std::invalid_argument("lemma1_envelope: negative step count");
  }
  return std::pow(4.0, n_qubits) *
         std::exp(-4.0 * n_steps / (9.0 * n_qubits * (n_qubits - 1)));
}

}  // namespace entmix
