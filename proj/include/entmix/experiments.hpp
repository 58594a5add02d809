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

#ifndef ENTMIX_EXPERIMENTS_HPP
#define ENTMIX_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "entmix/analysis.hpp"
#include "entmix/spectral.hpp"

namespace entmix {

enum class Engine { statevector, subset_mc, subset_exact, stabilizer };

Engine engine_from_name(std::string_view name);
const char* engine_name(Engine engine);

struct SeriesPoint {
  std::int64_t step = 0;
  double mean = 0.0;
  double std_error = 0.0;
};

struct ExperimentSeries {
  Engine engine = Engine::statevector;
  int n_qubits = 0;
  int n_a = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<SeriesPoint> points;
};

struct EntropyResult {
  ExperimentSeries series;
  std::vector<EntropyHistogram> histograms;  // one per sampled step
};

/// 0, 1, 2, 4, 8, ... max_steps (max always included).
std::vector<std::int64_t> geometric_schedule(std::int64_t max_steps);
/// Finer geometric schedule for resolving curve shapes.
std::vector<std::int64_t> dense_geometric_schedule(std::int64_t max_steps,
                                                   double ratio);
/// Parses "0,5,25" (strictly increasing, non-negative) or "geo:<max>".
std::vector<std::int64_t> parse_steps_spec(const std::string& spec);

/// Mean block purity per sampled step. The block A is the first n_a qubits.
/// Engines: statevector (haar set), stabilizer (restricted set), subset_mc
/// (trajectory containment), subset_exact (matrix propagation; trials
/// ignored, errors zero). Trajectory trial k uses RngStream(seed, k).
ExperimentSeries run_purity_experiment(Engine engine, int n_qubits, int n_a,
                                       const std::vector<std::int64_t>& steps,
                                       std::int64_t trials,
                                       std::uint64_t seed);

/// Mean block entanglement entropy per sampled step, with per-step integer
/// histograms. Engines: statevector or stabilizer only.
EntropyResult run_entropy_experiment(Engine engine, int n_qubits, int n_a,
                                     const std::vector<std::int64_t>& steps,
                                     std::int64_t trials, std::uint64_t seed);

enum class CutoffReference { asymptotic_empirical, haar_sampled };

CutoffReference reference_from_name(std::string_view name);
const char* reference_name(CutoffReference reference);

struct CutoffResult {
  TvCurve curve;
  CutoffReport report;
  EntropyHistogram reference;
  std::int64_t reference_burn_in = -1;  // steps, for asymptotic_empirical
};

/// Entropy-distribution total variation against a reference, over a dense
/// geometric schedule up to max_steps.
///
/// Engine choice follows the qubit count: statevector (haar gates) up to
/// twelve qubits, stabilizer beyond. haar_sampled references draw 10^4
/// normalized complex-Gaussian states (statevector range only);
/// asymptotic_empirical references rerun the engine's own circuit for
/// 20 ceil(N log2 N) burn-in steps on an independent set of streams.
/// Requires trials >= 10 * (n_a + 1).
CutoffResult run_cutoff_experiment(int n_qubits, int n_a, std::int64_t trials,
                                   std::int64_t max_steps,
                                   CutoffReference reference,
                                   std::uint64_t seed);

struct ThresholdMoments {
  double mean_entropy = 0.0;
  double se_entropy = 0.0;
  double mean_overlap = 0.0;
  double se_overlap = 0.0;
};

/// Dense-engine MC moments of the block entropy and of the best overlap
/// with a maximally entangled state, at a single step count.
ThresholdMoments run_threshold_moments(int n_qubits, int n_a,
                                       std::int64_t step, std::int64_t trials,
                                       std::uint64_t seed);

enum class VerifySuite { lemma1, theorem1, comparison };

VerifySuite suite_from_name(std::string_view name);
const char* suite_name(VerifySuite suite);

struct VerifyRow {
  std::string check;
  int n_qubits = 0;
  std::int64_t step = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

/// Machine-checkable bound suites over a qubit range.
///   lemma1: exact-chain purity deviation vs the 4^N envelope at every
///           step up to 90 N (N-1), every block size.
///   theorem1: statevector MC mean entropy and mean max-entangled overlap
///           at the threshold step count vs the two floors (one-sided,
///           3 sigma).
///   comparison: gap inequality chain, off-diagonal domination, diagonal
///           lower bound, stationarity and reversibility residuals, and
///           the comparison chain's own gap floor.
std::vector<VerifyRow> run_bound_verification(VerifySuite suite, int n_min,
                                              int n_max, std::int64_t trials,
                                              std::uint64_t seed);

/// Exact gap data for one qubit count (dense eigensolve).
GapReport gap_report(int n_qubits);

/// First step where the exactly propagated subset distribution is within
/// `threshold` total variation of stationarity.
std::int64_t exact_tv_mixing_step(int n_qubits, double threshold,
                                  std::int64_t max_steps = 1 << 20);

std::string purity_csv(const ExperimentSeries& series);
std::string entropy_csv(const ExperimentSeries& series);
std::string cutoff_csv(const TvCurve& curve);
std::string gap_csv(const std::vector<GapReport>& reports);
std::string verify_csv(const std::vector<VerifyRow>& rows);

std::string purity_json(const ExperimentSeries& series);
std::string entropy_json(const EntropyResult& result);
std::string cutoff_json(const CutoffResult& result);
std::string gap_json(const std::vector<GapReport>& reports);
std::string verify_json(const std::vector<VerifyRow>& rows);

}  // namespace entmix

#endif
