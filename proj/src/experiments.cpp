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

#include "entmix/experiments.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "entmix/formulas.hpp"
#include "entmix/parallel.hpp"
#include "entmix/stabilizer.hpp"
#include "entmix/statevector.hpp"
#include "entmix/subset_chain.hpp"

namespace entmix {

namespace {

// Reference/auxiliary trajectories use stream indices far above any
// plausible trial count, so they never collide with trial streams.
constexpr std::uint64_t kAuxStreamOffset = std::uint64_t{1} << 32;

void validate_schedule(const std::vector<std::int64_t>& steps) {
  if (steps.empty()) {
    throw std::invalid_argument("step schedule: empty");
  }
  if (steps.front() < 0) {
    throw std::invalid_argument("step schedule: negative step");
  }
  for (size_t i = 1; i < steps.size(); ++i) {
    if (steps[i] <= steps[i - 1]) {
      throw std::invalid_argument("step schedule: must strictly increase");
    }
  }
}

/// Advances `state` through the random circuit, invoking record(point
/// index) at each scheduled step. State must expose apply_gate_event.
template <typename State, typename Record>
void walk_schedule(State& state, RngStream& rng, int n_qubits, GateSet set,
                   const std::vector<std::int64_t>& steps, Record&& record) {
  std::int64_t current = 0;
  for (size_t k = 0; k < steps.size(); ++k) {
    while (current < steps[k]) {
      state.apply_gate_event(sample_gate_event(rng, n_qubits, set));
      ++current;
    }
    record(k);
  }
}

/// Sequential reduction of a trials-by-points sample table into per-point
/// mean and standard error of the mean.
std::vector<SeriesPoint> aggregate_points(
    const std::vector<std::int64_t>& steps, const std::vector<double>& samples,
    std::int64_t trials) {
  const size_t n_points = steps.size();
  std::vector<SeriesPoint> points(n_points);
  for (size_t k = 0; k < n_points; ++k) {
    double sum = 0.0;
    for (std::int64_t t = 0; t < trials; ++t) {
      sum += samples[static_cast<size_t>(t) * n_points + k];
    }
    double mean = sum / static_cast<double>(trials);
    double sq = 0.0;
    for (std::int64_t t = 0; t < trials; ++t) {
      double d = samples[static_cast<size_t>(t) * n_points + k] - mean;
      sq += d * d;
    }
    double variance =
        trials > 1 ? sq / static_cast<double>(trials - 1) : 0.0;
    points[k] = SeriesPoint{steps[k], mean,
                            std::sqrt(variance / static_cast<double>(trials))};
  }
  return points;
}

void require_trials(std::int64_t trials) {
  if (trials < 1) {
    throw std::invalid_argument("experiment: needs trials >= 1");
  }
}

std::string format_double(double value) {
  std::ostringstream ss;
  ss.precision(17);
  ss << value;
  return ss.str();
}

}  // namespace

Engine engine_from_name(std::string_view name) {
  if (name == "statevector") return Engine::statevector;
  if (name == "subset_mc") return Engine::subset_mc;
  if (name == "subset_exact") return Engine::subset_exact;
  if (name == "stabilizer") return Engine::stabilizer;
  throw std::invalid_argument("unknown engine: " + std::string(name));
}

const char* engine_name(Engine engine) {
  switch (engine) {
    case Engine::statevector:
      return "statevector";
    case Engine::subset_mc:
      return "subset_mc";
    case Engine::subset_exact:
      return "subset_exact";
    case Engine::stabilizer:
      return "stabilizer";
  }
  throw std::invalid_argument("engine_name: bad engine");
}

CutoffReference reference_from_name(std::string_view name) {
  if (name == "asymptotic_empirical") return CutoffReference::asymptotic_empirical;
  if (name == "haar_sampled") return CutoffReference::haar_sampled;
  throw std::invalid_argument("unknown reference: " + std::string(name));
}

const char* reference_name(CutoffReference reference) {
  switch (reference) {
    case CutoffReference::asymptotic_empirical:
      return "asymptotic_empirical";
    case CutoffReference::haar_sampled:
      return "haar_sampled";
  }
  throw std::invalid_argument("reference_name: bad reference");
}

VerifySuite suite_from_name(std::string_view name) {
  if (name == "lemma1") return VerifySuite::lemma1;
  if (name == "theorem1") return VerifySuite::theorem1;
  if (name == "comparison") return VerifySuite::comparison;
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

const char* suite_name(VerifySuite suite) {
  switch (suite) {
    case VerifySuite::lemma1:
      return "lemma1";
    case VerifySuite::theorem1:
      return "theorem1";
    case VerifySuite::comparison:
      return "comparison";
  }
  throw std::invalid_argument("suite_name: bad suite");
}

std::vector<std::int64_t> geometric_schedule(std::int64_t max_steps) {
  if (max_steps < 0) {
    throw std::invalid_argument("geometric_schedule: negative max");
  }
  std::vector<std::int64_t> steps{0};
  for (std::int64_t s = 1; s < max_steps; s *= 2) {
    steps.push_back(s);
  }
  if (max_steps > 0) {
    steps.push_back(max_steps);
  }
  return steps;
}

std::vector<std::int64_t> dense_geometric_schedule(std::int64_t max_steps,
                                                   double ratio) {
  if (max_steps < 0 || ratio <= 1.0) {
    throw std::invalid_argument("dense_geometric_schedule: bad arguments");
  }
  std::vector<std::int64_t> steps{0};
  std::int64_t current = 0;
  while (current < max_steps) {
    auto next = static_cast<std::int64_t>(
        std::ceil(static_cast<double>(current) * ratio));
    current = std::min(max_steps, std::max(current + 1, next));
    steps.push_back(current);
  }
  return steps;
}

std::vector<std::int64_t> parse_steps_spec(const std::string& spec) {
  if (spec.empty()) {
    throw std::invalid_argument("steps spec: empty");
  }
  auto parse_count = [](const std::string& token) {
    size_t used = 0;
    std::int64_t value;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("steps spec: bad integer '" + token + "'");
    }
    if (used != token.size()) {
      throw std::invalid_argument("steps spec: bad integer '" + token + "'");
    }
    return value;
  };
  if (spec.rfind("geo:", 0) == 0) {
    return geometric_schedule(parse_count(spec.substr(4)));
  }
  std::vector<std::int64_t> steps;
  std::istringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    steps.push_back(parse_count(token));
  }
  validate_schedule(steps);
  return steps;
}

ExperimentSeries run_purity_experiment(Engine engine, int n_qubits, int n_a,
                                       const std::vector<std::int64_t>& steps,
                                       std::int64_t trials,
                                       std::uint64_t seed) {
  validate_schedule(steps);
  QubitPartition partition = QubitPartition::first(n_qubits, n_a);
  ExperimentSeries series;
  series.engine = engine;
  series.n_qubits = n_qubits;
  series.n_a = n_a;
  series.trials = trials;
  series.seed = seed;
  const size_t n_points = steps.size();

  if (engine == Engine::subset_exact) {
    Eigen::MatrixXd q = exact_subset_transition_matrix(n_qubits);
    SubsetDistribution dist = SubsetDistribution::initial(n_qubits);
    std::int64_t current = 0;
    for (size_t k = 0; k < n_points; ++k) {
      while (current < steps[k]) {
        dist.step(q);
        ++current;
      }
      double purity = purity_from_containment(dist.containment(partition.a()),
                                              partition.n_b());
      series.points.push_back(SeriesPoint{steps[k], purity, 0.0});
    }
    series.trials = 0;
    return series;
  }

  require_trials(trials);
  std::vector<double> samples(static_cast<size_t>(trials) * n_points);
  if (engine == Engine::statevector) {
    parallel_for(trials, [&](std::int64_t trial) {
      RngStream rng(seed, static_cast<std::uint64_t>(trial));
      StateVector state = StateVector::zero_state(n_qubits);
      walk_schedule(state, rng, n_qubits, GateSet::haar, steps, [&](size_t k) {
        samples[static_cast<size_t>(trial) * n_points + k] =
            reduced_purity(state, partition);
      });
    });
  } else if (engine == Engine::stabilizer) {
    parallel_for(trials, [&](std::int64_t trial) {
      RngStream rng(seed, static_cast<std::uint64_t>(trial));
      StabilizerTableau state(n_qubits);
      walk_schedule(state, rng, n_qubits, GateSet::stabilizer, steps,
                    [&](size_t k) {
                      samples[static_cast<size_t>(trial) * n_points + k] =
                          state.reduced_purity(partition);
                    });
    });
  } else {  // subset_mc
    const double scale = std::ldexp(1.0, partition.n_b());
    parallel_for(trials, [&](std::int64_t trial) {
      RngStream rng(seed, static_cast<std::uint64_t>(trial));
      SubsetState s = sample_initial_subset(n_qubits, rng);
      std::int64_t current = 0;
      for (size_t k = 0; k < n_points; ++k) {
        while (current < steps[k]) {
          s = subset_chain_step(s, rng);
          ++current;
        }
        samples[static_cast<size_t>(trial) * n_points + k] =
            s.is_subset_of(partition.a()) ? scale : 0.0;
      }
    });
  }
  series.points = aggregate_points(steps, samples, trials);
  return series;
}

EntropyResult run_entropy_experiment(Engine engine, int n_qubits, int n_a,
                                     const std::vector<std::int64_t>& steps,
                                     std::int64_t trials, std::uint64_t seed) {
  if (engine != Engine::statevector && engine != Engine::stabilizer) {
    throw std::invalid_argument(
        "run_entropy_experiment: engine must be statevector or stabilizer");
  }
  validate_schedule(steps);
  require_trials(trials);
  QubitPartition partition = QubitPartition::first(n_qubits, n_a);
  const size_t n_points = steps.size();
  std::vector<double> samples(static_cast<size_t>(trials) * n_points);
  if (engine == Engine::statevector) {
    parallel_for(trials, [&](std::int64_t trial) {
      RngStream rng(seed, static_cast<std::uint64_t>(trial));
      StateVector state = StateVector::zero_state(n_qubits);
      walk_schedule(state, rng, n_qubits, GateSet::haar, steps, [&](size_t k) {
        samples[static_cast<size_t>(trial) * n_points + k] =
            entanglement_entropy(state, partition);
      });
    });
  } else {
    parallel_for(trials, [&](std::int64_t trial) {
      RngStream rng(seed, static_cast<std::uint64_t>(trial));
      StabilizerTableau state(n_qubits);
      walk_schedule(state, rng, n_qubits, GateSet::stabilizer, steps,
                    [&](size_t k) {
                      samples[static_cast<size_t>(trial) * n_points + k] =
                          static_cast<double>(
                              state.entanglement_entropy(partition));
                    });
    });
  }
  EntropyResult result;
  result.series.engine = engine;
  result.series.n_qubits = n_qubits;
  result.series.n_a = n_a;
  result.series.trials = trials;
  result.series.seed = seed;
  result.series.points = aggregate_points(steps, samples, trials);
  for (size_t k = 0; k < n_points; ++k) {
    EntropyHistogram hist(n_qubits, n_a, steps[k]);
    for (std::int64_t t = 0; t < trials; ++t) {
      hist.add(samples[static_cast<size_t>(t) * n_points + k]);
    }
    result.histograms.push_back(std::move(hist));
  }
  return result;
}

CutoffResult run_cutoff_experiment(int n_qubits, int n_a, std::int64_t trials,
                                   std::int64_t max_steps,
                                   CutoffReference reference,
                                   std::uint64_t seed) {
  QubitPartition partition = QubitPartition::first(n_qubits, n_a);
  if (max_steps < 1) {
    throw std::invalid_argument("run_cutoff_experiment: needs max_steps >= 1");
  }
  const int bins = n_a + 1;
  if (trials < 10 * static_cast<std::int64_t>(bins)) {
    throw std::invalid_argument(
        "run_cutoff_experiment: needs trials >= 10 * (n_a + 1)");
  }
  const bool use_statevector = n_qubits <= 12;
  if (reference == CutoffReference::haar_sampled && !use_statevector) {
    throw std::invalid_argument(
        "run_cutoff_experiment: haar_sampled reference needs N <= 12");
  }
  std::vector<std::int64_t> steps = dense_geometric_schedule(max_steps, 1.05);
  const size_t n_points = steps.size();

  // Per-trial integer bins; aggregation below is order independent.
  std::vector<std::int8_t> trial_bins(static_cast<size_t>(trials) * n_points);
  parallel_for(trials, [&](std::int64_t trial) {
    RngStream rng(seed, static_cast<std::uint64_t>(trial));
    if (use_statevector) {
      StateVector state = StateVector::zero_state(n_qubits);
      walk_schedule(state, rng, n_qubits, GateSet::haar, steps, [&](size_t k) {
        trial_bins[static_cast<size_t>(trial) * n_points + k] =
            static_cast<std::int8_t>(
                entropy_bin(entanglement_entropy(state, partition), n_a));
      });
    } else {
      StabilizerTableau state(n_qubits);
      walk_schedule(state, rng, n_qubits, GateSet::stabilizer, steps,
                    [&](size_t k) {
                      trial_bins[static_cast<size_t>(trial) * n_points + k] =
                          static_cast<std::int8_t>(entropy_bin(
                              state.entanglement_entropy(partition), n_a));
                    });
    }
  });

  CutoffResult result;
  // Reference distribution on an independent block of streams.
  if (reference == CutoffReference::haar_sampled) {
    const std::int64_t n_samples = 10000;
    std::vector<std::int8_t> ref_bins(n_samples);
    parallel_for(n_samples, [&](std::int64_t sample) {
      RngStream rng(seed, kAuxStreamOffset + static_cast<std::uint64_t>(sample));
      StateVector state = StateVector::zero_state(n_qubits);
      for (std::uint64_t i = 0; i < state.dim(); ++i) {
        state.amp(i) = rng.complex_normal();
      }
      double norm = state.norm();
      for (std::uint64_t i = 0; i < state.dim(); ++i) {
        state.amp(i) /= norm;
      }
      ref_bins[sample] = static_cast<std::int8_t>(
          entropy_bin(entanglement_entropy(state, partition), n_a));
    });
    result.reference = EntropyHistogram(n_qubits, n_a, -1);
    for (std::int8_t b : ref_bins) {
      result.reference.add(b);
    }
    result.reference_burn_in = -1;
  } else {
    const std::int64_t burn_in = 20 * static_cast<std::int64_t>(std::ceil(
                                          n_qubits * std::log2(n_qubits)));
    std::vector<std::int8_t> ref_bins(trials);
    std::vector<std::int64_t> ref_schedule{burn_in};
    parallel_for(trials, [&](std::int64_t trial) {
      RngStream rng(seed, kAuxStreamOffset + static_cast<std::uint64_t>(trial));
      if (use_statevector) {
        StateVector state = StateVector::zero_state(n_qubits);
        walk_schedule(state, rng, n_qubits, GateSet::haar, ref_schedule,
                      [&](size_t) {
                        ref_bins[trial] = static_cast<std::int8_t>(entropy_bin(
                            entanglement_entropy(state, partition), n_a));
                      });
      } else {
        StabilizerTableau state(n_qubits);
        walk_schedule(state, rng, n_qubits, GateSet::stabilizer, ref_schedule,
                      [&](size_t) {
                        ref_bins[trial] = static_cast<std::int8_t>(entropy_bin(
                            state.entanglement_entropy(partition), n_a));
                      });
      }
    });
    result.reference = EntropyHistogram(n_qubits, n_a, burn_in);
    for (std::int8_t b : ref_bins) {
      result.reference.add(b);
    }
    result.reference_burn_in = burn_in;
  }

  for (size_t k = 0; k < n_points; ++k) {
    EntropyHistogram hist(n_qubits, n_a, steps[k]);
    for (std::int64_t t = 0; t < trials; ++t) {
      hist.add(trial_bins[static_cast<size_t>(t) * n_points + k]);
    }
    result.curve.points.push_back(
        TvPoint{steps[k], tv_distance(hist, result.reference),
                tv_distance_error(hist, result.reference)});
  }
  result.report = detect_cutoff(result.curve, n_qubits);
  return result;
}

ThresholdMoments run_threshold_moments(int n_qubits, int n_a,
                                       std::int64_t step, std::int64_t trials,
                                       std::uint64_t seed) {
  if (trials < 2) {
    throw std::invalid_argument("run_threshold_moments: needs trials >= 2");
  }
  QubitPartition partition = QubitPartition::first(n_qubits, n_a);
  std::vector<double> entropies(trials);
  std::vector<double> overlaps(trials);
  std::vector<std::int64_t> schedule{step};
  parallel_for(trials, [&](std::int64_t trial) {
    RngStream rng(seed, static_cast<std::uint64_t>(trial));
    StateVector state = StateVector::zero_state(n_qubits);
    walk_schedule(state, rng, n_qubits, GateSet::haar, schedule, [&](size_t) {
      entropies[trial] = entanglement_entropy(state, partition);
      overlaps[trial] = max_overlap_max_entangled(state, partition);
    });
  });
  auto moments = [&](const std::vector<double>& xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    double mean = sum / static_cast<double>(trials);
    double sq = 0.0;
    for (double x : xs) sq += (x - mean) * (x - mean);
    double variance = trials > 1 ? sq / static_cast<double>(trials - 1) : 0.0;
    return std::pair<double, double>(
        mean, std::sqrt(variance / static_cast<double>(trials)));
  };
  ThresholdMoments out;
  std::tie(out.mean_entropy, out.se_entropy) = moments(entropies);
  std::tie(out.mean_overlap, out.se_overlap) = moments(overlaps);
  return out;
}

namespace {

std::vector<VerifyRow> lemma1_suite(int n_min, int n_max) {
  if (n_min < 2 || n_max > 10) {
    throw std::invalid_argument("lemma1 suite: supported range is 2..10");
  }
  std::vector<VerifyRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    Eigen::MatrixXd q = exact_subset_transition_matrix(n);
    SubsetDistribution dist = SubsetDistribution::initial(n);
    const std::int64_t horizon = 90 * n * (n - 1);
    std::vector<double> asymptote(n);
    std::vector<SubsetState> blocks;
    for (int n_a = 1; n_a < n; ++n_a) {
      asymptote[n_a] = haar_average_purity(n_a, n - n_a);
      blocks.push_back(QubitPartition::first(n, n_a).a());
    }
    std::vector<double> worst_excess(n, -std::numeric_limits<double>::infinity());
    std::vector<std::int64_t> worst_step(n, 0);
    std::vector<double> worst_lhs(n, 0.0), worst_rhs(n, 0.0);
    for (std::int64_t step = 0; step <= horizon; ++step) {
      if (step > 0) {
        dist.step(q);
      }
      double envelope = lemma1_envelope(n, static_cast<double>(step));
      for (int n_a = 1; n_a < n; ++n_a) {
        double purity = purity_from_containment(
            dist.containment(blocks[n_a - 1]), n - n_a);
        double deviation = std::abs(purity - asymptote[n_a]);
        double excess = deviation - envelope;
        if (excess > worst_excess[n_a]) {
          worst_excess[n_a] = excess;
          worst_step[n_a] = step;
          worst_lhs[n_a] = deviation;
          worst_rhs[n_a] = envelope;
        }
      }
    }
    for (int n_a = 1; n_a < n; ++n_a) {
      VerifyRow row;
      row.check = "lemma1_envelope_na" + std::to_string(n_a);
      row.n_qubits = n;
      row.step = worst_step[n_a];
      row.lhs = worst_lhs[n_a];
      row.rhs = worst_rhs[n_a];
      row.pass = worst_excess[n_a] <= 1e-10;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<VerifyRow> theorem1_suite(int n_min, int n_max,
                                      std::int64_t trials,
                                      std::uint64_t seed) {
  if (n_min < 4 || n_max > 10) {
    throw std::invalid_argument("theorem1 suite: supported range is 4..10");
  }
  require_trials(trials);
  const double epsilon = 0.1;
  std::vector<VerifyRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    const int n_a = n / 2;
    const int offset = n - 2 * n_a;
    const std::int64_t step = theorem1_threshold(n, epsilon);
    TheoremFloors floors = theorem1_floors(n_a, offset, epsilon);
    ThresholdMoments mc = run_threshold_moments(n, n_a, step, trials, seed);
    VerifyRow entropy_row;
    entropy_row.check = "theorem1_entropy";
    entropy_row.n_qubits = n;
    entropy_row.step = step;
    entropy_row.lhs = mc.mean_entropy;
    entropy_row.rhs = floors.entropy_floor;
    entropy_row.pass = mc.mean_entropy + 3.0 * mc.se_entropy >= floors.entropy_floor;
    rows.push_back(std::move(entropy_row));
    VerifyRow fidelity_row;
    fidelity_row.check = "theorem1_fidelity";
    fidelity_row.n_qubits = n;
    fidelity_row.step = step;
    fidelity_row.lhs = mc.mean_overlap;
    fidelity_row.rhs = floors.fidelity_floor;
    fidelity_row.pass =
        mc.mean_overlap + 3.0 * mc.se_overlap >= floors.fidelity_floor;
    rows.push_back(std::move(fidelity_row));
  }
  return rows;
}

std::vector<VerifyRow> comparison_suite(int n_min, int n_max) {
  if (n_min < 2 || n_max > 12) {
    throw std::invalid_argument("comparison suite: supported range is 2..12");
  }
  std::vector<VerifyRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    Eigen::MatrixXd q = exact_subset_transition_matrix(n);
    Eigen::MatrixXd r = comparison_chain_matrix(n);
    Eigen::VectorXd m = stationary_distribution(n);
    const double alpha = comparison_alpha(n);
    const double gap_q = spectral_gap(q, m);
    const double gap_r = spectral_gap(r, m);
    const double bound = chain_gap_bound(n);
    auto push = [&](const char* check, std::int64_t step, double lhs,
                    double rhs, bool pass) {
      rows.push_back(VerifyRow{check, n, step, lhs, rhs, pass});
    };
    push("gap_chain", 0, gap_q, alpha * gap_r, gap_q >= alpha * gap_r - 1e-12);
    push("gap_bound", 0, alpha * gap_r, bound, alpha * gap_r >= bound - 1e-12);
    push("gap_r_floor", 0, gap_r, 1.0 / (3.0 * n), gap_r >= 1.0 / (3.0 * n) - 1e-12);
    DominationReport domination = verify_comparison_domination(q, r, alpha);
    push("alpha_domination", 0, domination.worst_margin, 0.0, domination.holds);
    // Exact minimum diagonal entry via integer numerators.
    const std::int64_t denom = 9LL * n * (n - 1);
    std::int64_t min_num = denom;
    for (std::int64_t i = 0; i < omega_dimension(n); ++i) {
      for (const auto& [j, num] : exact_subset_row_ninths(n, omega_mask(i))) {
        if (j == i) {
          min_num = std::min(min_num, num);
        }
      }
    }
    push("laziness", 0, static_cast<double>(min_num) / static_cast<double>(denom),
         0.5, 2 * min_num >= denom);
    Eigen::VectorXd residual = (q.transpose() * m - m).cwiseAbs();
    push("stationary", 0, residual.maxCoeff(), 1e-10,
         residual.maxCoeff() <= 1e-10);
    double worst_balance = 0.0;
    for (Eigen::Index i = 0; i < q.rows(); ++i) {
      for (Eigen::Index j = i + 1; j < q.cols(); ++j) {
        worst_balance = std::max(
            worst_balance, std::abs(m[i] * q(i, j) - m[j] * q(j, i)));
      }
    }
    push("reversible", 0, worst_balance, 1e-10, worst_balance <= 1e-10);
  }
  return rows;
}

}  // namespace

std::vector<VerifyRow> run_bound_verification(VerifySuite suite, int n_min,
                                              int n_max, std::int64_t trials,
                                              std::uint64_t seed) {
  if (n_min > n_max) {
    throw std::invalid_argument("run_bound_verification: empty range");
  }
  switch (suite) {
    case VerifySuite::lemma1:
      return lemma1_suite(n_min, n_max);
    case VerifySuite::theorem1:
      return theorem1_suite(n_min, n_max, trials, seed);
    case VerifySuite::comparison:
      return comparison_suite(n_min, n_max);
  }
  throw std::invalid_argument("run_bound_verification: bad suite");
}

GapReport gap_report(int n_qubits) {
  Eigen::MatrixXd q = exact_subset_transition_matrix(n_qubits);
  Eigen::MatrixXd r = comparison_chain_matrix(n_qubits);
  Eigen::VectorXd m = stationary_distribution(n_qubits);
  GapReport report;
  report.n_qubits = n_qubits;
  report.gap_exact = spectral_gap(q, m);
  report.gap_r = spectral_gap(r, m);
  report.alpha = comparison_alpha(n_qubits);
  report.gap_paper_bound = chain_gap_bound(n_qubits);
  return report;
}

std::int64_t exact_tv_mixing_step(int n_qubits, double threshold,
                                  std::int64_t max_steps) {
  if (!(threshold > 0.0) || threshold >= 1.0) {
    throw std::invalid_argument("exact_tv_mixing_step: threshold out of (0,1)");
  }
  Eigen::MatrixXd q = exact_subset_transition_matrix(n_qubits);
  Eigen::VectorXd target = stationary_distribution(n_qubits) *
                           (1.0 - std::ldexp(1.0, -n_qubits));
  SubsetDistribution dist = SubsetDistribution::initial(n_qubits);
  for (std::int64_t step = 0; step <= max_steps; ++step) {
    if (tv_distance(dist.omega, target) < threshold) {
      return step;
    }
    dist.step(q);
  }
  throw std::runtime_error("exact_tv_mixing_step: did not mix in max_steps");
}

std::string purity_csv(const ExperimentSeries& series) {
  std::ostringstream ss;
  ss << "step,mean_purity,stderr,engine\n";
  for (const auto& p : series.points) {
    ss << p.step << ',' << format_double(p.mean) << ','
       << format_double(p.std_error) << ',' << engine_name(series.engine)
       << '\n';
  }
  return ss.str();
}

std::string entropy_csv(const ExperimentSeries& series) {
  std::ostringstream ss;
  ss << "step,mean_entropy,stderr,engine\n";
  for (const auto& p : series.points) {
    ss << p.step << ',' << format_double(p.mean) << ','
       << format_double(p.std_error) << ',' << engine_name(series.engine)
       << '\n';
  }
  return ss.str();
}

std::string cutoff_csv(const TvCurve& curve) {
  std::ostringstream ss;
  ss << "step,tv,tv_err\n";
  for (const auto& p : curve.points) {
    ss << p.step << ',' << format_double(p.tv) << ','
       << format_double(p.tv_err) << '\n';
  }
  return ss.str();
}

std::string gap_csv(const std::vector<GapReport>& reports) {
  std::ostringstream ss;
  ss << "n_qubits,gap_exact,gap_paper_bound,alpha,gap_R\n";
  for (const auto& r : reports) {
    ss << r.n_qubits << ',' << format_double(r.gap_exact) << ','
       << format_double(r.gap_paper_bound) << ',' << format_double(r.alpha)
       << ',' << format_double(r.gap_r) << '\n';
  }
  return ss.str();
}

std::string verify_csv(const std::vector<VerifyRow>& rows) {
  std::ostringstream ss;
  ss << "check,n_qubits,step,lhs,rhs,pass\n";
  for (const auto& r : rows) {
    ss << r.check << ',' << r.n_qubits << ',' << r.step << ','
       << format_double(r.lhs) << ',' << format_double(r.rhs) << ','
       << (r.pass ? 1 : 0) << '\n';
  }
  return ss.str();
}

namespace {

nlohmann::json series_json(const ExperimentSeries& series,
                           const char* mean_key) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : series.points) {
    points.push_back({{"step", p.step},
                      {mean_key, p.mean},
                      {"stderr", p.std_error}});
  }
  return nlohmann::json{{"engine", engine_name(series.engine)},
                        {"n_qubits", series.n_qubits},
                        {"n_a", series.n_a},
                        {"trials", series.trials},
                        {"seed", series.seed},
                        {"series", points}};
}

nlohmann::json histogram_json(const EntropyHistogram& hist) {
  return nlohmann::json{{"step", hist.step},
                        {"total", hist.total},
                        {"counts", hist.counts}};
}

}  // namespace

std::string purity_json(const ExperimentSeries& series) {
  return series_json(series, "mean_purity").dump(2) + "\n";
}

std::string entropy_json(const EntropyResult& result) {
  nlohmann::json doc = series_json(result.series, "mean_entropy");
  nlohmann::json hists = nlohmann::json::array();
  for (const auto& h : result.histograms) {
    hists.push_back(histogram_json(h));
  }
  doc["histograms"] = hists;
  return doc.dump(2) + "\n";
}

std::string cutoff_json(const CutoffResult& result) {
  nlohmann::json curve = nlohmann::json::array();
  for (const auto& p : result.curve.points) {
    curve.push_back({{"step", p.step}, {"tv", p.tv}, {"tv_err", p.tv_err}});
  }
  nlohmann::json doc{
      {"n_qubits", result.report.n_qubits},
      {"curve", curve},
      {"report",
       {{"complete", result.report.complete},
        {"location", result.report.location},
        {"window", result.report.window},
        {"ratio", result.report.ratio},
        {"cross_090", result.report.cross_090},
        {"cross_050", result.report.cross_050},
        {"cross_010", result.report.cross_010}}},
      {"reference", histogram_json(result.reference)},
      {"reference_burn_in", result.reference_burn_in}};
  return doc.dump(2) + "\n";
}

std::string gap_json(const std::vector<GapReport>& reports) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : reports) {
    doc.push_back({{"n_qubits", r.n_qubits},
                   {"gap_exact", r.gap_exact},
                   {"gap_paper_bound", r.gap_paper_bound},
                   {"alpha", r.alpha},
                   {"gap_R", r.gap_r}});
  }
  return doc.dump(2) + "\n";
}

std::string verify_json(const std::vector<VerifyRow>& rows) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : rows) {
    doc.push_back({{"check", r.check},
                   {"n_qubits", r.n_qubits},
                   {"step", r.step},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"pass", r.pass}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace entmix
