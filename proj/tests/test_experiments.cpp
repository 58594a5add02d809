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

#include <cmath>
#include <cstdint>
#include <doctest.h>
#include <string>
#include <vector>

#include "entmix/formulas.hpp"
#include "entmix/subset_chain.hpp"

namespace entmix {
namespace {

TEST_CASE("engine names round-trip") {
  for (Engine e : {Engine::statevector, Engine::subset_mc, Engine::subset_exact,
                   Engine::stabilizer}) {
    CHECK(engine_from_name(engine_name(e)) == e);
  }
  CHECK_THROWS_AS(engine_from_name("quantum"), std::invalid_argument);
  CHECK_THROWS_AS(suite_from_name("lemma2"), std::invalid_argument);
  CHECK_THROWS_AS(reference_from_name("exact"), std::invalid_argument);
  CHECK(suite_from_name("lemma1") == VerifySuite::lemma1);
  CHECK(reference_from_name("haar_sampled") == CutoffReference::haar_sampled);
}

TEST_CASE("schedules") {
  CHECK(geometric_schedule(8) ==
        std::vector<std::int64_t>{0, 1, 2, 4, 8});
  CHECK(geometric_schedule(9) ==
        std::vector<std::int64_t>{0, 1, 2, 4, 8, 9});
  CHECK(geometric_schedule(0) == std::vector<std::int64_t>{0});

  std::vector<std::int64_t> dense = dense_geometric_schedule(500, 1.05);
  CHECK(dense.front() == 0);
  CHECK(dense.back() == 500);
  for (size_t i = 1; i < dense.size(); ++i) {
    CHECK(dense[i] > dense[i - 1]);
  }

  CHECK(parse_steps_spec("0,5,25") == std::vector<std::int64_t>{0, 5, 25});
  CHECK(parse_steps_spec("geo:4") == std::vector<std::int64_t>{0, 1, 2, 4});
  CHECK_THROWS_AS(parse_steps_spec(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_steps_spec("5,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_steps_spec("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_steps_spec("-3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_steps_spec("geo:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_steps_spec("2x"), std::invalid_argument);
}

TEST_CASE("exact purity propagation hits the asymptote") {
  ExperimentSeries series = run_purity_experiment(
      Engine::subset_exact, 4, 2, {0, 400}, 100, 7);
  REQUIRE(series.points.size() == 2);
  CHECK(series.trials == 0);  // Exact propagation ignores trials.
  CHECK(series.points[0].step == 0);
  CHECK(series.points[0].mean == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(series.points[0].std_error == 0.0);
  CHECK(series.points[1].mean ==
        doctest::Approx(haar_average_purity(2, 2)).epsilon(1e-10));
  CHECK(haar_average_purity(2, 2) == doctest::Approx(8.0 / 17.0));
}

TEST_CASE("every trajectory engine starts at purity one") {
  for (Engine e : {Engine::statevector, Engine::stabilizer}) {
    ExperimentSeries series = run_purity_experiment(e, 4, 2, {0}, 50, 3);
    CHECK(series.points[0].mean == 1.0);
    CHECK(series.points[0].std_error == 0.0);
  }
}

TEST_CASE("engines agree within monte carlo error") {
  const int n = 5;
  const int n_a = 2;
  const std::vector<std::int64_t> steps = {0, 4, 12, 40};
  ExperimentSeries exact =
      run_purity_experiment(Engine::subset_exact, n, n_a, steps, 0, 1);
  ExperimentSeries sv =
      run_purity_experiment(Engine::statevector, n, n_a, steps, 700, 11);
  ExperimentSeries mc =
      run_purity_experiment(Engine::subset_mc, n, n_a, steps, 30000, 12);
  for (size_t k = 0; k < steps.size(); ++k) {
    double target = exact.points[k].mean;
    // The dense engine averages the same observable the chain computes
    // exactly, so 4 sigma covers it comfortably.
    CHECK(std::abs(sv.points[k].mean - target) <=
          4.0 * sv.points[k].std_error + 1e-9);
    CHECK(std::abs(mc.points[k].mean - target) <=
          4.0 * mc.points[k].std_error + 1e-9);
  }
}

TEST_CASE("stabilizer purity converges to its own asymptote") {
  // Long-run mean purity under the restricted gate set matches the same
  // (2^NA + 2^NB)/(2^N + 1) asymptote.
  ExperimentSeries series = run_purity_experiment(
      Engine::stabilizer, 6, 3, {600}, 3000, 21);
  double target = haar_average_purity(3, 3);
  CHECK(std::abs(series.points[0].mean - target) <=
        4.0 * series.points[0].std_error);
}

TEST_CASE("purity experiments are deterministic given a seed") {
  auto run = [] {
    return purity_csv(run_purity_experiment(Engine::subset_mc, 5, 2,
                                            {0, 3, 9}, 4000, 77));
  };
  std::string first = run();
  CHECK(first == run());
  std::string other = purity_csv(
      run_purity_experiment(Engine::subset_mc, 5, 2, {0, 3, 9}, 4000, 78));
  CHECK(other != first);
}

TEST_CASE("entropy experiment histograms are consistent") {
  EntropyResult result =
      run_entropy_experiment(Engine::statevector, 4, 2, {0, 30}, 60, 5);
  REQUIRE(result.series.points.size() == 2);
  REQUIRE(result.histograms.size() == 2);
  // Step zero: a product state, all mass in bin zero.
  CHECK(result.series.points[0].mean == 0.0);
  CHECK(result.histograms[0].counts[0] == 60);
  for (const EntropyHistogram& h : result.histograms) {
    CHECK(h.total == 60);
    CHECK(h.bins() == 3);
  }
  // At step 30 the mean entropy should be near the asymptotic value
  // N_A - 2^{N_A - N_B}... loosely above one bit.
  CHECK(result.series.points[1].mean > 1.0);
  CHECK(result.series.points[1].mean <= 2.0);

  CHECK_THROWS_AS(
      run_entropy_experiment(Engine::subset_mc, 4, 2, {0}, 10, 1),
      std::invalid_argument);
  CHECK_THROWS_AS(
      run_entropy_experiment(Engine::subset_exact, 4, 2, {0}, 10, 1),
      std::invalid_argument);
}

TEST_CASE("stabilizer entropy stays integer valued") {
  EntropyResult result =
      run_entropy_experiment(Engine::stabilizer, 8, 4, {100}, 40, 9);
  const EntropyHistogram& h = result.histograms[0];
  CHECK(h.total == 40);
  double mean_from_hist = 0.0;
  for (int b = 0; b < h.bins(); ++b) {
    mean_from_hist += b * static_cast<double>(h.counts[b]);
  }
  mean_from_hist /= static_cast<double>(h.total);
  // Every sample is an exact integer, so the histogram mean is the mean.
  CHECK(result.series.points[0].mean ==
        doctest::Approx(mean_from_hist).epsilon(1e-12));
}

TEST_CASE("cutoff experiment produces a falling curve with a report") {
  CutoffResult result = run_cutoff_experiment(
      6, 3, 300, 120, CutoffReference::haar_sampled, 31);
  REQUIRE(!result.curve.points.empty());
  CHECK(result.curve.points.front().step == 0);
  CHECK(result.curve.points.back().step == 120);
  CHECK(result.curve.points.front().tv > 0.5);
  CHECK(result.curve.points.back().tv < 0.3);
  CHECK(result.reference.total == 10000);
  CHECK(result.reference_burn_in == -1);

  CutoffResult empirical = run_cutoff_experiment(
      6, 3, 300, 120, CutoffReference::asymptotic_empirical, 31);
  CHECK(empirical.reference_burn_in ==
        20 * static_cast<std::int64_t>(
                 std::ceil(6 * std::log2(6.0))));
  CHECK(empirical.reference.total == 300);
  CHECK(empirical.curve.points.back().tv < 0.35);

  CHECK_THROWS_AS(
      run_cutoff_experiment(6, 3, 30, 120, CutoffReference::haar_sampled, 1),
      std::invalid_argument);  // trials < 10 * bins.
  CHECK_THROWS_AS(run_cutoff_experiment(20, 10, 2000, 100,
                                        CutoffReference::haar_sampled, 1),
                  std::invalid_argument);  // dense reference past 12 qubits.
}

TEST_CASE("envelope suite passes on small systems") {
  std::vector<VerifyRow> rows = run_bound_verification(
      VerifySuite::lemma1, 2, 5, 0, 0);
  // One row per (N, N_A) pair: 1 + 2 + 3 + 4.
  CHECK(rows.size() == 10);
  for (const VerifyRow& row : rows) {
    CAPTURE(row.check);
    CAPTURE(row.n_qubits);
    CHECK(row.pass);
    CHECK(row.lhs <= row.rhs + 1e-10);
    CHECK(row.check.rfind("lemma1_envelope_na", 0) == 0);
  }
}

TEST_CASE("comparison suite: every row except laziness passes") {
  std::vector<VerifyRow> rows = run_bound_verification(
      VerifySuite::comparison, 3, 5, 0, 0);
  int laziness_rows = 0;
  for (const VerifyRow& row : rows) {
    CAPTURE(row.check);
    CAPTURE(row.n_qubits);
    if (row.check == "laziness") {
      ++laziness_rows;
      // The claimed 1/2 diagonal floor is not satisfied by this chain;
      // the exact minimum diagonal is below 1/2 for every N >= 3. The row
      // reports that honestly instead of passing.
      CHECK(!row.pass);
      CHECK(row.rhs == 0.5);
      // The exact minimum matches the size-only closed form, minimized
      // over s: min_s [9(N-s)(N-s-1) + 5s(s-1) + 6s(N-s)] / (9N(N-1)).
      const int n = row.n_qubits;
      double min_diag = 1.0;
      for (int s = 1; s <= n; ++s) {
        double num = 9.0 * (n - s) * (n - s - 1) + 5.0 * s * (s - 1) +
                     6.0 * s * (n - s);
        min_diag = std::min(min_diag, num / (9.0 * n * (n - 1)));
      }
      CHECK(row.lhs == doctest::Approx(min_diag).epsilon(1e-12));
    } else {
      CHECK(row.pass);
    }
  }
  CHECK(laziness_rows == 3);
  // At N=3 the worst diagonal is 11/27, on the two-element subsets.
  for (const VerifyRow& row : rows) {
    if (row.check == "laziness" && row.n_qubits == 3) {
      CHECK(row.lhs == doctest::Approx(11.0 / 27.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("threshold suite on a small system") {
  std::vector<VerifyRow> rows = run_bound_verification(
      VerifySuite::theorem1, 4, 4, 150, 13);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].check == "theorem1_entropy");
  CHECK(rows[1].check == "theorem1_fidelity");
  for (const VerifyRow& row : rows) {
    CAPTURE(row.check);
    CHECK(row.pass);
    CHECK(row.step == theorem1_threshold(4, 0.1));
    // The floors sit well below the achieved means on a mixed state.
    CHECK(row.lhs > row.rhs);
  }
}

TEST_CASE("threshold step formula frozen values") {
  CHECK(theorem1_threshold(8, 0.1) == 2387);
  CHECK(theorem1_threshold(2, 0.5) == 22);
  CHECK(theorem1_threshold(2, 0.999999999) == 19);
  CHECK(haar_entropy_floor(4, 2) ==
        doctest::Approx(4.0 - 0.25 / std::log(2.0)).epsilon(1e-14));
  // Half cut on eight qubits, offset t = 0, epsilon 0.1.
  TheoremFloors floors = theorem1_floors(4, 0, 0.1);
  CHECK(floors.entropy_floor == doctest::Approx(2.4131).epsilon(1e-3));
  CHECK(floors.fidelity_floor == doctest::Approx(0.10922).epsilon(1e-3));
}

TEST_CASE("gap report fields are coherent") {
  GapReport rep = gap_report(4);
  CHECK(rep.n_qubits == 4);
  CHECK(rep.gap_exact >= rep.gap_paper_bound);
  CHECK(rep.alpha == doctest::Approx(4.0 / 9.0));
  CHECK(rep.gap_paper_bound == doctest::Approx(4.0 / 108.0));
  CHECK(rep.alpha * rep.gap_r <= rep.gap_exact + 1e-12);
}

TEST_CASE("exact mixing steps grow with system size") {
  std::int64_t t4 = exact_tv_mixing_step(4, 0.25);
  std::int64_t t6 = exact_tv_mixing_step(6, 0.25);
  CHECK(t4 > 0);
  CHECK(t4 <= t6);
  // Threshold 1 - epsilon is hit immediately.
  CHECK(exact_tv_mixing_step(4, 0.999) == 0);
  CHECK_THROWS_AS(exact_tv_mixing_step(4, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(exact_tv_mixing_step(4, 0.25, 1), std::runtime_error);
}

TEST_CASE("exact chain distance to stationarity never increases") {
  for (int n : {4, 6}) {
    Eigen::MatrixXd q = exact_subset_transition_matrix(n);
    Eigen::VectorXd target = stationary_distribution(n) *
                             (1.0 - std::pow(2.0, -n));
    SubsetDistribution dist = SubsetDistribution::initial(n);
    double last = tv_distance(dist.omega, target);
    for (int step = 0; step < 60; ++step) {
      dist.step(q);
      double now = tv_distance(dist.omega, target);
      CHECK(now <= last + 1e-12);
      last = now;
    }
  }
}

TEST_CASE("csv renderers emit the pinned headers") {
  ExperimentSeries series = run_purity_experiment(
      Engine::subset_exact, 3, 1, {0, 1}, 0, 0);
  std::string purity = purity_csv(series);
  CHECK(purity.rfind("step,mean_purity,stderr,engine\n", 0) == 0);
  CHECK(purity.find(",subset_exact\n") != std::string::npos);

  EntropyResult entropy =
      run_entropy_experiment(Engine::stabilizer, 3, 1, {0}, 20, 1);
  CHECK(entropy_csv(entropy.series).rfind("step,mean_entropy,stderr,engine\n",
                                          0) == 0);

  TvCurve curve;
  curve.points.push_back(TvPoint{0, 1.0, 0.001});
  CHECK(cutoff_csv(curve) == "step,tv,tv_err\n0,1,0.001\n");

  std::vector<GapReport> reports = {gap_report(3)};
  CHECK(gap_csv(reports).rfind("n_qubits,gap_exact,gap_paper_bound,alpha,gap_R\n",
                               0) == 0);

  std::vector<VerifyRow> rows = {
      VerifyRow{"demo", 3, 7, 1.25, 2.5, true},
      VerifyRow{"demo2", 3, 8, 0.5, 0.25, false}};
  std::string verify = verify_csv(rows);
  CHECK(verify ==
        "check,n_qubits,step,lhs,rhs,pass\n"
        "demo,3,7,1.25,2.5,1\n"
        "demo2,3,8,0.5,0.25,0\n");
}

}  // namespace
}  // namespace entmix
