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

// Acceptance gate. Runs the numbered criteria given as command line
// arguments (1..9), or all of them when none are given, printing one
// verdict line per criterion plus indented supporting detail. Exit status
// is 0 only if every selected criterion passes.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

#include "entmix/analysis.hpp"
#include "entmix/experiments.hpp"
#include "entmix/formulas.hpp"
#include "entmix/gates.hpp"
#include "entmix/pauli.hpp"
#include "entmix/spectral.hpp"
#include "entmix/stabilizer.hpp"
#include "entmix/statevector.hpp"
#include "entmix/subset_chain.hpp"

namespace {

using namespace entmix;

struct Outcome {
  bool pass = false;
  std::string verdict;               // appended to the verdict line
  std::vector<std::string> details;  // indented lines below it
};

std::string fmt(const char* format, ...) {
  va_list args;
  va_start(args, format);
  char buffer[512];
  std::vsnprintf(buffer, sizeof(buffer), format, args);
  va_end(args);
  return std::string(buffer);
}

// Criterion 1: dense-engine long-run mean purity matches the uniform-state
// average (2^{N_A} + 2^{N_B}) / (2^N + 1) at N=6, N_A=3, within 3 stderr.
Outcome criterion1() {
  const int n = 6;
  const int n_a = 3;
  const double target = haar_average_purity(n_a, n - n_a);  // 16/65
  ExperimentSeries series = run_purity_experiment(
      Engine::statevector, n, n_a, {2000}, 2500, 1001);
  const SeriesPoint& p = series.points.back();
  const double diff = std::abs(p.mean - target);
  Outcome out;
  out.pass = diff <= 3.0 * p.std_error;
  out.verdict = fmt("mean purity %.6f vs 16/65 = %.6f, |diff| %.2e <= 3se %.2e",
                    p.mean, target, diff, 3.0 * p.std_error);
  return out;
}

// Criterion 2: dense-engine MC purity vs exact chain propagation, N in
// {4,5,6}, steps {0,5,25,125,625}, agreement within 3 stderr everywhere.
Outcome criterion2() {
  const std::vector<std::int64_t> steps = {0, 5, 25, 125, 625};
  Outcome out;
  out.pass = true;
  double worst_pull = 0.0;
  std::string worst_where;
  for (int n = 4; n <= 6; ++n) {
    const int n_a = n / 2;
    ExperimentSeries mc = run_purity_experiment(Engine::statevector, n, n_a,
                                                steps, 4000, 1002 + n);
    ExperimentSeries exact = run_purity_experiment(Engine::subset_exact, n,
                                                   n_a, steps, 1, 0);
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const double diff = std::abs(mc.points[i].mean - exact.points[i].mean);
      const double tol = 3.0 * mc.points[i].std_error + 1e-12;
      const double pull =
          mc.points[i].std_error > 0.0 ? diff / mc.points[i].std_error : 0.0;
      if (diff > tol) {
        out.pass = false;
        out.details.push_back(
            fmt("N=%d step=%lld: mc %.6f exact %.6f |diff| %.3e > %.3e", n,
                static_cast<long long>(steps[i]), mc.points[i].mean,
                exact.points[i].mean, diff, tol));
      }
      if (pull > worst_pull) {
        worst_pull = pull;
        worst_where = fmt("N=%d step=%lld", n,
                          static_cast<long long>(steps[i]));
      }
    }
  }
  out.verdict = fmt("15 step/size pairs, worst pull %.2f sigma at %s",
                    worst_pull, worst_where.c_str());
  return out;
}

// Criterion 3: exact-chain purity deviation under the 4^N exponential
// envelope at every step up to 90 N (N-1), N = 2..8, every block size.
Outcome criterion3() {
  std::vector<VerifyRow> rows =
      run_bound_verification(VerifySuite::lemma1, 2, 8, 0, 0);
  Outcome out;
  out.pass = true;
  double worst_excess = -1e300;
  for (const VerifyRow& row : rows) {
    worst_excess = std::max(worst_excess, row.lhs - row.rhs);
    if (!row.pass) {
      out.pass = false;
      out.details.push_back(fmt("%s N=%d step=%lld lhs=%.3e rhs=%.3e",
                                row.check.c_str(), row.n_qubits,
                                static_cast<long long>(row.step), row.lhs,
                                row.rhs));
    }
  }
  out.verdict = fmt("%zu envelope rows, worst excess %.3e (allowance 1e-10)",
                    rows.size(), worst_excess);
  return out;
}

// Criterion 4: spectral inequality chain and chain structure, N = 3..10.
// Includes the diagonal claim Q(S,S) >= 1/2, checked exactly as stated.
Outcome criterion4() {
  std::vector<VerifyRow> rows =
      run_bound_verification(VerifySuite::comparison, 3, 10, 0, 0);
  Outcome out;
  out.pass = true;
  int failed = 0;
  for (const VerifyRow& row : rows) {
    if (!row.pass) {
      out.pass = false;
      ++failed;
      out.details.push_back(fmt("FAIL %s N=%d lhs=%.17g rhs=%.17g",
                                row.check.c_str(), row.n_qubits, row.lhs,
                                row.rhs));
    }
  }
  if (failed > 0) {
    out.details.push_back(
        "the failing rows are the diagonal claim Q(S,S) >= 1/2; the exact");
    out.details.push_back(
        "minimum diagonal is (9(N-s)(N-s-1)+5s(s-1)+6s(N-s))/(9N(N-1))");
    out.details.push_back(
        "minimized near s = (3N-1)/4, e.g. 11/27 at N=3; it approaches 1/2");
    out.details.push_back(
        "only as N grows, so the claim as stated is false at these sizes;");
    out.details.push_back(
        "left sides above are the exact minima from integer numerators.");
  }
  out.verdict = fmt("%zu rows, %d failing", rows.size(), failed);
  return out;
}

// Criterion 5: dense-engine MC at N=8, N_A=4, step 2387, against the two
// published floors (one-sided 3 sigma, >= 500 trials).
Outcome criterion5() {
  const double entropy_floor = 2.4131;
  const double fidelity_floor = 0.10926;
  ThresholdMoments mc = run_threshold_moments(8, 4, 2387, 600, 1005);
  const bool entropy_ok =
      mc.mean_entropy + 3.0 * mc.se_entropy >= entropy_floor;
  const bool fidelity_ok =
      mc.mean_overlap + 3.0 * mc.se_overlap >= fidelity_floor;
  Outcome out;
  out.pass = entropy_ok && fidelity_ok;
  out.verdict = fmt("entropy %.4f +- %.4f vs floor %.4f; overlap %.4f +- %.4f vs floor %.5f",
                    mc.mean_entropy, mc.se_entropy, entropy_floor,
                    mc.mean_overlap, mc.se_overlap, fidelity_floor);
  return out;
}

// Criterion 6: identical restricted-set gate sequences through the tableau
// and the dense engine, entropy agreement at every step of 100 circuits.
Outcome criterion6() {
  Outcome out;
  out.pass = true;
  double worst = 0.0;
  long long checks = 0;
  for (int c = 0; c < 100; ++c) {
    const int n = 2 + (c % 7);  // sizes 2..8
    RngStream rng(1006, static_cast<std::uint64_t>(c));
    StateVector psi = StateVector::zero_state(n);
    StabilizerTableau tab(n);
    for (int step = 0; step < 60; ++step) {
      GateEvent event = sample_gate_event(rng, n, GateSet::stabilizer);
      psi.apply_gate_event(event);
      tab.apply_gate_event(event);
      for (int n_a = 1; n_a < n; ++n_a) {
        QubitPartition part = QubitPartition::first(n, n_a);
        const int tableau_bits = tab.entanglement_entropy(part);
        const double dense_bits = entanglement_entropy(psi, part);
        const double diff = std::abs(dense_bits - tableau_bits);
        worst = std::max(worst, diff);
        ++checks;
        if (diff > 1e-7) {
          out.pass = false;
          if (out.details.size() < 8) {
            out.details.push_back(
                fmt("circuit %d N=%d step=%d N_A=%d tableau=%d dense=%.9f", c,
                    n, step + 1, n_a, tableau_bits, dense_bits));
          }
        }
      }
    }
  }
  out.verdict = fmt("100 circuits, %lld cut checks, worst |diff| %.2e",
                    checks, worst);
  return out;
}

// Criterion 7: tableau-engine long-run mean purity at N=8, N_A=4 matches
// 32/257 within 3 stderr.
Outcome criterion7() {
  const double target = haar_average_purity(4, 4);  // 32/257
  ExperimentSeries series =
      run_purity_experiment(Engine::stabilizer, 8, 4, {3000}, 4000, 1007);
  const SeriesPoint& p = series.points.back();
  const double diff = std::abs(p.mean - target);
  Outcome out;
  out.pass = diff <= 3.0 * p.std_error;
  out.verdict = fmt("mean purity %.6f vs 32/257 = %.6f, |diff| %.2e <= 3se %.2e",
                    p.mean, target, diff, 3.0 * p.std_error);
  return out;
}

// Criterion 8: entropy-distribution TV curves at N in {20,40,80} start
// above 0.9, end below 0.1, and sharpen: window/location strictly
// decreases with N.
Outcome criterion8() {
  Outcome out;
  out.pass = true;
  std::vector<double> ratios;
  for (int n : {20, 40, 80}) {
    const std::int64_t horizon =
        8 * static_cast<std::int64_t>(
                std::ceil(n * std::log2(static_cast<double>(n))));
    CutoffResult res = run_cutoff_experiment(
        n, n / 2, 5000, horizon, CutoffReference::asymptotic_empirical,
        1008 + static_cast<std::uint64_t>(n));
    const double tv0 = res.curve.points.front().tv;
    const double tv_final = res.curve.points.back().tv;
    const bool start_ok = tv0 > 0.9;
    const bool end_ok = tv_final < 0.1;
    const bool complete = res.report.complete;
    if (!(start_ok && end_ok && complete)) {
      out.pass = false;
    }
    ratios.push_back(res.report.ratio);
    out.details.push_back(
        fmt("N=%d horizon=%lld TV(0)=%.4f final=%.4f location=%.1f window=%.1f ratio=%.4f",
            n, static_cast<long long>(horizon), tv0, tv_final,
            res.report.location, res.report.window, res.report.ratio));
  }
  const bool sharpening = ratios[0] > ratios[1] && ratios[1] > ratios[2];
  if (!sharpening) {
    out.pass = false;
  }
  out.verdict = fmt("ratios %.4f > %.4f > %.4f %s", ratios[0], ratios[1],
                    ratios[2], sharpening ? "(strictly decreasing)"
                                          : "(NOT strictly decreasing)");
  return out;
}

// Criterion 9: exact gaps for N = 3..12 keep 1/gap under (9/4) N^2; the
// exact TV mixing step (threshold 0.25) is reported with a log-log fit
// exponent, informational only.
Outcome criterion9() {
  Outcome out;
  out.pass = true;
  std::vector<double> log_n;
  std::vector<double> log_t;
  bool monotone = true;
  std::int64_t prev_step = -1;
  for (int n = 3; n <= 12; ++n) {
    GapReport report = gap_report(n);
    const double inv_gap = 1.0 / report.gap_exact;
    const double cap = 2.25 * n * n;
    if (inv_gap > cap) {
      out.pass = false;
      out.details.push_back(
          fmt("N=%d 1/gap %.2f exceeds (9/4)N^2 = %.2f", n, inv_gap, cap));
    }
    const std::int64_t t_mix = exact_tv_mixing_step(n, 0.25);
    monotone = monotone && t_mix >= prev_step;
    prev_step = t_mix;
    log_n.push_back(std::log(static_cast<double>(n)));
    log_t.push_back(std::log(static_cast<double>(t_mix)));
    out.details.push_back(fmt("N=%2d gap=%.6f 1/gap=%7.2f cap=%6.1f t_mix=%lld",
                              n, report.gap_exact, inv_gap, cap,
                              static_cast<long long>(t_mix)));
  }
  const auto mean = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  const double mx = mean(log_n);
  const double my = mean(log_t);
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < log_n.size(); ++i) {
    sxy += (log_n[i] - mx) * (log_t[i] - my);
    sxx += (log_n[i] - mx) * (log_n[i] - mx);
  }
  const double exponent = sxy / sxx;
  out.verdict =
      fmt("1/gap under (9/4)N^2 for N=3..12; t_mix fit exponent %.3f "
          "(%smonotone, reported not asserted)",
          exponent, monotone ? "" : "not ");
  return out;
}

Outcome run_criterion(int id) {
  switch (id) {
    case 1: return criterion1();
    case 2: return criterion2();
    case 3: return criterion3();
    case 4: return criterion4();
    case 5: return criterion5();
    case 6: return criterion6();
    case 7: return criterion7();
    case 8: return criterion8();
    case 9: return criterion9();
    default: break;
  }
  Outcome out;
  out.verdict = "unknown criterion id";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    char* end = nullptr;
    const long id = std::strtol(argv[i], &end, 10);
    if (end == argv[i] || *end != '\0' || id < 1 || id > 9) {
      std::fprintf(stderr, "usage: %s [criterion ids in 1..9]\n", argv[0]);
      return 2;
    }
    selected.push_back(static_cast<int>(id));
  }
  if (selected.empty()) {
    for (int id = 1; id <= 9; ++id) {
      selected.push_back(id);
    }
  }
  bool all_pass = true;
  for (int id : selected) {
    Outcome out;
    try {
      out = run_criterion(id);
    } catch (const std::exception& e) {
      out.pass = false;
      out.verdict = fmt("exception: %s", e.what());
    }
    all_pass = all_pass && out.pass;
    std::printf("criterion %d: %s  %s\n", id, out.pass ? "PASS" : "FAIL",
                out.verdict.c_str());
    for (const std::string& line : out.details) {
      std::printf("  %s\n", line.c_str());
    }
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
