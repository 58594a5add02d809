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

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "entmix/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfigError = 2;

// Shared flag values for one subcommand.
struct CommonArgs {
  std::string n_qubits = "";
  int n_a = 0;  // 0 selects floor(N/2).
  std::string steps = "geo:1000";
  std::int64_t trials = 1000;
  std::uint64_t seed = 0;
  std::string engine = "statevector";
  std::string out;
  std::string format = "csv";
};

void add_common_flags(CLI::App* cmd, CommonArgs* args,
                      const std::string& default_n_qubits) {
  args->n_qubits = default_n_qubits;
  cmd->add_option("--n-qubits", args->n_qubits,
                  "System size N; gap and verify accept a range a:b or a "
                  "comma list")
      ->capture_default_str();
  cmd->add_option("--na", args->n_a,
                  "Block size N_A (0 selects floor(N/2))")
      ->capture_default_str();
  cmd->add_option("--steps", args->steps,
                  "Step schedule: comma list like 0,5,25 or geo:<max>")
      ->capture_default_str();
  cmd->add_option("--trials", args->trials, "Monte Carlo trajectory count")
      ->capture_default_str();
  cmd->add_option("--seed", args->seed, "Master seed for the RNG streams")
      ->capture_default_str();
  cmd->add_option("--engine", args->engine,
                  "statevector | subset_mc | subset_exact | stabilizer")
      ->capture_default_str();
  cmd->add_option("--out", args->out, "Output path (default: stdout)");
  cmd->add_option("--format", args->format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

int parse_single_n(const std::string& text) {
  size_t used = 0;
  int value = std::stoi(text, &used);
  if (used != text.size()) {
    throw std::invalid_argument("--n-qubits: bad integer '" + text + "'");
  }
  return value;
}

// "4" -> {4}; "3:6" -> {3,4,5,6}; "3,5,6" -> {3,5,6} (strictly increasing).
std::vector<int> parse_n_list(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("--n-qubits: empty");
  }
  std::vector<int> out;
  if (text.find(':') != std::string::npos) {
    size_t colon = text.find(':');
    int lo = parse_single_n(text.substr(0, colon));
    int hi = parse_single_n(text.substr(colon + 1));
    if (lo > hi) {
      throw std::invalid_argument("--n-qubits: range is reversed");
    }
    for (int n = lo; n <= hi; ++n) {
      out.push_back(n);
    }
    return out;
  }
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string item = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_single_n(item));
    if (out.size() > 1 && out[out.size() - 2] >= out.back()) {
      throw std::invalid_argument("--n-qubits: list must strictly increase");
    }
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

int resolve_n_a(int n_qubits, int n_a_flag) {
  int n_a = n_a_flag == 0 ? n_qubits / 2 : n_a_flag;
  if (n_a < 1 || n_a >= n_qubits) {
    throw std::invalid_argument("--na: block must be proper, 1 <= na < N");
  }
  return n_a;
}

void write_output(const CommonArgs& args, const std::string& text) {
  if (args.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(args.out, std::ios::binary);
  if (!file) {
    throw std::invalid_argument("--out: cannot open '" + args.out + "'");
  }
  file << text;
}

int run_purity(const CommonArgs& args) {
  int n = parse_single_n(args.n_qubits);
  int n_a = resolve_n_a(n, args.n_a);
  entmix::ExperimentSeries series = entmix::run_purity_experiment(
      entmix::engine_from_name(args.engine), n, n_a,
      entmix::parse_steps_spec(args.steps), args.trials, args.seed);
  write_output(args, args.format == "json" ? entmix::purity_json(series)
                                           : entmix::purity_csv(series));
  return kExitOk;
}

int run_entropy(const CommonArgs& args) {
  int n = parse_single_n(args.n_qubits);
  int n_a = resolve_n_a(n, args.n_a);
  entmix::EntropyResult result = entmix::run_entropy_experiment(
      entmix::engine_from_name(args.engine), n, n_a,
      entmix::parse_steps_spec(args.steps), args.trials, args.seed);
  write_output(args, args.format == "json"
                         ? entmix::entropy_json(result)
                         : entmix::entropy_csv(result.series));
  return kExitOk;
}

int run_cutoff(const CommonArgs& args, std::int64_t max_steps,
               const std::string& reference) {
  int n = parse_single_n(args.n_qubits);
  int n_a = resolve_n_a(n, args.n_a);
  if (max_steps <= 0) {
    max_steps = 8 * static_cast<std::int64_t>(std::ceil(n * std::log2(n)));
  }
  entmix::CutoffReference ref;
  if (reference == "auto") {
    // The dense engine (and with it the dense reference) stops at 12 qubits.
    ref = n <= 12 ? entmix::CutoffReference::haar_sampled
                  : entmix::CutoffReference::asymptotic_empirical;
  } else {
    ref = entmix::reference_from_name(reference);
  }
  entmix::CutoffResult result = entmix::run_cutoff_experiment(
      n, n_a, args.trials, max_steps, ref, args.seed);
  write_output(args, args.format == "json"
                         ? entmix::cutoff_json(result)
                         : entmix::cutoff_csv(result.curve));
  return kExitOk;
}

int run_gap(const CommonArgs& args) {
  std::vector<entmix::GapReport> reports;
  for (int n : parse_n_list(args.n_qubits)) {
    reports.push_back(entmix::gap_report(n));
  }
  write_output(args, args.format == "json" ? entmix::gap_json(reports)
                                           : entmix::gap_csv(reports));
  return kExitOk;
}

int run_verify(const CommonArgs& args, const std::string& suite_name) {
  entmix::VerifySuite suite = entmix::suite_from_name(suite_name);
  std::string range = args.n_qubits;
  if (range.empty()) {
    switch (suite) {
      case entmix::VerifySuite::lemma1:
        range = "2:8";
        break;
      case entmix::VerifySuite::theorem1:
        range = "8:8";
        break;
      case entmix::VerifySuite::comparison:
        range = "3:10";
        break;
    }
  }
  std::vector<int> ns = parse_n_list(range);
  for (size_t i = 1; i < ns.size(); ++i) {
    if (ns[i] != ns[i - 1] + 1) {
      throw std::invalid_argument("verify: --n-qubits must be contiguous");
    }
  }
  std::vector<entmix::VerifyRow> rows = entmix::run_bound_verification(
      suite, ns.front(), ns.back(), args.trials, args.seed);
  write_output(args, args.format == "json" ? entmix::verify_json(rows)
                                           : entmix::verify_csv(rows));
  for (const entmix::VerifyRow& row : rows) {
    if (!row.pass) {
      return kExitVerifyFailed;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entmix: entanglement growth in random two-qubit circuits"};
  app.require_subcommand(1);

  CommonArgs purity_args;
  CLI::App* purity = app.add_subcommand(
      "purity", "Mean block purity per step for one engine");
  add_common_flags(purity, &purity_args, "6");

  CommonArgs entropy_args;
  CLI::App* entropy = app.add_subcommand(
      "entropy", "Mean entanglement entropy per step, with histograms");
  add_common_flags(entropy, &entropy_args, "6");

  CommonArgs cutoff_args;
  std::int64_t cutoff_max_steps = 0;
  std::string cutoff_reference = "auto";
  CLI::App* cutoff = app.add_subcommand(
      "cutoff", "Total-variation curve of the entropy histogram vs its "
                "asymptotic reference");
  add_common_flags(cutoff, &cutoff_args, "20");
  cutoff->add_option("--max-steps", cutoff_max_steps,
                     "Largest circuit depth (0 = 8 ceil(N log2 N))")
      ->capture_default_str();
  cutoff->add_option("--reference", cutoff_reference,
                     "auto | haar_sampled | asymptotic_empirical")
      ->capture_default_str();

  CommonArgs gap_args;
  CLI::App* gap = app.add_subcommand(
      "gap", "Exact spectral-gap sweep of the subset chain");
  add_common_flags(gap, &gap_args, "3:10");

  CommonArgs verify_args;
  std::string verify_suite = "comparison";
  CLI::App* verify = app.add_subcommand(
      "verify", "Bound suites; exits 1 if any check fails");
  add_common_flags(verify, &verify_args, "");
  verify->add_option("--suite", verify_suite,
                     "lemma1 | theorem1 | comparison")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (purity->parsed()) {
      return run_purity(purity_args);
    }
    if (entropy->parsed()) {
      return run_entropy(entropy_args);
    }
    if (cutoff->parsed()) {
      return run_cutoff(cutoff_args, cutoff_max_steps, cutoff_reference);
    }
    if (gap->parsed()) {
      return run_gap(gap_args);
    }
    if (verify->parsed()) {
      return run_verify(verify_args, verify_suite);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::out_of_range& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
