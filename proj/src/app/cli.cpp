// Copyright 2026 The qpost Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpost/app/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "qpost/app/acceptance.hpp"
#include "qpost/hamlib/hamiltonian_io.hpp"
#include "qpost/hamlib/spectrum.hpp"
#include "qpost/simcore/circuit_io.hpp"
#include "qpost/simcore/postselect.hpp"
#include "qpost/simcore/random.hpp"
#include "qpost/theorems/config.hpp"
#include "qpost/theorems/end_to_end.hpp"
#include "qpost/theorems/envelope.hpp"
#include "qpost/theorems/fidelity_propagation.hpp"
#include "qpost/verifier/energy_verifier.hpp"

namespace qpost::cli {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

struct ReportOptions {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> sets;
  std::string format = "both";
};

void add_report_options(CLI::App* sub, ReportOptions& o) {
  sub->add_option("--config", o.config, "experiment config file (key = value lines)");
  sub->add_option("--out", o.out, "output base path; writes <out>.csv / <out>.json");
  sub->add_option("--seed", o.seed, "random seed (default 0)");
  sub->add_option("--set", o.sets, "override a config key, key=value")->take_all();
  sub->add_option("--format", o.format, "csv, json or both")->check(CLI::IsMember({"csv", "json", "both"}));
}

thm::ExperimentConfig build_config(const ReportOptions& o) {
  thm::ExperimentConfig cfg = o.config.empty() ? thm::ExperimentConfig{} : thm::load_config(o.config);
  for (const auto& s : o.sets) thm::apply_override(cfg, s);
  if (o.seed) cfg.seed = *o.seed;
  return cfg;
}

void emit(const thm::ExperimentReport& rep, const ReportOptions& o, std::ostream& out, const std::string& sweep = {}) {
  if (!o.out.empty()) {
    if (o.format != "json") thm::write_file_atomic(o.out + ".csv", thm::to_csv(rep));
    if (o.format != "csv") thm::write_file_atomic(o.out + ".json", thm::to_json(rep).dump(2) + "\n");
    if (!sweep.empty() && o.format != "json") thm::write_file_atomic(o.out + ".sweep.csv", sweep);
  }
  out << rep.kind << ": " << rep.count(thm::Status::Pass) << " PASS, " << rep.count(thm::Status::Fail) << " FAIL, "
      << rep.count(thm::Status::Vacuous) << " VACUOUS\n";
  for (const auto& r : rep.rows) {
    if (r.status == thm::Status::Fail) {
      out << "  FAIL " << r.name << ": " << num(r.lhs) << ' ' << thm::to_string(r.relation) << ' ' << num(r.rhs)
          << " (margin " << num(r.margin) << ")" << (r.note.empty() ? "" : " " + r.note) << '\n';
    }
  }
  for (const auto& n : rep.notes) out << "  note: " << n << '\n';
}

int cmd_ham(const std::string& path, std::optional<double> a, std::optional<double> b, std::ostream& out) {
  const ham::LocalHamiltonian h = ham::load_hamiltonian(path);
  const ham::SpectralData sd = ham::ground(h);
  out << "n = " << h.n_qubits() << '\n';
  out << "t = " << h.term_count() << '\n';
  out << "E_min = " << num(sd.ground_energy) << '\n';
  out << "spectral_gap = " << num(sd.spectral_gap) << '\n';
  out << "degenerate = " << (sd.degenerate ? "true" : "false") << '\n';
  const auto amps = sd.ground_state.amplitudes();
  const std::size_t shown = std::min<std::size_t>(amps.size(), 16);
  out << "ground_state (" << shown << " of " << amps.size() << " amplitudes):\n";
  for (std::size_t i = 0; i < shown; ++i) {
    out << "  " << sim::bitstring(i, h.n_qubits()) << "  " << num(amps[i].real()) << ' ' << num(amps[i].imag())
        << '\n';
  }
  if (a || b) {
    if (!a || !b) throw thm::ConfigError("promise labels need both --a and --b");
    const ham::PromiseInstance inst{h, *a, *b};
    out << "label = " << ham::to_string(ham::promise_label(inst, sd.ground_energy)) << " (a = " << num(*a)
        << ", b = " << num(*b) << ")\n";
  }
  return kExitOk;
}

int cmd_circuit(const std::string& path, int shots, std::uint64_t seed, std::ostream& out) {
  const sim::PostselectedCircuit c = sim::load_circuit(path);
  const sim::Distribution dist = sim::output_distribution(c, sim::QuantumState::zero(c.n_qubits()));
  out << "qubits = " << c.n_qubits() << '\n' << "gates = " << c.gate_count() << '\n';
  out << "distribution:\n";
  for (std::size_t z = 0; z < dist.probs.size(); ++z) {
    if (dist.probs[z] > 1e-15) out << "  " << sim::bitstring(z, c.n_qubits()) << "  " << num(dist.probs[z]) << '\n';
  }
  std::optional<sim::ConditionalResult> cond;
  if (!c.postselections().empty()) {
    cond = sim::postselect(dist, c);
    out << "postselection success = " << num(cond->success_prob) << '\n';
    if (c.output()) out << "Pr[o=1 | p=1] = " << num(cond->conditional_one(*c.output())) << '\n';
  } else if (c.output()) {
    out << "Pr[o=1] = " << num(dist.marginal_one(*c.output())) << '\n';
  }
  if (shots > 0) {
    // Demonstration only; every reported probability above is exact.
    sim::Rng rng(seed);
    std::discrete_distribution<std::size_t> pick(dist.probs.begin(), dist.probs.end());
    long kept = 0, ones = 0;
    for (int s = 0; s < shots; ++s) {
      const std::size_t z = pick(rng);
      bool ok = true;
      for (const auto& pc : c.postselections()) ok = ok && sim::qubit_value(z, pc.qubit, c.n_qubits()) == pc.value;
      if (!ok) continue;
      ++kept;
      if (c.output()) ones += sim::qubit_value(z, *c.output(), c.n_qubits());
    }
    out << "shots = " << shots << ", kept = " << kept << '\n';
    if (c.output() && kept > 0) out << "sampled Pr[o=1 | kept] = " << num(static_cast<double>(ones) / kept) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const std::string& path, double b, const std::string& witness, std::ostream& out) {
  const ham::LocalHamiltonian h = ham::load_hamiltonian(path);
  const ham::PromiseInstance inst{h, 0.0, b};
  sim::QuantumState w = ham::ground(h).ground_state;
  if (witness == "mixed") {
    const auto d = sim::dimension(h.n_qubits());
    std::vector<cplx> rho(d * d, 0.0);
    for (sim::index_t i = 0; i < d; ++i) rho[i * d + i] = 1.0 / static_cast<double>(d);
    w = sim::QuantumState::mixed(h.n_qubits(), std::move(rho));
  }
  const verify::VerificationReport r = verify::verify_instance(inst, w);
  out << "label = " << ham::to_string(r.label) << '\n';
  out << "t = " << r.gap.t << ", b = " << num(r.gap.b) << ", b' = " << num(r.gap.b_prime) << '\n';
  out << "E_min = " << num(r.ground_energy) << ", E'_min = " << num(r.scaled_ground_energy) << '\n';
  out << "accept = " << num(r.accept_prob) << ", diluted = " << num(r.diluted_prob)
      << ", best_witness_diluted = " << num(r.best_witness_diluted) << '\n';
  out << "thresholds = [" << num(r.thresholds.no_ceiling) << ", " << num(r.thresholds.yes_floor)
      << "], sharp = [" << num(r.sharp.no_ceiling) << ", " << num(r.sharp.yes_floor) << "]\n";
  out << "verdict = " << verify::to_string(r.verdict) << ", margin = " << num(r.margin) << '\n';
  return r.consistent ? kExitOk : kExitFailure;
}

int cmd_suite(const ReportOptions& o, std::ostream& out) {
  const std::uint64_t seed = o.seed.value_or(0);
  const auto results = app::run_acceptance(seed);
  const thm::ExperimentReport rep = app::combine(results, seed);
  if (!o.out.empty()) {
    if (o.format != "json") thm::write_file_atomic(o.out + ".csv", thm::to_csv(rep));
    if (o.format != "csv") thm::write_file_atomic(o.out + ".json", thm::to_json(rep).dump(2) + "\n");
  }
  bool all = true;
  for (const auto& c : results) {
    out << app::criterion_line(c) << '\n';
    all = all && c.pass;
  }
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact simulator and verification harness for postselected quantum circuits", "qpost"};
  app.require_subcommand(1);

  std::string ham_path;
  std::optional<double> ham_a, ham_b;
  auto* ham_cmd = app.add_subcommand("ham", "spectral summary of a Hamiltonian file");
  ham_cmd->add_option("path", ham_path, "Hamiltonian file")->required();
  ham_cmd->add_option("--a", ham_a, "YES threshold");
  ham_cmd->add_option("--b", ham_b, "NO threshold");

  std::string circ_path;
  int shots = 0;
  std::uint64_t circ_seed = 0;
  auto* circ_cmd = app.add_subcommand("circuit", "exact output distribution of a circuit file on |0...0>");
  circ_cmd->add_option("path", circ_path, "circuit file")->required();
  circ_cmd->add_option("--shots", shots, "also draw this many samples (demonstration)")->check(CLI::NonNegativeNumber);
  circ_cmd->add_option("--seed", circ_seed, "sampling seed (default 0)");

  std::string ver_path, witness = "ground";
  double ver_b = 0.0;
  auto* ver_cmd = app.add_subcommand("verify", "energy verifier on a promise instance with a = 0");
  ver_cmd->add_option("path", ver_path, "Hamiltonian file")->required();
  ver_cmd->add_option("--b", ver_b, "NO threshold b, 0 < b <= 2t")->required();
  ver_cmd->add_option("--witness", witness, "ground or mixed")->check(CLI::IsMember({"ground", "mixed"}));

  ReportOptions t1, t2, e2e, suite;
  auto* t1_cmd = app.add_subcommand("thm1", "approximate-ground-state propagation sweep");
  add_report_options(t1_cmd, t1);
  auto* t2_cmd = app.add_subcommand("thm2", "multiplicative-envelope suite");
  add_report_options(t2_cmd, t2);
  auto* e2e_cmd = app.add_subcommand("e2e", "full pipeline on one instance");
  add_report_options(e2e_cmd, e2e);
  auto* suite_cmd = app.add_subcommand("suite", "acceptance battery, one line per criterion");
  suite_cmd->add_option("--out", suite.out, "output base path");
  suite_cmd->add_option("--seed", suite.seed, "random seed (default 0)");
  suite_cmd->add_option("--format", suite.format, "csv, json or both")->check(CLI::IsMember({"csv", "json", "both"}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (*ham_cmd) return cmd_ham(ham_path, ham_a, ham_b, out);
    if (*circ_cmd) return cmd_circuit(circ_path, shots, circ_seed, out);
    if (*ver_cmd) return cmd_verify(ver_path, ver_b, witness, out);
    if (*t1_cmd) {
      const thm::Theorem1Result r = thm::run_theorem1(build_config(t1));
      emit(r.report, t1, out, thm::sweep_csv(r.sweep));
      return r.report.passed() ? kExitOk : kExitFailure;
    }
    if (*t2_cmd) {
      const thm::ExperimentReport r = thm::run_theorem2(build_config(t2));
      emit(r, t2, out);
      return r.passed() ? kExitOk : kExitFailure;
    }
    if (*e2e_cmd) {
      const thm::ExperimentReport r = thm::run_end_to_end(build_config(e2e));
      emit(r, e2e, out);
      return r.passed() ? kExitOk : kExitFailure;
    }
    if (*suite_cmd) return cmd_suite(suite, out);
  } catch (const sim::PostselectionError& e) {
    err << "error: zero-probability postselection: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace qpost::cli
