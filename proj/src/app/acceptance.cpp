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

#include "qpost/app/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "qpost/app/cli.hpp"
#include "qpost/hamlib/hamiltonian_io.hpp"
#include "qpost/hamlib/random_hamiltonian.hpp"
#include "qpost/hamlib/spectrum.hpp"
#include "qpost/oracles/oracles.hpp"
#include "qpost/simcore/postselect.hpp"
#include "qpost/simcore/random.hpp"
#include "qpost/simcore/simulate.hpp"
#include "qpost/theorems/config.hpp"
#include "qpost/theorems/end_to_end.hpp"
#include "qpost/theorems/envelope.hpp"
#include "qpost/theorems/fidelity_propagation.hpp"
#include "qpost/theorems/instances.hpp"
#include "qpost/verifier/energy_measurement.hpp"
#include "qpost/verifier/energy_verifier.hpp"

namespace qpost::app {

using thm::check;
using thm::ExperimentReport;
using thm::Json;
using thm::Relation;
using thm::Status;

namespace {

// Tolerances pinned by the criteria.
constexpr double kSpectralTol = 1e-9;
constexpr double kScaledTol = 1e-10;
constexpr double kAffineTol = 1e-10;
constexpr double kThresholdTol = 1e-10;
constexpr double kOptimizerTol = 1e-9;
constexpr double kClosedFormTol = 1e-9;
constexpr double kMergeTol = 1e-12;
constexpr double kPipelineTol = 1e-10;

constexpr int kSpectralInstances = 50;
constexpr int kAffinePairs = 200;
constexpr int kMergeCircuits = 25;

CriterionResult finish(int id, std::string title, ExperimentReport rep, std::string summary) {
  rep.kind = "c" + std::to_string(id);
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.pass = rep.passed() && rep.count(Status::Fail) == 0;
  r.summary = std::move(summary);
  r.report = std::move(rep);
  return r;
}

bool starts_with(const std::string& s, std::string_view p) { return s.compare(0, p.size(), p) == 0; }

// Shared random instances for criteria 1 and 2.
std::vector<ham::LocalHamiltonian> spectral_instances(std::uint64_t seed) {
  sim::Rng rng(seed ^ 0x5eed0001ULL);
  std::uniform_int_distribution<int> n_dist(1, 6), t_dist(1, 8);
  std::vector<ham::LocalHamiltonian> out;
  for (int i = 0; i < kSpectralInstances; ++i) {
    const int n = n_dist(rng);
    const int t = t_dist(rng);
    out.push_back(ham::random_local_hamiltonian(n, t, rng));
  }
  return out;
}

double overlap_sq(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) { return std::norm(a.dot(b)); }

Eigen::VectorXcd as_vector(const sim::QuantumState& s) {
  const auto amps = s.amplitudes();
  Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) v(static_cast<Eigen::Index>(i)) = amps[i];
  return v;
}

std::string count_summary(const ExperimentReport& rep) {
  std::ostringstream s;
  s << rep.count(Status::Pass) << " pass, " << rep.count(Status::Fail) << " fail, " << rep.count(Status::Vacuous)
    << " vacuous";
  return s.str();
}

}  // namespace

CriterionResult criterion_spectral(std::uint64_t seed) {
  ExperimentReport rep;
  double worst_de = 0.0, worst_overlap = 1.0, worst_residual = 0.0;
  int degenerate = 0;
  Json per = Json::array();
  const auto hs = spectral_instances(seed);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const auto& h = hs[i];
    const ham::SpectralData sd = ham::ground(h);
    const Eigen::MatrixXcd dense = oracle::kronecker_assemble(h);
    const oracle::Eigensystem es = oracle::jacobi_hermitian(dense);
    const double de = std::abs(sd.ground_energy - es.values[0]);
    const Eigen::VectorXcd g = as_vector(sd.ground_state);
    const bool degen = es.values.size() > 1 && es.values[1] - es.values[0] < ham::kDegeneracyTolerance;
    // In a degenerate ground space the representative only has to lie in it.
    const double residual = (dense * g - es.values[0] * g).norm();
    const double ov = degen ? 1.0 : overlap_sq(es.vectors.col(0), g);
    worst_de = std::max(worst_de, de);
    worst_residual = std::max(worst_residual, residual);
    worst_overlap = std::min(worst_overlap, ov);
    degenerate += degen ? 1 : 0;
    per.push_back({{"n", h.n_qubits()},
                   {"t", h.term_count()},
                   {"energy", sd.ground_energy},
                   {"oracle_energy", es.values[0]},
                   {"degenerate", degen},
                   {"overlap", ov}});
  }
  rep.add(check("instances", static_cast<double>(hs.size()), Relation::GreaterEqual, kSpectralInstances));
  rep.add(check("ground_energy", worst_de, Relation::LessEqual, kSpectralTol));
  rep.add(check("ground_overlap", worst_overlap, Relation::GreaterEqual, 1.0 - kSpectralTol));
  rep.add(check("ground_residual", worst_residual, Relation::LessEqual, kSpectralTol));
  rep.details["instances"] = std::move(per);
  rep.details["degenerate"] = degenerate;
  return finish(1, "spectral oracle equivalence", std::move(rep),
                std::to_string(hs.size()) + " instances, max |dE| = " + thm::format_double(worst_de) +
                    ", min overlap = " + thm::format_double(worst_overlap));
}

CriterionResult criterion_scaled(std::uint64_t seed) {
  ExperimentReport rep;
  double worst_low = 0.0, worst_high = 0.0, worst_shift = 0.0, worst_overlap = 1.0, worst_matrix = 0.0;
  const auto hs = spectral_instances(seed);
  for (const auto& h : hs) {
    const int t = h.term_count();
    const ham::ScaledHamiltonian sc = ham::scale_shift(h);
    const Eigen::MatrixXcd dense = oracle::kronecker_assemble(h);
    const Eigen::MatrixXcd expected =
        0.5 * (dense + static_cast<double>(t) * Eigen::MatrixXcd::Identity(dense.rows(), dense.cols()));
    worst_matrix = std::max(worst_matrix, (sc.assemble() - expected).cwiseAbs().maxCoeff());
    const oracle::Eigensystem es = oracle::jacobi_hermitian(sc.assemble());
    worst_low = std::min(worst_low, es.values.front());
    worst_high = std::max(worst_high, es.values.back() - t);
    const oracle::Eigensystem base = oracle::jacobi_hermitian(dense);
    const ham::Spectrum ss = sc.diagonalize();
    worst_shift = std::max(worst_shift, std::abs(ss.values(0) - (base.values[0] + t) / 2.0));
    const bool degen = base.values.size() > 1 && base.values[1] - base.values[0] < ham::kDegeneracyTolerance;
    if (!degen) {
      worst_overlap = std::min(worst_overlap, overlap_sq(ss.vectors.col(0), as_vector(ham::ground(h).ground_state)));
    }
  }
  rep.add(check("spectrum_lower", worst_low, Relation::GreaterEqual, -kScaledTol));
  rep.add(check("spectrum_upper", worst_high, Relation::LessEqual, kScaledTol));
  rep.add(check("ground_shift", worst_shift, Relation::LessEqual, kScaledTol));
  rep.add(check("ground_preserved", worst_overlap, Relation::GreaterEqual, 1.0 - kSpectralTol));
  rep.add(check("matrix_identity", worst_matrix, Relation::LessEqual, 1e-12));
  return finish(2, "scaled Hamiltonian law", std::move(rep),
                std::to_string(hs.size()) + " instances, max |E'_min - (E_min+t)/2| = " +
                    thm::format_double(worst_shift));
}

CriterionResult criterion_affine(std::uint64_t seed) {
  ExperimentReport rep;
  sim::Rng rng(seed ^ 0x5eed0003ULL);
  std::uniform_int_distribution<int> n_dist(1, 4), t_dist(1, 8);
  double worst_law = 0.0, worst_channel = 0.0;
  int mixed = 0;
  for (int i = 0; i < kAffinePairs; ++i) {
    const ham::LocalHamiltonian h = ham::random_local_hamiltonian(n_dist(rng), t_dist(rng), rng);
    const int n = h.n_qubits();
    const int t = h.term_count();
    const bool use_mixed = i % 4 == 3;
    const sim::QuantumState state =
        use_mixed ? sim::random_mixed_state(n, 2, rng) : sim::random_pure_state(n, rng);
    mixed += use_mixed ? 1 : 0;
    const ham::ScaledHamiltonian sc = ham::scale_shift(h);
    const Eigen::MatrixXcd dense = oracle::kronecker_assemble(h);
    const Eigen::MatrixXcd hp =
        0.5 * (dense + static_cast<double>(t) * Eigen::MatrixXcd::Identity(dense.rows(), dense.cols()));
    const double energy = (hp * oracle::density_of(state)).trace().real();
    const double expected = 1.0 - energy / t;
    const double p = verify::accept_probability(sc, state);
    const double pc = verify::measurement_accept_probability(verify::povm_circuit(sc), state);
    worst_law = std::max(worst_law, std::abs(p - expected));
    worst_channel = std::max(worst_channel, std::abs(pc - p));
  }
  rep.add(check("affine_law", worst_law, Relation::LessEqual, kAffineTol));
  rep.add(check("povm_channel", worst_channel, Relation::LessEqual, kAffineTol));
  rep.details["pairs"] = kAffinePairs;
  rep.details["mixed_states"] = mixed;
  return finish(3, "affine verifier law", std::move(rep),
                std::to_string(kAffinePairs) + " pairs, max law error = " + thm::format_double(worst_law) +
                    ", max channel error = " + thm::format_double(worst_channel));
}

CriterionResult criterion_thresholds() {
  ExperimentReport rep;
  struct Case {
    std::string text;
    bool yes;
  };
  auto identity_lines = [](int count) {
    std::string s;
    for (int i = 0; i < count; ++i) s += "1.0\n";
    return s;
  };
  sim::Rng rng(0x5eed0004ULL);
  const double b_primes[] = {0.125, 0.25, 0.5, 1.0};
  Json details = Json::array();
  for (double bp : b_primes) {
    std::vector<Case> cases;
    cases.push_back({thm::find_builtin("I1")->text, true});
    cases.push_back({"1.0 Z@0\n", true});
    for (int j = 0; j < 3; ++j) {
      cases.push_back({ham::format_hamiltonian(ham::random_local_hamiltonian(3, 4, rng)), true});
    }
    if (bp == 0.125) {
      cases.push_back({identity_lines(3) + "1.0 X@0 Y@1 Z@2\n", false});
      cases.push_back({"1.0\n0.6\n0.3 Z@0 Z@1\n", false});
    } else if (bp == 0.25) {
      cases.push_back({identity_lines(3) + "0.9 Z@0 X@1\n", false});
    } else if (bp == 0.5) {
      cases.push_back({"#qubits 2\n1.0\n", false});
      cases.push_back({"#qubits 1\n1.0\n1.0\n", false});
    }
    const std::string tag = "b'=" + thm::format_double(bp) + "/";
    const double required = bp / (3.0 * (1.0 + bp)) - kThresholdTol;
    int idx = 0, no_cases = 0;
    for (const auto& cs : cases) {
      const ham::LocalHamiltonian h = ham::parse_hamiltonian(cs.text);
      const int t = h.term_count();
      const ham::PromiseInstance inst{h, 0.0, 2.0 * t * bp};
      const verify::VerificationReport vr = verify::verify_instance(inst, ham::ground(h).ground_state);
      const std::string name = tag + (cs.yes ? "yes" : "no") + std::to_string(idx++);
      no_cases += cs.yes ? 0 : 1;
      rep.add(check(name + "/label", vr.label == (cs.yes ? ham::PromiseLabel::Yes : ham::PromiseLabel::No) ? 1.0 : 0.0,
                    Relation::Equal, 1.0));
      if (cs.yes) {
        rep.add(check(name + "/accept", vr.diluted_prob, Relation::GreaterEqual, vr.thresholds.yes_floor));
      } else {
        rep.add(check(name + "/reject", vr.best_witness_diluted, Relation::LessEqual, vr.thresholds.no_ceiling));
      }
      rep.add(check(name + "/margin", vr.margin, Relation::GreaterEqual, required));
      details.push_back({{"b_prime", bp},
                         {"case", name},
                         {"t", t},
                         {"ground_energy", vr.ground_energy},
                         {"diluted", cs.yes ? vr.diluted_prob : vr.best_witness_diluted},
                         {"margin", vr.margin},
                         {"required_margin", required}});
    }
    if (no_cases == 0) {
      // E'_min >= t(1/2 + b') exceeds the spectral bound t once b' > 1/2.
      rep.add(thm::vacuous(tag + "no_instance", 1.5 * 1.0, Relation::LessEqual, 1.0,
                           "no NO instance exists: E'_min >= t(1/2+b') > t"));
    }
  }
  rep.details["cases"] = std::move(details);
  return finish(4, "verifier thresholds", std::move(rep), count_summary(rep));
}

CriterionResult criterion_merge(std::uint64_t seed, const std::vector<thm::InequalityRow>& pipeline_rows) {
  ExperimentReport rep;
  for (const auto& row : pipeline_rows) rep.add(row);
  sim::Rng rng(seed ^ 0x5eed0008ULL);
  std::uniform_int_distribution<int> n_dist(3, 6), g_dist(6, 24);
  double worst_success = 0.0, worst_cond = 0.0;
  int built = 0, attempts = 0;
  while (built < kMergeCircuits && attempts < 20 * kMergeCircuits) {
    ++attempts;
    const int n = n_dist(rng);
    sim::PostselectedCircuit c = sim::random_circuit(n, g_dist(rng), rng);
    c.add_postselection(0, 1).add_postselection(1, 1).set_output(2);
    const sim::Distribution d = sim::output_distribution(c, sim::QuantumState::zero(n));
    if (sim::event_probability(d, c.postselections()) < 1e-9) continue;  // redraw a zero-success circuit
    ++built;
    const sim::ConditionalResult joint = sim::postselect(d, c);
    const sim::PostselectedCircuit m = sim::merge_postselections(c);
    const sim::Distribution dm = sim::output_distribution(m, sim::with_fresh_ancilla(sim::QuantumState::zero(n)));
    const sim::ConditionalResult single = sim::postselect(dm, m);
    worst_success = std::max(worst_success, std::abs(single.success_prob - joint.success_prob));
    for (std::size_t z = 0; z < joint.conditional.probs.size(); ++z) {
      worst_cond = std::max(worst_cond, std::abs(single.conditional.probs[2 * z + 1] - joint.conditional.probs[z]));
    }
  }
  rep.add(check("circuits", built, Relation::GreaterEqual, kMergeCircuits));
  rep.add(check("merged_success", worst_success, Relation::LessEqual, kMergeTol));
  rep.add(check("merged_conditional", worst_cond, Relation::LessEqual, kMergeTol));
  return finish(8, "merge equivalence", std::move(rep),
                std::to_string(built) + " circuits, max deviation = " +
                    thm::format_double(std::max(worst_success, worst_cond)));
}

CriterionResult criterion_negative_controls() {
  ExperimentReport rep;
  const std::string dir = thm::data_directory() + "/negative/";
  auto run = [](std::vector<std::string> args, std::string& out, std::string& err) {
    std::ostringstream o, e;
    const int code = cli::run(args, o, e);
    out = o.str();
    err = e.str();
    return code;
  };
  std::string out, err;
  int code = run({"ham", dir + "four_local.ham"}, out, err);
  rep.add(check("four_local/exit", code, Relation::Equal, cli::kExitInvalid));
  rep.add(check("four_local/message", err.find("3-local") != std::string::npos ? 1.0 : 0.0, Relation::Equal, 1.0));

  code = run({"circuit", dir + "zero_success.qc"}, out, err);
  rep.add(check("zero_success/exit", code, Relation::Equal, cli::kExitInvalid));
  rep.add(check("zero_success/message", err.find("zero") != std::string::npos ? 1.0 : 0.0, Relation::Equal, 1.0));

  code = run({"thm2", "--config", dir + "broken_envelope.cfg"}, out, err);
  rep.add(check("broken_envelope/exit", code, Relation::Equal, cli::kExitFailure));
  rep.add(check("broken_envelope/flagged", out.find("FAIL") != std::string::npos ? 1.0 : 0.0, Relation::Equal, 1.0));

  code = run({"thm1", "--config", dir + "overclaimed_delta.cfg"}, out, err);
  rep.add(check("overclaimed_delta/exit", code, Relation::Equal, cli::kExitFailure));
  return finish(9, "negative controls", std::move(rep), count_summary(rep));
}

std::vector<CriterionResult> criteria_theorems(std::uint64_t seed) {
  ExperimentReport r5, r6, r7;
  std::size_t sweep_points = 0;
  for (const auto& spec : thm::builtin_instances()) {
    thm::ExperimentConfig cfg;
    cfg.instance = spec.id;
    cfg.seed = seed;
    const ExperimentReport e2e = thm::run_end_to_end(cfg);
    int subset_rows = 0;
    for (const auto& row : e2e.rows) {
      auto copy = row;
      copy.name = spec.id + "/" + row.name;
      const bool propagation = row.name.find("/propagation_") != std::string::npos;
      if (starts_with(row.name, "thm1/") && propagation) {
        r5.add(copy);
      } else if (starts_with(row.name, "thm1/") || starts_with(row.name, "e2e/")) {
        r6.add(copy);
      } else if (starts_with(row.name, "thm2/")) {
        if (row.name.find("subset_sums") != std::string::npos) ++subset_rows;
        r7.add(copy);
      }
    }
    r7.add(check(spec.id + "/subset_rows", subset_rows, Relation::GreaterEqual, 1));
    const Json& prov = e2e.details.at("thm1").at("provenance");
    r5.details[spec.id] = {{"qubits", prov.at("qubits")}, {"m_prime", prov.at("m_prime")}, {"k", prov.at("k")}};
  }

  // Sweep coverage and the independent density-matrix cross-check on I1.
  {
    thm::ExperimentConfig cfg;
    cfg.instance = "I1";
    cfg.seed = seed;
    const thm::Theorem1Result t1 = thm::run_theorem1(cfg);
    sweep_points = t1.sweep.size();
    const thm::ResolvedInstance inst = thm::resolve_instance(cfg);
    const thm::VerifierCircuit v = thm::build_verifier(inst.hamiltonian, inst.m_prime, inst.k);
    const sim::QuantumState g = ham::diagonalize(inst.hamiltonian).eigenstate(0);
    sim::Rng rng(cfg.seed);
    const auto dirs = thm::perturbation_directions(inst.hamiltonian, g, cfg.directions, rng);
    const Eigen::MatrixXcd u = oracle::circuit_unitary(v.circuit);
    double worst = 0.0;
    int grid_hits = 0;
    for (const auto& row : t1.sweep) {
      const sim::QuantumState w = thm::approx_state(g, row.fidelity, dirs.at(row.direction), row.mode);
      const Eigen::MatrixXcd rho = oracle::density_of(thm::verifier_input(v, w));
      const Eigen::VectorXd diag = (u * rho * u.adjoint()).diagonal().real();
      double success = 0.0, joint = 0.0;
      for (Eigen::Index z = 0; z < diag.size(); ++z) {
        const auto zi = static_cast<sim::index_t>(z);
        if (sim::qubit_value(zi, v.postselect, v.n_total()) == 1) {
          success += diag(z);
          if (sim::qubit_value(zi, v.output, v.n_total()) == 1) joint += diag(z);
        }
      }
      worst = std::max({worst, std::abs(success - row.pair.approx.success), std::abs(joint - row.pair.approx.joint),
                        std::abs(joint / success - row.pair.approx.conditional)});
      for (double f : {1.0, 1.0 - 0x1p-4, 1.0 - 0x1p-8, 1.0 - 0x1p-12}) grid_hits += row.joint == f ? 1 : 0;
    }
    r5.add(check("I1/oracle_pipeline", worst, Relation::LessEqual, kPipelineTol));
    // 4 required fidelities x directions x 2 modes.
    r5.add(check("I1/required_grid_points", grid_hits, Relation::GreaterEqual, 4 * 20 * 2));
    r5.details["I1_sweep_points"] = sweep_points;
  }

  // Optimizer against vertex enumeration, supports up to 8.
  {
    sim::Rng rng(seed ^ 0x5eed0007ULL);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double cs[] = {1.0, 1.05, 1.1, 1.3, 1.5};
    double worst = 0.0, worst_bisect = 0.0;
    int cases = 0;
    for (int trial = 0; trial < 30; ++trial) {
      const int bits = trial < 15 ? 3 : 4;
      std::vector<double> p(std::size_t{1} << bits, 0.0);
      // Support up to 8: with 4 bits, half of the outcomes stay empty.
      std::vector<std::size_t> idx(p.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::shuffle(idx.begin(), idx.end(), rng);
      const std::size_t support = std::min<std::size_t>(8, p.size());
      double total = 0.0;
      for (std::size_t j = 0; j < support; ++j) total += p[idx[j]] = 0.05 + u01(rng);
      for (double& x : p) x /= total;
      sim::Distribution d{bits, p};
      const thm::ConditionalQuery q{0, {1}};
      if (thm::query_masses(d, q).denominator <= 0.0 || thm::query_masses(d, q).numerator <= 0.0) continue;
      for (double c : cs) {
        for (auto sense : {thm::Sense::Minimize, thm::Sense::Maximize}) {
          const double dk = thm::envelope_optimize(d, c, q, sense).value;
          const double bi = thm::envelope_optimize(d, c, q, sense, thm::EnvelopeMethod::Bisection).value;
          const double ve = oracle::vertex_enumeration(p, bits, 0, {1}, c, sense == thm::Sense::Minimize);
          worst = std::max(worst, std::abs(dk - ve));
          worst_bisect = std::max(worst_bisect, std::abs(bi - ve));
          ++cases;
        }
      }
    }
    r7.add(check("optimizer_vs_vertices", worst, Relation::LessEqual, kOptimizerTol));
    r7.add(check("bisection_vs_vertices", worst_bisect, Relation::LessEqual, kOptimizerTol));
    r7.add(check("optimizer_cases", cases, Relation::GreaterEqual, 200));

    // Two-outcome-register example: p(o1p1) = p(o0p1) = 0.3, p(p0) = 0.4.
    sim::Distribution ex{2, {0.4, 0.3, 0.0, 0.3}};
    const thm::ConditionalQuery q{0, {1}};
    const double dk = thm::envelope_optimize(ex, 1.1, q, thm::Sense::Minimize).value;
    const double ve = oracle::vertex_enumeration(ex.probs, 2, 0, {1}, 1.1, true);
    r7.add(check("example_min", dk, Relation::Equal, ve, kOptimizerTol));
    r7.add(check("example_value", dk, Relation::Equal, (0.3 / 1.1) / (0.3 / 1.1 + 0.33), kOptimizerTol));
  }

  // Synthetic bases with delta = 0.3 so both sides are exercised inside the
  // regime for every c in the list (1.3^2 = 1.69 > 1.6 is flagged).
  for (const bool yes : {true, false}) {
    const double cond = yes ? 0.8 : 0.2;
    // Qubits (o, p, spare); Pr[p = 1] = 1/2.
    sim::Distribution base{3, {0.2, 0.05, 0.25 * (1.0 - cond), 0.25 * (1.0 - cond), 0.2, 0.05, 0.25 * cond,
                              0.25 * cond}};
    thm::Theorem2Input in{base, {0, {1}}, 0.3, yes};
    thm::ExperimentConfig cfg;
    cfg.seed = seed;
    cfg.c = 1.2;
    ExperimentReport t2 = thm::run_theorem2(in, cfg);
    for (auto row : t2.rows) {
      row.name = std::string(yes ? "synthetic_yes/" : "synthetic_no/") + row.name;
      r7.add(std::move(row));
    }
  }

  // Closed forms at (c, delta) = (1.2, 0.3), against direct arithmetic.
  {
    const thm::Theorem2ClosedForms f = thm::theorem2_closed_forms(1.2, 0.3);
    r7.add(check("closed/yes_bound", f.yes_bound, Relation::Equal, 0.8 / 1.44, kClosedFormTol));
    r7.add(check("closed/yes_above_half", f.yes_bound, Relation::Greater, 0.5));
    r7.add(check("closed/no_bound", f.no_bound, Relation::Equal, 0.288, kClosedFormTol));
    r7.add(check("closed/no_target", f.no_target, Relation::Equal, 0.32, kClosedFormTol));
    r7.add(check("closed/no_below_target", f.no_bound, Relation::Less, f.no_target));
    r7.add(check("closed/in_regime", f.in_regime ? 1.0 : 0.0, Relation::Equal, 1.0));
  }

  std::vector<CriterionResult> out;
  out.push_back(finish(5, "propagation bound", std::move(r5),
                       std::to_string(sweep_points) + " I1 sweep points; rows: " + count_summary(r5)));
  out.push_back(finish(6, "verdict chains", std::move(r6), count_summary(r6)));
  out.push_back(finish(7, "multiplicative envelope", std::move(r7), count_summary(r7)));
  return out;
}

namespace {

CriterionResult criterion_determinism(std::uint64_t seed) {
  ExperimentReport rep;
  thm::ExperimentConfig cfg;
  cfg.instance = "I1";
  cfg.seed = seed;
  const ExperimentReport a = thm::run_end_to_end(cfg);
  const ExperimentReport b = thm::run_end_to_end(cfg);
  const bool csv_same = thm::to_csv(a) == thm::to_csv(b);
  const bool json_same = thm::to_json(a).dump(2) == thm::to_json(b).dump(2);
  rep.add(check("csv_identical", csv_same ? 1.0 : 0.0, Relation::Equal, 1.0));
  rep.add(check("json_identical", json_same ? 1.0 : 0.0, Relation::Equal, 1.0));
  return finish(10, "determinism", std::move(rep), "I1 pipeline run twice, byte comparison of CSV and JSON");
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  out.push_back(criterion_spectral(seed));
  out.push_back(criterion_scaled(seed));
  out.push_back(criterion_affine(seed));
  out.push_back(criterion_thresholds());
  std::vector<thm::InequalityRow> merge_rows;
  for (auto& c : criteria_theorems(seed)) {
    for (const auto& row : c.report.rows) {
      if (row.name.find("merge") != std::string::npos) merge_rows.push_back(row);
    }
    out.push_back(std::move(c));
  }
  out.push_back(criterion_merge(seed, merge_rows));
  out.push_back(criterion_negative_controls());
  out.push_back(criterion_determinism(seed));
  return out;
}

std::string criterion_line(const CriterionResult& c) {
  return std::string(c.pass ? "PASS" : "FAIL") + " criterion " + std::to_string(c.id) + " (" + c.title +
         "): " + c.summary;
}

ExperimentReport combine(const std::vector<CriterionResult>& results, std::uint64_t seed) {
  ExperimentReport rep;
  rep.kind = "suite";
  rep.provenance = {{"seed", seed}, {"criteria", results.size()}};
  Json summary = Json::array();
  for (const auto& c : results) {
    rep.append(c.report, "c" + std::to_string(c.id) + "/");
    summary.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"summary", c.summary}});
  }
  rep.details["criteria"] = std::move(summary);
  return rep;
}

}  // namespace qpost::app
