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

#include "qpost/theorems/fidelity_propagation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qpost/hamlib/spectrum.hpp"
#include "qpost/simcore/postselect.hpp"
#include "qpost/simcore/simulate.hpp"
#include "qpost/theorems/instances.hpp"
#include "qpost/verifier/energy_measurement.hpp"
#include "qpost/verifier/energy_verifier.hpp"

namespace qpost::thm {

using sim::QuantumState;

std::string_view to_string(WitnessMode m) { return m == WitnessMode::Pure ? "pure" : "mixed"; }
std::string_view to_string(Side s) { return s == Side::Yes ? "YES" : "NO"; }

QuantumState approx_state(const QuantumState& g, double F, const QuantumState& direction, WitnessMode mode) {
  if (!(F >= 0.0 && F <= 1.0)) throw sim::StateError("approx_state: F must lie in [0, 1]");
  if (!g.is_pure() || !direction.is_pure()) throw sim::StateError("approx_state: g and direction must be pure");
  if (g.n_qubits() != direction.n_qubits()) throw sim::DimensionError("approx_state: qubit counts differ");
  if (std::abs(sim::inner_product(g, direction)) > 1e-10) {
    throw sim::StateError("approx_state: direction is not orthogonal to the ground state");
  }
  const auto a = g.amplitudes();
  const auto d = direction.amplitudes();
  const std::size_t dim = a.size();
  if (mode == WitnessMode::Pure) {
    const double sf = std::sqrt(F);
    const double sr = std::sqrt(1.0 - F);
    std::vector<cplx> out(dim);
    for (std::size_t i = 0; i < dim; ++i) out[i] = sf * a[i] + sr * d[i];
    return QuantumState::unchecked_pure(g.n_qubits(), std::move(out));
  }
  std::vector<cplx> rho(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      rho[r * dim + c] = F * (a[r] * std::conj(a[c])) + (1.0 - F) * (d[r] * std::conj(d[c]));
    }
  }
  return QuantumState::unchecked_mixed(g.n_qubits(), std::move(rho));
}

double fidelity_schedule(int k, int m_prime, double kappa) {
  if (k < 1) throw std::invalid_argument("fidelity_schedule: k must be at least 1");
  if (m_prime < 1) throw std::invalid_argument("fidelity_schedule: m' must be at least 1");
  const double joint = 1.0 - kappa * std::ldexp(1.0, -4 * k);
  if (joint <= 0.0) throw std::invalid_argument("fidelity_schedule: kappa 2^{-4k} must be below 1");
  return m_prime == 1 ? joint : std::pow(joint, 1.0 / m_prime);
}

VerifierCircuit build_verifier(const ham::LocalHamiltonian& h, int m_prime, int k) {
  if (m_prime != 1 && m_prime != 3) throw verify::VerifierError("the verifier supports m' = 1 or m' = 3");
  if (k < 1) throw verify::VerifierError("k must be at least 1");
  const ham::ScaledHamiltonian scaled = ham::scale_shift(h);
  const int n = h.n_qubits();
  const int iota = verify::index_register_size(scaled.t);
  const int per_copy = iota + 1;
  const int m = m_prime * per_copy + (m_prime > 1 ? 1 : 0) + (2 * k - 1);
  const int total = m + n * m_prime;
  if (total > sim::kMaxPureQubits) {
    throw sim::CapacityError("verifier needs " + std::to_string(total) + " qubits, above the cap of " +
                             std::to_string(sim::kMaxPureQubits));
  }

  VerifierCircuit v;
  v.circuit = sim::PostselectedCircuit(total);
  v.n = n;
  v.m = m;
  v.m_prime = m_prime;
  v.k = k;

  std::vector<int> accept(m_prime);
  for (int j = 0; j < m_prime; ++j) {
    verify::MeasurementLayout layout;
    for (int q = 0; q < n; ++q) layout.system.push_back(m + j * n + q);
    for (int i = 0; i < iota; ++i) layout.index.push_back(j * per_copy + i);
    layout.ancilla = j * per_copy + iota;
    accept[j] = layout.ancilla;
    verify::append_energy_measurement(v.circuit, scaled, layout);
  }
  int next = m_prime * per_copy;
  if (m_prime == 1) {
    v.output = accept[0];
  } else {
    // MAJ(a, b, c) = ab ^ ac ^ bc.
    v.output = next++;
    v.circuit.toffoli(accept[0], accept[1], v.output);
    v.circuit.toffoli(accept[0], accept[2], v.output);
    v.circuit.toffoli(accept[1], accept[2], v.output);
  }
  const int coins = next;
  for (int i = 0; i < k; ++i) v.circuit.h(coins + i);
  int acc = coins;
  for (int i = 1; i < k; ++i) {
    const int out = coins + k + i - 1;
    v.circuit.toffoli(acc, coins + i, out);
    acc = out;
  }
  v.postselect = acc;
  v.circuit.set_output(v.output);
  v.circuit.add_postselection(v.postselect, 1);
  v.circuit.validate();
  return v;
}

QuantumState verifier_input(const VerifierCircuit& v, const QuantumState& witness) {
  if (witness.n_qubits() != v.n) throw sim::DimensionError("witness size does not match the Hamiltonian");
  const QuantumState copies = sim::tensor_power(witness, v.m_prime);
  return sim::tensor(QuantumState::zero(v.m), copies);
}

BranchProbabilities run_branch(const VerifierCircuit& v, const QuantumState& witness) {
  const sim::Distribution dist = sim::output_distribution(v.circuit, verifier_input(v, witness));
  const sim::PostselectCondition post{v.postselect, 1};
  const sim::PostselectCondition both[] = {{v.output, 1}, post};
  const sim::ConditionalResult cond = sim::postselect(dist, std::span(&post, 1));
  BranchProbabilities b;
  b.success = cond.success_prob;
  b.joint = sim::event_probability(dist, both);
  b.conditional = b.joint / b.success;
  return b;
}

PairResult run_pair(const VerifierCircuit& v, const QuantumState& ground, const QuantumState& approx) {
  return {run_branch(v, ground), run_branch(v, approx)};
}

PropagationCheck check_propagation(const PairResult& pair, double joint_fidelity) {
  PropagationCheck c;
  c.eps = std::max(0.0, 1.0 - joint_fidelity);
  c.tight = std::sqrt(c.eps);
  c.bound = 2.0 * c.tight;
  c.d_joint = std::abs(pair.exact.joint - pair.approx.joint);
  c.d_post = std::abs(pair.exact.success - pair.approx.success);
  c.joint_ok = c.d_joint <= c.bound + 1e-12;
  c.post_ok = c.d_post <= c.bound + 1e-12;
  return c;
}

Theorem1Bounds theorem1_bounds(double delta, int k, double joint_fidelity) {
  Theorem1Bounds b;
  b.eps = std::max(0.0, 1.0 - joint_fidelity);
  b.root = std::sqrt(b.eps);
  const double floor = std::ldexp(1.0, -k);
  b.yes_deviation = (3.0 + 2.0 * delta) * b.root / (floor + 2.0 * b.root);
  b.yes_lb = 0.5 + delta - b.yes_deviation;
  b.no_denominator = floor - 2.0 * b.root;
  b.no_vacuous = !(b.no_denominator > 0.0);
  b.no_deviation = b.no_vacuous ? std::numeric_limits<double>::infinity()
                                 : (3.0 - 2.0 * delta) * b.root / b.no_denominator;
  b.no_ub = 0.5 - delta + b.no_deviation;
  return b;
}

std::vector<InequalityRow> theorem1_verdict(const PairResult& worst, Side side, double delta, int k,
                                            double joint_fidelity, int m_prime, double r) {
  constexpr double tol = 1e-12;
  const Theorem1Bounds b = theorem1_bounds(delta, k, joint_fidelity);
  const double floor = std::ldexp(1.0, -k);
  const double two_root = 2.0 * b.root;
  const auto& ex = worst.exact;
  const auto& ap = worst.approx;
  std::vector<InequalityRow> rows;
  rows.push_back(check("premise_floor", ex.success, Relation::GreaterEqual, floor, tol));
  if (side == Side::Yes) {
    rows.push_back(check("premise_yes", ex.conditional, Relation::GreaterEqual, 0.5 + delta, tol));
    rows.push_back(check("yes_ratio", ap.conditional, Relation::GreaterEqual,
                         (ex.joint - two_root) / (ex.success + two_root), tol));
    rows.push_back(check("yes_exact_floor", ap.conditional, Relation::GreaterEqual,
                         0.5 + delta - (3.0 + 2.0 * delta) * b.root / (ex.success + two_root), tol));
    rows.push_back(check("yes_lb", ap.conditional, Relation::GreaterEqual, b.yes_lb, tol));
  } else {
    rows.push_back(check("premise_no", ex.conditional, Relation::LessEqual, 0.5 - delta, tol));
    const double den = ex.success - two_root;
    if (den > 0.0) {
      rows.push_back(check("no_ratio", ap.conditional, Relation::LessEqual, (ex.joint + two_root) / den, tol));
      rows.push_back(check("no_exact_ceiling", ap.conditional, Relation::LessEqual,
                           0.5 - delta + (3.0 - 2.0 * delta) * b.root / den, tol));
    } else {
      const std::string why = "Pr[p=1] - 2 sqrt(1-F^m') <= 0";
      rows.push_back(vacuous("no_ratio", ap.conditional, Relation::LessEqual, 1.0, why));
      rows.push_back(vacuous("no_exact_ceiling", ap.conditional, Relation::LessEqual, 1.0, why));
    }
    if (!b.no_vacuous) {
      rows.push_back(check("no_ub", ap.conditional, Relation::LessEqual, b.no_ub, tol));
    } else {
      rows.push_back(vacuous("no_ub", ap.conditional, Relation::LessEqual, b.no_ub,
                             "2^-k - 2 sqrt(1-F^m') = " + format_double(b.no_denominator) + " <= 0"));
    }
  }
  const double rm = std::pow(r, m_prime);
  rows.push_back(check("success_floor", rm * ap.success, Relation::GreaterEqual, rm * (ex.success - two_root), tol));
  rows.push_back(check("success_floor_k", rm * ap.success, Relation::GreaterEqual, rm * (floor - two_root), tol));
  return rows;
}

std::vector<QuantumState> perturbation_directions(const ham::LocalHamiltonian& h, const QuantumState& ground,
                                                  int count, sim::Rng& rng) {
  const ham::Spectrum spec = ham::diagonalize(h);
  std::vector<QuantumState> dirs;
  const auto n_eigen = static_cast<int>(spec.values.size()) - 1;
  // Keep at least one random direction so the sweep never relies on the
  // eigenbasis alone.
  const int take = std::min(n_eigen, std::max(count - 1, 0));
  for (int j = 1; j <= take; ++j) dirs.push_back(spec.eigenstate(j));
  while (static_cast<int>(dirs.size()) < count) dirs.push_back(sim::random_orthogonal_state(ground, rng));
  return dirs;
}

std::vector<double> joint_fidelity_grid(int k, int m_prime, double kappa, const std::optional<int>& s) {
  std::vector<double> grid = {1.0, 1.0 - std::ldexp(1.0, -4), 1.0 - std::ldexp(1.0, -8),
                              1.0 - std::ldexp(1.0, -12)};
  const double sched = 1.0 - kappa * std::ldexp(1.0, -4 * k);
  if (sched > 0.0) grid.push_back(sched);
  if (s) grid.push_back(std::pow(1.0 - std::ldexp(1.0, -*s), m_prime));
  std::sort(grid.begin(), grid.end(), std::greater<>());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

namespace {

Json branch_json(const BranchProbabilities& b) {
  return {{"success", b.success}, {"joint", b.joint}, {"conditional", b.conditional}};
}

Json schedule_table(double delta, const std::vector<double>& kappas) {
  Json table = Json::array();
  for (double kappa : kappas) {
    Json entry = {{"kappa", kappa}};
    Json rows = Json::array();
    Json crossover = nullptr;
    for (int k = 1; k <= 8; ++k) {
      const double joint = 1.0 - kappa * std::ldexp(1.0, -4 * k);
      if (joint <= 0.0) continue;
      const Theorem1Bounds b = theorem1_bounds(delta, k, joint);
      const bool informative = b.yes_lb > 0.5 && !b.no_vacuous && b.no_ub < 0.5;
      if (informative && crossover.is_null()) crossover = k;
      rows.push_back({{"k", k},
                      {"joint_fidelity", joint},
                      {"yes_lb", b.yes_lb},
                      {"no_ub", b.no_vacuous ? Json("vacuous") : Json(b.no_ub)},
                      {"yes_deviation", b.yes_deviation},
                      {"informative", informative}});
    }
    entry["rows"] = std::move(rows);
    entry["crossover_k"] = crossover;
    table.push_back(std::move(entry));
  }
  return table;
}

}  // namespace

Theorem1Result run_theorem1(const ExperimentConfig& cfg) {
  const ResolvedInstance inst = resolve_instance(cfg);
  const auto& h = inst.hamiltonian;
  const VerifierCircuit v = build_verifier(h, inst.m_prime, inst.k);
  const ham::Spectrum spec = ham::diagonalize(h);
  const QuantumState g = spec.eigenstate(0);

  Theorem1Result out;
  ExperimentReport& rep = out.report;
  rep.kind = "thm1";

  const BranchProbabilities exact = run_branch(v, g);
  if (exact.conditional == 0.5 && !cfg.delta) {
    throw ConfigError("exact conditional is exactly 1/2: the instance has no promise gap");
  }
  out.side = exact.conditional >= 0.5 ? Side::Yes : Side::No;
  out.delta = cfg.delta.value_or(std::abs(exact.conditional - 0.5));
  const bool degenerate = spec.values.size() > 1 && spec.values(1) - spec.values(0) < ham::kDegeneracyTolerance;

  rep.provenance = {{"instance", inst.id},
                    {"source", inst.source},
                    {"n", v.n},
                    {"t", h.term_count()},
                    {"m", v.m},
                    {"m_prime", v.m_prime},
                    {"k", v.k},
                    {"qubits", v.n_total()},
                    {"seed", cfg.seed},
                    {"r", cfg.r},
                    {"kappa", cfg.kappa},
                    {"directions", cfg.directions},
                    {"ground_energy", spec.values(0)},
                    {"degenerate", degenerate},
                    {"side", std::string(to_string(out.side))},
                    {"delta", out.delta},
                    {"delta_source", cfg.delta ? "config" : "derived"}};
  rep.details["exact"] = branch_json(exact);
  if (degenerate) rep.notes.push_back("ground space is degenerate; the representative is the solver's first vector");

  sim::Rng rng(cfg.seed);
  const std::vector<QuantumState> dirs = perturbation_directions(h, g, cfg.directions, rng);
  const std::vector<double> grid = joint_fidelity_grid(v.k, v.m_prime, cfg.kappa, cfg.s);

  std::vector<WitnessMode> modes;
  if (cfg.mode != ModeSelection::Mixed) modes.push_back(WitnessMode::Pure);
  if (cfg.mode != ModeSelection::Pure) {
    if (v.n_total() <= sim::kMaxMixedQubits) {
      modes.push_back(WitnessMode::Mixed);
    } else {
      rep.notes.push_back("mixed mode skipped: " + std::to_string(v.n_total()) + " qubits exceed the density cap");
    }
  }

  Json worst_json = Json::array();
  for (WitnessMode mode : modes) {
    const QuantumState g_mode = mode == WitnessMode::Pure ? g : g.to_mixed();
    const BranchProbabilities ex = run_branch(v, g_mode);
    for (double joint : grid) {
      const double F = v.m_prime == 1 ? joint : std::pow(joint, 1.0 / v.m_prime);
      const Theorem1Bounds bounds = theorem1_bounds(out.delta, v.k, joint);
      PairResult worst{ex, {}};
      double worst_joint = 0.0, worst_post = 0.0;
      int worst_dir = 0;
      bool first = true;
      for (std::size_t d = 0; d < dirs.size(); ++d) {
        const PairResult pair{ex, run_branch(v, approx_state(g, F, dirs[d], mode))};
        const PropagationCheck prop = check_propagation(pair, joint);
        out.sweep.push_back({mode, F, joint, static_cast<int>(d), prop, bounds, pair});
        worst_joint = std::max(worst_joint, prop.d_joint);
        worst_post = std::max(worst_post, prop.d_post);
        const bool worse = out.side == Side::Yes ? pair.approx.conditional < worst.approx.conditional
                                                 : pair.approx.conditional > worst.approx.conditional;
        if (first || worse) {
          worst.approx.conditional = pair.approx.conditional;
          worst.approx.joint = pair.approx.joint;
          worst_dir = static_cast<int>(d);
        }
        worst.approx.success = first ? pair.approx.success : std::min(worst.approx.success, pair.approx.success);
        first = false;
      }
      const std::string prefix =
          std::string(to_string(mode)) + "/joint=" + format_double(joint) + "/";
      const double bound = 2.0 * std::sqrt(bounds.eps);
      rep.add(check(prefix + "propagation_joint", worst_joint, Relation::LessEqual, bound, 1e-12));
      rep.add(check(prefix + "propagation_post", worst_post, Relation::LessEqual, bound, 1e-12));
      for (auto row : theorem1_verdict(worst, out.side, out.delta, v.k, joint, v.m_prime, cfg.r)) {
        row.name = prefix + row.name;
        rep.add(std::move(row));
      }
      worst_json.push_back({{"mode", std::string(to_string(mode))},
                            {"fidelity", F},
                            {"joint_fidelity", joint},
                            {"bound", bound},
                            {"tight_bound", std::sqrt(bounds.eps)},
                            {"max_d_joint", worst_joint},
                            {"max_d_post", worst_post},
                            {"worst_direction", worst_dir},
                            {"worst_conditional", worst.approx.conditional},
                            {"yes_lb", bounds.yes_lb},
                            {"no_ub", bounds.no_vacuous ? Json("vacuous") : Json(bounds.no_ub)},
                            {"yes_deviation", bounds.yes_deviation},
                            {"no_deviation", bounds.no_vacuous ? Json("vacuous") : Json(bounds.no_deviation)}});
    }
  }
  rep.details["worst_case"] = std::move(worst_json);

  std::vector<double> kappas = {0.25, 1.0, 4.0};
  if (std::find(kappas.begin(), kappas.end(), cfg.kappa) == kappas.end()) kappas.push_back(cfg.kappa);
  rep.details["schedule"] = schedule_table(out.delta, kappas);
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& sweep) {
  std::ostringstream s;
  s << "mode,F,joint,eps,bound,tight,direction,d_joint,d_post,yes_lb,no_ub,cond_exact,cond_approx,"
       "joint_pass,post_pass\n";
  for (const auto& r : sweep) {
    s << to_string(r.mode) << ',' << format_double(r.fidelity) << ',' << format_double(r.joint) << ','
      << format_double(r.prop.eps) << ',' << format_double(r.prop.bound) << ',' << format_double(r.prop.tight)
      << ',' << r.direction << ',' << format_double(r.prop.d_joint) << ',' << format_double(r.prop.d_post)
      << ',' << format_double(r.bounds.yes_lb) << ',' << (r.bounds.no_vacuous ? "vacuous" : format_double(r.bounds.no_ub))
      << ',' << format_double(r.pair.exact.conditional) << ',' << format_double(r.pair.approx.conditional) << ','
      << (r.prop.joint_ok ? "PASS" : "FAIL") << ',' << (r.prop.post_ok ? "PASS" : "FAIL") << '\n';
  }
  return s.str();
}

}  // namespace qpost::thm
