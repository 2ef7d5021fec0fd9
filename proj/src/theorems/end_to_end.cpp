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

#include "qpost/theorems/end_to_end.hpp"

#include <cmath>

#include "qpost/hamlib/spectrum.hpp"
#include "qpost/simcore/postselect.hpp"
#include "qpost/theorems/envelope.hpp"

namespace qpost::thm {

using sim::QuantumState;

CompositeCircuit build_composite(const VerifierCircuit& v, const QuantumState& psi, double r) {
  if (!psi.is_pure() || psi.n_qubits() != v.n) throw sim::StateError("composite witness must be a pure n-qubit state");
  if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("r must lie in (0, 1]");
  const int mp = v.m_prime;
  const int extra = mp + (mp - 1);
  CompositeCircuit cc;
  cc.offset = extra;
  cc.circuit = sim::PostselectedCircuit(extra + v.n_total());

  const std::size_t d = psi.dim();
  std::vector<cplx> target(2 * d, cplx{0.0, 0.0});
  target[0] = std::sqrt(1.0 - r);  // flag 0, junk |0^n>
  const auto a = psi.amplitudes();
  for (std::size_t x = 0; x < d; ++x) target[d + x] += std::sqrt(r) * a[x];
  const std::vector<cplx> prep = sim::preparation_unitary(target);
  for (int j = 0; j < mp; ++j) {
    std::vector<int> qubits = {j};
    for (int q = 0; q < v.n; ++q) qubits.push_back(extra + v.m + j * v.n + q);
    cc.circuit.add(sim::UnitaryBlock{std::move(qubits), prep, "witness-prep-" + std::to_string(j)});
  }
  int acc = 0;
  for (int j = 1; j < mp; ++j) {
    const int out = mp + j - 1;
    cc.circuit.toffoli(acc, j, out);
    acc = out;
  }
  cc.flag_register = acc;
  for (const auto& op : v.circuit.operations()) {
    std::visit([&](auto&& o) { cc.circuit.add(std::forward<decltype(o)>(o)); }, sim::shifted(op, extra));
  }
  cc.circuit.set_output(v.output + extra);
  cc.circuit.add_postselection(cc.flag_register, 1);
  cc.circuit.add_postselection(v.postselect + extra, 1);
  cc.circuit.validate();
  return cc;
}

CompositeResult run_composite(const CompositeCircuit& c) {
  const QuantumState zero = QuantumState::zero(c.circuit.n_qubits());
  const auto joint = sim::postselect(sim::output_distribution(c.circuit, zero), c.circuit);
  const sim::PostselectedCircuit merged = sim::merge_postselections(c.circuit);
  const auto single = sim::postselect(sim::output_distribution(merged, sim::with_fresh_ancilla(zero)), merged);
  const int o = *c.circuit.output();
  return {joint.success_prob, joint.conditional_one(o), single.success_prob, single.conditional_one(o)};
}

ExperimentReport run_end_to_end(const ExperimentConfig& cfg) {
  constexpr double tol = 1e-12;
  ExperimentReport rep;
  rep.kind = "e2e";

  const Theorem1Result t1 = run_theorem1(cfg);
  const ResolvedInstance inst = resolve_instance(cfg);
  const auto& h = inst.hamiltonian;
  const VerifierCircuit v = build_verifier(h, inst.m_prime, inst.k);
  const ham::Spectrum spec = ham::diagonalize(h);
  const QuantumState g = spec.eigenstate(0);
  rep.provenance = t1.report.provenance;

  // Composite circuit at the schedule fidelity (or 1 - 2^-s when set), along
  // the first excited direction.
  const double F = cfg.s ? 1.0 - std::ldexp(1.0, -*cfg.s) : fidelity_schedule(v.k, v.m_prime, cfg.kappa);
  const double joint_F = std::pow(F, v.m_prime);
  sim::Rng rng(cfg.seed);
  const QuantumState dir = perturbation_directions(h, g, 1, rng).front();
  const QuantumState psi = approx_state(g, F, dir, WitnessMode::Pure);
  const PairResult pair = run_pair(v, g, psi);
  const CompositeCircuit cc = build_composite(v, psi, cfg.r);
  const CompositeResult cr = run_composite(cc);
  const double rm = std::pow(cfg.r, v.m_prime);
  const double two_root = 2.0 * std::sqrt(std::max(0.0, 1.0 - joint_F));

  rep.add(check("e2e/conditional_matches", cr.conditional, Relation::Equal, pair.approx.conditional, tol));
  rep.add(check("e2e/success_product", cr.success, Relation::Equal, rm * pair.approx.success, tol));
  rep.add(check("e2e/success_floor", cr.success, Relation::GreaterEqual, rm * (pair.exact.success - two_root), tol));
  rep.add(check("e2e/merge_success", cr.merged_success, Relation::Equal, cr.success, tol));
  rep.add(check("e2e/merge_conditional", cr.merged_conditional, Relation::Equal, cr.conditional, tol));
  const bool yes = t1.side == Side::Yes;
  auto side_of = [&](double p) { return (yes ? p >= 0.5 : p < 0.5) ? 1.0 : 0.0; };
  rep.add(check("e2e/merge_verdict_invariant", side_of(cr.merged_conditional), Relation::Equal,
                side_of(cr.conditional)));
  for (auto row : theorem1_verdict(pair, t1.side, t1.delta, v.k, joint_F, v.m_prime, cfg.r)) {
    row.name = "e2e/" + row.name;
    rep.add(std::move(row));
  }
  rep.details["composite"] = {{"fidelity", F},
                              {"joint_fidelity", joint_F},
                              {"qubits", cc.circuit.n_qubits()},
                              {"success", cr.success},
                              {"conditional", cr.conditional},
                              {"merged_success", cr.merged_success},
                              {"merged_conditional", cr.merged_conditional},
                              {"approx_branch_success", pair.approx.success},
                              {"approx_branch_conditional", pair.approx.conditional}};

  Theorem2Input in;
  in.base = sim::output_distribution(v.circuit, verifier_input(v, g));
  in.query = {v.output, {v.postselect}};
  in.delta = t1.delta;
  in.yes_side = yes;
  const ExperimentReport t2 = run_theorem2(in, cfg);

  // Theorem 1 rows first, then the composite, then Theorem 2.
  ExperimentReport out;
  out.kind = "e2e";
  out.provenance = rep.provenance;
  out.append(t1.report, "thm1/");
  for (auto& r : rep.rows) out.rows.push_back(r);
  out.details["e2e"] = rep.details;
  out.append(t2, "thm2/");
  return out;
}

}  // namespace qpost::thm
