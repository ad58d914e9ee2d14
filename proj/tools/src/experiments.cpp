// Copyright 2026 The relstate-logic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rql/cli/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rql/rql.hpp"

namespace rql::cli {

namespace {

constexpr std::array<std::pair<Experiment, std::string_view>, 6> kNames{{
    {Experiment::BvnDemo, "bvn-demo"},
    {Experiment::Conjunction, "conjunction"},
    {Experiment::DistributiveSweep, "distributive-sweep"},
    {Experiment::EntropyTrace, "entropy-trace"},
    {Experiment::NaimarkCheck, "naimark-check"},
    {Experiment::TruthTable, "truth-table"},
}};

using I64 = std::int64_t;

Operator proj(const StateVector& v) { return outer_product(v, v); }

Subspace line(const StateVector& v) { return span(StateList{v}, v.dim()); }

double grid_point(int k, int points) { return static_cast<double>(k) / static_cast<double>(points - 1); }

void bvn_demo(const ExperimentConfig& cfg, Report& r) {
  r.columns = {"lhs_rank", "rhs_rank", "lhs_distance", "rhs_distance", "lhs_rhs_distance", "equal", "ok"};
  const auto uz = line(qubit::up_z());
  const auto d = check_distributivity(uz, line(qubit::up_x()), line(qubit::down_x()), cfg.tolerances);
  const double dl = projector_distance(d.lhs, uz);
  const double dr = projector_distance(d.rhs, Subspace::null(2));
  r.add_row({I64{d.lhs.rank()}, I64{d.rhs.rank()}, dl, dr, d.distance, d.equal,
             !d.equal && dl < cfg.check_tol && dr < cfg.check_tol});
}

void conjunction(const ExperimentConfig& cfg, Rng& rng, Report& r) {
  r.columns = {"state", "i", "j", "p_first_then_second", "p_second_then_first", "identity_residual", "ok"};
  const auto pair = ConjugatePair::fourier(cfg.dim_s);
  const std::array<std::pair<std::string, StateVector>, 2> states{{
      {"e0", StateVector::basis(cfg.dim_s, 0)},
      {"random", random_state(rng, cfg.dim_s)},
  }};
  for (const auto& [name, psi] : states) {
    for (Index i = 0; i < cfg.dim_s; ++i) {
      for (Index j = 0; j < cfg.dim_s; ++j) {
        const double fx = conjunction_probability(psi, pair, i, j, ConjunctionOrder::FirstThenSecond);
        const double xf = conjunction_probability(psi, pair, i, j, ConjunctionOrder::SecondThenFirst);
        const double pf = std::norm(inner_product(pair.first()[static_cast<std::size_t>(i)], psi));
        const double px = std::norm(inner_product(pair.second()[static_cast<std::size_t>(j)], psi));
        const double residual = std::abs(fx * px - xf * pf);
        r.add_row({name, I64{i}, I64{j}, fx, xf, residual, residual < cfg.check_tol});
      }
    }
  }
}

void distributive_sweep(const ExperimentConfig& cfg, Report& r) {
  r.columns = {"s", "lhs", "rhs_sum", "interference", "z_modulus", "z_phase", "residual", "ok"};
  const double t = std::numbers::pi / 8.0;
  const auto psi = StateVector::normalized({std::cos(t), std::sin(t)});
  const auto pair = ConjugatePair::qubit_zx();
  for (int k = 0; k < cfg.sweep_points; ++k) {
    const double s = grid_point(k, cfg.sweep_points);
    const auto d = distributive_analysis(psi, pair, 0, s, cfg.tolerances);
    const double residual = std::abs(d.lhs - d.rhs_sum - d.interference);
    r.add_row({s, d.lhs, d.rhs_sum, d.interference, d.z_modulus, d.z_phase, residual, residual < cfg.check_tol});
  }
}

void entropy_trace(const ExperimentConfig& cfg, Report& r) {
  r.columns = {"theta", "overlap", "s_system", "s_environment", "symmetry_residual", "ok"};
  const Index ds = cfg.dim_s;
  const Index de = cfg.dim_e;
  const auto phi = computational_basis(ds);
  const auto ready = StateVector::basis(de, 0);
  const auto psi = StateVector::normalized(Amplitudes::Ones(ds));
  const double bound = std::log2(static_cast<double>(ds));
  for (int k = 0; k < cfg.sweep_points; ++k) {
    const double theta = grid_point(k, cfg.sweep_points) * std::numbers::pi / 2.0;
    StateList targets{ready};
    for (Index i = 1; i < ds; ++i) {
      Amplitudes v = Amplitudes::Zero(de);
      v(0) = std::cos(theta);
      v(i) = std::sin(theta);
      targets.push_back(StateVector::normalized(std::move(v)));
    }
    const auto state = evolve(psi, ready, premeasurement_unitary(phi, targets, ready, cfg.tolerances), cfg.tolerances);
    const auto [s, e] = entropy_symmetry_check(state, cfg.tolerances);
    const double residual = std::abs(s - e);
    r.add_row({theta, std::cos(theta), s, e, residual, residual < cfg.check_tol && s <= bound + cfg.check_tol});
  }
}

void naimark_check(const ExperimentConfig& cfg, Rng& rng, Report& r) {
  r.columns = {"instance", "outcomes", "max_deviation", "completeness_defect", "ok"};
  const Index ds = cfg.dim_s;
  const Index de = cfg.dim_e;
  const Index n = ds * de;
  std::uniform_int_distribution<int> pick(0, 2);
  for (int k = 0; k < cfg.sweep_points; ++k) {
    const Operator u = random_unitary(rng, n);
    const auto ready = random_state(rng, de);
    std::vector<IndexSet> cells(3);
    for (Index l = 0; l < n; ++l) cells[static_cast<std::size_t>(pick(rng))].insert(static_cast<std::size_t>(l));
    std::erase_if(cells, [](const IndexSet& c) { return c.empty(); });
    const Pvm pvm = pvm_from_basis(random_basis(rng, n), std::move(cells), cfg.tolerances);
    const Povm povm = naimark_compress(pvm, u, ready, ds, cfg.tolerances);
    const auto psi = random_state(rng, ds);
    const auto joint = evolve(psi, ready, u, cfg.tolerances).joint();

    double worst = 0.0;
    Operator sum = Operator::Zero(ds, ds);
    for (std::size_t c = 0; c < pvm.outcome_count(); ++c) {
      const double compressed = born_probability(psi, povm.element(c), cfg.tolerances);
      const double dilated = born_probability(joint, pvm.outcome(c), cfg.tolerances);
      worst = std::max(worst, std::abs(compressed - dilated));
      sum += povm.element(c);
    }
    const double completeness = sup_norm(sum - Operator::Identity(ds, ds));
    r.add_row({I64{k}, static_cast<I64>(pvm.outcome_count()), worst, completeness,
               worst < cfg.check_tol && completeness < 1e-9});
  }
}

std::string value_name(TernaryValue v) { return std::string(to_string(v)); }

void truth_table(const ExperimentConfig& cfg, Report& r) {
  r.columns = {"proposition", "probability", "value", "expected", "ok"};
  const auto& tol = cfg.tolerances;
  const auto add = [&](const std::string& name, double p, TernaryValue v, TernaryValue expected) {
    r.add_row({name, p, value_name(v), value_name(expected), v == expected});
  };
  for (double p : {0.0, 0.3, 0.5, 1.0}) {
    const std::string ps = std::to_string(p).substr(0, 3);
    add("X (P=" + ps + ")", p, truth_value(p, tol),
        p == 0.0 ? TernaryValue::False : (p == 1.0 ? TernaryValue::True : TernaryValue::Uncertain));
    add("X∨¬X (P(X)=" + ps + ")", p, excluded_middle(p, tol), TernaryValue::True);
  }

  // A = up_z, B = up_x on a qubit prepared in up_z.
  const auto psi = qubit::up_z();
  const Operator a = proj(qubit::up_z());
  const Operator not_a = Operator::Identity(2, 2) - a;
  const Operator b = proj(qubit::up_x());
  const auto implication = [&](const std::string& name, const Operator& x, const Operator& y, TernaryValue expected) {
    const double p = conditional_probability(psi, y, x, tol);
    add(name, p, implication_truth(psi, x, y, tol), expected);
  };
  implication("A⟹A", a, a, TernaryValue::True);
  implication("A⟹¬A", a, not_a, TernaryValue::False);
  implication("A⟹B", a, b, TernaryValue::Uncertain);
  implication("A⟹(¬A⟹B)", commuting_conjunction(a, not_a, tol), b, TernaryValue::False);
}

}  // namespace

std::string_view to_string(Experiment e) {
  for (const auto& [k, name] : kNames) {
    if (k == e) return name;
  }
  return "?";
}

std::optional<Experiment> parse_experiment(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

void ExperimentConfig::validate() const {
  if (dim_s < 2 || dim_e < 2) throw std::invalid_argument("config: dimensions must be at least 2");
  if (sweep_points < 2) throw std::invalid_argument("config: --points must be at least 2");
  if (!(check_tol > 0.0) || !std::isfinite(check_tol)) throw std::invalid_argument("config: --tol must be positive");
  tolerances.validate();
  if (seed > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw std::invalid_argument("config: --seed must fit in a signed 64-bit integer");
  }
  if (experiment == Experiment::EntropyTrace && dim_e < dim_s) {
    throw std::invalid_argument("config: entropy-trace needs --dim-e >= --dim-s");
  }
  if (experiment == Experiment::NaimarkCheck && dim_s * dim_e > 64) {
    throw std::invalid_argument("config: naimark-check joint dimension is limited to 64");
  }
}

Report run(const ExperimentConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  Report r;
  r.experiment = std::string(to_string(cfg.experiment));
  r.inputs = {
      {"dim_s", I64{cfg.dim_s}},
      {"dim_e", I64{cfg.dim_e}},
      {"points", I64{cfg.sweep_points}},
      {"seed", static_cast<I64>(cfg.seed)},
      {"tol", cfg.check_tol},
  };
  switch (cfg.experiment) {
    case Experiment::BvnDemo:
      bvn_demo(cfg, r);
      break;
    case Experiment::Conjunction:
      conjunction(cfg, rng, r);
      break;
    case Experiment::DistributiveSweep:
      distributive_sweep(cfg, r);
      break;
    case Experiment::EntropyTrace:
      entropy_trace(cfg, r);
      break;
    case Experiment::NaimarkCheck:
      naimark_check(cfg, rng, r);
      break;
    case Experiment::TruthTable:
      truth_table(cfg, r);
      break;
  }
  r.pass = r.rows_pass();
  return r;
}

}  // namespace rql::cli
