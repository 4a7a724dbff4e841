#include "soficlab/partition_upgrade.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "soficlab/errors.hpp"

namespace soficlab {

void Partition::validate(int n) const {
  if (blocks.empty()) throw Error("Partition: need at least one block");
  std::vector<char> seen(n, 0);
  long long covered = 0;
  for (const auto& block : blocks) {
    for (int v : block) {
      if (v < 0 || v >= n) throw Error("Partition: index out of range");
      if (seen[v]) throw Error("Partition: blocks overlap");
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != n) throw Error("Partition: blocks do not cover the set");
}

Rational almost_invariance_delta(const ActionModel& model, const Partition& partition) {
  partition.validate(model.n);
  long long worst = 0;
  std::vector<char> in(model.n, 0);
  for (const auto& block : partition.blocks) {
    std::fill(in.begin(), in.end(), 0);
    for (int v : block) in[v] = 1;
    for (const Permutation& g : model.gen_images) {
      long long sym = 0;
      for (int x = 0; x < model.n; ++x)
        if (in[x] != in[g(x)]) ++sym;  // counts |gB \ B| + |B \ gB|
      worst = std::max(worst, sym);
    }
  }
  return Rational(worst, model.n);
}

KazhdanEstimate empirical_kazhdan_constant(const ActionModel& model) {
  model.validate();
  SchreierGraph graph = build_schreier(model, model.group.names);
  ComponentDecomposition orbits = components(graph);
  KazhdanEstimate est;
  est.generator_count = model.group.size();
  if (orbits.count() == model.n) {
    // Every orbit is a singleton: all vectors are invariant.
    est.kappa = 0.0;
    est.gap = std::numeric_limits<double>::infinity();
    return est;
  }
  const int n = model.n;
  Eigen::MatrixXd delta = Eigen::MatrixXd::Zero(n, n);
  for (const Permutation& g : model.gen_images) {
    for (int x = 0; x < n; ++x) {
      delta(x, x) += 2.0;
      delta(g(x), x) -= 1.0;  // pi(k)
      delta(x, g(x)) -= 1.0;  // pi(k)^{-1}
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(delta);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("empirical_kazhdan_constant: eigensolver failed");
  const double gap = solver.eigenvalues()(orbits.count());
  if (gap <= 1e-12)
    throw NoSpectralGap("defect operator has no spectral gap on the complement");
  est.gap = gap;
  est.kappa = std::sqrt(static_cast<double>(est.generator_count) / gap);
  return est;
}

OrbitDensities orbit_densities(const Partition& partition,
                               const ComponentDecomposition& orbits) {
  partition.validate(orbits.n);
  OrbitDensities out;
  out.p.assign(partition.count(), std::vector<Rational>(orbits.count(), Rational(0)));
  for (int i = 0; i < partition.count(); ++i) {
    std::vector<long long> hit(orbits.count(), 0);
    for (int v : partition.blocks[i]) ++hit[orbits.comp_of[v]];
    for (int a = 0; a < orbits.count(); ++a)
      out.p[i][a] = Rational(hit[a], static_cast<long long>(orbits.members[a].size()));
  }
  return out;
}

namespace {

Rational block_sym_diff(const std::vector<int>& before, const std::vector<int>& after, int n) {
  std::vector<char> in(n, 0);
  for (int v : before) in[v] = 1;
  long long sym = 0;
  for (int v : after) {
    if (in[v])
      in[v] = 0;  // shared
    else
      ++sym;  // gained
  }
  for (int v : before)
    if (in[v]) ++sym;  // lost
  return Rational(sym, n);
}

bool exactly_invariant(const ActionModel& model, const Partition& partition) {
  std::vector<char> in(model.n, 0);
  for (const auto& block : partition.blocks) {
    std::fill(in.begin(), in.end(), 0);
    for (int v : block) in[v] = 1;
    for (const Permutation& g : model.gen_images)
      for (int v : block)
        if (!in[g(v)]) return false;
  }
  return true;
}

}  // namespace

UpgradeResult upgrade_partition(const ActionModel& model, const Partition& partition,
                                const KazhdanEstimate& kazhdan) {
  partition.validate(model.n);
  const int d = partition.count();
  const Rational delta = almost_invariance_delta(model, partition);

  SchreierGraph graph = build_schreier(model, model.group.names);
  ComponentDecomposition orbits = components(graph);
  OrbitDensities dens = orbit_densities(partition, orbits);

  UpgradeCertificate cert;
  cert.delta = delta;
  cert.kappa = kazhdan.kappa;
  cert.gap = kazhdan.gap;

  // Markov step and exact projection errors come straight from densities.
  const double sqrt_delta = std::sqrt(delta.to_double());
  cert.markov_weight_max = Rational(0);
  for (int i = 0; i < d; ++i) {
    Rational weight(0), err_sq(0);
    for (int a = 0; a < orbits.count(); ++a) {
      const Rational& p = dens.p[i][a];
      Rational var = p * (Rational(1) - p);
      err_sq += orbits.weights[a] * var;
      if (var * var > delta) weight += orbits.weights[a];  // var > sqrt(delta)
    }
    cert.projection_error_sq.push_back(err_sq);
    if (weight > cert.markov_weight_max) cert.markov_weight_max = weight;
  }
  cert.markov_bound = kazhdan.kappa * kazhdan.kappa * sqrt_delta;
  cert.markov_holds = cert.markov_weight_max.to_double() <= cert.markov_bound + 1e-12;

  if (delta.is_zero()) {
    cert.verbatim = true;
    cert.invariant = exactly_invariant(model, partition);
    for (int i = 0; i < d; ++i) cert.per_block.push_back({Rational(0), 0.0});
    return UpgradeResult{partition, std::move(cert)};
  }
  if (delta >= Rational(1, 16))
    throw DeltaTooLarge("almost-invariance defect " + delta.str() + " >= 1/16");

  // Threshold p >= 1 - 2 sqrt(delta), decided exactly as (1-p)^2 <= 4 delta.
  std::vector<int> assigned(orbits.count(), -1);
  for (int a = 0; a < orbits.count(); ++a) {
    for (int i = 0; i < d; ++i) {
      Rational gap = Rational(1) - dens.p[i][a];
      if (gap * gap <= Rational(4) * delta) {
        if (assigned[a] >= 0)
          throw Error("upgrade_partition: orbit claimed by two blocks despite delta < 1/16");
        assigned[a] = i;
      }
    }
  }

  Partition upgraded;
  upgraded.blocks.assign(d, {});
  for (int a = 0; a < orbits.count(); ++a) {
    int target = assigned[a] >= 0 ? assigned[a] : 0;  // leftovers to block 0
    auto& block = upgraded.blocks[target];
    block.insert(block.end(), orbits.members[a].begin(), orbits.members[a].end());
  }
  for (auto& block : upgraded.blocks) std::sort(block.begin(), block.end());

  const double base_bound = (8.0 + 4.0 * kazhdan.kappa * kazhdan.kappa) * sqrt_delta;
  for (int i = 0; i < d; ++i) {
    UpgradeBlockCert bc;
    bc.sym_diff = block_sym_diff(partition.blocks[i], upgraded.blocks[i], model.n);
    bc.bound = i == 0 ? (d + 1) * base_bound : base_bound;
    cert.per_block.push_back(bc);
  }
  cert.invariant = exactly_invariant(model, upgraded);
  return UpgradeResult{std::move(upgraded), std::move(cert)};
}

}  // namespace soficlab
