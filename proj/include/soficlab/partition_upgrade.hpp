#ifndef SOFICLAB_PARTITION_UPGRADE_HPP
#define SOFICLAB_PARTITION_UPGRADE_HPP

#include <vector>

#include "soficlab/action_model.hpp"
#include "soficlab/rational.hpp"
#include "soficlab/schreier.hpp"

namespace soficlab {

// Ordered partition of {0..n-1} into d disjoint covering blocks. Block 0 is
// the designated leftover sink during upgrades.
struct Partition {
  std::vector<std::vector<int>> blocks;

  int count() const { return static_cast<int>(blocks.size()); }
  void validate(int n) const;  // disjoint, covering, d >= 1
};

// p[i][alpha] = |B_i cap O_alpha| / |O_alpha|; columns sum to 1.
struct OrbitDensities {
  std::vector<std::vector<Rational>> p;
};

// kappa = sqrt(|K| / gap) where gap is the smallest eigenvalue of the
// defect operator sum_k (2I - pi(k) - pi(k)^{-1}) on the orthogonal
// complement of orbit-constant functions. For any v, the distance to its
// orbit-average satisfies ||v - Pv|| <= kappa * max_k ||pi(k)v - v||.
struct KazhdanEstimate {
  double kappa = 0.0;
  double gap = 0.0;
  int generator_count = 0;
};

// Max over generators k and blocks i of |kB_i triangle B_i| / |Y|, exact.
Rational almost_invariance_delta(const ActionModel& model, const Partition& partition);

// Throws NoSpectralGap when the complement carries an eigenvalue <= 1e-12.
// A pointwise-trivial action (all orbits singletons) returns kappa = 0 with
// an infinite gap: every vector is invariant.
KazhdanEstimate empirical_kazhdan_constant(const ActionModel& model);

OrbitDensities orbit_densities(const Partition& partition,
                               const ComponentDecomposition& orbits);

struct UpgradeBlockCert {
  Rational sym_diff;  // |B_i triangle B_i'| / |Y|
  double bound;       // (8+4k^2)sqrt(delta), (d+1)-inflated for block 0
};

struct UpgradeCertificate {
  Rational delta;
  double kappa = 0.0;
  double gap = 0.0;
  bool invariant = false;  // every output block fixed by every generator
  bool verbatim = false;   // delta == 0 short-circuit
  std::vector<UpgradeBlockCert> per_block;
  // Markov step: max_i of the total orbit weight where p(1-p) > sqrt(delta),
  // bounded by kappa^2 sqrt(delta).
  Rational markov_weight_max;
  double markov_bound = 0.0;
  bool markov_holds = false;
  // ||f_i - Pf_i||^2 = sum_alpha (|O_alpha|/|Y|) p(1-p), exact per block.
  std::vector<Rational> projection_error_sq;
};

struct UpgradeResult {
  Partition upgraded;
  UpgradeCertificate certificate;
};

// Rounds an almost-invariant partition to a partition into unions of orbits.
// An orbit joins block i when its density reaches 1 - 2 sqrt(delta) (ties
// included; decided exactly by squaring); unassigned orbits go to block 0.
// Requires delta < 1/16 (DeltaTooLarge otherwise); delta == 0 returns the
// input verbatim.
UpgradeResult upgrade_partition(const ActionModel& model, const Partition& partition,
                                const KazhdanEstimate& kazhdan);

}  // namespace soficlab

#endif
