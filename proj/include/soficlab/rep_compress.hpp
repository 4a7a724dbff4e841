#ifndef SOFICLAB_REP_COMPRESS_HPP
#define SOFICLAB_REP_COMPRESS_HPP

#include <Eigen/Dense>
#include <vector>

#include "soficlab/action_model.hpp"

namespace soficlab {

// Tolerances, tiered by how much arithmetic feeds each check.
inline constexpr double kUnitaryLoadTol = 1e-10;   // U*U - I at load
inline constexpr double kInvarianceTol = 1e-9;     // subspace invariance
inline constexpr double kDerivedTol = 1e-8;        // composed identities
inline constexpr double kRankTol = 1e-10;          // SVD null-space threshold
inline constexpr double kGapTol = 1e-12;           // spectral-gap floor

// Finite-dimensional unitary representation on the marked generators.
// Inverse letters evaluate by the adjoint.
struct UnitaryRep {
  int dim = 0;
  MarkedGroup group;
  std::vector<Eigen::MatrixXcd> images;

  void validate() const;  // each image unitary within kUnitaryLoadTol
  Eigen::MatrixXcd evaluate(const Word& w) const;
};

UnitaryRep make_rep(MarkedGroup group, std::vector<Eigen::MatrixXcd> images);

// Orthonormal basis (columns) of the joint fixed space of the listed words,
// computed as the SVD null space of sum_k (I - pi(k)). The projection P onto
// the result satisfies ||pi(k)P - P|| <= kInvarianceTol for every word.
Eigen::MatrixXcd fixed_subspace(const UnitaryRep& rep, const std::vector<Word>& words);

struct CompressResult {
  UnitaryRep compressed;        // representation of the quotient window
  double invariance_defect = 0; // max ||(I-P) pi(g) P||
  double unitarity_defect = 0;  // max deviation of compressed images from unitarity
  double kernel_defect = 0;     // max deviation of compressed normal generators from I
};

// Compression to the N-fixed subspace. Checks that the subspace is invariant
// under every generator (NotInvariant otherwise: the subgroup was not normal
// in the supplied data), that compressed images are unitary, and that every
// normal generator compresses to the identity. A zero-dimensional fixed
// space yields an empty representation.
CompressResult compress(const UnitaryRep& rep, const Eigen::MatrixXcd& basis,
                        const NormalSubgroupSpec& nspec);

struct Promotion {
  Eigen::VectorXcd projected;  // P xi
  double distance = 0;         // ||xi - P xi||
  double max_defect = 0;       // max_k ||pi(k) xi - xi||
  double kappa = 0;            // sqrt(|K| / gap)
  double gap = 0;
  bool holds = false;          // distance <= kappa * max_defect (+ fp slack)
};

// Projects a unit vector onto the invariant subspace and certifies the
// distance against the spectral-gap constant of sum_k (2I - pi(k) - pi(k)*).
// NoSpectralGap when the complement has no eigenvalue above kGapTol yet xi
// sticks out of the invariant subspace.
Promotion promote_almost_invariant(const UnitaryRep& rep, const Eigen::VectorXcd& xi);

}  // namespace soficlab

#endif
