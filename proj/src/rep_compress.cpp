#include "soficlab/rep_compress.hpp"

#include <cmath>
#include <limits>

#include "soficlab/errors.hpp"

namespace soficlab {

namespace {

double unitarity_defect_of(const Eigen::MatrixXcd& u) {
  const int d = static_cast<int>(u.cols());
  return (u.adjoint() * u - Eigen::MatrixXcd::Identity(d, d)).norm();
}

}  // namespace

void UnitaryRep::validate() const {
  if (dim < 0) throw Error("UnitaryRep: negative dimension");
  if (static_cast<int>(images.size()) != group.size())
    throw Error("UnitaryRep: one matrix per generator required");
  for (int i = 0; i < group.size(); ++i) {
    if (images[i].rows() != dim || images[i].cols() != dim)
      throw SizeMismatch("UnitaryRep: matrix shape mismatch for '" + group.names[i] + "'");
    if (unitarity_defect_of(images[i]) > kUnitaryLoadTol)
      throw Error("UnitaryRep: generator '" + group.names[i] + "' is not unitary");
  }
}

Eigen::MatrixXcd UnitaryRep::evaluate(const Word& w) const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
  for (const Letter& l : w.letters()) {
    if (l.gen < 0 || l.gen >= group.size())
      throw UnknownGenerator("word letter out of range");
    m = m * (l.sign > 0 ? images[l.gen] : images[l.gen].adjoint().eval());
  }
  return m;
}

UnitaryRep make_rep(MarkedGroup group, std::vector<Eigen::MatrixXcd> images) {
  UnitaryRep rep;
  rep.dim = images.empty() ? 0 : static_cast<int>(images.front().rows());
  rep.group = std::move(group);
  rep.images = std::move(images);
  rep.validate();
  return rep;
}

Eigen::MatrixXcd fixed_subspace(const UnitaryRep& rep, const std::vector<Word>& words) {
  const int d = rep.dim;
  if (words.empty()) throw Error("fixed_subspace: no words given");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (const Word& w : words) m += Eigen::MatrixXcd::Identity(d, d) - rep.evaluate(w);

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? sv(0) * kRankTol : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  Eigen::MatrixXcd basis = svd.matrixV().rightCols(d - rank);

  // The basis must actually be fixed by every word.
  Eigen::MatrixXcd p = basis * basis.adjoint();
  for (const Word& w : words)
    if ((rep.evaluate(w) * p - p).norm() > kInvarianceTol)
      throw NumericalFailure("fixed_subspace: candidate space is not fixed");
  return basis;
}

CompressResult compress(const UnitaryRep& rep, const Eigen::MatrixXcd& basis,
                        const NormalSubgroupSpec& nspec) {
  rep.validate();
  const int d = rep.dim;
  const int r = static_cast<int>(basis.cols());
  if (basis.rows() != d) throw SizeMismatch("compress: basis row count != dim");
  if (r > 0 &&
      (basis.adjoint() * basis - Eigen::MatrixXcd::Identity(r, r)).norm() > kInvarianceTol)
    throw Error("compress: basis is not orthonormal");

  const Eigen::MatrixXcd p = basis * basis.adjoint();
  const Eigen::MatrixXcd complement = Eigen::MatrixXcd::Identity(d, d) - p;

  CompressResult out;
  out.compressed.dim = r;
  out.compressed.group = rep.group;
  for (int i = 0; i < rep.group.size(); ++i) {
    const double defect = (complement * rep.images[i] * p).norm();
    out.invariance_defect = std::max(out.invariance_defect, defect);
    if (defect > kInvarianceTol)
      throw NotInvariant("compress: fixed space is not invariant under generator '" +
                         rep.group.names[i] + "'");
    Eigen::MatrixXcd c = basis.adjoint() * rep.images[i] * basis;
    out.unitarity_defect = std::max(out.unitarity_defect, unitarity_defect_of(c));
    out.compressed.images.push_back(std::move(c));
  }
  if (out.unitarity_defect > kInvarianceTol)
    throw NumericalFailure("compress: compressed images drift from unitarity");

  for (const Word& w : nspec.generators) {
    Eigen::MatrixXcd c = basis.adjoint() * rep.evaluate(w) * basis;
    out.kernel_defect =
        std::max(out.kernel_defect, (c - Eigen::MatrixXcd::Identity(r, r)).norm());
  }
  if (out.kernel_defect > kInvarianceTol)
    throw NumericalFailure("compress: a normal generator does not compress to the identity");
  return out;
}

Promotion promote_almost_invariant(const UnitaryRep& rep, const Eigen::VectorXcd& xi) {
  rep.validate();
  const int d = rep.dim;
  if (xi.size() != d) throw SizeMismatch("promote_almost_invariant: vector size != dim");
  if (std::abs(xi.norm() - 1.0) > kUnitaryLoadTol)
    throw Error("promote_almost_invariant: input is not a unit vector");

  Eigen::MatrixXcd delta = Eigen::MatrixXcd::Zero(d, d);
  for (const Eigen::MatrixXcd& u : rep.images)
    delta += 2.0 * Eigen::MatrixXcd::Identity(d, d) - u - u.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(delta);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("promote_almost_invariant: eigensolver failed");

  const auto& eig = solver.eigenvalues();
  int kernel_dim = 0;
  while (kernel_dim < d && eig(kernel_dim) <= kGapTol) ++kernel_dim;

  Promotion out;
  const Eigen::MatrixXcd kernel = solver.eigenvectors().leftCols(kernel_dim);
  // The threshold kernel must consist of genuinely invariant vectors.
  const Eigen::MatrixXcd p = kernel * kernel.adjoint();
  for (const Eigen::MatrixXcd& u : rep.images)
    if ((u * p - p).norm() > kInvarianceTol)
      throw NoSpectralGap(
          "promote_almost_invariant: almost-invariant vectors below the gap floor");

  out.projected = p * xi;
  out.distance = (xi - out.projected).norm();
  for (const Eigen::MatrixXcd& u : rep.images)
    out.max_defect = std::max(out.max_defect, (u * xi - xi).norm());

  if (kernel_dim == d) {
    out.gap = std::numeric_limits<double>::infinity();
    out.kappa = 0.0;
  } else {
    out.gap = eig(kernel_dim);
    out.kappa = std::sqrt(static_cast<double>(rep.group.size()) / out.gap);
  }
  out.holds = out.distance <= out.kappa * out.max_defect + kDerivedTol;
  return out;
}

}  // namespace soficlab
