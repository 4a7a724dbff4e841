#ifndef SOFICLAB_PERMUTATION_HPP
#define SOFICLAB_PERMUTATION_HPP

#include <vector>

#include "soficlab/rational.hpp"

namespace soficlab {

// Bijection of {0..n-1}, stored as the image array. Immutable after
// construction; all operations return fresh values.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  // Single cycle (c0 c1 ... ck-1) on n points.
  static Permutation cycle(int n, const std::vector<int>& points);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  // (*this) after other: x -> this(other(x)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

 private:
  std::vector<int> images_;
};

// Normalized Hamming length: fraction of points moved.
Rational hamming_length(const Permutation& sigma);

// Normalized Hamming distance d(sigma, tau) = length(sigma^{-1} tau).
Rational hamming_distance(const Permutation& sigma, const Permutation& tau);

// Moved-point set, sorted.
std::vector<int> support(const Permutation& sigma);

struct SupportBound {
  std::vector<int> omega;  // union of generator supports, sorted
  Rational bound;          // |omega| / n, <= sum of generator lengths
};

// Every word in the generators fixes the complement of omega pointwise, so
// the whole generated subgroup has Hamming length at most |omega|/n.
SupportBound generated_support_bound(const std::vector<Permutation>& gens);

// Diagonal action of sigma on X^k; tuples are encoded least significant
// coordinate first: (x_0..x_{k-1}) -> sum x_j n^j. Throws Overflow when n^k
// exceeds cap.
Permutation diagonal_power(const Permutation& sigma, int k, long long cap);

}  // namespace soficlab

#endif
