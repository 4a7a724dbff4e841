#ifndef SOFICLAB_MEASURE_UNIFORMIZE_HPP
#define SOFICLAB_MEASURE_UNIFORMIZE_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "soficlab/action_model.hpp"
#include "soficlab/permutation.hpp"
#include "soficlab/rational.hpp"

namespace soficlab {

// Rational probability vector on a finite set.
struct ProbMeasure {
  std::vector<Rational> weights;

  ProbMeasure() = default;
  explicit ProbMeasure(std::vector<Rational> w);

  int size() const { return static_cast<int>(weights.size()); }
  const Rational& operator[](int x) const { return weights[x]; }

  static ProbMeasure uniform(int n);
};

// Half the l1 distance; equals the maximal discrepancy over events.
Rational tv_distance(const ProbMeasure& a, const ProbMeasure& b);

Rational measure_of(const ProbMeasure& mu, const std::vector<int>& subset);

// mu weighted by where a permutation sends mass: (sigma_* mu)(y) = mu(sigma^{-1} y).
ProbMeasure pushforward(const ProbMeasure& mu, const Permutation& sigma);

// mu{x : a(x) != b(x)}.
Rational measured_distance(const ProbMeasure& mu, const Permutation& a, const Permutation& b);

// Disjoint union of fibers over a base set; the lift target of uniformize.
struct FiberedSet {
  int base_size = 0;
  long long total = 0;
  std::vector<long long> fiber_size;   // m_x per base point
  std::vector<long long> fiber_start;  // prefix offsets

  int base_of(long long y) const;            // p(x, i) = x
  long long fiber_index(long long y) const;  // i within the fiber
  long long index_of(int x, long long i) const { return fiber_start[x] + i; }
  ProbMeasure discretized() const;  // mu_N(x) = m_x / N
};

// Largest-remainder apportionment of mu into N integer fiber sizes, ties by
// lowest index: sum m_x = N and |mu(x) - m_x/N| <= 1/N for every x, hence
// ||mu_N - mu||_TV <= |X|/(2N).
FiberedSet discretize_measure(const ProbMeasure& mu, long long N);

// Permutation window on a finite probability space, with the composable
// pairs declared explicitly: products[(g,h)] = gh, all three in the window.
struct MeasuredAlmostAction {
  ProbMeasure mu;
  std::vector<std::string> symbols;
  std::map<std::string, Permutation> perms;
  std::vector<std::array<std::string, 3>> products;

  void validate() const;  // WindowNotComposable on undeclared symbols
  const Permutation& perm(const std::string& sym) const;
};

// Max over declared multiplicativity defects in d_mu and pushforward TV
// defects; measured from the instance, never asserted.
Rational measured_epsilon(const MeasuredAlmostAction& action);

struct UniformizeRowG {
  std::string symbol;
  long long mismatches = 0;  // |{y : p(lift(g) y) != g(p(y))}|
  Rational bound;            // N*eps + |X|
  bool holds = false;
};

struct UniformizeRowPair {
  std::string g, h, gh;
  Rational defect;  // uniform Hamming defect on the lifted set
  Rational bound;   // 4 eps + 4|X|/N
  bool holds = false;
};

struct UniformizeReport {
  Rational epsilon;
  long long N = 0;
  bool small_N_warning = false;  // N < |X|: bounds still measured, just weak
  Rational tv_discretization;    // ||mu_N - mu||_TV
  Rational tv_bound;             // |X| / (2N)
  bool tv_holds = false;
  std::vector<UniformizeRowG> per_symbol;
  std::vector<UniformizeRowPair> per_pair;
  bool all_hold = false;
};

struct UniformizeResult {
  FiberedSet fibers;
  std::map<std::string, Permutation> lifted;
  UniformizeReport report;
};

// Blows a measured almost-action up to a uniform-measure almost-action on N
// points. Fibers are mapped index-preservingly as far as they overlap and the
// remainder is matched in lexicographic order, so reruns are bit-identical.
UniformizeResult uniformize(const MeasuredAlmostAction& action, long long N,
                            long long cap = kDefaultSizeCap);

// Diagonal k-fold product with the product measure. Moved mass per symbol
// becomes 1 - (1 - moved)^k; declared products carry over.
MeasuredAlmostAction product_power(const MeasuredAlmostAction& action, int k,
                                   long long cap = kDefaultSizeCap);

}  // namespace soficlab

#endif
