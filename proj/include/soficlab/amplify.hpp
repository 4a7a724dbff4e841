#ifndef SOFICLAB_AMPLIFY_HPP
#define SOFICLAB_AMPLIFY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "soficlab/action_model.hpp"
#include "soficlab/group_table.hpp"

namespace soficlab {

// Homomorphism onto an explicit finite group, given on the marked generators
// and extended multiplicatively to words, together with the window on which
// injectivity is intended.
struct FiniteQuotient {
  GroupTable table;
  std::map<std::string, int> rho;  // generator symbol -> element
  std::vector<Word> window;

  int rho_of(const Word& w, const MarkedGroup& group) const;
};

// Left-regular action of the group on itself: one generator per element,
// named g0..g{k-1}; every non-identity element is fixed-point-free.
ActionModel left_regular(const GroupTable& table);
Permutation left_regular_perm(const GroupTable& table, int element);

struct AmplifyReport {
  // Window words sent to the identity by rho: the full-length conclusion is
  // vacuous for them.
  std::vector<std::string> rho_trivial;
  // Distinct window words with equal rho-image (injectivity warning).
  std::vector<std::pair<std::string, std::string>> rho_collisions;
};

struct AmplifyResult {
  ActionModel theta;  // on X x H, pair (x,h) encoded as x*|H| + h
  AmplifyReport report;
};

// Product with the left-regular action of the quotient: theta(g)(x,h) =
// (alpha(g)x, rho(g)h). Multiplicativity defects match alpha exactly, the
// coordinate projection intertwines the two models, and every window word
// with nontrivial rho-image moves every point.
AmplifyResult amplify(const ActionModel& alpha, const FiniteQuotient& quotient,
                      long long cap = kDefaultSizeCap);

// On-demand product evaluation for instances past the materialization cap.
struct ProductView {
  const ActionModel* alpha = nullptr;
  const FiniteQuotient* quotient = nullptr;

  // Image of (x, h) under the product action of the window word w.
  std::pair<int, int> apply(const Word& w, int x, int h) const;
};

}  // namespace soficlab

#endif
