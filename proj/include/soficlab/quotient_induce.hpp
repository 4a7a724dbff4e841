#ifndef SOFICLAB_QUOTIENT_INDUCE_HPP
#define SOFICLAB_QUOTIENT_INDUCE_HPP

#include <string>
#include <utility>
#include <vector>

#include "soficlab/action_model.hpp"
#include "soficlab/group_table.hpp"
#include "soficlab/measure_uniformize.hpp"
#include "soficlab/schreier.hpp"

namespace soficlab {

// Action transported to the space of N-components, carrying the component
// weights and, per symbol, the components on which the transported image is
// certified (everything, for a genuine quotient; the majority-threshold
// survivors, for a measured one).
struct InducedModel {
  ComponentDecomposition decomposition;  // of the underlying N-Schreier graph
  MarkedGroup symbols;
  std::vector<Permutation> images;            // on component ids
  std::vector<std::vector<int>> good;         // per symbol, component ids
  std::vector<Rational> good_weight;          // per symbol

  int count() const { return decomposition.count(); }
  const Permutation& image_of(const std::string& sym) const {
    return images[symbols.index(sym)];
  }
};

// Quotient of a genuine action by the normal subgroup generated by nspec:
// components of the N-Schreier graph become points and every generator must
// map components onto components (NotWellDefined otherwise). Every word in
// the nspec generators acts as the identity downstairs.
InducedModel orbit_space_action(const ActionModel& model, const NormalSubgroupSpec& nspec);

struct SingletonMatch {
  Rational discrepancy;               // max over shared symbols
  std::vector<Rational> per_symbol;   // aligned with q_model generators
  Rational singleton_fraction;        // embedded points with singleton N-orbit
};

// Transports the induced action back through the identification of singleton
// N-orbits with their unique elements and measures the per-symbol Hamming
// distance to the given model; points without a singleton match count as
// disagreements.
SingletonMatch singleton_match(const ActionModel& q_model, const InducedModel& induced,
                               const std::vector<int>& embedding);

// B(g) = union over s of the points where sigma(g) sigma(s) and
// sigma(g s g^{-1}) sigma(g) disagree; empty for a genuine action.
std::vector<int> conjugacy_defect(const ActionModel& model, const Word& g,
                                  const NormalSubgroupSpec& nspec);

struct MajorityMap {
  Permutation map;                 // completed to a permutation of components
  std::vector<int> targets;        // argmax component per source (ties: lowest id)
  std::vector<Rational> overlap;   // alpha_C(D_C) per source component
  std::vector<int> good;           // components with overlap >= 1 - eta
  Rational good_weight;
};

// For each component C, the component receiving the largest share of
// sigma(g)C. Good sources are matched to their targets greedily in id order;
// everything left is completed in id order.
MajorityMap majority_component_map(const ActionModel& model,
                                   const ComponentDecomposition& decomp, const Word& g,
                                   const Rational& eta);

struct SymbolDefect {
  std::string symbol;
  long long defect_size = 0;      // |B(g)|
  Rational beta;                  // |B(g)| / |V|
  Rational eta_measured;          // max component overlap deficiency 1 - alpha
  Rational bad_weight;            // weight of components with defect share > sqrt(beta)
  bool markov_holds = false;      // bad_weight <= sqrt(beta), decided by squaring
  Rational tv_defect;             // ||sigma_bar_* mu - mu||_TV
  Rational good_weight;
};

struct PairDefect {
  std::string q1, q2, q12;
  Rational defect;  // d_mu(sigma_bar(q1 q2), sigma_bar(q1) sigma_bar(q2))
};

struct DefectReport {
  std::vector<SymbolDefect> per_symbol;
  std::vector<PairDefect> per_pair;
};

struct MeasuredQuotient {
  InducedModel induced;
  MeasuredAlmostAction action;  // ready for uniformize / product_power
  DefectReport report;
};

// Full measured quotient pipeline stage: lifts give, per window word of Q
// (symbols are word texts over q_group), a lifting word of the model's
// group. Composable pairs are those whose reduced concatenation is again a
// window symbol.
MeasuredQuotient measured_quotient_model(const ActionModel& model,
                                         const NormalSubgroupSpec& nspec,
                                         const std::vector<std::pair<std::string, Word>>& lifts,
                                         const MarkedGroup& q_group, const Rational& eta);

struct BernoulliModel {
  ActionModel model;           // on {0,1}^Q, one generator per group element
  std::vector<int> marked;     // A = {x : x(e) = 1}
  GroupTable table;

  std::string symbol_of(int element) const { return "q" + std::to_string(element); }
};

// Shift action of Q on {0,1}^Q: (q.x)(h) = x(q^{-1} h); vertex v has bit h
// equal to (v >> h) & 1. For every q != e, exactly a quarter of the vertices
// lie in A and leave it under q.
BernoulliModel bernoulli_model(const GroupTable& q, int max_order = 20);

// |A cap sigma(q)^{-1}(A^c)| / 2^|Q| for one element, exact.
Rational bernoulli_statistic(const BernoulliModel& b, int element);

}  // namespace soficlab

#endif
