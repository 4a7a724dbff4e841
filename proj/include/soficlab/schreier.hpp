#ifndef SOFICLAB_SCHREIER_HPP
#define SOFICLAB_SCHREIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "soficlab/action_model.hpp"
#include "soficlab/permutation.hpp"
#include "soficlab/rational.hpp"

namespace soficlab {

// Labeled multigraph of an action: one edge {x, g(x)} per chosen label g and
// vertex x. Each label and its inverse contribute one edge-end per vertex, so
// the graph is 2|S|-regular with loops counted twice.
struct SchreierGraph {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<Permutation> perms;

  int degree() const { return 2 * static_cast<int>(labels.size()); }
};

SchreierGraph build_schreier(const ActionModel& model,
                             const std::vector<std::string>& labels);

// Connected components with exact weights |C|/|V|. Component ids are assigned
// in order of least contained vertex.
struct ComponentDecomposition {
  int n = 0;
  std::vector<int> comp_of;                 // vertex -> component id
  std::vector<std::vector<int>> members;    // sorted per component
  std::vector<Rational> weights;

  int count() const { return static_cast<int>(members.size()); }
};

ComponentDecomposition components(const SchreierGraph& graph);

// Edge boundary of a subset: number of labeled edges with exactly one end in
// the subset, i.e. sum over labels g of |gU \triangle U|.
long long edge_boundary(const SchreierGraph& graph, const std::vector<char>& in_subset);

struct CheegerOptions {
  int exact_cap = 20;  // subset enumeration up to 2^(cap-1) cuts
};

// Cheeger data for one component. `value` is the volume-normalized constant
// min |dU| / (2|S| |U|) over subsets with |U| <= |C|/2; `raw_ratio` is the
// unnormalized min |dU|/|U| used in boundary-counting arguments. Spectral
// mode certifies value >= lambda2/2 via the normalized Laplacian
// I - A/(2|S|).
struct CheegerResult {
  enum class Method { Exact, SpectralLowerBound };
  Method method = Method::Exact;
  bool infinite = false;        // singleton component: no admissible cut
  Rational value;               // exact mode
  Rational raw_ratio;           // exact mode
  double spectral_value = 0.0;  // spectral mode: lambda2/2
  double lambda2 = 0.0;         // filled in spectral mode
  std::vector<int> witness;     // exact mode: minimizing subset (small side)

  // Certified lower bound for the normalized constant under either method.
  double value_lower_bound() const;
  // Certified lower bound for the raw ratio (degree * normalized bound).
  double raw_lower_bound(int degree) const;
};

CheegerResult cheeger(const SchreierGraph& graph, const ComponentDecomposition& decomp,
                      int comp, const CheegerOptions& opts = {});

// Second-smallest eigenvalue of the normalized Laplacian on one component.
double component_lambda2(const SchreierGraph& graph, const ComponentDecomposition& decomp,
                         int comp);

struct ComponentAudit {
  int id = 0;
  int size = 0;
  Rational weight;
  CheegerResult h;
  bool good = false;
};

struct AuditReport {
  Rational epsilon;  // unused when epsilon was given as float-only; kept exact
  Rational budget;
  std::vector<ComponentAudit> per_component;
  std::vector<int> removed;  // E = union of bad components
  Rational bad_weight;
  bool pass = false;
};

// Marks each component whose certified Cheeger value reaches eps as good and
// passes when the total weight of bad components fits in the removal budget.
// Removing whole bad components is a sufficient witness, not an equivalence.
AuditReport expander_audit(const SchreierGraph& graph, const Rational& eps,
                           const Rational& budget, const CheegerOptions& opts = {});

// Union of the components where the subset occupies at least half (ties
// round into the set). The symmetric difference to the input is exactly
// sum_C min(|B cap C|, |C \ B|).
std::vector<int> majority_round(const std::vector<int>& subset,
                                const ComponentDecomposition& decomp);

struct MajorityRoundCertificate {
  std::vector<int> rounded;
  Rational sym_diff;        // |B triangle B'| / |V|
  Rational boundary_delta;  // |dB| / |V|
  double cheeger_min;       // min certified raw Cheeger over components >= 2 vertices
  bool cheeger_exact;       // true when every component was decided exactly
  double bound;             // boundary_delta / cheeger_min
  bool holds;               // sym_diff <= bound
};

MajorityRoundCertificate majority_round_certify(const SchreierGraph& graph,
                                                const std::vector<int>& subset,
                                                const ComponentDecomposition& decomp,
                                                const CheegerOptions& opts = {});

}  // namespace soficlab

#endif
