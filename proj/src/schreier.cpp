#include "soficlab/schreier.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <limits>
#include <numeric>

#include "soficlab/errors.hpp"

namespace soficlab {

SchreierGraph build_schreier(const ActionModel& model,
                             const std::vector<std::string>& labels) {
  if (labels.empty()) throw Error("build_schreier: empty label set");
  SchreierGraph g;
  g.n = model.n;
  for (const std::string& name : labels) {
    g.labels.push_back(name);
    g.perms.push_back(model.gen_image(name));
  }
  return g;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n, -1) {}
  int root(int x) {
    while (parent[x] >= 0) {
      if (parent[parent[x]] >= 0) parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void merge(int a, int b) {
    a = root(a);
    b = root(b);
    if (a == b) return;
    if (parent[a] > parent[b]) std::swap(a, b);
    parent[a] += parent[b];
    parent[b] = a;
  }
};

}  // namespace

ComponentDecomposition components(const SchreierGraph& graph) {
  UnionFind uf(graph.n);
  for (const Permutation& p : graph.perms)
    for (int x = 0; x < graph.n; ++x) uf.merge(x, p(x));

  ComponentDecomposition d;
  d.n = graph.n;
  d.comp_of.assign(graph.n, -1);
  for (int x = 0; x < graph.n; ++x) {
    int r = uf.root(x);
    if (d.comp_of[r] < 0) {
      d.comp_of[r] = d.count();
      d.members.emplace_back();
    }
    d.comp_of[x] = d.comp_of[r];
    d.members[d.comp_of[x]].push_back(x);
  }
  for (const auto& m : d.members)
    d.weights.emplace_back(static_cast<long long>(m.size()), graph.n);
  return d;
}

long long edge_boundary(const SchreierGraph& graph, const std::vector<char>& in_subset) {
  long long b = 0;
  for (const Permutation& p : graph.perms)
    for (int x = 0; x < graph.n; ++x)
      if (in_subset[x] != in_subset[p(x)]) ++b;
  return b;
}

double CheegerResult::value_lower_bound() const {
  if (infinite) return std::numeric_limits<double>::infinity();
  return method == Method::Exact ? value.to_double() : spectral_value;
}

double CheegerResult::raw_lower_bound(int degree) const {
  if (infinite) return std::numeric_limits<double>::infinity();
  return method == Method::Exact ? raw_ratio.to_double() : degree * spectral_value;
}

namespace {

CheegerResult cheeger_exact(const SchreierGraph& graph, const std::vector<int>& comp) {
  const int c = static_cast<int>(comp.size());
  const int nlabels = static_cast<int>(graph.labels.size());
  std::vector<std::vector<int>> fwd(nlabels), inv(nlabels);
  for (int l = 0; l < nlabels; ++l) {
    fwd[l] = graph.perms[l].images();
    inv[l] = graph.perms[l].inverse().images();
  }

  std::vector<char> in(graph.n, 0);
  in[comp[0]] = 1;
  long long boundary = 0;
  for (int l = 0; l < nlabels; ++l) {
    int v = comp[0];
    if (fwd[l][v] != v) ++boundary;          // record (v, g(v))
    if (inv[l][v] != v) ++boundary;          // record (g^{-1}(v), v)
  }

  auto toggle = [&](int v) {
    for (int l = 0; l < nlabels; ++l) {
      int w = fwd[l][v];
      if (w != v) boundary += (in[v] == in[w]) ? 1 : -1;  // record (v,w) flips
      int u = inv[l][v];
      if (u != v) boundary += (in[v] == in[u]) ? 1 : -1;  // record (u,v) flips
    }
    in[v] = !in[v];
  };

  long long best_num = -1, best_den = 1;
  std::uint64_t best_mask = 0;
  long long size = 1;
  const std::uint64_t total = std::uint64_t{1} << (c - 1);
  std::uint64_t mask = 0;  // over comp[1..c-1]
  for (std::uint64_t i = 0;; ++i) {
    if (size < c) {
      long long small = std::min(size, static_cast<long long>(c) - size);
      // boundary/small < best  <=>  boundary*best_den < best_num*small
      if (best_num < 0 || boundary * best_den < best_num * small) {
        best_num = boundary;
        best_den = small;
        best_mask = mask;
      }
    }
    if (i + 1 >= total) break;
    int flip_bit = __builtin_ctzll(i + 1);
    std::uint64_t bit = std::uint64_t{1} << flip_bit;
    int v = comp[flip_bit + 1];
    size += (mask & bit) ? -1 : 1;
    mask ^= bit;
    toggle(v);
  }

  CheegerResult r;
  r.method = CheegerResult::Method::Exact;
  r.raw_ratio = Rational(best_num, best_den);
  r.value = r.raw_ratio / Rational(graph.degree());
  // Reconstruct the small side of the best cut.
  std::vector<int> side{comp[0]};
  for (int j = 1; j < c; ++j)
    if (best_mask & (std::uint64_t{1} << (j - 1))) side.push_back(comp[j]);
  if (2 * static_cast<long long>(side.size()) > c) {
    std::vector<int> other;
    std::vector<char> chosen(graph.n, 0);
    for (int v : side) chosen[v] = 1;
    for (int v : comp)
      if (!chosen[v]) other.push_back(v);
    side = std::move(other);
  }
  r.witness = std::move(side);
  return r;
}

Eigen::MatrixXd normalized_laplacian(const SchreierGraph& graph, const std::vector<int>& comp) {
  const int c = static_cast<int>(comp.size());
  std::vector<int> local(graph.n, -1);
  for (int i = 0; i < c; ++i) local[comp[i]] = i;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(c, c);
  for (const Permutation& p : graph.perms) {
    for (int i = 0; i < c; ++i) {
      int v = comp[i];
      a(i, local[p(v)]) += 1.0;
      a(local[p(v)], i) += 1.0;
    }
  }
  Eigen::MatrixXd l = Eigen::MatrixXd::Identity(c, c) - a / graph.degree();
  return l;
}

}  // namespace

double component_lambda2(const SchreierGraph& graph, const ComponentDecomposition& decomp,
                         int comp) {
  const auto& members = decomp.members.at(comp);
  if (members.size() < 2)
    throw Error("component_lambda2: component has fewer than 2 vertices");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(normalized_laplacian(graph, members));
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("eigenvalue solver did not converge");
  double l2 = solver.eigenvalues()(1);
  return l2 < 0 ? 0.0 : l2;
}

CheegerResult cheeger(const SchreierGraph& graph, const ComponentDecomposition& decomp,
                      int comp, const CheegerOptions& opts) {
  if (comp < 0 || comp >= decomp.count()) throw Error("cheeger: no such component");
  const auto& members = decomp.members[comp];
  if (members.size() == 1) {
    CheegerResult r;
    r.method = CheegerResult::Method::Exact;
    r.infinite = true;
    return r;
  }
  if (static_cast<int>(members.size()) <= opts.exact_cap && members.size() <= 62)
    return cheeger_exact(graph, members);
  CheegerResult r;
  r.method = CheegerResult::Method::SpectralLowerBound;
  r.lambda2 = component_lambda2(graph, decomp, comp);
  r.spectral_value = r.lambda2 / 2.0;
  return r;
}

AuditReport expander_audit(const SchreierGraph& graph, const Rational& eps,
                           const Rational& budget, const CheegerOptions& opts) {
  if (eps.sign() <= 0) throw Error("expander_audit: eps must be positive");
  if (budget.sign() < 0 || budget >= Rational(1))
    throw Error("expander_audit: removal budget must lie in [0,1)");
  ComponentDecomposition decomp = components(graph);
  AuditReport report;
  report.epsilon = eps;
  report.budget = budget;
  report.bad_weight = Rational(0);
  for (int c = 0; c < decomp.count(); ++c) {
    ComponentAudit audit;
    audit.id = c;
    audit.size = static_cast<int>(decomp.members[c].size());
    audit.weight = decomp.weights[c];
    audit.h = cheeger(graph, decomp, c, opts);
    if (audit.h.infinite)
      audit.good = true;
    else if (audit.h.method == CheegerResult::Method::Exact)
      audit.good = audit.h.value >= eps;
    else
      audit.good = audit.h.spectral_value >= eps.to_double();
    if (!audit.good) {
      report.bad_weight += audit.weight;
      for (int v : decomp.members[c]) report.removed.push_back(v);
    }
    report.per_component.push_back(std::move(audit));
  }
  std::sort(report.removed.begin(), report.removed.end());
  report.pass = report.bad_weight <= budget;
  return report;
}

std::vector<int> majority_round(const std::vector<int>& subset,
                                const ComponentDecomposition& decomp) {
  std::vector<char> in(decomp.n, 0);
  for (int v : subset) {
    if (v < 0 || v >= decomp.n) throw Error("majority_round: vertex out of range");
    in[v] = 1;
  }
  std::vector<int> out;
  for (int c = 0; c < decomp.count(); ++c) {
    long long inside = 0;
    for (int v : decomp.members[c]) inside += in[v];
    if (2 * inside >= static_cast<long long>(decomp.members[c].size()))
      out.insert(out.end(), decomp.members[c].begin(), decomp.members[c].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

MajorityRoundCertificate majority_round_certify(const SchreierGraph& graph,
                                                const std::vector<int>& subset,
                                                const ComponentDecomposition& decomp,
                                                const CheegerOptions& opts) {
  MajorityRoundCertificate cert;
  cert.rounded = majority_round(subset, decomp);

  std::vector<char> in(decomp.n, 0);
  for (int v : subset) in[v] = 1;
  long long sym = 0;
  for (int c = 0; c < decomp.count(); ++c) {
    long long inside = 0;
    for (int v : decomp.members[c]) inside += in[v];
    sym += std::min(inside, static_cast<long long>(decomp.members[c].size()) - inside);
  }
  cert.sym_diff = Rational(sym, decomp.n);
  cert.boundary_delta = Rational(edge_boundary(graph, in), decomp.n);

  bool all_exact = true;
  bool have_rational_min = false;
  Rational raw_min_exact;
  double raw_min = std::numeric_limits<double>::infinity();
  for (int c = 0; c < decomp.count(); ++c) {
    if (decomp.members[c].size() < 2) continue;
    CheegerResult h = cheeger(graph, decomp, c, opts);
    double lb = h.raw_lower_bound(graph.degree());
    if (lb < raw_min) raw_min = lb;
    if (h.method == CheegerResult::Method::Exact) {
      if (!have_rational_min || h.raw_ratio < raw_min_exact) {
        raw_min_exact = h.raw_ratio;
        have_rational_min = true;
      }
    } else {
      all_exact = false;
    }
  }
  cert.cheeger_min = raw_min;
  cert.cheeger_exact = all_exact;
  if (raw_min == std::numeric_limits<double>::infinity()) {
    cert.bound = 0.0;  // only singleton components: rounding is the identity
    cert.holds = cert.sym_diff.is_zero();
  } else if (all_exact) {
    Rational bound = cert.boundary_delta / raw_min_exact;
    cert.bound = bound.to_double();
    cert.holds = cert.sym_diff <= bound;
  } else {
    cert.bound = cert.boundary_delta.to_double() / raw_min;
    cert.holds = cert.sym_diff.to_double() <= cert.bound + 1e-12;
  }
  return cert;
}

}  // namespace soficlab
