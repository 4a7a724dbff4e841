#include "soficlab/measure_uniformize.hpp"

#include <algorithm>
#include <numeric>

#include "soficlab/errors.hpp"

namespace soficlab {

ProbMeasure::ProbMeasure(std::vector<Rational> w) : weights(std::move(w)) {
  if (weights.empty()) throw Error("ProbMeasure: empty");
  Rational total(0);
  for (const Rational& x : weights) {
    if (x.sign() < 0) throw Error("ProbMeasure: negative weight");
    total += x;
  }
  if (total != Rational(1)) throw Error("ProbMeasure: total mass " + total.str() + " != 1");
}

ProbMeasure ProbMeasure::uniform(int n) {
  return ProbMeasure(std::vector<Rational>(n, Rational(1, n)));
}

Rational tv_distance(const ProbMeasure& a, const ProbMeasure& b) {
  if (a.size() != b.size())
    throw SizeMismatch("tv_distance: sizes " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()));
  Rational sum(0);
  for (int x = 0; x < a.size(); ++x) sum += (a[x] - b[x]).abs();
  return sum / Rational(2);
}

Rational measure_of(const ProbMeasure& mu, const std::vector<int>& subset) {
  Rational sum(0);
  for (int x : subset) sum += mu[x];
  return sum;
}

ProbMeasure pushforward(const ProbMeasure& mu, const Permutation& sigma) {
  if (sigma.size() != mu.size()) throw SizeMismatch("pushforward: size mismatch");
  std::vector<Rational> out(mu.size());
  for (int x = 0; x < mu.size(); ++x) out[sigma(x)] = mu[x];
  return ProbMeasure(std::move(out));
}

Rational measured_distance(const ProbMeasure& mu, const Permutation& a,
                           const Permutation& b) {
  if (a.size() != mu.size() || b.size() != mu.size())
    throw SizeMismatch("measured_distance: size mismatch");
  Rational sum(0);
  for (int x = 0; x < mu.size(); ++x)
    if (a(x) != b(x)) sum += mu[x];
  return sum;
}

int FiberedSet::base_of(long long y) const {
  // fiber_start is nondecreasing; find the fiber containing y.
  auto it = std::upper_bound(fiber_start.begin(), fiber_start.end(), y);
  return static_cast<int>(it - fiber_start.begin()) - 1;
}

long long FiberedSet::fiber_index(long long y) const {
  return y - fiber_start[base_of(y)];
}

ProbMeasure FiberedSet::discretized() const {
  std::vector<Rational> w;
  w.reserve(fiber_size.size());
  for (long long m : fiber_size) w.emplace_back(m, total);
  return ProbMeasure(std::move(w));
}

FiberedSet discretize_measure(const ProbMeasure& mu, long long N) {
  if (N < 1) throw Error("discretize_measure: N must be >= 1");
  const int n = mu.size();
  std::vector<long long> m(n);
  std::vector<Rational> remainder(n);
  long long assigned = 0;
  for (int x = 0; x < n; ++x) {
    // floor(mu(x) * N)
    Rational scaled = mu[x] * Rational(N);
    m[x] = scaled.num() / scaled.den();
    remainder[x] = scaled - Rational(m[x]);
    assigned += m[x];
  }
  long long leftover = N - assigned;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return remainder[a] > remainder[b];  // stable: ties by lowest index
  });
  for (long long i = 0; i < leftover; ++i) ++m[order[static_cast<size_t>(i)]];

  FiberedSet fs;
  fs.base_size = n;
  fs.total = N;
  fs.fiber_size = std::move(m);
  fs.fiber_start.resize(n);
  long long off = 0;
  for (int x = 0; x < n; ++x) {
    fs.fiber_start[x] = off;
    off += fs.fiber_size[x];
  }
  return fs;
}

void MeasuredAlmostAction::validate() const {
  if (symbols.empty()) throw Error("MeasuredAlmostAction: empty window");
  for (const std::string& s : symbols) {
    auto it = perms.find(s);
    if (it == perms.end())
      throw WindowNotComposable("window symbol '" + s + "' has no permutation");
    if (it->second.size() != mu.size())
      throw SizeMismatch("MeasuredAlmostAction: permutation size mismatch for '" + s + "'");
  }
  for (const auto& t : products)
    for (const std::string& s : t)
      if (std::find(symbols.begin(), symbols.end(), s) == symbols.end())
        throw WindowNotComposable("product references '" + s + "' outside the window");
}

const Permutation& MeasuredAlmostAction::perm(const std::string& sym) const {
  auto it = perms.find(sym);
  if (it == perms.end()) throw WindowNotComposable("no permutation for '" + sym + "'");
  return it->second;
}

Rational measured_epsilon(const MeasuredAlmostAction& action) {
  action.validate();
  Rational eps(0);
  for (const auto& t : action.products) {
    Rational defect =
        measured_distance(action.mu, action.perm(t[2]), action.perm(t[0]).compose(action.perm(t[1])));
    if (defect > eps) eps = defect;
  }
  for (const std::string& s : action.symbols) {
    Rational tv = tv_distance(pushforward(action.mu, action.perm(s)), action.mu);
    if (tv > eps) eps = tv;
  }
  return eps;
}

namespace {

// Lift of one base permutation: fiber-preserving on the overlap, remaining
// slots matched in lexicographic (base, fiber) order on both sides.
Permutation lift_permutation(const FiberedSet& fs, const Permutation& sigma) {
  std::vector<int> im(static_cast<size_t>(fs.total), -1);
  std::vector<char> taken(static_cast<size_t>(fs.total), 0);
  for (int x = 0; x < fs.base_size; ++x) {
    int y = sigma(x);
    long long r = std::min(fs.fiber_size[x], fs.fiber_size[y]);
    for (long long i = 0; i < r; ++i) {
      long long from = fs.index_of(x, i), to = fs.index_of(y, i);
      im[static_cast<size_t>(from)] = static_cast<int>(to);
      taken[static_cast<size_t>(to)] = 1;
    }
  }
  std::vector<long long> free_targets;
  for (long long y = 0; y < fs.total; ++y)
    if (!taken[static_cast<size_t>(y)]) free_targets.push_back(y);
  size_t next = 0;
  for (long long y = 0; y < fs.total; ++y)
    if (im[static_cast<size_t>(y)] < 0) im[static_cast<size_t>(y)] = static_cast<int>(free_targets[next++]);
  return Permutation(std::vector<int>(im.begin(), im.end()));
}

}  // namespace

UniformizeResult uniformize(const MeasuredAlmostAction& action, long long N, long long cap) {
  action.validate();
  if (N < 1) throw Error("uniformize: N must be >= 1");
  if (N > cap) throw TooLarge("uniformize: N exceeds size cap");
  const int nx = action.mu.size();

  UniformizeResult res;
  res.fibers = discretize_measure(action.mu, N);
  const FiberedSet& fs = res.fibers;

  UniformizeReport& rep = res.report;
  rep.N = N;
  rep.small_N_warning = N < nx;
  rep.epsilon = measured_epsilon(action);
  rep.tv_discretization = tv_distance(fs.discretized(), action.mu);
  rep.tv_bound = Rational(nx, 2 * N);
  rep.tv_holds = rep.tv_discretization <= rep.tv_bound;

  for (const std::string& s : action.symbols)
    res.lifted.emplace(s, lift_permutation(fs, action.perm(s)));

  const Rational bound_g = Rational(N) * rep.epsilon + Rational(nx);
  for (const std::string& s : action.symbols) {
    const Permutation& base = action.perm(s);
    const Permutation& lift = res.lifted.at(s);
    UniformizeRowG row;
    row.symbol = s;
    for (long long y = 0; y < fs.total; ++y)
      if (fs.base_of(lift(static_cast<int>(y))) != base(fs.base_of(y))) ++row.mismatches;
    row.bound = bound_g;
    row.holds = Rational(row.mismatches) <= bound_g;
    rep.per_symbol.push_back(std::move(row));
  }

  const Rational bound_pair = Rational(4) * rep.epsilon + Rational(4 * nx, N);
  for (const auto& t : action.products) {
    UniformizeRowPair row;
    row.g = t[0];
    row.h = t[1];
    row.gh = t[2];
    Permutation combined = res.lifted.at(t[0]).compose(res.lifted.at(t[1]));
    row.defect = hamming_distance(res.lifted.at(t[2]), combined);
    row.bound = bound_pair;
    row.holds = row.defect <= bound_pair;
    rep.per_pair.push_back(std::move(row));
  }

  rep.all_hold = rep.tv_holds;
  for (const auto& r : rep.per_symbol) rep.all_hold = rep.all_hold && r.holds;
  for (const auto& r : rep.per_pair) rep.all_hold = rep.all_hold && r.holds;
  return res;
}

MeasuredAlmostAction product_power(const MeasuredAlmostAction& action, int k, long long cap) {
  action.validate();
  if (k < 1) throw Error("product_power: k must be >= 1");
  if (k == 1) return action;
  const int n = action.mu.size();
  const long long total = checked_pow(n, k, cap);

  MeasuredAlmostAction out;
  out.symbols = action.symbols;
  out.products = action.products;

  std::vector<Rational> w(static_cast<size_t>(total), Rational(1));
  for (long long v = 0; v < total; ++v) {
    long long rest = v;
    for (int j = 0; j < k; ++j) {
      w[static_cast<size_t>(v)] *= action.mu[static_cast<int>(rest % n)];
      rest /= n;
    }
  }
  out.mu = ProbMeasure(std::move(w));
  for (const auto& [sym, p] : action.perms)
    out.perms.emplace(sym, diagonal_power(p, k, cap));
  return out;
}

}  // namespace soficlab
