#include "soficlab/permutation.hpp"

#include <algorithm>
#include <string>

#include "soficlab/errors.hpp"

namespace soficlab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n < 1) throw Error("Permutation: empty image array");
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v])
      throw Error("Permutation: image array is not a bijection of {0.." +
                  std::to_string(n - 1) + "}");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::cycle(int n, const std::vector<int>& points) {
  Permutation p = identity(n);
  const int k = static_cast<int>(points.size());
  for (int i = 0; i < k; ++i) p.images_[points[i]] = points[(i + 1) % k];
  return Permutation(std::move(p.images_));  // revalidate
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size())
    throw SizeMismatch("compose: sizes " + std::to_string(size()) + " vs " +
                       std::to_string(other.size()));
  std::vector<int> im(images_.size());
  for (int x = 0; x < size(); ++x) im[x] = images_[other.images_[x]];
  Permutation p = *this;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int x = 0; x < size(); ++x) im[images_[x]] = x;
  Permutation p = *this;
  p.images_ = std::move(im);
  return p;
}

bool Permutation::is_identity() const {
  for (int x = 0; x < size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Rational hamming_length(const Permutation& sigma) {
  long long moved = 0;
  for (int x = 0; x < sigma.size(); ++x)
    if (sigma(x) != x) ++moved;
  return Rational(moved, sigma.size());
}

Rational hamming_distance(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size())
    throw SizeMismatch("hamming_distance: sizes " + std::to_string(sigma.size()) +
                       " vs " + std::to_string(tau.size()));
  return hamming_length(sigma.inverse().compose(tau));
}

std::vector<int> support(const Permutation& sigma) {
  std::vector<int> s;
  for (int x = 0; x < sigma.size(); ++x)
    if (sigma(x) != x) s.push_back(x);
  return s;
}

SupportBound generated_support_bound(const std::vector<Permutation>& gens) {
  if (gens.empty()) throw Error("generated_support_bound: no generators");
  const int n = gens.front().size();
  std::vector<char> in(n, 0);
  for (const Permutation& g : gens) {
    if (g.size() != n) throw SizeMismatch("generated_support_bound: mixed sizes");
    for (int x = 0; x < n; ++x)
      if (g(x) != x) in[x] = 1;
  }
  SupportBound out;
  for (int x = 0; x < n; ++x)
    if (in[x]) out.omega.push_back(x);
  out.bound = Rational(static_cast<long long>(out.omega.size()), n);
  return out;
}

Permutation diagonal_power(const Permutation& sigma, int k, long long cap) {
  if (k < 1) throw Error("diagonal_power: k must be >= 1");
  const long long n = sigma.size();
  const long long total = checked_pow(n, k, cap);
  std::vector<int> im(static_cast<size_t>(total));
  for (long long v = 0; v < total; ++v) {
    long long rest = v, out = 0, weight = 1;
    for (int j = 0; j < k; ++j) {
      out += weight * sigma(static_cast<int>(rest % n));
      rest /= n;
      weight *= n;
    }
    im[static_cast<size_t>(v)] = static_cast<int>(out);
  }
  return Permutation(std::move(im));
}

}  // namespace soficlab
