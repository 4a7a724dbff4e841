#ifndef SOFICLAB_RNG_HPP
#define SOFICLAB_RNG_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace soficlab {

// Deterministic random source. Bounded draws use rejection sampling instead
// of std::uniform_int_distribution so that streams are identical across
// standard library implementations; reports must be byte-stable under reruns.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t stream)
      : eng_(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1))) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % bound;
  }

  // Uniform in [lo, hi] inclusive.
  long long irange(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i)
      std::swap(p[i], p[static_cast<int>(below(static_cast<std::uint64_t>(i + 1)))]);
    return p;
  }

  // Sorted uniform k-subset of {0..n-1}.
  std::vector<int> subset(int n, int k) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i)
      std::swap(pool[i], pool[i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)))]);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace soficlab

#endif
