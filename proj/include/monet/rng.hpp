#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace monet {

/// Stateless 64-bit mixer, used to derive independent sub-seeds
/// (graph construction, per-evaluation rollout seeds) from a run seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seedable random stream with cross-platform-stable output.
///
/// mt19937_64 output is pinned by the C++ standard; the transforms below
/// replace the <random> distributions (whose streams differ between
/// standard libraries). Every draw consumes a fixed number of engine
/// outputs: uniform* one, normal exactly two. Callers that care about
/// reproducibility rely on this fixed consumption order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform index in {0, ..., n-1}. n must be positive.
  std::size_t uniform_index(std::size_t n) {
    using u128 = unsigned __int128;
    return static_cast<std::size_t>((u128(engine_()) * u128(n)) >> 64);
  }

  /// Standard normal via Box-Muller; consumes exactly two engine outputs.
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    return r * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  /// True with probability p.
  bool bernoulli(double p) { return uniform() < p; }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace monet
