// SPDX-License-Identifier: Apache-2.0

#ifndef TOOLMOL_RANDOM_HPP
#define TOOLMOL_RANDOM_HPP

#include <cassert>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "toolmol/hash.hpp"

namespace toolmol {

// mt19937_64 with portable draw helpers. The <random> distributions are
// implementation-defined, so everything that must replay byte-identically
// goes through these.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1).
  double uniform() { return unitInterval(engine_()); }

  // Uniform integer in [0, n). n must be > 0.
  std::size_t index(std::size_t n) {
    assert(n > 0);
    return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
  }

  bool chance(double p) { return uniform() < p; }

  // Weighted pick by cumulative scan; weights need not be normalized.
  std::size_t weightedIndex(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    assert(total > 0.0);
    double r = uniform() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i];
      if (r < acc) return i;
    }
    return weights.size() - 1;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace toolmol

#endif
