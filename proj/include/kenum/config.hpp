#pragma once

// Run configuration and the single seeded randomness source. All evaluation
// points, property-test cases and shuffles flow from one SplitMix64 stream so
// runs are reproducible byte for byte at a fixed seed.

#include "kenum/core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kenum {

class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }
  bool coin() { return next() & 1; }

private:
  uint64_t state_;
};

// Small primes used to build evaluation points whose coordinates are
// distinct prime squares (so every half-integer power is rational and
// coordinates are multiplicatively independent).
const std::vector<int>& small_primes();

// One evaluation point with distinct prime-square coordinates.
EvalPoint random_prime_square_point(const VariableSet& vars, Rng& rng);

struct RunConfig {
  uint64_t seed = 20120;
  int order = 4;              // truncation order for series pipelines
  int cutoff = 6;             // size cutoffs (Fock / plane partitions)
  int trials = 20;            // evaluation points for zero tests
  int threads = 0;            // 0 = library default
  long long clear_budget = 1'000'000;  // term budget before switching to
                                       // multi-point equality
  int eq_points = 12;         // points for multi-point equality (>= 8)
  std::string emit_json;      // output path, empty = stdout only
};

}  // namespace kenum
