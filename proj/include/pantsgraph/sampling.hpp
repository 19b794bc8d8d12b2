#pragma once

#include <cstdint>
#include <random>

#include "pantsgraph/decomposition.hpp"

namespace pg {

// Seeded generator of move-generated decompositions.
class Sampler {
 public:
  Sampler(const SurfaceModel& model, std::uint64_t seed) : model_(model), rng_(seed) {}

  int uniform(int lo, int hi);  // inclusive
  bool coin(double p = 0.5);

  // Random unit moves at indices ≤ max_index, height budget 2.
  PantsDecomposition walk(PantsDecomposition x, int moves, int max_index);
  PantsDecomposition decomposition(int moves, int max_index, bool vary_tail = false);
  // One random unit move at an index in [lo, hi], or x when none applies.
  PantsDecomposition neighbor(const PantsDecomposition& x, int lo, int hi);

  std::mt19937_64& rng() { return rng_; }

 private:
  const SurfaceModel& model_;
  std::mt19937_64 rng_;
};

}  // namespace pg
