#include "pantsgraph/sampling.hpp"

namespace pg {

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

PantsDecomposition Sampler::neighbor(const PantsDecomposition& x, int lo, int hi) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    int j = uniform(lo, hi);
    auto moves = enumerate_moves_at(model_, x, j, 2).moves;
    if (moves.empty()) continue;
    return apply_move(model_, x, moves[static_cast<std::size_t>(uniform(0, static_cast<int>(moves.size()) - 1))]);
  }
  return x;
}

PantsDecomposition Sampler::walk(PantsDecomposition x, int moves, int max_index) {
  for (int s = 0; s < moves; ++s) x = neighbor(x, 0, max_index);
  return x;
}

PantsDecomposition Sampler::decomposition(int moves, int max_index, bool vary_tail) {
  PantsDecomposition x;
  if (vary_tail) {
    auto names = TailPattern::names();
    x = PantsDecomposition::of_tail(TailPattern::named(names[static_cast<std::size_t>(uniform(0, 3))]));
  }
  return walk(x, moves, max_index);
}

}  // namespace pg
