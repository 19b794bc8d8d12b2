#pragma once

// Test-side generators and chart arithmetic. Deliberately independent of the library's sampler,
// move enumeration and window code.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

#include "pantsgraph/decomposition.hpp"

namespace gen {

// splitmix64
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int range(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin(int percent = 50) { return range(0, 99) < percent; }
};

inline bool torus_index(int j) { return j == 0 || j % 3 == 2; }

// Pants cells on either side of base curve j, from the chain-with-handles layout.
inline std::set<int> window_pants(int j) {
  if (j == 0) return {0};
  if (j == 1) return {0, 1};
  int k = (j - 2) / 3;
  switch ((j - 2) % 3) {
    case 0: return {2 * k + 2};
    case 1: return {2 * k + 1, 2 * k + 2};
    default: return {2 * k + 1, 2 * k + 3};
  }
}

inline bool windows_meet(int j, int k) {
  auto a = window_pants(j), b = window_pants(k);
  return std::any_of(a.begin(), a.end(), [&](int p) { return b.count(p) > 0; });
}

inline int boundary_index(int shell, int n) { return 3 * shell * (n + 1) + 1; }

// S_n holds pants 0 .. 2 * shell * (n + 1).
inline int level_of_pants(int shell, int p) {
  int n = 0;
  while (p > 2 * shell * (n + 1)) ++n;
  return n;
}

inline int level_of_window(int shell, int j) {
  int n = 0;
  for (int p : window_pants(j)) n = std::max(n, level_of_pants(shell, p));
  return n;
}

inline long long det(pg::LocalSlope a, pg::LocalSlope b) { return a.p * b.q - a.q * b.p; }

inline std::vector<pg::LocalSlope> slopes(long long height) {
  std::vector<pg::LocalSlope> out;
  for (long long p = 0; p <= height; ++p)
    for (long long q = -height; q <= height; ++q) {
      if (p == 0 && q != 1) continue;
      if (std::gcd(p, std::llabs(q)) != 1) continue;
      out.push_back({p, q});
    }
  return out;
}

inline std::vector<pg::LocalSlope> farey_neighbours(pg::LocalSlope s, long long height) {
  std::vector<pg::LocalSlope> out;
  for (auto t : slopes(height))
    if (std::llabs(det(s, t)) == 1) out.push_back(t);
  return out;
}

inline bool free_window(const pg::PantsDecomposition& x, int j) {
  for (int k = std::max(0, j - 6); k <= j + 6; ++k)
    if (k != j && windows_meet(j, k) && !x.at(k).is_base()) return false;
  return true;
}

// One unit move at a random index in [lo, hi]; x itself when the draw lands on a blocked window.
inline pg::PantsDecomposition step(const pg::SurfaceModel& m, Rng& r, const pg::PantsDecomposition& x, int lo, int hi,
                                   long long height = 2) {
  int j = r.range(lo, hi);
  if (!free_window(x, j)) return x;
  auto nb = farey_neighbours(x.at(j), height);
  if (nb.empty()) return x;
  return x.with(m, j, nb[static_cast<std::size_t>(r.range(0, static_cast<int>(nb.size()) - 1))]);
}

inline pg::PantsDecomposition walk(const pg::SurfaceModel& m, Rng& r, pg::PantsDecomposition x, int moves, int hi) {
  for (int s = 0; s < moves; ++s) x = step(m, r, x, 0, hi);
  return x;
}

inline pg::PantsDecomposition tail(Rng& r) {
  static const char* names[] = {"base", "torus1", "torus-inf", "mixed"};
  return pg::PantsDecomposition::of_tail(pg::TailPattern::named(names[r.range(0, 3)]));
}

}  // namespace gen
