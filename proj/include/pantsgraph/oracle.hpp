#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pantsgraph/surface.hpp"

// Brute-force ground truth. Nothing here depends on the curve or decomposition code.
namespace pg::oracle {

// Reduced p/q with q ≥ 0; 1/0 is the slope at infinity.
struct Slope {
  long long p = 0;
  long long q = 1;
  static Slope make(long long p, long long q);
  long long height() const;
  std::string str() const;
  auto operator<=>(const Slope&) const = default;
};

// Intersection count of straight representatives, counted on the torus (or its pillowcase
// quotient) by solving for lattice translates.
long long torus_intersection(Slope a, Slope b);
long long pillowcase_intersection(Slope a, Slope b);
long long intersection(WindowKind kind, Slope a, Slope b);

bool farey_adjacent(Slope a, Slope b);
// Minimal positive intersection in the window: 1 for a torus, 2 for a four-holed sphere.
bool window_adjacent(WindowKind kind, Slope a, Slope b);

std::vector<Slope> slopes_up_to(long long height);

// Exact Farey distance; throws when the recursion exceeds `depth_budget`.
int farey_distance(Slope a, Slope b, int depth_budget = 12);
// Breadth-first distance inside the subgraph of slopes with height ≤ bound; -1 if unreachable.
int bfs_distance(Slope a, Slope b, long long bound);

using Windowed = std::map<int, Slope>;
int product_distance(const Windowed& u, const Windowed& v);

struct ExplicitGraph {
  std::vector<WindowKind> windows;
  std::vector<std::vector<Slope>> vertices;
  std::vector<std::vector<int>> adjacency;
  int index_of(const std::vector<Slope>& v) const;
  int edge_count() const;
  std::vector<int> distances_from(int source) const;
};

// Product of Farey-type graphs over the listed windows, vertices of height ≤ `height`, edges by
// intersection counting.
ExplicitGraph brute_pants_graph(const std::vector<WindowKind>& windows, long long height);
// Same for a chart subsurface whose components are single windows; rejects anything else.
ExplicitGraph brute_pants_graph(const SurfaceModel& model, const Subsurface& sub, long long height);

}  // namespace pg::oracle
