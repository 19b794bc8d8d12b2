#include "pantsgraph/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "pantsgraph/rational.hpp"

namespace pg::oracle {

Slope Slope::make(long long p, long long q) {
  if (p == 0 && q == 0) throw std::invalid_argument("0/0 is not a slope");
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  long long g = std::gcd(p < 0 ? -p : p, q);
  return {p / g, q / g};
}

long long Slope::height() const { return std::max(p < 0 ? -p : p, q); }

std::string Slope::str() const { return std::to_string(p) + "/" + std::to_string(q); }

namespace {

struct Line {
  Rational ox, oy;
  long long dx, dy;  // direction; the closed curve is s in [0,1)
};

Line line_for(Slope s, Rational ox, Rational oy) { return {ox, oy, s.q, s.p}; }

// Points (s,u) in [0,1)^2 with L1(s) - L2(u) in Z^2.
long long count_crossings(const Line& a, const Line& b) {
  long long det = a.dx * (-b.dy) - (-b.dx) * a.dy;
  if (det == 0) return 0;  // parallel lines with generic offsets never meet
  long long reach = std::llabs(a.dx) + std::llabs(a.dy) + std::llabs(b.dx) + std::llabs(b.dy) + 2;
  long long count = 0;
  for (long long kx = -reach; kx <= reach; ++kx)
    for (long long ky = -reach; ky <= reach; ++ky) {
      // s*a.d - u*b.d = k + b.o - a.o
      Rational rx = Rational(kx) + b.ox - a.ox;
      Rational ry = Rational(ky) + b.oy - a.oy;
      Rational s = (rx * Rational(-b.dy) - Rational(-b.dx) * ry) / Rational(det);
      Rational u = (Rational(a.dx) * ry - Rational(a.dy) * rx) / Rational(det);
      if (s >= 0 && s < 1 && u >= 0 && u < 1) ++count;
    }
  return count;
}

}  // namespace

long long torus_intersection(Slope a, Slope b) {
  return count_crossings(line_for(a, Rational(1, 7), Rational(2, 11)), line_for(b, Rational(3, 13), Rational(5, 17)));
}

long long pillowcase_intersection(Slope a, Slope b) {
  Rational ax(1, 7), ay(2, 11), bx(3, 13), by(5, 17);
  std::vector<Line> la{line_for(a, ax, ay), line_for(a, -ax, -ay)};
  std::vector<Line> lb{line_for(b, bx, by), line_for(b, -bx, -by)};
  long long total = 0;
  for (auto& x : la)
    for (auto& y : lb) total += count_crossings(x, y);
  return total / 2;
}

long long intersection(WindowKind kind, Slope a, Slope b) {
  return kind == WindowKind::Torus ? torus_intersection(a, b) : pillowcase_intersection(a, b);
}

bool farey_adjacent(Slope a, Slope b) { return std::llabs(a.p * b.q - a.q * b.p) == 1; }

bool window_adjacent(WindowKind kind, Slope a, Slope b) {
  return intersection(kind, a, b) == (kind == WindowKind::Torus ? 1 : 2);
}

std::vector<Slope> slopes_up_to(long long height) {
  std::vector<Slope> out;
  for (long long q = 0; q <= height; ++q)
    for (long long p = -height; p <= height; ++p) {
      if (q == 0 && p != 1) continue;
      if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
      out.push_back({p, q});
    }
  return out;
}

namespace {

// Distance from 1/0 to z.
int from_infinity(Slope z, int depth) {
  if (z.q == 0) return 0;
  if (z.q == 1) return 1;
  if (depth <= 0) throw std::runtime_error("farey distance: depth budget exceeded");
  long long lo = z.p >= 0 ? z.p / z.q : -((-z.p + z.q - 1) / z.q);
  int best = INT32_MAX;
  for (long long n : {lo, lo + 1}) {
    // translate n to 0, then invert so that 0 goes to infinity: z -> -1/(z - n)
    Slope w = Slope::make(-z.q, z.p - n * z.q);
    best = std::min(best, 1 + from_infinity(w, depth - 1));
  }
  return best;
}

}  // namespace

int farey_distance(Slope a, Slope b, int depth_budget) {
  if (a == b) return 0;
  // Find M in SL2Z with M a = 1/0, i.e. rows (y,-x) and (-q,p) with y p - x q = 1.
  long long x = 0, y = 0;
  {
    long long r0 = a.p, r1 = a.q, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      long long k = r0 / r1;
      std::tie(r0, r1) = std::make_pair(r1, r0 - k * r1);
      std::tie(s0, s1) = std::make_pair(s1, s0 - k * s1);
      std::tie(t0, t1) = std::make_pair(t1, t0 - k * t1);
    }
    // s0 p + t0 q = r0 = ±1
    y = s0 * r0;
    x = -t0 * r0;
  }
  Slope z = Slope::make(y * b.p - x * b.q, -a.q * b.p + a.p * b.q);
  return from_infinity(z, depth_budget);
}

int bfs_distance(Slope a, Slope b, long long bound) {
  auto all = slopes_up_to(bound);
  std::map<Slope, int> dist;
  if (std::find(all.begin(), all.end(), a) == all.end()) return -1;
  std::deque<Slope> queue{a};
  dist[a] = 0;
  while (!queue.empty()) {
    Slope s = queue.front();
    queue.pop_front();
    if (s == b) return dist[s];
    for (auto& t : all)
      if (!dist.count(t) && farey_adjacent(s, t)) {
        dist[t] = dist[s] + 1;
        queue.push_back(t);
      }
  }
  return -1;
}

int product_distance(const Windowed& u, const Windowed& v) {
  if (u.size() != v.size()) throw std::invalid_argument("product distance: mismatched windows");
  int total = 0;
  for (auto& [w, s] : u) {
    auto it = v.find(w);
    if (it == v.end()) throw std::invalid_argument("product distance: mismatched windows");
    total += farey_distance(s, it->second);
  }
  return total;
}

int ExplicitGraph::index_of(const std::vector<Slope>& v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

int ExplicitGraph::edge_count() const {
  std::size_t e = 0;
  for (auto& a : adjacency) e += a.size();
  return static_cast<int>(e / 2);
}

std::vector<int> ExplicitGraph::distances_from(int source) const {
  std::vector<int> d(vertices.size(), -1);
  std::deque<int> queue{source};
  d[source] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adjacency[v])
      if (d[w] < 0) {
        d[w] = d[v] + 1;
        queue.push_back(w);
      }
  }
  return d;
}

ExplicitGraph brute_pants_graph(const std::vector<WindowKind>& windows, long long height) {
  if (windows.empty() || windows.size() > 2) throw std::invalid_argument("brute pants graph handles 1 or 2 windows");
  ExplicitGraph g;
  g.windows = windows;
  auto slopes = slopes_up_to(height);
  g.vertices.push_back({});
  for (std::size_t w = 0; w < windows.size(); ++w) {
    std::vector<std::vector<Slope>> next;
    for (auto& v : g.vertices)
      for (auto& s : slopes) {
        auto e = v;
        e.push_back(s);
        next.push_back(e);
      }
    g.vertices = std::move(next);
  }
  g.adjacency.assign(g.vertices.size(), {});
  for (std::size_t a = 0; a < g.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < g.vertices.size(); ++b) {
      int differ = -1, count = 0;
      for (std::size_t w = 0; w < windows.size(); ++w)
        if (g.vertices[a][w] != g.vertices[b][w]) {
          differ = static_cast<int>(w);
          ++count;
        }
      if (count != 1) continue;
      if (window_adjacent(windows[differ], g.vertices[a][differ], g.vertices[b][differ])) {
        g.adjacency[a].push_back(static_cast<int>(b));
        g.adjacency[b].push_back(static_cast<int>(a));
      }
    }
  return g;
}

ExplicitGraph brute_pants_graph(const SurfaceModel& model, const Subsurface& sub, long long height) {
  int k = complexity(model, sub);
  if (k < 1 || k > 2) throw std::invalid_argument("brute pants graph needs complexity 1 or 2");
  std::vector<WindowKind> kinds;
  for (auto& comp : connected_components(model, sub)) {
    if (complexity(model, comp) != 1)
      throw std::invalid_argument("brute pants graph needs every component to be a single window");
    if (comp.pants.size() == 1) kinds.push_back(WindowKind::Torus);
    else kinds.push_back(WindowKind::Sphere);
  }
  return brute_pants_graph(kinds, height);
}

}  // namespace pg::oracle
