#include "pantsgraph/suite.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "pantsgraph/oracle.hpp"
#include "pantsgraph/sampling.hpp"
#include "pantsgraph/twist.hpp"

namespace pg {

nlohmann::json CheckRecord::to_json() const {
  nlohmann::json j;
  j["claim"] = claim;
  if (level >= 0) j["level"] = level;
  j["pass"] = pass;
  j["checked"] = checked;
  j["violations"] = violations;
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

namespace {

using Check = CheckRecord (*)(const SurfaceModel&, const SuiteConfig&, int level, Sampler&);

CheckRecord finish(CheckRecord r) {
  r.pass = r.violations == 0 && r.checked > 0;
  return r;
}

PantsDecomposition near_neighbor(Sampler& s, const PantsDecomposition& x, int max_index) {
  return s.walk(x, s.uniform(0, 3), max_index);
}

CheckRecord agreement_hierarchy(const SurfaceModel& m, const SuiteConfig& c, int, Sampler& s) {
  CheckRecord r{"agreement-hierarchy"};
  for (int t = 0; t < c.pairs; ++t) {
    auto x = s.decomposition(s.uniform(0, 6), 40, t % 5 == 0);
    auto y = s.coin() ? near_neighbor(s, x, 40) : s.decomposition(s.uniform(0, 6), 40, t % 5 == 0);
    for (int n = 0; n <= 5; ++n) {
      bool lower = false;
      for (int i = 0; i <= 4; ++i) {
        bool a = agrees(m, i, x, y, n);
        if (lower && !a) ++r.violations;
        lower = lower || a;
      }
      for (int i = 1; i <= 4; ++i)
        if (agrees(m, i, x, y, n) && n > 0 && !agrees(m, i, x, y, n - 1)) ++r.violations;
    }
    ++r.checked;
  }
  return finish(r);
}

CheckRecord agreement_equivalence(const SurfaceModel& m, const SuiteConfig& c, int level, Sampler& s) {
  CheckRecord r{"agreement-equivalence", level};
  for (int t = 0; t < c.pairs; ++t) {
    auto x = s.decomposition(s.uniform(0, 5), 30);
    auto y = near_neighbor(s, x, 30);
    auto z = near_neighbor(s, y, 30);
    int n = s.uniform(0, 2);
    bool xy = agrees(m, level, x, y, n), yx = agrees(m, level, y, x, n);
    bool yz = agrees(m, level, y, z, n), xz = agrees(m, level, x, z, n);
    if (!agrees(m, level, x, x, n)) ++r.violations;
    if (xy != yx) ++r.violations;
    if (xy && yz && !xz) ++r.violations;
    ++r.checked;
  }
  return finish(r);
}

CheckRecord ball_key_partition(const SurfaceModel& m, const SuiteConfig& c, int level, Sampler& s) {
  CheckRecord r{"ball-key-partition", level};
  for (int t = 0; t < c.pairs; ++t) {
    auto x = s.decomposition(s.uniform(0, 5), 30);
    auto y = near_neighbor(s, x, 30);
    int n = s.uniform(0, 2);
    bool same_key = ball_key(m, level, n, x) == ball_key(m, level, n, y);
    if (same_key != agrees(m, level, x, y, n)) ++r.violations;
    ++r.checked;
  }
  return finish(r);
}

CheckRecord separating_pairs(const SurfaceModel& m, const SuiteConfig& c, int, Sampler&) {
  CheckRecord r{"separating-pairs"};
  for (int level = 2; level <= 4; ++level) {
    bool found = false;
    for (int n = 0; n <= 3 && !found; ++n) {
      auto p = make_separating_pair(m, level, n, c.budget);
      if (!p) continue;
      found = agrees(m, level, p->x, p->y, n) && !agrees(m, level - 1, p->x, p->y, n);
      if (found) r.detail[std::to_string(level)] = {{"n", n}, {"x", p->x.to_json(m)}, {"y", p->y.to_json(m)}};
    }
    if (!found) ++r.violations;
    ++r.checked;
  }
  return finish(r);
}

CheckRecord dhat_symmetry(const SurfaceModel& m, const SuiteConfig& c, int level, Sampler& s) {
  CheckRecord r{"dhat-symmetry", level};
  for (int t = 0; t < c.pairs; ++t) {
    auto x = s.decomposition(s.uniform(0, 5), 30, t % 7 == 0);
    auto y = near_neighbor(s, x, 30);
    auto a = dhat(m, level, x, y), b = dhat(m, level, y, x);
    if (a.kind != b.kind || a.value != b.value) ++r.violations;
    ++r.checked;
  }
  return finish(r);
}

CheckRecord dhat_identity(const SurfaceModel& m, const SuiteConfig& c, int level, Sampler& s) {
  CheckRecord r{"dhat-identity", level};
  for (int t = 0; t < c.pairs; ++t) {
    auto x = s.decomposition(s.uniform(0, 5), 30, t % 7 == 0);
    auto y = near_neighbor(s, x, 30);
    auto self = dhat(m, level, x, x);
    if (!self.defined() || self.value != Rational(0)) ++r.violations;
    auto h = dhat(m, level, x, y);
    if ((x == y) != (h.defined() && h.value == Rational(0))) ++r.violations;
    ++r.checked;
  }
  return finish(r);
}

CheckRecord strong_triangle(const SurfaceModel& m, const SuiteConfig& c, int level, Sampler& s) {
  CheckRecord r{"strong-triangle", level};
  long long skipped = 0;
  for (int t = 0; t < c.pairs; ++t) {
    auto x = s.decomposition(s.uniform(0, 5), 30);
    auto y = s.walk(x, s.uniform(0, 2), 30);
    auto z = s.walk(y, s.uniform(0, 2), 30);
    try {
      if (!ultrametric_check(m, level, x, y, z).holds) ++r.violations;
      ++r.checked;
    } catch (const std::domain_error&) {
      ++skipped;
    }
  }
  r.detail["undefined_triples"] = skipped;
  return finish(r);
}

CheckRecord metric_extends_dhat(const SurfaceModel& m, const SuiteConfig& c, int level, Sampler& s) {
  CheckRecord r{"metric-extends-dhat", level};
  for (int t = 0; t < c.pairs / 10; ++t) {
    auto x = s.decomposition(s.uniform(0, 4), 20);
    auto y = s.walk(x, 1, 20);
    auto h = dhat(m, level, x, y);
    if (!h.defined()) continue;
    auto d = distance(m, level, x, y, c.budget);
    if (!d.exact || d.lo != h.value || d.hi != h.value) ++r.violations;
    ++r.checked;
  }
  return finish(r);
}

CheckRecord gap_lower_bound(const SurfaceModel& m, const SuiteConfig& c, int level, Sampler& s) {
  CheckRecord r{"gap-lower-bound", level};
  for (int t = 0; t < 20 * c.fixtures && r.checked < 5 * c.fixtures; ++t) {
    auto x = s.decomposition(s.uniform(0, 4), 20);
    auto y = s.walk(x, s.uniform(2, 4), 14);
    if (dhat(m, level, x, y).kind != DHat::Kind::Undefined) continue;
    auto lb = lower_bound(m, level, x, y);
    auto d = distance(m, level, x, y, c.budget);
    Rational floor_value = Rational(1) + Rational(1, std::max(lb.n, 1));
    if (d.lo < floor_value || d.lo > d.hi || !(d.lo > Rational(1))) ++r.violations;
    ++r.checked;
  }
  return finish(r);
}

CheckRecord non_ultrametric(const SurfaceModel& m, const SuiteConfig& c, int level, Sampler&) {
  CheckRecord r{"non-ultrametric", level};
  auto w = find_nonultrametric_witness(m, level, c.budget);
  ++r.checked;
  if (!w) {
    ++r.violations;
    return finish(r);
  }
  auto xy = dhat(m, level, w->x, w->y), yz = dhat(m, level, w->y, w->z);
  auto lo = distance(m, level, w->x, w->z, c.budget).lo;
  if (!xy.defined() || !yz.defined() || xy.value > Rational(1) || yz.value > Rational(1) || !(lo > Rational(1)))
    ++r.violations;
  r.detail = {{"x", w->x.to_json(m)}, {"y", w->y.to_json(m)}, {"z", w->z.to_json(m)}, {"lo_xz", to_string(lo)}};
  return finish(r);
}

CheckRecord small_diameter_ultrametric(const SurfaceModel& m, const SuiteConfig& c, int level, Sampler& s) {
  CheckRecord r{"small-diameter-ultrametric", level};
  for (int t = 0; t < c.pairs; ++t) {
    auto x = s.decomposition(s.uniform(0, 5), 30);
    auto y = s.walk(x, s.uniform(0, 2), 30);
    auto z = s.walk(y, s.uniform(0, 2), 30);
    auto a = dhat(m, level, x, y), b = dhat(m, level, y, z), d = dhat(m, level, x, z);
    if (!a.defined() || !b.defined() || !d.defined()) continue;
    if (std::max({a.value, b.value, d.value}) > Rational(1)) continue;
    if (d.value > std::max(a.value, b.value)) ++r.violations;
    ++r.checked;
  }
  return finish(r);
}

std::vector<PantsDecomposition> path_targets(const SurfaceModel& m, Sampler& s, int count) {
  std::vector<PantsDecomposition> out;
  auto names = TailPattern::names();
  for (int t = 0; t < count; ++t) {
    auto y = PantsDecomposition::of_tail(TailPattern::named(names[static_cast<std::size_t>(t) % names.size()]));
    out.push_back(s.walk(y, s.uniform(0, 3), 11));
  }
  (void)m;
  return out;
}

CheckRecord converging_path(const SurfaceModel& m, const SuiteConfig& c, int, Sampler& s) {
  CheckRecord r{"converging-path"};
  const int depth = 4;
  long long rejected = 0;
  for (auto& y : path_targets(m, s, c.fixtures)) {
    auto x = s.decomposition(s.uniform(0, 4), 20);
    ConvergePath p;
    try {
      p = converge_path(m, x, y, depth);
    } catch (const std::invalid_argument&) {
      ++rejected;
      continue;
    }
    for (int k = 0; k <= depth; ++k) {
      int begin = k == 0 ? 0 : p.stage_ends[static_cast<std::size_t>(k - 1)];
      int end = p.stage_ends[static_cast<std::size_t>(k)];
      const auto& stage_start = p.states[static_cast<std::size_t>(begin)];
      for (int st = begin; k > 0 && st <= end; ++st)
        for (int i = 1; i <= 4; ++i)
          if (!agrees(m, i, p.states[static_cast<std::size_t>(st)], stage_start, k - 1)) ++r.violations;
      for (int i = 1; i <= 4 && k > 0; ++i) {
        auto h = dhat(m, i, p.states[static_cast<std::size_t>(end)], y);
        if (!h.defined() || !(h.value < Rational(1, k))) ++r.violations;
      }
    }
    ++r.checked;
  }
  r.detail["rejected_targets"] = rejected;
  return finish(r);
}

oracle::Slope to_oracle(LocalSlope s) { return oracle::Slope::make(s.q, s.p); }

CheckRecord oracle_moves(const SurfaceModel& m, const SuiteConfig&, int, Sampler&) {
  CheckRecord r{"oracle-moves"};
  const long long height = 3;
  for (int j : {2, 4}) {
    auto kind = m.window_kind(j);
    auto g = oracle::brute_pants_graph({kind}, height);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      auto sl = g.vertices[v][0];
      LocalSlope local = sl.q == 0 ? LocalSlope::base() : LocalSlope::make(sl.q, sl.p);
      auto x = PantsDecomposition{}.with(m, j, local);
      std::set<oracle::Slope> engine, brute;
      for (auto& mv : enumerate_moves_at(m, x, j, static_cast<int>(height)).moves) engine.insert(to_oracle(mv.to));
      for (int u : g.adjacency[v]) brute.insert(g.vertices[static_cast<std::size_t>(u)][0]);
      if (engine != brute) ++r.violations;
      ++r.checked;
    }
  }
  return finish(r);
}

CheckRecord oracle_product_distance(const SurfaceModel& m, const SuiteConfig& c, int, Sampler& s) {
  CheckRecord r{"oracle-product-distance"};
  // Two disjoint torus windows and their chain neighbours; BFS over the finite move graph.
  const std::vector<int> windows{2, 5};
  const std::vector<int> indices{2, 3, 5, 6};
  const int height = 3;
  std::map<PantsDecomposition, int> dist;
  std::deque<PantsDecomposition> queue{PantsDecomposition{}};
  dist[PantsDecomposition{}] = 0;
  std::vector<PantsDecomposition> windowed;
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    bool is_windowed = x.at(3).is_base() && x.at(6).is_base();
    if (is_windowed) windowed.push_back(x);
    for (int j : indices)
      for (auto& mv : enumerate_moves_at(m, x, j, height).moves) {
        auto y = apply_move(m, x, mv);
        if (dist.emplace(y, 0).second) queue.push_back(y);
      }
  }
  auto bfs = [&](const PantsDecomposition& src) {
    std::map<PantsDecomposition, int> d{{src, 0}};
    std::deque<PantsDecomposition> q{src};
    while (!q.empty()) {
      auto x = q.front();
      q.pop_front();
      for (int j : indices)
        for (auto& mv : enumerate_moves_at(m, x, j, height).moves) {
          auto y = apply_move(m, x, mv);
          if (d.emplace(y, d[x] + 1).second) q.push_back(y);
        }
    }
    return d;
  };
  int sources = std::max(4, c.fixtures / 4);
  for (int t = 0; t < sources; ++t) {
    auto u = windowed[static_cast<std::size_t>(s.uniform(0, static_cast<int>(windowed.size()) - 1))];
    auto d = bfs(u);
    for (int k = 0; k < 40; ++k) {
      auto v = windowed[static_cast<std::size_t>(s.uniform(0, static_cast<int>(windowed.size()) - 1))];
      oracle::Windowed a, b;
      for (int j : windows) {
        a[j] = to_oracle(u.at(j));
        b[j] = to_oracle(v.at(j));
      }
      int expected = oracle::product_distance(a, b);
      if (expected > 4) continue;
      if (d.at(v) != expected) ++r.violations;
      ++r.checked;
    }
  }
  return finish(r);
}

PantsDecomposition far_change(const SurfaceModel& m, const PantsDecomposition& x, int n) {
  int j = m.boundary_index(n) + 4;
  while (m.window_kind(j) != WindowKind::Torus) ++j;
  return x.with(m, j, LocalSlope::make(1, 1));
}

CheckRecord pants_space_entry(const SurfaceModel& m, const SuiteConfig& c, int level, Sampler& s) {
  CheckRecord r{"pants-space-entry", level};
  PantsDecomposition base;
  auto names = TailPattern::names();
  for (int t = 0; t < std::max(4, c.fixtures / 4); ++t) {
    auto x = s.walk(base, s.uniform(0, 2), 8);
    auto moves = enumerate_moves_at(m, x, 2, 2).moves;
    if (moves.empty()) continue;
    auto y = apply_move(m, x, moves[static_cast<std::size_t>(s.uniform(0, static_cast<int>(moves.size()) - 1))]);
    Rational a(s.uniform(1, 5), 6);
    auto start = PantsDecomposition::of_tail(TailPattern::named(names[static_cast<std::size_t>(t) % names.size()]));
    auto stream = density_stream(m, start, x, a, y, 4);
    auto target = PantsPoint::normalize(m, x, a, y);
    if (!converges(m, level, stream, target).ok) ++r.violations;
    for (Rational eps : {Rational(1), Rational(1, 2), Rational(1, 3)}) {
      auto k = entry_index(m, stream, eps);
      if (!k) {
        ++r.violations;
        continue;
      }
      for (std::size_t j = static_cast<std::size_t>(*k); j < stream.prefix.size(); ++j)
        if (!in_basic_open(m, level, eps, target, stream.prefix[j].point(m))) ++r.violations;
    }
    ++r.checked;
  }
  return finish(r);
}

CheckRecord a_set_disjointness(const SurfaceModel& m, const SuiteConfig& c, int level, Sampler& s) {
  CheckRecord r{"a-set-disjointness", level};
  for (int t = 0; t < c.pairs / 4; ++t) {
    auto x = s.decomposition(s.uniform(0, 4), 20);
    auto y = near_neighbor(s, x, 20);
    auto z = s.walk(x, 1, 20);
    int n = s.uniform(0, 2);
    auto kx = ball_key(m, level, n, x), ky = ball_key(m, level, n, y);
    bool z_in_x = ball_key(m, level, n, z) == kx, z_in_y = ball_key(m, level, n, z) == ky;
    if (kx != ky && z_in_x && z_in_y) ++r.violations;
    if (kx == ky && z_in_x != z_in_y) ++r.violations;
    ++r.checked;
  }
  return finish(r);
}

std::vector<PantsPoint> sample_points(const SurfaceModel& m, Sampler& s, int count) {
  std::vector<PantsPoint> out;
  std::set<std::string> seen;
  for (int t = 0; (int)out.size() < count && t < 20 * count; ++t) {
    auto x = s.decomposition(s.uniform(0, 3), 12);
    PantsPoint p = PantsPoint::vertex(x);
    if (s.coin(0.6)) {
      auto y = s.neighbor(x, 0, 12);
      if (y != x) p = PantsPoint::normalize(m, x, Rational(s.uniform(1, 7), 8), y);
    }
    if (seen.insert(p.to_json(m).dump()).second) out.push_back(p);
  }
  return out;
}

CheckRecord separation(const SurfaceModel& m, const SuiteConfig& c, int level, Sampler& s) {
  CheckRecord r{"separation", level};
  auto pts = sample_points(m, s, 2 * std::max(c.fixtures, 60));
  for (std::size_t a = 0; a + 1 < pts.size(); a += 2) {
    auto w = separation_witness(m, level, pts[a], pts[a + 1]);
    if (!certified_disjoint(w.around_p, w.around_q)) ++r.violations;
    if (!contains(m, w.around_p, pts[a]) || !contains(m, w.around_q, pts[a + 1])) ++r.violations;
    if (contains(m, w.around_p, pts[a + 1]) || contains(m, w.around_q, pts[a])) ++r.violations;
    ++r.checked;
  }
  return finish(r);
}

// Closure membership for probes around an edge point, against the closed-interval reading.
CheckRecord closure_formula(const SurfaceModel& m, const SuiteConfig& c, int level, Sampler& s) {
  CheckRecord r{"closure-formula", level};
  PantsDecomposition x;
  auto y = x.with(m, 2, LocalSlope::make(1, 0));
  auto w = x.with(m, 2, LocalSlope::make(1, 1));
  for (int t = 0; t < std::max(c.fixtures * 5, 120); ++t) {
    int n = s.uniform(1, 2);
    Rational eps(1, s.uniform(3, 6));
    Rational a(s.uniform(1, 11), 12);
    auto p = PantsPoint::normalize(m, x, a, y);
    Rational b(s.uniform(1, 11), 12);
    bool shifted = s.coin();
    auto xs = shifted ? far_change(m, x, n) : x;
    auto ys = shifted ? far_change(m, y, n) : y;
    auto ws = shifted ? far_change(m, w, n) : w;
    bool closure, expected;
    switch (t % 3) {
      case 0:
        closure = in_closure(m, level, eps, n, p, PantsPoint::normalize(m, xs, b, ys));
        expected = abs(b - a) <= eps;
        break;
      case 1:
        closure = in_closure(m, level, eps, n, p, PantsPoint::normalize(m, xs, b, ws));
        expected = a + b <= eps;
        break;
      default:
        closure = in_closure(m, level, eps, n, p, PantsPoint::vertex(xs));
        expected = a <= eps;
        break;
    }
    if (closure != expected) ++r.violations;
    ++r.checked;
  }
  return finish(r);
}

CheckRecord path_endpoints(const SurfaceModel& m, const SuiteConfig& c, int level, Sampler& s) {
  CheckRecord r{"path-endpoints", level};
  for (auto& y : path_targets(m, s, std::max(4, c.fixtures / 4))) {
    auto x = s.decomposition(s.uniform(0, 3), 12);
    try {
      PathFunction f(m, x, y);
      if (!(f.at(Rational(0)) == PantsPoint::vertex(x))) ++r.violations;
      if (!(f.at(Rational(1)) == PantsPoint::vertex(y))) ++r.violations;
      if (!converges(m, level, f.vertex_stream(level, 3), PantsPoint::vertex(y)).ok) ++r.violations;
      ++r.checked;
    } catch (const std::invalid_argument&) {
    }
  }
  return finish(r);
}

TwistProfile random_profile(Sampler& s, bool finite) {
  std::map<int, long long> overrides;
  for (int t = s.uniform(0, 3); t > 0; --t) overrides[s.uniform(0, 30)] = s.uniform(-3, 3);
  std::vector<long long> period{0};
  if (!finite) {
    period.clear();
    for (int t = s.uniform(1, 3); t > 0; --t) period.push_back(s.uniform(-2, 2));
  }
  return TwistProfile::make(overrides, period);
}

CheckRecord twist_fixes_base(const SurfaceModel& m, const SuiteConfig& c, int, Sampler& s) {
  CheckRecord r{"twist-fixes-base"};
  PantsDecomposition base;
  for (int t = 0; t < c.fixtures * 4; ++t) {
    auto f = random_profile(s, s.coin());
    if (!(act_on_decomposition(m, f, base) == base)) ++r.violations;
    for (int j = 0; j < 20; ++j)
      if (!(act_on_curve(m, f, Curve::base(j)) == Curve::base(j))) ++r.violations;
    ++r.checked;
  }
  return finish(r);
}

CheckRecord action_continuity(const SurfaceModel& m, const SuiteConfig& c, int level, Sampler& s) {
  CheckRecord r{"action-continuity", level};
  PantsDecomposition base;
  auto names = TailPattern::names();
  for (int t = 0; t < c.fixtures; ++t) {
    auto f = random_profile(s, false);
    auto x = s.walk(base, s.uniform(0, 2), 8);
    auto y = s.neighbor(x, 2, 8);
    if (y == x) continue;
    Rational a(s.uniform(1, 3), 4);
    auto start = PantsDecomposition::of_tail(TailPattern::named(names[static_cast<std::size_t>(t) % names.size()]));
    auto points = density_stream(m, start, x, a, y, 4);
    auto rep = action_continuity_test(m, level, truncation_stream(m, f, 4), points, f,
                                      PantsPoint::normalize(m, x, a, y));
    if (!rep.verdict.ok) ++r.violations;
    ++r.checked;
  }
  return finish(r);
}

CheckRecord finite_support_component(const SurfaceModel& m, const SuiteConfig& c, int, Sampler& s) {
  CheckRecord r{"finite-support-component"};
  for (int t = 0; t < c.pairs / 4; ++t) {
    auto f = random_profile(s, true);
    auto x = s.decomposition(s.uniform(0, 5), 30, true);
    if (!same_component(x, act_on_decomposition(m, f, x))) ++r.violations;
    ++r.checked;
  }
  return finish(r);
}

struct Entry {
  const char* claim;
  Check run;
  bool per_level;
};

const std::vector<Entry>& battery() {
  static const std::vector<Entry> entries{
      {"agreement-hierarchy", agreement_hierarchy, false},
      {"agreement-equivalence", agreement_equivalence, true},
      {"ball-key-partition", ball_key_partition, true},
      {"separating-pairs", separating_pairs, false},
      {"dhat-symmetry", dhat_symmetry, true},
      {"dhat-identity", dhat_identity, true},
      {"strong-triangle", strong_triangle, true},
      {"metric-extends-dhat", metric_extends_dhat, true},
      {"gap-lower-bound", gap_lower_bound, true},
      {"non-ultrametric", non_ultrametric, true},
      {"small-diameter-ultrametric", small_diameter_ultrametric, true},
      {"converging-path", converging_path, false},
      {"oracle-moves", oracle_moves, false},
      {"oracle-product-distance", oracle_product_distance, false},
      {"pants-space-entry", pants_space_entry, true},
      {"a-set-disjointness", a_set_disjointness, true},
      {"separation", separation, true},
      {"closure-formula", closure_formula, true},
      {"path-endpoints", path_endpoints, true},
      {"twist-fixes-base", twist_fixes_base, false},
      {"action-continuity", action_continuity, true},
      {"finite-support-component", finite_support_component, false},
  };
  return entries;
}

}  // namespace

std::vector<std::string> suite_claims() {
  std::vector<std::string> out;
  for (auto& e : battery()) out.push_back(e.claim);
  return out;
}

std::vector<CheckRecord> run_suite(const SurfaceModel& model, const SuiteConfig& config,
                                   const std::function<void(const CheckRecord&)>& emit) {
  std::vector<CheckRecord> out;
  std::uint64_t stream = 0;
  for (auto& e : battery()) {
    ++stream;
    std::vector<int> levels{-1};
    if (e.per_level) levels = config.level >= 1 ? std::vector<int>{config.level} : std::vector<int>{1, 2, 3, 4};
    for (int level : levels) {
      // Each record draws from its own stream, so filtering by level leaves other records unchanged.
      Sampler sampler(model, config.seed * 1000003ULL + stream * 7919ULL + static_cast<std::uint64_t>(level + 1));
      CheckRecord rec;
      try {
        rec = e.run(model, config, level, sampler);
      } catch (const std::exception& ex) {
        rec.claim = e.claim;
        rec.level = level;
        rec.pass = false;
        rec.detail["error"] = ex.what();
      }
      if (emit) emit(rec);
      out.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace pg
