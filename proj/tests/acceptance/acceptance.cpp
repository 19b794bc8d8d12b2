// Acceptance battery: one PASS/FAIL line per criterion. Generators, chart arithmetic and the
// expected values below come from tests/support and from closed-form reasoning in this file,
// not from the library's sampler or window code.

#include <chrono>
#include <cstdio>
#include <deque>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "pantsgraph/oracle.hpp"
#include "pantsgraph/twist.hpp"
#include "support/gen.hpp"

using namespace pg;

namespace {

// Pinned thresholds.
constexpr int kShell = 4;
constexpr std::uint64_t kSeed = 20240611;
constexpr int kHierarchyPairs = 10000;
constexpr int kHierarchyMaxN = 5;
constexpr double kHierarchySeconds = 60.0;
constexpr int kSeparatingMaxN = 3;
constexpr int kEquivalenceTriples = 10000;
constexpr int kMetricPairs = 2000;
constexpr int kStrongTriangleTriples = 10000;
constexpr int kDistancePairs = 200;
constexpr int kGapPairs = 100;
constexpr int kUltrametricTriples = 3000;
constexpr int kWitnessBudget = 2;
constexpr int kPathFixtures = 20;
constexpr int kPathDepth = 4;
constexpr long long kOracleHeight = 3;
constexpr int kProductPairs = 100;
constexpr int kProductMaxDistance = 4;
constexpr double kOracleSeconds = 300.0;
constexpr int kSeparationPairs = 100;
constexpr int kClosureProbes = 100;
constexpr int kASetPairs = 2000;
constexpr int kContinuityFixtures = 20;
constexpr int kProfiles = 200;

const SurfaceModel& model() {
  static SurfaceModel m = build_model(kShell);
  return m;
}

struct Result {
  bool pass = true;
  std::string stats;
};

int failures = 0;

void report(int id, const std::string& name, const Result& r, double seconds) {
  std::printf("criterion %2d: %s  %-28s %s (%.1fs)\n", id, r.pass ? "PASS" : "FAIL", name.c_str(), r.stats.c_str(),
              seconds);
  std::fflush(stdout);
  if (!r.pass) ++failures;
}

void run(int id, const std::string& name, const std::function<Result()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  report(id, name, r, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

std::string fmt(const std::map<std::string, long long>& kv) {
  std::ostringstream o;
  for (auto& [k, v] : kv) o << k << '=' << v << ' ';
  return o.str();
}

// Finite-support comparison for decompositions sharing a tail.
std::vector<int> differing(const PantsDecomposition& x, const PantsDecomposition& y, int last = 200) {
  std::vector<int> out;
  for (int j = 0; j <= last; ++j)
    if (x.at(j) != y.at(j)) out.push_back(j);
  return out;
}

// Unit move by the definition: one differing index, Farey-adjacent slopes, window free in both.
bool own_adjacent(const PantsDecomposition& x, const PantsDecomposition& y) {
  if (!same_component(x, y)) return false;
  auto d = differing(x, y);
  if (d.size() != 1) return false;
  int j = d[0];
  return std::llabs(gen::det(x.at(j), y.at(j))) == 1 && gen::free_window(x, j) && gen::free_window(y, j);
}

// d̂ from its definition, with agreement as the only library input.
std::optional<Rational> own_dhat(int level, const PantsDecomposition& x, const PantsDecomposition& y) {
  if (x == y) return Rational(0);
  auto& m = model();
  if (agrees(m, level, x, y, 0)) {
    int n = 0;
    while (n < 40 && agrees(m, level, x, y, n + 1)) ++n;
    return Rational(1, n + 1);
  }
  if (own_adjacent(x, y)) return Rational(1);
  return std::nullopt;
}

PantsDecomposition pair_partner(gen::Rng& r, const PantsDecomposition& x, int hi) {
  auto& m = model();
  return r.coin() ? gen::walk(m, r, x, r.range(1, 3), hi) : gen::walk(m, r, PantsDecomposition::of_tail(x.tail()), r.range(0, 6), hi);
}

// ---------------------------------------------------------------- 1
Result hierarchy() {
  auto& m = model();
  gen::Rng r(kSeed + 1);
  long long violations = 0, checks = 0;
  auto t0 = std::chrono::steady_clock::now();
  for (int t = 0; t < kHierarchyPairs; ++t) {
    auto x = gen::walk(m, r, t % 5 == 0 ? gen::tail(r) : PantsDecomposition{}, r.range(0, 6), 40);
    auto y = pair_partner(r, x, 40);
    for (int n = 0; n <= kHierarchyMaxN; ++n) {
      bool a[5];
      for (int i = 0; i <= 4; ++i) a[i] = agrees(m, i, x, y, n);
      for (int i = 0; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
          ++checks;
          if (a[i] && !a[j]) ++violations;
        }
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {violations == 0 && secs < kHierarchySeconds,
          fmt({{"pairs", kHierarchyPairs}, {"implications", checks}, {"violations", violations}}) +
              "limit_s=" + std::to_string(static_cast<int>(kHierarchySeconds))};
}

// ---------------------------------------------------------------- 2
Result separating() {
  auto& m = model();
  std::ifstream in(std::string(ACCEPTANCE_FIXTURES) + "/separating.json");
  if (!in) return {false, "fixture file missing"};
  auto j = nlohmann::json::parse(in);
  std::set<int> verified;
  for (auto& e : j) {
    int level = e.at("level").get<int>(), n = e.at("n").get<int>();
    auto x = PantsDecomposition::from_json(m, e.at("x")), y = PantsDecomposition::from_json(m, e.at("y"));
    if (n <= kSeparatingMaxN && agrees(m, level, x, y, n) && !agrees(m, level - 1, x, y, n)) verified.insert(level);
  }
  bool ok = verified == std::set<int>{2, 3, 4};
  return {ok, fmt({{"fixtures", static_cast<long long>(j.size())}, {"verified", static_cast<long long>(verified.size())}})};
}

// ---------------------------------------------------------------- 3
Result equivalence() {
  auto& m = model();
  gen::Rng r(kSeed + 3);
  long long violations = 0, split = 0, triples = 0;
  for (int level = 1; level <= 4; ++level)
    for (int t = 0; t < kEquivalenceTriples; ++t) {
      auto x = gen::walk(m, r, PantsDecomposition{}, r.range(0, 5), 30);
      auto y = gen::walk(m, r, x, r.range(0, 3), 30);
      auto z = gen::walk(m, r, y, r.range(0, 3), 30);
      int n = r.range(0, 2);
      bool xy = agrees(m, level, x, y, n), yx = agrees(m, level, y, x, n);
      bool yz = agrees(m, level, y, z, n), xz = agrees(m, level, x, z, n);
      if (!agrees(m, level, x, x, n) || xy != yx || (xy && yz && !xz)) ++violations;
      auto kx = ball_key(m, level, n, x), ky = ball_key(m, level, n, y), kz = ball_key(m, level, n, z);
      if ((kx == ky) != xy || (ky == kz) != yz || (kx == kz) != xz) ++split;
      if (ball_key(m, level, n, x) != kx) ++split;
      ++triples;
    }
  return {violations == 0 && split == 0,
          fmt({{"triples", triples}, {"relation_violations", violations}, {"bucket_violations", split}})};
}

// ---------------------------------------------------------------- 4
Result metric() {
  auto& m = model();
  gen::Rng r(kSeed + 4);
  long long sym = 0, ident = 0, oracle_mismatch = 0, pairs = 0;
  long long triangle_bad = 0, dist_bad = 0, dist_checked = 0;
  long long min_defined = -1;
  for (int level = 1; level <= 4; ++level) {
    for (int t = 0; t < kMetricPairs; ++t) {
      auto x = gen::walk(m, r, PantsDecomposition{}, r.range(0, 5), 30);
      auto y = gen::walk(m, r, x, r.range(0, 3), 30);
      auto a = dhat(m, level, x, y), b = dhat(m, level, y, x), self = dhat(m, level, x, x);
      if (a.kind != b.kind || a.value != b.value) ++sym;
      if (!self.defined() || self.value != Rational(0)) ++ident;
      if ((x == y) != (a.defined() && a.value == Rational(0))) ++ident;
      auto own = own_dhat(level, x, y);
      if (own.has_value() != a.defined() || (own && *own != a.value)) ++oracle_mismatch;
      ++pairs;
    }
    long long defined = 0;
    for (int t = 0; defined < kStrongTriangleTriples && t < 6 * kStrongTriangleTriples; ++t) {
      auto x = gen::walk(m, r, PantsDecomposition{}, r.range(0, 5), 30);
      auto y = gen::walk(m, r, x, r.range(0, 2), 30);
      auto z = gen::walk(m, r, y, r.range(0, 2), 30);
      auto a = dhat(m, level, x, y), b = dhat(m, level, y, z), c = dhat(m, level, x, z);
      if (!a.defined() || !b.defined() || !c.defined()) continue;
      ++defined;
      if (c.value > std::max(a.value, b.value)) ++triangle_bad;
    }
    min_defined = min_defined < 0 ? defined : std::min(min_defined, defined);
    for (int t = 0; t < kDistancePairs; ++t) {
      auto x = gen::walk(m, r, PantsDecomposition{}, r.range(0, 4), 20);
      auto y = gen::walk(m, r, x, 1, 20);
      auto h = dhat(m, level, x, y);
      if (!h.defined()) continue;
      auto d = distance(m, level, x, y, kWitnessBudget);
      if (!d.exact || d.lo != h.value || d.hi != h.value) ++dist_bad;
      ++dist_checked;
    }
  }
  bool ok = sym == 0 && ident == 0 && oracle_mismatch == 0 && triangle_bad == 0 && dist_bad == 0 &&
            min_defined >= kStrongTriangleTriples;
  return {ok, fmt({{"pairs", pairs},
                   {"symmetry_bad", sym},
                   {"identity_bad", ident},
                   {"definition_mismatch", oracle_mismatch},
                   {"defined_triples_per_level", min_defined},
                   {"triangle_bad", triangle_bad},
                   {"distance_checked", dist_checked},
                   {"distance_bad", dist_bad}})};
}

// ---------------------------------------------------------------- 5
// n from window containment: one differing window gives its own level; several give the least level
// holding some two of them, i.e. the second smallest window level.
int own_gap_level(const std::vector<int>& diff) {
  std::vector<int> levels;
  for (int j : diff) levels.push_back(gen::level_of_window(kShell, j));
  std::sort(levels.begin(), levels.end());
  return levels.size() == 1 ? levels[0] : levels[1];
}

Result gap() {
  auto& m = model();
  gen::Rng r(kSeed + 5);
  long long pairs = 0, not_undefined = 0, n_mismatch = 0, bound_bad = 0;
  int interior_last = m.boundary_index(0) - 1;
  for (int level = 1; level <= 4; ++level) {
    int made = 0;
    for (int t = 0; made < kGapPairs && t < 50 * kGapPairs; ++t) {
      auto x = gen::walk(m, r, PantsDecomposition{}, r.range(0, 4), 30);
      auto y = x;
      int j = r.range(0, interior_last);
      if (!gen::free_window(x, j)) continue;
      if (r.coin()) {
        // One change in S_0 to a non-adjacent slope.
        std::vector<LocalSlope> far;
        for (auto s : gen::slopes(3))
          if (std::llabs(gen::det(s, x.at(j))) >= 2) far.push_back(s);
        y = x.with(m, j, far[static_cast<std::size_t>(r.range(0, static_cast<int>(far.size()) - 1))]);
      } else {
        auto nb = gen::farey_neighbours(x.at(j), 2);
        y = x.with(m, j, nb[static_cast<std::size_t>(r.range(0, static_cast<int>(nb.size()) - 1))]);
        int k = r.range(0, 60);
        if (k == j || gen::windows_meet(j, k) || !gen::free_window(y, k)) continue;
        auto nk = gen::farey_neighbours(y.at(k), 2);
        y = y.with(m, k, nk[static_cast<std::size_t>(r.range(0, static_cast<int>(nk.size()) - 1))]);
        int l = r.range(0, 60);
        if (r.coin() && l != j && l != k && !gen::windows_meet(j, l) && !gen::windows_meet(k, l) && gen::free_window(y, l)) {
          auto nl = gen::farey_neighbours(y.at(l), 2);
          y = y.with(m, l, nl[static_cast<std::size_t>(r.range(0, static_cast<int>(nl.size()) - 1))]);
        }
      }
      auto diff = differing(x, y);
      if (diff.empty()) continue;
      ++made;
      ++pairs;
      if (dhat(m, level, x, y).kind != DHat::Kind::Undefined) {
        ++not_undefined;
        continue;
      }
      int n = own_gap_level(diff);
      auto lb = lower_bound(m, level, x, y);
      if (lb.n != n) ++n_mismatch;
      auto d = distance(m, level, x, y, kWitnessBudget);
      if (d.lo < Rational(1) + Rational(1, std::max(n, 1)) || d.lo > d.hi) ++bound_bad;
    }
  }
  bool ok = pairs >= 4 * kGapPairs && not_undefined == 0 && n_mismatch == 0 && bound_bad == 0;
  return {ok, fmt({{"pairs", pairs}, {"defined_unexpectedly", not_undefined}, {"n_mismatch", n_mismatch},
                   {"bound_bad", bound_bad}})};
}

// ---------------------------------------------------------------- 6
Result non_ultrametric() {
  auto& m = model();
  long long found = 0, bad = 0, sampled = 0, ultra_bad = 0;
  for (int level = 1; level <= 4; ++level) {
    auto w = find_nonultrametric_witness(m, level, kWitnessBudget);
    if (!w) continue;
    ++found;
    auto xy = own_dhat(level, w->x, w->y), yz = own_dhat(level, w->y, w->z);
    bool legs = xy && yz && *xy <= Rational(1) && *yz <= Rational(1);
    bool far = !own_dhat(level, w->x, w->z).has_value() &&
               distance(m, level, w->x, w->z, kWitnessBudget).lo > Rational(1);
    if (!legs || !far) ++bad;
  }
  gen::Rng r(kSeed + 6);
  for (int level = 1; level <= 4; ++level)
    for (int t = 0; t < kUltrametricTriples; ++t) {
      auto x = gen::walk(m, r, PantsDecomposition{}, r.range(0, 5), 30);
      auto y = gen::walk(m, r, x, r.range(0, 2), 30);
      auto z = gen::walk(m, r, y, r.range(0, 2), 30);
      auto a = dhat(m, level, x, y), b = dhat(m, level, y, z), c = dhat(m, level, x, z);
      if (!a.defined() || !b.defined() || !c.defined()) continue;
      if (std::max({a.value, b.value, c.value}) > Rational(1)) continue;
      ++sampled;
      if (c.value > std::max(a.value, b.value)) ++ultra_bad;
    }
  return {found == 4 && bad == 0 && sampled > 0 && ultra_bad == 0,
          fmt({{"witness_levels", found}, {"witness_bad", bad}, {"diameter1_triples", sampled}, {"ultra_bad", ultra_bad}})};
}

// ---------------------------------------------------------------- 7
Result converging() {
  auto& m = model();
  gen::Rng r(kSeed + 7);
  long long fixtures = 0, rejected = 0, early_change = 0, dhat_bad = 0, mismatch = 0;
  std::set<int> boundaries;
  for (int k = 0; k <= kPathDepth; ++k) boundaries.insert(m.boundary_index(k));
  while (fixtures < kPathFixtures && fixtures + rejected < 10 * kPathFixtures) {
    auto y = gen::walk(m, r, gen::tail(r), r.range(0, 3), 11);
    for (int s = r.range(0, 3); s > 0; --s) {
      int j = r.range(14, 70);
      if (boundaries.count(j) == 0) y = gen::step(m, r, y, j, j);
    }
    auto x = gen::walk(m, r, PantsDecomposition{}, r.range(0, 4), 20);
    ConvergePath p;
    try {
      p = converge_path(m, x, y, kPathDepth);
    } catch (const std::invalid_argument&) {
      ++rejected;
      continue;
    }
    ++fixtures;
    for (int k = 0; k <= kPathDepth; ++k) {
      int begin = k == 0 ? 0 : p.stage_ends[static_cast<std::size_t>(k - 1)];
      int end = p.stage_ends[static_cast<std::size_t>(k)];
      if (k > 0) {
        int last_pants = 2 * kShell * k;  // S_{k-1} holds pants 0..last_pants
        for (int s = begin; s < end; ++s)
          for (int pnt : gen::window_pants(p.word[static_cast<std::size_t>(s)].index))
            if (pnt <= last_pants) ++early_change;
        for (int s = begin; s <= end; ++s)
          for (int i = 1; i <= 4; ++i)
            if (!agrees(m, i, p.states[static_cast<std::size_t>(s)], p.states[static_cast<std::size_t>(begin)], k - 1))
              ++early_change;
        for (int i = 1; i <= 4; ++i) {
          auto h = dhat(m, i, p.states[static_cast<std::size_t>(end)], y);
          if (!h.defined() || !(h.value < Rational(1, k))) ++dhat_bad;
        }
      }
      for (int j = 0; j <= m.boundary_index(k); ++j)
        if (p.states[static_cast<std::size_t>(end)].at(j) != y.at(j)) ++mismatch;
    }
  }
  return {fixtures >= kPathFixtures && early_change == 0 && dhat_bad == 0 && mismatch == 0,
          fmt({{"fixtures", fixtures}, {"rejected_targets", rejected}, {"early_changes", early_change},
               {"dhat_bad", dhat_bad}, {"stage_mismatch", mismatch}})};
}

// ---------------------------------------------------------------- 8
oracle::Slope to_oracle(LocalSlope s) { return oracle::Slope::make(s.q, s.p); }

Result oracle_equivalence() {
  auto& m = model();
  auto t0 = std::chrono::steady_clock::now();
  long long windows = 0, vertices = 0, move_bad = 0;
  for (int j : {0, 2, 5, 3, 4, 7}) {
    auto g = oracle::brute_pants_graph({m.window_kind(j)}, kOracleHeight);
    ++windows;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      auto sl = g.vertices[v][0];
      auto x = PantsDecomposition{}.with(m, j, sl.q == 0 ? LocalSlope::base() : LocalSlope::make(sl.q, sl.p));
      std::set<oracle::Slope> engine, brute;
      for (auto& mv : enumerate_moves_at(m, x, j, static_cast<int>(kOracleHeight)).moves) engine.insert(to_oracle(mv.to));
      for (int u : g.adjacency[v]) brute.insert(g.vertices[static_cast<std::size_t>(u)][0]);
      if (engine != brute) ++move_bad;
      ++vertices;
    }
  }

  // Pants-graph BFS over the engine's moves near two disjoint torus windows.
  const std::vector<int> windowed_at{2, 5};
  const std::vector<int> indices{1, 2, 3, 4, 5, 6, 7};
  auto neighbours = [&](const PantsDecomposition& x) {
    std::vector<PantsDecomposition> out;
    for (int j : indices)
      for (auto& mv : enumerate_moves_at(m, x, j, static_cast<int>(kOracleHeight)).moves) out.push_back(apply_move(m, x, mv));
    return out;
  };
  std::vector<PantsDecomposition> windowed;
  for (auto a : gen::slopes(2))
    for (auto b : gen::slopes(2)) windowed.push_back(PantsDecomposition{}.with(m, 2, a).with(m, 5, b));
  gen::Rng r(kSeed + 8);
  long long pairs = 0, dist_bad = 0;
  while (pairs < kProductPairs) {
    auto u = windowed[static_cast<std::size_t>(r.range(0, static_cast<int>(windowed.size()) - 1))];
    std::map<PantsDecomposition, int> d{{u, 0}};
    std::deque<PantsDecomposition> q{u};
    while (!q.empty()) {
      auto x = q.front();
      q.pop_front();
      if (d[x] == kProductMaxDistance) continue;
      for (auto& y : neighbours(x))
        if (d.emplace(y, d[x] + 1).second) q.push_back(y);
    }
    for (int s = 0; s < 25 && pairs < kProductPairs; ++s) {
      auto v = windowed[static_cast<std::size_t>(r.range(0, static_cast<int>(windowed.size()) - 1))];
      oracle::Windowed a, b;
      for (int j : windowed_at) {
        a[j] = to_oracle(u.at(j));
        b[j] = to_oracle(v.at(j));
      }
      int expected = oracle::product_distance(a, b);
      if (expected > kProductMaxDistance) continue;
      ++pairs;
      auto it = d.find(v);
      if (it == d.end() || it->second != expected) ++dist_bad;
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {move_bad == 0 && dist_bad == 0 && secs < kOracleSeconds,
          fmt({{"windows", windows}, {"vertices", vertices}, {"move_set_mismatch", move_bad}, {"distance_pairs", pairs},
               {"distance_mismatch", dist_bad}})};
}

// ---------------------------------------------------------------- 9
PantsDecomposition far_move(const PantsDecomposition& x, int n, LocalSlope s = LocalSlope::make(1, 1)) {
  int j = model().boundary_index(n) + 4;
  while (!gen::torus_index(j)) ++j;
  return x.with(model(), j, s);
}

Result pants_space() {
  auto& m = model();
  gen::Rng r(kSeed + 9);
  long long entry_fixtures = 0, entry_bad = 0;
  const Rational eps_list[] = {Rational(1), Rational(1, 2), Rational(1, 3)};
  auto check_entry = [&](int level, const PointStream& s, const PantsPoint& p) {
    ++entry_fixtures;
    if (!converges(m, level, s, p).ok) ++entry_bad;
    for (auto eps : eps_list) {
      auto k = entry_index(m, s, eps);
      if (!k) {
        ++entry_bad;
        continue;
      }
      for (std::size_t j = static_cast<std::size_t>(*k); j < s.prefix.size(); ++j)
        if (!in_basic_open(m, level, eps, p, s.prefix[j].point(m))) ++entry_bad;
    }
  };
  long long path_fixtures = 0, path_bad = 0;
  for (int level = 1; level <= 4; ++level)
    for (int t = 0; t < 6; ++t) {
      auto x = gen::walk(m, r, PantsDecomposition{}, r.range(0, 2), 8);
      auto y = gen::step(m, r, x, 2, 8);
      if (y == x) continue;
      Rational a(r.range(1, 5), 6);
      auto start = gen::tail(r);
      check_entry(level, density_stream(m, start, x, a, y, 4), PantsPoint::normalize(m, x, a, y));
      PathFunction f(m, x, start);
      ++path_fixtures;
      if (!(f.at(Rational(0)) == PantsPoint::vertex(x)) || !(f.at(Rational(1)) == PantsPoint::vertex(start))) ++path_bad;
      auto vs = f.vertex_stream(level, 3);
      if (!converges(m, level, vs, PantsPoint::vertex(start)).ok) ++path_bad;
      check_entry(level, vs, PantsPoint::vertex(start));
    }

  // Agreement classes are equal or disjoint: probes land in both only when the classes coincide.
  long long aset_bad = 0;
  for (int level = 1; level <= 4; ++level)
    for (int t = 0; t < kASetPairs / 4; ++t) {
      int n = r.range(0, 2);
      auto x = gen::walk(m, r, PantsDecomposition{}, r.range(0, 4), 20);
      auto y = gen::walk(m, r, x, r.range(0, 3), 40);
      bool same = agrees(m, level, x, y, n);
      for (int s = 0; s < 4; ++s) {
        auto z = gen::walk(m, r, r.coin() ? x : y, r.range(0, 2), 40);
        bool in_x = agrees(m, level, z, x, n), in_y = agrees(m, level, z, y, n);
        if (same ? in_x != in_y : in_x && in_y) ++aset_bad;
      }
    }

  // Separation: certified disjointness, centres inside, and no probe in both opens.
  long long sep_pairs = 0, sep_bad = 0;
  std::set<std::string> seen;
  auto random_point = [&](const PantsDecomposition& x) {
    auto y = gen::step(m, r, x, 0, 12);
    if (y == x || r.coin(30)) return PantsPoint::vertex(x);
    return PantsPoint::normalize(m, x, Rational(r.range(1, 7), 8), y);
  };
  while (sep_pairs < kSeparationPairs) {
    int level = r.range(1, 4);
    auto p = random_point(gen::walk(m, r, PantsDecomposition{}, r.range(0, 3), 12));
    auto q = r.coin() ? random_point(p.x()) : random_point(gen::walk(m, r, PantsDecomposition{}, r.range(0, 3), 12));
    if (p == q) continue;
    auto key = p.to_json(m).dump() + "|" + q.to_json(m).dump() + std::to_string(level);
    if (!seen.insert(key).second) continue;
    ++sep_pairs;
    auto w = separation_witness(m, level, p, q);
    if (!certified_disjoint(w.around_p, w.around_q) || !contains(m, w.around_p, p) || !contains(m, w.around_q, q))
      ++sep_bad;
    for (int s = 0; s < 10; ++s) {
      auto base = r.coin() ? p : q;
      PantsPoint probe = base.is_vertex() ? PantsPoint::vertex(far_move(base.x(), w.n))
                                          : PantsPoint::normalize(m, far_move(base.x(), w.n), base.a(), far_move(base.y(), w.n));
      if (contains(m, w.around_p, probe) && contains(m, w.around_q, probe)) ++sep_bad;
    }
  }

  // Closure against the closed-interval reading around an edge point (X, a, Y).
  long long probes = 0, closure_bad = 0;
  PantsDecomposition X;
  auto Y = X.with(m, 2, LocalSlope::make(1, 0));
  auto W = X.with(m, 2, LocalSlope::make(1, 1));
  for (int level = 1; level <= 4; ++level)
    for (int t = 0; t < kClosureProbes / 2; ++t) {
      int n = r.range(1, 2);
      Rational eps(1, r.range(3, 6)), a(r.range(1, 11), 12), b(r.range(1, 11), 12);
      auto p = PantsPoint::normalize(m, X, a, Y);
      bool shift = r.coin();
      auto xs = shift ? far_move(X, n) : X, ys = shift ? far_move(Y, n) : Y, ws = shift ? far_move(W, n) : W;
      bool expected = false, got = false;
      switch (t % 3) {
        case 0:
          expected = abs(b - a) <= eps;
          got = in_closure(m, level, eps, n, p, PantsPoint::normalize(m, xs, b, ys));
          break;
        case 1:
          expected = a + b <= eps;
          got = in_closure(m, level, eps, n, p, PantsPoint::normalize(m, xs, b, ws));
          break;
        default:
          expected = a <= eps;
          got = in_closure(m, level, eps, n, p, PantsPoint::vertex(xs));
      }
      ++probes;
      if (expected != got) ++closure_bad;
    }

  bool ok = entry_bad == 0 && aset_bad == 0 && sep_pairs >= kSeparationPairs && sep_bad == 0 &&
            probes >= kClosureProbes && closure_bad == 0 && path_bad == 0 && path_fixtures > 0;
  return {ok, fmt({{"entry_fixtures", entry_fixtures}, {"entry_bad", entry_bad}, {"aset_bad", aset_bad},
                   {"separated_pairs", sep_pairs}, {"separation_bad", sep_bad}, {"closure_probes", probes},
                   {"closure_bad", closure_bad}, {"path_fixtures", path_fixtures}, {"path_bad", path_bad}})};
}

// ---------------------------------------------------------------- 10
TwistProfile random_profile(gen::Rng& r, bool finite) {
  std::map<int, long long> ov;
  for (int t = r.range(0, 3); t > 0; --t) ov[r.range(0, 30)] = r.range(-3, 3);
  std::vector<long long> period{0};
  if (!finite) {
    period.clear();
    for (int t = r.range(1, 3); t > 0; --t) period.push_back(r.range(-2, 2));
  }
  return TwistProfile::make(ov, period);
}

Result continuity() {
  auto& m = model();
  gen::Rng r(kSeed + 10);
  long long base_bad = 0, fixtures = 0, cont_bad = 0, comp_bad = 0;
  for (int t = 0; t < kProfiles; ++t) {
    auto f = random_profile(r, r.coin());
    if (!(act_on_decomposition(m, f, PantsDecomposition{}) == PantsDecomposition{})) ++base_bad;
    for (int j = 0; j < 40; ++j)
      if (!(act_on_curve(m, f, Curve::base(j)) == Curve::base(j))) ++base_bad;
  }
  for (int level = 1; level <= 4; ++level)
    for (int t = 0; t < kContinuityFixtures; ++t) {
      auto f = random_profile(r, false);
      auto x = gen::walk(m, r, PantsDecomposition{}, r.range(0, 2), 8);
      auto y = gen::step(m, r, x, 2, 8);
      if (y == x) y = gen::step(m, r, x, 2, 2);
      if (y == x) continue;
      Rational a(r.range(1, 3), 4);
      auto points = density_stream(m, gen::tail(r), x, a, y, 4);
      auto rep = action_continuity_test(m, level, truncation_stream(m, f, 4), points, f, PantsPoint::normalize(m, x, a, y));
      ++fixtures;
      if (!rep.verdict.ok || !(rep.image_limit == act_on_point(m, f, PantsPoint::normalize(m, x, a, y)))) ++cont_bad;
    }
  for (int t = 0; t < 5 * kProfiles; ++t) {
    auto f = random_profile(r, true);
    auto x = gen::walk(m, r, PantsDecomposition{}, r.range(0, 6), 30);
    auto fx = act_on_decomposition(m, f, x);
    if (!same_component(x, fx)) ++comp_bad;
    for (int j : differing(x, fx))
      if (f.exponent(j) == 0) ++comp_bad;
  }
  return {base_bad == 0 && fixtures >= 4 * kContinuityFixtures - 8 && fixtures >= kContinuityFixtures && cont_bad == 0 &&
              comp_bad == 0,
          fmt({{"profiles", kProfiles}, {"base_moved", base_bad}, {"continuity_fixtures", fixtures},
               {"continuity_bad", cont_bad}, {"component_bad", comp_bad}})};
}

}  // namespace

int main() {
  run(1, "agreement hierarchy", hierarchy);
  run(2, "separating fixtures", separating);
  run(3, "equivalence and buckets", equivalence);
  run(4, "metric axioms", metric);
  run(5, "gap lower bound", gap);
  run(6, "non-ultrametricity", non_ultrametric);
  run(7, "converging path", converging);
  run(8, "oracle equivalence", oracle_equivalence);
  run(9, "pants-space coherence", pants_space);
  run(10, "action continuity", continuity);
  std::printf("acceptance: %d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
