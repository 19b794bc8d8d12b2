#include "pantsgraph/pants_space.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pg {

PantsPoint PantsPoint::vertex(PantsDecomposition x) {
  PantsPoint p;
  p.x_ = std::move(x);
  return p;
}

PantsPoint PantsPoint::normalize(const SurfaceModel& model, PantsDecomposition x, Rational a, PantsDecomposition y) {
  if (a < Rational(0) || a > Rational(1)) throw std::invalid_argument("edge parameter must lie in [0,1]");
  if (a == Rational(0)) return vertex(std::move(x));
  if (a == Rational(1)) return vertex(std::move(y));
  if (!adjacent(model, x, y)) throw std::invalid_argument("edge endpoints are not related by an elementary move");
  PantsPoint p;
  p.edge_ = true;
  if (y.canonical() < x.canonical()) {
    std::swap(x, y);
    a = Rational(1) - a;
  }
  p.x_ = std::move(x);
  p.y_ = std::move(y);
  p.a_ = a;
  return p;
}

nlohmann::json PantsPoint::to_json(const SurfaceModel& model) const {
  if (is_vertex()) return {{"vertex", x_.to_json(model)}};
  return {{"edge", nlohmann::json::array({x_.to_json(model), to_string(a_), y_.to_json(model)})}};
}

PantsPoint PantsPoint::from_json(const SurfaceModel& model, const nlohmann::json& j) {
  if (j.contains("vertex")) return vertex(PantsDecomposition::from_json(model, j.at("vertex")));
  const auto& e = j.at("edge");
  if (!e.is_array() || e.size() != 3) throw std::invalid_argument("edge literal needs [X, a, Y]");
  return normalize(model, PantsDecomposition::from_json(model, e[0]), parse_rational(e[1].get<std::string>()),
                   PantsDecomposition::from_json(model, e[2]));
}

bool point_agrees(const SurfaceModel& model, int level, const PantsPoint& p, const PantsPoint& q, int n) {
  if (p.is_vertex() != q.is_vertex()) return false;
  if (p.is_vertex()) return agrees(model, level, p.x(), q.x(), n);
  if (p.a() == q.a() && agrees(model, level, p.x(), q.x(), n) && agrees(model, level, p.y(), q.y(), n)) return true;
  return p.a() == Rational(1) - q.a() && agrees(model, level, p.x(), q.y(), n) &&
         agrees(model, level, p.y(), q.x(), n);
}

// ---------------------------------------------------------------- regions

bool Interval::contains(Rational v) const {
  bool above = lo_closed ? v >= lo : v > lo;
  bool below = hi_closed ? v <= hi : v < hi;
  return above && below;
}

bool Interval::empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }

namespace {

Interval unit_open() { return {Rational(0), Rational(1), false, false}; }

Interval clipped(Rational lo, Rational hi, bool closed) {
  Interval r{lo, hi, closed, closed};
  if (r.lo <= Rational(0)) r = {Rational(0), r.hi, false, r.hi_closed};
  if (r.hi >= Rational(1)) r = {r.lo, Rational(1), r.lo_closed, false};
  return r;
}

Interval flipped(const Interval& i) { return {Rational(1) - i.hi, Rational(1) - i.lo, i.hi_closed, i.lo_closed}; }

bool intervals_disjoint(const Interval& a, const Interval& b) {
  Interval m;
  if (a.lo != b.lo) m.lo = std::max(a.lo, b.lo), m.lo_closed = a.lo > b.lo ? a.lo_closed : b.lo_closed;
  else m.lo = a.lo, m.lo_closed = a.lo_closed && b.lo_closed;
  if (a.hi != b.hi) m.hi = std::min(a.hi, b.hi), m.hi_closed = a.hi < b.hi ? a.hi_closed : b.hi_closed;
  else m.hi = a.hi, m.hi_closed = a.hi_closed && b.hi_closed;
  return m.empty();
}

void add_endpoint_regions(std::vector<Region>& out, const std::string& key, Rational reach, bool closed, int side) {
  out.push_back({Region::Kind::Vertices, key, std::nullopt, {}, side});
  out.push_back({Region::Kind::Edges, key, key, unit_open(), side});
  if (reach > Rational(0)) out.push_back({Region::Kind::Branch, key, std::nullopt, {Rational(0), reach, false, closed}, side});
}

struct KeyCache {
  const SurfaceModel& model;
  int level, n;
  std::map<std::string, std::string> memo;
  const std::string& operator()(const PantsDecomposition& x) {
    auto c = x.canonical();
    auto it = memo.find(c);
    if (it == memo.end()) it = memo.emplace(c, ball_key(model, level, n, x)).first;
    return it->second;
  }
};

// Is there an edge (X', ·, Y') of the center's class with Y' ≠ V, X' = U?
bool branch_witness(const SurfaceModel& model, const Neighborhood& nb, int side, const PantsDecomposition& u,
                    const PantsDecomposition& v, KeyCache& key) {
  const PantsDecomposition& x = side == 0 ? nb.center.x() : nb.center.y();
  const PantsDecomposition& y = side == 0 ? nb.center.y() : nb.center.x();
  const std::string key_y = key(y);
  int jp = symmetric_difference(model, x, y).indices.at(0);
  std::vector<std::pair<int, LocalSlope>> tries{{jp, y.at(jp)}, {jp, x.at(jp)}};
  for (int f : {1, 4, 7})
    for (LocalSlope s : {LocalSlope{1, 0}, LocalSlope{1, 1}, LocalSlope{1, -1}})
      tries.push_back({model.boundary_index(nb.n) + f, s});
  for (auto& [j, s] : tries) {
    if (u.at(j) == s) continue;
    PantsDecomposition cand;
    try {
      cand = u.with(model, j, s);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (cand != v && adjacent(model, u, cand) && key(cand) == key_y) return true;
  }
  return false;
}

}  // namespace

Neighborhood neighborhood(const SurfaceModel& model, int level, Rational eps, int n, const PantsPoint& p,
                          bool closed) {
  if (eps <= Rational(0) || eps > Rational(1)) throw std::invalid_argument("neighborhood radius must satisfy 0 < eps <= 1");
  if (n < 0) throw std::invalid_argument("exhaustion index must be non-negative");
  Neighborhood nb{level, n, eps, closed, p, {}};
  std::string kx = ball_key(model, level, n, p.x());
  if (p.is_vertex()) {
    nb.regions.push_back({Region::Kind::Vertices, kx, std::nullopt, {}, 0});
    nb.regions.push_back({Region::Kind::Edges, kx, kx, unit_open(), 0});
    nb.regions.push_back({Region::Kind::Edges, kx, std::nullopt, {Rational(0), eps, false, closed}, 0});
    return nb;
  }
  std::string ky = ball_key(model, level, n, p.y());
  Rational a = p.a(), b = Rational(1) - p.a();
  nb.regions.push_back({Region::Kind::Edges, kx, ky, clipped(a - eps, a + eps, closed), 0});
  if (closed ? a <= eps : a < eps) add_endpoint_regions(nb.regions, kx, eps - a, closed, 0);
  if (closed ? b <= eps : b < eps) add_endpoint_regions(nb.regions, ky, eps - b, closed, 1);
  return nb;
}

bool contains(const SurfaceModel& model, const Neighborhood& nb, const PantsPoint& q) {
  KeyCache key{model, nb.level, nb.n, {}};
  for (const Region& r : nb.regions) {
    if (r.kind == Region::Kind::Vertices) {
      if (q.is_vertex() && key(q.x()) == r.first_key) return true;
      continue;
    }
    if (q.is_vertex()) continue;
    for (int flip = 0; flip < 2; ++flip) {
      const PantsDecomposition& u = flip ? q.y() : q.x();
      const PantsDecomposition& v = flip ? q.x() : q.y();
      Rational c = flip ? Rational(1) - q.a() : q.a();
      if (key(u) != r.first_key || !r.range.contains(c)) continue;
      if (r.second_key && key(v) != *r.second_key) continue;
      if (r.kind == Region::Kind::Branch && !branch_witness(model, nb, r.side, u, v, key)) continue;
      return true;
    }
  }
  return false;
}

bool in_open(const SurfaceModel& model, int level, Rational eps, int n, const PantsPoint& p, const PantsPoint& q) {
  return contains(model, neighborhood(model, level, eps, n, p), q);
}

bool in_basic_open(const SurfaceModel& model, int level, Rational eps, const PantsPoint& p, const PantsPoint& q) {
  if (eps <= Rational(0)) throw std::invalid_argument("radius must be positive");
  Rational inv = Rational(1) / eps;
  int n = static_cast<int>(inv.numerator() / inv.denominator());
  return in_open(model, level, eps, n, p, q);
}

bool in_closure(const SurfaceModel& model, int level, Rational eps, int n, const PantsPoint& p, const PantsPoint& q) {
  if (p.is_vertex()) {
    if (eps <= Rational(0) || eps > Rational(1, 2)) throw std::invalid_argument("closure formula for a vertex needs 0 < eps <= 1/2");
  } else {
    Rational a = p.a();
    if (eps <= Rational(0) || eps >= std::max(a, Rational(1) - a))
      throw std::invalid_argument("closure formula for an edge point needs 0 < eps < max(a, 1-a)");
    if (n < 1 || agrees(model, level, p.x(), p.y(), n))
      throw std::invalid_argument("closure formula for an edge point needs n >= 1 separating its endpoints");
  }
  return contains(model, neighborhood(model, level, eps, n, p, true), q);
}

bool certified_disjoint(const Neighborhood& a, const Neighborhood& b) {
  if (a.level != b.level || a.n != b.n) return false;
  for (const Region& r : a.regions)
    for (const Region& s : b.regions) {
      bool rv = r.kind == Region::Kind::Vertices, sv = s.kind == Region::Kind::Vertices;
      if (rv != sv) continue;
      if (rv) {
        if (r.first_key == s.first_key) return false;
        continue;
      }
      auto differ = [](const std::string& k, const std::optional<std::string>& l) { return l && *l != k; };
      bool same_orientation = r.first_key != s.first_key || (r.second_key && s.second_key && *r.second_key != *s.second_key) ||
                              intervals_disjoint(r.range, s.range);
      bool opposite = differ(r.first_key, s.second_key) || differ(s.first_key, r.second_key) ||
                      intervals_disjoint(r.range, flipped(s.range));
      if (!same_orientation || !opposite) return false;
    }
  return true;
}

Separation separation_witness(const SurfaceModel& model, int level, const PantsPoint& p, const PantsPoint& q) {
  if (p == q) throw std::invalid_argument("separation needs distinct points");
  std::vector<Rational> radii;
  for (int m = 1; m <= 16; ++m) radii.push_back(Rational(1, m));
  auto add_edge_radii = [&](const PantsPoint& e) {
    if (e.is_edge()) radii.push_back(std::min(e.a(), Rational(1) - e.a()) / 2);
  };
  add_edge_radii(p);
  add_edge_radii(q);
  if (p.is_edge() && q.is_edge() && p.a() != q.a()) {
    Rational d = p.a() - q.a();
    radii.push_back((d < Rational(0) ? -d : d) / 3);
  }
  std::sort(radii.begin(), radii.end(), [](Rational a, Rational b) { return a > b; });
  int top = 2;
  std::vector<PantsDecomposition> ends{p.x(), q.x()};
  if (p.is_edge()) ends.push_back(p.y());
  if (q.is_edge()) ends.push_back(q.y());
  for (std::size_t s = 0; s < ends.size(); ++s)
    for (std::size_t t = s + 1; t < ends.size(); ++t)
      if (ends[s] != ends[t]) top = std::max(top, auto_probe_depth(model, ends[s], ends[t]) + 1);
  for (int n = 0; n <= top; ++n)
    for (Rational eps : radii) {
      Neighborhood np = neighborhood(model, level, eps, n, p), nq = neighborhood(model, level, eps, n, q);
      if (certified_disjoint(np, nq)) return {eps, n, np, nq};
    }
  throw std::runtime_error("no certified separation found within the search range");
}

// ---------------------------------------------------------------- streams

PantsPoint PointTerm::point(const SurfaceModel& model) const {
  if (a == Rational(0)) return PantsPoint::vertex(x);
  return PantsPoint::normalize(model, x, a, y);
}

namespace {

std::string check_stable(const SurfaceModel& model, int level, const std::vector<PointTerm>& prefix,
                         const std::vector<int>& stable, const PantsDecomposition& limit, bool use_y,
                         const char* name) {
  for (std::size_t k = 0; k < stable.size(); ++k) {
    int nk = stable[k];
    if (nk < 0 || nk >= static_cast<int>(prefix.size()))
      return std::string(name) + " stabilization index outside the prefix at k=" + std::to_string(k);
    if (k > 0 && nk < stable[k - 1]) return std::string(name) + " stabilization decreases at k=" + std::to_string(k);
    for (std::size_t j = nk; j < prefix.size(); ++j) {
      const PantsDecomposition& term = use_y ? prefix[j].y : prefix[j].x;
      if (!agrees(model, level, term, limit, static_cast<int>(k)))
        return std::string(name) + " term " + std::to_string(j) + " disagrees with the limit on S_" +
               std::to_string(k);
    }
  }
  return "";
}

}  // namespace

Verdict converges(const SurfaceModel& model, int level, const PointStream& s, const PantsPoint& p) {
  Verdict v;
  v.clause = s.clause;
  auto fail = [&](std::string why) {
    v.ok = false;
    v.reason = std::move(why);
    return v;
  };
  if (s.prefix.empty()) return fail("empty prefix");
  if (s.x_stable.empty()) return fail("certificate has no stabilization data");
  for (std::size_t j = 0; j < s.prefix.size(); ++j) {
    const PointTerm& t = s.prefix[j];
    if (t.a < Rational(0) || t.a >= Rational(1)) return fail("term " + std::to_string(j) + " has parameter outside [0,1)");
    if ((t.a > Rational(0) || t.x != t.y) && !adjacent(model, t.x, t.y))
      return fail("term " + std::to_string(j) + " does not lie on an edge");
  }
  std::string err;
  switch (s.clause) {
    case 1: {
      PantsPoint lim = s.limit_a == Rational(0) ? PantsPoint::vertex(s.limit_x)
                                      : PantsPoint::normalize(model, s.limit_x, s.limit_a, s.limit_y);
      if (!(lim == p)) return fail("certificate limit representation is not the target point");
      err = check_stable(model, level, s.prefix, s.x_stable, s.limit_x, false, "X");
      if (err.empty()) err = check_stable(model, level, s.prefix, s.y_stable, s.limit_y, true, "Y");
      for (std::size_t k = 0; err.empty() && k < s.a_stable.size(); ++k)
        for (std::size_t j = s.a_stable[k]; j < s.prefix.size(); ++j) {
          Rational d = s.prefix[j].a - s.limit_a;
          if ((d < Rational(0) ? -d : d) > Rational(1, static_cast<long>(k) + 1)) {
            err = "parameter of term " + std::to_string(j) + " is not within 1/" + std::to_string(k + 1);
            break;
          }
        }
      break;
    }
    case 2:
      if (!p.is_vertex() || s.limit_x != p.x()) return fail("clause 2 needs a vertex limit");
      err = check_stable(model, level, s.prefix, s.x_stable, p.x(), false, "X");
      for (std::size_t k = 0; err.empty() && k < s.a_stable.size(); ++k)
        for (std::size_t j = s.a_stable[k]; j < s.prefix.size(); ++j)
          if (s.prefix[j].a > Rational(1, static_cast<long>(k) + 1)) {
            err = "parameter of term " + std::to_string(j) + " exceeds 1/" + std::to_string(k + 1);
            break;
          }
      break;
    case 3:
      if (!p.is_vertex() || s.limit_x != p.x()) return fail("clause 3 needs a vertex limit");
      err = check_stable(model, level, s.prefix, s.x_stable, p.x(), false, "X");
      if (err.empty()) err = check_stable(model, level, s.prefix, s.y_stable, p.x(), true, "Y");
      break;
    default: return fail("unknown clause");
  }
  if (!err.empty()) return fail(err);
  v.ok = true;
  return v;
}

std::optional<int> entry_index(const SurfaceModel& model, const PointStream& s, Rational eps) {
  (void)model;
  Rational inv = Rational(1) / eps;
  std::size_t n = static_cast<std::size_t>(inv.numerator() / inv.denominator());
  auto need = [&](const std::vector<int>& v) -> std::optional<int> {
    if (v.size() <= n) return std::nullopt;
    return v[n];
  };
  std::vector<std::optional<int>> parts{need(s.x_stable)};
  if (s.clause != 2) parts.push_back(need(s.y_stable));
  if (s.clause != 3) parts.push_back(need(s.a_stable));
  int out = 0;
  for (auto& p : parts) {
    if (!p) return std::nullopt;
    out = std::max(out, *p);
  }
  return out;
}

PointStream density_stream(const SurfaceModel& model, const PantsDecomposition& start, const PantsDecomposition& x,
                           Rational a, const PantsDecomposition& y, int depth) {
  auto diff = symmetric_difference(model, x, y);
  if (diff.infinite || diff.indices.size() != 1) throw std::invalid_argument("density stream needs an edge");
  int jp = diff.indices[0];
  int reach = jp;
  for (int k : model.adjacent_indices(jp)) reach = std::max(reach, k);
  ConvergePath path = converge_path(model, start, x, depth);
  PointStream s;
  s.clause = 1;
  s.limit_x = x;
  s.limit_y = y;
  s.limit_a = a;
  int first = -1;
  for (int n = 0; n <= depth; ++n) {
    if (model.boundary_index(n) < reach) continue;
    if (first < 0) first = n;
    const PantsDecomposition& xn = path.states[path.stage_ends[n]];
    s.prefix.push_back({xn, xn.with(model, jp, y.at(jp)), a});
  }
  if (first < 0) throw std::invalid_argument("depth too small to reach the edge");
  for (int k = 0; k <= depth; ++k) {
    s.x_stable.push_back(std::max(k, first) - first);
    s.y_stable.push_back(std::max(k, first) - first);
    s.a_stable.push_back(0);
  }
  return s;
}

PathFunction::PathFunction(const SurfaceModel& model, PantsDecomposition x, PantsDecomposition y)
    : model_(model), x_(std::move(x)), y_(std::move(y)), depth_(-1) {
  path_.states.push_back(x_);
  finished_ = x_ == y_;
}

void PathFunction::extend_to(std::size_t needed) {
  while (path_.states.size() < needed && !finished_) {
    if (++depth_ > 64) throw std::runtime_error("path extension exceeded 64 stages");
    path_ = converge_path(model_, x_, y_, depth_);
    finished_ = path_.states.back() == y_;
  }
}

PantsPoint PathFunction::at(Rational t) {
  if (t < Rational(0) || t > Rational(1)) throw std::invalid_argument("path parameter must lie in [0,1]");
  if (t == Rational(1)) return PantsPoint::vertex(y_);
  Rational inv = Rational(1) / (Rational(1) - t);
  long n = static_cast<long>(inv.numerator() / inv.denominator());
  extend_to(static_cast<std::size_t>(n) + 1);
  auto state = [&](long m) -> const PantsDecomposition& {
    return static_cast<std::size_t>(m) <= path_.states.size() ? path_.states[m - 1] : y_;
  };
  Rational start = Rational(1) - Rational(1, n);
  if (t == start) return PantsPoint::vertex(state(n));
  if (state(n) == state(n + 1)) return PantsPoint::vertex(state(n));
  Rational s = (t - start) * Rational(n) * Rational(n + 1);
  return PantsPoint::normalize(model_, state(n), s, state(n + 1));
}

PointStream PathFunction::vertex_stream(int level, int depth) {
  (void)level;
  ConvergePath cp = converge_path(model_, x_, y_, depth);
  PointStream s;
  s.clause = 2;
  s.limit_x = y_;
  s.limit_y = y_;
  for (auto& st : cp.states) s.prefix.push_back({st, st, Rational(0)});
  for (int k = 0; k <= depth; ++k) {
    s.x_stable.push_back(cp.stage_ends[k]);
    s.a_stable.push_back(0);
  }
  return s;
}

std::pair<std::string, std::string> edge_class(const PantsPoint& p) {
  if (!p.is_edge()) throw std::invalid_argument("edge class needs an edge point");
  return {p.x().canonical(), p.y().canonical()};
}

}  // namespace pg
