#include "pantsgraph/vertex_metric.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace pg {

std::string DHat::str() const {
  switch (kind) {
    case Kind::Value: return to_string(value);
    case Kind::Below: return "<" + to_string(value);
    default: return "undefined";
  }
}

int auto_probe_depth(const SurfaceModel& model, const PantsDecomposition& x, const PantsDecomposition& y) {
  auto d = symmetric_difference(model, x, y);
  if (d.indices.empty()) return 0;
  return model.first_level_meeting_index(d.indices.front()) + 2;
}

DHat dhat(const SurfaceModel& model, int level, const PantsDecomposition& x, const PantsDecomposition& y,
          int n_max) {
  if (x == y) return {DHat::Kind::Value, Rational(0)};
  if (n_max < 0) n_max = auto_probe_depth(model, x, y);
  AgreementDepth a = max_agreement(model, level, x, y, n_max);
  switch (a.kind) {
    case AgreementDepth::Kind::Exact: return {DHat::Kind::Value, Rational(1, a.n + 1)};
    case AgreementDepth::Kind::AtLeast: return {DHat::Kind::Below, Rational(1, n_max + 1)};
    default:
      if (adjacent(model, x, y)) return {DHat::Kind::Value, Rational(1)};
      return {DHat::Kind::Undefined, Rational(0)};
  }
}

UltrametricVerdict ultrametric_check(const SurfaceModel& model, int level, const PantsDecomposition& x,
                                     const PantsDecomposition& y, const PantsDecomposition& z) {
  DHat a = dhat(model, level, x, y), b = dhat(model, level, y, z), c = dhat(model, level, x, z);
  if (!a.defined() || !b.defined() || !c.defined()) throw std::domain_error("not applicable: some d̂ is undefined");
  return {a.value, b.value, c.value, c.value <= std::max(a.value, b.value)};
}

namespace {

std::set<int> union_window(const SurfaceModel& model, const PantsDecomposition& x, const PantsDecomposition& y,
                           int j) {
  auto a = window_of(model, x, j).pants;
  auto b = window_of(model, y, j).pants;
  a.insert(b.begin(), b.end());
  return a;
}

int level_of(const SurfaceModel& model, const std::set<int>& pants) {
  return model.least_level_containing({pants.begin(), pants.end()});
}

}  // namespace

LowerBound lower_bound(const SurfaceModel& model, int level, const PantsDecomposition& x,
                       const PantsDecomposition& y) {
  if (dhat(model, level, x, y).kind != DHat::Kind::Undefined)
    throw std::invalid_argument("lower bound applies only when d̂ is undefined");
  auto d = symmetric_difference(model, x, y);
  int n = 0;
  if (d.indices.size() == 1) {
    n = level_of(model, union_window(model, x, y, d.indices[0]));
  } else {
    n = INT32_MAX;
    for (std::size_t a = 0; a < d.indices.size(); ++a)
      for (std::size_t b = a + 1; b < d.indices.size(); ++b) {
        auto w = union_window(model, x, y, d.indices[a]);
        auto v = union_window(model, x, y, d.indices[b]);
        w.insert(v.begin(), v.end());
        n = std::min(n, level_of(model, w));
      }
  }
  return {Rational(1) + Rational(1, std::max(n, 1)), n};
}

std::optional<Rational> path_length(const SurfaceModel& model, int level,
                                    const std::vector<PantsDecomposition>& path) {
  Rational total(0);
  for (std::size_t s = 1; s < path.size(); ++s) {
    DHat h = dhat(model, level, path[s - 1], path[s]);
    if (!h.defined()) return std::nullopt;
    total += h.value;
  }
  return total;
}

std::vector<LocalSlope> farey_path(LocalSlope from, LocalSlope to, long long height_bound) {
  height_bound = std::max({height_bound, from.height(), to.height()});
  std::map<LocalSlope, LocalSlope> parent;
  std::deque<LocalSlope> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    LocalSlope s = queue.front();
    queue.pop_front();
    if (s == to) break;
    for (long long p = 0; p <= height_bound; ++p)
      for (long long q = -height_bound; q <= height_bound; ++q) {
        if (p == 0 && q != 1) continue;
        if (std::gcd(p, q < 0 ? -q : q) != 1) continue;
        LocalSlope t{p, q};
        if (parent.count(t) || !slopes_adjacent(s, t)) continue;
        parent[t] = s;
        queue.push_back(t);
      }
  }
  if (!parent.count(to)) throw std::runtime_error("farey path: height bound too small");
  std::vector<LocalSlope> out{to};
  while (out.back() != from) out.push_back(parent[out.back()]);
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

// Unit moves turning index j of `cur` into `target`, clearing conflicting neighbours above `floor`.
void fix_index(const SurfaceModel& model, std::vector<PantsDecomposition>& states, std::vector<ElementaryMove>* word,
               int j, LocalSlope target, int floor) {
  auto step = [&](int idx, LocalSlope goal) {
    auto path = farey_path(states.back().at(idx), goal, 3);
    for (std::size_t s = 1; s < path.size(); ++s) {
      ElementaryMove m{idx, path[s - 1], path[s], model.window_kind(idx)};
      states.push_back(apply_move(model, states.back(), m));
      if (word) word->push_back(m);
    }
  };
  if (states.back().at(j) == target) return;
  for (int k : model.adjacent_indices(j))
    if (!states.back().at(k).is_base()) {
      if (k <= floor) throw std::logic_error("conflict inside the frozen region");
      step(k, LocalSlope::base());
    }
  step(j, target);
}

std::vector<PantsDecomposition> walk(const SurfaceModel& model, const PantsDecomposition& from,
                                     const PantsDecomposition& to, const std::vector<int>& order) {
  std::vector<PantsDecomposition> states{from};
  for (int j : order) fix_index(model, states, nullptr, j, to.at(j), -1);
  if (states.back() != to) {
    // neighbours cleared along the way are restored in a final ascending sweep
    std::vector<int> rest;
    for (auto j : symmetric_difference(model, states.back(), to).indices) rest.push_back(j);
    for (int j : rest) fix_index(model, states, nullptr, j, to.at(j), -1);
  }
  return states;
}

// Cheapest subsequence of `path` whose consecutive d̂ values are defined.
std::pair<Rational, std::vector<PantsDecomposition>> shortcut(const SurfaceModel& model, int level,
                                                              const std::vector<PantsDecomposition>& path) {
  std::size_t m = path.size();
  std::vector<std::optional<Rational>> best(m);
  std::vector<std::size_t> from(m, 0);
  best[0] = Rational(0);
  for (std::size_t c = 1; c < m; ++c)
    for (std::size_t a = 0; a < c; ++a) {
      if (!best[a]) continue;
      DHat h = dhat(model, level, path[a], path[c]);
      if (!h.defined()) continue;
      Rational v = *best[a] + h.value;
      if (!best[c] || v < *best[c]) {
        best[c] = v;
        from[c] = a;
      }
    }
  std::vector<PantsDecomposition> out{path.back()};
  for (std::size_t c = m - 1; c != 0; c = from[c]) out.push_back(path[from[c]]);
  std::reverse(out.begin(), out.end());
  return {*best[m - 1], out};
}

}  // namespace

DistBounds distance(const SurfaceModel& model, int level, const PantsDecomposition& x, const PantsDecomposition& y,
                    int budget) {
  DistBounds r;
  DHat h = dhat(model, level, x, y);
  if (h.defined()) {
    r.lo = r.hi = h.value;
    r.exact = true;
    r.witness = x == y ? std::vector<PantsDecomposition>{x} : std::vector<PantsDecomposition>{x, y};
    return r;
  }
  if (h.kind == DHat::Kind::Below) throw std::logic_error("probe depth did not resolve d̂");
  r.lo = lower_bound(model, level, x, y).value;
  if (!same_component(x, y)) {
    r.hi = r.lo;
    r.exact = false;
    return r;
  }
  auto diff = symmetric_difference(model, x, y).indices;
  bool found = false;
  auto consider = [&](const std::vector<PantsDecomposition>& path) {
    auto [len, wit] = shortcut(model, level, path);
    if (!found || len < r.hi) {
      r.hi = len;
      r.witness = wit;
      found = true;
    }
  };
  for (int k = 0; k <= std::max(budget, 0); ++k) {
    int b = model.boundary_index(k);
    std::vector<int> inner, outer;
    for (int j : diff) (j <= b ? inner : outer).push_back(j);
    std::vector<int> outer_desc(outer.rbegin(), outer.rend());
    // X → (X inside I_k, Y outside) → Y, and the mirror splice.
    std::vector<int> order = outer_desc;
    order.insert(order.end(), inner.begin(), inner.end());
    consider(walk(model, x, y, order));
    std::vector<int> order2 = inner;
    order2.insert(order2.end(), outer_desc.begin(), outer_desc.end());
    consider(walk(model, x, y, order2));
    if (outer.empty()) break;
  }
  r.exact = found && r.lo == r.hi;
  return r;
}

ConvergePath converge_path(const SurfaceModel& model, const PantsDecomposition& x, const PantsDecomposition& y,
                           int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be non-negative");
  for (int k = 0; k <= depth; ++k)
    if (!y.at(model.boundary_index(k)).is_base())
      throw std::invalid_argument("target must contain the boundary curve of every stage");
  ConvergePath out;
  out.states.push_back(x);
  int floor = -1;
  for (int k = 0; k <= depth; ++k) {
    int b = model.boundary_index(k);
    for (int j = floor + 1; j <= b; ++j) fix_index(model, out.states, &out.word, j, y.at(j), floor);
    out.stage_ends.push_back(static_cast<int>(out.states.size()) - 1);
    floor = b;
  }
  return out;
}

DecompositionStream stream_from_path(const SurfaceModel& model, const ConvergePath& path,
                                     const PantsDecomposition& y) {
  (void)model;
  return {path.states, path.stage_ends, y.tail()};
}

std::string check_stream(const SurfaceModel& model, int level, const DecompositionStream& s) {
  if (s.prefix.empty()) return "empty prefix";
  for (std::size_t k = 0; k < s.stabilization.size(); ++k) {
    int nk = s.stabilization[k];
    if (nk < 0 || nk >= static_cast<int>(s.prefix.size()))
      return "stabilization index for k=" + std::to_string(k) + " outside the prefix";
    if (k > 0 && nk < s.stabilization[k - 1]) return "stabilization indices decrease at k=" + std::to_string(k);
    for (std::size_t j = nk + 1; j < s.prefix.size(); ++j)
      if (!agrees(model, level, s.prefix[nk], s.prefix[j], static_cast<int>(k)))
        return "term " + std::to_string(j) + " leaves the agreement class on S_" + std::to_string(k);
  }
  return "";
}

PantsDecomposition limit_of(const SurfaceModel& model, int level, const DecompositionStream& s) {
  if (level < 1) throw std::invalid_argument("limits are taken for levels 1..4");
  std::string err = check_stream(model, level, s);
  if (!err.empty()) throw std::invalid_argument("certificate violation: " + err);
  if (s.stabilization.empty()) return s.prefix.back();
  std::map<int, LocalSlope> ov;
  int prev = -1;
  for (std::size_t k = 0; k < s.stabilization.size(); ++k) {
    int b = model.boundary_index(static_cast<int>(k));
    const auto& term = s.prefix[s.stabilization[k]];
    int last = k + 1 == s.stabilization.size() ? b : b - 1;
    for (int j = prev + 1; j <= last; ++j) ov[j] = term.at(j);
    prev = last;
  }
  return PantsDecomposition::make(model, s.limit_tail, ov);
}

std::optional<Triple> find_nonultrametric_witness(const SurfaceModel& model, int level, int budget) {
  PantsDecomposition base;
  int far = model.boundary_index(0) + 1;
  std::vector<std::pair<int, LocalSlope>> near_moves, far_moves;
  for (auto& m : enumerate_moves_at(model, base, 2, std::max(budget, 1)).moves) near_moves.push_back({2, m.to});
  for (auto& m : enumerate_moves_at(model, base, far, std::max(budget, 1)).moves) far_moves.push_back({far, m.to});
  for (auto& [jn, sn] : near_moves)
    for (auto& [jf, sf] : far_moves) {
      PantsDecomposition y = base.with(model, jf, sf);
      PantsDecomposition z = y.with(model, jn, sn);
      DHat xy = dhat(model, level, base, y), yz = dhat(model, level, y, z), xz = dhat(model, level, base, z);
      if (!xy.defined() || !yz.defined() || xz.defined()) continue;
      if (xy.value > Rational(1) || yz.value > Rational(1)) continue;
      if (lower_bound(model, level, base, z).value <= Rational(1)) continue;
      return Triple{base, y, z};
    }
  return std::nullopt;
}

}  // namespace pg
