#include "pantsgraph/surface.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

namespace pg {

std::string to_string(WindowKind k) { return k == WindowKind::Torus ? "torus" : "sphere"; }

ModelConfig load_model_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model config: " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  ModelConfig c;
  c.shell_size = j.value("shell_size", c.shell_size);
  c.max_index = j.value("max_index", c.max_index);
  if (c.max_index < 0) throw std::invalid_argument("max_index must be non-negative");
  return c;
}

SurfaceModel::SurfaceModel(ModelConfig config) : config_(config) {
  if (config_.shell_size < 1) throw std::invalid_argument("shell_size must be positive");
}

PantsCell SurfaceModel::pants(int id) const {
  if (id < 0) throw std::out_of_range("negative pants id");
  if (id == 0) return {0, {0, 0, 1}};
  int k = (id - 1) / 2;
  if (id % 2 == 1) return {id, {3 * k + 1, 3 * k + 3, 3 * k + 4}};
  return {id, {3 * k + 2, 3 * k + 2, 3 * k + 3}};
}

BaseCurve SurfaceModel::curve(int j) const {
  if (j < 0) throw std::out_of_range("negative curve index");
  if (j == 0) return {0, {0, 0}, {0, 1}, WindowKind::Torus};
  if (j == 1) return {1, {0, 2}, {1, 0}, WindowKind::Sphere};
  int k = (j - 2) / 3;
  int q = 2 * k + 1, h = 2 * k + 2;
  switch ((j - 2) % 3) {
    case 0: return {j, {h, 0}, {h, 1}, WindowKind::Torus};
    case 1: return {j, {h, 2}, {q, 1}, WindowKind::Sphere};
    default: return {j, {q, 2}, {q + 2, 0}, WindowKind::Sphere};
  }
}

std::vector<int> SurfaceModel::window_pants(int j) const {
  BaseCurve c = curve(j);
  if (c.self_glued()) return {c.first.first};
  std::vector<int> out{c.first.first, c.second.first};
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> SurfaceModel::adjacent_indices(int j) const {
  std::set<int> out;
  for (int p : window_pants(j))
    for (int c : pants(p).cuffs)
      if (c != j) out.insert(c);
  return {out.begin(), out.end()};
}

bool SurfaceModel::windows_overlap(int j, int k) const {
  auto a = window_pants(j), b = window_pants(k);
  for (int p : a)
    if (std::find(b.begin(), b.end(), p) != b.end()) return true;
  return false;
}

Subsurface SurfaceModel::subsurface_from_pants(const std::set<int>& ids) const {
  Subsurface s;
  s.pants = ids;
  std::map<int, int> sides;
  for (int p : ids)
    for (int c : pants(p).cuffs) sides[c]++;
  for (auto [c, count] : sides) {
    if (count == 2) s.interior.insert(c);
    else s.boundary.insert(c);
  }
  return s;
}

Subsurface SurfaceModel::exhaustion(int n) const {
  if (n < 0) return {};
  std::set<int> ids{0};
  for (int k = 0; k < links_in(n); ++k) {
    ids.insert(2 * k + 1);
    ids.insert(2 * k + 2);
  }
  return subsurface_from_pants(ids);
}

Subsurface SurfaceModel::shell(int n) const {
  Subsurface outer = exhaustion(n), inner = exhaustion(n - 1);
  std::set<int> ids;
  std::set_difference(outer.pants.begin(), outer.pants.end(), inner.pants.begin(), inner.pants.end(),
                      std::inserter(ids, ids.end()));
  return subsurface_from_pants(ids);
}

int SurfaceModel::least_level_containing(const std::vector<int>& ids) const {
  int top = -1;
  for (int p : ids) top = std::max(top, link_of_pants(p));
  if (top < 0) return 0;
  return top / config_.shell_size;
}

int SurfaceModel::first_level_meeting_index(int j) const {
  int n = 0;
  while (boundary_index(n) < j) ++n;
  return n;
}

nlohmann::json SurfaceModel::chart_json(int n) const {
  Subsurface s = exhaustion(n);
  nlohmann::json out;
  out["shell_size"] = config_.shell_size;
  out["max_index"] = config_.max_index;
  out["level"] = n;
  for (int p : s.pants) {
    auto c = pants(p);
    out["pants"].push_back({{"id", p}, {"cuffs", c.cuffs}});
  }
  std::set<int> curves(s.interior);
  curves.insert(s.boundary.begin(), s.boundary.end());
  for (int j : curves) {
    auto c = curve(j);
    out["curves"].push_back({{"index", j},
                             {"sides", {{c.first.first, c.first.second}, {c.second.first, c.second.second}}},
                             {"window", to_string(c.kind)},
                             {"window_pants", window_pants(j)},
                             {"on_boundary", s.is_boundary(j)}});
  }
  for (int k = 0; k <= n; ++k) {
    Subsurface sh = shell(k);
    out["shells"].push_back({{"level", k},
                             {"pants", std::vector<int>(sh.pants.begin(), sh.pants.end())},
                             {"complexity", complexity(*this, sh)}});
  }
  return out;
}

std::vector<Subsurface> connected_components(const SurfaceModel& model, const Subsurface& sub) {
  std::vector<Subsurface> out;
  std::set<int> seen;
  for (int start : sub.pants) {
    if (seen.count(start)) continue;
    std::set<int> comp{start};
    std::vector<int> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      int p = stack.back();
      stack.pop_back();
      for (int c : model.pants(p).cuffs) {
        if (!sub.is_interior(c)) continue;
        for (int q : model.window_pants(c)) {
          if (sub.has_pants(q) && !seen.count(q)) {
            seen.insert(q);
            comp.insert(q);
            stack.push_back(q);
          }
        }
      }
    }
    out.push_back(model.subsurface_from_pants(comp));
  }
  return out;
}

int complexity(const SurfaceModel& model, const Subsurface& sub) {
  int total = 0;
  for (const auto& comp : connected_components(model, sub)) {
    int p = static_cast<int>(comp.pants.size());
    int b = static_cast<int>(comp.boundary.size());
    int g = (p - b + 2) / 2;
    int kappa = 3 * g - 3 + b;
    if (kappa != static_cast<int>(comp.interior.size()))
      throw std::logic_error("chart complexity does not match interior curve count");
    total += kappa;
  }
  return total;
}

SurfaceModel build_model(int shell_size, int max_index) {
  if (shell_size < 4)
    throw std::invalid_argument("shell_size must be at least 4, got " + std::to_string(shell_size));
  SurfaceModel model({shell_size, max_index});
  for (int n = 0; n <= std::max(1, max_index); ++n) {
    for (const auto& comp : connected_components(model, model.shell(n)))
      if (complexity(model, comp) < 6)
        throw std::invalid_argument("shell " + std::to_string(n) + " has a component of complexity below 6");
  }
  return model;
}

}  // namespace pg
