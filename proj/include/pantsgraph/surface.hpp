#pragma once

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace pg {

enum class WindowKind { Torus, Sphere };

std::string to_string(WindowKind k);

// A cuff slot: pants cell id and slot number 0..2.
using Side = std::pair<int, int>;

struct PantsCell {
  int id = 0;
  std::array<int, 3> cuffs{};  // base-curve index in each slot
};

struct BaseCurve {
  int index = 0;
  Side first, second;
  WindowKind kind = WindowKind::Sphere;
  bool self_glued() const { return first.first == second.first; }
};

struct Subsurface {
  std::set<int> pants;
  std::set<int> interior;  // base curves with both sides inside
  std::set<int> boundary;  // base curves with exactly one side inside

  bool has_pants(int p) const { return pants.count(p) > 0; }
  bool is_interior(int j) const { return interior.count(j) > 0; }
  bool is_boundary(int j) const { return boundary.count(j) > 0; }
  bool operator==(const Subsurface&) const = default;
};

struct ModelConfig {
  int shell_size = 4;
  int max_index = 12;  // largest exhaustion index materialized by dumps and scans
};

ModelConfig load_model_config(const std::string& path);

// The one-ended infinite-genus surface as a chain of pants with a handle per link.
//
// Pants ids: 0 is the starting handle; link k owns chain pants 2k+1 and handle pants 2k+2.
// Base curves: 0 is the starting meridian, 1 joins the start to the chain; link k owns
// meridian 3k+2, handle cuff 3k+3 and chain curve 3k+4.
class SurfaceModel {
 public:
  explicit SurfaceModel(ModelConfig config = {});

  int shell_size() const { return config_.shell_size; }
  int max_index() const { return config_.max_index; }
  const ModelConfig& config() const { return config_; }

  PantsCell pants(int id) const;
  BaseCurve curve(int j) const;
  WindowKind window_kind(int j) const { return curve(j).kind; }
  std::vector<int> window_pants(int j) const;
  std::vector<int> adjacent_indices(int j) const;
  bool windows_overlap(int j, int k) const;

  int links_in(int n) const { return config_.shell_size * (n + 1); }
  int boundary_index(int n) const { return 3 * links_in(n) + 1; }
  Subsurface exhaustion(int n) const;
  Subsurface shell(int n) const;  // closure-free difference S_n minus S_{n-1}

  // Least n whose exhaustion piece contains every listed pants cell.
  int least_level_containing(const std::vector<int>& pants_ids) const;
  // Least n with curve j interior to or on the boundary of S_n.
  int first_level_meeting_index(int j) const;
  int link_of_pants(int id) const { return id == 0 ? -1 : (id - 1) / 2; }

  Subsurface subsurface_from_pants(const std::set<int>& pants_ids) const;
  nlohmann::json chart_json(int n) const;

  bool operator==(const SurfaceModel& o) const {
    return config_.shell_size == o.config_.shell_size && config_.max_index == o.config_.max_index;
  }

 private:
  ModelConfig config_;
};

// Rejects shell sizes below 4 and any shell whose complexity drops below 6.
SurfaceModel build_model(int shell_size, int max_index = 12);

// 3g - 3 + b summed over connected components of a finite chart subsurface.
int complexity(const SurfaceModel& model, const Subsurface& sub);
std::vector<Subsurface> connected_components(const SurfaceModel& model, const Subsurface& sub);

}  // namespace pg
