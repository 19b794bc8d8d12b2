#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "pantsgraph/curve.hpp"
#include "pantsgraph/surface.hpp"

namespace pg {

// Curve carried by the window of base curve j, written as p = intersection with γ_j
// (halved in sphere windows) and q = twist. (0,1) stands for γ_j itself.
struct LocalSlope {
  long long p = 0;
  long long q = 1;

  static LocalSlope base() { return {}; }
  // Throws unless gcd(p,|q|) = 1 and p ≥ 0.
  static LocalSlope make(long long p, long long q);
  bool is_base() const { return p == 0; }
  long long height() const;
  std::string literal() const;  // "base" or "(p,q)"
  static LocalSlope parse(const std::string& s);
  auto operator<=>(const LocalSlope&) const = default;
};

long long slope_det(LocalSlope a, LocalSlope b);
bool slopes_adjacent(LocalSlope a, LocalSlope b);
int slope_intersection(WindowKind kind, LocalSlope a, LocalSlope b);

Curve curve_at(const SurfaceModel& model, int j, LocalSlope s);
// Inverse of curve_at for curves carried by one window; nullopt otherwise.
std::optional<std::pair<int, LocalSlope>> local_form(const SurfaceModel& model, const Curve& c);

// Index-periodic assignment of local slopes from index 2 on; indices 0 and 1 are base.
class TailPattern {
 public:
  TailPattern() : period_{LocalSlope::base()} {}
  static TailPattern from_period(std::vector<LocalSlope> period);
  static TailPattern named(const std::string& name);
  static std::vector<std::string> names();

  LocalSlope at(int j) const;
  const std::vector<LocalSlope>& period() const { return period_; }
  std::string name() const;  // named tail or "custom"
  nlohmann::json to_json() const;
  static TailPattern from_json(const nlohmann::json& j);

  auto operator<=>(const TailPattern&) const = default;

 private:
  std::vector<LocalSlope> period_;
};

struct ElementaryMove {
  int index = 0;
  LocalSlope from, to;
  WindowKind kind = WindowKind::Torus;

  ElementaryMove reversed() const { return {index, to, from, kind}; }
  nlohmann::json to_json(const SurfaceModel& model) const;
  bool operator==(const ElementaryMove&) const = default;
};

struct MoveList {
  std::vector<ElementaryMove> moves;
  bool truncated = true;      // height bound cut the list; windows hold infinitely many curves
  bool window_local = true;   // false when the freed window is not a base window
};

// Eventually-base decomposition: a tail pattern plus finitely many index overrides.
// Non-base indices are pairwise non-adjacent, so every curve sits in its own base window.
class PantsDecomposition {
 public:
  PantsDecomposition() = default;
  static PantsDecomposition make(const SurfaceModel& model, TailPattern tail, std::map<int, LocalSlope> overrides);
  static PantsDecomposition of_tail(TailPattern tail) { return make(SurfaceModel{}, std::move(tail), {}); }

  LocalSlope at(int j) const;
  Curve curve(const SurfaceModel& model, int j) const { return curve_at(model, j, at(j)); }
  const TailPattern& tail() const { return tail_; }
  const std::map<int, LocalSlope>& overrides() const { return overrides_; }
  std::set<int> non_base_indices_upto(int last) const;

  // Index of the curve α in this decomposition, or nullopt.
  std::optional<int> index_of(const SurfaceModel& model, const Curve& c) const;
  bool contains(const SurfaceModel& model, const Curve& c) const { return index_of(model, c).has_value(); }

  int horizon(const SurfaceModel& model) const;
  PantsDecomposition with(const SurfaceModel& model, int j, LocalSlope s) const;

  nlohmann::json to_json(const SurfaceModel& model) const;
  static PantsDecomposition from_json(const SurfaceModel& model, const nlohmann::json& j);
  std::string canonical() const;

  auto operator<=>(const PantsDecomposition&) const = default;

 private:
  TailPattern tail_;
  std::map<int, LocalSlope> overrides_;
};

void validate_decomposition(const SurfaceModel& model, const PantsDecomposition& x);

struct SymmetricDifference {
  bool infinite = false;
  std::vector<int> indices;  // all differing indices, or the first three when infinite
  std::vector<Curve> curves; // curves of X at those indices
};

SymmetricDifference symmetric_difference(const SurfaceModel& model, const PantsDecomposition& x,
                                         const PantsDecomposition& y);
bool same_component(const PantsDecomposition& x, const PantsDecomposition& y);

MoveList enumerate_moves(const SurfaceModel& model, const PantsDecomposition& x, const Curve& alpha, int budget);
MoveList enumerate_moves_at(const SurfaceModel& model, const PantsDecomposition& x, int j, int budget);
bool move_is_valid(const SurfaceModel& model, const PantsDecomposition& x, const ElementaryMove& m);
PantsDecomposition apply_move(const SurfaceModel& model, const PantsDecomposition& x, const ElementaryMove& m);
bool adjacent(const SurfaceModel& model, const PantsDecomposition& x, const PantsDecomposition& y);

struct WindowInfo {
  int index = 0;
  std::set<int> pants;
  bool chart_local = true;  // the freed window is the base window of the index
};
WindowInfo window_of(const SurfaceModel& model, const PantsDecomposition& x, int j);

// Greedy choice of curves with pairwise pants-disjoint windows, in the given order.
std::vector<Curve> extract_disjoint_windows(const SurfaceModel& model, const PantsDecomposition& x,
                                            const std::vector<Curve>& c, int k);

}  // namespace pg
