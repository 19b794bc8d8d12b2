#pragma once

#include <array>
#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pantsgraph/surface.hpp"

namespace pg {

// Intersection number m with a base curve and twist t about it. Right-handed twists are positive.
struct Coord {
  int m = 0;
  long long t = 0;
  auto operator<=>(const Coord&) const = default;
};

class SupportTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Isotopy class of an essential simple closed curve in coordinates relative to the base
// decomposition. Either a base curve or a finitely supported coordinate vector.
class Curve {
 public:
  Curve() = default;
  static Curve base(int j);
  static Curve from_coords(std::map<int, Coord> coords);

  bool is_base() const { return base_ >= 0; }
  int base_index() const { return base_; }
  const std::map<int, Coord>& coords() const { return coords_; }
  Coord at(int j) const;
  std::vector<int> support() const;

  // `gamma:<j>` or `{j:(m,t),...}`
  std::string literal() const;
  static Curve parse(const std::string& text);

  auto operator<=>(const Curve&) const = default;

 private:
  int base_ = -1;
  std::map<int, Coord> coords_;
};

void to_json(nlohmann::json& j, const Curve& c);
void from_json(const nlohmann::json& j, Curve& c);

// Normal-arc counts in one pair of pants. cross[k] joins the two slots other than k;
// wave[k] starts and ends on slot k.
struct ArcCounts {
  std::array<int, 3> cross{};
  std::array<int, 3> wave{};
  auto operator<=>(const ArcCounts&) const = default;
};

// Throws std::invalid_argument on odd total.
ArcCounts arc_counts(const std::array<int, 3>& m);

struct RestrictionData {
  std::map<int, ArcCounts> pants_arcs;  // pants inside the subsurface carrying arcs
  std::map<int, Coord> interior;        // interior base curves crossed: (total m, total t)
  std::map<int, int> crossing;          // boundary base curves crossed: total m
  std::set<int> interior_base;          // base curves of the set lying inside
  std::set<int> peripheral;             // base curves of the set lying on the boundary

  bool empty() const {
    return pants_arcs.empty() && interior.empty() && crossing.empty() && interior_base.empty() &&
           peripheral.empty();
  }
  std::string fingerprint() const;
  auto operator<=>(const RestrictionData&) const = default;
};

// descriptor -> multiplicity
struct ComponentMultiset {
  std::map<std::string, int> items;
  int total() const;
  std::set<std::string> support() const;
  bool operator==(const ComponentMultiset&) const = default;
};

// Checks per-pants parity and that the coordinates describe one connected curve.
void validate_curve(const SurfaceModel& model, const Curve& c);
bool is_valid_curve(const SurfaceModel& model, const Curve& c);

std::set<int> carried_pants(const SurfaceModel& model, const Curve& c);
bool meets(const SurfaceModel& model, const Curve& c, const Subsurface& sub);
bool contained_in(const SurfaceModel& model, const Curve& c, const Subsurface& sub);

RestrictionData restrict_to(const SurfaceModel& model, const std::vector<Curve>& curves, const Subsurface& sub);
ComponentMultiset components(const SurfaceModel& model, const RestrictionData& r);

// Closed components obtained by tracing the full coordinates over the whole surface.
int closed_component_count(const SurfaceModel& model, const Curve& c);

// Geometric intersection of two curves carried by the window of one base curve.
// A base curve is passed as m = 0.
int window_intersection(WindowKind kind, Coord a, Coord b);

// Exact for base curves and curves supported on a single window; throws SupportTooLarge otherwise.
bool disjoint(const SurfaceModel& model, const Curve& a, const Curve& b);

}  // namespace pg
