#pragma once

#include <map>
#include <string>
#include <vector>

#include "pantsgraph/pants_space.hpp"

namespace pg {

// Commuting product of Dehn twists along base curves: exponent e_j at index j, given by finitely many
// overrides over an index-periodic rule starting at index 2 (indices 0 and 1 default to 0).
class TwistProfile {
 public:
  TwistProfile() : period_{0} {}
  static TwistProfile make(std::map<int, long long> overrides, std::vector<long long> period);
  static TwistProfile single(int j, long long e) { return make({{j, e}}, {0}); }

  long long exponent(int j) const;
  const std::map<int, long long>& overrides() const { return overrides_; }
  const std::vector<long long>& period() const { return period_; }
  bool finite_support() const;
  // Profile equal to this one on indices ≤ last and zero beyond.
  TwistProfile truncated(int last) const;

  TwistProfile compose(const TwistProfile& g) const;  // exponent addition
  TwistProfile inverse() const;

  nlohmann::json to_json() const;
  static TwistProfile from_json(const nlohmann::json& j);
  bool operator==(const TwistProfile&) const = default;

 private:
  std::map<int, long long> overrides_;
  std::vector<long long> period_;
};

Curve act_on_curve(const SurfaceModel& model, const TwistProfile& f, const Curve& c);
LocalSlope act_on_slope(const SurfaceModel& model, const TwistProfile& f, int j, LocalSlope s);
PantsDecomposition act_on_decomposition(const SurfaceModel& model, const TwistProfile& f, const PantsDecomposition& x);
PantsPoint act_on_point(const SurfaceModel& model, const TwistProfile& f, const PantsPoint& p);

struct ProfileStream {
  std::vector<TwistProfile> prefix;
  std::vector<int> stabilization;  // from N_k on, exponents match the limit on indices ≤ ∂S_k
};

// Truncations of f at the boundary index of each stage: one term per stage k = 0..k_max.
ProfileStream truncation_stream(const SurfaceModel& model, const TwistProfile& f, int k_max);

Verdict profile_converges(const SurfaceModel& model, const ProfileStream& s, const TwistProfile& f, int k_max);

struct ContinuityReport {
  Verdict verdict;
  PointStream image;
  PantsPoint image_limit;
};

// Applies f_j to P_j, derives the image certificate max(N^P_k, N^f_k), and checks it.
ContinuityReport action_continuity_test(const SurfaceModel& model, int level, const ProfileStream& profiles,
                                        const PointStream& points, const TwistProfile& f, const PantsPoint& p);

}  // namespace pg
