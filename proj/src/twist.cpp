#include "pantsgraph/twist.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pg {

namespace {

std::vector<long long> minimal_period(const std::vector<long long>& v) {
  std::size_t n = v.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = v[i] == v[i % d];
    if (ok) return {v.begin(), v.begin() + static_cast<long>(d)};
  }
  return v;
}

long long rule(const std::vector<long long>& period, int j) {
  if (j < 2) return 0;
  return period[static_cast<std::size_t>(j - 2) % period.size()];
}

}  // namespace

TwistProfile TwistProfile::make(std::map<int, long long> overrides, std::vector<long long> period) {
  if (period.empty()) throw std::invalid_argument("twist profile period must be non-empty");
  TwistProfile f;
  f.period_ = minimal_period(period);
  for (auto& [j, e] : overrides) {
    if (j < 0) throw std::invalid_argument("negative index in twist profile");
    if (e != rule(f.period_, j)) f.overrides_[j] = e;
  }
  return f;
}

long long TwistProfile::exponent(int j) const {
  auto it = overrides_.find(j);
  return it == overrides_.end() ? rule(period_, j) : it->second;
}

bool TwistProfile::finite_support() const {
  return std::all_of(period_.begin(), period_.end(), [](long long e) { return e == 0; });
}

TwistProfile TwistProfile::truncated(int last) const {
  std::map<int, long long> o;
  for (int j = 0; j <= last; ++j) o[j] = exponent(j);
  return make(o, {0});
}

TwistProfile TwistProfile::compose(const TwistProfile& g) const {
  std::size_t l = std::lcm(period_.size(), g.period_.size());
  std::vector<long long> per(l);
  for (std::size_t i = 0; i < l; ++i) per[i] = period_[i % period_.size()] + g.period_[i % g.period_.size()];
  std::map<int, long long> o;
  for (auto& [j, e] : overrides_) o[j] = exponent(j) + g.exponent(j);
  for (auto& [j, e] : g.overrides_) o[j] = exponent(j) + g.exponent(j);
  for (int j = 0; j < 2; ++j) o[j] = exponent(j) + g.exponent(j);
  return make(o, per);
}

TwistProfile TwistProfile::inverse() const {
  std::vector<long long> per;
  for (long long e : period_) per.push_back(-e);
  std::map<int, long long> o;
  for (auto& [j, e] : overrides_) o[j] = -e;
  return make(o, per);
}

nlohmann::json TwistProfile::to_json() const {
  nlohmann::json o = nlohmann::json::object();
  for (auto& [j, e] : overrides_) o[std::to_string(j)] = e;
  return {{"overrides", o}, {"tail", {{"period", period_}}}};
}

TwistProfile TwistProfile::from_json(const nlohmann::json& j) {
  std::map<int, long long> o;
  if (j.contains("overrides"))
    for (auto& [k, v] : j.at("overrides").items()) o[std::stoi(k)] = v.get<long long>();
  std::vector<long long> per{0};
  if (j.contains("tail")) per = j.at("tail").at("period").get<std::vector<long long>>();
  return make(o, per);
}

Curve act_on_curve(const SurfaceModel& model, const TwistProfile& f, const Curve& c) {
  (void)model;
  if (c.is_base()) return c;
  auto coords = c.coords();
  for (auto& [j, x] : coords) x.t += f.exponent(j) * x.m;
  return Curve::from_coords(coords);
}

LocalSlope act_on_slope(const SurfaceModel& model, const TwistProfile& f, int j, LocalSlope s) {
  if (s.is_base()) return s;
  long long scale = model.window_kind(j) == WindowKind::Sphere ? 2 : 1;
  return {s.p, s.q + f.exponent(j) * scale * s.p};
}

PantsDecomposition act_on_decomposition(const SurfaceModel& model, const TwistProfile& f,
                                        const PantsDecomposition& x) {
  const auto& tp = x.tail().period();
  // window kinds repeat with period 3 from index 2
  std::size_t l = std::lcm(std::lcm(tp.size(), f.period().size()), std::size_t{3});
  std::vector<LocalSlope> per(l);
  for (std::size_t i = 0; i < l; ++i) {
    int j = static_cast<int>(i) + 2;
    LocalSlope s = tp[i % tp.size()];
    long long e = f.period()[i % f.period().size()];
    long long scale = model.window_kind(j) == WindowKind::Sphere ? 2 : 1;
    per[i] = s.is_base() ? s : LocalSlope{s.p, s.q + e * scale * s.p};
  }
  std::map<int, LocalSlope> o;
  for (auto& [j, s] : x.overrides()) o[j] = act_on_slope(model, f, j, x.at(j));
  for (auto& [j, e] : f.overrides()) o[j] = act_on_slope(model, f, j, x.at(j));
  return PantsDecomposition::make(model, TailPattern::from_period(per), o);
}

PantsPoint act_on_point(const SurfaceModel& model, const TwistProfile& f, const PantsPoint& p) {
  if (p.is_vertex()) return PantsPoint::vertex(act_on_decomposition(model, f, p.x()));
  return PantsPoint::normalize(model, act_on_decomposition(model, f, p.x()), p.a(),
                               act_on_decomposition(model, f, p.y()));
}

ProfileStream truncation_stream(const SurfaceModel& model, const TwistProfile& f, int k_max) {
  ProfileStream s;
  for (int k = 0; k <= k_max; ++k) {
    s.prefix.push_back(f.truncated(model.boundary_index(k)));
    s.stabilization.push_back(k);
  }
  return s;
}

Verdict profile_converges(const SurfaceModel& model, const ProfileStream& s, const TwistProfile& f, int k_max) {
  Verdict v;
  if (static_cast<int>(s.stabilization.size()) <= k_max) {
    v.reason = "certificate stops before k_max";
    return v;
  }
  for (int k = 0; k <= k_max; ++k) {
    int nk = s.stabilization[k];
    if (nk < 0 || nk >= static_cast<int>(s.prefix.size())) {
      v.reason = "stabilization index outside the prefix at k=" + std::to_string(k);
      return v;
    }
    if (k > 0 && nk < s.stabilization[k - 1]) {
      v.reason = "stabilization decreases at k=" + std::to_string(k);
      return v;
    }
    for (std::size_t j = nk; j < s.prefix.size(); ++j)
      for (int idx = 0; idx <= model.boundary_index(k); ++idx)
        if (s.prefix[j].exponent(idx) != f.exponent(idx)) {
          v.reason = "term " + std::to_string(j) + " differs from the limit at index " + std::to_string(idx);
          return v;
        }
  }
  v.ok = true;
  return v;
}

ContinuityReport action_continuity_test(const SurfaceModel& model, int level, const ProfileStream& profiles,
                                        const PointStream& points, const TwistProfile& f, const PantsPoint& p) {
  ContinuityReport r;
  r.image_limit = act_on_point(model, f, p);
  int k_max = static_cast<int>(points.x_stable.size()) - 1;
  Verdict pv = profile_converges(model, profiles, f, k_max);
  if (!pv.ok) {
    r.verdict.reason = "profile stream: " + pv.reason;
    return r;
  }
  Verdict in = converges(model, level, points, p);
  if (!in.ok) {
    r.verdict.reason = "point stream: " + in.reason;
    return r;
  }
  // Term j pairs the j-th point with profile min(j, last).
  std::size_t last = profiles.prefix.size() - 1;
  auto profile_for = [&](std::size_t j) -> const TwistProfile& { return profiles.prefix[std::min(j, last)]; };
  PointStream& im = r.image;
  im.clause = points.clause;
  im.limit_a = points.limit_a;
  im.limit_x = act_on_decomposition(model, f, points.limit_x);
  im.limit_y = act_on_decomposition(model, f, points.limit_y);
  for (std::size_t j = 0; j < points.prefix.size(); ++j) {
    const PointTerm& t = points.prefix[j];
    const TwistProfile& fj = profile_for(j);
    im.prefix.push_back({act_on_decomposition(model, fj, t.x), act_on_decomposition(model, fj, t.y), t.a});
  }
  auto lift = [&](const std::vector<int>& stable) {
    std::vector<int> out;
    for (std::size_t k = 0; k < stable.size(); ++k) {
      int nf = k < profiles.stabilization.size() ? profiles.stabilization[k] : static_cast<int>(last);
      out.push_back(std::max(stable[k], nf));
    }
    return out;
  };
  im.x_stable = lift(points.x_stable);
  im.y_stable = lift(points.y_stable);
  im.a_stable = points.a_stable;
  r.verdict = converges(model, level, im, r.image_limit);
  return r;
}

}  // namespace pg
