#include "pantsgraph/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pg {

LocalSlope LocalSlope::make(long long p, long long q) {
  if (p < 0) throw std::invalid_argument("local slope needs p >= 0");
  if (p == 0 && q != 1) throw std::invalid_argument("local slope with p = 0 must be (0,1)");
  if (std::gcd(p, q < 0 ? -q : q) != 1) throw std::invalid_argument("local slope is not reduced");
  return {p, q};
}

long long LocalSlope::height() const { return std::max(p, q < 0 ? -q : q); }

std::string LocalSlope::literal() const {
  if (is_base()) return "base";
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

LocalSlope LocalSlope::parse(const std::string& s) {
  if (s == "base") return base();
  long long p = 0, q = 0;
  char a = 0, b = 0, c = 0;
  std::istringstream in(s);
  if (!(in >> a >> p >> b >> q >> c) || a != '(' || b != ',' || c != ')')
    throw std::invalid_argument("bad local slope literal: " + s);
  std::string rest;
  if (in >> rest) throw std::invalid_argument("bad local slope literal: " + s);
  return make(p, q);
}

long long slope_det(LocalSlope a, LocalSlope b) {
  long long d = a.p * b.q - a.q * b.p;
  return d < 0 ? -d : d;
}

bool slopes_adjacent(LocalSlope a, LocalSlope b) { return slope_det(a, b) == 1; }

int slope_intersection(WindowKind kind, LocalSlope a, LocalSlope b) {
  long long d = slope_det(a, b);
  return static_cast<int>(kind == WindowKind::Sphere ? 2 * d : d);
}

Curve curve_at(const SurfaceModel& model, int j, LocalSlope s) {
  if (s.is_base()) return Curve::base(j);
  int scale = model.window_kind(j) == WindowKind::Sphere ? 2 : 1;
  return Curve::from_coords({{j, Coord{static_cast<int>(scale * s.p), s.q}}});
}

std::optional<std::pair<int, LocalSlope>> local_form(const SurfaceModel& model, const Curve& c) {
  if (c.is_base()) return std::make_pair(c.base_index(), LocalSlope::base());
  if (c.coords().size() != 1) return std::nullopt;
  auto [j, x] = *c.coords().begin();
  long long p = x.m;
  if (model.window_kind(j) == WindowKind::Sphere) {
    if (p % 2) return std::nullopt;
    p /= 2;
  }
  if (std::gcd(p, x.t < 0 ? -x.t : x.t) != 1) return std::nullopt;
  return std::make_pair(j, LocalSlope{p, x.t});
}

// ---------------------------------------------------------------- tails

namespace {

const SurfaceModel& chart() {
  static const SurfaceModel m;
  return m;
}

std::vector<LocalSlope> minimal_period(std::vector<LocalSlope> v) {
  std::size_t n = v.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = v[i] == v[i % d];
    if (ok) return {v.begin(), v.begin() + static_cast<long>(d)};
  }
  return v;
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& named_tails() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> t{
      {"base", {"base"}},
      {"torus1", {"(1,1)", "base", "base"}},
      {"torus-inf", {"(1,0)", "base", "base"}},
      {"mixed", {"(1,1)", "base", "(2,1)", "(1,1)", "base", "base"}},
  };
  return t;
}

}  // namespace

TailPattern TailPattern::from_period(std::vector<LocalSlope> period) {
  if (period.empty()) throw std::invalid_argument("tail period must be non-empty");
  TailPattern t;
  t.period_ = minimal_period(std::move(period));
  int span = 2 + 6 * static_cast<int>(t.period_.size()) + 12;
  for (int j = 0; j < span; ++j) {
    if (t.at(j).is_base()) continue;
    for (int k : chart().adjacent_indices(j))
      if (!t.at(k).is_base())
        throw std::invalid_argument("tail pattern puts non-base curves on adjacent indices " + std::to_string(j) +
                                    " and " + std::to_string(k));
  }
  return t;
}

TailPattern TailPattern::named(const std::string& name) {
  for (auto& [n, lits] : named_tails()) {
    if (n != name) continue;
    std::vector<LocalSlope> v;
    for (auto& s : lits) v.push_back(LocalSlope::parse(s));
    return from_period(v);
  }
  throw std::invalid_argument("unknown tail pattern: " + name);
}

std::vector<std::string> TailPattern::names() {
  std::vector<std::string> out;
  for (auto& [n, lits] : named_tails()) out.push_back(n);
  return out;
}

LocalSlope TailPattern::at(int j) const {
  if (j < 2) return LocalSlope::base();
  return period_[static_cast<std::size_t>(j - 2) % period_.size()];
}

std::string TailPattern::name() const {
  for (auto& [n, lits] : named_tails())
    if (named(n) == *this) return n;
  return "custom";
}

nlohmann::json TailPattern::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& s : period_) arr.push_back(s.literal());
  return {{"period", arr}};
}

TailPattern TailPattern::from_json(const nlohmann::json& j) {
  if (j.is_string()) return named(j.get<std::string>());
  if (j.contains("name")) return named(j.at("name").get<std::string>());
  std::vector<LocalSlope> v;
  for (auto& s : j.at("period")) v.push_back(LocalSlope::parse(s.get<std::string>()));
  return from_period(v);
}

nlohmann::json ElementaryMove::to_json(const SurfaceModel& model) const {
  return {{"index", index},
          {"window", to_string(kind)},
          {"removed", curve_at(model, index, from).literal()},
          {"inserted", curve_at(model, index, to).literal()}};
}

// ---------------------------------------------------------------- decompositions

void validate_decomposition(const SurfaceModel& model, const PantsDecomposition& x) {
  for (auto& [j, s] : x.overrides()) {
    if (s.is_base()) continue;
    for (int k : model.adjacent_indices(j))
      if (!x.at(k).is_base())
        throw std::invalid_argument("curves at adjacent indices " + std::to_string(j) + " and " +
                                    std::to_string(k) + " intersect");
  }
}

PantsDecomposition PantsDecomposition::make(const SurfaceModel& model, TailPattern tail,
                                            std::map<int, LocalSlope> overrides) {
  PantsDecomposition x;
  x.tail_ = std::move(tail);
  for (auto& [j, s] : overrides) {
    if (j < 0) throw std::invalid_argument("negative index in overrides");
    LocalSlope::make(s.p, s.q);
    if (s != x.tail_.at(j)) x.overrides_[j] = s;
  }
  validate_decomposition(model, x);
  return x;
}

LocalSlope PantsDecomposition::at(int j) const {
  auto it = overrides_.find(j);
  return it == overrides_.end() ? tail_.at(j) : it->second;
}

std::set<int> PantsDecomposition::non_base_indices_upto(int last) const {
  std::set<int> out;
  for (int j = 0; j <= last; ++j)
    if (!at(j).is_base()) out.insert(j);
  return out;
}

std::optional<int> PantsDecomposition::index_of(const SurfaceModel& model, const Curve& c) const {
  auto lf = local_form(model, c);
  if (!lf) return std::nullopt;
  if (at(lf->first) != lf->second) return std::nullopt;
  return lf->first;
}

int PantsDecomposition::horizon(const SurfaceModel& model) const {
  int n = 0;
  for (auto& [j, s] : overrides_) n = std::max(n, model.least_level_containing(model.window_pants(j)));
  return n;
}

PantsDecomposition PantsDecomposition::with(const SurfaceModel& model, int j, LocalSlope s) const {
  auto o = overrides_;
  o[j] = s;
  return make(model, tail_, o);
}

nlohmann::json PantsDecomposition::to_json(const SurfaceModel& model) const {
  nlohmann::json ov = nlohmann::json::array();
  for (auto& [j, s] : overrides_) ov.push_back(curve_at(model, j, s).literal());
  return {{"tail", tail_.to_json()}, {"horizon", horizon(model)}, {"overrides", ov}};
}

PantsDecomposition PantsDecomposition::from_json(const SurfaceModel& model, const nlohmann::json& j) {
  TailPattern tail = j.contains("tail") ? TailPattern::from_json(j.at("tail")) : TailPattern{};
  std::map<int, LocalSlope> ov;
  if (j.contains("overrides")) {
    for (auto& lit : j.at("overrides")) {
      Curve c = Curve::parse(lit.get<std::string>());
      auto lf = local_form(model, c);
      if (!lf) throw std::invalid_argument("override is not carried by a single base window: " + c.literal());
      if (ov.count(lf->first)) throw std::invalid_argument("two overrides at index " + std::to_string(lf->first));
      ov[lf->first] = lf->second;
    }
  }
  PantsDecomposition x = make(model, tail, ov);
  if (j.contains("horizon") && j.at("horizon").get<int>() < x.horizon(model))
    throw std::invalid_argument("declared horizon does not contain the overrides");
  return x;
}

std::string PantsDecomposition::canonical() const {
  std::string s = "tail[";
  for (std::size_t i = 0; i < tail_.period().size(); ++i) s += (i ? "," : "") + tail_.period()[i].literal();
  s += "]";
  for (auto& [j, v] : overrides_) s += ";" + std::to_string(j) + "=" + v.literal();
  return s;
}

// ---------------------------------------------------------------- components and moves

SymmetricDifference symmetric_difference(const SurfaceModel& model, const PantsDecomposition& x,
                                         const PantsDecomposition& y) {
  SymmetricDifference d;
  if (x.tail() == y.tail()) {
    std::set<int> idx;
    for (auto& [j, s] : x.overrides()) idx.insert(j);
    for (auto& [j, s] : y.overrides()) idx.insert(j);
    for (int j : idx)
      if (x.at(j) != y.at(j)) d.indices.push_back(j);
  } else {
    d.infinite = true;
    for (int j = 0; d.indices.size() < 3; ++j)
      if (x.at(j) != y.at(j)) d.indices.push_back(j);
  }
  for (int j : d.indices) d.curves.push_back(x.curve(model, j));
  return d;
}

bool same_component(const PantsDecomposition& x, const PantsDecomposition& y) { return x.tail() == y.tail(); }

MoveList enumerate_moves_at(const SurfaceModel& model, const PantsDecomposition& x, int j, int budget) {
  MoveList out;
  for (int k : model.adjacent_indices(j))
    if (!x.at(k).is_base()) {
      out.window_local = false;
      out.truncated = false;
      return out;
    }
  LocalSlope cur = x.at(j);
  WindowKind kind = model.window_kind(j);
  for (long long p = 0; p <= budget; ++p)
    for (long long q = -budget; q <= budget; ++q) {
      if (p == 0 && q != 1) continue;
      if (std::gcd(p, q < 0 ? -q : q) != 1) continue;
      LocalSlope s{p, q};
      if (slopes_adjacent(cur, s)) out.moves.push_back({j, cur, s, kind});
    }
  return out;
}

MoveList enumerate_moves(const SurfaceModel& model, const PantsDecomposition& x, const Curve& alpha, int budget) {
  auto j = x.index_of(model, alpha);
  if (!j) throw std::invalid_argument("curve " + alpha.literal() + " is not in the decomposition");
  return enumerate_moves_at(model, x, *j, budget);
}

bool move_is_valid(const SurfaceModel& model, const PantsDecomposition& x, const ElementaryMove& m) {
  if (m.index < 0 || x.at(m.index) != m.from || model.window_kind(m.index) != m.kind) return false;
  if (!slopes_adjacent(m.from, m.to)) return false;
  for (int k : model.adjacent_indices(m.index))
    if (!x.at(k).is_base()) return false;
  return true;
}

PantsDecomposition apply_move(const SurfaceModel& model, const PantsDecomposition& x, const ElementaryMove& m) {
  if (!move_is_valid(model, x, m)) throw std::invalid_argument("move is not valid for this decomposition");
  return x.with(model, m.index, m.to);
}

bool adjacent(const SurfaceModel& model, const PantsDecomposition& x, const PantsDecomposition& y) {
  if (!same_component(x, y)) return false;
  auto d = symmetric_difference(model, x, y);
  if (d.indices.size() != 1) return false;
  int j = d.indices[0];
  return move_is_valid(model, x, {j, x.at(j), y.at(j), model.window_kind(j)});
}

WindowInfo window_of(const SurfaceModel& model, const PantsDecomposition& x, int j) {
  WindowInfo w;
  w.index = j;
  for (int p : model.window_pants(j)) w.pants.insert(p);
  for (int k : model.adjacent_indices(j))
    if (!x.at(k).is_base()) {
      w.chart_local = false;
      for (int p : model.window_pants(k)) w.pants.insert(p);
    }
  return w;
}

std::vector<Curve> extract_disjoint_windows(const SurfaceModel& model, const PantsDecomposition& x,
                                            const std::vector<Curve>& c, int k) {
  std::vector<Curve> chosen;
  std::set<int> used;
  for (const Curve& a : c) {
    if (static_cast<int>(chosen.size()) >= k) break;
    auto j = x.index_of(model, a);
    if (!j) throw std::invalid_argument("curve " + a.literal() + " is not in the decomposition");
    auto w = model.window_pants(*j);
    if (std::any_of(w.begin(), w.end(), [&](int p) { return used.count(p) > 0; })) continue;
    chosen.push_back(a);
    used.insert(w.begin(), w.end());
  }
  return chosen;
}

}  // namespace pg
