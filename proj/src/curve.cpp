#include "pantsgraph/curve.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <tuple>

namespace pg {

Curve Curve::base(int j) {
  if (j < 0) throw std::invalid_argument("negative base index");
  Curve c;
  c.base_ = j;
  return c;
}

Curve Curve::from_coords(std::map<int, Coord> coords) {
  Curve c;
  for (auto& [j, x] : coords) {
    if (j < 0) throw std::invalid_argument("negative curve index in coordinates");
    if (x.m < 0) throw std::invalid_argument("negative intersection number");
    if (x.m > 0) c.coords_[j] = x;
  }
  if (c.coords_.empty()) throw std::invalid_argument("coordinate curve with empty support");
  return c;
}

Coord Curve::at(int j) const {
  auto it = coords_.find(j);
  return it == coords_.end() ? Coord{} : it->second;
}

std::vector<int> Curve::support() const {
  std::vector<int> out;
  for (auto& [j, x] : coords_) out.push_back(j);
  return out;
}

std::string Curve::literal() const {
  if (is_base()) return "gamma:" + std::to_string(base_);
  std::string s = "{";
  bool first = true;
  for (auto& [j, x] : coords_) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(j) + ":(" + std::to_string(x.m) + "," + std::to_string(x.t) + ")";
  }
  return s + "}";
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw std::invalid_argument(std::string("curve literal: expected '") + c + "' in '" + s + "'");
  }
  long long integer() {
    skip();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw std::invalid_argument("curve literal: expected integer in '" + s + "'");
    return std::stoll(s.substr(start, i - start));
  }
  bool done() {
    skip();
    return i == s.size();
  }
};

}  // namespace

Curve Curve::parse(const std::string& text) {
  Cursor cur{text};
  cur.skip();
  if (text.compare(cur.i, 6, "gamma:") == 0) {
    cur.i += 6;
    long long j = cur.integer();
    if (!cur.done()) throw std::invalid_argument("curve literal: trailing text in '" + text + "'");
    return Curve::base(static_cast<int>(j));
  }
  cur.expect('{');
  std::map<int, Coord> coords;
  if (!cur.eat('}')) {
    do {
      long long j = cur.integer();
      cur.expect(':');
      cur.expect('(');
      long long m = cur.integer();
      cur.expect(',');
      long long t = cur.integer();
      cur.expect(')');
      if (coords.count(static_cast<int>(j))) throw std::invalid_argument("curve literal: repeated index");
      coords[static_cast<int>(j)] = {static_cast<int>(m), t};
    } while (cur.eat(','));
    cur.expect('}');
  }
  if (!cur.done()) throw std::invalid_argument("curve literal: trailing text in '" + text + "'");
  return Curve::from_coords(std::move(coords));
}

void to_json(nlohmann::json& j, const Curve& c) { j = c.literal(); }
void from_json(const nlohmann::json& j, Curve& c) { c = Curve::parse(j.get<std::string>()); }

ArcCounts arc_counts(const std::array<int, 3>& m) {
  if ((m[0] + m[1] + m[2]) % 2 != 0) throw std::invalid_argument("parity violation in pants");
  ArcCounts a;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    if (m[i] > m[j] + m[k]) {
      a.wave[i] = (m[i] - m[j] - m[k]) / 2;
      a.cross[k] = m[j];  // slots i and j
      a.cross[j] = m[k];  // slots i and k
      a.cross[i] = 0;
      return a;
    }
  }
  for (int k = 0; k < 3; ++k) {
    int i = (k + 1) % 3, j = (k + 2) % 3;
    a.cross[k] = std::max(0, (m[i] + m[j] - m[k]) / 2);
  }
  return a;
}

std::string RestrictionData::fingerprint() const {
  std::ostringstream o;
  o << "A";
  for (auto& [p, a] : pants_arcs)
    o << "|" << p << ":" << a.cross[0] << "," << a.cross[1] << "," << a.cross[2] << "," << a.wave[0] << ","
      << a.wave[1] << "," << a.wave[2];
  o << "|I";
  for (auto& [j, x] : interior) o << "|" << j << ":" << x.m << "," << x.t;
  o << "|C";
  for (auto& [j, m] : crossing) o << "|" << j << ":" << m;
  o << "|B";
  for (int j : interior_base) o << "|" << j;
  o << "|P";
  for (int j : peripheral) o << "|" << j;
  return o.str();
}

int ComponentMultiset::total() const {
  int t = 0;
  for (auto& [d, k] : items) t += k;
  return t;
}

std::set<std::string> ComponentMultiset::support() const {
  std::set<std::string> s;
  for (auto& [d, k] : items) s.insert(d);
  return s;
}

namespace {

// Points of a multicurve on the cuffs of a set of pants, joined by normal arcs inside each
// pants and by twisted gluing across base curves whose two sides both lie in the set.
class Tracer {
 public:
  using Key = std::tuple<int, int, int>;  // pants, slot, position

  Tracer(const SurfaceModel& model, const std::set<int>& region, const std::map<int, Coord>& totals)
      : model_(model) {
    auto m_of = [&](int j) {
      auto it = totals.find(j);
      return it == totals.end() ? 0 : it->second.m;
    };
    for (int p : region) {
      auto cell = model.pants(p);
      std::array<int, 3> m{m_of(cell.cuffs[0]), m_of(cell.cuffs[1]), m_of(cell.cuffs[2])};
      if (m[0] + m[1] + m[2] == 0) continue;
      ArcCounts a = arc_counts(m);
      for (int s = 0; s < 3; ++s)
        for (int x = 0; x < m[s]; ++x) node({p, s, x});
      for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        int nij = a.cross[k];
        int offset_j = a.cross[(j + 2) % 3] + a.wave[j];
        for (int r = 0; r < nij; ++r) link_inner({p, i, r}, {p, j, offset_j + (nij - 1 - r)});
        int w = a.wave[i];
        int first = a.cross[k];
        int second = a.cross[k] + w + a.cross[j];
        for (int q = 0; q < w; ++q) link_inner({p, i, first + q}, {p, i, second + (w - 1 - q)});
      }
    }
    for (auto& [j, x] : totals) {
      if (x.m == 0) continue;
      BaseCurve c = model.curve(j);
      if (!region.count(c.first.first) || !region.count(c.second.first)) continue;
      for (int q = 0; q < x.m; ++q) {
        long long y = ((x.t - 1 - q) % x.m + x.m) % x.m;
        link_glue({c.first.first, c.first.second, q}, {c.second.first, c.second.second, static_cast<int>(y)});
      }
    }
  }

  struct Step {
    int pants, in, out;
  };
  struct Piece {
    bool closed = false;
    int start_curve = -1, end_curve = -1;
    std::vector<Step> steps;
    std::map<int, int> points;  // base curve -> number of points visited on its slots
  };

  std::vector<Piece> pieces() {
    std::vector<char> seen(keys_.size(), 0);
    std::vector<Piece> out;
    for (std::size_t s = 0; s < keys_.size(); ++s)
      if (!seen[s] && glue_[s] < 0) out.push_back(walk(static_cast<int>(s), seen, false));
    for (std::size_t s = 0; s < keys_.size(); ++s)
      if (!seen[s]) out.push_back(walk(static_cast<int>(s), seen, true));
    return out;
  }

  int curve_of(int id) const {
    auto [p, s, x] = keys_[id];
    return model_.pants(p).cuffs[s];
  }

 private:
  int node(const Key& k) {
    auto it = ids_.find(k);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(keys_.size());
    ids_[k] = id;
    keys_.push_back(k);
    inner_.push_back(-1);
    glue_.push_back(-1);
    return id;
  }
  void link_inner(const Key& a, const Key& b) {
    int x = node(a), y = node(b);
    inner_[x] = y;
    inner_[y] = x;
  }
  void link_glue(const Key& a, const Key& b) {
    int x = node(a), y = node(b);
    glue_[x] = y;
    glue_[y] = x;
  }

  Piece walk(int start, std::vector<char>& seen, bool closed) {
    Piece pc;
    pc.closed = closed;
    pc.start_curve = curve_of(start);
    int cur = start;
    while (true) {
      seen[cur] = 1;
      pc.points[curve_of(cur)]++;
      int nxt = inner_[cur];
      if (nxt < 0) throw std::logic_error("unmatched normal-arc endpoint");
      seen[nxt] = 1;
      pc.points[curve_of(nxt)]++;
      pc.steps.push_back({std::get<0>(keys_[cur]), std::get<1>(keys_[cur]), std::get<1>(keys_[nxt])});
      if (glue_[nxt] < 0) {
        pc.end_curve = curve_of(nxt);
        return pc;
      }
      cur = glue_[nxt];
      if (cur == start) return pc;
    }
  }

  const SurfaceModel& model_;
  std::map<Key, int> ids_;
  std::vector<Key> keys_;
  std::vector<int> inner_, glue_;
};

std::string arc_descriptor(const Tracer::Piece& pc) {
  auto render = [](int a, const std::vector<Tracer::Step>& steps, int b) {
    std::string s = "arc:b" + std::to_string(a);
    for (auto& st : steps)
      s += "|p" + std::to_string(st.pants) + "." + std::to_string(st.in) + "-" + std::to_string(st.out);
    return s + "|b" + std::to_string(b);
  };
  std::vector<Tracer::Step> rev(pc.steps.rbegin(), pc.steps.rend());
  for (auto& st : rev) std::swap(st.in, st.out);
  return std::min(render(pc.start_curve, pc.steps, pc.end_curve), render(pc.end_curve, rev, pc.start_curve));
}

}  // namespace

std::set<int> carried_pants(const SurfaceModel& model, const Curve& c) {
  std::set<int> out;
  if (c.is_base()) {
    for (int p : model.window_pants(c.base_index())) out.insert(p);
    return out;
  }
  for (auto& [j, x] : c.coords())
    for (int p : model.window_pants(j)) out.insert(p);
  return out;
}

void validate_curve(const SurfaceModel& model, const Curve& c) {
  if (c.is_base()) return;
  std::set<int> region = carried_pants(model, c);
  for (int p : region) {
    auto cell = model.pants(p);
    std::array<int, 3> m{c.at(cell.cuffs[0]).m, c.at(cell.cuffs[1]).m, c.at(cell.cuffs[2]).m};
    arc_counts(m);
  }
  int k = closed_component_count(model, c);
  if (k != 1)
    throw std::invalid_argument("coordinates " + c.literal() + " describe " + std::to_string(k) +
                                " components, not one curve");
}

bool is_valid_curve(const SurfaceModel& model, const Curve& c) {
  try {
    validate_curve(model, c);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

int closed_component_count(const SurfaceModel& model, const Curve& c) {
  if (c.is_base()) return 1;
  Tracer tr(model, carried_pants(model, c), c.coords());
  int closed = 0;
  for (auto& pc : tr.pieces()) {
    if (!pc.closed) throw std::logic_error("open arc while tracing a closed curve");
    ++closed;
  }
  return closed;
}

bool meets(const SurfaceModel& model, const Curve& c, const Subsurface& sub) {
  if (c.is_base()) return sub.is_interior(c.base_index()) || sub.is_boundary(c.base_index());
  for (auto& [j, x] : c.coords())
    if (sub.is_interior(j) || sub.is_boundary(j)) return true;
  for (int p : carried_pants(model, c))
    if (sub.has_pants(p)) return true;
  return false;
}

bool contained_in(const SurfaceModel& model, const Curve& c, const Subsurface& sub) {
  if (c.is_base()) return sub.is_interior(c.base_index());
  for (int p : carried_pants(model, c))
    if (!sub.has_pants(p)) return false;
  return true;
}

RestrictionData restrict_to(const SurfaceModel& model, const std::vector<Curve>& curves, const Subsurface& sub) {
  RestrictionData r;
  std::map<int, Coord> totals;
  for (const Curve& c : curves) {
    if (c.is_base()) {
      int j = c.base_index();
      if (sub.is_interior(j)) r.interior_base.insert(j);
      else if (sub.is_boundary(j)) r.peripheral.insert(j);
      continue;
    }
    for (auto& [j, x] : c.coords()) {
      if (!sub.is_interior(j) && !sub.is_boundary(j)) continue;
      totals[j].m += x.m;
      totals[j].t += x.t;
    }
  }
  for (int p : sub.pants) {
    auto cell = model.pants(p);
    std::array<int, 3> m{};
    for (int s = 0; s < 3; ++s) {
      auto it = totals.find(cell.cuffs[s]);
      m[s] = it == totals.end() ? 0 : it->second.m;
    }
    if (m[0] + m[1] + m[2] == 0) continue;
    r.pants_arcs[p] = arc_counts(m);
  }
  for (auto& [j, x] : totals) {
    if (sub.is_interior(j)) r.interior[j] = x;
    else r.crossing[j] = x.m;
  }
  return r;
}

ComponentMultiset components(const SurfaceModel& model, const RestrictionData& r) {
  ComponentMultiset out;
  std::set<int> region;
  for (auto& [p, a] : r.pants_arcs) region.insert(p);
  std::map<int, Coord> totals = r.interior;
  for (auto& [j, m] : r.crossing) totals[j] = {m, 0};
  // Crossing curves must not be glued: their outer side is absent from the region.
  for (auto& [j, m] : r.crossing) {
    BaseCurve c = model.curve(j);
    if (region.count(c.first.first) && region.count(c.second.first))
      throw std::invalid_argument("crossing curve with both sides inside the restriction");
  }
  Tracer tr(model, region, totals);
  for (auto& pc : tr.pieces()) {
    if (!pc.closed) {
      out.items[arc_descriptor(pc)]++;
      continue;
    }
    std::map<int, Coord> coords;
    for (auto& [j, pts] : pc.points) {
      int m = pts / 2;
      const Coord& whole = r.interior.at(j);
      long long scaled = whole.t * m;
      if (scaled % whole.m != 0) throw std::invalid_argument("closed component with non-local twist data");
      coords[j] = {m, scaled / whole.m};
    }
    out.items["curve:" + Curve::from_coords(coords).literal()]++;
  }
  for (int j : r.interior_base) out.items["curve:" + Curve::base(j).literal()]++;
  for (int j : r.peripheral) out.items["peripheral:" + Curve::base(j).literal()]++;
  return out;
}

int window_intersection(WindowKind kind, Coord a, Coord b) {
  auto slope = [&](Coord c) -> std::pair<long long, long long> {
    if (c.m == 0) return {0, 1};
    return {kind == WindowKind::Sphere ? c.m / 2 : c.m, c.t};
  };
  auto [p, q] = slope(a);
  auto [r, s] = slope(b);
  long long det = p * s - q * r;
  if (det < 0) det = -det;
  return static_cast<int>(kind == WindowKind::Sphere ? 2 * det : det);
}

bool disjoint(const SurfaceModel& model, const Curve& a, const Curve& b) {
  if (a == b) return true;
  if (a.is_base() && b.is_base()) return true;
  if (a.is_base()) return b.at(a.base_index()).m == 0;
  if (b.is_base()) return a.at(b.base_index()).m == 0;
  if (a.coords().size() > 1 || b.coords().size() > 1)
    throw SupportTooLarge("disjointness is only decided for curves carried by one window");
  auto [ja, ca] = *a.coords().begin();
  auto [jb, cb] = *b.coords().begin();
  if (ja == jb) return window_intersection(model.window_kind(ja), ca, cb) == 0;
  return !model.windows_overlap(ja, jb);
}

}  // namespace pg
