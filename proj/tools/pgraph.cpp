// pgraph: batch front-end. Every command prints JSON (one object per line) to stdout or --out.
// Failures print {"error": {...}} to stderr and exit nonzero.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "json.hpp"
#include "pantsgraph/oracle.hpp"
#include "pantsgraph/suite.hpp"
#include "pantsgraph/twist.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config_path;
  int shell = 4;
  int level = 1;
  int budget = 2;
  std::uint64_t seed = 7;
  std::string out;
};

// Inline JSON when the argument starts with '{', '[' or '"'; a file path otherwise.
json load_json(const std::string& arg, fs::path* dir = nullptr) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[' || arg[0] == '"')) {
    try {
      return json::parse(arg);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("malformed inline JSON: ") + e.what());
    }
  }
  std::ifstream in(arg);
  if (!in) throw InputError("cannot open input file: " + arg);
  if (dir) *dir = fs::path(arg).parent_path();
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + arg + ": " + e.what());
  }
}

json resolve(const json& j, const fs::path& dir) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s.size() > 5 && s.ends_with(".json")) return load_json((dir / s).string());
  }
  return j;
}

// A decomposition literal, optionally followed by a move script {"moves": [{"index", "inserted"}]}.
pg::PantsDecomposition decomposition_from(const pg::SurfaceModel& m, const json& j) {
  auto x = pg::PantsDecomposition::from_json(m, j.contains("start") ? j.at("start") : j);
  if (!j.contains("moves")) return x;
  for (const auto& mv : j.at("moves")) {
    int index = mv.at("index").get<int>();
    auto lf = pg::local_form(m, pg::Curve::parse(mv.at("inserted").get<std::string>()));
    if (!lf || lf->first != index) throw std::invalid_argument("move script entry is not carried by window " + std::to_string(index));
    x = pg::apply_move(m, x, {index, x.at(index), lf->second, m.window_kind(index)});
  }
  return x;
}

pg::PantsDecomposition load_decomposition(const pg::SurfaceModel& m, const std::string& arg) {
  fs::path dir;
  return decomposition_from(m, load_json(arg, &dir));
}

pg::PantsPoint load_point(const pg::SurfaceModel& m, const std::string& arg) {
  fs::path dir;
  json j = load_json(arg, &dir);
  if (j.contains("vertex")) return pg::PantsPoint::vertex(decomposition_from(m, resolve(j.at("vertex"), dir)));
  if (!j.contains("edge")) return pg::PantsPoint::vertex(decomposition_from(m, j));
  const auto& e = j.at("edge");
  if (!e.is_array() || e.size() != 3) throw InputError("edge literal needs [X, a, Y]");
  return pg::PantsPoint::normalize(m, decomposition_from(m, resolve(e[0], dir)),
                                   pg::parse_rational(e[1].get<std::string>()),
                                   decomposition_from(m, resolve(e[2], dir)));
}

json stream_json(const pg::SurfaceModel& m, const pg::PointStream& s) {
  json terms = json::array();
  for (auto& t : s.prefix) terms.push_back(t.point(m).to_json(m));
  return {{"clause", s.clause}, {"terms", terms}, {"x_stable", s.x_stable}, {"y_stable", s.y_stable},
          {"a_stable", s.a_stable}};
}

json region_json(const pg::Region& r) {
  static const char* kinds[] = {"vertices", "edges", "branch"};
  json j{{"kind", kinds[static_cast<int>(r.kind)]}, {"first", r.first_key}};
  if (r.second_key) j["second"] = *r.second_key;
  if (r.kind != pg::Region::Kind::Vertices)
    j["range"] = {{"lo", pg::to_string(r.range.lo)}, {"hi", pg::to_string(r.range.hi)},
                  {"lo_closed", r.range.lo_closed}, {"hi_closed", r.range.hi_closed}};
  return j;
}

json neighborhood_json(const pg::SurfaceModel& m, const pg::Neighborhood& nb) {
  json regions = json::array();
  for (auto& r : nb.regions) regions.push_back(region_json(r));
  return {{"level", nb.level}, {"n", nb.n}, {"eps", pg::to_string(nb.eps)}, {"closed", nb.closed},
          {"center", nb.center.to_json(m)}, {"regions", regions}};
}

json dhat_json(const pg::DHat& h) {
  static const char* kinds[] = {"value", "below", "undefined"};
  json j{{"kind", kinds[static_cast<int>(h.kind)]}};
  if (h.kind != pg::DHat::Kind::Undefined) j["value"] = pg::to_string(h.value);
  return j;
}

pg::oracle::Slope parse_slope(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return pg::oracle::Slope::make(std::stoll(s), 1);
  return pg::oracle::Slope::make(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InputError("cannot open output file: " + path);
    }
  }
  void line(const json& j) { stream() << j.dump() << '\n' << std::flush; }

 private:
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  std::unique_ptr<std::ofstream> file_;
};

void apply_config(Options& o, CLI::App& app) {
  if (o.config_path.empty()) return;
  json c = load_json(o.config_path);
  auto unset = [&](const char* flag) { return app.count(flag) == 0; };
  if (c.contains("shell_size") && unset("--model-shell")) o.shell = c["shell_size"].get<int>();
  if (c.contains("level") && unset("--level")) o.level = c["level"].get<int>();
  if (c.contains("budget") && unset("--budget")) o.budget = c["budget"].get<int>();
  if (c.contains("seed") && unset("--seed")) o.seed = c["seed"].get<std::uint64_t>();
  if (c.contains("out") && unset("--out")) o.out = c["out"].get<std::string>();
}

void check_options(const Options& o) {
  if (o.level < 0 || o.level > 4) throw InputError("--level must be in 0..4");
  if (o.budget < 1) throw InputError("--budget must be positive");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pants decompositions of a one-ended infinite-genus surface"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config_path, "JSON file with shell_size, level, budget, seed, out");
  app.add_option("--model-shell", o.shell, "links per exhaustion shell (>= 4)");
  app.add_option("--level", o.level, "agreement level 0..4");
  app.add_option("--budget", o.budget, "height / search budget");
  app.add_option("--seed", o.seed, "sampler seed");
  app.add_option("--out", o.out, "write records here instead of stdout");

  std::function<void(const pg::SurfaceModel&, Output&)> action;

  // agree
  std::string xa, ya;
  int n = 0;
  auto* agree = app.add_subcommand("agree", "i-agreement on S_n");
  agree->add_option("--n", n, "exhaustion index")->required();
  agree->add_option("X", xa)->required();
  agree->add_option("Y", ya)->required();
  agree->callback([&] {
    action = [&](const pg::SurfaceModel& m, Output& out) {
      auto x = load_decomposition(m, xa), y = load_decomposition(m, ya);
      auto kx = pg::ball_key(m, o.level, n, x), ky = pg::ball_key(m, o.level, n, y);
      json j{{"level", o.level}, {"n", n}, {"agrees", pg::agrees(m, o.level, x, y, n)}};
      if (kx != ky) j["diff"] = {{"x", kx}, {"y", ky}};
      else j["fingerprint"] = kx;
      out.line(j);
    };
  });

  // dhat
  int probe = -1;
  auto* dh = app.add_subcommand("dhat", "vertex pseudo-distance");
  dh->add_option("--probe", probe, "agreement probe depth; default resolves every distinct pair");
  dh->add_option("X", xa)->required();
  dh->add_option("Y", ya)->required();
  dh->callback([&] {
    action = [&](const pg::SurfaceModel& m, Output& out) {
      auto x = load_decomposition(m, xa), y = load_decomposition(m, ya);
      json j = dhat_json(pg::dhat(m, o.level, x, y, probe));
      j["level"] = o.level;
      j["depth"] = pg::to_string(pg::max_agreement(m, o.level, x, y, probe < 0 ? pg::auto_probe_depth(m, x, y) : probe));
      out.line(j);
    };
  });

  // dist
  auto* di = app.add_subcommand("dist", "certified bounds on the vertex metric");
  di->add_option("X", xa)->required();
  di->add_option("Y", ya)->required();
  di->callback([&] {
    action = [&](const pg::SurfaceModel& m, Output& out) {
      auto d = pg::distance(m, o.level, load_decomposition(m, xa), load_decomposition(m, ya), o.budget);
      json w = json::array();
      for (auto& v : d.witness) w.push_back(v.to_json(m));
      out.line({{"lo", pg::to_string(d.lo)}, {"hi", pg::to_string(d.hi)}, {"exact", d.exact}, {"witness", w}});
    };
  });

  // converge-path
  int depth = 4;
  auto* cp = app.add_subcommand("converge-path", "move word from X converging to Y stage by stage");
  cp->add_option("--depth", depth, "last stage");
  cp->add_option("X", xa)->required();
  cp->add_option("Y", ya)->required();
  cp->callback([&] {
    action = [&](const pg::SurfaceModel& m, Output& out) {
      auto y = load_decomposition(m, ya);
      auto p = pg::converge_path(m, load_decomposition(m, xa), y, depth);
      json word = json::array();
      for (auto& mv : p.word) word.push_back(mv.to_json(m));
      json dh = json::array();
      for (int e : p.stage_ends) dh.push_back(dhat_json(pg::dhat(m, o.level, p.states[static_cast<std::size_t>(e)], y)));
      out.line({{"word", word}, {"stage_ends", p.stage_ends}, {"stage_dhat", dh}});
    };
  });

  // pspace
  auto* ps = app.add_subcommand("pspace", "pants space points, neighborhoods and streams");
  ps->require_subcommand(1);
  std::string pa, qa, eps_text = "1/2", t_text = "1/2";
  bool closed = false;
  auto* member = ps->add_subcommand("member", "is Q in the basic open (or closure) around P");
  member->add_option("--eps", eps_text);
  member->add_option("--n", n, "exhaustion index; default floor(1/eps)");
  member->add_flag("--closed", closed);
  member->add_option("P", pa)->required();
  member->add_option("Q", qa)->required();
  member->callback([&] {
    action = [&](const pg::SurfaceModel& m, Output& out) {
      auto eps = pg::parse_rational(eps_text);
      auto p = load_point(m, pa), q = load_point(m, qa);
      int nn = member->count("--n") ? n : static_cast<int>(boost::rational_cast<long long>(pg::Rational(1) / eps));
      auto nb = pg::neighborhood(m, o.level, eps, nn, p, closed);
      out.line({{"member", pg::contains(m, nb, q)}, {"neighborhood", neighborhood_json(m, nb)}});
    };
  });
  std::string start_a;
  auto* conv = ps->add_subcommand("converge", "density stream from a component toward P, with its certificate");
  conv->add_option("--start", start_a, "decomposition fixing the component")->required();
  conv->add_option("--depth", depth);
  conv->add_option("P", pa)->required();
  conv->callback([&] {
    action = [&](const pg::SurfaceModel& m, Output& out) {
      auto p = load_point(m, pa);
      auto s = pg::density_stream(m, load_decomposition(m, start_a), p.x(), p.is_vertex() ? pg::Rational(0) : p.a(),
                                  p.is_vertex() ? p.x() : p.y(), depth);
      auto v = pg::converges(m, o.level, s, p);
      json entry;
      for (auto e : {pg::Rational(1), pg::Rational(1, 2), pg::Rational(1, 3)}) {
        auto k = pg::entry_index(m, s, e);
        entry[pg::to_string(e)] = k ? json(*k) : json(nullptr);
      }
      out.line({{"converges", v.ok}, {"clause", v.clause}, {"reason", v.reason}, {"entry", entry},
                {"stream", stream_json(m, s)}});
    };
  });
  auto* sep = ps->add_subcommand("separate", "disjoint basic opens around two distinct points");
  sep->add_option("P", pa)->required();
  sep->add_option("Q", qa)->required();
  sep->callback([&] {
    action = [&](const pg::SurfaceModel& m, Output& out) {
      auto w = pg::separation_witness(m, o.level, load_point(m, pa), load_point(m, qa));
      out.line({{"eps", pg::to_string(w.eps)}, {"n", w.n}, {"certified", pg::certified_disjoint(w.around_p, w.around_q)},
                {"around_p", neighborhood_json(m, w.around_p)}, {"around_q", neighborhood_json(m, w.around_q)}});
    };
  });
  auto* clo = ps->add_subcommand("closure", "closure-formula membership");
  clo->add_option("--eps", eps_text);
  clo->add_option("--n", n)->required();
  clo->add_option("P", pa)->required();
  clo->add_option("Q", qa)->required();
  clo->callback([&] {
    action = [&](const pg::SurfaceModel& m, Output& out) {
      auto eps = pg::parse_rational(eps_text);
      auto p = load_point(m, pa), q = load_point(m, qa);
      out.line({{"closure", pg::in_closure(m, o.level, eps, n, p, q)}, {"open", pg::in_open(m, o.level, eps, n, p, q)}});
    };
  });
  auto* path = ps->add_subcommand("path", "point of the explicit path from X to Y");
  path->add_option("--t", t_text, "parameter in [0,1]");
  path->add_option("X", xa)->required();
  path->add_option("Y", ya)->required();
  path->callback([&] {
    action = [&](const pg::SurfaceModel& m, Output& out) {
      auto y = load_decomposition(m, ya);
      pg::PathFunction f(m, load_decomposition(m, xa), y);
      auto point = f.at(pg::parse_rational(t_text));
      auto v = pg::converges(m, o.level, f.vertex_stream(o.level, 3), pg::PantsPoint::vertex(y));
      out.line({{"t", t_text}, {"point", point.to_json(m)}, {"endpoint_converges", v.ok}});
    };
  });

  // twist
  auto* tw = app.add_subcommand("twist", "base-curve twist profiles");
  tw->require_subcommand(1);
  std::string fa, input;
  auto* tapply = tw->add_subcommand("apply", "image of a curve literal, decomposition or point");
  tapply->add_option("--profile", fa)->required();
  tapply->add_option("INPUT", input)->required();
  tapply->callback([&] {
    action = [&](const pg::SurfaceModel& m, Output& out) {
      auto f = pg::TwistProfile::from_json(load_json(fa));
      if (input.starts_with("gamma:") || input.starts_with("{") && input.find('"') == std::string::npos) {
        out.line({{"curve", pg::act_on_curve(m, f, pg::Curve::parse(input)).literal()}});
        return;
      }
      fs::path dir;
      json j = load_json(input, &dir);
      if (j.contains("vertex") || j.contains("edge"))
        out.line({{"point", pg::act_on_point(m, f, load_point(m, input)).to_json(m)}});
      else
        out.line({{"decomposition", pg::act_on_decomposition(m, f, decomposition_from(m, j)).to_json(m)}});
    };
  });
  auto* tconv = tw->add_subcommand("convergence-test", "truncation stream acting on a density stream");
  tconv->add_option("--profile", fa)->required();
  tconv->add_option("--start", start_a)->required();
  tconv->add_option("--depth", depth);
  tconv->add_option("P", pa)->required();
  tconv->callback([&] {
    action = [&](const pg::SurfaceModel& m, Output& out) {
      auto f = pg::TwistProfile::from_json(load_json(fa));
      auto p = load_point(m, pa);
      auto s = pg::density_stream(m, load_decomposition(m, start_a), p.x(), p.is_vertex() ? pg::Rational(0) : p.a(),
                                  p.is_vertex() ? p.x() : p.y(), depth);
      auto profiles = pg::truncation_stream(m, f, depth);
      auto pv = pg::profile_converges(m, profiles, f, depth);
      auto rep = pg::action_continuity_test(m, o.level, profiles, s, f, p);
      out.line({{"profiles_converge", pv.ok}, {"image_converges", rep.verdict.ok}, {"reason", rep.verdict.reason},
                {"image_limit", rep.image_limit.to_json(m)}, {"image", stream_json(m, rep.image)}});
    };
  });

  // oracle
  auto* orc = app.add_subcommand("oracle", "brute-force cross-checks");
  orc->require_subcommand(1);
  long long height = 3;
  std::string kind_text = "torus", sa, sb;
  auto* omoves = orc->add_subcommand("check-moves", "engine moves against brute-force adjacency");
  omoves->add_option("--height", height);
  omoves->callback([&] {
    action = [&](const pg::SurfaceModel& m, Output& out) {
      for (int j : {2, 4}) {
        auto kind = m.window_kind(j);
        auto g = pg::oracle::brute_pants_graph({kind}, height);
        long long mismatches = 0;
        for (std::size_t v = 0; v < g.vertices.size(); ++v) {
          auto sl = g.vertices[v][0];
          auto x = pg::PantsDecomposition{}.with(
              m, j, sl.q == 0 ? pg::LocalSlope::base() : pg::LocalSlope::make(sl.q, sl.p));
          std::set<pg::oracle::Slope> engine, brute;
          for (auto& mv : pg::enumerate_moves_at(m, x, j, static_cast<int>(height)).moves)
            engine.insert(pg::oracle::Slope::make(mv.to.q, mv.to.p));
          for (int u : g.adjacency[v]) brute.insert(g.vertices[static_cast<std::size_t>(u)][0]);
          if (engine != brute) ++mismatches;
        }
        out.line({{"window", pg::to_string(kind)}, {"index", j}, {"vertices", g.vertices.size()},
                  {"edges", g.edge_count()}, {"mismatches", mismatches}});
      }
    };
  });
  auto* odist = orc->add_subcommand("check-distance", "Farey distance by recursion against bounded BFS");
  odist->add_option("A", sa)->required();
  odist->add_option("B", sb)->required();
  odist->add_option("--height", height);
  odist->callback([&] {
    action = [&](const pg::SurfaceModel&, Output& out) {
      auto a = parse_slope(sa), b = parse_slope(sb);
      long long bound = std::max({height, a.height(), b.height()});
      int f = pg::oracle::farey_distance(a, b), g = pg::oracle::bfs_distance(a, b, bound);
      out.line({{"a", a.str()}, {"b", b.str()}, {"farey", f}, {"bfs", g}, {"agree", f == g}});
    };
  });
  auto* odump = orc->add_subcommand("dump-graph", "explicit graph of one or two windows");
  std::vector<std::string> kinds{"torus"};
  odump->add_option("--window", kinds, "torus or sphere, repeat for a product");
  odump->add_option("--height", height);
  odump->callback([&] {
    action = [&](const pg::SurfaceModel&, Output& out) {
      std::vector<pg::WindowKind> w;
      for (auto& k : kinds) {
        if (k == "torus") w.push_back(pg::WindowKind::Torus);
        else if (k == "sphere") w.push_back(pg::WindowKind::Sphere);
        else throw InputError("window kind must be torus or sphere: " + k);
      }
      auto g = pg::oracle::brute_pants_graph(w, height);
      json verts = json::array();
      for (auto& v : g.vertices) {
        json row = json::array();
        for (auto& s : v) row.push_back(s.str());
        verts.push_back(row);
      }
      out.line({{"vertices", verts}, {"adjacency", g.adjacency}, {"edges", g.edge_count()}});
    };
  });

  // witness
  auto* wit = app.add_subcommand("witness", "constructive witnesses");
  wit->require_subcommand(1);
  auto* nonu = wit->add_subcommand("nonultrametric", "X, Y, Z with short legs and a long side");
  nonu->callback([&] {
    action = [&](const pg::SurfaceModel& m, Output& out) {
      if (o.level < 1) throw InputError("witness search needs --level 1..4");
      auto w = pg::find_nonultrametric_witness(m, o.level, o.budget);
      if (!w) {
        out.line({{"level", o.level}, {"found", false}});
        return;
      }
      auto lo = pg::distance(m, o.level, w->x, w->z, o.budget).lo;
      out.line({{"level", o.level}, {"found", true}, {"x", w->x.to_json(m)}, {"y", w->y.to_json(m)},
                {"z", w->z.to_json(m)}, {"dhat_xy", dhat_json(pg::dhat(m, o.level, w->x, w->y))},
                {"dhat_yz", dhat_json(pg::dhat(m, o.level, w->y, w->z))}, {"lo_xz", pg::to_string(lo)},
                {"certified", lo > pg::Rational(1)}});
    };
  });

  // suite
  pg::SuiteConfig sc;
  auto* su = app.add_subcommand("suite", "property battery, one record per claim");
  su->add_option("--pairs", sc.pairs, "sampled pairs per property");
  su->add_option("--fixtures", sc.fixtures, "constructed fixtures per property");
  su->callback([&] {
    action = [&](const pg::SurfaceModel& m, Output& out) {
      sc.seed = o.seed;
      sc.budget = o.budget;
      sc.level = app.count("--level") ? o.level : -1;
      bool all = true;
      pg::run_suite(m, sc, [&](const pg::CheckRecord& r) {
        out.line(r.to_json());
        all = all && r.pass;
      });
      if (!all) throw std::runtime_error("suite reported failing claims");
    };
  });

  // chart
  auto* ch = app.add_subcommand("chart", "pants and curves of S_n");
  ch->add_option("--n", n);
  ch->callback([&] { action = [&](const pg::SurfaceModel& m, Output& out) { out.line(m.chart_json(n)); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump() << '\n';
    return 2;
  }

  try {
    apply_config(o, app);
    check_options(o);
    auto model = pg::build_model(o.shell);
    Output out(o.out);
    action(model, out);
  } catch (const InputError& e) {
    std::cerr << json{{"error", {{"kind", "input"}, {"message", e.what()}}}}.dump() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << json{{"error", {{"kind", "input"}, {"message", e.what()}}}}.dump() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", {{"kind", "invalid"}, {"message", e.what()}}}}.dump() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", {{"kind", "failure"}, {"message", e.what()}}}}.dump() << '\n';
    return 1;
  }
  return 0;
}
