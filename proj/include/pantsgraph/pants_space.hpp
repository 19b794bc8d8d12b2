#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pantsgraph/vertex_metric.hpp"

namespace pg {

// A vertex X, or an edge point (X, a, Y) with 0 < a < 1 on the edge joining adjacent X and Y.
// Edge points are stored with canonical(X) < canonical(Y).
class PantsPoint {
 public:
  static PantsPoint vertex(PantsDecomposition x);
  // Collapses a ∈ {0,1} to a vertex; throws on non-adjacent endpoints or a ∉ [0,1].
  static PantsPoint normalize(const SurfaceModel& model, PantsDecomposition x, Rational a, PantsDecomposition y);

  bool is_vertex() const { return !edge_; }
  bool is_edge() const { return edge_; }
  const PantsDecomposition& x() const { return x_; }
  const PantsDecomposition& y() const { return y_; }
  Rational a() const { return a_; }

  nlohmann::json to_json(const SurfaceModel& model) const;
  static PantsPoint from_json(const SurfaceModel& model, const nlohmann::json& j);
  bool operator==(const PantsPoint&) const = default;

 private:
  bool edge_ = false;
  PantsDecomposition x_, y_;
  Rational a_{0};
};

bool point_agrees(const SurfaceModel& model, int level, const PantsPoint& p, const PantsPoint& q, int n);

// A basic open set (or its closure) as a finite union of regions.
struct Interval {
  Rational lo, hi;
  bool lo_closed = false, hi_closed = false;
  bool contains(Rational v) const;
  bool empty() const;
};

struct Region {
  enum class Kind { Vertices, Edges, Branch };
  Kind kind = Kind::Vertices;
  std::string first_key;             // agreement-class key of the first endpoint
  std::optional<std::string> second_key;  // nullopt: any adjacent vertex
  Interval range;                    // parameter measured from the first endpoint
  int side = 0;                      // Branch: which endpoint of the center is passed through
};

struct Neighborhood {
  int level = 1;
  int n = 0;
  Rational eps;
  bool closed = false;
  PantsPoint center;
  std::vector<Region> regions;
};

// 𝔻^i_{ε,n}(P), or its closure formula when `closed`. Requires 0 < ε ≤ 1.
Neighborhood neighborhood(const SurfaceModel& model, int level, Rational eps, int n, const PantsPoint& p,
                          bool closed = false);
bool contains(const SurfaceModel& model, const Neighborhood& nb, const PantsPoint& q);

bool in_open(const SurfaceModel& model, int level, Rational eps, int n, const PantsPoint& p, const PantsPoint& q);
// n = floor(1/ε)
bool in_basic_open(const SurfaceModel& model, int level, Rational eps, const PantsPoint& p, const PantsPoint& q);
// Throws std::invalid_argument outside the parameter range where the closure formula holds.
bool in_closure(const SurfaceModel& model, int level, Rational eps, int n, const PantsPoint& p, const PantsPoint& q);

// Region-wise disjointness that holds by the agreement-class disjointness and interval separation.
bool certified_disjoint(const Neighborhood& a, const Neighborhood& b);

struct Separation {
  Rational eps;
  int n = 0;
  Neighborhood around_p, around_q;
};
Separation separation_witness(const SurfaceModel& model, int level, const PantsPoint& p, const PantsPoint& q);

// One term of a point stream in the chosen representation (X_k, a_k, Y_k). With a_k = 0 the term is
// the vertex X_k and Y_k may equal X_k.
struct PointTerm {
  PantsDecomposition x, y;
  Rational a{0};
  PantsPoint point(const SurfaceModel& model) const;
};

struct PointStream {
  std::vector<PointTerm> prefix;
  int clause = 1;
  // Representation of the limit used by the certificate.
  PantsDecomposition limit_x, limit_y;
  Rational limit_a{0};
  std::vector<int> x_stable, y_stable;  // from index N_k on, X_j (Y_j) agrees with the limit on S_k
  std::vector<int> a_stable;            // from index M_k on, the parameter is within 1/(k+1) of its limit
};

struct Verdict {
  bool ok = false;
  int clause = 0;
  std::string reason;
};

Verdict converges(const SurfaceModel& model, int level, const PointStream& s, const PantsPoint& p);

// First index from which every materialized term must lie in 𝔻^i_ε(P), read off the certificate.
std::optional<int> entry_index(const SurfaceModel& model, const PointStream& s, Rational eps);

// (X_n, a, Y_n) with X_n → X inside the component of `start` and Y_n obtained by the X→Y move.
PointStream density_stream(const SurfaceModel& model, const PantsDecomposition& start, const PantsDecomposition& x,
                           Rational a, const PantsDecomposition& y, int depth);

// Explicit path from X to Y through the converging sequence: X_m at t = 1 - 1/m, Y at t = 1.
class PathFunction {
 public:
  PathFunction(const SurfaceModel& model, PantsDecomposition x, PantsDecomposition y);
  PantsPoint at(Rational t);
  const std::vector<PantsDecomposition>& states() const { return path_.states; }
  // Vertices X_m, m = 1..count, certified to converge to Y by clause 2.
  PointStream vertex_stream(int level, int depth);

 private:
  void extend_to(std::size_t states_needed);
  const SurfaceModel& model_;
  PantsDecomposition x_, y_;
  int depth_ = 0;
  ConvergePath path_;
  bool finished_ = false;
};

// Unordered endpoint pair of an edge point.
std::pair<std::string, std::string> edge_class(const PantsPoint& p);

}  // namespace pg
