#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pantsgraph/agreement.hpp"
#include "pantsgraph/rational.hpp"

namespace pg {

struct DHat {
  enum class Kind { Value, Below, Undefined };
  Kind kind = Kind::Undefined;
  Rational value{0};  // the value, or the strict upper bound for Below

  bool defined() const { return kind == Kind::Value; }
  std::string str() const;
};

// Agreement probe depth that always resolves d̂ for distinct decompositions.
int auto_probe_depth(const SurfaceModel& model, const PantsDecomposition& x, const PantsDecomposition& y);

// n_max < 0 picks auto_probe_depth.
DHat dhat(const SurfaceModel& model, int level, const PantsDecomposition& x, const PantsDecomposition& y,
          int n_max = -1);

struct UltrametricVerdict {
  Rational xy, yz, xz;
  bool holds = false;
};
// Throws std::domain_error when some pair has undefined d̂.
UltrametricVerdict ultrametric_check(const SurfaceModel& model, int level, const PantsDecomposition& x,
                                     const PantsDecomposition& y, const PantsDecomposition& z);

struct LowerBound {
  Rational value;
  int n = 0;  // least exhaustion index holding the relevant windows
};
// Requires d̂ undefined; throws std::invalid_argument otherwise.
LowerBound lower_bound(const SurfaceModel& model, int level, const PantsDecomposition& x,
                       const PantsDecomposition& y);

struct DistBounds {
  Rational lo, hi;
  bool exact = false;
  std::vector<PantsDecomposition> witness;  // d̂ steps along it sum to hi
};

DistBounds distance(const SurfaceModel& model, int level, const PantsDecomposition& x, const PantsDecomposition& y,
                    int budget);

// Sum of d̂ along a sequence; nullopt when some step is undefined.
std::optional<Rational> path_length(const SurfaceModel& model, int level, const std::vector<PantsDecomposition>& path);

// Unit-move path between two local slopes of one window, shortest within the height bound.
std::vector<LocalSlope> farey_path(LocalSlope from, LocalSlope to, long long height_bound);

struct ConvergePath {
  std::vector<ElementaryMove> word;
  std::vector<PantsDecomposition> states;  // states[0] = X, states[s+1] = after word[s]
  std::vector<int> stage_ends;             // states[stage_ends[k]] agrees with Y on S_k
};

// Stage k changes only indices beyond ∂S_{k-1}; requires Y to be base on ∂S_k for k ≤ depth.
ConvergePath converge_path(const SurfaceModel& model, const PantsDecomposition& x, const PantsDecomposition& y,
                           int depth);

struct DecompositionStream {
  std::vector<PantsDecomposition> prefix;
  std::vector<int> stabilization;  // N_k: terms from N_k on agree with each other on S_k
  TailPattern limit_tail;
};

DecompositionStream stream_from_path(const SurfaceModel& model, const ConvergePath& path,
                                     const PantsDecomposition& y);
// Empty string when the certificate holds on the prefix, else the first violation.
std::string check_stream(const SurfaceModel& model, int level, const DecompositionStream& s);
// Throws std::invalid_argument on certificate violation.
PantsDecomposition limit_of(const SurfaceModel& model, int level, const DecompositionStream& s);

struct Triple {
  PantsDecomposition x, y, z;
};
std::optional<Triple> find_nonultrametric_witness(const SurfaceModel& model, int level, int budget);

}  // namespace pg
