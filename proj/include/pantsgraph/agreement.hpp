#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pantsgraph/decomposition.hpp"

namespace pg {

// Curves of X meeting S_n, in index order.
std::vector<Curve> meeting_curves(const SurfaceModel& model, const PantsDecomposition& x, int n);
// Curves of X contained in the interior of S_n, in index order.
std::vector<Curve> contained_curves(const SurfaceModel& model, const PantsDecomposition& x, int n);
RestrictionData restriction(const SurfaceModel& model, const PantsDecomposition& x, int n);

// Levels: 0 equality, 1 meeting-curve sets, 2 restriction data, 3 restriction components
// without multiplicity, 4 contained-curve sets.
bool agrees(const SurfaceModel& model, int level, const PantsDecomposition& x, const PantsDecomposition& y, int n);

// Equal keys iff the decompositions agree at (level, n).
std::string ball_key(const SurfaceModel& model, int level, int n, const PantsDecomposition& x);

struct AgreementDepth {
  enum class Kind { None, Exact, AtLeast };
  Kind kind = Kind::None;
  int n = 0;  // meaningful for Exact and AtLeast
  bool operator==(const AgreementDepth&) const = default;
};
std::string to_string(const AgreementDepth& d);

// Largest n ≤ n_max with agreement on S_n; None when they disagree on S_0.
AgreementDepth max_agreement(const SurfaceModel& model, int level, const PantsDecomposition& x,
                             const PantsDecomposition& y, int n_max);

struct SeparatingPair {
  int level = 0;
  int n = 0;
  PantsDecomposition x, y;
};

// Pair that agrees at `level` but not at `level - 1` on S_n, from single overrides of the base
// decomposition near the boundary of S_n with height ≤ budget. nullopt when the search runs dry.
std::optional<SeparatingPair> make_separating_pair(const SurfaceModel& model, int level, int n, int budget);

}  // namespace pg
