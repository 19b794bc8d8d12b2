#include "pantsgraph/agreement.hpp"

#include <stdexcept>

namespace pg {

namespace {

void check_level(int level) {
  if (level < 0 || level > 4) throw std::invalid_argument("agreement level must be in 0..4");
}

std::string join(const std::vector<Curve>& cs) {
  std::string s;
  for (auto& c : cs) s += c.literal() + ";";
  return s;
}

}  // namespace

std::vector<Curve> meeting_curves(const SurfaceModel& model, const PantsDecomposition& x, int n) {
  std::vector<Curve> out;
  for (int j = 0; j <= model.boundary_index(n); ++j) out.push_back(x.curve(model, j));
  return out;
}

std::vector<Curve> contained_curves(const SurfaceModel& model, const PantsDecomposition& x, int n) {
  std::vector<Curve> out;
  for (int j = 0; j < model.boundary_index(n); ++j) out.push_back(x.curve(model, j));
  return out;
}

RestrictionData restriction(const SurfaceModel& model, const PantsDecomposition& x, int n) {
  return restrict_to(model, meeting_curves(model, x, n), model.exhaustion(n));
}

bool agrees(const SurfaceModel& model, int level, const PantsDecomposition& x, const PantsDecomposition& y, int n) {
  check_level(level);
  if (n < 0) throw std::invalid_argument("exhaustion index must be non-negative");
  switch (level) {
    case 0: return x == y;
    case 1: return meeting_curves(model, x, n) == meeting_curves(model, y, n);
    case 2: return restriction(model, x, n) == restriction(model, y, n);
    case 3:
      return components(model, restriction(model, x, n)).support() ==
             components(model, restriction(model, y, n)).support();
    default: return contained_curves(model, x, n) == contained_curves(model, y, n);
  }
}

std::string ball_key(const SurfaceModel& model, int level, int n, const PantsDecomposition& x) {
  check_level(level);
  std::string head = "L" + std::to_string(level) + "/n" + std::to_string(n) + ":";
  switch (level) {
    case 0: return head + x.canonical();
    case 1: return head + join(meeting_curves(model, x, n));
    case 2: return head + restriction(model, x, n).fingerprint();
    case 3: {
      std::string s;
      for (auto& d : components(model, restriction(model, x, n)).support()) s += d + ";";
      return head + s;
    }
    default: return head + join(contained_curves(model, x, n));
  }
}

std::string to_string(const AgreementDepth& d) {
  switch (d.kind) {
    case AgreementDepth::Kind::None: return "none";
    case AgreementDepth::Kind::Exact: return "exact " + std::to_string(d.n);
    default: return "at_least " + std::to_string(d.n);
  }
}

AgreementDepth max_agreement(const SurfaceModel& model, int level, const PantsDecomposition& x,
                             const PantsDecomposition& y, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  for (int n = 0; n <= n_max; ++n) {
    if (agrees(model, level, x, y, n)) continue;
    if (n == 0) return {AgreementDepth::Kind::None, 0};
    return {AgreementDepth::Kind::Exact, n - 1};
  }
  return {AgreementDepth::Kind::AtLeast, n_max};
}

std::optional<SeparatingPair> make_separating_pair(const SurfaceModel& model, int level, int n, int budget) {
  if (level < 1 || level > 4) throw std::invalid_argument("separating pairs exist for levels 1..4");
  PantsDecomposition base;
  std::vector<PantsDecomposition> pool{base};
  int b = model.boundary_index(n);
  for (int j = std::max(0, b - 4); j <= b + 2; ++j)
    for (auto& m : enumerate_moves_at(model, base, j, budget).moves) pool.push_back(apply_move(model, base, m));
  for (auto& m0 : enumerate_moves_at(model, base, b, budget).moves) {
    PantsDecomposition x = apply_move(model, base, m0);
    for (auto& m1 : enumerate_moves_at(model, x, b, budget).moves)
      if (m1.to != LocalSlope::base()) pool.push_back(apply_move(model, x, m1));
  }
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t c = a + 1; c < pool.size(); ++c)
      if (agrees(model, level, pool[a], pool[c], n) && !agrees(model, level - 1, pool[a], pool[c], n))
        return SeparatingPair{level, n, pool[a], pool[c]};
  return std::nullopt;
}

}  // namespace pg
