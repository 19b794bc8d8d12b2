#include "doctest.h"
#include "pantsgraph/twist.hpp"
#include "support/gen.hpp"

using namespace pg;

namespace {
const SurfaceModel& model() {
  static SurfaceModel m = build_model(4);
  return m;
}
}  // namespace

TEST_SUITE("twist") {
  TEST_CASE("zero profile is the identity") {
    auto& m = model();
    TwistProfile id;
    auto c = curve_at(m, 4, LocalSlope::make(2, 3));
    CHECK(act_on_curve(m, id, c) == c);
  }

  TEST_CASE("base curves are fixed") {
    auto& m = model();
    auto f = TwistProfile::make({{2, 5}}, {1, -2, 3});
    for (int j = 0; j <= 30; ++j) CHECK(act_on_curve(m, f, Curve::base(j)) == Curve::base(j));
    CHECK(act_on_decomposition(m, f, PantsDecomposition{}) == PantsDecomposition{});
  }

  TEST_CASE("one twist adds m to t") {
    auto& m = model();
    auto c = Curve::from_coords({{4, {2, 1}}});
    auto img = act_on_curve(m, TwistProfile::single(4, 1), c);
    CHECK(img.at(4).m == 2);
    CHECK(img.at(4).t == 3);
  }

  TEST_CASE("torus twist is a Farey transvection") {
    // Twisting about the base curve fixes the base slope and keeps adjacency.
    auto& m = model();
    auto f = TwistProfile::single(2, 1);
    for (auto a : gen::slopes(3))
      for (auto b : gen::slopes(3)) {
        auto fa = act_on_slope(m, f, 2, a), fb = act_on_slope(m, f, 2, b);
        CHECK(std::llabs(gen::det(fa, fb)) == std::llabs(gen::det(a, b)));
        CHECK(fa.p == a.p);
      }
  }

  TEST_CASE("compose and inverse") {
    auto f = TwistProfile::make({{3, 2}}, {1, 0});
    auto g = TwistProfile::make({{5, -1}}, {2});
    CHECK(f.compose(f.inverse()).finite_support());
    for (int j = 0; j < 30; ++j) {
      CHECK(f.compose(f.inverse()).exponent(j) == 0);
      CHECK(f.compose(g).exponent(j) == f.exponent(j) + g.exponent(j));
    }
    CHECK(TwistProfile::from_json(f.to_json()) == f);
  }

  TEST_CASE("finite support stays in the component") {
    auto& m = model();
    gen::Rng r(31);
    for (int t = 0; t < 200; ++t) {
      auto x = gen::walk(m, r, gen::tail(r), r.range(0, 6), 30);
      auto f = TwistProfile::make({{r.range(0, 30), r.range(-3, 3)}}, {0});
      CHECK(same_component(x, act_on_decomposition(m, f, x)));
    }
  }

  TEST_CASE("nonzero finite profiles move some curve") {
    auto& m = model();
    auto f = TwistProfile::single(5, 2);
    CHECK_FALSE(act_on_curve(m, f, curve_at(m, 5, LocalSlope::make(1, 0))) == curve_at(m, 5, LocalSlope::make(1, 0)));
  }

  TEST_CASE("truncations converge and a flipping stream does not") {
    auto& m = model();
    auto f = TwistProfile::make({}, {1, -1, 2});
    CHECK(profile_converges(m, truncation_stream(m, f, 4), f, 4).ok);
    ProfileStream constant{std::vector<TwistProfile>(5, f), {0, 0, 0, 0, 0}};
    CHECK(profile_converges(m, constant, f, 4).ok);
    ProfileStream flip;
    for (int k = 0; k <= 4; ++k) flip.prefix.push_back(TwistProfile::single(0, k % 2));
    flip.stabilization = {0, 0, 0, 0, 0};
    CHECK_FALSE(profile_converges(m, flip, TwistProfile{}, 4).ok);
  }

  TEST_CASE("action continuity along a density stream") {
    auto& m = model();
    PantsDecomposition x;
    auto y = x.with(m, 2, LocalSlope::make(1, 0));
    auto p = PantsPoint::normalize(m, x, Rational(1, 3), y);
    auto start = PantsDecomposition::of_tail(TailPattern::named("torus1"));
    auto points = density_stream(m, start, x, Rational(1, 3), y, 4);
    auto f = TwistProfile::make({}, {1, -1, 2});
    auto rep = action_continuity_test(m, 2, truncation_stream(m, f, 4), points, f, p);
    CHECK(rep.verdict.ok);
    CHECK(rep.image_limit == act_on_point(m, f, p));
  }
}
