#include "doctest.h"
#include "pantsgraph/oracle.hpp"

using namespace pg::oracle;

TEST_SUITE("oracle") {
  TEST_CASE("farey adjacency by determinant") {
    CHECK(farey_adjacent({0, 1}, {1, 0}));
    CHECK(farey_adjacent({0, 1}, {1, 1}));
    CHECK_FALSE(farey_adjacent({0, 1}, {2, 1}));
    CHECK(farey_adjacent({0, 1}, {1, 2}));
  }

  TEST_CASE("counted intersections equal the determinant formula") {
    auto all = slopes_up_to(4);
    for (auto a : all)
      for (auto b : all) {
        long long d = std::llabs(a.p * b.q - a.q * b.p);
        CHECK(torus_intersection(a, b) == d);
        CHECK(pillowcase_intersection(a, b) == 2 * d);
      }
  }

  TEST_CASE("window adjacency asks for one or two crossings") {
    CHECK(window_adjacent(pg::WindowKind::Torus, {0, 1}, {1, 0}));
    CHECK(window_adjacent(pg::WindowKind::Sphere, {0, 1}, {1, 1}));
    CHECK_FALSE(window_adjacent(pg::WindowKind::Sphere, {0, 1}, {2, 1}));
  }

  TEST_CASE("recursive farey distance agrees with bounded BFS") {
    CHECK(farey_distance({0, 1}, {0, 1}) == 0);
    CHECK(farey_distance({0, 1}, {1, 0}) == 1);
    CHECK(farey_distance({0, 1}, {2, 5}) == bfs_distance({0, 1}, {2, 5}, 12));
    auto all = slopes_up_to(4);
    for (auto a : all)
      for (auto b : all) {
        CHECK(farey_distance(a, b) == farey_distance(b, a));
        CHECK(farey_distance(a, b) == bfs_distance(a, b, 12));
      }
  }

  TEST_CASE("farey triangle inequality") {
    auto all = slopes_up_to(3);
    for (auto a : all)
      for (auto b : all)
        for (auto c : all) CHECK(farey_distance(a, c) <= farey_distance(a, b) + farey_distance(b, c));
  }

  TEST_CASE("product distance") {
    Windowed u{{2, {0, 1}}, {5, {0, 1}}};
    CHECK(product_distance(u, u) == 0);
    Windowed v{{2, {1, 0}}, {5, {0, 1}}};
    CHECK(product_distance(u, v) == 1);
    Windowed w{{2, {1, 0}}, {5, {1, 2}}};
    CHECK(product_distance(u, w) == 1 + farey_distance({0, 1}, {1, 2}));
    CHECK_THROWS(product_distance(u, Windowed{{2, {0, 1}}}));
  }

  TEST_CASE("two-window graph is the product graph") {
    auto one = brute_pants_graph({pg::WindowKind::Torus}, 2);
    auto two = brute_pants_graph({pg::WindowKind::Torus, pg::WindowKind::Sphere}, 2);
    auto nv = static_cast<long long>(one.vertices.size());
    CHECK(static_cast<long long>(two.vertices.size()) == nv * nv);
    CHECK(two.edge_count() == 2 * nv * one.edge_count());
    CHECK_THROWS(brute_pants_graph(std::vector<pg::WindowKind>{}, 2));
  }

  TEST_CASE("explicit graph distances match product distance") {
    auto g = brute_pants_graph({pg::WindowKind::Torus, pg::WindowKind::Torus}, 2);
    auto d = g.distances_from(0);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      Windowed a{{0, g.vertices[0][0]}, {1, g.vertices[0][1]}}, b{{0, g.vertices[v][0]}, {1, g.vertices[v][1]}};
      if (product_distance(a, b) <= 2) CHECK(d[v] == product_distance(a, b));
    }
  }
}
