#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpld/errors.hpp"
#include "mpld/solver_core.hpp"

#include "naive.hpp"

#include <algorithm>
#include <map>

using namespace mpld;

namespace {

const StitchWeight kAlpha;

Assignment random_colors(Rng& rng, int n, int k) {
  Assignment a(static_cast<std::size_t>(n));
  std::uniform_int_distribution<int> c(0, k - 1);
  for (auto& x : a) x = c(rng);
  return a;
}

// Minimum number of single-vertex recolorings from `start` to any zero-cost
// coloring, by breadth-first search over all k^n colorings.
int moves_to_zero(const DecompositionGraph& g, const Assignment& start, int k) {
  std::map<Assignment, int> dist{{start, 0}};
  std::vector<Assignment> frontier{start};
  for (int d = 0; !frontier.empty(); ++d) {
    std::vector<Assignment> next;
    for (const auto& a : frontier) {
      const auto c = naive::count(g, a);
      if (c.conflicts == 0 && c.stitches == 0) return d;
      for (std::size_t v = 0; v < a.size(); ++v) {
        for (int j = 0; j < k; ++j) {
          auto b = a;
          b[v] = j;
          if (dist.emplace(b, d + 1).second) next.push_back(b);
        }
      }
    }
    frontier = std::move(next);
  }
  return -1;
}

} // namespace

TEST_CASE("evaluate: cost arithmetic") {
  auto tri = naive::cycle_graph(3);
  auto s = evaluate(tri, {1, 1, 1}, 3, kAlpha);
  CHECK(s.conflicts == 3);
  CHECK(s.stitches == 0);
  CHECK(kAlpha.format(s.conflicts, s.stitches) == "3.0");

  // Four bichrome stitches and no conflicts cost 0.4.
  DecompositionGraph stitches(5, {}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  auto t = evaluate(stitches, {0, 1, 0, 1, 0}, 2, kAlpha);
  CHECK(t.stitches == 4);
  CHECK(kAlpha.format(t.conflicts, t.stitches) == "0.4");
  CHECK(t.scaled_cost == 4);

  CHECK(kAlpha.format(1, 205) == "21.5");
}

TEST_CASE("evaluate: contract violations") {
  auto tri = naive::cycle_graph(3);
  CHECK_THROWS_AS(evaluate(tri, {0, 1, 3}, 3, kAlpha), ContractViolation);
  CHECK_THROWS_AS(evaluate(tri, {0, 1, -1}, 3, kAlpha), ContractViolation);
  CHECK_THROWS_AS(evaluate(tri, {0, 1}, 3, kAlpha), ContractViolation);
}

TEST_CASE("delta_evaluate examples") {
  DecompositionGraph isolated(2, {}, {});
  auto s0 = evaluate(isolated, {0, 0}, 3, kAlpha);
  auto m0 = delta_evaluate(isolated, s0, 0, 2);
  CHECK(m0.delta_conflicts == 0);
  CHECK(m0.delta_stitches == 0);

  DecompositionGraph edge(2, {{0, 1}}, {});
  auto s1 = evaluate(edge, {1, 1}, 3, kAlpha);
  CHECK(delta_evaluate(edge, s1, 1, 0).delta_conflicts == -1);

  // v=0 with CE neighbors 1, 2 and SE neighbor 3, all colored 2; v moves 0 -> 2.
  DecompositionGraph star(4, {{0, 1}, {0, 2}}, {{0, 3}});
  auto s2 = evaluate(star, {0, 2, 2, 2}, 3, kAlpha);
  auto m2 = delta_evaluate(star, s2, 0, 2);
  CHECK(m2.delta_conflicts == 2);
  CHECK(m2.delta_stitches == -1);

  CHECK_THROWS_AS(delta_evaluate(star, s2, 1, 2), ContractViolation);
}

TEST_CASE("incremental evaluation matches recomputation") {
  Rng rng(99);
  for (int trial = 0; trial < 10000; ++trial) {
    const int k = std::uniform_int_distribution<int>(2, 4)(rng);
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    auto g = naive::random_graph(rng, n, 20, 6);
    auto s = evaluate(g, random_colors(rng, n, k), k, kAlpha);
    const int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int j = std::uniform_int_distribution<int>(0, k - 2)(rng);
    if (j >= s.colors[static_cast<std::size_t>(v)]) ++j;
    auto moved = s;
    apply_move(moved, delta_evaluate(g, s, v, j), kAlpha);
    const auto fresh = evaluate(g, moved.colors, k, kAlpha);
    REQUIRE(moved.conflicts == fresh.conflicts);
    REQUIRE(moved.stitches == fresh.stitches);
    REQUIRE(moved.scaled_cost == fresh.scaled_cost);
  }
}

TEST_CASE("tabu tenure formula") {
  CHECK(tabu_tenure(10, 2, 3, 5) == 28);
  CHECK(tabu_tenure(0, 0, 0, 1) == 1);
  CHECK(tabu_tenure(7, 1, 0, 1) == 14);   // floor(0.6 * 10) = 6
  CHECK(tabu_tenure(0, 0, 1, 1) == 1);    // floor(0.6) = 0
  CHECK(tabu_tenure(0, 0, 2, 1) == 2);    // floor(1.2) = 1
  for (std::int64_t count = 0; count < 50; ++count)
    for (std::int64_t c = 0; c < 5; ++c)
      for (std::int64_t s = 0; s < 5; ++s)
        for (std::int64_t r = 1; r <= 10; ++r) CHECK(tabu_tenure(count, c, s, r) > count);
}

TEST_CASE("tabu list semantics") {
  TabuList t(3, 4);
  CHECK_FALSE(t.forbidden(2, 1, 0));
  t.set(2, 1, 5);
  CHECK(t.forbidden(2, 1, 4));
  CHECK_FALSE(t.forbidden(2, 1, 5));
  CHECK(t.at(2, 1) == 5);
  CHECK(t.at(1, 2) == 0);
}

TEST_CASE("tabu search: zero-cost input is returned untouched") {
  auto tri = naive::cycle_graph(3);
  auto proper = evaluate(tri, {0, 1, 2}, 3, kAlpha);
  Rng rng(1);
  auto out = tabu_search(tri, proper, 3, kAlpha, rng);
  CHECK(out.iterations == 0);
  CHECK(out.best.colors == proper.colors);
}

TEST_CASE("tabu search: monochrome triangle is fixed within 5n iterations") {
  auto tri = naive::cycle_graph(3);
  CHECK(moves_to_zero(tri, {0, 0, 0}, 3) == 2);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    auto out = tabu_search(tri, evaluate(tri, {0, 0, 0}, 3, kAlpha), 3, kAlpha, rng);
    CHECK(out.best.scaled_cost == 0);
    CHECK(out.iterations <= 15);
  }
}

TEST_CASE("tabu search contract on random instances") {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = std::uniform_int_distribution<int>(2, 4)(rng);
    const int n = std::uniform_int_distribution<int>(1, 30)(rng);
    auto g = naive::random_graph(rng, n, 3 * n, n / 2);
    auto start = evaluate(g, random_colors(rng, n, k), k, kAlpha);
    auto out = tabu_search(g, start, k, kAlpha, rng);
    CHECK(out.best.scaled_cost <= start.scaled_cost);
    CHECK(out.iterations <= 5 * n);
    const auto fresh = evaluate(g, out.best.colors, k, kAlpha);
    CHECK(fresh.scaled_cost == out.best.scaled_cost);
    CHECK(fresh.conflicts == out.best.conflicts);
    if (start.scaled_cost == 0) CHECK(out.iterations == 0);
  }
}

TEST_CASE("tabu search honours an explicit budget") {
  auto k5 = naive::complete_graph(5);
  Rng rng(3);
  auto out = tabu_search(k5, evaluate(k5, Assignment(5, 0), 3, kAlpha), 3, kAlpha, rng, 4);
  CHECK(out.iterations == 4);
  CHECK(out.best.scaled_cost < 100);
}

TEST_CASE("mgpx: identical balanced parents are reproduced up to relabeling") {
  const Assignment parent{0, 0, 1, 1, 2, 2};
  Rng rng(5);
  auto child = mgpx(parent, parent, parent, 3, rng);
  std::map<int, int> relabel;
  for (std::size_t v = 0; v < parent.size(); ++v) {
    auto [it, fresh] = relabel.emplace(parent[v], child[v]);
    CHECK(it->second == child[v]);
  }
  CHECK(relabel.size() == 3);
  // First class taken is parent color 0 (largest, lowest index) -> child color 0.
  CHECK(child == Assignment{0, 0, 1, 1, 2, 2});
}

TEST_CASE("mgpx: single vertex and disjoint classes") {
  Rng rng(5);
  CHECK(mgpx(Assignment{1}, Assignment{0}, Assignment{0}, 2, rng) == Assignment{0});

  // Edgeless 4-vertex graph, k=2: x's largest class {0,1,2} -> color 0,
  // then p1's largest class among {3} -> color 1. Nothing is left to fill.
  const Assignment x{0, 0, 0, 1};
  const Assignment p1{1, 1, 0, 0};
  const Assignment p2{0, 1, 0, 1};
  auto child = mgpx(x, p1, p2, 2, rng);
  CHECK(child == Assignment{0, 0, 0, 1});
}

TEST_CASE("mgpx always returns a total in-range assignment") {
  Rng rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const int k = std::uniform_int_distribution<int>(2, 6)(rng);
    const int n = std::uniform_int_distribution<int>(0, 40)(rng);
    auto child = mgpx(random_colors(rng, n, k), random_colors(rng, n, k), random_colors(rng, n, k), k, rng);
    CHECK(child.size() == static_cast<std::size_t>(n));
    CHECK(std::all_of(child.begin(), child.end(), [k](int c) { return c >= 0 && c < k; }));
  }
  CHECK_THROWS_AS(mgpx(Assignment{0, 3}, Assignment{0, 1}, Assignment{0, 1}, 3, rng), ContractViolation);
  CHECK_THROWS_AS(mgpx(Assignment{0}, Assignment{0, 1}, Assignment{0, 1}, 3, rng), ContractViolation);
}
