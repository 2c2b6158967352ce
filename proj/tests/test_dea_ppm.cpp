#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpld/dea_ppm.hpp"
#include "mpld/errors.hpp"

#include "naive.hpp"

#include <cmath>
#include <numbers>

using namespace mpld;

namespace {

const StitchWeight kAlpha;

SolverConfig config_for(int k, std::uint64_t seed = 1) {
  SolverConfig c;
  c.k = k;
  c.seed = seed;
  return c;
}

std::vector<Solution> random_population(Rng& rng, const DecompositionGraph& g, int k, int np) {
  std::vector<Solution> p;
  std::uniform_int_distribution<int> color(0, k - 1);
  for (int i = 0; i < np; ++i) {
    Assignment a(static_cast<std::size_t>(g.size()));
    for (auto& c : a) c = color(rng);
    p.push_back(evaluate(g, a, k, kAlpha));
  }
  return p;
}

} // namespace

TEST_CASE("init_distribution is uniform") {
  auto q = init_distribution(1, 4);
  for (Color j = 0; j < 4; ++j) CHECK(q.amplitude(j, 0) == doctest::Approx(0.5).epsilon(1e-15));

  auto q2 = init_distribution(7, 2);
  for (int v = 0; v < 7; ++v)
    for (Color j = 0; j < 2; ++j) CHECK(q2.amplitude(j, v) == doctest::Approx(std::sqrt(0.5)));
  CHECK(q2.max_norm_error() < 1e-12);

  auto q3 = init_distribution(3, 3);
  for (Color j = 0; j < 3; ++j) CHECK(q3.amplitude(j, 1) * q3.amplitude(j, 1) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("sample_solution: inheritance and degenerate columns") {
  Rng rng(4);
  auto q = init_distribution(20, 3);
  Assignment parent(20);
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i % 3);
  CHECK(sample_solution(q, &parent, 1.0, rng) == parent);

  auto col = q.column(5);
  col[0] = 0.0;
  col[1] = 0.0;
  col[2] = 1.0;
  for (int i = 0; i < 100; ++i) CHECK(sample_solution(q, nullptr, 0.0, rng)[5] == 2);
}

TEST_CASE("sample_solution: uniform column frequencies within 3 sigma") {
  Rng rng(12345);
  auto q = init_distribution(1, 3);
  const int draws = 30000;
  std::array<int, 3> freq{};
  for (int i = 0; i < draws; ++i) ++freq[static_cast<std::size_t>(sample_solution(q, nullptr, 0.0, rng)[0])];
  const double p = 1.0 / 3.0;
  const double sigma = std::sqrt(p * (1 - p) / draws);
  for (int f : freq) CHECK(std::abs(static_cast<double>(f) / draws - p) <= 3 * sigma);
}

TEST_CASE("rotate_column examples") {
  std::array<double, 2> col{std::sqrt(0.5), std::sqrt(0.5)};
  rotate_column(col, 0, 1, 0.0);
  CHECK(col[0] == doctest::Approx(std::sqrt(0.5)));
  CHECK(col[1] == doctest::Approx(std::sqrt(0.5)));

  std::array<double, 2> unit{1.0, 0.0};
  rotate_column(unit, 0, 1, std::numbers::pi / 2);
  CHECK(unit[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(unit[1] == doctest::Approx(1.0));

  // Negative result is flipped: (1,0) by -pi/2 gives (0,-1) -> (0,1).
  std::array<double, 3> three{1.0, 0.0, 0.0};
  rotate_column(three, 0, 2, -std::numbers::pi / 2);
  CHECK(three[2] == doctest::Approx(1.0));
  CHECK(three[0] >= 0.0);
}

TEST_CASE("orthogonal_explore touches only the worst individuals") {
  Rng rng(8);
  auto g = naive::random_graph(rng, 30, 60, 5);
  auto config = config_for(3);
  config.population = 6;
  auto p = random_population(rng, g, 3, 6);
  // Make individual 4 and 1 the two worst (ceil(6/3) = 2 selected).
  p[4].scaled_cost = 1000;
  p[1].scaled_cost = 999;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != 4 && i != 1) p[i].scaled_cost = 1;
  }
  std::vector<DistributionIndividual> q(6, init_distribution(30, 3));
  auto explored = orthogonal_explore(q, p, config, rng);
  for (std::size_t i = 0; i < q.size(); ++i) {
    bool changed = false;
    for (int v = 0; v < 30; ++v)
      for (Color j = 0; j < 3; ++j) changed |= explored[i].amplitude(j, v) != q[i].amplitude(j, v);
    CHECK(changed == (i == 4 || i == 1));
    CHECK(explored[i].max_norm_error() < 1e-9);
  }
}

TEST_CASE("refine_q examples") {
  auto g = DecompositionGraph(1, {}, {});
  std::vector<Solution> s{evaluate(g, {0}, 2, kAlpha)};
  auto q = refine_q(s, {init_distribution(1, 2)}, 0.25);
  CHECK(q[0].amplitude(0, 0) * q[0].amplitude(0, 0) == doctest::Approx(0.625));
  CHECK(q[0].amplitude(1, 0) * q[0].amplitude(1, 0) == doctest::Approx(0.375));

  auto fixed = init_distribution(1, 3);
  auto col = fixed.column(0);
  col[0] = 0.0;
  col[1] = 1.0;
  col[2] = 0.0;
  std::vector<Solution> s1{evaluate(g, {1}, 3, kAlpha)};
  auto again = refine_q(s1, {fixed}, 0.25);
  CHECK(again[0].amplitude(1, 0) == doctest::Approx(1.0));
  CHECK(again[0].amplitude(0, 0) == 0.0);

  // Mass off the target color shrinks by exactly (1 - rate) per step.
  std::vector<DistributionIndividual> qs{init_distribution(1, 3)};
  double off = 2.0 / 3.0;
  for (int step = 0; step < 40; ++step) {
    qs = refine_q(s, std::move(qs), 0.25);
    off *= 0.75;
    const double on = qs[0].amplitude(0, 0) * qs[0].amplitude(0, 0);
    CHECK(1.0 - on == doctest::Approx(off).epsilon(1e-9));
  }
  CHECK_THROWS_AS(refine_q(s, {init_distribution(1, 2)}, 1.0), ContractViolation);
}

TEST_CASE("normalization survives long chains of updates") {
  Rng rng(77);
  auto g = naive::random_graph(rng, 25, 50, 5);
  auto config = config_for(4);
  std::vector<DistributionIndividual> q(8, init_distribution(25, 4));
  for (int round = 0; round < 300; ++round) {
    auto p = random_population(rng, g, 4, 8);
    q = orthogonal_explore(std::move(q), p, config, rng);
    for (const auto& individual : q) REQUIRE(individual.max_norm_error() <= 1e-9);
    q = refine_q(p, std::move(q), 0.25);
    for (const auto& individual : q) REQUIRE(individual.max_norm_error() <= 1e-9);
  }
}

TEST_CASE("refine_p bookkeeping") {
  SUBCASE("population already optimal") {
    auto g = naive::cycle_graph(4);
    auto zero = evaluate(g, {0, 1, 0, 1}, 3, kAlpha);
    auto state = RefineState::from_incumbent(zero);
    Rng rng(2);
    auto out = refine_p(std::vector<Solution>(4, zero), state, g, config_for(3), rng);
    CHECK(state.iter == 6);
    CHECK(state.iter_stag == 6);
    CHECK(state.p1.scaled_cost == 0);
    CHECK(state.best.scaled_cost == 0);
  }
  SUBCASE("improvement on the first round resets stagnation and records the displaced elite") {
    auto g = naive::complete_graph(5);
    auto bad = evaluate(g, Assignment(5, 0), 3, kAlpha); // 10 conflicts
    auto state = RefineState::from_incumbent(bad);
    Rng rng(3);
    auto out = refine_p(std::vector<Solution>(4, bad), state, g, config_for(3), rng);
    CHECK(state.c1.scaled_cost <= bad.scaled_cost);
    CHECK(state.p1.scaled_cost < bad.scaled_cost);
    CHECK(state.iter >= 6);
    CHECK(state.iter_stag == 6);
  }
  SUBCASE("postcondition on random instances") {
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      auto g = naive::random_graph(rng, 15, 40, 5);
      auto p = random_population(rng, g, 3, 4);
      auto state = RefineState::from_incumbent(p[0]);
      auto out = refine_p(p, state, g, config_for(3), rng);
      CHECK(state.best.scaled_cost <= state.p1.scaled_cost);
      for (const auto& m : out) CHECK(state.p1.scaled_cost <= m.scaled_cost);
      CHECK(out.size() == 4);
    }
  }
  SUBCASE("5-cycle reaches a proper 3-coloring") {
    auto g = naive::cycle_graph(5);
    CHECK(naive::min_scaled_cost(g, 3, 1, 10) == 0);
    Rng rng(11);
    auto p = random_population(rng, g, 3, 4);
    auto state = RefineState::from_incumbent(p[0]);
    auto config = config_for(3);
    config.population = 4;
    refine_p(p, state, g, config, rng);
    CHECK(state.best.scaled_cost == 0);
  }
}

TEST_CASE("solve examples") {
  SolveStats stats;
  auto empty = solve(DecompositionGraph(5, {}, {}), config_for(3), &stats);
  CHECK(empty.scaled_cost == 0);
  CHECK(stats.outer_iterations == 0);

  auto k4 = naive::complete_graph(4);
  auto s = solve(k4, config_for(3));
  CHECK(s.conflicts == 1);
  CHECK(s.stitches == 0);
  CHECK(kAlpha.format(s.conflicts, s.stitches) == "1.0");

  auto pair = solve(DecompositionGraph(2, {}, {{0, 1}}), config_for(3));
  CHECK(pair.scaled_cost == 0);
  CHECK(pair.colors[0] == pair.colors[1]);

  auto none = solve(DecompositionGraph(), config_for(3));
  CHECK(none.colors.empty());
}

TEST_CASE("solve: determinism, monotone incumbent, early exit") {
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = naive::random_graph(rng, 20, 60, 6);
    auto config = config_for(3, 100 + static_cast<std::uint64_t>(trial));
    config.max_outer_iters = 30;
    SolveStats a_stats, b_stats;
    auto a = solve(g, config, &a_stats);
    auto b = solve(g, config, &b_stats);
    CHECK(a.colors == b.colors);
    CHECK(a_stats.best_cost_trace == b_stats.best_cost_trace);
    CHECK(std::is_sorted(a_stats.best_cost_trace.rbegin(), a_stats.best_cost_trace.rend()));
    for (std::size_t i = 0; i + 1 < a_stats.best_cost_trace.size(); ++i) CHECK(a_stats.best_cost_trace[i] > 0);
    CHECK(a_stats.best_cost_trace.back() == a.scaled_cost);
    CHECK(evaluate(g, a.colors, 3, kAlpha).scaled_cost == a.scaled_cost);
  }
}

TEST_CASE("solver config validation") {
  auto c = config_for(3);
  CHECK_NOTHROW(c.validate());
  c.k = 1;
  CHECK_THROWS_AS(c.validate(), ContractViolation);
  c = config_for(3);
  c.population = 1;
  CHECK_THROWS_AS(c.validate(), ContractViolation);
  c = config_for(3);
  c.inherit_rate = 1.5;
  CHECK_THROWS_AS(c.validate(), ContractViolation);
  c = config_for(3);
  c.refine_rate = 0.0;
  CHECK_THROWS_AS(c.validate(), ContractViolation);
}
