#include "mpld/dea_ppm.hpp"

#include "mpld/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mpld {

void SolverConfig::validate() const {
  require(k >= 2, "solver config: k must be at least 2");
  require(population >= 2, "solver config: population size must be at least 2");
  require(max_outer_iters >= 0, "solver config: max_outer_iters must be non-negative");
  require(inherit_rate >= 0.0 && inherit_rate <= 1.0, "solver config: inherit rate must lie in [0, 1]");
  require(refine_rate > 0.0 && refine_rate < 1.0, "solver config: refine rate must lie in (0, 1)");
  require(explore_fraction >= 0.0 && explore_fraction <= 1.0, "solver config: explore fraction must lie in [0, 1]");
  require(explore_angle_max >= 0.0, "solver config: explore angle must be non-negative");
}

DistributionIndividual::DistributionIndividual(int n, int k)
    : n_(n), k_(k), amp_(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), 1.0 / std::sqrt(static_cast<double>(k))) {
  require(n >= 0 && k >= 2, "distribution: need n >= 0 and k >= 2");
}

double DistributionIndividual::max_norm_error() const {
  double worst = 0.0;
  for (int v = 0; v < n_; ++v) {
    double sum = 0.0;
    for (double a : column(v)) sum += a * a;
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

DistributionIndividual init_distribution(int n, int k) { return DistributionIndividual(n, k); }

Assignment sample_solution(const DistributionIndividual& q, const Assignment* parent, double inherit_rate, Rng& rng) {
  const int n = q.vertices();
  require(parent == nullptr || static_cast<int>(parent->size()) == n, "sample_solution: parent size mismatch");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Assignment out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (parent != nullptr && unit(rng) < inherit_rate) {
      out[static_cast<std::size_t>(v)] = (*parent)[static_cast<std::size_t>(v)];
      continue;
    }
    const auto col = q.column(v);
    double total = 0.0;
    for (double a : col) total += a * a;
    double u = unit(rng) * total;
    Color pick = q.colors() - 1;
    for (Color j = 0; j < q.colors(); ++j) {
      const double p = col[static_cast<std::size_t>(j)] * col[static_cast<std::size_t>(j)];
      if (u < p) {
        pick = j;
        break;
      }
      u -= p;
    }
    // A zero-probability tail color is never returned by the fallback.
    while (pick > 0 && col[static_cast<std::size_t>(pick)] == 0.0) --pick;
    out[static_cast<std::size_t>(v)] = pick;
  }
  return out;
}

void rotate_column(std::span<double> column, Color j1, Color j2, double theta) {
  auto& a = column[static_cast<std::size_t>(j1)];
  auto& b = column[static_cast<std::size_t>(j2)];
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double ra = a * c - b * s;
  const double rb = a * s + b * c;
  a = std::abs(ra);
  b = std::abs(rb);
  double norm = 0.0;
  for (double x : column) norm += x * x;
  norm = std::sqrt(norm);
  if (norm == 0.0) {
    std::fill(column.begin(), column.end(), 1.0 / std::sqrt(static_cast<double>(column.size())));
    return;
  }
  for (double& x : column) x /= norm;
}

std::vector<DistributionIndividual> orthogonal_explore(std::vector<DistributionIndividual> q,
                                                       std::span<const Solution> p, const SolverConfig& config,
                                                       Rng& rng) {
  require(q.size() == p.size(), "orthogonal_explore: populations are not paired");
  if (q.empty()) return q;
  const auto np = q.size();
  const auto selected = std::min<std::size_t>(
      np, static_cast<std::size_t>(std::ceil(static_cast<double>(np) * config.explore_fraction - 1e-12)));

  std::vector<std::size_t> order(np);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p[a].scaled_cost > p[b].scaled_cost; });

  const int n = q.front().vertices();
  const int k = q.front().colors();
  if (n == 0) return q;
  const auto columns = static_cast<std::size_t>(std::max(1, (n + 9) / 10));
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> chosen;
  std::uniform_int_distribution<Color> first_row(0, k - 1);
  std::uniform_int_distribution<Color> other_row(0, k - 2);
  std::uniform_real_distribution<double> angle(-config.explore_angle_max, config.explore_angle_max);

  for (std::size_t s = 0; s < selected; ++s) {
    auto& individual = q[order[s]];
    chosen.clear();
    std::sample(all.begin(), all.end(), std::back_inserter(chosen), columns, rng);
    for (int v : chosen) {
      const Color j1 = first_row(rng);
      Color j2 = other_row(rng);
      if (j2 >= j1) ++j2;
      rotate_column(individual.column(v), j1, j2, angle(rng));
    }
  }
  return q;
}

std::vector<DistributionIndividual> refine_q(std::span<const Solution> refined, std::vector<DistributionIndividual> q,
                                             double rate) {
  require(refined.size() == q.size(), "refine_q: populations are not paired");
  require(rate > 0.0 && rate < 1.0, "refine_q: rate must lie in (0, 1)");
  for (std::size_t i = 0; i < q.size(); ++i) {
    auto& individual = q[i];
    require(static_cast<int>(refined[i].colors.size()) == individual.vertices(), "refine_q: solution size mismatch");
    for (int v = 0; v < individual.vertices(); ++v) {
      const Color target = refined[i].colors[static_cast<std::size_t>(v)];
      auto col = individual.column(v);
      for (Color j = 0; j < individual.colors(); ++j) {
        double& a = col[static_cast<std::size_t>(j)];
        const double prob = (1.0 - rate) * a * a + (j == target ? rate : 0.0);
        a = std::sqrt(prob);
      }
    }
  }
  return q;
}

RefineState RefineState::from_incumbent(const Solution& incumbent) {
  RefineState s;
  s.p1 = incumbent;
  s.p2 = incumbent;
  s.c1 = incumbent;
  s.best = incumbent;
  return s;
}

namespace {

std::size_t best_index(const std::vector<Solution>& population) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < population.size(); ++i) {
    if (population[i].better_than(population[best])) best = i;
  }
  return best;
}

void tabu_pass(std::vector<Solution>& population, RefineState& state, const DecompositionGraph& dg,
               const SolverConfig& config, Rng& rng) {
  for (auto& member : population) {
    auto outcome = tabu_search(dg, member, config.k, config.alpha, rng);
    state.tabu_iterations += outcome.iterations;
    member = std::move(outcome.best);
  }
}

} // namespace

std::vector<Solution> refine_p(std::vector<Solution> population, RefineState& state, const DecompositionGraph& dg,
                               const SolverConfig& config, Rng& rng) {
  require(!population.empty(), "refine_p: empty population");
  state.iter = 0;
  state.iter_stag = 0;
  state.c1 = state.best;
  state.w2 = false;

  while (state.iter_stag < 6) {
    for (auto& member : population) {
      member = evaluate(dg, mgpx(member.colors, state.p1.colors, state.p2.colors, config.k, rng), config.k,
                        config.alpha);
    }
    tabu_pass(population, state, dg, config, rng);
    const Solution& b = population[best_index(population)];
    if (b.better_than(state.p1)) {
      state.w2 = true;
      state.iter_stag = 0;
      state.c1 = state.p1;
      state.p1 = b;
    } else {
      ++state.iter_stag;
    }
    if (b.better_than(state.best)) state.best = b;
    if (state.iter % 3 == 0 && state.w2) {
      state.p2 = state.c1;
      state.w2 = false;
    }
    ++state.iter;
  }

  tabu_pass(population, state, dg, config, rng);
  state.p1 = population[best_index(population)];
  if (state.p1.better_than(state.best)) state.best = state.p1;
  return population;
}

Solution solve(const DecompositionGraph& dg, const SolverConfig& config, SolveStats* stats) {
  config.validate();
  const int n = dg.size();
  const auto np = static_cast<std::size_t>(config.population);
  Rng rng(config.seed);

  std::vector<DistributionIndividual> q(np, init_distribution(n, config.k));
  std::vector<Solution> p;
  p.reserve(np);
  for (const auto& individual : q) {
    p.push_back(evaluate(dg, sample_solution(individual, nullptr, 0.0, rng), config.k, config.alpha));
  }
  auto state = RefineState::from_incumbent(p[best_index(p)]);

  SolveStats local;
  SolveStats& s = stats != nullptr ? *stats : local;
  s = SolveStats{};
  s.best_cost_trace.push_back(state.best.scaled_cost);

  while (state.best.scaled_cost > 0 && s.outer_iterations < config.max_outer_iters) {
    auto explored = orthogonal_explore(std::move(q), p, config, rng);
    std::vector<Solution> sampled;
    sampled.reserve(np);
    for (std::size_t i = 0; i < np; ++i) {
      sampled.push_back(evaluate(dg, sample_solution(explored[i], &p[i].colors, config.inherit_rate, rng), config.k,
                                 config.alpha));
    }
    p = refine_p(std::move(sampled), state, dg, config, rng);
    q = refine_q(p, std::move(explored), config.refine_rate);
    ++s.outer_iterations;
    s.best_cost_trace.push_back(state.best.scaled_cost);
  }
  return state.best;
}

} // namespace mpld
