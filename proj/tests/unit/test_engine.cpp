#include <cmath>

#include "cedom/engine.hpp"
#include "cedom/exact.hpp"
#include "cedom/generators.hpp"
#include "cedom/instance_io.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cedom;

namespace {

ScoredSet scored(std::vector<Vertex> members) {
  ScoredSet s;
  s.score = members.size();
  s.members = std::move(members);
  return s;
}

ScoredSet with_score(std::vector<Vertex> members, std::size_t score) {
  ScoredSet s;
  s.members = std::move(members);
  s.score = score;
  return s;
}

bool same_outcome(const RunResult& a, const RunResult& b) {
  if (a.trace.size() != b.trace.size()) return false;
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    if (a.trace[i].iteration_best != b.trace[i].iteration_best || a.trace[i].global_best != b.trace[i].global_best) {
      return false;
    }
  }
  return a.seed == b.seed && a.best_set == b.best_set && a.best_score == b.best_score && a.iterations == b.iterations;
}

RunResult solve(const Graph& g, VariantKind kind, std::uint64_t seed, CEParams params = {}) {
  auto t = build_tables(g);
  return ce_run(g, t, kind, params, seed);
}

std::size_t best_of(const Graph& g, VariantKind kind, int runs) {
  auto t = build_tables(g);
  std::vector<std::uint64_t> seeds;
  for (int i = 1; i <= runs; ++i) seeds.push_back(static_cast<std::uint64_t>(i));
  return ce_multi(g, t, kind, CEParams{}, seeds).best().best_score;
}

}  // namespace

TEST_CASE("default parameters") {
  CEParams p;
  CHECK(p.samples == 100);
  CHECK(p.elite == 10);
  CHECK(p.alpha == doctest::Approx(0.2));
  CHECK(p.rho == doctest::Approx(0.01));
  CHECK(p.stagnation == 20);
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("parameter bounds are enforced") {
  auto broken = [](auto mutate) {
    CEParams p;
    mutate(p);
    return p;
  };
  CHECK_THROWS(broken([](CEParams& p) { p.elite = 0; }).validate());
  CHECK_THROWS(broken([](CEParams& p) { p.elite = 101; }).validate());
  CHECK_THROWS(broken([](CEParams& p) { p.rho = 1.0; }).validate());
  CHECK_THROWS(broken([](CEParams& p) { p.rho = 0.0; }).validate());
  CHECK_THROWS(broken([](CEParams& p) { p.alpha = 0.0; }).validate());
  CHECK_NOTHROW(broken([](CEParams& p) { p.alpha = 1.0; }).validate());
  CHECK_THROWS(broken([](CEParams& p) { p.stagnation = 0; }).validate());
}

TEST_CASE("P* of identical elite sets is the indicator of the set") {
  EliteSet elite(10, scored({1, 3}));
  auto p = compute_pstar(elite, 0.01, 5);
  CHECK(p == ProbabilityVector{0.0, 1.0, 0.0, 1.0, 0.0});
}

TEST_CASE("P* with equal scores is the inclusion proportion") {
  EliteSet elite{scored({0, 1}), scored({1, 2}), scored({1, 3}), scored({0, 3})};
  auto p = compute_pstar(elite, 0.01, 5);
  CHECK(p[0] == doctest::Approx(0.5));
  CHECK(p[1] == doctest::Approx(0.75));
  CHECK(p[2] == doctest::Approx(0.25));
  CHECK(p[3] == doctest::Approx(0.5));
  CHECK(p[4] == 0.0);
}

TEST_CASE("P* worked example with scores 10 and 12") {
  // Independent route: w(S) = rho^(L(S) / L_min).
  const double rho = 0.01;
  const double wa = std::pow(rho, 10.0 / 10.0);
  const double wb = std::pow(rho, 12.0 / 10.0);
  const double expected = wa / (wa + wb);
  CHECK(std::abs(expected - 0.715252751049198588) < 1e-12);

  EliteSet elite{with_score({0}, 10), with_score({1}, 12)};
  auto p = compute_pstar(elite, rho, 2);
  CHECK(std::abs(p[0] - expected) < 1e-6);
  CHECK(std::abs(p[1] - (1.0 - expected)) < 1e-6);

  auto w = elite_weights(elite, rho);
  CHECK(w[0] == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(w[1] == doctest::Approx(0.0039810717055349725).epsilon(1e-12));
}

TEST_CASE("property: P* is invariant under scaling all weights") {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Vertex n = 20;
    EliteSet elite;
    for (int k = 0; k < 10; ++k) {
      std::vector<Vertex> members;
      for (Vertex v = 0; v < n; ++v)
        if (rng.uniform() < 0.3) members.push_back(v);
      if (members.empty()) members.push_back(0);
      elite.push_back(scored(members));
    }
    auto w = elite_weights(elite, 0.01);
    auto base = weighted_marginals(elite, w, n);
    const double scale = std::exp(20.0 * rng.uniform() - 10.0);
    for (double& x : w) x *= scale;
    auto scaled = weighted_marginals(elite, w, n);
    for (Vertex v = 0; v < n; ++v) {
      REQUIRE(base[v] >= 0.0);
      REQUIRE(base[v] <= 1.0);
      REQUIRE(std::abs(base[v] - scaled[v]) < 1e-12);
    }
  }
}

TEST_CASE("lower scores get more weight") {
  EliteSet elite{with_score({0}, 5), with_score({1}, 6), with_score({2}, 9)};
  auto w = elite_weights(elite, 0.01);
  CHECK(w[0] > w[1]);
  CHECK(w[1] > w[2]);
}

TEST_CASE("blend") {
  ProbabilityVector pstar{1.0, 0.0, 0.3}, current{0.5, 0.5, 0.3};
  CHECK(blend(pstar, current, 1.0) == pstar);
  auto b = blend(pstar, current, 0.2);
  CHECK(b[0] == doctest::Approx(0.6));
  CHECK(b[1] == doctest::Approx(0.4));
  CHECK(blend(current, current, 0.2) == current);
  CHECK_THROWS_AS(blend(pstar, ProbabilityVector{0.5}, 0.2), std::invalid_argument);
}

TEST_CASE("ce_run reaches the optimum on G(3,3) for any seed") {
  Graph g = grid(3, 3);
  for (std::uint64_t seed : {1, 2, 3, 42, 1000}) CHECK(solve(g, VariantKind::Domination, seed).best_score == 3);
}

TEST_CASE("ce_run 2-domination of K4 is 2") {
  CHECK(solve(cedom::testing::complete(4), VariantKind::TwoDomination, 7).best_score == 2);
}

TEST_CASE("run invariants: monotone trace, valid minimal best set, termination rule") {
  Rng gen(12);
  for (int trial = 0; trial < 8; ++trial) {
    Graph g = cedom::testing::random_graph(25, 0.15, gen);
    for (VariantKind kind : kAllVariants) {
      if (!is_feasible(g, kind)) continue;
      CEParams params;
      params.samples = 30;
      params.elite = 5;
      params.stagnation = 5;
      auto r = solve(g, kind, gen.next(), params);
      REQUIRE(r.best_score == r.best_set.size());
      REQUIRE(naive_satisfied(g, kind, r.best_set));
      for (Vertex v : r.best_set) {
        auto without = r.best_set;
        std::erase(without, v);
        REQUIRE_FALSE(naive_satisfied(g, kind, without));
      }
      REQUIRE(r.trace.size() == r.iterations);
      for (std::size_t i = 0; i < r.trace.size(); ++i) {
        REQUIRE(r.trace[i].iteration_best >= r.trace[i].global_best);
        if (i) REQUIRE(r.trace[i].global_best <= r.trace[i - 1].global_best);
      }
      REQUIRE(r.trace.back().global_best == r.best_score);
      // The last `stagnation` iterations brought no improvement.
      const std::size_t tail = params.stagnation;
      REQUIRE(r.iterations > tail);
      REQUIRE(r.trace[r.iterations - tail - 1].global_best == r.best_score);
      if (kind == VariantKind::Domination) {
        const auto lower = (static_cast<std::size_t>(g.n()) + g.max_degree()) / (g.max_degree() + 1);
        REQUIRE(r.best_score >= lower);
        REQUIRE(r.best_score <= static_cast<std::size_t>(g.n()));
      }
    }
  }
}

TEST_CASE("max_iterations caps the run") {
  CEParams params;
  params.max_iterations = 3;
  params.stagnation = 50;
  auto r = solve(grid(6, 6), VariantKind::Domination, 1, params);
  CHECK(r.iterations == 3);
}

TEST_CASE("runs are reproducible") {
  Graph g = flower_snark(5);
  for (VariantKind kind : kAllVariants) CHECK(same_outcome(solve(g, kind, 77), solve(g, kind, 77)));
}

TEST_CASE("infeasible total domination raises") {
  std::vector<Edge> edges{{0, 1}};
  Graph g(3, edges);
  CHECK_THROWS_AS(solve(g, VariantKind::TotalDomination, 1), InfeasibleInstance);
  auto t = build_tables(g);
  std::vector<std::uint64_t> seeds{1};
  CHECK_THROWS_AS(ce_multi(g, t, VariantKind::TotalDomination, CEParams{}, seeds), InfeasibleInstance);
}

TEST_CASE("ce_multi") {
  Graph g = grid(6, 6);
  auto t = build_tables(g);
  SUBCASE("a single seed reduces to ce_run") {
    std::vector<std::uint64_t> seeds{5};
    auto multi = ce_multi(g, t, VariantKind::TotalDomination, CEParams{}, seeds);
    CHECK(same_outcome(multi.best(), ce_run(g, t, VariantKind::TotalDomination, CEParams{}, 5)));
  }
  SUBCASE("best is the first minimum, threads do not change results") {
    std::vector<std::uint64_t> seeds{1, 2, 3, 4};
    auto seq = ce_multi(g, t, VariantKind::TwoDomination, CEParams{}, seeds, 1);
    auto par = ce_multi(g, t, VariantKind::TwoDomination, CEParams{}, seeds, 3);
    REQUIRE(seq.runs.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(same_outcome(seq.runs[i], par.runs[i]));
    CHECK(seq.best_index == par.best_index);
    for (std::size_t i = 0; i < seq.runs.size(); ++i) {
      CHECK(seq.runs[i].best_score >= seq.best().best_score);
      if (i < seq.best_index) CHECK(seq.runs[i].best_score > seq.best().best_score);
    }
  }
  SUBCASE("empty seed list") {
    CHECK_THROWS_AS(ce_multi(g, t, VariantKind::Domination, CEParams{}, {}), std::invalid_argument);
  }
}

TEST_CASE("published best-of-10 values on small instances") {
  CHECK(best_of(flower_snark(5), VariantKind::SecureDomination, 10) == 8);
  Instance zachary = load_instance(CEDOM_DATA_DIR "/zachary.txt");
  CHECK(best_of(zachary.graph, VariantKind::Domination, 10) == 4);
  CHECK(best_of(zachary.graph, VariantKind::SecureDomination, 10) == 9);
}

TEST_CASE("property: CE never beats the exact optimum") {
  Rng gen(404);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = cedom::testing::random_graph(12, 0.25, gen);
    for (VariantKind kind : kAllVariants) {
      if (!is_feasible(g, kind)) continue;
      CEParams params;
      params.samples = 20;
      params.elite = 4;
      params.stagnation = 5;
      auto ce = solve(g, kind, gen.next(), params);
      auto exact = exact_min(g, kind);
      REQUIRE(exact.status == ExactStatus::Optimal);
      REQUIRE(ce.best_score >= exact.optimum);
    }
  }
}
