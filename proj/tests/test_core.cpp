#include <doctest.h>

#include <algorithm>

#include "scx/generators.hpp"
#include "scx/response.hpp"
#include "scx/rng.hpp"
#include "test_util.hpp"

using namespace scx;
using test::add_agent;
using test::linear2d;
using test::vec2;

TEST_CASE("cost evaluates the per-dimension positive-part formula") {
  CHECK(cost(vec2(0, 0), vec2(2, 3), vec2(1, 2)) == doctest::Approx(8.0));
  CHECK(cost(vec2(5, 5), vec2(5, 5), vec2(1, 1)) == 0.0);
  CHECK(cost(vec2(3, 9), vec2(7, 2), vec2(1, 1)) == doctest::Approx(4.0));
  CHECK_THROWS_AS(cost(vec2(0, 0), Vec::Zero(3), vec2(1, 1)),
                  std::invalid_argument);
}

TEST_CASE("cost properties on random vectors") {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    Vec x(3), y(3), c(3);
    for (int j = 0; j < 3; ++j) {
      x[j] = rng.uniform(-5, 5);
      y[j] = rng.uniform(-5, 5);
      c[j] = rng.uniform(0.1, 3.0);
    }
    CHECK(cost(x, x, c) == 0.0);
    const double base = cost(x, y, c);
    CHECK(base >= 0.0);
    // reducing a coordinate of y below x is free
    Vec y2 = y;
    const int j = static_cast<int>(rng.uniform_int(3));
    y2[j] = x[j] - rng.uniform(0.0, 4.0);
    Vec y3 = y;
    y3[j] = std::min(y[j], x[j]);
    CHECK(cost(x, y2, c) == doctest::Approx(cost(x, y3, c)));
  }
}

TEST_CASE("true_position mixes improvement and gaming coordinates") {
  CHECK(true_position(vec2(0, 0), vec2(1, 1), {0}) == vec2(1, 0));
  CHECK(true_position(vec2(0, 0), vec2(1, 1), {0, 1}) == vec2(1, 1));
  CHECK(true_position(vec2(0, 0), vec2(1, 1), {}) == vec2(0, 0));
}

TEST_CASE("target_color judges the true position") {
  auto inst = linear2d(1, 1, 10, 1, 1, {0});
  CHECK(target_color(vec2(9, 0), vec2(10, 0), inst) == EdgeColor::Blue);
  CHECK(target_color(vec2(9, 0), vec2(9, 1), inst) == EdgeColor::Red);
  // designated-target family at m = 8: the gaming example next to the third
  // target moves along the gaming dimension only and stays unqualified
  auto fam = linear2d(1, 1, 16, 1, 1, {0});
  CHECK(target_color(vec2(6, 9), vec2(6, 10), fam) == EdgeColor::Red);
}

TEST_CASE("best_response_targets picks the cheapest offered edge") {
  auto inst = test::discrete(
      {"p1", "p2"},
      {{"x", {{"p1", 0.3, EdgeColor::Red}, {"p2", 0.4, EdgeColor::Blue}}}});
  auto both = best_response_targets(inst, 0, {0, 1});
  CHECK(*both.chosen == 0);
  CHECK(*both.color == EdgeColor::Red);
  auto only2 = best_response_targets(inst, 0, {1});
  CHECK(*only2.chosen == 1);
  CHECK(*only2.color == EdgeColor::Blue);
  auto none = best_response_targets(inst, 0, {});
  CHECK_FALSE(none.classified);
  CHECK_FALSE(none.chosen.has_value());
}

TEST_CASE("near-equal costs within tolerance count as ties") {
  // costs 1e-10 apart: the pessimistic order puts the red edge first even
  // though its stored cost is fractionally higher
  auto inst = test::discrete(
      {"p1", "p2"},
      {{"x",
        {{"p1", 0.5 + 1e-10, EdgeColor::Red}, {"p2", 0.5, EdgeColor::Blue}}}},
      TiePolicy::Pessimistic);
  CHECK(inst.agents[0].edges[0].color == EdgeColor::Red);
  const Outcome o = best_response_targets(inst, 0, {0, 1});
  CHECK(*o.color == EdgeColor::Red);
}

TEST_CASE("equal-cost edges resolve by tie policy") {
  for (auto policy : {TiePolicy::Pessimistic, TiePolicy::Optimistic}) {
    auto inst = test::discrete(
        {"p1", "p2"},
        {{"x", {{"p1", 0.5, EdgeColor::Red}, {"p2", 0.5, EdgeColor::Blue}}}},
        policy);
    auto o = best_response_targets(inst, 0, {0, 1});
    if (policy == TiePolicy::Pessimistic) {
      CHECK(*o.chosen == 0);
      CHECK(*o.color == EdgeColor::Red);
    } else {
      CHECK(*o.chosen == 1);
      CHECK(*o.color == EdgeColor::Blue);
    }
  }
}

TEST_CASE("movement_dimension with two-stage tie break") {
  CHECK(movement_dimension({vec2(2, 1), 0}, vec2(1, 1), {}) == 0);
  CHECK(movement_dimension({vec2(1, 1), 0}, vec2(1, 1), {1}) == 1);
  CHECK(movement_dimension({vec2(1, 1), 0}, vec2(1, 1), {0, 1}) == 0);
}

TEST_CASE("movement_dimension is invariant under positive scaling") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Vec a(4), c(4);
    for (int j = 0; j < 4; ++j) {
      a[j] = rng.uniform(-2, 2);
      c[j] = rng.uniform(0.1, 3.0);
    }
    if (a.isZero(0.0)) continue;
    const std::vector<int> improvement = {1, 3};
    const double lambda = rng.uniform(0.01, 50.0);
    CHECK(movement_dimension({a, 0}, c, improvement) ==
          movement_dimension({Vec(lambda * a), 0}, c, improvement));
  }
}

namespace {

// Independent check of the linear response: scan perceived positions on a
// coarse grid of affordable increases and see whether any crosses g.
bool grid_reachable(const LinearInstance& inst, const Vec& x,
                    const LinearClassifier& g, double step = 0.01) {
  for (double d0 = 0.0; d0 * inst.cost[0] <= 1.0 + 1e-12; d0 += step) {
    const double budget = 1.0 - d0 * inst.cost[0];
    for (double d1 = 0.0; d1 * inst.cost[1] <= budget + 1e-12; d1 += step) {
      Vec y = x;
      y[0] += d0;
      y[1] += d1;
      if (g.a.dot(y) >= g.b - 1e-9) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("best_response_linear moves along the movement dimension") {
  auto inst = linear2d(1, 1, 10, 1, 1, {0});
  SUBCASE("boundary move at cost exactly 1 succeeds") {
    auto o = best_response_linear(inst, vec2(9, 0), {vec2(1, 1), 10});
    CHECK(o.classified);
    CHECK(o.qualified_after);
    CHECK(*o.color == EdgeColor::Blue);
    CHECK(o.cost_paid == doctest::Approx(1.0));
  }
  SUBCASE("unaffordable boundary leaves the agent negative") {
    const LinearClassifier g{vec2(1, 2), 12};
    auto o = best_response_linear(inst, vec2(9, 0), g);
    CHECK_FALSE(o.classified);
    CHECK(grid_reachable(inst, vec2(9, 0), g) == false);
  }
  SUBCASE("already-positive agents stay put") {
    auto o = best_response_linear(inst, vec2(12, 3), {vec2(1, 1), 10});
    CHECK(o.classified);
    CHECK(o.cost_paid == 0.0);
  }
}

TEST_CASE("classified iff the budget-shifted position crosses g") {
  Rng rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    auto inst = linear2d(1, 1, rng.uniform(-3, 3), rng.uniform(0.2, 2.0),
                         rng.uniform(0.2, 2.0), {0});
    Vec a = vec2(rng.uniform(-1, 2), rng.uniform(-1, 2));
    if (a.maxCoeff() <= 0.0) a[rng.uniform_int(2)] = rng.uniform(0.1, 2.0);
    const LinearClassifier g{a, rng.uniform(-4, 4)};
    const Vec x = vec2(rng.uniform(-5, 5), rng.uniform(-5, 5));
    const int j = movement_dimension(g, inst.cost, inst.improvement_dims);
    Vec x_max = x;
    x_max[j] += 1.0 / inst.cost[j];
    const bool predicted = g.a.dot(x_max) >= g.b - 1e-9;
    CHECK(best_response_linear(inst, x, g).classified == predicted);
  }
}

TEST_CASE("compile_linear_to_discrete on the designated-target family") {
  const LowerBoundFamily fam = gen_lower_bound(8, 0.01, 3);
  const DiscreteInstance graph =
      compile_linear_to_discrete(fam.instance, TiePolicy::Optimistic);
  REQUIRE(graph.agents.size() == 16);
  // improving example next to the third target (x_3 in 1-based terms)
  const auto& improving = graph.agents[2];
  REQUIRE(improving.edges.size() == 1);
  CHECK(improving.edges[0].criterion == 2);
  CHECK(improving.edges[0].cost == doctest::Approx(1.0));
  CHECK(improving.edges[0].color == EdgeColor::Blue);
  // gaming example next to the same target (x_11)
  const auto& gaming = graph.agents[10];
  REQUIRE(gaming.edges.size() == 1);
  CHECK(gaming.edges[0].criterion == 2);
  CHECK(gaming.edges[0].cost == doctest::Approx(1.0));
  CHECK(gaming.edges[0].color == EdgeColor::Red);
  for (int i = 0; i < 16; ++i) {
    REQUIRE(graph.agents[i].edges.size() == 1);
    CHECK(graph.agents[i].edges[0].color ==
          (i < 8 ? EdgeColor::Blue : EdgeColor::Red));
  }

  SUBCASE("an agent too far from every target gets no edges") {
    LinearInstance inst = fam.instance;
    inst.agents.clear();
    add_agent(inst, "far", 0.0, 0.0);
    const auto compiled = compile_linear_to_discrete(inst);
    CHECK(compiled.agents[0].edges.empty());
  }
}

TEST_CASE("evaluate_criteria on the m=4 family matches exact enumeration") {
  const LowerBoundFamily fam = gen_lower_bound(4, 0.01, 5);
  const DiscreteInstance& support = fam.dist.support;

  // independent expected values: sum the designated masses directly
  double clean_expected = 0.0;
  for (int k : fam.concept_targets) {
    clean_expected += support.agents[k].weight;  // improving example k+1
  }
  CHECK(clean_expected == doctest::Approx(3 * (1 - 0.32) / 4.0));

  const EvalReport clean = evaluate_criteria(support, fam.concept_targets);
  CHECK(clean.tp_mass == doctest::Approx(0.51));
  CHECK(clean.fp_mass == 0.0);

  const EvalReport full = evaluate_criteria(support, test::all_indices(4));
  CHECK(full.fp_mass == doctest::Approx(0.32));

  CHECK(evaluate_criteria(support, {}).tp_mass == 0.0);
  CHECK(evaluate_criteria(support, {}).fp_mass == 0.0);
}

TEST_CASE("evaluate_criteria is invariant under agent and criterion order") {
  const DiscreteInstance inst =
      gen_random_discrete(8, 5, 0.6, 0.5, 0.05, 1.0, 99);
  const std::vector<int> selected = {0, 2, 4};
  const EvalReport base = evaluate_criteria(inst, selected);

  DiscreteInstance shuffled = inst;
  std::reverse(shuffled.agents.begin(), shuffled.agents.end());
  const EvalReport agents_reversed = evaluate_criteria(shuffled, selected);
  CHECK(agents_reversed.tp_mass == doctest::Approx(base.tp_mass));
  CHECK(agents_reversed.fp_mass == doctest::Approx(base.fp_mass));

  // permute the criterion list (and remap edges + selection accordingly)
  const std::vector<int> perm = {4, 3, 2, 1, 0};
  DiscreteInstance relabeled = inst;
  relabeled.criteria.clear();
  for (int k : perm) relabeled.criteria.push_back(inst.criteria[k]);
  std::vector<int> inverse(perm.size());
  for (int i = 0; i < static_cast<int>(perm.size()); ++i) inverse[perm[i]] = i;
  for (auto& agent : relabeled.agents) {
    for (auto& e : agent.edges) e.criterion = inverse[e.criterion];
  }
  sort_edges(relabeled);
  std::vector<int> remapped;
  for (int k : selected) remapped.push_back(inverse[k]);
  const EvalReport relabeled_report = evaluate_criteria(relabeled, remapped);
  CHECK(relabeled_report.tp_mass == doctest::Approx(base.tp_mass));
  CHECK(relabeled_report.fp_mass == doctest::Approx(base.fp_mass));
}

TEST_CASE("compiled-graph responses match direct point responses") {
  Rng rng(303);
  for (int trial = 0; trial < 120; ++trial) {
    auto inst = linear2d(rng.uniform(0.3, 2.0), rng.uniform(0.3, 2.0),
                         rng.uniform(2.0, 7.0), rng.uniform(0.4, 1.5),
                         rng.uniform(0.4, 1.5), {0});
    std::vector<Vec> targets;
    for (int k = 0; k < 4; ++k) {
      targets.push_back(vec2(rng.uniform(-2, 8), rng.uniform(-2, 8)));
    }
    inst.targets = targets;
    for (int i = 0; i < 5; ++i) {
      add_agent(inst, "a" + std::to_string(i), rng.uniform(-2, 8),
                rng.uniform(-2, 8));
    }
    const DiscreteInstance graph =
        compile_linear_to_discrete(inst, TiePolicy::Optimistic);
    for (int i = 0; i < 5; ++i) {
      const Outcome via_graph =
          best_response_targets(graph, i, test::all_indices(4));
      const Outcome direct = best_response_points(
          inst, inst.agents[i].x, targets, TiePolicy::Optimistic);
      CHECK(via_graph.classified == direct.classified);
      if (via_graph.classified) {
        CHECK(via_graph.color == direct.color);
        CHECK(via_graph.cost_paid == doctest::Approx(direct.cost_paid));
      }
    }
  }
}

TEST_CASE("zero-false-positive selections are not downward closed") {
  auto inst = test::discrete(
      {"p1", "p2"},
      {{"x", {{"p1", 0.3, EdgeColor::Blue}, {"p2", 0.5, EdgeColor::Red}}}});
  CHECK(evaluate_criteria(inst, {0, 1}).fp_count == 0);
  CHECK(evaluate_criteria(inst, {1}).fp_count == 1);
}

TEST_CASE("true positives are monotone across nested zero-FP selections") {
  for (std::uint64_t seed = 40; seed < 52; ++seed) {
    const DiscreteInstance inst =
        gen_random_discrete(6, 5, 0.5, 0.5, 0.05, 1.0, seed);
    const int m = 5;
    std::vector<std::vector<int>> clean;
    std::vector<int> tp;
    for (std::uint64_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> selected;
      for (int k = 0; k < m; ++k) {
        if (mask & (1u << k)) selected.push_back(k);
      }
      const EvalReport rep = evaluate_criteria(inst, selected);
      if (rep.fp_count != 0) continue;
      clean.push_back(selected);
      tp.push_back(rep.tp_count);
    }
    for (std::size_t a = 0; a < clean.size(); ++a) {
      for (std::size_t b = 0; b < clean.size(); ++b) {
        if (!std::includes(clean[b].begin(), clean[b].end(), clean[a].begin(),
                           clean[a].end())) {
          continue;
        }
        CHECK(tp[a] <= tp[b]);  // subset a of superset b, both zero-FP
      }
    }
  }
}

TEST_CASE("validation rejects malformed instances") {
  auto inst = test::discrete({"p1"}, {{"x", {{"p1", 0.5, EdgeColor::Blue}}}});
  CHECK_NOTHROW(validate(inst));
  auto bad_weight = inst;
  bad_weight.agents[0].weight = 0.0;
  CHECK_THROWS_AS(validate(bad_weight), std::invalid_argument);
  auto bad_cost = inst;
  bad_cost.agents[0].edges[0].cost = -0.25;
  CHECK_THROWS_AS(validate(bad_cost), std::invalid_argument);
  auto dup = inst;
  dup.agents[0].edges.push_back({0, 0.7, EdgeColor::Red});
  CHECK_THROWS_AS(validate(dup), std::invalid_argument);
}
