#include <gtest/gtest.h>

#include "mwvc/central.hpp"
#include "mwvc/generate.hpp"
#include "mwvc/oracle.hpp"
#include "support.hpp"

namespace mwvc {
namespace {

using testing::make_graph;

TEST(Exact, SingleEdge) {
  const auto r = exact_mwvc(make_graph(2, {{0, 1}}, {2, 3}));
  EXPECT_EQ(r.opt_cover, (std::vector<VertexId>{0}));
  EXPECT_DOUBLE_EQ(r.opt_weight, 2.0);
}

TEST(Exact, Triangle) {
  const auto r = exact_mwvc(make_graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_DOUBLE_EQ(r.opt_weight, 2.0);
  EXPECT_EQ(r.opt_cover.size(), 2u);
}

TEST(Exact, StarPrefersCheapCenter) {
  const auto g = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, {3, 1, 1, 1, 1});
  const auto r = exact_mwvc(g);
  EXPECT_EQ(r.opt_cover, (std::vector<VertexId>{0}));
  EXPECT_DOUBLE_EQ(r.opt_weight, testing::brute_force_mwvc(g).weight);
  const auto heavy = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, {5, 1, 1, 1, 1});
  EXPECT_DOUBLE_EQ(exact_mwvc(heavy).opt_weight, 4.0);
}

TEST(Exact, EmptyGraph) {
  const auto r = exact_mwvc(make_graph(4, {}));
  EXPECT_TRUE(r.opt_cover.empty());
  EXPECT_DOUBLE_EQ(r.opt_weight, 0.0);
}

TEST(Exact, AgreesWithBruteForce) {
  for (std::size_t i = 0; i < 150; ++i) {
    GenSpec s = testing::small_spec(i, 77, 14);
    s.model = i % 3 == 0 ? GraphModel::power_law : GraphModel::gnp;
    if (s.target_avg_degree == 0.0) s.target_avg_degree = 3.0;
    s.target_avg_degree = std::min(s.target_avg_degree, s.num_vertices - 1.0);
    const auto g = generate(s);
    const auto r = exact_mwvc(g);
    const auto bf = testing::brute_force_mwvc(g);
    EXPECT_NEAR(r.opt_weight, bf.weight, 1e-9 * std::max(1.0, bf.weight)) << "graph " << i;
    EXPECT_TRUE(validate_cover(g, r.opt_cover).valid);
    double w = 0.0;
    for (VertexId v : r.opt_cover) w += g.weight(v);
    EXPECT_DOUBLE_EQ(w, r.opt_weight);
  }
}

TEST(Exact, NodeCap) {
  GenSpec s;
  s.num_vertices = 200;
  s.target_avg_degree = 10;
  s.weights = WeightDist::uniform(1, 2);
  EXPECT_THROW(exact_mwvc(generate(s), 50), OracleCapExceeded);
}

TEST(ValidateCover, Cases) {
  EXPECT_TRUE(validate_cover(make_graph(0, {}), {}).valid);
  const auto edge = validate_cover(make_graph(2, {{0, 1}}), {});
  EXPECT_FALSE(edge.valid);
  EXPECT_EQ(*edge.witness, (Edge{0, 1}));
  const std::vector<VertexId> two{0, 2};
  EXPECT_TRUE(validate_cover(make_graph(3, {{0, 1}, {1, 2}, {0, 2}}), two).valid);
  const std::vector<VertexId> bad{7};
  EXPECT_THROW(validate_cover(make_graph(2, {{0, 1}}), bad), std::out_of_range);
}

TEST(Feasibility, ZeroVectorSlackIsMinWeight) {
  const auto g = make_graph(3, {{0, 1}, {1, 2}}, {4, 2, 3});
  const std::vector<double> x{0, 0};
  const auto r = validate_fractional_matching(g, g.weights(), x);
  EXPECT_TRUE(r.feasible);
  EXPECT_DOUBLE_EQ(r.worst_slack, 2.0);
  EXPECT_EQ(*r.worst_vertex, 1u);
}

TEST(Feasibility, TriangleInitIsTightAtA) {
  const auto g = make_graph(3, {{0, 1}, {0, 2}, {1, 2}}, {3, 6, 9});
  const auto x = init_edge_weights(g, g.weights(), g.degrees());
  const auto r = validate_fractional_matching(g, g.weights(), x);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(*r.worst_vertex, 0u);
  EXPECT_DOUBLE_EQ(r.worst_slack, 0.0);
}

TEST(Feasibility, OverloadedEdge) {
  const auto g = make_graph(2, {{0, 1}});
  const std::vector<double> x{1.5};
  const auto r = validate_fractional_matching(g, g.weights(), x);
  EXPECT_FALSE(r.feasible);
  EXPECT_DOUBLE_EQ(r.worst_slack, -0.5);
  EXPECT_TRUE(validate_fractional_matching(g, g.weights(), x, 1.5).feasible);
  const std::vector<double> neg{-1.0};
  EXPECT_THROW(validate_fractional_matching(g, g.weights(), neg), std::invalid_argument);
}

TEST(Ratio, EmptyGraphVacuous) {
  const auto r = ratio_report(Algorithm::central, 0.0, 0.0, 0.0, 0.1);
  EXPECT_TRUE(r.vacuous);
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(r.ratio_vs_matching.has_value());
}

TEST(Ratio, SingleEdgeCentral) {
  const auto g = make_graph(2, {{0, 1}});
  const auto c = run_centralized(g, 0.1);
  const auto e = exact_mwvc(g);
  const auto r = ratio_report(c, &e, 0.1);
  EXPECT_DOUBLE_EQ(*r.ratio_vs_opt, 2.0);
  EXPECT_DOUBLE_EQ(*r.ratio_vs_matching, 2.0);
  EXPECT_DOUBLE_EQ(r.bound, 3.0);
  EXPECT_TRUE(r.pass);
}

TEST(Ratio, BoundsAndFailures) {
  EXPECT_DOUBLE_EQ(ratio_report(Algorithm::mpc, 1, 1, std::nullopt, 0.1).bound, 5.0);
  const auto bad = ratio_report(Algorithm::central, 10.0, 1.0, 1.0, 0.1);
  EXPECT_FALSE(bad.certificate_ok);
  EXPECT_FALSE(bad.bound_ok);
  EXPECT_FALSE(bad.pass);
  const auto anomaly = ratio_report(Algorithm::central, 1.0, 0.0, std::nullopt, 0.1);
  EXPECT_TRUE(anomaly.anomaly);
}

TEST(Ratio, WeakDualityOrdering) {
  for (std::size_t i = 0; i < 60; ++i) {
    const auto g = generate(testing::small_spec(i, 31));
    const auto c = run_centralized(g, 0.1);
    const auto e = exact_mwvc(g);
    const auto r = ratio_report(c, &e, 0.1);
    if (r.vacuous) continue;
    EXPECT_LE(*r.ratio_vs_opt, *r.ratio_vs_matching + 1e-12);
  }
}

}  // namespace
}  // namespace mwvc
