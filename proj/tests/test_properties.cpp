#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "mwvc/central.hpp"
#include "mwvc/generate.hpp"
#include "mwvc/graph_io.hpp"
#include "mwvc/mpc.hpp"
#include "mwvc/oracle.hpp"
#include "support.hpp"

namespace mwvc {
namespace {

class SmallGraphs : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(SmallGraphs, CentralInvariants) {
  const std::uint64_t seed = GetParam();
  for (std::size_t i = 0; i < 40; ++i) {
    const auto g = generate(testing::small_spec(i, seed));
    for (double eps : {0.02, 0.05, 0.1, 0.2}) {
      CentralOptions opts;
      opts.record_trace = true;
      const auto policy = i % 2 ? ThresholdPolicy::uniform(eps, seed)
                                : ThresholdPolicy::midpoint(eps);
      const auto r = run_centralized(g, g.weights(), eps, policy, opts);

      EXPECT_TRUE(validate_cover(g, r.cover).valid);
      EXPECT_TRUE(validate_fractional_matching(g, g.weights(), r.x).feasible);
      EXPECT_LE(r.iterations, central_iteration_bound(g.max_degree(), eps));
      EXPECT_EQ(r.feasibility_checks, r.iterations + 1);

      // Freezing is monotone and happens at y >= T w.
      std::vector<bool> seen(g.num_vertices(), false);
      for (const auto& snap : r.trace) {
        for (VertexId v : snap.frozen_now) {
          EXPECT_FALSE(seen[v]);
          seen[v] = true;
          EXPECT_GE(snap.y[v], (1 - 4 * eps) * g.weight(v) * (1 - 1e-12));
        }
      }
      // Every cover vertex ends saturated to at least the lowest threshold.
      const auto y = incident_sums(g, r.x);
      for (VertexId v : r.cover) EXPECT_GE(y[v], (1 - 4 * eps) * g.weight(v) * (1 - 1e-12));

      const auto opt = testing::brute_force_mwvc(g).weight;
      EXPECT_LE(r.matching_value, opt * (1 + 1e-9) + 1e-12);
      EXPECT_LE(r.cover_weight, 2.0 / (1 - 4 * eps) * opt + 1e-9);
    }
  }
}

TEST_P(SmallGraphs, MpcOnSmallGraphsIsValid) {
  const std::uint64_t seed = GetParam();
  for (std::size_t i = 0; i < 30; ++i) {
    const auto g = generate(testing::small_spec(i, seed));
    auto c = MpcConfig::practical(0.1, seed);
    c.stop_degree = 1.0;
    const auto r = run_mpc(g, c);
    EXPECT_TRUE(validate_cover(g, r.cover).valid);
    EXPECT_TRUE(r.sparsification_ok());
    EXPECT_EQ(r.mpc_rounds, 4 * r.phases + 1);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SmallGraphs, ::testing::Values(1, 2, 3, 4, 5));

class MediumGraphs : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(MediumGraphs, MpcInvariants) {
  const std::uint64_t seed = GetParam();
  std::mt19937_64 rng(seed);
  const GraphModel models[] = {GraphModel::gnp, GraphModel::power_law, GraphModel::star,
                               GraphModel::path, GraphModel::triangle};
  for (GraphModel model : models) {
    GenSpec s;
    s.model = model;
    s.num_vertices = 1500;
    s.target_avg_degree = std::uniform_real_distribution<double>(40, 120)(rng);
    s.weights = seed % 2 ? WeightDist::exponential(1.0) : WeightDist::uniform(1, 3);
    s.seed = seed;
    const auto g = generate(s);
    for (const bool weak : {false, true}) {
      auto c = MpcConfig::practical(0.1, seed);
      if (weak) {
        c.bias_base = 0.5;
        c.stop_degree = 8.0;
      }
      const auto r = run_mpc(g, c);
      EXPECT_TRUE(validate_cover(g, r.cover).valid);
      EXPECT_TRUE(r.sparsification_ok());
      for (const auto& pr : r.phase_records) {
        EXPECT_LE(pr.high_count + pr.inactive_count, g.num_vertices());
        EXPECT_GE(pr.d, c.stop_degree);
        for (auto e : pr.per_machine_edges) EXPECT_LE(e, 8 * g.num_vertices());
      }
      double total = 0.0;
      for (double xe : r.x) {
        EXPECT_GE(xe, 0.0);
        total += xe;
      }
      EXPECT_NEAR(total, r.matching_value, 1e-9 * std::max(1.0, total));
      const auto again = run_mpc(g, c);
      EXPECT_EQ(again.cover, r.cover);
      EXPECT_EQ(again.x, r.x);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, MediumGraphs, ::testing::Values(11, 12, 13));

TEST(Io, RandomRoundTrips) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenSpec s = testing::small_spec(seed, seed, 200);
    const auto g = generate(s);
    std::ostringstream out;
    save_graph(g, out);
    std::istringstream in(out.str());
    EXPECT_TRUE(load_graph(in).graph == g);
  }
}

}  // namespace
}  // namespace mwvc
