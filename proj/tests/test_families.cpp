#include <gtest/gtest.h>

#include "quiver/error.hpp"
#include "quiver/families.hpp"
#include "quiver/json.hpp"

using namespace quiver;

TEST(RngTest, SplitMixReferenceValues) {
  // Published SplitMix64 outputs for seed 0.
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng.next(), 0x06C45D188009454FULL);
}

TEST(RngTest, UniformStaysInRange) {
  SplitMix64 rng(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) ++hits[rng.uniform(7)];
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(FamiliesTest, Shapes) {
  EXPECT_EQ(clover(4).edge_count(), 4u);
  EXPECT_EQ(clover(4).loop_count(), 4u);
  EXPECT_EQ(ribbon(5).vertex_count(), 2u);
  EXPECT_EQ(cycle(6).edge_count(), 6u);
  EXPECT_EQ(path(6).edge_count(), 5u);
  EXPECT_EQ(star(6).edge_count(), 5u);
  EXPECT_EQ(complete(6).edge_count(), 15u);
  EXPECT_EQ(edgeless(6).edge_count(), 0u);
  EXPECT_THROW(ribbon(1), PreconditionError);
  EXPECT_THROW(cycle(2), PreconditionError);
}

TEST(FamiliesTest, K7FixtureMatchesPrintedMatrix) {
  const Quiver q = k7_ribbon_fixture();
  EXPECT_EQ(kirchhoff(q), k7_ribbon_kirchhoff());
  EXPECT_EQ(q.edge_count(), 61u);
  EXPECT_EQ(redundancy(q), 40);
  EXPECT_EQ(kirchhoff(q).trace(), 122);
}

TEST(FamiliesTest, RandomTreeIsATree) {
  SplitMix64 rng(41);
  for (std::size_t n = 1; n <= 30; ++n) {
    const Quiver t = random_tree(n, rng);
    EXPECT_EQ(t.edge_count(), n - 1);
    EXPECT_TRUE(is_connected(t));
    EXPECT_TRUE(t.is_simple());
  }
}

TEST(FamiliesTest, RandomQuiverCounts) {
  SplitMix64 rng(42);
  const Quiver q = random_quiver(20, 50, 30, 10, rng);
  EXPECT_EQ(q.vertex_count(), 20u);
  EXPECT_EQ(q.edge_count(), 90u);
  EXPECT_EQ(q.loop_count(), 30u);
  EXPECT_EQ(redundancy(q), 10);
  EXPECT_THROW(random_quiver(4, 7, 0, 0, rng), PreconditionError);
}

TEST(FamiliesTest, GenerateIsDeterministic) {
  FamilySpec spec{Family::random_quiver, 12, 20, 4, 4, 99, 0};
  EXPECT_EQ(generate(spec), generate(spec));
  FamilySpec other = spec;
  other.seed = 100;
  EXPECT_NE(to_qvr(generate(spec)), to_qvr(generate(other)));
}

TEST(FamiliesTest, ParseFamilyNames) {
  for (Family f : {Family::clover, Family::ribbon, Family::cycle, Family::path, Family::star, Family::complete,
                   Family::edgeless, Family::random_tree, Family::random_quiver, Family::k7_ribbon_fixture,
                   Family::enumerate})
    EXPECT_EQ(parse_family(to_string(f)), f);
  EXPECT_THROW(parse_family("petersen"), PreconditionError);
  EXPECT_TRUE(is_random(Family::random_quiver));
  EXPECT_FALSE(is_random(Family::cycle));
}

TEST(EnumerateTest, CountsAndOrder) {
  const LabeledGraphs g = enumerate_labeled(4);
  EXPECT_EQ(g.size(), 64u);
  EXPECT_EQ(g[0].edge_count(), 0u);
  EXPECT_EQ(g[1].edge(0), (Edge{0, 1}));
  EXPECT_EQ(g[63], complete(4));
  std::size_t count = 0, edges = 0;
  for (const Quiver& q : g) {
    ++count;
    edges += q.edge_count();
  }
  EXPECT_EQ(count, 64u);
  EXPECT_EQ(edges, 6u * 32u);
  EXPECT_THROW(enumerate_labeled(8), PreconditionError);
}

TEST(SearchTest, InstanceCounts) {
  SearchSpec spec;
  spec.family = {Family::enumerate, 4};
  spec.checks = {"brouwer"};
  EXPECT_EQ(instance_count(spec), 64u);
  spec.family = {Family::cycle, 5};
  EXPECT_EQ(instance_count(spec), 1u);
  spec.family = {Family::random_tree, 5};
  spec.trials = 17;
  EXPECT_EQ(instance_count(spec), 17u);
}

TEST(SearchTest, EnumerateFive) {
  SearchSpec spec;
  spec.family = {Family::enumerate, 5};
  spec.checks = {"brouwer", "signless"};
  const AggregateReport a = search(spec);
  EXPECT_EQ(a.instances, 1024u);
  EXPECT_EQ(a.total_failures(), 0u);
  ASSERT_EQ(a.checks.size(), 2u);
  EXPECT_EQ(a.checks[0].evaluated, 1024u);
}

TEST(SearchTest, ClassicalBoundFailuresAreCapped) {
  SearchSpec spec;
  spec.family = {Family::random_quiver, 6, 6, 0, 4};
  spec.seed = 5;
  spec.trials = 30;
  spec.checks = {"brouwer"};
  spec.options.classical_bound = true;
  const AggregateReport a = search(spec);
  EXPECT_GT(a.checks[0].failed, 0u);
  EXPECT_LE(a.checks[0].failures.size(), 5u);
  for (const auto& f : a.checks[0].failures) EXPECT_EQ(replay(f).verdict, Verdict::fail);
}

TEST(SearchTest, ThreadsDoNotChangeTheReport) {
  SearchSpec spec;
  spec.family = {Family::random_quiver, 10, 15, 3, 3};
  spec.seed = 7;
  spec.trials = 200;
  spec.checks = {"sandwich", "interlacing", "hadamard"};
  spec.explore_s3 = true;
  const std::string one = to_json(search(spec)).dump();
  spec.threads = 3;
  EXPECT_EQ(to_json(search(spec)).dump(), one);
  spec.threads = 1;
  EXPECT_EQ(to_json(search(spec)).dump(), one);
}

TEST(SearchTest, InstancesAreIndependentOfTrialCount) {
  SearchSpec spec;
  spec.family = {Family::random_quiver, 10, 15, 3, 3};
  spec.seed = 8;
  spec.trials = 5;
  const Quiver third = search_instance(spec, 3);
  spec.trials = 500;
  EXPECT_EQ(search_instance(spec, 3), third);
}

TEST(BatchSpecTest, ParsesAndRejects) {
  const Json j = Json::parse(R"({"family":"random_quiver","params":{"n":8,"m":10,"loops":2,"multi":1},
                                 "seed":3,"trials":12,"checks":["sandwich","lew"]})");
  const SearchSpec s = search_spec_from_json(j);
  EXPECT_EQ(s.family.family, Family::random_quiver);
  EXPECT_EQ(s.family.n, 8u);
  EXPECT_EQ(s.family.multi, 1u);
  EXPECT_EQ(s.trials, 12u);
  EXPECT_EQ(s.checks.size(), 2u);
  EXPECT_THROW(search_spec_from_json(Json::parse(R"({"family":"cycle"})")), ParseError);
  EXPECT_THROW(search_spec_from_json(Json::parse(R"({"family":"blob","checks":["lew"]})")), ParseError);
  EXPECT_THROW(search_spec_from_json(Json::parse(R"({"family":"cycle","checks":"lew"})")), ParseError);
  EXPECT_THROW(load_search_spec("/nonexistent.json"), ParseError);
}
