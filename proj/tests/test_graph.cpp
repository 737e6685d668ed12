#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "random_documents.hpp"
#include "rstsum/graph.hpp"
#include "rstsum/weighting.hpp"

namespace rstsum {
namespace {

using testing::ecu;
using testing::esu;
using testing::make_doc;
using testing::multi;
using testing::ns;

std::vector<std::pair<std::string, std::string>> edge_pairs(const RhetGraph& g) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.source, e.target);
  return out;
}

TEST(BuildGraph, SingleUnit) {
  const auto g = build_graph(make_doc({esu("r")}, {}), WeightConfig{});
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.edges().empty());
}

TEST(BuildGraph, SpaceFixtureEdges) {
  const auto g = build_graph(testing::space_fixture(), WeightConfig{});
  EXPECT_EQ(g.size(), 6u);
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"Introduction", "Space Race"},
      {"Introduction", "Moon Landing"},
      {"Introduction", "International Space Station"},
      {"Space Race", "Moon Landing"},
      {"Moon Landing", "International Space Station"},
      {"International Space Station", "Mars Missions"},
      {"Mars Missions", "Future of Space Exploration"},
  };
  EXPECT_EQ(edge_pairs(g), expected);
  EXPECT_DOUBLE_EQ(g.edges()[6].coefficient, 0.7);
  EXPECT_DOUBLE_EQ(g.edges()[5].coefficient, 0.5);
}

TEST(BuildGraph, MultiNucleusStar) {
  const auto g = build_graph(make_doc({esu("a"), esu("b"), esu("c")}, {multi({"a", "b", "c"})}), WeightConfig{});
  const std::vector<std::pair<std::string, std::string>> expected = {{"a", "b"}, {"a", "c"}};
  EXPECT_EQ(edge_pairs(g), expected);
  for (const auto& e : g.edges()) EXPECT_EQ(e.category, RelationCategory::multi_nucleus);
}

TEST(BuildGraph, UnknownTypeWithoutDefault) {
  WeightConfig config;
  config.default_coefficient.reset();
  const auto doc = make_doc({esu("a"), esu("b")}, {ns("a", "b", "Evidence")});
  try {
    build_graph(doc, config);
    FAIL() << "expected a configuration error";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.subject(), "relation#0");
  }
  EXPECT_DOUBLE_EQ(build_graph(doc, WeightConfig{}).edges()[0].coefficient, 0.5);
}

TEST(BuildGraph, InvalidDocumentIsRejected) {
  EXPECT_THROW(build_graph(make_doc({esu("a"), esu("b")}, {ns("a", "b"), ns("b", "a")}), WeightConfig{}),
               InputError);
}

TEST(BuildGraph, EcuResolvesToMainUnit) {
  const auto g = build_graph(
      make_doc({esu("r"), ecu("e", {"m", "n"}, "m"), esu("m"), esu("n")}, {ns("r", "e"), ns("m", "n")}),
      WeightConfig{});
  const auto e = *g.index_of("e");
  EXPECT_EQ(g.node(g.resolved(e)).id, "m");
  EXPECT_EQ(g.node(*g.index_of("m")).is_main_unit_of, std::optional<std::string>("e"));
  EXPECT_TRUE(g.outgoing(e).empty());
  EXPECT_EQ(g.outgoing(*g.index_of("m")).size(), 1u);
  EXPECT_EQ(g.nuclei_of(*g.index_of("m")), std::vector<std::size_t>{*g.index_of("r")});
}

TEST(ComputeLevels, SingleUnit) {
  const auto levels = compute_levels(build_graph(make_doc({esu("root")}, {}), WeightConfig{}));
  EXPECT_EQ(levels, (LevelMap{{"root", 0}}));
}

TEST(ComputeLevels, Chain) {
  const auto levels =
      compute_levels(build_graph(make_doc({esu("root"), esu("a"), esu("b")}, {ns("root", "a"), ns("a", "b")}),
                                 WeightConfig{}));
  EXPECT_EQ(levels, (LevelMap{{"root", 0}, {"a", 1}, {"b", 2}}));
}

TEST(ComputeLevels, EcuDelegatesToMainUnit) {
  const auto g = build_graph(
      make_doc({esu("root"), ecu("e", {"m", "n"}, "m"), esu("m"), esu("n")}, {ns("root", "e"), ns("m", "n")}),
      WeightConfig{});
  EXPECT_EQ(compute_levels(g), (LevelMap{{"root", 0}, {"e", 1}, {"m", 1}, {"n", 2}}));
}

TEST(ComputeLevels, FirstAssignmentWins) {
  // Depth-first reaches c through a -> b -> c before the direct root -> c edge.
  const auto g = build_graph(make_doc({esu("r"), esu("a"), esu("b"), esu("c")},
                                      {ns("r", "a"), ns("r", "c"), ns("a", "b"), ns("b", "c")}),
                             WeightConfig{});
  EXPECT_EQ(compute_levels(g).at("c"), 3);
}

TEST(ComputeLevels, SpaceFixture) {
  const auto levels = compute_levels(build_graph(testing::space_fixture(), WeightConfig{}));
  EXPECT_EQ(levels.at("Introduction"), 0);
  EXPECT_EQ(levels.at("Space Race"), 1);
  EXPECT_EQ(levels.at("Moon Landing"), 2);
  EXPECT_EQ(levels.at("International Space Station"), 3);
  EXPECT_EQ(levels.at("Mars Missions"), 4);
  EXPECT_EQ(levels.at("Future of Space Exploration"), 5);
}

TEST(DetectCycles, Examples) {
  EXPECT_TRUE(detect_cycles(build_graph(testing::space_fixture(), WeightConfig{})).empty());

  auto doc = make_doc({esu("a"), esu("b")}, {ns("a", "b"), ns("b", "a")});
  const auto g = detail::assemble_graph(doc, WeightConfig{});
  EXPECT_EQ(detect_cycles(g), (std::vector<std::vector<std::string>>{{"a", "b"}}));

  const RhetGraph empty({}, {}, "");
  EXPECT_TRUE(detect_cycles(empty).empty());
  EXPECT_TRUE(compute_levels(empty).empty());
  EXPECT_TRUE(compute_weights(empty, {}, WeightConfig{}).empty());
}

TEST(DetectCycles, RotatedToSmallestId) {
  auto doc = make_doc({esu("r"), esu("z"), esu("b"), esu("m")},
                      {ns("r", "z"), ns("z", "b"), ns("b", "m"), ns("m", "z")});
  const auto cycles = detect_cycles(detail::assemble_graph(doc, WeightConfig{}));
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(cycles[0], (std::vector<std::string>{"b", "m", "z"}));
}

TEST(DetectCycles, FixtureFile) {
  const auto doc = parse_document_spec(testing::read_fixture("cyclic.json"));
  const auto cycles = detect_cycles(detail::assemble_graph(doc, WeightConfig{}));
  EXPECT_EQ(cycles, (std::vector<std::vector<std::string>>{{"b", "c"}}));
}

class RandomGraphs : public ::testing::Test {
 protected:
  std::mt19937_64 rng{2024};
};

TEST_F(RandomGraphs, EdgeCountAndAcyclicity) {
  for (int i = 0; i < 300; ++i) {
    const auto doc = testing::random_document(rng);
    const auto g = build_graph(doc, WeightConfig{});
    std::size_t expected = 0;
    for (const auto& r : doc.relations) {
      expected += r.category == RelationCategory::nucleus_satellite ? 1 : r.members.size() - 1;
    }
    EXPECT_EQ(g.size(), doc.units.size());
    EXPECT_EQ(g.edges().size(), expected);
    EXPECT_TRUE(detect_cycles(g).empty());
    const auto levels = compute_levels(g);
    EXPECT_EQ(levels.size(), doc.units.size());
    EXPECT_EQ(levels, compute_levels(g));
  }
}

TEST_F(RandomGraphs, PermutingUnitsKeepsStructure) {
  for (int i = 0; i < 100; ++i) {
    auto doc = testing::random_document(rng);
    const auto g = build_graph(doc, WeightConfig{});
    std::shuffle(doc.units.begin() + 1, doc.units.end(), rng);
    const auto h = build_graph(doc, WeightConfig{});
    EXPECT_EQ(edge_pairs(g), edge_pairs(h));
    EXPECT_EQ(compute_levels(g), compute_levels(h));
  }
}

TEST_F(RandomGraphs, LevelIsPredecessorPlusOne) {
  for (int i = 0; i < 200; ++i) {
    const auto doc = testing::random_document(rng);
    const auto g = build_graph(doc, WeightConfig{});
    const auto levels = compute_levels(g);
    for (const auto& node : g.nodes()) {
      if (node.id == doc.root) {
        EXPECT_EQ(levels.at(node.id), 0);
        continue;
      }
      // Some in-edge must come from a unit exactly one level up.
      const std::size_t self = g.resolved(*g.index_of(node.id));
      if (self == g.resolved_root()) continue;
      bool found = false;
      for (std::size_t e = 0; e < g.edges().size(); ++e) {
        if (g.resolved(g.edge_target(e)) != self) continue;
        const auto& src = g.node(g.resolved(g.edge_source(e))).id;
        found = found || levels.at(src) + 1 == levels.at(node.id);
      }
      EXPECT_TRUE(found) << node.id;
    }
  }
}

}  // namespace
}  // namespace rstsum
