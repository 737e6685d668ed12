#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "random_documents.hpp"
#include "rstsum/tiebreak.hpp"

namespace rstsum {
namespace {

using testing::esu;
using testing::make_doc;
using testing::multi;
using testing::ns;

UserProfile image_first() {
  UserProfile p;
  p.media_hierarchy = {MediaType::image, MediaType::text, MediaType::video, MediaType::audio};
  return p;
}

TieGroup group_of(std::vector<std::string> ids, double weight = 0.5) {
  return TieGroup{0, std::move(ids), weight};
}

TieDecision decide(const RhetGraph& g, const TieGroup& group, const UserProfile& profile,
                   const TieBreakOptions& options = {}) {
  const std::vector<TieGroup> groups = {group};
  auto decisions = resolve_equal_weights(groups, g, profile, options);
  EXPECT_EQ(decisions.size(), 1u);
  return decisions.at(0);
}

TEST(ResolveEqualWeights, MediaHierarchy) {
  const auto g = build_graph(make_doc({esu("root"), esu("sentence1"), esu("image1", MediaType::image)},
                                      {ns("root", "sentence1"), ns("root", "image1")}),
                             WeightConfig{});
  const auto d = decide(g, group_of({"sentence1", "image1"}), image_first());
  EXPECT_EQ(d.chosen_order, (std::vector<std::string>{"image1", "sentence1"}));
  EXPECT_EQ(d.method, TieMethod::media_hierarchy);
}

TEST(ResolveEqualWeights, SingleUnitIsIdentity) {
  const auto g = build_graph(make_doc({esu("a")}, {}), WeightConfig{});
  const auto d = decide(g, group_of({"a"}), default_profile());
  EXPECT_EQ(d.chosen_order, std::vector<std::string>{"a"});
}

TEST(ResolveEqualWeights, RolePrecedence) {
  const auto g = build_graph(make_doc({esu("r"), esu("s2"), esu("s1"), esu("x")},
                                      {ns("r", "s2"), ns("r", "s1"), ns("s1", "x")}),
                             WeightConfig{});
  const auto d = decide(g, group_of({"s2", "s1"}), default_profile());
  EXPECT_EQ(d.chosen_order, (std::vector<std::string>{"s1", "s2"}));
  EXPECT_EQ(d.method, TieMethod::role_precedence);
}

TEST(ResolveEqualWeights, MoreOutgoingEdgesFirst) {
  const auto g = build_graph(make_doc({esu("r"), esu("a"), esu("b"), esu("x"), esu("y")},
                                      {ns("r", "a"), ns("r", "b"), ns("a", "x"), ns("b", "x"), ns("b", "y")}),
                             WeightConfig{});
  const auto d = decide(g, group_of({"a", "b"}), default_profile());
  EXPECT_EQ(d.chosen_order, (std::vector<std::string>{"b", "a"}));
  EXPECT_EQ(d.method, TieMethod::role_precedence);
}

TEST(ResolveEqualWeights, ResidualFallsBackToDocumentOrder) {
  const auto g = build_graph(make_doc({esu("r"), esu("t1"), esu("t2")}, {ns("r", "t1"), ns("r", "t2")}),
                             WeightConfig{});
  const auto d = decide(g, group_of({"t2", "t1"}), default_profile());
  EXPECT_EQ(d.chosen_order, (std::vector<std::string>{"t1", "t2"}));
  EXPECT_EQ(d.method, TieMethod::document_order_fallback);
}

TEST(ResolveEqualWeights, TopicInterestBreaksResidue) {
  const auto g = build_graph(make_doc({esu("r"), esu("t1", MediaType::text, 10, {"history"}),
                                       esu("t2", MediaType::text, 10, {"space"})},
                                      {ns("r", "t1"), ns("r", "t2")}),
                             WeightConfig{});
  UserProfile p = default_profile();
  p.topics = {{"space", 0.9}, {"history", 0.4}};
  const auto d = decide(g, group_of({"t1", "t2"}), p);
  EXPECT_EQ(d.chosen_order, (std::vector<std::string>{"t2", "t1"}));
  EXPECT_EQ(d.method, TieMethod::media_hierarchy);
}

class Interaction : public ::testing::Test {
 protected:
  RhetGraph g = build_graph(make_doc({esu("r"), esu("t1"), esu("t2")}, {ns("r", "t1"), ns("r", "t2")}),
                            WeightConfig{});
  UserProfile interactive() {
    UserProfile p = default_profile();
    p.interactive = true;
    return p;
  }
};

TEST_F(Interaction, UserOrders) {
  int calls = 0;
  TieBreakOptions options;
  options.prompt = [&](std::span<const UnitSummary> units) {
    ++calls;
    EXPECT_EQ(units.size(), 2u);
    return std::vector<std::string>{units[1].id, units[0].id};
  };
  const auto d = decide(g, group_of({"t1", "t2"}), interactive(), options);
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(d.chosen_order, (std::vector<std::string>{"t2", "t1"}));
  EXPECT_EQ(d.method, TieMethod::user_intervention);
}

TEST_F(Interaction, NotAskedWhenProfileIsNotInteractive) {
  TieBreakOptions options;
  options.prompt = [](std::span<const UnitSummary>) -> std::vector<std::string> {
    ADD_FAILURE() << "prompted";
    return {};
  };
  EXPECT_EQ(decide(g, group_of({"t1", "t2"}), default_profile(), options).method,
            TieMethod::document_order_fallback);
}

TEST_F(Interaction, FailureFallsBack) {
  TieBreakOptions options;
  options.prompt = [](std::span<const UnitSummary>) -> std::vector<std::string> {
    throw InteractionError("no terminal");
  };
  const auto d = decide(g, group_of({"t1", "t2"}), interactive(), options);
  EXPECT_EQ(d.method, TieMethod::document_order_fallback);
  EXPECT_EQ(d.chosen_order, (std::vector<std::string>{"t1", "t2"}));
  EXPECT_NE(d.detail.find("no terminal"), std::string::npos);
}

TEST_F(Interaction, NonPermutationFallsBack) {
  TieBreakOptions options;
  options.prompt = [](std::span<const UnitSummary>) { return std::vector<std::string>{"t1", "t1"}; };
  EXPECT_EQ(decide(g, group_of({"t1", "t2"}), interactive(), options).method, TieMethod::document_order_fallback);
}

TEST_F(Interaction, StrictFailureThrows) {
  TieBreakOptions options;
  options.strict = true;
  options.prompt = [](std::span<const UnitSummary>) -> std::vector<std::string> { throw InteractionError("eof"); };
  const std::vector<TieGroup> groups = {group_of({"t1", "t2"})};
  EXPECT_THROW(resolve_equal_weights(groups, g, interactive(), options), InteractionError);
}

TEST(ApplyTieDecisions, RewritesSlice) {
  Ranking ranking{{"a", "b", "c", "d"}, {TieGroup{1, {"b", "c"}, 1.0}}};
  const std::vector<TieDecision> decisions = {
      TieDecision{{"b", "c"}, {"c", "b"}, TieMethod::media_hierarchy, ""}};
  apply_tie_decisions(ranking, decisions);
  EXPECT_EQ(ranking.order, (std::vector<std::string>{"a", "c", "b", "d"}));

  const std::vector<TieDecision> stray = {TieDecision{{"x", "y"}, {"y", "x"}, TieMethod::media_hierarchy, ""}};
  EXPECT_THROW(apply_tie_decisions(ranking, stray), ConsistencyError);
}

class TieProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{17};
};

TEST_F(TieProperties, InvariantsOnRandomGroups) {
  for (int i = 0; i < 300; ++i) {
    const auto doc = testing::random_document(rng);
    const auto g = build_graph(doc, WeightConfig{});
    UserProfile profile = default_profile();
    std::shuffle(profile.media_hierarchy.begin(), profile.media_hierarchy.end(), rng);
    if (i % 3 == 0) profile.topics = {{"space", 0.8}, {"science", 0.3}};

    std::vector<std::string> esus;
    for (const auto& u : doc.units) {
      if (u.is_esu()) esus.push_back(u.id);
    }
    if (esus.size() < 2) continue;
    std::shuffle(esus.begin(), esus.end(), rng);
    esus.resize(2 + rng() % (esus.size() - 1));
    const std::vector<TieGroup> groups = {group_of(esus)};

    const auto first = resolve_equal_weights(groups, g, profile);
    const auto again = resolve_equal_weights(groups, g, profile);
    ASSERT_EQ(first.size(), 1u);
    const TieDecision& d = first[0];
    EXPECT_EQ(d.chosen_order, again[0].chosen_order);
    EXPECT_EQ(d.method, again[0].method);

    auto sorted_group = d.group, sorted_choice = d.chosen_order;
    std::sort(sorted_group.begin(), sorted_group.end());
    std::sort(sorted_choice.begin(), sorted_choice.end());
    EXPECT_EQ(sorted_group, sorted_choice);

    auto media_rank = [&](const std::string& id) { return profile.media_rank(*doc.find_unit(id)->media); };
    auto is_nucleus = [&](const std::string& id) {
      const std::size_t self = g.resolved(*g.index_of(id));
      for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const bool from = g.resolved(g.edge_source(e)) == self;
        const bool to = g.resolved(g.edge_target(e)) == self;
        if (g.edges()[e].category == RelationCategory::nucleus_satellite ? from : (from || to)) return true;
      }
      return false;
    };
    for (std::size_t a = 0; a < d.chosen_order.size(); ++a) {
      for (std::size_t b = a + 1; b < d.chosen_order.size(); ++b) {
        const auto& x = d.chosen_order[a];
        const auto& y = d.chosen_order[b];
        if (d.method == TieMethod::media_hierarchy) EXPECT_LE(media_rank(x), media_rank(y));
        if (d.method == TieMethod::role_precedence) EXPECT_FALSE(!is_nucleus(x) && is_nucleus(y));
      }
    }
  }
}

}  // namespace
}  // namespace rstsum
