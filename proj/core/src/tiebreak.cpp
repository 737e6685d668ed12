#include "rstsum/tiebreak.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <tuple>

namespace rstsum {

std::string_view to_string(TieMethod method) {
  switch (method) {
    case TieMethod::media_hierarchy: return "media_hierarchy";
    case TieMethod::role_precedence: return "role_precedence";
    case TieMethod::user_intervention: return "user_intervention";
    case TieMethod::document_order_fallback: return "document_order_fallback";
  }
  return "document_order_fallback";
}

namespace {

struct Candidate {
  std::string id;
  std::size_t position = 0;   // document order
  std::size_t media_rank = 0;
  int role_class = 1;         // 0 nucleus, 1 pure satellite
  long long out_degree = 0;   // outgoing nucleus-satellite edges
  double topic_score = 0.0;
  UnitSummary summary;
};

std::vector<Candidate> describe(const TieGroup& group, const RhetGraph& graph, const UserProfile& profile) {
  std::vector<Candidate> out;
  for (const auto& id : group.ids) {
    Candidate c;
    c.id = id;
    c.summary.id = id;
    c.summary.raw_weight = group.raw_weight;
    if (auto index = graph.index_of(id)) {
      const GraphNode& node = graph.node(*index);
      c.position = *index;
      c.summary.media = node.media;
      c.summary.duration_s = node.duration_s;
      c.media_rank = node.media ? profile.media_rank(*node.media) : kAllMediaTypes.size();
      c.topic_score = profile.topic_score(node.topics);
      const std::size_t self = graph.resolved(*index);
      for (std::size_t e = 0; e < graph.edges().size(); ++e) {
        const bool from_here = graph.resolved(graph.edge_source(e)) == self;
        if (graph.edges()[e].category == RelationCategory::nucleus_satellite) {
          if (from_here) {
            c.role_class = 0;
            ++c.out_degree;
          }
        } else if (from_here || graph.resolved(graph.edge_target(e)) == self) {
          c.role_class = 0;
        }
      }
    } else {
      c.position = graph.size();
      c.media_rank = kAllMediaTypes.size();
    }
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    return a.position < b.position;
  });
  return out;
}

auto role_key(const Candidate& c) { return std::make_tuple(c.role_class, -c.out_degree); }

bool same_key(const Candidate& a, const Candidate& b) {
  return a.media_rank == b.media_rank && role_key(a) == role_key(b) && a.topic_score == b.topic_score;
}

bool is_permutation_of(const std::vector<std::string>& answer, const std::vector<Candidate>& run) {
  if (answer.size() != run.size()) return false;
  std::multiset<std::string> want;
  for (const auto& c : run) want.insert(c.id);
  return std::multiset<std::string>(answer.begin(), answer.end()) == want;
}

}  // namespace

std::vector<TieDecision> resolve_equal_weights(std::span<const TieGroup> groups, const RhetGraph& graph,
                                               const UserProfile& profile, const TieBreakOptions& options) {
  std::vector<TieDecision> decisions;
  for (const TieGroup& group : groups) {
    TieDecision decision;
    decision.group = group.ids;
    std::vector<Candidate> candidates = describe(group, graph, profile);

    auto differs = [&](auto key) {
      return std::any_of(candidates.begin(), candidates.end(),
                         [&](const Candidate& c) { return key(c) != key(candidates.front()); });
    };
    const bool media_differs = differs([](const Candidate& c) { return c.media_rank; });
    const bool role_differs = differs([](const Candidate& c) { return role_key(c); });
    const bool topic_differs = differs([](const Candidate& c) { return c.topic_score; });

    std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      return std::make_tuple(a.media_rank, role_key(a), -a.topic_score) <
             std::make_tuple(b.media_rank, role_key(b), -b.topic_score);
    });

    std::string residue_note;
    bool user_ordered = false;
    const bool can_ask = profile.interactive && static_cast<bool>(options.prompt);
    for (std::size_t begin = 0; begin < candidates.size();) {
      std::size_t end = begin + 1;
      while (end < candidates.size() && same_key(candidates[begin], candidates[end])) ++end;
      if (end - begin >= 2 && can_ask) {
        std::vector<Candidate> run(candidates.begin() + static_cast<std::ptrdiff_t>(begin),
                                   candidates.begin() + static_cast<std::ptrdiff_t>(end));
        std::vector<UnitSummary> summaries;
        for (const auto& c : run) summaries.push_back(c.summary);
        std::string failure;
        std::vector<std::string> answer;
        try {
          answer = options.prompt(summaries);
          if (!is_permutation_of(answer, run)) failure = "response is not a permutation of the tied units";
        } catch (const std::exception& e) {
          failure = e.what();
        } catch (...) {
          failure = "interaction aborted";
        }
        if (failure.empty()) {
          for (std::size_t i = 0; i < answer.size(); ++i) {
            auto it = std::find_if(run.begin(), run.end(), [&](const Candidate& c) { return c.id == answer[i]; });
            candidates[begin + i] = *it;
          }
          user_ordered = true;
        } else {
          if (options.strict) throw InteractionError("tie between units of equal weight: " + failure);
          residue_note = "user interaction failed (" + failure + "); kept document order";
        }
      }
      begin = end;
    }

    for (const auto& c : candidates) decision.chosen_order.push_back(c.id);

    if (media_differs) {
      decision.method = TieMethod::media_hierarchy;
      decision.detail = "ordered by profile media hierarchy";
    } else if (role_differs) {
      decision.method = TieMethod::role_precedence;
      decision.detail = "nuclei before satellites, then by outgoing nucleus-satellite relations";
    } else if (topic_differs) {
      decision.method = TieMethod::media_hierarchy;
      decision.detail = "same media and role; ordered by profile topic interest";
    } else if (user_ordered) {
      decision.method = TieMethod::user_intervention;
      decision.detail = "ordered by the user";
    } else {
      decision.method = TieMethod::document_order_fallback;
      decision.detail = candidates.size() < 2 ? "single unit" : "no preference applies; kept document order";
    }
    if (!residue_note.empty()) {
      decision.detail += "; " + residue_note;
    } else if (user_ordered && decision.method != TieMethod::user_intervention) {
      decision.detail += "; remaining ties ordered by the user";
    }
    decisions.push_back(std::move(decision));
  }
  return decisions;
}

void apply_tie_decisions(Ranking& ranking, std::span<const TieDecision> decisions) {
  for (const TieDecision& decision : decisions) {
    auto group = std::find_if(ranking.tie_groups.begin(), ranking.tie_groups.end(),
                              [&](const TieGroup& g) { return g.ids == decision.group; });
    if (group == ranking.tie_groups.end()) {
      throw ConsistencyError("tie decision does not match any tie group of the ranking");
    }
    if (decision.chosen_order.size() != group->ids.size() ||
        group->offset + group->ids.size() > ranking.order.size()) {
      throw ConsistencyError("tie decision does not fit its tie group");
    }
    std::copy(decision.chosen_order.begin(), decision.chosen_order.end(),
              ranking.order.begin() + static_cast<std::ptrdiff_t>(group->offset));
  }
}

}  // namespace rstsum
