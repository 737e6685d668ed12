#include "rstsum/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

namespace rstsum {

RhetGraph::RhetGraph(std::vector<GraphNode> nodes, std::vector<GraphEdge> edges, std::string root)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), root_(std::move(root)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!index_.emplace(nodes_[i].id, i).second) {
      throw std::invalid_argument("duplicate graph node '" + nodes_[i].id + "'");
    }
  }
  if (!nodes_.empty() || !root_.empty()) {
    auto root_it = index_.find(root_);
    if (root_it == index_.end()) throw std::invalid_argument("graph root '" + root_ + "' is not a node");
    root_index_ = root_it->second;
  }

  // ECU -> main unit, followed until an ESU. The bound guards against
  // membership cycles that slipped past validation.
  std::vector<std::size_t> main_of(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) main_of[i] = i;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].is_main_unit_of) {
      auto ecu = index_.find(*nodes_[i].is_main_unit_of);
      if (ecu == index_.end()) throw std::invalid_argument("unknown ECU '" + *nodes_[i].is_main_unit_of + "'");
      main_of[ecu->second] = i;
    }
  }
  resolved_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    std::size_t cur = i;
    for (std::size_t steps = 0; nodes_[cur].kind == UnitKind::ecu; ++steps) {
      if (main_of[cur] == cur || steps > nodes_.size()) {
        throw std::invalid_argument("ECU '" + nodes_[i].id + "' has no resolvable main unit");
      }
      cur = main_of[cur];
    }
    resolved_[i] = cur;
  }

  outgoing_.resize(nodes_.size());
  incoming_ns_.resize(nodes_.size());
  edge_ends_.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto s = index_.find(edges_[e].source);
    auto t = index_.find(edges_[e].target);
    if (s == index_.end() || t == index_.end()) {
      throw std::invalid_argument("edge endpoint is not a node");
    }
    if (s->second == t->second) throw std::invalid_argument("self-loop on '" + edges_[e].source + "'");
    edge_ends_.emplace_back(s->second, t->second);
    outgoing_[resolved_[s->second]].push_back(e);
    if (edges_[e].category == RelationCategory::nucleus_satellite) {
      incoming_ns_[resolved_[t->second]].push_back(e);
    }
  }
}

std::optional<std::size_t> RhetGraph::index_of(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const GraphNode* RhetGraph::find(std::string_view id) const {
  auto idx = index_of(id);
  return idx ? &nodes_[*idx] : nullptr;
}

std::span<const std::size_t> RhetGraph::outgoing(std::size_t index) const { return outgoing_.at(index); }

std::span<const std::size_t> RhetGraph::incoming_satellite_edges(std::size_t index) const {
  return incoming_ns_.at(index);
}

bool RhetGraph::acts_as_nucleus(std::size_t index) const {
  const auto& out = outgoing_.at(index);
  return std::any_of(out.begin(), out.end(), [&](std::size_t e) {
    return edges_[e].category == RelationCategory::nucleus_satellite;
  });
}

std::vector<std::size_t> RhetGraph::nuclei_of(std::size_t index) const {
  std::vector<std::size_t> out;
  for (std::size_t e : incoming_ns_.at(index)) {
    std::size_t nucleus = resolved_[edge_ends_[e].first];
    if (nucleus != index && std::find(out.begin(), out.end(), nucleus) == out.end()) {
      out.push_back(nucleus);
    }
  }
  return out;
}

namespace detail {

RhetGraph assemble_graph(const DocumentSpec& doc, const WeightConfig& config) {
  std::vector<GraphNode> nodes;
  nodes.reserve(doc.units.size());
  for (const Unit& u : doc.units) {
    nodes.push_back({u.id, u.kind, u.media, u.duration_s, std::nullopt, u.topics});
  }
  for (const Unit& u : doc.units) {
    if (u.is_ecu() && u.main_unit) {
      for (auto& n : nodes) {
        if (n.id == *u.main_unit) n.is_main_unit_of = u.id;
      }
    }
  }

  std::vector<GraphEdge> edges;
  for (std::size_t i = 0; i < doc.relations.size(); ++i) {
    const Relation& r = doc.relations[i];
    double coefficient = 0.0;
    try {
      coefficient = config.coefficient_for(r.rel_type);
    } catch (const ConfigError& e) {
      throw ConfigError(relation_label(i), e.what());
    }
    if (r.category == RelationCategory::nucleus_satellite) {
      edges.push_back({r.nucleus, r.satellite, r.category, r.rel_type, r.orbit, coefficient, i});
    } else {
      for (std::size_t m = 1; m < r.members.size(); ++m) {
        edges.push_back({r.members.front(), r.members[m], r.category, r.rel_type, 1, coefficient, i});
      }
    }
  }
  return RhetGraph(std::move(nodes), std::move(edges), doc.root);
}

}  // namespace detail

RhetGraph build_graph(const DocumentSpec& doc, const WeightConfig& config) {
  config.validate();
  if (auto diagnostics = validate_document(doc); !diagnostics.empty()) {
    throw InputError(std::move(diagnostics));
  }
  return detail::assemble_graph(doc, config);
}

LevelMap compute_levels(const RhetGraph& graph) {
  const std::size_t n = graph.size();
  if (n == 0) return {};
  std::vector<int> level(n, -1);
  const std::size_t start = graph.resolved_root();
  level[start] = 0;

  // Iterative DFS: (node, next outgoing edge position).
  std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    auto out = graph.outgoing(node);
    if (next == out.size()) {
      stack.pop_back();
      continue;
    }
    const std::size_t dest = graph.resolved(graph.edge_target(out[next++]));
    if (level[dest] < 0) {
      level[dest] = level[node] + 1;
      stack.emplace_back(dest, 0);
    }
  }

  LevelMap levels;
  for (std::size_t i = 0; i < n; ++i) {
    const int l = level[graph.resolved(i)];
    if (l >= 0) levels.emplace(graph.node(i).id, l);
  }
  return levels;
}

std::vector<std::vector<std::string>> detect_cycles(const RhetGraph& graph) {
  const std::size_t n = graph.size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const std::size_t s = graph.resolved(graph.edge_source(e));
    const std::size_t t = graph.resolved(graph.edge_target(e));
    succ[s].push_back(t);
  }

  // Tarjan's strongly connected components, iterative.
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  int counter = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> work{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!work.empty()) {
      auto& [v, next] = work.back();
      if (next < succ[v].size()) {
        const std::size_t w = succ[v][next++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          work.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> component;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != v);
        components.push_back(std::move(component));
      }
      const std::size_t finished = v;
      work.pop_back();
      if (!work.empty()) {
        const std::size_t parent = work.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }

  std::vector<std::vector<std::string>> cycles;
  for (const auto& component : components) {
    std::vector<bool> inside(n, false);
    for (std::size_t v : component) inside[v] = true;
    const std::size_t start = *std::min_element(component.begin(), component.end(), [&](auto a, auto b) {
      return graph.node(a).id < graph.node(b).id;
    });
    if (component.size() == 1 &&
        std::find(succ[start].begin(), succ[start].end(), start) == succ[start].end()) {
      continue;
    }
    // Shortest way back to `start` inside the component.
    std::vector<std::size_t> parent(n, n);
    std::deque<std::size_t> queue{start};
    std::size_t closing = n;
    while (!queue.empty() && closing == n) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : succ[v]) {
        if (!inside[w]) continue;
        if (w == start) {
          closing = v;
          break;
        }
        if (parent[w] == n) {
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
    std::vector<std::string> cycle;
    for (std::size_t v = closing; v != start; v = parent[v]) cycle.push_back(graph.node(v).id);
    cycle.push_back(graph.node(start).id);
    std::reverse(cycle.begin(), cycle.end());
    cycles.push_back(std::move(cycle));
  }
  std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return cycles;
}

}  // namespace rstsum
