#include "tcheck/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tcheck {

TimeExpandedGraph TimeExpandedGraph::build(const EvolvingGraph& g,
                                           JourneySemantics semantics,
                                           std::size_t node_cap) {
  const std::uint32_t n = g.vertex_count();
  const std::size_t k = g.step_count();
  const std::size_t nodes = static_cast<std::size_t>(n) * (k + 1);
  if (nodes > node_cap) {
    throw std::length_error("time-expanded graph would have " + std::to_string(nodes) +
                            " nodes, cap is " + std::to_string(node_cap));
  }

  TimeExpandedGraph teg;
  teg.n = n;
  teg.k = k;
  teg.semantics = semantics;
  teg.adjacency.resize(nodes);

  for (std::size_t t = 0; t < k; ++t) {
    for (VertexId v = 0; v < n; ++v) {
      teg.adjacency[teg.node_index(v, t)].push_back(
          static_cast<std::uint32_t>(teg.node_index(v, t + 1)));
    }
  }
  for (std::size_t t = 1; t <= k; ++t) {
    for (const Arc& a : g.step(t - 1)) {
      teg.adjacency[teg.node_index(a.tail, t - 1)].push_back(
          static_cast<std::uint32_t>(teg.node_index(a.head, t)));
      if (semantics == JourneySemantics::non_strict) {
        teg.adjacency[teg.node_index(a.tail, t)].push_back(
            static_cast<std::uint32_t>(teg.node_index(a.head, t)));
      }
    }
  }
  return teg;
}

std::vector<VertexId> TimeExpandedGraph::reachable_from(VertexId source) const {
  std::vector<char> visited(node_count(), 0);
  std::vector<char> vertex_hit(n, 0);
  std::vector<std::uint32_t> queue;
  const auto start = static_cast<std::uint32_t>(node_index(source, 0));
  visited[start] = 1;
  vertex_hit[source] = 1;
  queue.push_back(start);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (const std::uint32_t next : adjacency[queue[qi]]) {
      if (!visited[next]) {
        visited[next] = 1;
        vertex_hit[next % n] = 1;
        queue.push_back(next);
      }
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (v != source && vertex_hit[v]) out.push_back(v);
  }
  return out;
}

ClosureGraph oracle_closure(const EvolvingGraph& g, JourneySemantics semantics,
                            std::size_t node_cap) {
  const TimeExpandedGraph teg = TimeExpandedGraph::build(g, semantics, node_cap);
  std::vector<Arc> arcs;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (const VertexId v : teg.reachable_from(u)) {
      arcs.push_back(Arc{u, v});
    }
  }
  return ClosureGraph(g.vertex_count(), std::move(arcs));
}

namespace {

struct JourneySearch {
  const EvolvingGraph& g;
  bool strict;
  VertexId target;
  std::size_t max_arcs;
  // occurrence[u*n+v] = sorted steps (1-based) at which arc (u,v) exists
  std::vector<std::vector<std::size_t>> occurrences;
  std::vector<std::vector<VertexId>> out_neighbors;
  std::vector<char> on_path;

  JourneySearch(const EvolvingGraph& graph, JourneySemantics semantics, VertexId v,
                std::size_t cap)
      : g(graph),
        strict(semantics == JourneySemantics::strict),
        target(v),
        max_arcs(cap),
        occurrences(static_cast<std::size_t>(g.vertex_count()) * g.vertex_count()),
        out_neighbors(g.vertex_count()),
        on_path(g.vertex_count(), 0) {
    for (std::size_t t = 1; t <= g.step_count(); ++t) {
      for (const Arc& a : g.step(t - 1)) {
        auto& occ = occurrences[static_cast<std::size_t>(a.tail) * g.vertex_count() + a.head];
        if (occ.empty()) out_neighbors[a.tail].push_back(a.head);
        occ.push_back(t);
      }
    }
    for (auto& occ : occurrences) std::sort(occ.begin(), occ.end());
    for (auto& nbrs : out_neighbors) std::sort(nbrs.begin(), nbrs.end());
  }

  // Earliest step the arc (from, to) can be crossed with label >= bound
  // (> bound for strict journeys), or 0 if none.
  std::size_t earliest(VertexId from, VertexId to, std::size_t last_label) const {
    const auto& occ = occurrences[static_cast<std::size_t>(from) * g.vertex_count() + to];
    const std::size_t bound = strict ? last_label + 1 : last_label;
    const auto it = std::lower_bound(occ.begin(), occ.end(), bound);
    return it == occ.end() ? 0 : *it;
  }

  // Depth-first over simple arc sequences. Taking each chosen arc at its
  // earliest feasible label never rules out a continuation, so labels
  // beyond that are not branched on.
  bool dfs(VertexId at, std::size_t last_label, std::size_t used) {
    if (used >= max_arcs) return false;
    for (const VertexId next : out_neighbors[at]) {
      if (on_path[next]) continue;
      const std::size_t label = earliest(at, next, last_label);
      if (label == 0) continue;
      if (next == target) return true;
      on_path[next] = 1;
      if (dfs(next, label, used + 1)) return true;
      on_path[next] = 0;
    }
    return false;
  }
};

}  // namespace

bool enumerate_journeys(const EvolvingGraph& g, JourneySemantics semantics, VertexId u,
                        VertexId v, std::size_t max_arcs) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) {
    throw std::invalid_argument("vertex out of range");
  }
  if (static_cast<std::size_t>(g.vertex_count()) - 1 > max_arcs) {
    throw std::length_error("instance may need journeys of more than " +
                            std::to_string(max_arcs) + " arcs; raise the cap");
  }
  JourneySearch search(g, semantics, v, max_arcs);
  search.on_path[u] = 1;
  // Label 0 admits any first step: non-strict needs >= 1 anyway, strict > 0.
  const std::size_t start_label = semantics == JourneySemantics::strict ? 0 : 1;
  return search.dfs(u, start_label, 0);
}

}  // namespace tcheck
