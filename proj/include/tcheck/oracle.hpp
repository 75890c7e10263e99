#ifndef TCHECK_ORACLE_HPP
#define TCHECK_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tcheck/closure.hpp"
#include "tcheck/graph.hpp"

// Independent ground-truth reachability, used for testing and
// verification only. Deliberately ignores the engine's data layout and
// performance tricks.

namespace tcheck {

// Layered static digraph with one copy of V per time index 0..k.
// Node (v, t) is index t*n + v. Wait arcs (v,t) -> (v,t+1) are always
// present; step t contributes travel arcs (u,t-1) -> (v,t), and for
// non-strict semantics additionally within-layer arcs (u,t) -> (v,t).
struct TimeExpandedGraph {
  static constexpr std::size_t kDefaultNodeCap = 1'000'000;

  std::uint32_t n = 0;
  std::size_t k = 0;
  JourneySemantics semantics = JourneySemantics::strict;
  std::vector<std::vector<std::uint32_t>> adjacency;

  // Raises std::length_error when n*(k+1) exceeds node_cap; the oracle
  // is desk-scale only.
  static TimeExpandedGraph build(const EvolvingGraph& g, JourneySemantics semantics,
                                 std::size_t node_cap = kDefaultNodeCap);

  std::size_t node_count() const { return adjacency.size(); }
  std::size_t node_index(VertexId v, std::size_t t) const { return t * n + v; }

  // Vertices v != source with some (v, t) reachable from (source, 0).
  std::vector<VertexId> reachable_from(VertexId source) const;
};

// (u, v) is an arc iff some (v, t) is reachable from (u, 0): one
// breadth-first traversal per source.
ClosureGraph oracle_closure(const EvolvingGraph& g, JourneySemantics semantics,
                            std::size_t node_cap = TimeExpandedGraph::kDefaultNodeCap);

// Exhaustive search for a journey u -> v: arc sequences chained
// head-to-tail with non-decreasing step labels (strictly increasing for
// strict semantics). Journeys never need to revisit a vertex, so
// sequences longer than n-1 arcs are redundant; instances where n-1
// exceeds max_arcs are refused with std::length_error.
bool enumerate_journeys(const EvolvingGraph& g, JourneySemantics semantics, VertexId u,
                        VertexId v, std::size_t max_arcs = 8);

}  // namespace tcheck

#endif  // TCHECK_ORACLE_HPP
