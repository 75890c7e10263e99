#ifndef TCHECK_CLOSURE_HPP
#define TCHECK_CLOSURE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tcheck/graph.hpp"

namespace tcheck {

// strict: at most one arc crossed per step (labels strictly increase).
// non_strict: any number of arcs of one step may be chained.
enum class JourneySemantics { strict, non_strict };

// Static loop-free digraph holding a journey transitive closure.
// Immutable after construction; arcs are kept sorted by (tail, head).
class ClosureGraph {
 public:
  ClosureGraph(std::uint32_t vertex_count, std::vector<Arc> arcs);

  std::uint32_t vertex_count() const { return vertex_count_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool contains(VertexId tail, VertexId head) const;

  // Complete <=> every ordered pair of distinct vertices is an arc.
  bool is_complete() const {
    return arcs_.size() == static_cast<std::size_t>(vertex_count_) * (vertex_count_ - 1);
  }

  friend bool operator==(const ClosureGraph&, const ClosureGraph&) = default;

 private:
  // The engine emits arcs already sorted, deduplicated, loop-free and in
  // range, so its construction path skips the public ctor's normalization.
  struct Presorted {};
  ClosureGraph(Presorted, std::uint32_t vertex_count, std::vector<Arc> arcs)
      : vertex_count_(vertex_count), arcs_(std::move(arcs)) {}
  friend class PredecessorState;

  std::uint32_t vertex_count_;
  std::vector<Arc> arcs_;
};

// Streaming state of the predecessor-propagation engine. P(v) is the set
// of vertices known to reach v (always including v itself); the pending
// set buffers predecessors found during the current step so that arcs
// within one step never chain.
//
// Predecessor sets are bit rows over the n vertex indices with
// incrementally maintained cardinalities: set union is linear in row
// width and set size is an O(1) lookup.
//
// Single-writer: one stream of process_step calls; not safe for
// concurrent mutation.
class PredecessorState {
 public:
  // Starts with P(v) = {v} for all v. n = 0 raises std::invalid_argument.
  explicit PredecessorState(std::uint32_t vertex_count);

  // Consumes one edge set. For each arc (u, v) the pending set of v
  // absorbs P(u) as it was at entry to this step; pending sets are then
  // merged and cleared. Arc endpoints out of range raise
  // std::invalid_argument before any mutation; calling after finalize()
  // raises std::logic_error.
  void process_step(std::span<const Arc> arcs);

  // Closure of everything consumed so far: arcs {(u,v) : u in P(v)\{v}}.
  ClosureGraph closure() const;

  // closure(), and the state stops accepting further steps.
  ClosureGraph finalize();

  std::uint32_t vertex_count() const { return vertex_count_; }
  std::size_t steps_consumed() const { return steps_consumed_; }
  std::size_t mu_seen() const { return mu_seen_; }
  bool complete() const { return complete_; }
  bool finalized() const { return finalized_; }

  std::size_t predecessor_count(VertexId v) const;
  bool has_predecessor(VertexId v, VertexId u) const;
  std::vector<VertexId> predecessors(VertexId v) const;

  // max over v of |P(v) \ {v}|; stays within steps_consumed * mu_seen.
  std::size_t max_foreign_predecessors() const;

 private:
  std::uint64_t* row(VertexId v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  const std::uint64_t* row(VertexId v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }
  void recompute_complete();

  std::uint32_t vertex_count_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;      // n rows of `words_` words: P
  std::vector<std::uint32_t> counts_;    // |P(v)| per row
  std::vector<std::uint64_t> pending_;   // pool of per-step P+ rows
  std::vector<std::int32_t> pending_slot_;  // vertex -> pool row, -1 if none
  std::vector<VertexId> touched_;
  std::size_t steps_consumed_ = 0;
  std::size_t mu_seen_ = 0;
  bool complete_ = false;
  bool finalized_ = false;
};

struct ConnectivityReport {
  ClosureGraph closure;
  bool connected = false;
  // 1-based step at which the completeness test first passed; 0 means
  // complete at initialization (n = 1); absent when never complete.
  std::optional<std::size_t> completed_at_step;
};

// Folds process_step over E_1..E_k, stopping at the first step whose
// completeness test passes.
ConnectivityReport strict_closure(const EvolvingGraph& g);

// Static transitive closure of the single digraph (V, arcs): (u, v) is in
// the result iff a nonempty directed path u -> v exists. Breadth-first
// from each vertex that is the tail of at least one arc.
std::vector<Arc> static_closure_step(std::span<const Arc> arcs, std::uint32_t vertex_count);

// Streams each step through static_closure_step, then feeds the closed
// step to the strict engine; early termination as in strict_closure.
ConnectivityReport nonstrict_closure(const EvolvingGraph& g);

ConnectivityReport compute_closure(const EvolvingGraph& g, JourneySemantics semantics);

// (connected?, completion step) without keeping the closure around.
std::pair<bool, std::optional<std::size_t>> is_temporally_connected(const EvolvingGraph& g,
                                                                    JourneySemantics semantics);

// Adjacency test against a computed closure. u == v returns true (empty
// journey) even though the stored arc set holds no loops.
bool journey_exists(const ClosureGraph& closure, VertexId u, VertexId v);

}  // namespace tcheck

#endif  // TCHECK_CLOSURE_HPP
