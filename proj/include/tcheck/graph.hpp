#ifndef TCHECK_GRAPH_HPP
#define TCHECK_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tcheck {

// Dense zero-based vertex index in [0, n).
using VertexId = std::uint32_t;

// Directed edge. Self-loops are dropped when a graph is built.
struct Arc {
  VertexId tail = 0;
  VertexId head = 0;

  friend constexpr bool operator==(const Arc&, const Arc&) = default;
  // (tail, head) lexicographic, folded into one 64-bit key.
  friend constexpr bool operator<(const Arc& a, const Arc& b) {
    return (std::uint64_t{a.tail} << 32 | a.head) < (std::uint64_t{b.tail} << 32 | b.head);
  }
};

// A fixed vertex set plus an ordered sequence of directed edge sets
// E_1..E_k, one per time step. Immutable after construction and safe to
// share across concurrent readers.
//
// Construction normalizes each step: self-loops are dropped (counted),
// duplicate arcs within one step are removed, the caller's arc order is
// otherwise preserved. Endpoints outside [0, n) raise std::invalid_argument.
class EvolvingGraph {
 public:
  EvolvingGraph(std::uint32_t vertex_count, std::vector<std::vector<Arc>> steps);

  std::uint32_t vertex_count() const { return vertex_count_; }
  std::size_t step_count() const { return steps_.size(); }

  // Arcs of step i (0-based index; step i holds E_{i+1}).
  std::span<const Arc> step(std::size_t i) const { return steps_[i]; }
  const std::vector<std::vector<Arc>>& steps() const { return steps_; }

  std::size_t dropped_self_loops() const { return dropped_self_loops_; }

  // Copy of the first t steps (t <= step_count()).
  EvolvingGraph prefix(std::size_t t) const;

  // Structural equality: same n, same k, same arc set per step
  // (insertion order within a step is irrelevant).
  bool operator==(const EvolvingGraph& other) const;

 private:
  friend class TegReader;  // folds loops it dropped while streaming into the count

  std::uint32_t vertex_count_;
  std::vector<std::vector<Arc>> steps_;
  std::size_t dropped_self_loops_ = 0;
};

// Density metrics of an evolving graph: mu is the largest single-step
// edge count, m the size of the union of all edge sets.
struct DensityProfile {
  std::uint32_t n = 0;
  std::size_t k = 0;
  std::size_t mu = 0;
  std::size_t m = 0;

  friend bool operator==(const DensityProfile&, const DensityProfile&) = default;
};

DensityProfile density_profile(const EvolvingGraph& g);

}  // namespace tcheck

#endif  // TCHECK_GRAPH_HPP
