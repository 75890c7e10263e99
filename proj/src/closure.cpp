#include "tcheck/closure.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstring>
#include <stdexcept>
#include <string>

namespace tcheck {

namespace {

constexpr std::size_t kWordBits = 64;

void check_endpoints(std::span<const Arc> arcs, std::uint32_t n) {
  for (const Arc& a : arcs) {
    if (a.tail >= n || a.head >= n) {
      throw std::invalid_argument("arc endpoint out of range: " + std::to_string(a.tail) +
                                  " " + std::to_string(a.head));
    }
  }
}

}  // namespace

ClosureGraph::ClosureGraph(std::uint32_t vertex_count, std::vector<Arc> arcs)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)) {
  check_endpoints(arcs_, vertex_count_);
  for (const Arc& a : arcs_) {
    if (a.tail == a.head) {
      throw std::invalid_argument("closure graph cannot hold self-loops");
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

bool ClosureGraph::contains(VertexId tail, VertexId head) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{tail, head});
}

PredecessorState::PredecessorState(std::uint32_t vertex_count)
    : vertex_count_(vertex_count),
      words_((static_cast<std::size_t>(vertex_count) + kWordBits - 1) / kWordBits) {
  if (vertex_count == 0) {
    throw std::invalid_argument("vertex count must be positive");
  }
  bits_.assign(static_cast<std::size_t>(vertex_count_) * words_, 0);
  counts_.assign(vertex_count_, 1);
  pending_slot_.assign(vertex_count_, -1);
  for (VertexId v = 0; v < vertex_count_; ++v) {
    row(v)[v / kWordBits] = std::uint64_t{1} << (v % kWordBits);
  }
  complete_ = (vertex_count_ == 1);
}

void PredecessorState::process_step(std::span<const Arc> arcs) {
  if (finalized_) {
    throw std::logic_error("process_step called on a finalized state");
  }
  check_endpoints(arcs, vertex_count_);

  // Pending rows are pooled: one row per distinct head in this step.
  for (const Arc& a : arcs) {
    std::int32_t slot = pending_slot_[a.head];
    if (slot < 0) {
      slot = static_cast<std::int32_t>(touched_.size());
      pending_slot_[a.head] = slot;
      touched_.push_back(a.head);
      if (pending_.size() < (touched_.size()) * words_) {
        pending_.resize(touched_.size() * words_, 0);
      }
    }
    std::uint64_t* dst = pending_.data() + static_cast<std::size_t>(slot) * words_;
    const std::uint64_t* src = row(a.tail);
    for (std::size_t w = 0; w < words_; ++w) {
      dst[w] |= src[w];
    }
  }

  for (const VertexId v : touched_) {
    std::uint64_t* dst = row(v);
    std::uint64_t* src = pending_.data() +
                         static_cast<std::size_t>(pending_slot_[v]) * words_;
    std::uint32_t gained = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      const std::uint64_t fresh = src[w] & ~dst[w];
      gained += static_cast<std::uint32_t>(std::popcount(fresh));
      dst[w] |= src[w];
      src[w] = 0;
    }
    counts_[v] += gained;
    pending_slot_[v] = -1;
  }
  touched_.clear();

  ++steps_consumed_;
  mu_seen_ = std::max(mu_seen_, arcs.size());
  recompute_complete();
  assert(max_foreign_predecessors() <= steps_consumed_ * mu_seen_);
}

void PredecessorState::recompute_complete() {
  for (VertexId v = 0; v < vertex_count_; ++v) {
    if (counts_[v] < vertex_count_) {
      complete_ = false;
      return;
    }
  }
  complete_ = true;
}

ClosureGraph PredecessorState::closure() const {
  std::vector<Arc> arcs;
  if (complete_) {
    arcs.reserve(static_cast<std::size_t>(vertex_count_) * (vertex_count_ - 1));
    for (VertexId u = 0; u < vertex_count_; ++u) {
      for (VertexId v = 0; v < vertex_count_; ++v) {
        if (u != v) arcs.push_back(Arc{u, v});
      }
    }
    return ClosureGraph(ClosureGraph::Presorted{}, vertex_count_, std::move(arcs));
  }

  // Rows give the arcs head-major; a counting sort by tail turns that into
  // (tail, head) order without a comparison sort, since heads already come
  // out ascending within each tail.
  std::size_t total = 0;
  for (VertexId v = 0; v < vertex_count_; ++v) total += counts_[v] - 1;
  std::vector<Arc> by_head;
  by_head.reserve(total);
  std::vector<std::uint32_t> tail_offset(static_cast<std::size_t>(vertex_count_) + 1, 0);
  for (VertexId v = 0; v < vertex_count_; ++v) {
    if (counts_[v] == 1) continue;  // row holds only v itself
    const std::uint64_t* r = row(v);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = r[w];
      while (word != 0) {
        const auto bit = static_cast<std::uint32_t>(std::countr_zero(word));
        word &= word - 1;
        const VertexId u = static_cast<VertexId>(w * kWordBits + bit);
        if (u != v) {
          by_head.push_back(Arc{u, v});
          ++tail_offset[u + 1];
        }
      }
    }
  }
  for (VertexId u = 0; u < vertex_count_; ++u) tail_offset[u + 1] += tail_offset[u];
  arcs.resize(by_head.size());
  for (const Arc& a : by_head) arcs[tail_offset[a.tail]++] = a;
  return ClosureGraph(ClosureGraph::Presorted{}, vertex_count_, std::move(arcs));
}

ClosureGraph PredecessorState::finalize() {
  finalized_ = true;
  return closure();
}

std::size_t PredecessorState::predecessor_count(VertexId v) const {
  if (v >= vertex_count_) throw std::invalid_argument("vertex out of range");
  return counts_[v];
}

bool PredecessorState::has_predecessor(VertexId v, VertexId u) const {
  if (v >= vertex_count_ || u >= vertex_count_) {
    throw std::invalid_argument("vertex out of range");
  }
  return (row(v)[u / kWordBits] >> (u % kWordBits)) & 1;
}

std::vector<VertexId> PredecessorState::predecessors(VertexId v) const {
  if (v >= vertex_count_) throw std::invalid_argument("vertex out of range");
  std::vector<VertexId> out;
  out.reserve(counts_[v]);
  const std::uint64_t* r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t word = r[w];
    while (word != 0) {
      const auto bit = static_cast<std::uint32_t>(std::countr_zero(word));
      word &= word - 1;
      out.push_back(static_cast<VertexId>(w * kWordBits + bit));
    }
  }
  return out;
}

std::size_t PredecessorState::max_foreign_predecessors() const {
  std::size_t best = 0;
  for (VertexId v = 0; v < vertex_count_; ++v) {
    best = std::max(best, static_cast<std::size_t>(counts_[v]) - 1);
  }
  return best;
}

namespace {

ConnectivityReport run_closure(const EvolvingGraph& g, JourneySemantics semantics) {
  PredecessorState state(g.vertex_count());
  std::optional<std::size_t> completed;
  if (state.complete()) {
    completed = 0;
  } else {
    for (std::size_t i = 0; i < g.step_count(); ++i) {
      if (semantics == JourneySemantics::strict) {
        state.process_step(g.step(i));
      } else {
        const std::vector<Arc> closed = static_closure_step(g.step(i), g.vertex_count());
        state.process_step(closed);
      }
      if (state.complete()) {
        completed = i + 1;
        break;
      }
    }
  }
  ConnectivityReport report{state.finalize(), state.complete(), completed};
  return report;
}

}  // namespace

ConnectivityReport strict_closure(const EvolvingGraph& g) {
  return run_closure(g, JourneySemantics::strict);
}

ConnectivityReport nonstrict_closure(const EvolvingGraph& g) {
  return run_closure(g, JourneySemantics::non_strict);
}

ConnectivityReport compute_closure(const EvolvingGraph& g, JourneySemantics semantics) {
  return run_closure(g, semantics);
}

std::vector<Arc> static_closure_step(std::span<const Arc> arcs, std::uint32_t vertex_count) {
  check_endpoints(arcs, vertex_count);

  // CSR adjacency over the arcs of this single step.
  std::vector<std::uint32_t> degree(vertex_count + 1, 0);
  for (const Arc& a : arcs) ++degree[a.tail + 1];
  for (std::uint32_t v = 0; v < vertex_count; ++v) degree[v + 1] += degree[v];
  std::vector<VertexId> heads(arcs.size());
  {
    std::vector<std::uint32_t> fill(degree.begin(), degree.end() - 1);
    for (const Arc& a : arcs) heads[fill[a.tail]++] = a.head;
  }

  std::vector<VertexId> sources;
  for (std::uint32_t v = 0; v < vertex_count; ++v) {
    if (degree[v + 1] > degree[v]) sources.push_back(v);
  }

  // Version-stamped visited marks so each BFS costs O(|arcs|), not O(n).
  std::vector<std::uint32_t> stamp(vertex_count, 0);
  std::uint32_t round = 0;
  std::vector<VertexId> queue;
  std::vector<Arc> out;

  for (const VertexId src : sources) {
    ++round;
    stamp[src] = round;
    queue.clear();
    queue.push_back(src);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const VertexId v = queue[qi];
      for (std::uint32_t e = degree[v]; e < degree[v + 1]; ++e) {
        const VertexId w = heads[e];
        if (stamp[w] != round) {
          stamp[w] = round;
          queue.push_back(w);
          out.push_back(Arc{src, w});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<bool, std::optional<std::size_t>> is_temporally_connected(const EvolvingGraph& g,
                                                                    JourneySemantics semantics) {
  const ConnectivityReport report = compute_closure(g, semantics);
  return {report.connected, report.completed_at_step};
}

bool journey_exists(const ClosureGraph& closure, VertexId u, VertexId v) {
  if (u >= closure.vertex_count() || v >= closure.vertex_count()) {
    throw std::invalid_argument("vertex out of range");
  }
  if (u == v) return true;
  return closure.contains(u, v);
}

}  // namespace tcheck
