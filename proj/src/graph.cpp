#include "tcheck/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace tcheck {

EvolvingGraph::EvolvingGraph(std::uint32_t vertex_count,
                             std::vector<std::vector<Arc>> steps)
    : vertex_count_(vertex_count), steps_(std::move(steps)) {
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    auto& arcs = steps_[i];
    seen.clear();
    std::size_t out = 0;
    for (const Arc& a : arcs) {
      if (a.tail >= vertex_count_ || a.head >= vertex_count_) {
        throw std::invalid_argument(
            "arc endpoint out of range in step " + std::to_string(i + 1) +
            ": " + std::to_string(a.tail) + " " + std::to_string(a.head));
      }
      if (a.tail == a.head) {
        ++dropped_self_loops_;
        continue;
      }
      const std::uint64_t key =
          static_cast<std::uint64_t>(a.tail) * vertex_count_ + a.head;
      if (seen.insert(key).second) {
        arcs[out++] = a;
      }
    }
    arcs.resize(out);
  }
}

EvolvingGraph EvolvingGraph::prefix(std::size_t t) const {
  if (t > steps_.size()) {
    throw std::invalid_argument("prefix length exceeds step count");
  }
  std::vector<std::vector<Arc>> head(steps_.begin(),
                                     steps_.begin() + static_cast<std::ptrdiff_t>(t));
  return EvolvingGraph(vertex_count_, std::move(head));
}

bool EvolvingGraph::operator==(const EvolvingGraph& other) const {
  if (vertex_count_ != other.vertex_count_ || steps_.size() != other.steps_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    std::vector<Arc> a = steps_[i];
    std::vector<Arc> b = other.steps_[i];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  return true;
}

DensityProfile density_profile(const EvolvingGraph& g) {
  DensityProfile p;
  p.n = g.vertex_count();
  p.k = g.step_count();
  std::unordered_set<std::uint64_t> cumulative;
  for (std::size_t i = 0; i < g.step_count(); ++i) {
    const auto arcs = g.step(i);
    p.mu = std::max(p.mu, arcs.size());
    for (const Arc& a : arcs) {
      cumulative.insert(static_cast<std::uint64_t>(a.tail) * g.vertex_count() + a.head);
    }
  }
  p.m = cumulative.size();
  return p;
}

}  // namespace tcheck
