#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "tcheck/closure.hpp"
#include "tcheck/graph.hpp"
#include "tcheck/workload.hpp"

using tcheck::Arc;
using tcheck::ClosureGraph;
using tcheck::ConnectivityReport;
using tcheck::EvolvingGraph;
using tcheck::JourneySemantics;
using tcheck::PredecessorState;
using tcheck::VertexId;

namespace {

std::vector<VertexId> preds(const PredecessorState& s, VertexId v) {
  return s.predecessors(v);
}

// Reference closure of one static digraph: boolean reachability matrix
// by repeated squaring, a different construction from the engine's BFS.
std::vector<Arc> matrix_closure(const std::vector<Arc>& arcs, std::uint32_t n) {
  std::vector<char> reach(static_cast<std::size_t>(n) * n, 0);
  for (const Arc& a : arcs) reach[static_cast<std::size_t>(a.tail) * n + a.head] = 1;
  for (std::uint32_t rounds = 1; rounds < n; rounds *= 2) {
    std::vector<char> next = reach;
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        if (next[static_cast<std::size_t>(i) * n + j]) continue;
        for (std::uint32_t l = 0; l < n; ++l) {
          if (reach[static_cast<std::size_t>(i) * n + l] &&
              reach[static_cast<std::size_t>(l) * n + j]) {
            next[static_cast<std::size_t>(i) * n + j] = 1;
            break;
          }
        }
      }
    }
    reach.swap(next);
  }
  std::vector<Arc> out;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i != j && reach[static_cast<std::size_t>(i) * n + j]) out.push_back(Arc{i, j});
    }
  }
  return out;
}

tcheck::GeneratorSpec bernoulli_spec(std::uint32_t n, std::size_t k, double p,
                                     std::uint64_t seed) {
  tcheck::GeneratorSpec spec;
  spec.n = n;
  spec.k = k;
  spec.model = tcheck::GeneratorModel::per_step_bernoulli;
  spec.p = p;
  spec.seed = seed;
  return spec;
}

}  // namespace

TEST_SUITE("closure") {

TEST_CASE("fresh state starts from singleton predecessor sets") {
  PredecessorState s(3);
  CHECK(s.vertex_count() == 3);
  CHECK(s.steps_consumed() == 0);
  CHECK_FALSE(s.complete());
  for (VertexId v = 0; v < 3; ++v) {
    CHECK(preds(s, v) == std::vector<VertexId>{v});
    CHECK(s.predecessor_count(v) == 1);
  }
}

TEST_CASE("single vertex is complete at initialization") {
  PredecessorState s(1);
  CHECK(s.complete());
}

TEST_CASE("zero vertices are rejected") {
  CHECK_THROWS_AS(PredecessorState(0), std::invalid_argument);
}

TEST_CASE("arcs within one step never chain") {
  PredecessorState s(3);
  const std::vector<Arc> step{{0, 1}, {1, 2}};
  s.process_step(step);
  CHECK(preds(s, 0) == std::vector<VertexId>{0});
  CHECK(preds(s, 1) == std::vector<VertexId>{0, 1});
  CHECK(preds(s, 2) == std::vector<VertexId>{1, 2});
  CHECK(s.steps_consumed() == 1);
  CHECK(s.mu_seen() == 2);

  SUBCASE("a later repeat of the arc completes the chain") {
    const std::vector<Arc> again{{1, 2}};
    s.process_step(again);
    CHECK(preds(s, 2) == std::vector<VertexId>{0, 1, 2});
  }
}

TEST_CASE("arc order inside a step does not matter") {
  PredecessorState a(4), b(4);
  const std::vector<Arc> fwd{{0, 1}, {1, 2}, {2, 3}};
  std::vector<Arc> rev(fwd.rbegin(), fwd.rend());
  a.process_step(fwd);
  b.process_step(rev);
  for (VertexId v = 0; v < 4; ++v) CHECK(preds(a, v) == preds(b, v));
}

TEST_CASE("steps in the wrong time order give no journey") {
  PredecessorState s(3);
  const std::vector<Arc> first{{1, 2}};
  const std::vector<Arc> second{{0, 1}};
  s.process_step(first);
  s.process_step(second);
  CHECK(preds(s, 2) == std::vector<VertexId>{1, 2});
}

TEST_CASE("out-of-range endpoints leave the state untouched") {
  PredecessorState s(2);
  const std::vector<Arc> bad{{0, 1}, {0, 5}};
  CHECK_THROWS_AS(s.process_step(bad), std::invalid_argument);
  CHECK(s.steps_consumed() == 0);
  CHECK(preds(s, 1) == std::vector<VertexId>{1});
}

TEST_CASE("processing after finalize is an error") {
  PredecessorState s(2);
  s.finalize();
  const std::vector<Arc> step{{0, 1}};
  CHECK_THROWS_AS(s.process_step(step), std::logic_error);
}

TEST_CASE("finalize unpacks predecessor sets into arcs") {
  PredecessorState s(3);
  const std::vector<Arc> s1{{0, 1}, {0, 2}};
  const std::vector<Arc> s2{{1, 2}};
  s.process_step(s1);
  s.process_step(s2);
  CHECK(preds(s, 2) == std::vector<VertexId>{0, 1, 2});
  const ClosureGraph c = s.finalize();
  CHECK(c.arcs() == std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(s.finalized());
}

TEST_CASE("finalize of a fresh state is empty") {
  PredecessorState s(3);
  CHECK(s.finalize().arcs().empty());
}

TEST_CASE("complete two-vertex state yields both arcs") {
  PredecessorState s(2);
  const std::vector<Arc> s1{{0, 1}};
  const std::vector<Arc> s2{{1, 0}};
  s.process_step(s1);
  s.process_step(s2);
  CHECK(s.complete());
  CHECK(s.finalize().arcs() == std::vector<Arc>{{0, 1}, {1, 0}});
}

TEST_CASE("strict closure of the two-step chain") {
  const ConnectivityReport r = strict_closure(EvolvingGraph(3, {{{0, 1}}, {{1, 2}}}));
  CHECK(r.closure.arcs() == std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}});
  CHECK_FALSE(r.connected);
  CHECK_FALSE(r.completed_at_step.has_value());
}

TEST_CASE("strict closure stops at the completion step") {
  const ConnectivityReport r =
      strict_closure(EvolvingGraph(2, {{{0, 1}}, {{1, 0}}, {}, {}}));
  CHECK(r.connected);
  REQUIRE(r.completed_at_step.has_value());
  CHECK(*r.completed_at_step == 2);
  CHECK(r.closure.is_complete());
}

TEST_CASE("static closure of a two-arc path") {
  const std::vector<Arc> arcs{{0, 1}, {1, 2}};
  CHECK(tcheck::static_closure_step(arcs, 3) ==
        std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("static closure of a cycle excludes loops") {
  const std::vector<Arc> arcs{{0, 1}, {1, 0}};
  CHECK(tcheck::static_closure_step(arcs, 2) == std::vector<Arc>{{0, 1}, {1, 0}});
}

TEST_CASE("static closure matches the matrix oracle") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 60; ++round) {
    const auto n = static_cast<std::uint32_t>(2 + rng() % 11);
    std::vector<Arc> arcs;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        if (u != v && rng() % 5 == 0) arcs.push_back(Arc{u, v});
      }
    }
    CHECK(tcheck::static_closure_step(arcs, n) == matrix_closure(arcs, n));
  }
}

TEST_CASE("non-strict closure crosses many arcs in one step") {
  const ConnectivityReport r = nonstrict_closure(EvolvingGraph(3, {{{0, 1}, {1, 2}}}));
  CHECK(r.closure.arcs() == std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}});
  const ConnectivityReport strict = strict_closure(EvolvingGraph(3, {{{0, 1}, {1, 2}}}));
  CHECK_FALSE(strict.closure.contains(0, 2));
}

TEST_CASE("non-strict reaches across a late two-arc step") {
  const EvolvingGraph g(4, {{{0, 1}}, {{1, 2}, {2, 3}}});
  const ConnectivityReport ns = nonstrict_closure(g);
  CHECK(ns.closure.contains(0, 2));
  CHECK(ns.closure.contains(0, 3));
  const ConnectivityReport st = strict_closure(g);
  CHECK(st.closure.contains(0, 2));
  CHECK_FALSE(st.closure.contains(0, 3));
}

TEST_CASE("single-step graphs collapse to the static closure") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 20; ++round) {
    const auto n = static_cast<std::uint32_t>(2 + rng() % 7);
    std::vector<Arc> arcs;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        if (u != v && rng() % 4 == 0) arcs.push_back(Arc{u, v});
      }
    }
    const EvolvingGraph g(n, {arcs});
    CHECK(nonstrict_closure(g).closure.arcs() == tcheck::static_closure_step(arcs, n));
    std::vector<Arc> sorted = arcs;
    std::sort(sorted.begin(), sorted.end());
    CHECK(strict_closure(g).closure.arcs() == sorted);
  }
}

TEST_CASE("connectivity verdicts") {
  const auto [v0, s0] = is_temporally_connected(EvolvingGraph(1, {}), JourneySemantics::strict);
  CHECK(v0);
  REQUIRE(s0.has_value());
  CHECK(*s0 == 0);

  const auto [v1, s1] =
      is_temporally_connected(EvolvingGraph(2, {{{0, 1}}}), JourneySemantics::strict);
  CHECK_FALSE(v1);
  CHECK_FALSE(s1.has_value());
}

TEST_CASE("journey_exists follows arcs, direction and the reflexive rule") {
  const ClosureGraph c(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(journey_exists(c, 0, 2));
  CHECK_FALSE(journey_exists(c, 2, 0));
  CHECK(journey_exists(c, 1, 1));
  CHECK_THROWS_AS(journey_exists(c, 0, 3), std::invalid_argument);
}

TEST_CASE("closure graphs reject self-loops and out-of-range arcs") {
  CHECK_THROWS_AS(ClosureGraph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(ClosureGraph(2, {{0, 2}}), std::invalid_argument);
  CHECK(ClosureGraph(2, {{0, 1}, {1, 0}}).is_complete());
  CHECK_FALSE(ClosureGraph(2, {{0, 1}}).is_complete());
}

TEST_CASE("strict arcs are contained in non-strict arcs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const EvolvingGraph g = tcheck::generate(
        bernoulli_spec(static_cast<std::uint32_t>(3 + seed % 8), 1 + seed % 5, 0.2, seed));
    const auto st = strict_closure(g).closure.arcs();
    const auto ns = nonstrict_closure(g).closure.arcs();
    CHECK(std::includes(ns.begin(), ns.end(), st.begin(), st.end()));
  }
}

TEST_CASE("prefix closures are nested") {
  for (std::uint64_t seed = 50; seed < 65; ++seed) {
    const EvolvingGraph g = tcheck::generate(bernoulli_spec(8, 6, 0.15, seed));
    PredecessorState s(g.vertex_count());
    std::vector<Arc> previous = s.closure().arcs();
    for (std::size_t i = 0; i < g.step_count(); ++i) {
      s.process_step(g.step(i));
      const std::vector<Arc> current = s.closure().arcs();
      CHECK(std::includes(current.begin(), current.end(), previous.begin(), previous.end()));
      previous = current;
    }
  }
}

TEST_CASE("foreign predecessor counts stay within the step-density bound") {
  for (std::uint64_t seed = 70; seed < 85; ++seed) {
    const EvolvingGraph g = tcheck::generate(bernoulli_spec(10, 8, 0.2, seed));
    PredecessorState s(g.vertex_count());
    for (std::size_t i = 0; i < g.step_count(); ++i) {
      s.process_step(g.step(i));
      CHECK(s.max_foreign_predecessors() <= s.steps_consumed() * s.mu_seen());
    }
  }
}

TEST_CASE("compute_closure dispatches on semantics") {
  const EvolvingGraph g(3, {{{0, 1}, {1, 2}}});
  CHECK(compute_closure(g, JourneySemantics::strict).closure ==
        strict_closure(g).closure);
  CHECK(compute_closure(g, JourneySemantics::non_strict).closure ==
        nonstrict_closure(g).closure);
}

}  // TEST_SUITE
