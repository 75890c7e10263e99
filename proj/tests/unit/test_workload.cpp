#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "tcheck/graph.hpp"
#include "tcheck/workload.hpp"

using tcheck::Arc;
using tcheck::BenchRecord;
using tcheck::EvolvingGraph;
using tcheck::GeneratorModel;
using tcheck::GeneratorSpec;
using tcheck::JourneySemantics;

namespace {

GeneratorSpec fixed_mu_spec(std::uint32_t n, std::size_t k, std::size_t mu,
                            std::uint64_t seed) {
  GeneratorSpec spec;
  spec.n = n;
  spec.k = k;
  spec.model = GeneratorModel::fixed_mu;
  spec.mu = mu;
  spec.seed = seed;
  return spec;
}

BenchRecord synthetic_record(std::size_t k, std::int64_t ns) {
  BenchRecord r;
  r.n = 100;
  r.k = k;
  r.mu = 8;
  r.m = 64;
  r.wall_time = std::chrono::nanoseconds(ns);
  return r;
}

}  // namespace

TEST_SUITE("workload") {

TEST_CASE("fixed_mu with mu = 0 yields empty steps") {
  const EvolvingGraph g = tcheck::generate(fixed_mu_spec(5, 4, 0, 1));
  CHECK(g.step_count() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(g.step(i).empty());
}

TEST_CASE("bernoulli with p = 1 saturates every step") {
  GeneratorSpec spec;
  spec.n = 3;
  spec.k = 1;
  spec.model = GeneratorModel::per_step_bernoulli;
  spec.p = 1.0;
  spec.seed = 9;
  const EvolvingGraph g = tcheck::generate(spec);
  CHECK(g.step(0).size() == 6);
}

TEST_CASE("fixed_mu hits the requested instant density exactly") {
  const EvolvingGraph g = tcheck::generate(fixed_mu_spec(50, 20, 4, 77));
  const tcheck::DensityProfile d = density_profile(g);
  CHECK(d.mu == 4);
  CHECK(d.m >= 4);
  for (std::size_t i = 0; i < g.step_count(); ++i) {
    CHECK(g.step(i).size() == 4);
    std::set<Arc> distinct(g.step(i).begin(), g.step(i).end());
    CHECK(distinct.size() == 4);
  }
}

TEST_CASE("generation is deterministic in the seed") {
  const GeneratorSpec spec = fixed_mu_spec(20, 10, 6, 1234);
  CHECK(tcheck::generate(spec) == tcheck::generate(spec));

  GeneratorSpec other = spec;
  other.seed = 1235;
  CHECK(tcheck::generate(spec) != tcheck::generate(other));

  GeneratorSpec bern;
  bern.n = 15;
  bern.k = 6;
  bern.model = GeneratorModel::per_step_bernoulli;
  bern.p = 0.2;
  bern.seed = 42;
  CHECK(tcheck::generate(bern) == tcheck::generate(bern));
}

TEST_CASE("invalid generator fields are rejected") {
  GeneratorSpec spec;
  spec.n = 0;
  CHECK_THROWS_AS(tcheck::generate(spec), std::invalid_argument);

  spec = fixed_mu_spec(3, 1, 7, 0);  // n(n-1) = 6
  CHECK_THROWS_AS(tcheck::generate(spec), std::invalid_argument);

  spec.model = GeneratorModel::per_step_bernoulli;
  spec.n = 3;
  spec.p = -0.1;
  CHECK_THROWS_AS(tcheck::generate(spec), std::invalid_argument);
  spec.p = 1.5;
  CHECK_THROWS_AS(tcheck::generate(spec), std::invalid_argument);
}

TEST_CASE("bench keeps spec order and density bookkeeping") {
  const std::vector<GeneratorSpec> specs{fixed_mu_spec(500, 50, 8, 5),
                                         fixed_mu_spec(500, 100, 8, 6)};
  const auto records = tcheck::bench_grid(specs, JourneySemantics::strict, 3);
  REQUIRE(records.size() == 2);
  CHECK(records[0].n == 500);
  CHECK(records[1].n == 500);
  CHECK(records[0].mu == 8);
  CHECK(records[1].mu == 8);
  CHECK(records[0].k == 50);
  CHECK(records[1].k == 100);
  CHECK(records[0].wall_time.count() > 0);
}

TEST_CASE("bench of an empty grid is empty") {
  CHECK(tcheck::bench_grid({}, JourneySemantics::strict, 3).empty());
}

TEST_CASE("bench rejects zero repetitions") {
  const std::vector<GeneratorSpec> specs{fixed_mu_spec(5, 2, 1, 0)};
  CHECK_THROWS_AS(tcheck::bench_grid(specs, JourneySemantics::strict, 0),
                  std::invalid_argument);
}

TEST_CASE("bench reruns reproduce everything but the wall times") {
  const std::vector<GeneratorSpec> specs{fixed_mu_spec(30, 12, 3, 9),
                                         fixed_mu_spec(12, 40, 10, 10)};
  const auto a = tcheck::bench_grid(specs, JourneySemantics::non_strict, 2);
  const auto b = tcheck::bench_grid(specs, JourneySemantics::non_strict, 2);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].n == b[i].n);
    CHECK(a[i].k == b[i].k);
    CHECK(a[i].mu == b[i].mu);
    CHECK(a[i].m == b[i].m);
    CHECK(a[i].connected == b[i].connected);
    CHECK(a[i].completed_at_step == b[i].completed_at_step);
  }
}

TEST_CASE("bench CSV layout") {
  BenchRecord r;
  r.n = 10;
  r.k = 3;
  r.mu = 2;
  r.m = 5;
  r.semantics = JourneySemantics::strict;
  r.connected = false;
  r.wall_time = std::chrono::nanoseconds(1500);
  BenchRecord c = r;
  c.semantics = JourneySemantics::non_strict;
  c.connected = true;
  c.completed_at_step = 2;
  const std::vector<BenchRecord> records{r, c};
  CHECK(tcheck::bench_csv(records) ==
        "n,k,mu,m,semantics,connected,completed_at_step,wall_time_ns\n"
        "10,3,2,5,strict,false,-,1500\n"
        "10,3,2,5,non_strict,true,2,1500\n");
}

TEST_CASE("proportional synthetic times fit slope one") {
  std::vector<BenchRecord> records;
  for (const std::size_t k : {64, 128, 256, 512}) {
    records.push_back(synthetic_record(k, static_cast<std::int64_t>(k) * 1000));
  }
  const tcheck::ScalingReport report = tcheck::scaling_report(records);
  CHECK(report.axis == "k");
  CHECK(report.slope == doctest::Approx(1.0).epsilon(0.01));
  CHECK_FALSE(report.flagged);
  CHECK(report.rows.size() == 4);
}

TEST_CASE("quadratic synthetic times are flagged") {
  std::vector<BenchRecord> records;
  for (const std::size_t k : {64, 128, 256, 512}) {
    records.push_back(synthetic_record(k, static_cast<std::int64_t>(k) * k));
  }
  const tcheck::ScalingReport report = tcheck::scaling_report(records);
  CHECK(report.slope == doctest::Approx(2.0).epsilon(0.01));
  CHECK(report.flagged);
  CHECK(report.render().find("**") != std::string::npos);
}

TEST_CASE("scaling report needs one varied axis and three points") {
  std::vector<BenchRecord> same{synthetic_record(64, 100), synthetic_record(64, 200)};
  CHECK_THROWS_AS(tcheck::scaling_report(same), std::invalid_argument);

  std::vector<BenchRecord> two{synthetic_record(64, 100), synthetic_record(128, 200)};
  CHECK_THROWS_AS(tcheck::scaling_report(two), tcheck::InsufficientDataError);

  std::vector<BenchRecord> mixed{synthetic_record(64, 100), synthetic_record(128, 200),
                                 synthetic_record(256, 400)};
  mixed[2].mu = 16;
  CHECK_THROWS_AS(tcheck::scaling_report(mixed), std::invalid_argument);
}

TEST_CASE("regime labels pick the nearest reference order") {
  CHECK(tcheck::order_label(1.0, 100.0) == "1");
  CHECK(tcheck::order_label(100.0, 100.0) == "n");
  CHECK(tcheck::order_label(10000.0, 100.0) == "n^2");
  CHECK(tcheck::order_label(10.0, 100.0) == "sqrt n");
  CHECK(tcheck::order_label(std::log(100.0), 100.0) == "log n");
}

}  // TEST_SUITE
