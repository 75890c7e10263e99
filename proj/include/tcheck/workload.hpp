#ifndef TCHECK_WORKLOAD_HPP
#define TCHECK_WORKLOAD_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tcheck/closure.hpp"
#include "tcheck/graph.hpp"

namespace tcheck {

enum class GeneratorModel { per_step_bernoulli, fixed_mu };

// Random evolving-graph description. Identical spec => identical graph,
// bit for bit; all randomness flows from the 64-bit seed.
struct GeneratorSpec {
  std::uint32_t n = 0;
  std::size_t k = 0;
  GeneratorModel model = GeneratorModel::per_step_bernoulli;
  double p = 0.0;     // per_step_bernoulli: arc probability
  std::size_t mu = 0; // fixed_mu: arcs per step
  std::uint64_t seed = 0;
};

// Raises std::invalid_argument on out-of-range fields (n = 0, p outside
// [0, 1], mu > n(n-1)).
void validate_spec(const GeneratorSpec& spec);

// per_step_bernoulli: each ordered pair (u,v), u != v, appears in each
// step independently with probability p. fixed_mu: each step is a
// uniform sample of exactly mu distinct arcs. Invalid fields raise
// std::invalid_argument.
EvolvingGraph generate(const GeneratorSpec& spec);

struct BenchRecord {
  std::uint32_t n = 0;
  std::size_t k = 0;
  std::size_t mu = 0;
  std::size_t m = 0;
  JourneySemantics semantics = JourneySemantics::strict;
  bool connected = false;
  std::optional<std::size_t> completed_at_step;
  std::chrono::nanoseconds wall_time{0};
};

// Generates each spec's graph, times the corresponding closure, and
// records the median wall time over `repetitions` runs (one warm-up run
// is discarded). Records come back in spec order. repetitions = 0
// raises std::invalid_argument.
std::vector<BenchRecord> bench_grid(std::span<const GeneratorSpec> specs,
                                    JourneySemantics semantics, std::size_t repetitions);

// CSV with header n,k,mu,m,semantics,connected,completed_at_step,wall_time_ns
// one row per record, LF endings; '-' marks an absent completion step.
std::string bench_csv(std::span<const BenchRecord> records);

class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RegimeRow {
  std::uint32_t n = 0;
  std::size_t k = 0;
  std::size_t mu = 0;
  std::size_t m = 0;
  std::chrono::nanoseconds wall_time{0};
  std::string mu_order; // nearest reference order of mu as a function of n
  std::string m_order;
  std::string k_order;
};

struct ScalingReport {
  std::string axis;      // "k", "mu" or "n"
  double slope = 0.0;    // log-log least-squares slope of time vs. axis
  double band = 0.35;    // allowed deviation from slope 1.0
  bool flagged = false;  // |slope - 1| > band
  std::vector<RegimeRow> rows;

  std::string render() const;
};

// Fits the log-log slope of wall time against the single varied axis
// (k, mu or n; the others must be fixed) and labels every record's
// (mu, m, k) with its nearest reference order in n so grid points can
// be placed among density regimes by hand. Fewer than 3 distinct values
// on the varied axis raises InsufficientDataError; zero or several
// varied axes raise std::invalid_argument.
ScalingReport scaling_report(std::span<const BenchRecord> records, double band = 0.35);

// Nearest of 1, log n, sqrt n, n, n log n, n sqrt n, n^2 in log space.
std::string order_label(double value, double n);

}  // namespace tcheck

#endif  // TCHECK_WORKLOAD_HPP
