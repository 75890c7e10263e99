#include "tcheck/workload.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>

namespace tcheck {

namespace {

// Unbiased draw from [0, bound) so generated graphs do not depend on the
// standard library's distribution internals.
std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return (r - threshold) % bound;
  }
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Arc arc_from_index(std::uint64_t index, std::uint32_t n) {
  const auto tail = static_cast<VertexId>(index / (n - 1));
  const auto rest = static_cast<VertexId>(index % (n - 1));
  return Arc{tail, rest + (rest >= tail ? 1 : 0)};
}

}  // namespace

void validate_spec(const GeneratorSpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("generator: n must be positive");
  const std::uint64_t pairs = static_cast<std::uint64_t>(spec.n) * (spec.n - 1);
  switch (spec.model) {
    case GeneratorModel::per_step_bernoulli:
      if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
        throw std::invalid_argument("generator: p must be in [0, 1]");
      }
      break;
    case GeneratorModel::fixed_mu:
      if (spec.mu > pairs) {
        throw std::invalid_argument("generator: mu exceeds n(n-1)");
      }
      break;
  }
}

EvolvingGraph generate(const GeneratorSpec& spec) {
  validate_spec(spec);
  std::mt19937_64 rng(spec.seed);
  std::vector<std::vector<Arc>> steps(spec.k);

  if (spec.model == GeneratorModel::per_step_bernoulli) {
    for (auto& step : steps) {
      for (VertexId u = 0; u < spec.n; ++u) {
        for (VertexId v = 0; v < spec.n; ++v) {
          if (u == v) continue;
          if (unit_uniform(rng) < spec.p) step.push_back(Arc{u, v});
        }
      }
    }
  } else {
    const std::uint64_t pairs = static_cast<std::uint64_t>(spec.n) * (spec.n - 1);
    std::set<std::uint64_t> chosen;
    for (auto& step : steps) {
      chosen.clear();
      // Floyd's uniform sampling of mu distinct arc indices.
      for (std::uint64_t j = pairs - spec.mu; j < pairs; ++j) {
        const std::uint64_t t = bounded_uniform(rng, j + 1);
        chosen.insert(chosen.contains(t) ? j : t);
      }
      step.reserve(spec.mu);
      for (const std::uint64_t index : chosen) {
        step.push_back(arc_from_index(index, spec.n));
      }
      std::sort(step.begin(), step.end());
    }
  }
  return EvolvingGraph(spec.n, std::move(steps));
}

std::vector<BenchRecord> bench_grid(std::span<const GeneratorSpec> specs,
                                    JourneySemantics semantics, std::size_t repetitions) {
  if (repetitions == 0) {
    throw std::invalid_argument("bench_grid: repetitions must be at least 1");
  }
  std::vector<BenchRecord> records;
  records.reserve(specs.size());

  for (const GeneratorSpec& spec : specs) {
    const EvolvingGraph g = generate(spec);
    const DensityProfile profile = density_profile(g);

    ConnectivityReport report = compute_closure(g, semantics);  // warm-up, discarded timing
    std::vector<std::chrono::nanoseconds> times(repetitions);
    for (auto& t : times) {
      const auto begin = std::chrono::steady_clock::now();
      report = compute_closure(g, semantics);
      t = std::chrono::steady_clock::now() - begin;
    }
    std::sort(times.begin(), times.end());
    const std::chrono::nanoseconds median =
        repetitions % 2 == 1
            ? times[repetitions / 2]
            : (times[repetitions / 2 - 1] + times[repetitions / 2]) / 2;

    records.push_back(BenchRecord{profile.n, profile.k, profile.mu, profile.m, semantics,
                                  report.connected, report.completed_at_step, median});
  }
  return records;
}

std::string bench_csv(std::span<const BenchRecord> records) {
  std::string out = "n,k,mu,m,semantics,connected,completed_at_step,wall_time_ns\n";
  for (const BenchRecord& r : records) {
    out += std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.mu) +
           "," + std::to_string(r.m) + ",";
    out += r.semantics == JourneySemantics::strict ? "strict" : "non_strict";
    out += r.connected ? ",true," : ",false,";
    out += r.completed_at_step ? std::to_string(*r.completed_at_step) : "-";
    out += "," + std::to_string(r.wall_time.count()) + "\n";
  }
  return out;
}

std::string order_label(double value, double n) {
  if (value <= 0.0) return "0";
  const std::pair<const char*, double> candidates[] = {
      {"1", 1.0},
      {"log n", std::log(n)},
      {"sqrt n", std::sqrt(n)},
      {"n", n},
      {"n log n", n * std::log(n)},
      {"n sqrt n", n * std::sqrt(n)},
      {"n^2", n * n},
  };
  const char* best = "1";
  double best_distance = std::numeric_limits<double>::infinity();
  for (const auto& [label, reference] : candidates) {
    if (reference <= 0.0) continue;
    const double distance = std::abs(std::log(value) - std::log(reference));
    if (distance < best_distance) {
      best_distance = distance;
      best = label;
    }
  }
  return best;
}

ScalingReport scaling_report(std::span<const BenchRecord> records, double band) {
  std::set<std::size_t> ks, mus;
  std::set<std::uint32_t> ns;
  for (const BenchRecord& r : records) {
    ks.insert(r.k);
    mus.insert(r.mu);
    ns.insert(r.n);
  }
  const int varied = (ks.size() > 1) + (mus.size() > 1) + (ns.size() > 1);
  if (varied != 1) {
    throw std::invalid_argument(
        "scaling_report: exactly one of k, mu, n must vary across records");
  }

  ScalingReport report;
  report.band = band;
  std::vector<double> xs;
  xs.reserve(records.size());
  if (ks.size() > 1) {
    report.axis = "k";
    for (const auto& r : records) xs.push_back(static_cast<double>(r.k));
  } else if (mus.size() > 1) {
    report.axis = "mu";
    for (const auto& r : records) xs.push_back(static_cast<double>(r.mu));
  } else {
    report.axis = "n";
    for (const auto& r : records) xs.push_back(static_cast<double>(r.n));
  }

  const std::size_t distinct = std::max({ks.size(), mus.size(), ns.size()});
  if (distinct < 3) {
    throw InsufficientDataError(
        "scaling_report: need at least 3 distinct values on the varied axis");
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const double x = std::log(xs[i]);
    const double y =
        std::log(static_cast<double>(std::max<std::int64_t>(records[i].wall_time.count(), 1)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const auto count = static_cast<double>(records.size());
  report.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  report.flagged = std::abs(report.slope - 1.0) > band;

  for (const BenchRecord& r : records) {
    const auto n = static_cast<double>(r.n);
    report.rows.push_back(RegimeRow{r.n, r.k, r.mu, r.m, r.wall_time,
                                    order_label(static_cast<double>(r.mu), n),
                                    order_label(static_cast<double>(r.m), n),
                                    order_label(static_cast<double>(r.k), n)});
  }
  return report;
}

std::string ScalingReport::render() const {
  std::ostringstream out;
  out << "varied axis: " << axis << "\n";
  out << "log-log slope: " << slope << (flagged ? "  ** outside 1.0 +/- " : "  (within 1.0 +/- ")
      << band << (flagged ? " **" : ")") << "\n";
  out << "n\tk\tmu\tm\twall_time_ns\tmu~\tm~\tk~\n";
  for (const RegimeRow& row : rows) {
    out << row.n << "\t" << row.k << "\t" << row.mu << "\t" << row.m << "\t"
        << row.wall_time.count() << "\t" << row.mu_order << "\t" << row.m_order << "\t"
        << row.k_order << "\n";
  }
  return out.str();
}

}  // namespace tcheck
