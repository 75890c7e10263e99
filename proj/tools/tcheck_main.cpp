// tcheck: journey transitive closure and temporal connectivity for
// evolving graphs.
//
// Exit codes: 0 success (or connected), 1 not connected (`connected`
// only), 2 usage error, 3 input error, 4 oracle verification mismatch.

#include <charconv>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tcheck/closure.hpp"
#include "tcheck/graph.hpp"
#include "tcheck/io.hpp"
#include "tcheck/oracle.hpp"
#include "tcheck/workload.hpp"

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputFile {
  explicit InputFile(const std::string& path) {
    if (path == "-") {
      name = "<stdin>";
      stream = &std::cin;
    } else {
      name = path;
      file.open(path);
      if (!file) throw IoError("cannot open " + path + " for reading");
      stream = &file;
    }
  }
  std::ifstream file;
  std::istream* stream = nullptr;
  std::string name;
};

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    std::cout.flush();
    if (!std::cout) throw IoError("cannot write to standard output");
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("cannot write " + path);
}

std::string read_file(const std::string& path) {
  InputFile in(path);
  std::string content((std::istreambuf_iterator<char>(*in.stream)),
                      std::istreambuf_iterator<char>());
  return content;
}

tcheck::JourneySemantics pick_semantics(bool non_strict) {
  return non_strict ? tcheck::JourneySemantics::non_strict
                    : tcheck::JourneySemantics::strict;
}

void add_semantics_flags(CLI::App* cmd, bool& strict_flag, bool& non_strict_flag) {
  auto* s = cmd->add_flag("--strict", strict_flag, "strict journeys (default)");
  auto* ns = cmd->add_flag("--non-strict", non_strict_flag,
                           "non-strict journeys (per-step static closure)");
  s->excludes(ns);
  ns->excludes(s);
}

int run_close(const std::string& in_path, const std::string& out_path, bool non_strict) {
  InputFile in(in_path);
  const tcheck::EvolvingGraph g = tcheck::parse_teg(*in.stream, in.name);
  const tcheck::ConnectivityReport report =
      tcheck::compute_closure(g, pick_semantics(non_strict));
  write_output(out_path, tcheck::serialize_closure(report));
  return 0;
}

int run_connected(const std::string& in_path, bool non_strict, bool verify_oracle) {
  InputFile in(in_path);
  const tcheck::JourneySemantics semantics = pick_semantics(non_strict);
  tcheck::TegReader reader(*in.stream, in.name);

  if (verify_oracle) {
    const tcheck::EvolvingGraph g = reader.read_all();
    const tcheck::ConnectivityReport report = tcheck::compute_closure(g, semantics);
    const tcheck::ClosureGraph oracle = tcheck::oracle_closure(g, semantics);
    if (report.closure != oracle || report.connected != oracle.is_complete()) {
      std::cerr << "tcheck: oracle verification mismatch\n";
      return 4;
    }
    if (report.connected) {
      std::cout << "true step=" << *report.completed_at_step << "\n";
      return 0;
    }
    std::cout << "false\n";
    return 1;
  }

  // Streaming: stop consuming input at the completion step.
  tcheck::PredecessorState state(reader.header().n);
  std::optional<std::size_t> completed;
  if (state.complete()) completed = 0;
  while (!completed) {
    auto arcs = reader.next_step();
    if (!arcs) break;
    if (semantics == tcheck::JourneySemantics::non_strict) {
      *arcs = tcheck::static_closure_step(*arcs, reader.header().n);
    }
    state.process_step(*arcs);
    if (state.complete()) completed = reader.steps_read();
  }
  if (completed) {
    std::cout << "true step=" << *completed << "\n";
    return 0;
  }
  std::cout << "false\n";
  return 1;
}

int run_query(const std::string& in_path, std::uint64_t u, std::uint64_t v,
              bool non_strict) {
  const std::string content = read_file(in_path);
  std::optional<tcheck::ClosureGraph> closure;
  if (content.rfind("tc ", 0) == 0) {
    closure = tcheck::parse_closure_text(content, in_path);
  } else {
    const tcheck::EvolvingGraph g = tcheck::parse_teg_text(content, in_path);
    closure = tcheck::compute_closure(g, pick_semantics(non_strict)).closure;
  }
  if (u >= closure->vertex_count() || v >= closure->vertex_count()) {
    throw std::invalid_argument("query vertex out of range for n=" +
                                std::to_string(closure->vertex_count()));
  }
  const bool exists = tcheck::journey_exists(*closure, static_cast<tcheck::VertexId>(u),
                                             static_cast<tcheck::VertexId>(v));
  std::cout << (exists ? "true" : "false") << "\n";
  return 0;
}

int run_generate(const tcheck::GeneratorSpec& spec, const std::string& out_path) {
  write_output(out_path, tcheck::serialize_teg(tcheck::generate(spec)));
  return 0;
}

std::vector<tcheck::GeneratorSpec> parse_grid_csv(const std::string& path) {
  InputFile in(path);
  std::vector<tcheck::GeneratorSpec> specs;
  std::string line;
  std::size_t line_no = 0;
  const auto fail = [&](const std::string& message) -> void {
    throw tcheck::ParseError(in.name, line_no == 0 ? 1 : line_no, message);
  };

  if (!std::getline(*in.stream, line)) fail("empty grid file");
  ++line_no;
  if (line != "n,k,model,param,seed") {
    fail("grid header must be 'n,k,model,param,seed'");
  }
  while (std::getline(*in.stream, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 5) fail("expected 5 comma-separated fields");

    tcheck::GeneratorSpec spec;
    const auto parse_u64 = [&](const std::string& s, const char* what) -> std::uint64_t {
      std::uint64_t value = 0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        fail(std::string("bad ") + what + " field: '" + s + "'");
      }
      return value;
    };
    const std::uint64_t n = parse_u64(fields[0], "n");
    if (n > std::numeric_limits<std::uint32_t>::max()) fail("n too large");
    spec.n = static_cast<std::uint32_t>(n);
    spec.k = parse_u64(fields[1], "k");
    if (fields[2] == "bernoulli") {
      spec.model = tcheck::GeneratorModel::per_step_bernoulli;
      try {
        std::size_t used = 0;
        spec.p = std::stod(fields[3], &used);
        if (used != fields[3].size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        fail("bad param field: '" + fields[3] + "'");
      }
    } else if (fields[2] == "fixed_mu") {
      spec.model = tcheck::GeneratorModel::fixed_mu;
      spec.mu = parse_u64(fields[3], "param");
    } else {
      fail("model must be 'bernoulli' or 'fixed_mu'");
    }
    spec.seed = parse_u64(fields[4], "seed");
    try {
      tcheck::validate_spec(spec);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    specs.push_back(spec);
  }
  return specs;
}

int run_bench(const std::string& grid_path, std::size_t reps, const std::string& out_path,
              bool non_strict) {
  const std::vector<tcheck::GeneratorSpec> specs = parse_grid_csv(grid_path);
  const std::vector<tcheck::BenchRecord> records =
      tcheck::bench_grid(specs, pick_semantics(non_strict), reps);
  write_output(out_path, tcheck::bench_csv(records));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"journey transitive closure and temporal connectivity of evolving graphs",
               "tcheck"};
  app.require_subcommand(1);

  std::string in_path, out_path, grid_path;
  bool strict_flag = false, non_strict_flag = false, oracle_flag = false;
  std::uint64_t query_u = 0, query_v = 0;
  tcheck::GeneratorSpec gen_spec;
  double gen_p = 0.0;
  std::size_t gen_mu = 0;
  std::size_t reps = 5;

  auto* close_cmd = app.add_subcommand("close", "compute a closure file from a TEG file");
  close_cmd->add_option("--in", in_path, "input TEG file, - for stdin")->required();
  close_cmd->add_option("--out", out_path, "output closure file, - for stdout")->required();
  add_semantics_flags(close_cmd, strict_flag, non_strict_flag);

  auto* connected_cmd =
      app.add_subcommand("connected", "test temporal connectivity, streaming the steps");
  connected_cmd->add_option("--in", in_path, "input TEG file, - for stdin")->required();
  add_semantics_flags(connected_cmd, strict_flag, non_strict_flag);
  connected_cmd->add_flag("--oracle", oracle_flag)->group("");  // verification, hidden

  auto* query_cmd = app.add_subcommand("query", "test whether a journey u -> v exists");
  query_cmd->add_option("--in", in_path, "input TEG or closure file")->required();
  query_cmd->add_option("u", query_u, "source vertex")->required();
  query_cmd->add_option("v", query_v, "destination vertex")->required();
  add_semantics_flags(query_cmd, strict_flag, non_strict_flag);

  auto* generate_cmd = app.add_subcommand("generate", "write a random TEG file");
  generate_cmd->add_option("--n", gen_spec.n, "vertex count")->required();
  generate_cmd->add_option("--k", gen_spec.k, "step count")->required();
  auto* p_opt = generate_cmd->add_option("--p", gen_p, "per-step arc probability");
  auto* mu_opt = generate_cmd->add_option("--mu", gen_mu, "arcs per step");
  p_opt->excludes(mu_opt);
  mu_opt->excludes(p_opt);
  generate_cmd->add_option("--seed", gen_spec.seed, "generator seed")->required();
  generate_cmd->add_option("--out", out_path, "output TEG file, - for stdout")->required();

  auto* bench_cmd = app.add_subcommand("bench", "time closures over a grid of generated graphs");
  bench_cmd->add_option("--grid", grid_path, "CSV of generator specs (n,k,model,param,seed)")
      ->required();
  bench_cmd->add_option("--reps", reps, "timed repetitions per grid point")->required();
  bench_cmd->add_option("--out", out_path, "output CSV file, - for stdout")->required();
  add_semantics_flags(bench_cmd, strict_flag, non_strict_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "tcheck: " << e.what() << "\n";
    std::cerr << "run 'tcheck --help' for usage\n";
    return 2;
  }

  try {
    if (close_cmd->parsed()) return run_close(in_path, out_path, non_strict_flag);
    if (connected_cmd->parsed()) return run_connected(in_path, non_strict_flag, oracle_flag);
    if (query_cmd->parsed()) return run_query(in_path, query_u, query_v, non_strict_flag);
    if (generate_cmd->parsed()) {
      if (p_opt->count() == 0 && mu_opt->count() == 0) {
        std::cerr << "tcheck: generate needs --p or --mu\n";
        return 2;
      }
      if (p_opt->count() > 0) {
        gen_spec.model = tcheck::GeneratorModel::per_step_bernoulli;
        gen_spec.p = gen_p;
      } else {
        gen_spec.model = tcheck::GeneratorModel::fixed_mu;
        gen_spec.mu = gen_mu;
      }
      return run_generate(gen_spec, out_path);
    }
    if (bench_cmd->parsed()) {
      if (reps == 0) {
        std::cerr << "tcheck: --reps must be at least 1\n";
        return 2;
      }
      return run_bench(grid_path, reps, out_path, non_strict_flag);
    }
  } catch (const tcheck::ParseError& e) {
    std::cerr << "tcheck: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << "tcheck: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "tcheck: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "tcheck: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
