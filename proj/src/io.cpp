#include "tcheck/io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace tcheck {

namespace {

bool is_comment(const std::string& line) { return !line.empty() && line[0] == '#'; }

// Strict decimal field: digits only, no sign, no surrounding space.
bool parse_number(const std::string& line, std::size_t& pos, std::uint64_t& value) {
  const char* begin = line.data() + pos;
  const char* end = line.data() + line.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr == begin) return false;
  pos += static_cast<std::size_t>(ptr - begin);
  return true;
}

}  // namespace

TegReader::TegReader(std::istream& in, std::string name)
    : in_(in), name_(std::move(name)) {
  std::string line;
  if (!next_line(line)) {
    fail("missing 'teg <n> <k> [undirected]' header");
  }
  std::size_t pos = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  bool ok = line.rfind("teg ", 0) == 0;
  pos = 4;
  ok = ok && parse_number(line, pos, n);
  ok = ok && pos < line.size() && line[pos] == ' ';
  ++pos;
  ok = ok && parse_number(line, pos, k);
  if (ok && pos != line.size()) {
    ok = line.compare(pos, std::string::npos, " undirected") == 0;
    header_.undirected = ok;
  }
  if (!ok) fail("malformed header, expected 'teg <n> <k> [undirected]'");
  if (n == 0) fail("vertex count must be positive");
  if (n > std::numeric_limits<std::uint32_t>::max()) fail("vertex count too large");
  header_.n = static_cast<std::uint32_t>(n);
  header_.k = static_cast<std::size_t>(k);
}

void TegReader::fail(const std::string& message) const {
  throw ParseError(name_, line_no_ == 0 ? 1 : line_no_, message);
}

bool TegReader::next_line(std::string& line) {
  for (;;) {
    if (!std::getline(in_, line)) return false;
    ++line_no_;
    if (in_.eof()) fail("missing trailing newline");
    if (!is_comment(line)) return true;
  }
}

std::optional<std::vector<Arc>> TegReader::next_step() {
  std::string line;
  if (steps_read_ == header_.k) {
    if (!done_) {
      done_ = true;
      if (next_line(line)) {
        fail("content after the last declared step");
      }
    }
    return std::nullopt;
  }

  std::vector<Arc> arcs;
  std::unordered_set<std::uint64_t> seen;
  const auto push = [&](std::uint64_t tail, std::uint64_t head) {
    if (tail >= header_.n || head >= header_.n) {
      fail("vertex label out of declared range");
    }
    if (tail == head) {
      ++dropped_self_loops_;
      return;
    }
    if (seen.insert(tail * header_.n + head).second) {
      arcs.push_back(Arc{static_cast<VertexId>(tail), static_cast<VertexId>(head)});
    }
  };

  for (;;) {
    if (!next_line(line)) {
      if (steps_read_ + 1 < header_.k) {
        fail("expected " + std::to_string(header_.k) + " steps, found " +
             std::to_string(steps_read_ + 1));
      }
      done_ = true;
      break;
    }
    if (line == "--") {
      if (steps_read_ + 1 >= header_.k) {
        fail("more steps than the " + std::to_string(header_.k) + " declared");
      }
      break;
    }
    std::size_t pos = 0;
    std::uint64_t tail = 0;
    std::uint64_t head = 0;
    bool ok = parse_number(line, pos, tail);
    ok = ok && pos < line.size() && line[pos] == ' ';
    ++pos;
    ok = ok && parse_number(line, pos, head) && pos == line.size();
    if (!ok) fail("malformed arc line, expected '<tail> <head>'");
    push(tail, head);
    if (header_.undirected && tail != head) push(head, tail);
  }
  ++steps_read_;
  return arcs;
}

EvolvingGraph TegReader::read_all() {
  std::vector<std::vector<Arc>> steps;
  steps.reserve(header_.k);
  while (auto arcs = next_step()) {
    steps.push_back(std::move(*arcs));
  }
  EvolvingGraph g(header_.n, std::move(steps));
  g.dropped_self_loops_ += dropped_self_loops_;
  return g;
}

EvolvingGraph parse_teg(std::istream& in, std::string name) {
  return TegReader(in, std::move(name)).read_all();
}

EvolvingGraph parse_teg_text(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  return parse_teg(in, std::move(name));
}

std::string serialize_teg(const EvolvingGraph& g) {
  std::string out = "teg " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.step_count()) + "\n";
  for (std::size_t i = 0; i < g.step_count(); ++i) {
    if (i > 0) out += "--\n";
    std::vector<Arc> arcs(g.step(i).begin(), g.step(i).end());
    std::sort(arcs.begin(), arcs.end());
    for (const Arc& a : arcs) {
      out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
    }
  }
  return out;
}

std::string serialize_closure(const ConnectivityReport& report) {
  const ClosureGraph& c = report.closure;
  std::string out = "tc " + std::to_string(c.vertex_count()) + " " +
                    std::to_string(c.arcs().size()) + "\n";
  out += "# connected=";
  out += report.connected ? "true" : "false";
  out += " step=";
  out += report.completed_at_step ? std::to_string(*report.completed_at_step) : "-";
  out += "\n";
  for (const Arc& a : c.arcs()) {
    out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  }
  return out;
}

ClosureGraph parse_closure(std::istream& in, std::string name) {
  std::size_t line_no = 0;
  std::string line;
  const auto fail = [&](const std::string& message) -> void {
    throw ParseError(name, line_no == 0 ? 1 : line_no, message);
  };
  const auto next_line = [&]() -> bool {
    for (;;) {
      if (!std::getline(in, line)) return false;
      ++line_no;
      if (in.eof()) fail("missing trailing newline");
      if (!is_comment(line)) return true;
    }
  };

  if (!next_line()) fail("missing 'tc <n> <arc-count>' header");
  std::size_t pos = 0;
  std::uint64_t n = 0;
  std::uint64_t count = 0;
  bool ok = line.rfind("tc ", 0) == 0;
  pos = 3;
  ok = ok && parse_number(line, pos, n);
  ok = ok && pos < line.size() && line[pos] == ' ';
  ++pos;
  ok = ok && parse_number(line, pos, count) && pos == line.size();
  if (!ok) fail("malformed header, expected 'tc <n> <arc-count>'");
  if (n == 0) fail("vertex count must be positive");
  if (n > std::numeric_limits<std::uint32_t>::max()) fail("vertex count too large");
  if (count > n * (n - 1)) fail("arc count exceeds n(n-1)");

  std::vector<Arc> arcs;
  arcs.reserve(count);
  std::unordered_set<std::uint64_t> seen;
  while (next_line()) {
    pos = 0;
    std::uint64_t tail = 0;
    std::uint64_t head = 0;
    ok = parse_number(line, pos, tail);
    ok = ok && pos < line.size() && line[pos] == ' ';
    ++pos;
    ok = ok && parse_number(line, pos, head) && pos == line.size();
    if (!ok) fail("malformed arc line, expected '<tail> <head>'");
    if (tail >= n || head >= n) fail("vertex label out of declared range");
    if (tail == head) fail("closure arcs cannot be self-loops");
    if (arcs.size() == count) fail("more arcs than the header declares");
    if (!seen.insert(tail * n + head).second) fail("duplicate arc");
    arcs.push_back(Arc{static_cast<VertexId>(tail), static_cast<VertexId>(head)});
  }
  if (arcs.size() != count) {
    fail("expected " + std::to_string(count) + " arcs, found " +
         std::to_string(arcs.size()));
  }
  return ClosureGraph(static_cast<std::uint32_t>(n), std::move(arcs));
}

ClosureGraph parse_closure_text(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  return parse_closure(in, std::move(name));
}

}  // namespace tcheck
