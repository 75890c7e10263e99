#ifndef TCHECK_IO_HPP
#define TCHECK_IO_HPP

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tcheck/closure.hpp"
#include "tcheck/graph.hpp"

namespace tcheck {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string file, std::size_t line, const std::string& message)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + message),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

struct TegHeader {
  std::uint32_t n = 0;
  std::size_t k = 0;
  bool undirected = false;
};

// Incremental reader for the TEG text format:
//   teg <n> <k> [undirected]
//   <tail> <head>       one arc per line, single space
//   --                  separator between the k step blocks
// LF endings, '#'-prefixed comment lines ignored, trailing newline
// required. The header is read on construction; each next_step() call
// consumes one step block, so a connectivity test can stop reading a
// pipe as soon as the verdict is known.
//
// Within a step, self-loops are dropped (counted) and duplicates
// removed; `undirected` inputs get each edge expanded to both arcs.
class TegReader {
 public:
  TegReader(std::istream& in, std::string name = "<input>");

  const TegHeader& header() const { return header_; }

  // Arcs of the next step, or nullopt once all k steps were read (the
  // reader then also verifies that no content follows).
  std::optional<std::vector<Arc>> next_step();

  std::size_t steps_read() const { return steps_read_; }
  std::size_t dropped_self_loops() const { return dropped_self_loops_; }

  // Drains the remaining steps and builds the graph.
  EvolvingGraph read_all();

 private:
  [[noreturn]] void fail(const std::string& message) const;
  // Reads the next line; false on clean end of input.
  bool next_line(std::string& line);

  std::istream& in_;
  std::string name_;
  TegHeader header_;
  std::size_t line_no_ = 0;
  std::size_t steps_read_ = 0;
  std::size_t dropped_self_loops_ = 0;
  bool done_ = false;
};

EvolvingGraph parse_teg(std::istream& in, std::string name = "<input>");
EvolvingGraph parse_teg_text(std::string_view text, std::string name = "<string>");

// Inverse of parse_teg: arcs in lexicographic (tail, head) order, steps
// in index order, LF endings. parse_teg(serialize_teg(g)) == g.
std::string serialize_teg(const EvolvingGraph& g);

// Closure text format:
//   tc <n> <arc-count>
//   # connected=<true|false> step=<t|->
//   <tail> <head>        sorted, one per line
std::string serialize_closure(const ConnectivityReport& report);
ClosureGraph parse_closure(std::istream& in, std::string name = "<input>");
ClosureGraph parse_closure_text(std::string_view text, std::string name = "<string>");

}  // namespace tcheck

#endif  // TCHECK_IO_HPP
