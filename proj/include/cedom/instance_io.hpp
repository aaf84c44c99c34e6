#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cedom/graph.hpp"

namespace cedom {

/// Malformed instance text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Instance {
  std::string name;
  Graph graph;
  /// External label of each vertex id.
  std::vector<std::string> labels;

  /// True when every label is just the decimal vertex id.
  bool identity_labels() const;
};

/// Parses an edge-list instance.
///
/// Plain format: '#' comment lines, a header line holding the vertex count,
/// then one edge per line as two whitespace-separated labels. If every
/// label is a non-negative integer the labels are the vertex ids and must be
/// below the header count; otherwise labels are renumbered densely in order
/// of first appearance.
///
/// DIMACS format ("p edge n m" header, "e u v" lines with 1-based ids, 'c'
/// comments) is recognised by its header.
///
/// Duplicate edges collapse. Self-loops, out-of-range ids and malformed
/// lines throw ParseError.
Instance parse_instance(std::string_view text, std::string name = {});

/// Reads and parses a file; the instance name defaults to the file stem.
Instance load_instance(const std::filesystem::path& path);

/// Plain-format text: vertex count, then "u v" per edge (u < v). When labels
/// are given they replace the ids.
std::string write_instance(const Graph& g, std::span<const std::string> labels = {});

/// Builds a generated instance from a spec such as
///   grid:ROWS,COLS   snark:K   udg:C,R,W,H,SEED   er:N,P,SEED   erdeg:N,D,SEED
/// Throws std::invalid_argument on a bad spec or a disconnected unit disk
/// sample.
Instance generate_instance(std::string_view spec);

}  // namespace cedom
