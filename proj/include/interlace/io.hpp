#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "interlace/dense_matrix.hpp"
#include "interlace/graph.hpp"
#include "interlace/partition.hpp"

namespace interlace {

// Input-format violation, carrying the 1-based line number (0 when the error
// is not tied to a specific line, e.g. missing coverage or an unopenable file).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// 12 significant digits, enough to reconstruct every quantity this library
// reports to well below its tolerances, and stable across runs.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace detail {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

// All nonblank lines, tokenized on whitespace.
inline std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    Line line{number, {}};
    std::istringstream ss(raw);
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

inline std::size_t parse_count(const std::string& tok, std::size_t line, const char* what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  }
  if (pos != tok.size() || tok[0] == '-')
    throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  return static_cast<std::size_t>(v);
}

inline double parse_number(const std::string& tok, std::size_t line) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "non-numeric matrix entry '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError(line, "non-numeric matrix entry '" + tok + "'");
  if (!std::isfinite(v)) throw ParseError(line, "non-finite matrix entry '" + tok + "'");
  return v;
}

}  // namespace detail

// Edge-list format: first line "n m", then m lines "u v" with 1-based
// endpoints. Blank lines are ignored.
inline Graph parse_graph_edge_list(std::istream& in) {
  const auto lines = detail::tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty graph file (expected 'n m' header)");
  const auto& head = lines.front();
  if (head.tokens.size() != 2)
    throw ParseError(head.number, "malformed header (expected 'n m')");
  const std::size_t n = detail::parse_count(head.tokens[0], head.number, "vertex count");
  const std::size_t m = detail::parse_count(head.tokens[1], head.number, "edge count");
  if (n == 0) throw ParseError(head.number, "vertex count must be positive");
  if (lines.size() - 1 != m)
    throw ParseError(head.number, "header promises " + std::to_string(m) + " edges, file has " +
                                      std::to_string(lines.size() - 1));

  std::vector<Graph::Edge> edges;
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 2)
      throw ParseError(line.number, "malformed edge (expected 'u v')");
    std::size_t u = detail::parse_count(line.tokens[0], line.number, "vertex");
    std::size_t v = detail::parse_count(line.tokens[1], line.number, "vertex");
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(line.number, "vertex out of range 1.." + std::to_string(n));
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    --u;
    --v;
    if (seen[u][v])
      throw ParseError(line.number, "duplicate edge {" + std::to_string(u + 1) + "," +
                                        std::to_string(v + 1) + "}");
    seen[u][v] = seen[v][u] = true;
    edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

// Matrix format: first line "rows cols", then `rows` lines of `cols`
// whitespace-separated decimals.
inline DenseMatrix parse_matrix(std::istream& in) {
  const auto lines = detail::tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty matrix file (expected 'rows cols' header)");
  const auto& head = lines.front();
  if (head.tokens.size() != 2)
    throw ParseError(head.number, "malformed header (expected 'rows cols')");
  const std::size_t rows = detail::parse_count(head.tokens[0], head.number, "row count");
  const std::size_t cols = detail::parse_count(head.tokens[1], head.number, "column count");
  if (rows == 0 || cols == 0) throw ParseError(head.number, "matrix dimensions must be positive");
  if (lines.size() - 1 != rows)
    throw ParseError(head.number, "header promises " + std::to_string(rows) +
                                      " rows, file has " + std::to_string(lines.size() - 1));

  std::vector<double> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != cols)
      throw ParseError(line.number, "expected " + std::to_string(cols) + " entries, got " +
                                        std::to_string(line.tokens.size()));
    for (const auto& tok : line.tokens) entries.push_back(detail::parse_number(tok, line.number));
  }
  return DenseMatrix(rows, cols, std::move(entries));
}

// Partition format: one block per line, 1-based vertices separated by spaces;
// blank lines ignored. The blocks must tile 1..ground exactly.
inline Partition parse_partition(std::istream& in, std::size_t ground) {
  const auto lines = detail::tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty partition file");
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> owner_line(ground, 0);
  for (const auto& line : lines) {
    std::vector<std::size_t> block;
    for (const auto& tok : line.tokens) {
      const std::size_t v = detail::parse_count(tok, line.number, "vertex");
      if (v < 1 || v > ground)
        throw ParseError(line.number, "vertex " + std::to_string(v) + " out of range 1.." +
                                          std::to_string(ground));
      if (owner_line[v - 1] != 0)
        throw ParseError(line.number, "vertex " + std::to_string(v) +
                                          " already placed on line " +
                                          std::to_string(owner_line[v - 1]));
      owner_line[v - 1] = line.number;
      block.push_back(v - 1);
    }
    blocks.push_back(std::move(block));
  }
  for (std::size_t v = 0; v < ground; ++v)
    if (owner_line[v] == 0)
      throw ParseError(0, "vertex " + std::to_string(v + 1) + " is not covered by any block");
  return Partition(ground, std::move(blocks));
}

// Canonical serialization: sorted edge pairs, 1-based.
inline std::string format_graph_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges())
    out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

inline std::string format_partition(const Partition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(block[i] + 1);
    }
    out += "\n";
  }
  return out;
}

inline std::string format_matrix(const DenseMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += " ";
      out += format_double(m(i, j));
    }
    out += "\n";
  }
  return out;
}

namespace detail {

inline std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open file: " + path);
  return in;
}

}  // namespace detail

inline Graph load_graph(const std::string& path) {
  auto in = detail::open_or_throw(path);
  return parse_graph_edge_list(in);
}

inline DenseMatrix load_matrix(const std::string& path) {
  auto in = detail::open_or_throw(path);
  return parse_matrix(in);
}

inline Partition load_partition(const std::string& path, std::size_t ground) {
  auto in = detail::open_or_throw(path);
  return parse_partition(in, ground);
}

}  // namespace interlace
