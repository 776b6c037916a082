#pragma once

#include <cstddef>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "binlat/error.hpp"
#include "binlat/exactmat.hpp"
#include "binlat/graphs.hpp"
#include "binlat/ideal.hpp"
#include "binlat/lattice.hpp"

namespace binlat::io {

// "-" means the given stream (stdin for the CLI).
inline std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream f(path);
  if (!f) throw parse_error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

namespace detail {

// Non-empty lines with '#' comments removed, each split into tokens.
inline std::vector<std::vector<std::string>> token_lines(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream all(text);
  std::string line;
  while (std::getline(all, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (!toks.empty()) out.push_back(std::move(toks));
  }
  return out;
}

inline Integer parse_integer(const std::string& tok) {
  std::size_t k = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (k == tok.size()) throw parse_error("not an integer: '" + tok + "'");
  for (std::size_t i = k; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9') throw parse_error("not an integer: '" + tok + "'");
  return Integer(tok.substr(tok[0] == '+' ? 1 : 0), 10);
}

inline std::size_t parse_size(const std::string& tok, const char* what) {
  Integer v = parse_integer(tok);
  if (v < 1 || !v.fits_ulong_p()) throw parse_error(std::string(what) + " must be a positive integer, got " + tok);
  return v.get_ui();
}

// Header `a b` then `a` rows of `b` integers.
inline std::vector<IntVector> parse_block(const std::string& text, std::size_t& a, std::size_t& b, const char* kind) {
  auto lines = token_lines(text);
  if (lines.empty()) throw parse_error(std::string(kind) + ": empty input");
  if (lines[0].size() != 2) throw parse_error(std::string(kind) + ": header must be two integers");
  a = parse_size(lines[0][0], "row count");
  b = parse_size(lines[0][1], "column count");
  const std::size_t want = std::string(kind) == "ideal" ? b : a;
  const std::size_t width = std::string(kind) == "ideal" ? a : b;
  if (lines.size() != want + 1)
    throw parse_error(std::string(kind) + ": expected " + std::to_string(want) + " data lines, got " +
                      std::to_string(lines.size() - 1));
  std::vector<IntVector> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != width)
      throw parse_error(std::string(kind) + ": line " + std::to_string(i) + " has " +
                        std::to_string(lines[i].size()) + " entries, expected " + std::to_string(width));
    IntVector r;
    for (const auto& t : lines[i]) r.push_back(parse_integer(t));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace detail

inline IntMatrix parse_matrix(const std::string& text) {
  std::size_t s = 0, m = 0;
  auto rows = detail::parse_block(text, s, m, "matrix");
  return IntMatrix::from_rows(rows, m);
}

// Generators are the columns.
inline Lattice parse_lattice(const std::string& text) { return Lattice::from_columns(parse_matrix(text)); }

inline std::vector<IntVector> parse_points(const std::string& text) { return parse_matrix(text).columns(); }

// `s m` then m lines of s integers, line v being t^{v+} - t^{v-}.
inline BinomialIdeal parse_ideal(const std::string& text) {
  std::size_t s = 0, m = 0;
  auto vs = detail::parse_block(text, s, m, "ideal");
  for (const auto& v : vs)
    if (is_zero(v)) throw parse_error("ideal: zero binomial");
  return BinomialIdeal::from_vectors(s, vs);
}

struct GraphEdge {
  std::size_t from = 0, to = 0;
  Integer weight;
  bool directed = false;
};

struct GraphFile {
  std::size_t vertices = 0;
  std::vector<GraphEdge> edges;
  bool any_directed() const {
    for (const auto& e : edges)
      if (e.directed) return true;
    return false;
  }
};

// First line `s`; then `i j w` or `i > j w`, vertices 1-based.
inline GraphFile parse_graph(const std::string& text) {
  auto lines = detail::token_lines(text);
  if (lines.empty() || lines[0].size() != 1) throw parse_error("graph: first line must be the vertex count");
  GraphFile g;
  g.vertices = detail::parse_size(lines[0][0], "vertex count");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    GraphEdge e;
    std::size_t k = 0;
    if (l.size() == 4 && l[1] == ">") {
      e.directed = true;
    } else if (l.size() != 3) {
      throw parse_error("graph: line " + std::to_string(i) + " is not 'i j w' or 'i > j w'");
    }
    e.from = detail::parse_size(l[k], "vertex");
    e.to = detail::parse_size(l[e.directed ? 2 : 1], "vertex");
    e.weight = detail::parse_integer(l[e.directed ? 3 : 2]);
    if (e.from > g.vertices || e.to > g.vertices) throw parse_error("graph: vertex out of range on line " + std::to_string(i));
    --e.from;
    --e.to;
    g.edges.push_back(std::move(e));
  }
  return g;
}

inline WeightedGraph to_graph(const GraphFile& f) {
  if (f.any_directed()) throw parse_error("graph: directed arc in an undirected graph file; use --digraph");
  WeightedGraph G(f.vertices);
  for (const auto& e : f.edges) G.add_edge(e.from, e.to, e.weight);
  return G;
}

// Undirected lines contribute both arcs.
inline WeightedDigraph to_digraph(const GraphFile& f) {
  WeightedDigraph G(f.vertices);
  for (const auto& e : f.edges) {
    G.add_arc(e.from, e.to, e.weight);
    if (!e.directed) G.add_arc(e.to, e.from, e.weight);
  }
  return G;
}

// "d1,d2,...,ds"
inline IntVector parse_grading(const std::string& text) {
  IntVector d;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) d.push_back(detail::parse_integer(tok));
  if (d.empty()) throw parse_error("empty grading");
  return d;
}

}  // namespace binlat::io
