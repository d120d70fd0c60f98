#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nctd/constructions.hpp"
#include "nctd/teaching.hpp"
#include "nctd/treedepth.hpp"

namespace nctd {

// Text formats. Files use 1-based vertex ids; everything in memory is
// 0-based. Blank lines and anything after '#' are ignored. Every reader
// throws InputError naming the offending line.

struct GraphFile {
  Graph graph;
  // Centers from `b` lines; empty optional when the file has none.
  std::optional<std::vector<Vertex>> centers;
};

// `p <n> <m>`, then m lines `e <u> <v>`, optionally `b <c1> <c2> ...`.
GraphFile read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g,
                 const std::optional<std::vector<Vertex>>& centers);

// A separate class file: only `b` lines, checked against n vertices.
std::vector<Vertex> read_centers(std::istream& in, int n);

// `t <center>: <v1> <v2> ...`, one line per concept.
TeachingMap read_map(std::istream& in, int n);
void write_map(std::ostream& out, const TeachingMap& t);

// Rekeys a map read from a file onto the canonical centers of `b`. A line
// for a merged center stands for its canonical concept; two lines for the
// same concept must agree.
TeachingMap canonicalize_map(const TeachingMap& t, const ConceptClass& b);

// `d <vertex> <parent>` per vertex, parent 0 for a root.
RootedForest read_decomposition(std::istream& in, int n);
void write_decomposition(std::ostream& out, const RootedForest& f);

// `x <v1> <v2> ...`; several lines are joined.
VertexSet read_cover(std::istream& in, int n);
void write_cover(std::ostream& out, const VertexSet& cover);

// `s <x> <y>` per square, in vertex order.
SquareArrangement read_arrangement(std::istream& in);
void write_arrangement(std::ostream& out, const SquareArrangement& arr);

// One concept per line, elements 1-based; `-` is the empty concept.
// Returned elements are 0-based.
std::vector<std::vector<int>> read_concepts(std::istream& in);

// Verdict with 1-based ids: "Ok", "Clash 1 3", "PositivityViolation 2 1".
std::string format_verdict(const Verdict& v);

}  // namespace nctd
