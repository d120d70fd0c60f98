#pragma once

#include <random>
#include <utility>
#include <vector>

#include "nctd/graph.hpp"
#include "nctd/teaching.hpp"
#include "oracles.hpp"

namespace fixtures {

using nctd::Edge;
using nctd::Graph;
using nctd::Vertex;
using nctd::VertexSet;

inline Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

inline Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

inline Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

// Center 0, leaves 1..leaves.
inline Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

// Centers 0 and 1 joined by an edge; leaves of 0 come first.
inline Graph double_star(int left, int right) {
  std::vector<Edge> edges{{0, 1}};
  int next = 2;
  for (int i = 0; i < left; ++i) edges.emplace_back(0, next++);
  for (int i = 0; i < right; ++i) edges.emplace_back(1, next++);
  return Graph(next, edges);
}

inline Graph grid(int rows, int cols) {
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return Graph(rows * cols, edges);
}

// Hub 0 joined to the rim cycle 1..spokes.
inline Graph wheel(int spokes) {
  std::vector<Edge> edges;
  for (int i = 1; i <= spokes; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i == spokes ? 1 : i + 1);
  }
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  return Graph(spokes + 1, edges);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

inline std::vector<Vertex> random_centers(std::mt19937_64& rng, int n,
                                          double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Vertex> out;
  for (int v = 0; v < n; ++v) {
    if (coin(rng)) out.push_back(v);
  }
  return out;
}

inline std::vector<Vertex> all_centers(int n) {
  std::vector<Vertex> out;
  for (int v = 0; v < n; ++v) out.push_back(v);
  return out;
}

inline oracle::SmallGraph to_small(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  return oracle::SmallGraph(g.order(), {edges.begin(), edges.end()});
}

inline oracle::Mask to_mask(const VertexSet& s) {
  oracle::Mask m = 0;
  for (Vertex v : s) m |= oracle::bit(v);
  return m;
}

inline std::vector<oracle::Mask> concept_masks(const nctd::ConceptClass& b) {
  std::vector<oracle::Mask> out;
  for (int i = 0; i < b.size(); ++i) out.push_back(to_mask(b.concept_set(i)));
  return out;
}

inline std::vector<oracle::Mask> map_masks(const nctd::ConceptClass& b,
                                           const nctd::TeachingMap& t) {
  std::vector<oracle::Mask> out;
  for (int i = 0; i < b.size(); ++i) {
    out.push_back(to_mask(t.at(b.canonical_center(i))));
  }
  return out;
}

}  // namespace fixtures
