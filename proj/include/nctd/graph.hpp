#pragma once

#include <utility>
#include <vector>

#include "nctd/vertex_set.hpp"

namespace nctd {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1, stored as bitset adjacency
// rows. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws InputError on self-loops, duplicate edges or out-of-range ids.
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int edge_count() const { return m_; }

  const VertexSet& neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }

  // Edges (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  VertexSet empty_set() const { return VertexSet(static_cast<std::size_t>(n_)); }
  VertexSet all_vertices() const {
    return VertexSet::full(static_cast<std::size_t>(n_));
  }

  // Subgraph induced by `keep`, renumbered in increasing id order.
  // `new_to_old[i]` is the original id of new vertex i.
  Graph induced(const VertexSet& keep, std::vector<Vertex>* new_to_old) const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

// N[v] = N(v) + v.
VertexSet closed_neighborhood(const Graph& g, Vertex v);

// Partition of `domain` by equality of open neighborhoods. Blocks are listed
// by their smallest member.
std::vector<VertexSet> false_twin_classes(const Graph& g,
                                          const VertexSet& domain);

// Both endpoints of a greedy maximal matching (edges scanned in lexicographic
// order). At most twice the optimum.
VertexSet vertex_cover_2approx(const Graph& g);

// Drops cover vertices whose whole neighborhood is already covered, highest
// id first. The result is still a cover and never larger than the input.
VertexSet minimalize_cover(const Graph& g, const VertexSet& cover);

bool is_vertex_cover(const Graph& g, const VertexSet& x);

// Connected components of g - x, ordered by smallest member.
std::vector<VertexSet> components_after_removal(const Graph& g,
                                                const VertexSet& x);

// Connected components of the subgraph induced by `within`.
std::vector<VertexSet> components_within(const Graph& g,
                                         const VertexSet& within);

}  // namespace nctd
