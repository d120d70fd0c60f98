#pragma once

#include <cstdint>
#include <vector>

#include "nctd/graph.hpp"

namespace nctd {

// Rooted forest over the vertex set of a graph. parent(v) == -1 marks a root.
class RootedForest {
 public:
  RootedForest() = default;
  // Throws InputError if `parent` contains a cycle or an out-of-range id.
  explicit RootedForest(std::vector<Vertex> parent);

  int size() const { return static_cast<int>(parent_.size()); }
  Vertex parent(Vertex v) const { return parent_[v]; }
  const std::vector<Vertex>& parents() const { return parent_; }
  const std::vector<Vertex>& roots() const { return roots_; }
  const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }

  // Roots have depth 1.
  int depth(Vertex v) const { return depth_[v]; }
  // Vertex count of the longest root-to-leaf path; 0 for the empty forest.
  int height() const { return height_; }

  // v and all its ancestors.
  VertexSet ancestors_inclusive(Vertex v) const;
  // v and all its descendants.
  VertexSet subtree(Vertex v) const;
  bool is_ancestor(Vertex a, Vertex v) const;

  // Every edge of g joins an ancestor-descendant pair and the vertex sets
  // agree.
  bool is_decomposition_of(const Graph& g) const;

 private:
  std::vector<Vertex> parent_;
  std::vector<Vertex> roots_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<int> depth_;
  int height_ = 0;
};

struct TreedepthOptions {
  // Largest connected component handled by the exact search.
  int max_component_size = 64;
  // Search states explored before giving up with ResourceLimitError.
  std::uint64_t node_limit = 20'000'000;
};

// Minimum-height treedepth decomposition, computed component by component.
// Throws ResourceLimitError when a component exceeds the configured caps.
RootedForest treedepth_decomposition(const Graph& g,
                                     const TreedepthOptions& options = {});

}  // namespace nctd
