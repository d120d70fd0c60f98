#pragma once

#include <vector>

#include "nctd/teaching.hpp"

namespace nctd {

// Canonical form of a connected vertex set A hanging off a separator X.
// Each vertex of A is labeled by its neighbors in X and by whether its
// closed neighborhood is a concept. Two sets get equal codes iff some
// bijection preserves internal edges and labels; matching positions of
// `order` give such a bijection.
struct ComponentSignature {
  std::vector<int> code;
  std::vector<Vertex> order;  // vertices of A in canonical position

  friend bool operator==(const ComponentSignature& a,
                         const ComponentSignature& b) {
    return a.code == b.code;
  }
  friend bool operator<(const ComponentSignature& a,
                        const ComponentSignature& b) {
    return a.code < b.code;
  }
};

inline constexpr int kDefaultSignatureCap = 12;

// Color refinement with individualization; throws ResourceLimitError when
// |A| exceeds `cap`.
ComponentSignature component_signature(const Graph& g, const VertexSet& a,
                                       const VertexSet& x,
                                       const ConceptClass& b,
                                       int cap = kDefaultSignatureCap);

}  // namespace nctd
