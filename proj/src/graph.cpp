#include "nctd/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "nctd/errors.hpp"

namespace nctd {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw InputError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw InputError("self-loop at vertex " + std::to_string(u));
    }
    if (adj_[u].contains(v)) {
      throw InputError("duplicate edge " + std::to_string(u) + "-" +
                       std::to_string(v));
    }
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++m_;
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(n_) + ")");
  }
}

const VertexSet& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(const VertexSet& keep,
                     std::vector<Vertex>* new_to_old) const {
  std::vector<Vertex> old_ids = keep.members();
  std::vector<Vertex> old_to_new(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < old_ids.size(); ++i) {
    old_to_new[old_ids[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> sub_edges;
  for (const auto& [u, v] : edges()) {
    if (old_to_new[u] >= 0 && old_to_new[v] >= 0) {
      sub_edges.emplace_back(old_to_new[u], old_to_new[v]);
    }
  }
  if (new_to_old != nullptr) *new_to_old = old_ids;
  return Graph(static_cast<int>(old_ids.size()), sub_edges);
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet s = g.neighbors(v);
  s.insert(v);
  return s;
}

std::vector<VertexSet> false_twin_classes(const Graph& g,
                                          const VertexSet& domain) {
  // Keyed by the open neighborhood; blocks come out ordered by first member
  // because members are visited in increasing order.
  std::vector<VertexSet> blocks;
  std::map<std::vector<Vertex>, std::size_t> index;
  for (Vertex v : domain) {
    auto key = g.neighbors(v).members();
    auto [it, inserted] = index.emplace(std::move(key), blocks.size());
    if (inserted) blocks.push_back(g.empty_set());
    blocks[it->second].insert(v);
  }
  return blocks;
}

VertexSet vertex_cover_2approx(const Graph& g) {
  VertexSet cover = g.empty_set();
  for (const auto& [u, v] : g.edges()) {
    if (!cover.contains(u) && !cover.contains(v)) {
      cover.insert(u);
      cover.insert(v);
    }
  }
  return cover;
}

VertexSet minimalize_cover(const Graph& g, const VertexSet& cover) {
  VertexSet out = cover;
  auto members = cover.members();
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    if (g.neighbors(*it).is_subset_of(out)) out.erase(*it);
  }
  return out;
}

bool is_vertex_cover(const Graph& g, const VertexSet& x) {
  const auto edges = g.edges();
  return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
    return x.contains(e.first) || x.contains(e.second);
  });
}

std::vector<VertexSet> components_within(const Graph& g,
                                         const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet unseen = within;
  while (!unseen.empty()) {
    Vertex root = unseen.first();
    VertexSet comp = g.empty_set();
    VertexSet frontier = g.empty_set();
    frontier.insert(root);
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next = g.empty_set();
      for (Vertex v : frontier) next |= g.neighbors(v);
      next &= within;
      next -= comp;
      frontier = std::move(next);
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components_after_removal(const Graph& g,
                                                const VertexSet& x) {
  return components_within(g, g.all_vertices() - x);
}

}  // namespace nctd
