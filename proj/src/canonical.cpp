#include "nctd/canonical.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "nctd/errors.hpp"

namespace nctd {

namespace {

class Canonizer {
 public:
  Canonizer(std::vector<std::vector<int>> labels,
            std::vector<std::vector<bool>> adj)
      : labels_(std::move(labels)), adj_(std::move(adj)) {}

  ComponentSignature run(const std::vector<Vertex>& vertices) {
    const int t = static_cast<int>(labels_.size());
    std::vector<int> colors(static_cast<std::size_t>(t));
    std::vector<std::vector<int>> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < t; ++v) {
      colors[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), labels_[v]) -
          sorted.begin());
    }
    search(colors);
    ComponentSignature out;
    out.code = std::move(best_code_);
    for (int local : best_order_) out.order.push_back(vertices[local]);
    return out;
  }

 private:
  int size() const { return static_cast<int>(labels_.size()); }

  // Splits color classes by the multiset of neighbor colors until stable.
  // New colors are ranks of (old color, neighbor colors), so they depend only
  // on the labeled structure, never on input ids.
  std::vector<int> refine(std::vector<int> colors) const {
    const int t = size();
    int classes = -1;
    while (true) {
      std::vector<std::pair<int, std::vector<int>>> keys(
          static_cast<std::size_t>(t));
      for (int v = 0; v < t; ++v) {
        keys[v].first = colors[v];
        for (int w = 0; w < t; ++w) {
          if (adj_[v][w]) keys[v].second.push_back(colors[w]);
        }
        std::sort(keys[v].second.begin(), keys[v].second.end());
      }
      auto distinct = keys;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()),
                     distinct.end());
      for (int v = 0; v < t; ++v) {
        colors[v] = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), keys[v]) -
            distinct.begin());
      }
      const int now = static_cast<int>(distinct.size());
      if (now == classes) return colors;
      classes = now;
    }
  }

  bool twins(int u, int w) const {
    for (int z = 0; z < size(); ++z) {
      if (z != u && z != w && adj_[u][z] != adj_[w][z]) return false;
    }
    return true;
  }

  void search(std::vector<int> colors) {
    colors = refine(std::move(colors));
    const int t = size();
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < t; ++v) cells[colors[v]].push_back(v);

    const std::vector<int>* target = nullptr;
    for (const auto& [color, members] : cells) {
      if (members.size() > 1) {
        target = &members;
        break;
      }
    }
    if (target == nullptr) {
      std::vector<int> order(static_cast<std::size_t>(t));
      for (int v = 0; v < t; ++v) order[colors[v]] = v;
      consider(order);
      return;
    }

    // Swapping two twins in the same cell is an automorphism that fixes the
    // coloring, so one representative per twin group suffices.
    std::vector<int> tried;
    for (int v : *target) {
      bool redundant = false;
      for (int u : tried) redundant = redundant || twins(u, v);
      if (redundant) continue;
      tried.push_back(v);
      std::vector<int> next(static_cast<std::size_t>(t));
      for (int u = 0; u < t; ++u) {
        const bool demoted = colors[u] == colors[v] && u != v;
        next[u] = 2 * colors[u] + (demoted ? 1 : 0);
      }
      search(std::move(next));
    }
  }

  void consider(const std::vector<int>& order) {
    const int t = size();
    std::vector<int> code{t};
    for (int v : order) {
      code.insert(code.end(), labels_[v].begin(), labels_[v].end());
    }
    for (int i = 0; i < t; ++i) {
      for (int j = i + 1; j < t; ++j) code.push_back(adj_[order[i]][order[j]]);
    }
    if (!have_best_ || code < best_code_) {
      have_best_ = true;
      best_code_ = std::move(code);
      best_order_ = order;
    }
  }

  std::vector<std::vector<int>> labels_;
  std::vector<std::vector<bool>> adj_;
  bool have_best_ = false;
  std::vector<int> best_code_;
  std::vector<int> best_order_;
};

}  // namespace

ComponentSignature component_signature(const Graph& g, const VertexSet& a,
                                       const VertexSet& x,
                                       const ConceptClass& b, int cap) {
  const std::vector<Vertex> vertices = a.members();
  const int t = static_cast<int>(vertices.size());
  if (t > cap) {
    throw ResourceLimitError("component of " + std::to_string(t) +
                             " vertices exceeds the canonical-form cap of " +
                             std::to_string(cap));
  }
  std::vector<std::vector<int>> labels(static_cast<std::size_t>(t));
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(t),
                                     std::vector<bool>(static_cast<std::size_t>(t)));
  for (int i = 0; i < t; ++i) {
    const Vertex v = vertices[i];
    const VertexSet attached = g.neighbors(v) & x;
    labels[i].push_back(b.contains_set(closed_neighborhood(g, v)) ? 1 : 0);
    labels[i].push_back(static_cast<int>(attached.size()));
    for (Vertex w : attached) labels[i].push_back(w);
    for (int j = 0; j < t; ++j) adj[i][j] = g.adjacent(v, vertices[j]);
  }
  return Canonizer(std::move(labels), std::move(adj)).run(vertices);
}

}  // namespace nctd
