#include "nctd/treedepth.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include "nctd/errors.hpp"

namespace nctd {

RootedForest::RootedForest(std::vector<Vertex> parent)
    : parent_(std::move(parent)) {
  const int n = size();
  children_.assign(static_cast<std::size_t>(n), {});
  depth_.assign(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    Vertex p = parent_[v];
    if (p == -1) {
      roots_.push_back(v);
    } else if (p < 0 || p >= n || p == v) {
      throw InputError("invalid parent " + std::to_string(p) + " for vertex " +
                       std::to_string(v));
    } else {
      children_[p].push_back(v);
    }
  }
  // Depths by walking down from the roots; anything left unvisited sits on
  // a cycle.
  std::vector<Vertex> stack(roots_.begin(), roots_.end());
  for (Vertex r : roots_) depth_[r] = 1;
  int visited = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++visited;
    height_ = std::max(height_, depth_[v]);
    for (Vertex c : children_[v]) {
      depth_[c] = depth_[v] + 1;
      stack.push_back(c);
    }
  }
  if (visited != n) throw InputError("parent relation contains a cycle");
}

VertexSet RootedForest::ancestors_inclusive(Vertex v) const {
  VertexSet out(static_cast<std::size_t>(size()));
  for (Vertex a = v; a != -1; a = parent_[a]) out.insert(a);
  return out;
}

VertexSet RootedForest::subtree(Vertex v) const {
  VertexSet out(static_cast<std::size_t>(size()));
  std::vector<Vertex> stack{v};
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    out.insert(u);
    for (Vertex c : children_[u]) stack.push_back(c);
  }
  return out;
}

bool RootedForest::is_ancestor(Vertex a, Vertex v) const {
  for (Vertex x = v; x != -1; x = parent_[x]) {
    if (x == a) return true;
  }
  return false;
}

bool RootedForest::is_decomposition_of(const Graph& g) const {
  if (g.order() != size()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (!is_ancestor(u, v) && !is_ancestor(v, u)) return false;
  }
  return true;
}

namespace {

using Mask = std::uint64_t;

// Exact treedepth of one connected component, using bitmasks over local ids.
// decide(S, d) answers "td(G[S]) <= d" for connected S by trying every root
// and recursing into the components of S minus the root. Memoized per S.
class ComponentSolver {
 public:
  ComponentSolver(std::vector<Mask> adj, std::uint64_t node_limit)
      : adj_(std::move(adj)), node_limit_(node_limit) {}

  int solve(Mask all) {
    int d = std::max(1, degeneracy(all) + 1);
    while (!decide(all, d)) ++d;
    return d;
  }

  // parent_local[i] receives the local parent id (-1 for the root).
  void build(Mask s, int bound, int parent, std::vector<int>& parent_local) {
    auto it = memo_.find(s);
    int root;
    if (it != memo_.end() && it->second.ok_at <= bound) {
      root = it->second.root;
    } else {
      // Only reached below a "|S| <= d" shortcut, where any root works.
      root = std::countr_zero(s);
    }
    parent_local[root] = parent;
    for (Mask comp : components(s & ~bit(root))) {
      build(comp, bound - 1, root, parent_local);
    }
  }

 private:
  struct Entry {
    int fail_upto = 0;   // td(S) > fail_upto
    int ok_at = 1 << 20; // td(S) <= ok_at, witnessed by `root`
    int root = -1;
  };

  static Mask bit(int i) { return Mask{1} << i; }

  std::vector<Mask> components(Mask s) const {
    std::vector<Mask> out;
    while (s != 0) {
      Mask comp = s & (~s + 1);
      Mask frontier = comp;
      while (frontier != 0) {
        Mask next = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) {
          next |= adj_[std::countr_zero(f)];
        }
        next &= s & ~comp;
        comp |= next;
        frontier = next;
      }
      out.push_back(comp);
      s &= ~comp;
    }
    return out;
  }

  int degree_in(int v, Mask s) const { return std::popcount(adj_[v] & s); }

  int degeneracy(Mask s) const {
    int best = 0;
    while (s != 0) {
      int argmin = -1, mindeg = 1 << 20;
      for (Mask f = s; f != 0; f &= f - 1) {
        int v = std::countr_zero(f);
        int d = degree_in(v, s);
        if (d < mindeg) {
          mindeg = d;
          argmin = v;
        }
      }
      best = std::max(best, mindeg);
      s &= ~bit(argmin);
    }
    return best;
  }

  bool decide(Mask s, int d) {
    Entry& e = memo_[s];
    if (d <= e.fail_upto) return false;
    if (d >= e.ok_at) return true;
    if (++nodes_ > node_limit_) {
      throw ResourceLimitError("exact treedepth search exceeded " +
                               std::to_string(node_limit_) + " states");
    }
    const int size = std::popcount(s);
    if (size <= d) {
      // A path through S has height |S|.
      e.ok_at = size;
      e.root = std::countr_zero(s);
      return true;
    }
    if (d == 1 || degeneracy(s) + 1 > d) {
      e.fail_upto = d;
      return false;
    }

    std::vector<int> candidates;
    for (Mask f = s; f != 0; f &= f - 1) {
      int v = std::countr_zero(f);
      if (degree_in(v, s) == size - 1) {
        // A universal vertex can always be the root.
        candidates.assign(1, v);
        break;
      }
      candidates.push_back(v);
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      return degree_in(a, s) > degree_in(b, s);
    });

    for (int v : candidates) {
      bool ok = true;
      for (Mask comp : components(s & ~bit(v))) {
        if (!decide(comp, d - 1)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        // unordered_map references survive the inserts made while recursing.
        e.ok_at = d;
        e.root = v;
        return true;
      }
    }
    e.fail_upto = d;
    return false;
  }

  std::vector<Mask> adj_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<Mask, Entry> memo_;
};

}  // namespace

RootedForest treedepth_decomposition(const Graph& g,
                                     const TreedepthOptions& options) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  const int cap = std::min(options.max_component_size, 64);
  for (const VertexSet& comp : components_within(g, g.all_vertices())) {
    std::vector<Vertex> local_to_global = comp.members();
    const int k = static_cast<int>(local_to_global.size());
    if (k > cap) {
      throw ResourceLimitError("component of " + std::to_string(k) +
                               " vertices too large for exact treedepth (cap " +
                               std::to_string(cap) + ")");
    }
    std::vector<int> global_to_local(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < k; ++i) global_to_local[local_to_global[i]] = i;
    std::vector<Mask> adj(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
      for (Vertex w : g.neighbors(local_to_global[i])) {
        adj[i] |= Mask{1} << global_to_local[w];
      }
    }
    const Mask all = k == 64 ? ~Mask{0} : (Mask{1} << k) - 1;
    ComponentSolver solver(std::move(adj), options.node_limit);
    const int height = solver.solve(all);
    std::vector<int> parent_local(static_cast<std::size_t>(k), -1);
    solver.build(all, height, -1, parent_local);
    for (int i = 0; i < k; ++i) {
      parent[local_to_global[i]] =
          parent_local[i] == -1 ? -1 : local_to_global[parent_local[i]];
    }
  }
  return RootedForest(std::move(parent));
}

}  // namespace nctd
