#pragma once

// Reference implementations used only by tests. They restate definitions
// directly on 64-bit masks and share no code with the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask{1} << i; }

struct SmallGraph {
  int n = 0;
  std::vector<Mask> adj;  // open neighborhoods

  SmallGraph(int order, const std::vector<std::pair<int, int>>& edges)
      : n(order), adj(static_cast<std::size_t>(order), 0) {
    for (auto [u, v] : edges) {
      adj[u] |= bit(v);
      adj[v] |= bit(u);
    }
  }
  Mask closed(int v) const { return adj[v] | bit(v); }
  Mask all() const { return n == 64 ? ~Mask{0} : bit(n) - 1; }
};

// Distinct closed neighborhoods of the given centers, in first-seen order.
inline std::vector<Mask> concepts_of(const SmallGraph& g,
                                     const std::vector<int>& centers) {
  std::vector<Mask> out;
  for (int c : centers) {
    Mask s = g.closed(c);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

// Literal reading of the definition: for every pair of distinct concepts
// there is an example in T(C) or T(C') lying in exactly one of them.
inline bool is_nctm(const std::vector<Mask>& concepts,
                    const std::vector<Mask>& teach, bool positive) {
  const std::size_t m = concepts.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (positive && (teach[i] & ~concepts[i]) != 0) return false;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      bool found = false;
      for (int w = 0; w < 64 && !found; ++w) {
        if (((teach[i] | teach[j]) & bit(w)) == 0) continue;
        const bool in_i = (concepts[i] & bit(w)) != 0;
        const bool in_j = (concepts[j] & bit(w)) != 0;
        found = in_i != in_j;
      }
      if (!found) return false;
    }
  }
  return true;
}

// All subsets of `pool` with exactly `r` members.
inline std::vector<Mask> subsets_of_size(Mask pool, int r) {
  std::vector<Mask> out;
  std::function<void(Mask, Mask, int)> rec = [&](Mask rest, Mask acc,
                                                 int need) {
    if (need == 0) {
      out.push_back(acc);
      return;
    }
    if (std::popcount(rest) < need) return;
    const Mask low = rest & (~rest + 1);
    rec(rest & ~low, acc | low, need - 1);
    rec(rest & ~low, acc, need);
  };
  rec(pool, 0, r);
  return out;
}

// Exhaustive search for an NCTM of size <= k. Only uses that enlarging a
// teaching set keeps a map non-clashing, so each concept gets exactly
// min(k, |pool|) examples; assignments are checked pairwise as they are made.
inline bool exists_nctm(const std::vector<Mask>& concepts, Mask universe,
                        int k, bool positive,
                        std::vector<Mask>* witness = nullptr) {
  const std::size_t m = concepts.size();
  std::vector<std::vector<Mask>> options(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Mask pool = positive ? concepts[i] : universe;
    options[i] = subsets_of_size(pool, std::min(k, std::popcount(pool)));
  }
  std::vector<Mask> teach(m, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == m) return true;
    for (Mask t : options[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = ((t | teach[j]) & (concepts[i] ^ concepts[j])) != 0;
      }
      if (!ok) continue;
      teach[i] = t;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  const bool found = rec(0);
  if (found && witness != nullptr) *witness = teach;
  return found;
}

inline int dimension(const std::vector<Mask>& concepts, Mask universe,
                     bool positive) {
  for (int k = 0;; ++k) {
    if (exists_nctm(concepts, universe, k, positive)) return k;
  }
}

// Height of the elimination forest obtained by always rooting a component at
// its earliest vertex in `order`.
inline int forest_height(const SmallGraph& g, Mask s,
                         const std::vector<int>& order) {
  int best = 0;
  while (s != 0) {
    Mask comp = s & (~s + 1);
    for (bool grew = true; grew;) {
      Mask next = comp;
      for (int v = 0; v < g.n; ++v) {
        if (comp & bit(v)) next |= g.adj[v] & s;
      }
      grew = next != comp;
      comp = next;
    }
    s &= ~comp;
    int root = -1;
    for (int v : order) {
      if (comp & bit(v)) {
        root = v;
        break;
      }
    }
    best = std::max(best, 1 + forest_height(g, comp & ~bit(root), order));
  }
  return best;
}

// Treedepth as the minimum over all vertex orders (use for n <= 8).
inline int treedepth(const SmallGraph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.n));
  std::iota(order.begin(), order.end(), 0);
  int best = g.n;
  do {
    best = std::min(best, forest_height(g, g.all(), order));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

inline bool connected(int n, const std::vector<Mask>& adj) {
  if (n == 0) return true;
  Mask seen = 1, frontier = 1;
  while (frontier != 0) {
    Mask next = 0;
    for (int v = 0; v < n; ++v) {
      if (frontier & bit(v)) next |= adj[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == bit(n) - 1;
}

// One representative edge list per isomorphism class of connected graphs
// on n vertices (n <= 6), chosen as the lexicographically least relabeling.
inline std::vector<std::vector<std::pair<int, int>>> connected_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  const std::size_t e = slots.size();
  std::set<std::uint32_t> seen;
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (std::uint32_t code = 0; code < (std::uint32_t{1} << e); ++code) {
    std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
    for (std::size_t s = 0; s < e; ++s) {
      if (code & (1u << s)) {
        adj[slots[s].first] |= bit(slots[s].second);
        adj[slots[s].second] |= bit(slots[s].first);
      }
    }
    if (!connected(n, adj)) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t canon = ~std::uint32_t{0};
    do {
      std::uint32_t c = 0;
      for (std::size_t s = 0; s < e; ++s) {
        const auto [u, v] = slots[s];
        if (adj[perm[u]] & bit(perm[v])) c |= 1u << s;
      }
      canon = std::min(canon, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!seen.insert(canon).second) continue;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t s = 0; s < e; ++s) {
      if (canon & (1u << s)) edges.push_back(slots[s]);
    }
    out.push_back(std::move(edges));
  }
  return out;
}

// Literal encoding: variable i (1-based) positive as +i, negative as -i.
inline bool satisfiable(int n, const std::vector<std::vector<int>>& clauses) {
  for (std::uint32_t a = 0; a < (1u << n); ++a) {
    bool all = true;
    for (const auto& clause : clauses) {
      bool sat = false;
      for (int lit : clause) {
        const bool value = (a >> (std::abs(lit) - 1)) & 1u;
        sat = sat || (lit > 0 ? value : !value);
      }
      all = all && sat;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace oracle
