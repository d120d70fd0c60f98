#include "nctd/exact_solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

#include "nctd/errors.hpp"

namespace nctd {

const char* to_string(Decision decision) {
  switch (decision) {
    case Decision::kYes:
      return "yes";
    case Decision::kNo:
      return "no";
    case Decision::kResourceExhausted:
      return "resource-exhausted";
  }
  return "?";
}

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// Search space shared read-only by all workers.
//
// Two reductions keep it small without changing the answer:
//  * Examples are only drawn from vertices that distinguish at least one
//    pair involving the concept, and among vertices with identical
//    membership across all concepts only the smallest id is kept.
//  * Adding an example never breaks the non-clashing condition (nor
//    positivity, as candidates are drawn from inside the concept), so each
//    concept only needs sets of exactly min(k, |pool|) examples.
// Returned witnesses are trimmed afterwards.
struct Problem {
  int concepts = 0;
  std::size_t universe = 0;
  std::vector<VertexSet> sets;
  std::vector<std::vector<VertexSet>> diff;         // diff[i][j] = C_i ^ C_j
  std::vector<std::vector<VertexSet>> candidates;   // per concept
  std::vector<std::vector<Bits>> cand_hits;         // [i][a] over concepts j
  std::vector<std::vector<Bits>> hits;              // [j][i] over candidates of j
  std::vector<int> rank;                            // static tie-break order
  bool exhausted = false;                           // candidate_limit hit
};

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t r,
                              std::uint64_t cap) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    result = result * (n - r + i) / i;
    if (result > cap) return cap + 1;
  }
  return result;
}

void append_combinations(const std::vector<Vertex>& pool, std::size_t r,
                         std::size_t universe, std::vector<VertexSet>& out) {
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    VertexSet s(universe);
    for (std::size_t i : idx) s.insert(pool[i]);
    out.push_back(std::move(s));
    // Advance to the next r-subset in lexicographic order.
    std::size_t pos = r;
    while (pos > 0 && idx[pos - 1] == pool.size() - r + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < r; ++i) idx[i] = idx[i - 1] + 1;
  }
}

Problem build_problem(const Instance& inst, const SolverOptions& options) {
  const ConceptClass& b = inst.concepts;
  Problem p;
  p.concepts = b.size();
  p.universe = static_cast<std::size_t>(b.universe());
  for (int i = 0; i < p.concepts; ++i) p.sets.push_back(b.concept_set(i));

  p.diff.assign(p.concepts, std::vector<VertexSet>(p.concepts));
  for (int i = 0; i < p.concepts; ++i) {
    for (int j = 0; j < p.concepts; ++j) {
      p.diff[i][j] = p.sets[i] ^ p.sets[j];
    }
  }

  // One representative per membership column.
  VertexSet representatives(p.universe);
  std::map<std::vector<bool>, Vertex> seen;
  for (Vertex w = 0; w < static_cast<Vertex>(p.universe); ++w) {
    std::vector<bool> column(static_cast<std::size_t>(p.concepts));
    for (int i = 0; i < p.concepts; ++i) column[i] = p.sets[i].contains(w);
    if (seen.emplace(std::move(column), w).second) representatives.insert(w);
  }

  const std::uint64_t cap = options.candidate_limit;
  std::uint64_t total = 0;
  p.candidates.resize(p.concepts);
  for (int i = 0; i < p.concepts; ++i) {
    VertexSet useful(p.universe);
    for (int j = 0; j < p.concepts; ++j) {
      if (j != i) useful |= p.diff[i][j];
    }
    useful &= representatives;
    if (inst.variant == Variant::kPositive) useful &= p.sets[i];
    std::vector<Vertex> pool = useful.members();
    const std::size_t r =
        std::min(pool.size(), static_cast<std::size_t>(std::max(inst.k, 0)));
    total += binomial_capped(pool.size(), r, cap);
    if (total > cap) {
      p.exhausted = true;
      return p;
    }
    append_combinations(pool, r, p.universe, p.candidates[i]);
  }

  p.cand_hits.resize(p.concepts);
  p.hits.assign(p.concepts, std::vector<Bits>(p.concepts));
  for (int j = 0; j < p.concepts; ++j) {
    const std::size_t count = p.candidates[j].size();
    p.cand_hits[j].assign(count, Bits(static_cast<std::size_t>(p.concepts)));
    for (int i = 0; i < p.concepts; ++i) p.hits[j][i].resize(count);
    for (std::size_t a = 0; a < count; ++a) {
      for (int i = 0; i < p.concepts; ++i) {
        if (i != j && p.candidates[j][a].intersects(p.diff[j][i])) {
          p.cand_hits[j][a].set(static_cast<std::size_t>(i));
          p.hits[j][i].set(a);
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(p.concepts));
  for (int i = 0; i < p.concepts; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int c) {
    return p.sets[a].size() > p.sets[c].size();
  });
  p.rank.assign(p.concepts, 0);
  for (int pos = 0; pos < p.concepts; ++pos) p.rank[order[pos]] = pos;
  return p;
}

struct Shared {
  std::uint64_t node_limit = 0;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> exhausted{false};
};

// Depth-first assignment with forward checking: every unassigned concept
// keeps a bitset of candidates still compatible with all assigned ones.
class Search {
 public:
  Search(const Problem& p, Shared& shared, BranchOrder order)
      : p_(p), shared_(shared), order_(order) {
    domain_.resize(p.concepts);
    for (int i = 0; i < p.concepts; ++i) {
      domain_[i].resize(p.candidates[i].size());
      domain_[i].set();
    }
    assigned_.assign(p.concepts, -1);
    unassigned_.resize(static_cast<std::size_t>(p.concepts));
    unassigned_.set();
  }

  int pick() const {
    int best = -1;
    std::size_t best_count = 0;
    for (auto i = unassigned_.find_first(); i != Bits::npos;
         i = unassigned_.find_next(i)) {
      const int c = static_cast<int>(i);
      if (order_ == BranchOrder::kDescendingDegree) {
        if (best < 0 || p_.rank[c] < p_.rank[best]) best = c;
        continue;
      }
      const std::size_t count = domain_[c].count();
      if (best < 0 || count < best_count ||
          (count == best_count && p_.rank[c] < p_.rank[best])) {
        best = c;
        best_count = count;
      }
    }
    return best;
  }

  const Bits& domain(int i) const { return domain_[i]; }

  // Assigns candidate a to concept i and filters the other domains. Returns
  // false on a wipe-out; undo() must be called in either case.
  bool assign(int i, std::size_t a) {
    marks_.push_back(trail_.size());
    assigned_[i] = static_cast<int>(a);
    unassigned_.reset(static_cast<std::size_t>(i));
    Bits affected = unassigned_ - p_.cand_hits[i][a];
    for (auto j = affected.find_first(); j != Bits::npos;
         j = affected.find_next(j)) {
      Bits narrowed = domain_[j] & p_.hits[j][i];
      const bool empty = narrowed.none();
      trail_.emplace_back(static_cast<int>(j), std::move(domain_[j]));
      domain_[j] = std::move(narrowed);
      if (empty) return false;
    }
    return propagate();
  }

  // Pairwise consistency among unassigned concepts: when no remaining
  // candidate of l separates l from j, j has to do it. Repeats until stable.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto l = unassigned_.find_first(); l != Bits::npos;
           l = unassigned_.find_next(l)) {
        for (auto j = unassigned_.find_first(); j != Bits::npos;
             j = unassigned_.find_next(j)) {
          if (j == l || domain_[l].intersects(p_.hits[l][j])) continue;
          if (domain_[j].is_subset_of(p_.hits[j][l])) continue;
          Bits narrowed = domain_[j] & p_.hits[j][l];
          const bool empty = narrowed.none();
          trail_.emplace_back(static_cast<int>(j), std::move(domain_[j]));
          domain_[j] = std::move(narrowed);
          if (empty) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  void undo(int i) {
    const std::size_t mark = marks_.back();
    marks_.pop_back();
    while (trail_.size() > mark) {
      domain_[trail_.back().first] = std::move(trail_.back().second);
      trail_.pop_back();
    }
    assigned_[i] = -1;
    unassigned_.set(static_cast<std::size_t>(i));
  }

  bool dfs() {
    const int i = pick();
    if (i < 0) return true;
    for (std::size_t a : ordered(i)) {
      if (!tick()) return false;
      const bool consistent = assign(i, a);
      if (consistent && dfs()) return true;
      undo(i);
      if (shared_.stop.load(std::memory_order_relaxed)) return false;
    }
    return false;
  }

  // Candidates of concept i, those separating it from more unassigned
  // concepts first; ties by candidate index.
  std::vector<std::size_t> ordered(int i) const {
    std::vector<std::pair<std::size_t, std::size_t>> keyed;
    for (auto a = domain_[i].find_first(); a != Bits::npos;
         a = domain_[i].find_next(a)) {
      keyed.emplace_back(p_.concepts - (p_.cand_hits[i][a] & unassigned_).count(), a);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::size_t> out;
    for (const auto& [key, a] : keyed) out.push_back(a);
    return out;
  }

  bool tick() {
    if (shared_.stop.load(std::memory_order_relaxed)) return false;
    const std::uint64_t n = shared_.nodes.fetch_add(1) + 1;
    if (shared_.node_limit != 0 && n > shared_.node_limit) {
      shared_.exhausted = true;
      shared_.stop = true;
      return false;
    }
    return true;
  }

  std::vector<VertexSet> assignment() const {
    std::vector<VertexSet> out;
    for (int i = 0; i < p_.concepts; ++i) {
      out.push_back(p_.candidates[i][static_cast<std::size_t>(assigned_[i])]);
    }
    return out;
  }

 private:
  const Problem& p_;
  Shared& shared_;
  BranchOrder order_;
  std::vector<Bits> domain_;
  std::vector<int> assigned_;
  Bits unassigned_;
  std::vector<std::pair<int, Bits>> trail_;
  std::vector<std::size_t> marks_;
};

// Drops examples that are not needed, concept by concept in index order and
// example by example in increasing id.
void trim(const Problem& p, std::vector<VertexSet>& sets) {
  for (int i = 0; i < p.concepts; ++i) {
    for (Vertex w : sets[i].members()) {
      VertexSet smaller = sets[i];
      smaller.erase(w);
      bool still_ok = true;
      for (int j = 0; j < p.concepts && still_ok; ++j) {
        if (j != i) still_ok = (smaller | sets[j]).intersects(p.diff[i][j]);
      }
      if (still_ok) sets[i] = std::move(smaller);
    }
  }
}

SolveResult run_search(const Instance& inst, const SolverOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  auto finish = [&](Decision d, std::uint64_t nodes) {
    result.decision = d;
    result.stats.nodes = nodes;
    result.stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
  };

  if (inst.k < 0) throw InputError("budget k must be non-negative");
  if (inst.concepts.universe() != inst.graph.order()) {
    throw InputError("concept class does not belong to the instance graph");
  }

  Problem p = build_problem(inst, options);
  if (p.exhausted) return finish(Decision::kResourceExhausted, 0);

  Shared shared;
  shared.node_limit = options.node_limit;
  std::optional<std::vector<VertexSet>> found;
  std::mutex found_mutex;

  const int threads = std::max(1, options.threads);
  if (threads == 1 || p.concepts == 0) {
    Search search(p, shared, options.order);
    if (search.propagate() && search.dfs()) found = search.assignment();
  } else {
    // Split the candidates of the first branching concept among workers.
    Search probe(p, shared, options.order);
    const bool consistent = probe.propagate();
    const int first = probe.pick();
    std::vector<std::size_t> branches;
    if (consistent && first >= 0) branches = probe.ordered(first);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        Search search(p, shared, options.order);
        search.propagate();
        while (!shared.stop) {
          const std::size_t b = next.fetch_add(1);
          if (b >= branches.size()) return;
          if (!search.tick()) return;
          const bool consistent = search.assign(first, branches[b]);
          if (consistent && search.dfs()) {
            std::lock_guard<std::mutex> lock(found_mutex);
            if (!found) found = search.assignment();
            shared.stop = true;
            return;
          }
          search.undo(first);
        }
      });
    }
    for (auto& t : workers) t.join();
  }

  if (found) {
    trim(p, *found);
    result.map = TeachingMap::from_indexed(inst.concepts, *found);
    return finish(Decision::kYes, shared.nodes);
  }
  if (shared.exhausted) return finish(Decision::kResourceExhausted, shared.nodes);
  return finish(Decision::kNo, shared.nodes);
}

}  // namespace

SolveResult solve_positive(const Instance& inst, const SolverOptions& options) {
  if (inst.variant != Variant::kPositive) {
    throw InputError("solve_positive needs a positive-variant instance");
  }
  return run_search(inst, options);
}

SolveResult solve_general(const Instance& inst, const SolverOptions& options) {
  if (inst.variant != Variant::kGeneral) {
    throw InputError("solve_general needs a general-variant instance");
  }
  return run_search(inst, options);
}

SolveResult solve(const Instance& inst, const SolverOptions& options) {
  return inst.variant == Variant::kPositive ? solve_positive(inst, options)
                                            : solve_general(inst, options);
}

DimensionResult nctd(const Graph& g, const ConceptClass& b, Variant variant,
                     const SolverOptions& options) {
  DimensionResult out;
  Instance inst{g, b, 0, variant};
  for (int k = 0;; ++k) {
    inst.k = k;
    SolveResult r = solve(inst, options);
    out.stats.nodes += r.stats.nodes;
    out.stats.elapsed_seconds += r.stats.elapsed_seconds;
    if (r.decision == Decision::kResourceExhausted) {
      throw ResourceLimitError("search budget exhausted at k = " +
                               std::to_string(k));
    }
    if (r.decision == Decision::kYes) {
      out.value = k;
      out.map = std::move(*r.map);
      return out;
    }
    // Every class has a map of size |V|; this guards against solver bugs.
    if (k > g.order()) {
      throw std::logic_error("no teaching map found up to k = |V|");
    }
  }
}

}  // namespace nctd
