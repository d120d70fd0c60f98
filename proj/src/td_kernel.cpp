#include "nctd/td_kernel.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "nctd/errors.hpp"

namespace nctd {

long long td_class_threshold(int context_size, int component_size,
                             const TdKernelOptions& options) {
  const int exponent = context_size + component_size;
  if (exponent > options.exponent_cap) return -1;
  return 1LL << (exponent + 1);
}

namespace {

// Cheap isomorphism invariant used to avoid canonizing small groups: size
// plus the sorted list of (concept flag, X-neighbors) labels.
using Bucket = std::pair<int, std::vector<std::vector<Vertex>>>;

class TdKernelizer {
 public:
  TdKernelizer(const Instance& inst, const TdKernelOptions& options)
      : inst_(inst), options_(options), alive_(inst.graph.all_vertices()) {}

  // Trims the classes among the components of G[alive & within] for
  // separator `context`.
  void reduce(Vertex node, const VertexSet& context, const VertexSet& within) {
    const Graph& g = inst_.graph;
    std::map<Bucket, std::vector<VertexSet>> buckets;
    for (VertexSet comp : components_within(g, within & alive_)) {
      Bucket key;
      key.first = static_cast<int>(comp.size());
      for (Vertex v : comp) {
        std::vector<Vertex> label{
            inst_.concepts.contains_set(closed_neighborhood(g, v)) ? 1 : 0};
        for (Vertex w : g.neighbors(v) & context) label.push_back(w);
        key.second.push_back(std::move(label));
      }
      std::sort(key.second.begin(), key.second.end());
      buckets[std::move(key)].push_back(std::move(comp));
    }

    for (auto& [key, comps] : buckets) {
      const long long threshold = td_class_threshold(
          static_cast<int>(context.size()), key.first, options_);
      if (threshold < 0 || static_cast<long long>(comps.size()) <= threshold) {
        continue;
      }
      std::map<std::vector<int>, std::vector<ComponentSignature>> classes;
      for (const VertexSet& comp : comps) {
        ComponentSignature sig = component_signature(
            g, comp, context, inst_.concepts, options_.signature_cap);
        classes[sig.code].push_back(std::move(sig));
      }
      for (auto& [code, members] : classes) {
        // Highest smallest-id member goes first.
        std::sort(members.begin(), members.end(),
                  [](const ComponentSignature& a, const ComponentSignature& b) {
                    return *std::min_element(a.order.begin(), a.order.end()) <
                           *std::min_element(b.order.begin(), b.order.end());
                  });
        while (static_cast<long long>(members.size()) > threshold) {
          ComponentSignature gone = std::move(members.back());
          members.pop_back();
          record(node, context, gone, members);
        }
      }
    }
  }

  TdKernelResult finish() {
    TdKernelResult out;
    Graph kernel_graph = inst_.graph.induced(alive_, &trace_.new_to_old);
    std::vector<Vertex> old_to_new(static_cast<std::size_t>(inst_.graph.order()), -1);
    for (std::size_t i = 0; i < trace_.new_to_old.size(); ++i) {
      old_to_new[trace_.new_to_old[i]] = static_cast<Vertex>(i);
    }
    std::vector<Vertex> centers;
    for (Vertex c : inst_.concepts.centers()) {
      if (old_to_new[c] >= 0) centers.push_back(old_to_new[c]);
    }
    ConceptClass concepts(kernel_graph, centers);
    out.kernel = Instance{std::move(kernel_graph), std::move(concepts), inst_.k,
                          inst_.variant};
    out.trace = std::move(trace_);
    return out;
  }

 private:
  void record(Vertex node, const VertexSet& context,
              const ComponentSignature& gone,
              const std::vector<ComponentSignature>& survivors) {
    TdDeletion d;
    d.node = node;
    d.context = context;
    d.removed = gone.order;
    VertexSet removed = inst_.graph.empty_set();
    for (Vertex v : gone.order) removed.insert(v);
    for (const auto& [u, v] : inst_.graph.edges()) {
      if (removed.contains(u) && removed.contains(v)) {
        d.removed_edges.emplace_back(u, v);
      }
    }
    for (const auto& s : survivors) d.survivors.push_back(s.order);
    alive_ -= removed;
    trace_.deletions.push_back(std::move(d));
  }

  const Instance& inst_;
  TdKernelOptions options_;
  VertexSet alive_;
  TdKernelTrace trace_;
};

}  // namespace

TdKernelResult kernelize_td(const Instance& inst,
                            const RootedForest& decomposition,
                            const TdKernelOptions& options) {
  if (inst.variant != Variant::kPositive) {
    throw InputError("the treedepth kernel handles the positive variant");
  }
  if (inst.k < 0) throw InputError("budget k must be non-negative");
  if (!decomposition.is_decomposition_of(inst.graph)) {
    throw InputError("forest is not a treedepth decomposition of the graph");
  }

  std::vector<Vertex> nodes(static_cast<std::size_t>(inst.graph.order()));
  for (Vertex v = 0; v < inst.graph.order(); ++v) nodes[v] = v;
  std::stable_sort(nodes.begin(), nodes.end(), [&](Vertex a, Vertex b) {
    return decomposition.depth(a) > decomposition.depth(b);
  });

  TdKernelizer kernelizer(inst, options);
  for (Vertex v : nodes) {
    VertexSet below = decomposition.subtree(v);
    below.erase(v);
    if (below.empty()) continue;
    kernelizer.reduce(v, decomposition.ancestors_inclusive(v), below);
  }
  kernelizer.reduce(-1, inst.graph.empty_set(), inst.graph.all_vertices());
  return kernelizer.finish();
}

TeachingMap lift_td(const TeachingMap& kernel_map, const TdKernelTrace& trace,
                    const Instance& original) {
  const Graph& g = original.graph;
  const ConceptClass& b = original.concepts;
  const auto universe = static_cast<std::size_t>(g.order());
  std::vector<std::optional<VertexSet>> sets(static_cast<std::size_t>(b.size()));
  // Concept index of every vertex whose neighborhood is a concept.
  std::vector<int> concept_of(universe, -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    concept_of[v] = b.index_of_set(closed_neighborhood(g, v));
  }

  for (const auto& [kernel_center, examples] : kernel_map.entries()) {
    if (kernel_center < 0 ||
        kernel_center >= static_cast<Vertex>(trace.new_to_old.size())) {
      throw LiftingFailure("kernel map key outside the kernel");
    }
    const int index = b.index_of_center(trace.new_to_old[kernel_center]);
    if (index < 0 || sets[index]) {
      throw LiftingFailure("kernel concept does not match the original class");
    }
    VertexSet lifted(universe);
    for (Vertex w : examples) lifted.insert(trace.new_to_old[w]);
    sets[index] = std::move(lifted);
  }

  for (auto it = trace.deletions.rbegin(); it != trace.deletions.rend(); ++it) {
    const TdDeletion& d = *it;
    const std::size_t size = d.removed.size();
    // A survivor qualifies when each of its concepts is taught with at least
    // one of its own vertices; this always holds for all but one survivor
    // per concept position.
    const std::vector<Vertex>* source = nullptr;
    for (const auto& survivor : d.survivors) {
      VertexSet members(universe, survivor);
      bool ok = true;
      for (std::size_t i = 0; i < size && ok; ++i) {
        const int index = concept_of[survivor[i]];
        if (index < 0) continue;
        ok = sets[index] && sets[index]->intersects(members);
      }
      if (ok) {
        source = &survivor;
        break;
      }
    }
    if (source == nullptr) {
      throw LiftingFailure("no survivor can stand in for a deleted component");
    }
    std::map<Vertex, Vertex> back;  // survivor vertex -> deleted vertex
    for (std::size_t i = 0; i < size; ++i) back[(*source)[i]] = d.removed[i];

    for (std::size_t i = 0; i < size; ++i) {
      const Vertex p = d.removed[i];
      const int target = concept_of[p];
      if (target < 0) continue;
      const int from = concept_of[(*source)[i]];
      if (from < 0 || !sets[from]) {
        throw LiftingFailure("deleted concept has no counterpart in the survivor");
      }
      VertexSet lifted = *sets[from] & d.context;
      for (Vertex w : *sets[from]) {
        auto found = back.find(w);
        if (found != back.end()) lifted.insert(found->second);
      }
      sets[target] = std::move(lifted);
    }
  }

  std::vector<VertexSet> flat;
  for (int i = 0; i < b.size(); ++i) {
    if (!sets[i]) {
      throw LiftingFailure("concept of center " +
                           std::to_string(b.canonical_center(i)) +
                           " has no lifted teaching set");
    }
    flat.push_back(std::move(*sets[i]));
  }
  TeachingMap t = TeachingMap::from_indexed(b, flat);
  const Verdict verdict = verify(b, t, original.variant);
  if (!verdict.ok() || map_size(t) > original.k) {
    throw LiftingFailure("lifted map fails on the original instance: " +
                         verdict.to_string());
  }
  return t;
}

TdSolveResult solve_td(const Instance& inst,
                       const std::optional<RootedForest>& decomposition,
                       const SolverOptions& options,
                       const TdKernelOptions& kernel_options) {
  const auto start = std::chrono::steady_clock::now();
  const RootedForest forest =
      decomposition ? *decomposition : treedepth_decomposition(inst.graph);
  TdKernelResult kernel = kernelize_td(inst, forest, kernel_options);

  TdSolveResult out;
  out.treedepth = forest.height();
  out.kernel_order = kernel.kernel.graph.order();
  out.result = solve(kernel.kernel, options);
  if (out.result.decision == Decision::kYes) {
    out.result.map = lift_td(*out.result.map, kernel.trace, inst);
  }
  out.result.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

}  // namespace nctd
