#include "nctd/vc_kernel.hpp"

#include <algorithm>
#include <chrono>

#include "nctd/errors.hpp"

namespace nctd {

VcParameters VcParameters::for_cover(const VertexSet& cover) {
  VcParameters p;
  p.cover = cover;
  const int x = static_cast<int>(cover.size());
  if (x <= 5) {
    const int exponent = (1 << x) + x;  // at most 37
    p.q = (std::uint64_t{1} << exponent) + 1;
  }
  p.k_bound = (std::uint64_t{1} << std::min(x + 1, 62)) + static_cast<std::uint64_t>(x);
  return p;
}

std::optional<std::uint64_t> vc_kernel_bound(const VcParameters& params,
                                             int k) {
  if (!params.q) return std::nullopt;
  const std::uint64_t classes = std::uint64_t{1} << params.cover.size();
  return classes * (*params.q + 2 * static_cast<std::uint64_t>(k) + 1) +
         classes + params.cover.size();
}

namespace {

void check_cover(const Graph& g, const VertexSet& cover) {
  if (cover.universe() != static_cast<std::size_t>(g.order()) ||
      !is_vertex_cover(g, cover)) {
    throw InputError("supplied set is not a vertex cover of the graph");
  }
}

}  // namespace

TeachingMap vc_upper_bound_map(const Graph& g, const VertexSet& cover,
                               const ConceptClass& b) {
  check_cover(g, cover);
  VertexSet representatives = g.empty_set();
  for (const VertexSet& block : false_twin_classes(g, g.all_vertices() - cover)) {
    int taken = 0;
    for (Vertex v : block) {
      if (taken++ == 2) break;
      representatives.insert(v);
    }
  }
  TeachingMap t;
  for (Vertex c : b.canonical_centers()) {
    VertexSet s = cover;
    if (cover.contains(c)) {
      s |= representatives;
    } else {
      s.insert(c);
    }
    t.assign(c, std::move(s));
  }
  return t;
}

VcKernelResult kernelize_vc(const Instance& inst, const VertexSet& cover) {
  if (inst.variant != Variant::kGeneral) {
    throw InputError("the vertex-cover kernel handles the general variant");
  }
  if (inst.k < 0) throw InputError("budget k must be non-negative");
  const Graph& g = inst.graph;
  const ConceptClass& b = inst.concepts;
  check_cover(g, cover);

  VcKernelResult out;
  out.trace.params = VcParameters::for_cover(cover);
  const VcParameters& params = out.trace.params;

  if (static_cast<std::uint64_t>(inst.k) >= params.k_bound) {
    out.immediate_yes = vc_upper_bound_map(g, cover, b);
    out.kernel = inst;
    for (Vertex v = 0; v < g.order(); ++v) out.trace.new_to_old.push_back(v);
    return out;
  }

  VertexSet alive = g.all_vertices();
  for (const VertexSet& block : false_twin_classes(g, g.all_vertices() - cover)) {
    std::vector<Vertex> concepts, others;
    for (Vertex v : block) {
      (b.contains_set(closed_neighborhood(g, v)) ? concepts : others).push_back(v);
    }
    VertexSet members = block;
    auto remove_last = [&](std::vector<Vertex>& pool, VcRule rule,
                           bool was_concept) {
      const Vertex v = pool.back();
      pool.pop_back();
      out.trace.deletions.push_back({v, members, rule, was_concept});
      members.erase(v);
      alive.erase(v);
    };
    while (others.size() >= 2) {
      remove_last(others, VcRule::kNonConceptTwin, false);
    }
    if (params.q) {
      const std::uint64_t keep = *params.q + 2 * static_cast<std::uint64_t>(inst.k) + 1;
      while (concepts.size() > keep) {
        remove_last(concepts, VcRule::kConceptTwin, true);
      }
    }
  }

  Graph kernel_graph = g.induced(alive, &out.trace.new_to_old);
  std::vector<Vertex> old_to_new(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.trace.new_to_old.size(); ++i) {
    old_to_new[out.trace.new_to_old[i]] = static_cast<Vertex>(i);
  }
  std::vector<Vertex> kernel_centers;
  for (Vertex c : b.centers()) {
    if (old_to_new[c] >= 0) kernel_centers.push_back(old_to_new[c]);
  }
  ConceptClass kernel_concepts(kernel_graph, kernel_centers);
  out.kernel = Instance{std::move(kernel_graph), std::move(kernel_concepts),
                        inst.k, inst.variant};
  return out;
}

TeachingMap lift_vc(const TeachingMap& kernel_map, const VcKernelTrace& trace,
                    const Instance& original) {
  const ConceptClass& b = original.concepts;
  const auto universe = static_cast<std::size_t>(original.graph.order());
  std::vector<std::optional<VertexSet>> sets(static_cast<std::size_t>(b.size()));

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
    if (!it->was_concept) continue;
    const Vertex v = it->vertex;
    // A surviving twin that teaches itself yields a set of the same size;
    // any other twin still separates N[v] from everything but may cost one
    // more example.
    std::optional<VertexSet> chosen;
    for (int pass = 0; pass < 2 && !chosen; ++pass) {
      for (Vertex u : it->twins) {
        if (u == v) continue;
        const int index = b.index_of_center(u);
        if (index < 0 || !sets[index]) continue;
        const VertexSet& tu = *sets[index];
        if (pass == 0 && !tu.contains(u)) continue;
        VertexSet candidate = tu;
        candidate.erase(u);
        candidate.insert(v);
        if (static_cast<int>(candidate.size()) <= original.k) {
          chosen = std::move(candidate);
          break;
        }
      }
    }
    if (!chosen) {
      throw LiftingFailure("no surviving twin of vertex " + std::to_string(v) +
                           " gives a teaching set within the budget");
    }
    sets[b.index_of_center(v)] = std::move(chosen);
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

VcSolveResult solve_vc(const Instance& inst,
                       const std::optional<VertexSet>& cover,
                       const SolverOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const VertexSet x =
      cover ? *cover
            : minimalize_cover(inst.graph, vertex_cover_2approx(inst.graph));
  VcKernelResult kernel = kernelize_vc(inst, x);

  VcSolveResult out;
  out.params = kernel.trace.params;
  out.kernel_order = kernel.kernel.graph.order();
  if (kernel.immediate_yes) {
    out.immediate_yes = true;
    const Verdict verdict =
        verify(inst.concepts, *kernel.immediate_yes, inst.variant);
    if (!verdict.ok() || map_size(*kernel.immediate_yes) > inst.k) {
      throw LiftingFailure("universal-bound map fails: " + verdict.to_string());
    }
    out.result.decision = Decision::kYes;
    out.result.map = std::move(kernel.immediate_yes);
  } else {
    out.result = solve(kernel.kernel, options);
    if (out.result.decision == Decision::kYes) {
      out.result.map = lift_vc(*out.result.map, kernel.trace, inst);
    }
  }
  out.result.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

}  // namespace nctd
