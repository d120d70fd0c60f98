#pragma once

#include <optional>
#include <vector>

#include "nctd/canonical.hpp"
#include "nctd/exact_solver.hpp"
#include "nctd/treedepth.hpp"

namespace nctd {

struct TdKernelOptions {
  // Above this value of |X| + t a class is never trimmed.
  int exponent_cap = 16;
  int signature_cap = kDefaultSignatureCap;
};

// One deleted component together with the equivalent components that were
// still present right after the deletion. Position i of `removed` corresponds
// to position i of every survivor.
struct TdDeletion {
  Vertex node = -1;                 // decomposition node; -1 for the top level
  VertexSet context;                // X: the node and its ancestors
  std::vector<Vertex> removed;      // original ids in canonical order
  std::vector<Edge> removed_edges;  // edges of G inside `removed`
  std::vector<std::vector<Vertex>> survivors;
};

struct TdKernelTrace {
  std::vector<TdDeletion> deletions;  // in application order
  std::vector<Vertex> new_to_old;     // kernel id -> original id
};

struct TdKernelResult {
  Instance kernel;
  TdKernelTrace trace;
};

// Largest class a node keeps: 2^(t + |X| + 1), or -1 when |X| + t is above
// the cap.
long long td_class_threshold(int context_size, int component_size,
                             const TdKernelOptions& options = {});

// Walks the decomposition bottom-up (and finally the whole graph with
// X = {}), grouping the components below each node by signature and trimming
// every class above its threshold, highest smallest-id member first.
// Throws InputError unless `decomposition` fits the instance graph.
TdKernelResult kernelize_td(const Instance& inst,
                            const RootedForest& decomposition,
                            const TdKernelOptions& options = {});

// Copies teaching sets onto deleted components from a survivor in which
// every concept's teaching set reaches into the survivor itself. Throws
// LiftingFailure if the result does not verify within the budget.
TeachingMap lift_td(const TeachingMap& kernel_map, const TdKernelTrace& trace,
                    const Instance& original);

struct TdSolveResult {
  SolveResult result;
  int treedepth = 0;
  int kernel_order = 0;
};

// Decomposition (exact unless supplied), kernel, exact solve, lift.
TdSolveResult solve_td(const Instance& inst,
                       const std::optional<RootedForest>& decomposition =
                           std::nullopt,
                       const SolverOptions& options = {},
                       const TdKernelOptions& kernel_options = {});

}  // namespace nctd
