#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nctd/exact_solver.hpp"

namespace nctd {

// Thresholds derived from a vertex cover X.
struct VcParameters {
  VertexSet cover;
  // 2^(2^|X| + |X|) + 1; empty when it does not fit in 64 bits (|X| > 5),
  // in which case the twin-concept rule never fires.
  std::optional<std::uint64_t> q;
  // 2^(|X| + 1) + |X|: every class has a teaching map of this size.
  std::uint64_t k_bound = 0;

  static VcParameters for_cover(const VertexSet& cover);
};

enum class VcRule {
  kConceptTwin,     // one of too many false twins whose neighborhoods are concepts
  kNonConceptTwin,  // one of two false twins whose neighborhoods are not concepts
};

struct VcDeletion {
  Vertex vertex = -1;   // original id
  VertexSet twins;      // its twin class among the vertices alive before deletion
  VcRule rule = VcRule::kNonConceptTwin;
  bool was_concept = false;
};

struct VcKernelTrace {
  VcParameters params;
  std::vector<VcDeletion> deletions;  // in application order
  std::vector<Vertex> new_to_old;     // kernel id -> original id
};

struct VcKernelResult {
  // Set when k already reaches the universal bound; `map` then solves the
  // original instance and no kernel is built.
  std::optional<TeachingMap> immediate_yes;
  Instance kernel;
  VcKernelTrace trace;
};

// For every covered vertex: X plus the two smallest members of every twin
// class of V - X (one for singleton classes). For every other vertex y:
// X + y. Restricted to the concepts of `b`. Throws InputError unless `cover`
// is a vertex cover of g.
TeachingMap vc_upper_bound_map(const Graph& g, const VertexSet& cover,
                               const ConceptClass& b);

// Applies both twin rules exhaustively for a general-variant instance.
// The concept-twin rule keeps q + 2k + 1 concept members per class; the
// non-concept rule keeps one non-concept member per class. Deletions remove
// the highest id first.
VcKernelResult kernelize_vc(const Instance& inst, const VertexSet& cover);

// Extends a map for the kernel to the original instance. Throws
// LiftingFailure if the result does not verify within the budget.
TeachingMap lift_vc(const TeachingMap& kernel_map, const VcKernelTrace& trace,
                    const Instance& original);

struct VcSolveResult {
  SolveResult result;
  VcParameters params;
  int kernel_order = 0;
  bool immediate_yes = false;
};

// Cover (2-approximation, made inclusion-minimal unless supplied), kernel,
// exact solve, lift.
VcSolveResult solve_vc(const Instance& inst,
                       const std::optional<VertexSet>& cover = std::nullopt,
                       const SolverOptions& options = {});

// Largest kernel order the rules can leave behind:
// 2^|X| (q + 2k + 1) + 2^|X| + |X|, or empty when q is unbounded.
std::optional<std::uint64_t> vc_kernel_bound(const VcParameters& params,
                                             int k);

}  // namespace nctd
