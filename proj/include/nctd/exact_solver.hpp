#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nctd/graph.hpp"
#include "nctd/teaching.hpp"

namespace nctd {

// One decision question: is there a (positive) non-clashing teaching map of
// size at most k for `concepts`?
struct Instance {
  Graph graph;
  ConceptClass concepts;
  int k = 0;
  Variant variant = Variant::kGeneral;
};

enum class Decision { kYes, kNo, kResourceExhausted };

const char* to_string(Decision decision);

struct SolveStats {
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

struct SolveResult {
  Decision decision = Decision::kNo;
  std::optional<TeachingMap> map;  // present iff decision == kYes
  SolveStats stats;
};

enum class BranchOrder {
  // Unassigned concept with the fewest surviving candidates; ties go to the
  // larger neighborhood, then the smaller center.
  kSmallestDomain,
  // Fixed order: larger neighborhoods first, then smaller center.
  kDescendingDegree,
};

struct SolverOptions {
  // Candidate assignments tried before answering kResourceExhausted.
  // 0 means unlimited.
  std::uint64_t node_limit = 0;
  // Upper bound on the number of candidate teaching sets held in memory.
  std::uint64_t candidate_limit = 4'000'000;
  // Workers sharing the top-level branching; 1 is fully deterministic.
  int threads = 1;
  BranchOrder order = BranchOrder::kSmallestDomain;
};

// Search over positive teaching sets (subsets of each concept).
SolveResult solve_positive(const Instance& inst,
                           const SolverOptions& options = {});
// Search over arbitrary example sets.
SolveResult solve_general(const Instance& inst,
                          const SolverOptions& options = {});
// Dispatches on inst.variant.
SolveResult solve(const Instance& inst, const SolverOptions& options = {});

struct DimensionResult {
  int value = 0;
  TeachingMap map;
  SolveStats stats;  // accumulated over all k tried
};

// Smallest k with a yes answer, scanning k = 0, 1, ... Throws
// ResourceLimitError if any step exhausts its budget.
DimensionResult nctd(const Graph& g, const ConceptClass& b, Variant variant,
                     const SolverOptions& options = {});

}  // namespace nctd
