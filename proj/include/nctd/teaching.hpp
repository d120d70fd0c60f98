#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nctd/graph.hpp"

namespace nctd {

enum class Variant { kGeneral, kPositive };

const char* to_string(Variant variant);

// A set of closed neighborhoods of a graph. Centers with equal neighborhoods
// are merged into one concept keyed by the smallest such center; concepts are
// stored in increasing canonical-center order.
class ConceptClass {
 public:
  ConceptClass() = default;
  // Throws InputError for out-of-range centers. Repeated ids are ignored.
  ConceptClass(const Graph& g, const std::vector<Vertex>& centers);
  // Every closed neighborhood of g.
  static ConceptClass all(const Graph& g);

  int universe() const { return universe_; }
  int size() const { return static_cast<int>(sets_.size()); }

  const VertexSet& concept_set(int index) const { return sets_[index]; }
  Vertex canonical_center(int index) const { return canonical_[index]; }
  const std::vector<Vertex>& canonical_centers() const { return canonical_; }
  // Distinct input centers in increasing order.
  const std::vector<Vertex>& centers() const { return centers_; }

  // Concept index of a (possibly merged) center, or -1.
  int index_of_center(Vertex c) const;
  // Concept index whose vertex set equals `s`, or -1.
  int index_of_set(const VertexSet& s) const;
  bool contains_set(const VertexSet& s) const { return index_of_set(s) >= 0; }

  // (merged center, canonical center) for every center folded into another.
  const std::vector<std::pair<Vertex, Vertex>>& merges() const {
    return merges_;
  }

 private:
  int universe_ = 0;
  std::vector<Vertex> centers_;
  std::vector<Vertex> canonical_;
  std::vector<VertexSet> sets_;
  std::unordered_map<Vertex, int> by_center_;
  std::unordered_map<VertexSet, int, VertexSetHash> by_set_;
  std::vector<std::pair<Vertex, Vertex>> merges_;
};

// Assignment of an example set to each concept, keyed by canonical center.
// Labels are implicit: example w shown for N[c] is positive iff w is in N[c].
class TeachingMap {
 public:
  TeachingMap() = default;

  // Empty teaching set for every concept of `b`.
  static TeachingMap empty_for(const ConceptClass& b);
  // sets[i] is the teaching set of concept i of `b`.
  static TeachingMap from_indexed(const ConceptClass& b,
                                  const std::vector<VertexSet>& sets);

  void assign(Vertex center, VertexSet examples) {
    sets_.insert_or_assign(center, std::move(examples));
  }
  bool has(Vertex center) const { return sets_.count(center) != 0; }
  const VertexSet& at(Vertex center) const;
  VertexSet& at(Vertex center);

  const std::map<Vertex, VertexSet>& entries() const { return sets_; }
  int concept_count() const { return static_cast<int>(sets_.size()); }

  friend bool operator==(const TeachingMap& a, const TeachingMap& b) {
    return a.sets_ == b.sets_;
  }

 private:
  std::map<Vertex, VertexSet> sets_;
};

// Largest teaching-set cardinality; 0 for an empty map.
int map_size(const TeachingMap& t);

// w lies in exactly one of N[u] and N[v].
bool distinguishes(const Graph& g, Vertex w, Vertex u, Vertex v);

bool is_positive(const TeachingMap& t, const ConceptClass& b);

struct Verdict {
  enum class Kind { kOk, kClash, kPositivityViolation };
  Kind kind = Kind::kOk;
  // kClash: the two canonical centers, u < v.
  // kPositivityViolation: u = canonical center, v = offending example.
  Vertex u = -1;
  Vertex v = -1;

  bool ok() const { return kind == Kind::kOk; }
  std::string to_string() const;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Checks the non-clashing condition (and positivity for kPositive). Reports
// the first positivity violation, else the lexicographically first clashing
// pair of canonical centers. Throws InputError unless the keys of `t` are
// exactly the canonical centers of `b` and every example is a valid vertex.
Verdict verify(const ConceptClass& b, const TeachingMap& t, Variant variant);

}  // namespace nctd
