#include "nctd/teaching.hpp"

#include <algorithm>

#include "nctd/errors.hpp"

namespace nctd {

const char* to_string(Variant variant) {
  return variant == Variant::kPositive ? "positive" : "general";
}

ConceptClass::ConceptClass(const Graph& g, const std::vector<Vertex>& centers)
    : universe_(g.order()) {
  centers_ = centers;
  for (Vertex c : centers_) g.check_vertex(c);
  std::sort(centers_.begin(), centers_.end());
  centers_.erase(std::unique(centers_.begin(), centers_.end()), centers_.end());

  for (Vertex c : centers_) {
    VertexSet s = closed_neighborhood(g, c);
    auto it = by_set_.find(s);
    if (it != by_set_.end()) {
      by_center_[c] = it->second;
      merges_.emplace_back(c, canonical_[it->second]);
      continue;
    }
    const int index = static_cast<int>(sets_.size());
    by_set_.emplace(s, index);
    by_center_[c] = index;
    canonical_.push_back(c);
    sets_.push_back(std::move(s));
  }
}

ConceptClass ConceptClass::all(const Graph& g) {
  std::vector<Vertex> centers(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) centers[v] = v;
  return ConceptClass(g, centers);
}

int ConceptClass::index_of_center(Vertex c) const {
  auto it = by_center_.find(c);
  return it == by_center_.end() ? -1 : it->second;
}

int ConceptClass::index_of_set(const VertexSet& s) const {
  auto it = by_set_.find(s);
  return it == by_set_.end() ? -1 : it->second;
}

TeachingMap TeachingMap::empty_for(const ConceptClass& b) {
  TeachingMap t;
  for (Vertex c : b.canonical_centers()) {
    t.assign(c, VertexSet(static_cast<std::size_t>(b.universe())));
  }
  return t;
}

TeachingMap TeachingMap::from_indexed(const ConceptClass& b,
                                      const std::vector<VertexSet>& sets) {
  TeachingMap t;
  for (int i = 0; i < b.size(); ++i) t.assign(b.canonical_center(i), sets[i]);
  return t;
}

const VertexSet& TeachingMap::at(Vertex center) const {
  auto it = sets_.find(center);
  if (it == sets_.end()) {
    throw InputError("teaching map has no entry for center " +
                     std::to_string(center));
  }
  return it->second;
}

VertexSet& TeachingMap::at(Vertex center) {
  auto it = sets_.find(center);
  if (it == sets_.end()) {
    throw InputError("teaching map has no entry for center " +
                     std::to_string(center));
  }
  return it->second;
}

int map_size(const TeachingMap& t) {
  std::size_t best = 0;
  for (const auto& [center, examples] : t.entries()) {
    best = std::max(best, examples.size());
  }
  return static_cast<int>(best);
}

bool distinguishes(const Graph& g, Vertex w, Vertex u, Vertex v) {
  return closed_neighborhood(g, u).contains(w) !=
         closed_neighborhood(g, v).contains(w);
}

bool is_positive(const TeachingMap& t, const ConceptClass& b) {
  for (int i = 0; i < b.size(); ++i) {
    if (!t.at(b.canonical_center(i)).is_subset_of(b.concept_set(i))) {
      return false;
    }
  }
  return true;
}

std::string Verdict::to_string() const {
  switch (kind) {
    case Kind::kOk:
      return "Ok";
    case Kind::kClash:
      return "Clash " + std::to_string(u) + " " + std::to_string(v);
    case Kind::kPositivityViolation:
      return "PositivityViolation " + std::to_string(u) + " " +
             std::to_string(v);
  }
  return "?";
}

namespace {

void check_domain(const ConceptClass& b, const TeachingMap& t) {
  if (t.concept_count() != b.size()) {
    throw InputError("teaching map covers " +
                     std::to_string(t.concept_count()) + " concepts, class has " +
                     std::to_string(b.size()));
  }
  for (const auto& [center, examples] : t.entries()) {
    const int index = b.index_of_center(center);
    if (index < 0 || b.canonical_center(index) != center) {
      throw InputError("teaching map key " + std::to_string(center) +
                       " is not a canonical center of the class");
    }
    if (examples.universe() != static_cast<std::size_t>(b.universe())) {
      throw InputError("teaching set for center " + std::to_string(center) +
                       " has the wrong universe");
    }
  }
}

}  // namespace

Verdict verify(const ConceptClass& b, const TeachingMap& t, Variant variant) {
  check_domain(b, t);
  std::vector<const VertexSet*> sets;
  sets.reserve(static_cast<std::size_t>(b.size()));
  for (int i = 0; i < b.size(); ++i) sets.push_back(&t.at(b.canonical_center(i)));

  if (variant == Variant::kPositive) {
    for (int i = 0; i < b.size(); ++i) {
      VertexSet outside = *sets[i] - b.concept_set(i);
      if (!outside.empty()) {
        return {Verdict::Kind::kPositivityViolation, b.canonical_center(i),
                outside.first()};
      }
    }
  }
  for (int i = 0; i < b.size(); ++i) {
    for (int j = i + 1; j < b.size(); ++j) {
      VertexSet shown = *sets[i] | *sets[j];
      if (!shown.intersects(b.concept_set(i) ^ b.concept_set(j))) {
        return {Verdict::Kind::kClash, b.canonical_center(i),
                b.canonical_center(j)};
      }
    }
  }
  return {};
}

}  // namespace nctd
