#include "nctd/constructions.hpp"

#include <charconv>
#include <stdexcept>

#include "nctd/errors.hpp"

namespace nctd {

namespace {

long long parse_integer(const std::string& text, const std::string& whole) {
  long long value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw InputError("not a rational number: '" + whole + "'");
  }
  return value;
}

bool clashes(const ConceptClass& b, const std::vector<VertexSet>& sets, int i,
             int j) {
  const VertexSet difference = b.concept_set(i) ^ b.concept_set(j);
  return !difference.intersects(sets[i] | sets[j]);
}

VertexSet lowest_seeds(const Graph& g, Vertex v) {
  VertexSet seeds = g.empty_set();
  for (Vertex w : g.neighbors(v)) {
    if (seeds.size() == 3) break;
    seeds.insert(w);
  }
  return seeds;
}

// First three neighbors in lexicographic order that do not form a triangle.
// Only a seed adjacent to both others can then clash with v, besides the
// common neighbor. Falls back to the lowest three when N(v) is a clique.
VertexSet open_seeds(const Graph& g, Vertex v) {
  const std::vector<Vertex> nb = g.neighbors(v).members();
  const std::size_t d = nb.size();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      for (std::size_t c = b + 1; c < d; ++c) {
        if (!g.adjacent(nb[a], nb[b]) || !g.adjacent(nb[a], nb[c]) ||
            !g.adjacent(nb[b], nb[c])) {
          return VertexSet(g.empty_set().universe(), {nb[a], nb[b], nb[c]});
        }
      }
    }
  }
  return lowest_seeds(g, v);
}

// Shared by both planar constructions. `low` is the degree up to which a
// concept is taught by its whole neighborhood; `bound` the size limit.
TeachingMap planar_map(const Graph& g, const ConceptClass& b, int low,
                       int bound, bool add_common_neighbor) {
  if (b.universe() != g.order()) {
    throw InputError("concept class is over a different graph");
  }
  const int count = b.size();
  std::vector<VertexSet> sets;
  std::vector<bool> high(static_cast<std::size_t>(count), false);
  for (int i = 0; i < count; ++i) {
    const Vertex v = b.canonical_center(i);
    if (g.degree(v) <= low) {
      sets.push_back(b.concept_set(i));
      continue;
    }
    high[i] = true;
    VertexSet seeds =
        add_common_neighbor ? open_seeds(g, v) : lowest_seeds(g, v);
    if (add_common_neighbor) {
      VertexSet common = g.all_vertices();
      for (Vertex w : seeds) common &= g.neighbors(w);
      common.erase(v);
      const Vertex u = common.first();
      if (common.size() == 1 && !g.adjacent(u, v)) seeds.insert(u);
    }
    sets.push_back(std::move(seeds));
  }

  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      if ((!high[i] && !high[j]) || !clashes(b, sets, i, j)) continue;
      const int v = high[i] ? i : j;
      const int y = v == i ? j : i;
      const VertexSet only_v = b.concept_set(v) - b.concept_set(y);
      const VertexSet only_y = b.concept_set(y) - b.concept_set(v);
      const int grown = only_v.empty() ? y : v;
      const Vertex w = only_v.empty() ? only_y.first() : only_v.first();
      if (w < 0) {
        throw PlanarityViolation(
            "planarity assumption violated: concepts of centers " +
            std::to_string(b.canonical_center(i)) + " and " +
            std::to_string(b.canonical_center(j)) + " cannot be separated");
      }
      sets[grown].insert(w);
      if (static_cast<int>(sets[grown].size()) > bound) {
        throw PlanarityViolation(
            "planarity assumption violated: teaching set of center " +
            std::to_string(b.canonical_center(grown)) + " exceeds " +
            std::to_string(bound));
      }
    }
  }
  TeachingMap t = TeachingMap::from_indexed(b, sets);
  const Verdict verdict = verify(
      b, t, add_common_neighbor ? Variant::kGeneral : Variant::kPositive);
  if (!verdict.ok()) {
    throw std::logic_error("planar map does not verify: " + verdict.to_string());
  }
  return t;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  if (body.empty() || body[0] == '-' || body[0] == '+') {
    throw InputError("not a rational number: '" + text + "'");
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    const long long num = parse_integer(body.substr(0, slash), text);
    const long long den = parse_integer(body.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in '" + text + "'");
    value = Rational(num, den);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    const std::string whole = body.substr(0, dot);
    const std::string frac = body.substr(dot + 1);
    if (frac.size() > 17 || (whole.empty() && frac.empty())) {
      throw InputError("not a rational number: '" + text + "'");
    }
    long long scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(whole.empty() ? 0 : parse_integer(whole, text)) +
            Rational(frac.empty() ? 0 : parse_integer(frac, text), scale);
  } else {
    value = Rational(parse_integer(body, text));
  }
  return negative ? -value : value;
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

TeachingMap planar_positive_nctm(const Graph& g, const ConceptClass& b) {
  return planar_map(g, b, 6, 7, false);
}

TeachingMap planar_nctm(const Graph& g, const ConceptClass& b) {
  return planar_map(g, b, 4, 5, true);
}

Graph unit_square_graph(const SquareArrangement& arr) {
  std::vector<Edge> edges;
  const Rational one(1);
  for (int i = 0; i < arr.size(); ++i) {
    for (int j = i + 1; j < arr.size(); ++j) {
      const auto& [xi, yi] = arr.centers[i];
      const auto& [xj, yj] = arr.centers[j];
      if (abs(xi - xj) <= one && abs(yi - yj) <= one) edges.emplace_back(i, j);
    }
  }
  return Graph(arr.size(), edges);
}

TeachingMap unit_square_positive_nctm(const SquareArrangement& arr,
                                      const ConceptClass& b) {
  if (b.universe() != arr.size()) {
    throw InputError("concept class is over a different graph");
  }
  std::vector<VertexSet> sets;
  for (int i = 0; i < b.size(); ++i) {
    const VertexSet& members = b.concept_set(i);
    Vertex left = -1, right = -1, top = -1, bottom = -1;
    for (Vertex w : members) {
      const auto& [x, y] = arr.centers[w];
      // Members come in increasing order, so strict comparisons keep the
      // lowest index on ties.
      if (left < 0 || x < arr.centers[left].first) left = w;
      if (right < 0 || x > arr.centers[right].first) right = w;
      if (top < 0 || y > arr.centers[top].second) top = w;
      if (bottom < 0 || y < arr.centers[bottom].second) bottom = w;
    }
    sets.emplace_back(static_cast<std::size_t>(arr.size()),
                      std::initializer_list<Vertex>{left, right, top, bottom});
  }
  TeachingMap t = TeachingMap::from_indexed(b, sets);
  const Verdict verdict = verify(b, t, Variant::kPositive);
  if (!verdict.ok()) {
    throw std::logic_error("unit-square map does not verify: " +
                           verdict.to_string());
  }
  return t;
}

}  // namespace nctd
