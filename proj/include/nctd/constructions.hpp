#pragma once

#include <boost/rational.hpp>
#include <string>
#include <utility>
#include <vector>

#include "nctd/teaching.hpp"

namespace nctd {

using Rational = boost::rational<long long>;

// Closed axis-parallel unit squares, one per vertex, given by their centers.
struct SquareArrangement {
  std::vector<std::pair<Rational, Rational>> centers;

  int size() const { return static_cast<int>(centers.size()); }
};

// Accepts "p/q", integers and finite decimals such as "-0.75". Throws
// InputError otherwise.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

// Positive map of size <= 7: closed neighborhoods for degree <= 6, otherwise
// three lowest-id neighbors plus repairs for the remaining clashes. Throws
// PlanarityViolation if a repair is impossible or a set outgrows 7.
TeachingMap planar_positive_nctm(const Graph& g, const ConceptClass& b);

// Map of size <= 5: closed neighborhoods for degree <= 4, otherwise the
// first three neighbors (in id order) that are not a triangle, their other
// common neighbor when it is a negative example, and repairs. Throws
// PlanarityViolation as above with bound 5.
TeachingMap planar_nctm(const Graph& g, const ConceptClass& b);

// Vertices i, j adjacent iff |x_i - x_j| <= 1 and |y_i - y_j| <= 1.
Graph unit_square_graph(const SquareArrangement& arr);

// Leftmost, rightmost, topmost and bottommost squares of each concept, ties
// to the lowest index. `b` must be over unit_square_graph(arr).
TeachingMap unit_square_positive_nctm(const SquareArrangement& arr,
                                      const ConceptClass& b);

}  // namespace nctd
