#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nctd/exact_solver.hpp"

namespace nctd {

// 3-CNF over variables 1..n; literal +i is x_i, -i its negation.
struct CnfFormula {
  int n = 0;
  std::vector<std::array<int, 3>> clauses;

  // Throws InputError unless n >= 1, there is at least one clause, and each
  // clause has three distinct in-range variables.
  void validate() const;
};

// Truth value of x_i at index i - 1.
using Assignment = std::vector<bool>;

bool satisfies(const CnfFormula& phi, const Assignment& tau);

// Named vertices of a generated gadget graph. Variable-indexed vectors use
// slot i for x_i; slot 0 is the extra variable vertex of the general gadget
// and -1 elsewhere. Clause-indexed vectors use slot j - 1 for clause j.
struct GadgetLayout {
  Variant variant = Variant::kGeneral;
  int n = 0;
  int m = 0;
  std::vector<Vertex> variable;
  std::vector<Vertex> true_literal;
  std::vector<Vertex> false_literal;
  std::vector<Vertex> clause;
  std::map<std::pair<int, int>, Vertex> occurrence;  // (j, i) -> c_{j,i}
  std::vector<Vertex> variable_pendant;               // positive gadget
  std::vector<Vertex> clause_pendant;                 // positive gadget
  std::vector<std::array<Vertex, 5>> twins;           // general gadget
  std::vector<Vertex> star;                           // general gadget
  std::vector<std::string> names;                     // one per vertex

  int order() const { return static_cast<int>(names.size()); }
  // Vertex by name, e.g. "v_2", "t_1", "c_{1,3}", "v_0^4", "v_1*", "c_2'".
  Vertex at(const std::string& name) const;
};

struct GadgetInstance {
  Instance instance;
  GadgetLayout layout;
};

// Size-1 general instance that is a yes-instance iff phi is satisfiable.
GadgetInstance encode_general(const CnfFormula& phi);
// Size-1 positive instance that is a yes-instance iff phi is satisfiable.
GadgetInstance encode_positive(const CnfFormula& phi);

// The size-1 map built from a satisfying assignment. Throws InputError if
// tau does not satisfy phi or `variant` does not match the layout.
TeachingMap assignment_to_map(const CnfFormula& phi, const GadgetLayout& layout,
                              const Assignment& tau, Variant variant);

// x_i is true iff T(N[v_i]) = {t_i}. Throws InputError if some T(N[v_i]) is
// missing or not inside {t_i, f_i}.
Assignment map_to_assignment(const GadgetLayout& layout, const TeachingMap& t);

struct EncodedClass {
  Graph graph;
  ConceptClass concepts;
};

// Elements 0..universe-1 keep their ids; concept C becomes vertex
// universe + (its position), adjacent to its elements and to every other
// concept vertex. Throws InputError on an empty list, duplicates or
// out-of-range elements.
EncodedClass encode_concept_class(int universe,
                                  const std::vector<std::vector<int>>& concepts);

// DIMACS CNF: comment lines "c ...", header "p cnf n m", clauses ending in 0.
CnfFormula parse_dimacs(std::istream& in);
std::string format_dimacs(const CnfFormula& phi);

}  // namespace nctd
