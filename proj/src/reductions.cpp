#include "nctd/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <set>
#include <sstream>

#include "nctd/errors.hpp"

namespace nctd {

namespace {

std::string idx(int i) { return std::to_string(i); }

class Builder {
 public:
  explicit Builder(GadgetLayout& layout) : layout_(layout) {}

  Vertex add(std::string name) {
    layout_.names.push_back(std::move(name));
    return static_cast<Vertex>(layout_.names.size() - 1);
  }
  void join(Vertex u, Vertex v) {
    edges_.insert({std::min(u, v), std::max(u, v)});
  }
  Graph graph() const {
    return Graph(layout_.order(), std::vector<Edge>(edges_.begin(), edges_.end()));
  }

 private:
  GadgetLayout& layout_;
  std::set<Edge> edges_;
};

// Variables, literal vertices, occurrence vertices and clause vertices, in
// that order, with the literal-to-clause edges. Shared by both gadgets.
void add_core(const CnfFormula& phi, GadgetLayout& layout, Builder& b,
              bool extra_variable) {
  phi.validate();
  layout.n = phi.n;
  layout.m = static_cast<int>(phi.clauses.size());
  layout.variable.assign(static_cast<std::size_t>(phi.n + 1), -1);
  layout.true_literal.assign(static_cast<std::size_t>(phi.n + 1), -1);
  layout.false_literal.assign(static_cast<std::size_t>(phi.n + 1), -1);
  for (int i = extra_variable ? 0 : 1; i <= phi.n; ++i) {
    layout.variable[i] = b.add("v_" + idx(i));
  }
  for (int i = 1; i <= phi.n; ++i) {
    layout.true_literal[i] = b.add("t_" + idx(i));
    layout.false_literal[i] = b.add("f_" + idx(i));
    b.join(layout.variable[i], layout.true_literal[i]);
    b.join(layout.variable[i], layout.false_literal[i]);
  }
  for (int j = 1; j <= layout.m; ++j) {
    std::array<int, 3> vars{};
    for (int s = 0; s < 3; ++s) vars[s] = std::abs(phi.clauses[j - 1][s]);
    std::sort(vars.begin(), vars.end());
    for (int i : vars) {
      layout.occurrence[{j, i}] = b.add("c_{" + idx(j) + "," + idx(i) + "}");
    }
  }
  for (int j = 1; j <= layout.m; ++j) {
    const Vertex c = b.add("c_" + idx(j));
    layout.clause.push_back(c);
    for (int lit : phi.clauses[j - 1]) {
      const int i = std::abs(lit);
      // A positive literal joins f_i, a negative one t_i: the clause is
      // separated from v_i exactly when the chosen literal satisfies it.
      b.join(c, lit > 0 ? layout.false_literal[i] : layout.true_literal[i]);
      const Vertex occ = layout.occurrence.at({j, i});
      b.join(occ, c);
      b.join(occ, layout.variable[i]);
    }
  }
}

}  // namespace

void CnfFormula::validate() const {
  if (n < 1) throw InputError("formula needs at least one variable");
  if (clauses.empty()) throw InputError("formula needs at least one clause");
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    std::set<int> vars;
    for (int lit : clauses[j]) {
      if (lit == 0 || std::abs(lit) > n) {
        throw InputError("clause " + std::to_string(j + 1) +
                         " has a literal outside 1.." + std::to_string(n));
      }
      vars.insert(std::abs(lit));
    }
    if (vars.size() != 3) {
      throw InputError("clause " + std::to_string(j + 1) +
                       " repeats a variable");
    }
  }
}

bool satisfies(const CnfFormula& phi, const Assignment& tau) {
  if (static_cast<int>(tau.size()) != phi.n) {
    throw InputError("assignment has " + std::to_string(tau.size()) +
                     " values for " + std::to_string(phi.n) + " variables");
  }
  return std::all_of(phi.clauses.begin(), phi.clauses.end(), [&](const auto& c) {
    return std::any_of(c.begin(), c.end(), [&](int lit) {
      return tau[std::abs(lit) - 1] == (lit > 0);
    });
  });
}

Vertex GadgetLayout::at(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw InputError("no gadget vertex named " + name);
  return static_cast<Vertex>(it - names.begin());
}

GadgetInstance encode_general(const CnfFormula& phi) {
  GadgetInstance out;
  GadgetLayout& layout = out.layout;
  layout.variant = Variant::kGeneral;
  Builder b(layout);
  add_core(phi, layout, b, true);
  for (int i = 0; i <= phi.n; ++i) {
    std::array<Vertex, 5> twins{};
    for (int p = 0; p < 5; ++p) {
      twins[p] = b.add("v_" + idx(i) + "^" + idx(p));
    }
    const Vertex star = b.add("v_" + idx(i) + "*");
    layout.twins.push_back(twins);
    layout.star.push_back(star);
    b.join(star, layout.variable[i]);
    for (Vertex w : twins) {
      b.join(star, w);
      b.join(w, layout.variable[i]);
    }
  }
  for (const auto& [key, occ] : layout.occurrence) {
    const int i = key.second;
    b.join(occ, layout.star[i]);
    for (Vertex w : layout.twins[i]) b.join(occ, w);
  }
  std::vector<Vertex> clique(layout.clause);
  clique.insert(clique.end(), layout.variable.begin(), layout.variable.end());
  for (std::size_t a = 0; a < clique.size(); ++a) {
    for (std::size_t c = a + 1; c < clique.size(); ++c) b.join(clique[a], clique[c]);
  }

  std::vector<Vertex> centers(layout.clause);
  for (int i = 0; i <= phi.n; ++i) {
    centers.push_back(layout.variable[i]);
    centers.push_back(layout.star[i]);
    for (int p = 1; p < 5; ++p) centers.push_back(layout.twins[i][p]);
  }
  Graph g = b.graph();
  ConceptClass concepts(g, centers);
  out.instance = Instance{std::move(g), std::move(concepts), 1, Variant::kGeneral};
  return out;
}

GadgetInstance encode_positive(const CnfFormula& phi) {
  GadgetInstance out;
  GadgetLayout& layout = out.layout;
  layout.variant = Variant::kPositive;
  Builder b(layout);
  add_core(phi, layout, b, false);
  layout.variable_pendant.assign(static_cast<std::size_t>(phi.n + 1), -1);
  for (int i = 1; i <= phi.n; ++i) {
    layout.variable_pendant[i] = b.add("v_" + idx(i) + "'");
    b.join(layout.variable[i], layout.variable_pendant[i]);
  }
  for (int j = 1; j <= layout.m; ++j) {
    layout.clause_pendant.push_back(b.add("c_" + idx(j) + "'"));
    b.join(layout.clause[j - 1], layout.clause_pendant.back());
  }
  for (const auto& [key, occ] : layout.occurrence) {
    b.join(occ, layout.variable_pendant[key.second]);
  }

  std::vector<Vertex> centers(layout.clause);
  centers.insert(centers.end(), layout.clause_pendant.begin(),
                 layout.clause_pendant.end());
  for (int i = 1; i <= phi.n; ++i) {
    centers.push_back(layout.variable[i]);
    centers.push_back(layout.variable_pendant[i]);
  }
  Graph g = b.graph();
  ConceptClass concepts(g, centers);
  out.instance = Instance{std::move(g), std::move(concepts), 1, Variant::kPositive};
  return out;
}

TeachingMap assignment_to_map(const CnfFormula& phi, const GadgetLayout& layout,
                              const Assignment& tau, Variant variant) {
  if (variant != layout.variant) {
    throw InputError("layout was generated for the other variant");
  }
  if (phi.n != layout.n || static_cast<int>(phi.clauses.size()) != layout.m) {
    throw InputError("formula does not match the layout");
  }
  if (!satisfies(phi, tau)) {
    throw InputError("assignment does not satisfy the formula");
  }
  const auto universe = static_cast<std::size_t>(layout.order());
  auto single = [&](Vertex v) { return VertexSet(universe, {v}); };

  TeachingMap t;
  for (int i = 1; i <= phi.n; ++i) {
    t.assign(layout.variable[i], single(tau[i - 1] ? layout.true_literal[i]
                                                    : layout.false_literal[i]));
  }
  for (int j = 1; j <= layout.m; ++j) {
    const auto& c = phi.clauses[j - 1];
    const auto hit = std::find_if(c.begin(), c.end(), [&](int lit) {
      return tau[std::abs(lit) - 1] == (lit > 0);
    });
    t.assign(layout.clause[j - 1],
             single(layout.occurrence.at({j, std::abs(*hit)})));
  }
  if (variant == Variant::kPositive) {
    for (int i = 1; i <= phi.n; ++i) {
      t.assign(layout.variable_pendant[i], single(layout.variable_pendant[i]));
    }
    for (Vertex c : layout.clause_pendant) t.assign(c, single(c));
    return t;
  }
  for (int i = 0; i <= phi.n; ++i) {
    for (int p = 1; p < 5; ++p) {
      t.assign(layout.twins[i][p], single(layout.twins[i][p]));
    }
    t.assign(layout.star[i], single(layout.twins[i][0]));
  }
  t.assign(layout.variable[0], single(layout.variable[1]));
  return t;
}

Assignment map_to_assignment(const GadgetLayout& layout, const TeachingMap& t) {
  Assignment tau(static_cast<std::size_t>(layout.n));
  for (int i = 1; i <= layout.n; ++i) {
    const Vertex v = layout.variable[i];
    if (!t.has(v)) {
      throw InputError("map has no teaching set for " + layout.names[v]);
    }
    const VertexSet& s = t.at(v);
    VertexSet literals(s.universe(), {layout.true_literal[i], layout.false_literal[i]});
    if (!s.is_subset_of(literals)) {
      throw InputError("teaching set of " + layout.names[v] +
                       " is not inside its literal vertices");
    }
    tau[i - 1] = s == VertexSet(s.universe(), {layout.true_literal[i]});
  }
  return tau;
}

EncodedClass encode_concept_class(int universe,
                                  const std::vector<std::vector<int>>& concepts) {
  if (universe < 0) throw InputError("universe size must be non-negative");
  if (concepts.empty()) throw InputError("concept list is empty");
  std::set<std::vector<int>> seen;
  std::vector<Edge> edges;
  const int count = static_cast<int>(concepts.size());
  for (int c = 0; c < count; ++c) {
    std::vector<int> members = concepts[c];
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!seen.insert(members).second) {
      throw InputError("concept " + std::to_string(c + 1) + " is a duplicate");
    }
    const Vertex x = universe + c;
    for (int e : members) {
      if (e < 0 || e >= universe) {
        throw InputError("element " + std::to_string(e) + " outside the universe");
      }
      edges.emplace_back(e, x);
    }
    for (int d = c + 1; d < count; ++d) edges.emplace_back(x, universe + d);
  }
  Graph g(universe + count, edges);
  std::vector<Vertex> centers;
  for (int c = 0; c < count; ++c) centers.push_back(universe + c);
  ConceptClass b(g, centers);
  return EncodedClass{std::move(g), std::move(b)};
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula phi;
  int declared = -1;
  std::vector<int> pending;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first == "c") continue;
    if (first[0] == '%') break;  // end marker used by some benchmark sets
    if (first == "p") {
      std::string format;
      if (declared >= 0 || !(fields >> format >> phi.n >> declared) ||
          format != "cnf") {
        throw InputError("line " + std::to_string(line_no) +
                         ": expected a single 'p cnf <n> <m>' header");
      }
      continue;
    }
    if (declared < 0) {
      throw InputError("line " + std::to_string(line_no) +
                       ": clause before the 'p cnf' header");
    }
    fields.clear();
    fields.seekg(0);
    std::string token;
    while (fields >> token) {
      char* end = nullptr;
      const long lit = std::strtol(token.c_str(), &end, 10);
      if (*end != '\0') {
        throw InputError("line " + std::to_string(line_no) +
                         ": bad literal '" + token + "'");
      }
      if (lit != 0) {
        pending.push_back(static_cast<int>(lit));
        continue;
      }
      if (pending.size() != 3) {
        throw InputError("line " + std::to_string(line_no) +
                         ": clause does not have exactly 3 literals");
      }
      phi.clauses.push_back({pending[0], pending[1], pending[2]});
      pending.clear();
    }
  }
  if (declared < 0) throw InputError("missing 'p cnf' header");
  if (!pending.empty()) throw InputError("last clause is not terminated by 0");
  if (static_cast<int>(phi.clauses.size()) != declared) {
    throw InputError("header declares " + std::to_string(declared) +
                     " clauses, found " + std::to_string(phi.clauses.size()));
  }
  phi.validate();
  return phi;
}

std::string format_dimacs(const CnfFormula& phi) {
  std::ostringstream out;
  out << "p cnf " << phi.n << ' ' << phi.clauses.size() << '\n';
  for (const auto& c : phi.clauses) {
    out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  }
  return out.str();
}

}  // namespace nctd
