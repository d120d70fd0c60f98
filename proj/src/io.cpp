#include "nctd/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "nctd/errors.hpp"

namespace nctd {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

// Non-empty lines with comments stripped; ':' becomes its own token.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
    std::string spaced;
    for (char ch : text) {
      if (ch == ':') {
        spaced += " : ";
      } else {
        spaced += ch;
      }
    }
    std::istringstream words(spaced);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  if (in.bad()) throw InputError("read error");
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw InputError("line " + std::to_string(line.number) + ": " + what);
}

long long parse_int(const Line& line, const std::string& token) {
  long long value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) fail(line, "expected an integer, got '" + token + "'");
  return value;
}

// 1-based id in [1, n] to 0-based.
Vertex parse_vertex(const Line& line, const std::string& token, int n) {
  const long long v = parse_int(line, token);
  if (v < 1 || v > n) {
    fail(line, "vertex " + token + " out of range 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(v - 1);
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    fail(line, "'" + line.tokens[0] + "' takes " + std::to_string(count - 1) +
                   " fields");
  }
}

std::vector<Vertex> parse_centers(const Line& line, int n) {
  std::vector<Vertex> out;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    out.push_back(parse_vertex(line, line.tokens[i], n));
  }
  return out;
}

void write_ids(std::ostream& out, const VertexSet& s) {
  for (Vertex v : s) out << ' ' << v + 1;
}

}  // namespace

GraphFile read_graph(std::istream& in) {
  GraphFile file;
  std::optional<int> n;
  long long declared_edges = 0;
  std::vector<Edge> edges;
  for (const Line& line : tokenize(in)) {
    const std::string& key = line.tokens[0];
    if (key == "p") {
      if (n) fail(line, "second 'p' line");
      expect_arity(line, 3);
      const long long nv = parse_int(line, line.tokens[1]);
      declared_edges = parse_int(line, line.tokens[2]);
      if (nv < 0 || nv > 1'000'000) fail(line, "bad vertex count");
      if (declared_edges < 0) fail(line, "bad edge count");
      n = static_cast<int>(nv);
    } else if (!n) {
      fail(line, "expected 'p <n> <m>' first");
    } else if (key == "e") {
      expect_arity(line, 3);
      const Vertex u = parse_vertex(line, line.tokens[1], *n);
      const Vertex v = parse_vertex(line, line.tokens[2], *n);
      if (u == v) fail(line, "self-loop");
      edges.emplace_back(u, v);
    } else if (key == "b") {
      if (!file.centers) file.centers.emplace();
      for (Vertex c : parse_centers(line, *n)) file.centers->push_back(c);
    } else {
      fail(line, "unknown record '" + key + "'");
    }
  }
  if (!n) throw InputError("missing 'p <n> <m>' line");
  if (static_cast<long long>(edges.size()) != declared_edges) {
    throw InputError("header declares " + std::to_string(declared_edges) +
                     " edges, file has " + std::to_string(edges.size()));
  }
  file.graph = Graph(*n, edges);
  return file;
}

void write_graph(std::ostream& out, const Graph& g,
                 const std::optional<std::vector<Vertex>>& centers) {
  const auto edges = g.edges();
  out << "p " << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  if (centers) {
    out << 'b';
    for (Vertex c : *centers) out << ' ' << c + 1;
    out << '\n';
  }
}

std::vector<Vertex> read_centers(std::istream& in, int n) {
  std::vector<Vertex> out;
  for (const Line& line : tokenize(in)) {
    if (line.tokens[0] != "b") fail(line, "expected a 'b' line");
    for (Vertex c : parse_centers(line, n)) out.push_back(c);
  }
  return out;
}

TeachingMap read_map(std::istream& in, int n) {
  TeachingMap t;
  for (const Line& line : tokenize(in)) {
    if (line.tokens[0] != "t") fail(line, "expected a 't' line");
    if (line.tokens.size() < 3 || line.tokens[2] != ":") {
      fail(line, "expected 't <center>: <examples>'");
    }
    const Vertex center = parse_vertex(line, line.tokens[1], n);
    if (t.has(center)) fail(line, "second line for center " + line.tokens[1]);
    VertexSet examples(static_cast<std::size_t>(n));
    for (std::size_t i = 3; i < line.tokens.size(); ++i) {
      const Vertex w = parse_vertex(line, line.tokens[i], n);
      if (examples.contains(w)) fail(line, "repeated example " + line.tokens[i]);
      examples.insert(w);
    }
    t.assign(center, std::move(examples));
  }
  return t;
}

void write_map(std::ostream& out, const TeachingMap& t) {
  for (const auto& [center, examples] : t.entries()) {
    out << "t " << center + 1 << ':';
    write_ids(out, examples);
    out << '\n';
  }
}

TeachingMap canonicalize_map(const TeachingMap& t, const ConceptClass& b) {
  TeachingMap out;
  for (const auto& [center, examples] : t.entries()) {
    const int index = b.index_of_center(center);
    if (index < 0) {
      throw InputError("map has a line for " + std::to_string(center + 1) +
                       ", which is not a center of the class");
    }
    const Vertex canonical = b.canonical_center(index);
    if (out.has(canonical) && out.at(canonical) != examples) {
      throw InputError("centers " + std::to_string(center + 1) + " and " +
                       std::to_string(canonical + 1) +
                       " share a concept but have different teaching sets");
    }
    out.assign(canonical, examples);
  }
  return out;
}

RootedForest read_decomposition(std::istream& in, int n) {
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const Line& line : tokenize(in)) {
    if (line.tokens[0] != "d") fail(line, "expected a 'd' line");
    expect_arity(line, 3);
    const Vertex v = parse_vertex(line, line.tokens[1], n);
    if (seen[v]) fail(line, "second line for vertex " + line.tokens[1]);
    seen[v] = true;
    if (line.tokens[2] != "0") parent[v] = parse_vertex(line, line.tokens[2], n);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v]) {
      throw InputError("decomposition has no line for vertex " +
                       std::to_string(v + 1));
    }
  }
  return RootedForest(std::move(parent));
}

void write_decomposition(std::ostream& out, const RootedForest& f) {
  for (Vertex v = 0; v < f.size(); ++v) {
    out << "d " << v + 1 << ' ' << f.parent(v) + 1 << '\n';
  }
}

VertexSet read_cover(std::istream& in, int n) {
  VertexSet cover(static_cast<std::size_t>(n));
  for (const Line& line : tokenize(in)) {
    if (line.tokens[0] != "x") fail(line, "expected an 'x' line");
    for (Vertex v : parse_centers(line, n)) cover.insert(v);
  }
  return cover;
}

void write_cover(std::ostream& out, const VertexSet& cover) {
  out << 'x';
  write_ids(out, cover);
  out << '\n';
}

SquareArrangement read_arrangement(std::istream& in) {
  SquareArrangement arr;
  for (const Line& line : tokenize(in)) {
    if (line.tokens[0] != "s") fail(line, "expected an 's' line");
    expect_arity(line, 3);
    try {
      arr.centers.emplace_back(parse_rational(line.tokens[1]),
                               parse_rational(line.tokens[2]));
    } catch (const InputError& e) {
      fail(line, e.what());
    }
  }
  return arr;
}

void write_arrangement(std::ostream& out, const SquareArrangement& arr) {
  for (const auto& [x, y] : arr.centers) {
    out << "s " << format_rational(x) << ' ' << format_rational(y) << '\n';
  }
}

std::vector<std::vector<int>> read_concepts(std::istream& in) {
  std::vector<std::vector<int>> out;
  for (const Line& line : tokenize(in)) {
    std::vector<int> members;
    if (line.tokens.size() == 1 && line.tokens[0] == "-") {
      out.push_back(members);
      continue;
    }
    for (const std::string& token : line.tokens) {
      const long long e = parse_int(line, token);
      if (e < 1 || e > 1'000'000) fail(line, "element " + token + " out of range");
      members.push_back(static_cast<int>(e - 1));
    }
    out.push_back(std::move(members));
  }
  return out;
}

std::string format_verdict(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::kOk:
      return "Ok";
    case Verdict::Kind::kClash:
      return "Clash " + std::to_string(v.u + 1) + " " + std::to_string(v.v + 1);
    case Verdict::Kind::kPositivityViolation:
      return "PositivityViolation " + std::to_string(v.u + 1) + " " +
             std::to_string(v.v + 1);
  }
  return "?";
}

}  // namespace nctd
