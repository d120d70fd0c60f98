#include "nctd/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "nctd/constructions.hpp"
#include "nctd/errors.hpp"
#include "nctd/exact_solver.hpp"
#include "nctd/io.hpp"
#include "nctd/reductions.hpp"
#include "nctd/td_kernel.hpp"
#include "nctd/vc_kernel.hpp"

namespace nctd::cli {
namespace {

struct Options {
  std::string graph;
  std::string classes;
  std::string map;
  std::string variant = "general";
  std::string strategy = "direct";
  std::optional<int> k;
  bool minimize = false;
  std::string cover;
  std::string decomp;
  int threads = 1;
  std::optional<std::uint64_t> node_limit;
  bool porcelain = false;
  std::string out;
  std::string trace;
  bool planar_pos = false;
  bool planar = false;
  bool unit_square = false;
  std::string arrangement;
  std::string graph_out;
  std::string gadget;
  std::string cnf;
  std::string concepts;
  std::optional<int> universe;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  return in;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << body;
  if (!file.flush()) throw InputError("cannot write " + path);
}

std::uint64_t env_number(const char* name, std::uint64_t fallback) {
  const char* text = std::getenv(name);
  if (text == nullptr || *text == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(text, &end, 10);
  if (*end != '\0' || text[0] == '-') {
    throw InputError(std::string(name) + " must be a non-negative integer");
  }
  return value;
}

Variant parse_variant(const std::string& text) {
  return text == "positive" ? Variant::kPositive : Variant::kGeneral;
}

class Runner {
 public:
  Runner(const Options& opt, RunReport& report, std::ostream& out)
      : opt_(opt), report_(report), out_(out) {}

  int verify_cmd();
  int solve_cmd();
  int construct_cmd();
  int generate_cmd();
  int encode_cmd();
  int kernelize_cmd();

 private:
  void load_instance();
  SolverOptions solver_options() const;
  TreedepthOptions treedepth_options() const;
  TdKernelOptions kernel_options() const;
  RootedForest decomposition() const;
  std::optional<VertexSet> cover() const;
  void describe(const Graph& g, const ConceptClass& b);
  // Re-verifies `t` before it leaves the process.
  void emit_map(const TeachingMap& t, const ConceptClass& b, Variant variant);
  void emit(const std::string& path, const std::string& body,
            const std::string& field);
  void flush();

  const Options& opt_;
  RunReport& report_;
  std::ostream& out_;
  Graph graph_;
  ConceptClass class_;
  std::vector<std::string> artifacts_;
};

void Runner::load_instance() {
  std::ifstream in = open_in(opt_.graph);
  GraphFile file = read_graph(in);
  graph_ = std::move(file.graph);
  if (!opt_.classes.empty()) {
    std::ifstream cin = open_in(opt_.classes);
    class_ = ConceptClass(graph_, read_centers(cin, graph_.order()));
  } else if (file.centers) {
    class_ = ConceptClass(graph_, *file.centers);
  } else {
    class_ = ConceptClass::all(graph_);
  }
  describe(graph_, class_);
}

void Runner::describe(const Graph& g, const ConceptClass& b) {
  report_.n = g.order();
  report_.m = g.edge_count();
  report_.concepts = b.size();
}

SolverOptions Runner::solver_options() const {
  SolverOptions o;
  o.node_limit = opt_.node_limit.value_or(env_number("NCTD_NODE_LIMIT", 0));
  o.candidate_limit = env_number("NCTD_CANDIDATE_LIMIT", o.candidate_limit);
  o.threads = opt_.threads;
  return o;
}

TreedepthOptions Runner::treedepth_options() const {
  TreedepthOptions o;
  o.max_component_size = static_cast<int>(
      env_number("NCTD_TD_MAX_VERTICES",
                 static_cast<std::uint64_t>(o.max_component_size)));
  o.node_limit = env_number("NCTD_TD_NODE_LIMIT", o.node_limit);
  return o;
}

TdKernelOptions Runner::kernel_options() const {
  TdKernelOptions o;
  o.signature_cap = static_cast<int>(env_number(
      "NCTD_SIGNATURE_CAP", static_cast<std::uint64_t>(o.signature_cap)));
  return o;
}

RootedForest Runner::decomposition() const {
  if (!opt_.decomp.empty()) {
    std::ifstream in = open_in(opt_.decomp);
    RootedForest f = read_decomposition(in, graph_.order());
    if (!f.is_decomposition_of(graph_)) {
      throw InputError(opt_.decomp + " is not a treedepth decomposition of the graph");
    }
    return f;
  }
  return treedepth_decomposition(graph_, treedepth_options());
}

std::optional<VertexSet> Runner::cover() const {
  if (opt_.cover.empty()) return std::nullopt;
  std::ifstream in = open_in(opt_.cover);
  VertexSet x = read_cover(in, graph_.order());
  if (!is_vertex_cover(graph_, x)) {
    throw InputError(opt_.cover + " is not a vertex cover of the graph");
  }
  return x;
}

void Runner::emit(const std::string& path, const std::string& body,
                  const std::string& field) {
  if (!path.empty()) {
    write_file(path, body);
  } else {
    artifacts_.push_back(body);
  }
  if (!field.empty()) report_.certificate = path.empty() ? "stdout" : path;
}

void Runner::emit_map(const TeachingMap& t, const ConceptClass& b,
                      Variant variant) {
  const Verdict v = verify(b, t, variant);
  report_.verified = v.ok();
  if (!v.ok()) {
    throw std::logic_error("certificate does not verify: " + format_verdict(v));
  }
  std::ostringstream body;
  write_map(body, t);
  emit(opt_.out, body.str(), "certificate");
}

void Runner::flush() {
  report_.print(out_, opt_.porcelain);
  for (const std::string& body : artifacts_) out_ << '\n' << body;
}

int Runner::verify_cmd() {
  load_instance();
  std::ifstream in = open_in(opt_.map);
  const TeachingMap t = canonicalize_map(read_map(in, graph_.order()), class_);
  const Verdict v = verify(class_, t, parse_variant(opt_.variant));
  report_.variant = opt_.variant;
  report_.result = format_verdict(v);
  report_.value = map_size(t);
  flush();
  return v.ok() ? kSuccess : kNo;
}

int Runner::solve_cmd() {
  if (opt_.k.has_value() == opt_.minimize) {
    throw CLI::ValidationError("solve needs exactly one of --k and --minimize");
  }
  if (opt_.strategy == "vc" && opt_.variant != "general") {
    throw CLI::ValidationError("--strategy vc needs --variant general");
  }
  if (opt_.strategy == "td" && opt_.variant != "positive") {
    throw CLI::ValidationError("--strategy td needs --variant positive");
  }
  load_instance();
  const Variant variant = parse_variant(opt_.variant);
  report_.variant = opt_.variant;
  report_.strategy = opt_.strategy;
  const SolverOptions options = solver_options();

  std::optional<VertexSet> x;
  std::optional<RootedForest> forest;
  if (opt_.strategy == "vc") {
    x = cover();
  } else if (opt_.strategy == "td") {
    forest = decomposition();
    report_.treedepth = forest->height();
  }

  auto decide = [&](int k) {
    Instance inst{graph_, class_, k, variant};
    if (opt_.strategy == "vc") {
      VcSolveResult r = solve_vc(inst, x, options);
      report_.cover = static_cast<int>(r.params.cover.size());
      report_.kernel = r.kernel_order;
      return r.result;
    }
    if (opt_.strategy == "td") {
      TdSolveResult r = solve_td(inst, forest, options, kernel_options());
      report_.kernel = r.kernel_order;
      return r.result;
    }
    return solve(inst, options);
  };

  SolveResult result;
  if (opt_.minimize) {
    for (int k = 0;; ++k) {
      result = decide(k);
      if (result.decision != Decision::kNo) break;
    }
    if (result.decision == Decision::kYes) report_.value = map_size(*result.map);
  } else {
    if (*opt_.k < 0) throw CLI::ValidationError("--k must be non-negative");
    report_.k = *opt_.k;
    result = decide(*opt_.k);
  }

  switch (result.decision) {
    case Decision::kYes:
      report_.result = "yes";
      emit_map(*result.map, class_, variant);
      flush();
      return kSuccess;
    case Decision::kNo:
      report_.result = "no";
      flush();
      return kNo;
    case Decision::kResourceExhausted:
      report_.result = "resource-exhausted";
      flush();
      return kResource;
  }
  return kInternal;
}

int Runner::construct_cmd() {
  const int chosen = opt_.planar_pos + opt_.planar + opt_.unit_square;
  if (chosen != 1) {
    throw CLI::ValidationError(
        "construct needs exactly one of --planar-pos, --planar, --unit-square");
  }
  TeachingMap t;
  Variant variant = Variant::kPositive;
  if (opt_.unit_square) {
    if (opt_.arrangement.empty()) {
      throw CLI::ValidationError("--unit-square needs --arrangement");
    }
    std::ifstream in = open_in(opt_.arrangement);
    const SquareArrangement arr = read_arrangement(in);
    graph_ = unit_square_graph(arr);
    if (!opt_.classes.empty()) {
      std::ifstream cin = open_in(opt_.classes);
      class_ = ConceptClass(graph_, read_centers(cin, graph_.order()));
    } else {
      class_ = ConceptClass::all(graph_);
    }
    describe(graph_, class_);
    if (!opt_.graph_out.empty()) {
      std::ostringstream body;
      write_graph(body, graph_, class_.centers());
      write_file(opt_.graph_out, body.str());
    }
    t = unit_square_positive_nctm(arr, class_);
    report_.strategy = "unit-square";
  } else {
    if (opt_.graph.empty()) throw CLI::ValidationError("--graph is required");
    load_instance();
    if (opt_.planar_pos) {
      t = planar_positive_nctm(graph_, class_);
      report_.strategy = "planar-pos";
    } else {
      t = planar_nctm(graph_, class_);
      variant = Variant::kGeneral;
      report_.strategy = "planar";
    }
  }
  report_.variant = to_string(variant);
  report_.result = "ok";
  report_.value = map_size(t);
  emit_map(t, class_, variant);
  flush();
  return kSuccess;
}

int Runner::generate_cmd() {
  std::ifstream in = open_in(opt_.cnf);
  const CnfFormula phi = parse_dimacs(in);
  const GadgetInstance g =
      opt_.gadget == "positive" ? encode_positive(phi) : encode_general(phi);
  describe(g.instance.graph, g.instance.concepts);
  report_.variant = to_string(g.instance.variant);
  report_.k = g.instance.k;
  report_.result = "ok";
  std::ostringstream body;
  for (Vertex v = 0; v < g.layout.order(); ++v) {
    body << "# " << v + 1 << ' ' << g.layout.names[v] << '\n';
  }
  write_graph(body, g.instance.graph, g.instance.concepts.centers());
  emit(opt_.out, body.str(), "graph");
  flush();
  return kSuccess;
}

int Runner::encode_cmd() {
  std::ifstream in = open_in(opt_.concepts);
  const auto concepts = read_concepts(in);
  int universe = 0;
  for (const auto& c : concepts) {
    for (int e : c) universe = std::max(universe, e + 1);
  }
  if (opt_.universe) {
    if (*opt_.universe < universe) {
      throw InputError("--universe is smaller than the largest element");
    }
    universe = *opt_.universe;
  }
  const EncodedClass enc = encode_concept_class(universe, concepts);
  describe(enc.graph, enc.concepts);
  report_.result = "ok";
  std::ostringstream body;
  write_graph(body, enc.graph, enc.concepts.centers());
  emit(opt_.out, body.str(), "graph");
  flush();
  return kSuccess;
}

int Runner::kernelize_cmd() {
  if (!opt_.k) throw CLI::ValidationError("kernelize needs --k");
  if (opt_.strategy != "vc" && opt_.strategy != "td") {
    throw CLI::ValidationError("kernelize needs --strategy vc or td");
  }
  load_instance();
  report_.strategy = opt_.strategy;
  report_.k = *opt_.k;
  std::ostringstream kernel;
  std::ostringstream trace;
  const Instance* reduced = nullptr;
  Instance original{graph_, class_, *opt_.k, Variant::kGeneral};
  VcKernelResult vc;
  TdKernelResult td;
  if (opt_.strategy == "vc") {
    report_.variant = "general";
    VertexSet x = cover().value_or(minimalize_cover(graph_, vertex_cover_2approx(graph_)));
    vc = kernelize_vc(original, x);
    report_.cover = static_cast<int>(x.size());
    trace << "q " << (vc.trace.params.q ? std::to_string(*vc.trace.params.q) : "none")
          << '\n';
    trace << "bound " << vc.trace.params.k_bound << '\n';
    write_cover(trace, vc.trace.params.cover);
    if (vc.immediate_yes) {
      report_.result = "yes";
      emit_map(*vc.immediate_yes, class_, Variant::kGeneral);
      flush();
      return kSuccess;
    }
    for (const VcDeletion& d : vc.trace.deletions) {
      trace << "r " << d.vertex + 1 << ' '
            << (d.rule == VcRule::kConceptTwin ? "concept" : "nonconcept") << " :";
      for (Vertex v : d.twins) trace << ' ' << v + 1;
      trace << '\n';
    }
    for (std::size_t i = 0; i < vc.trace.new_to_old.size(); ++i) {
      trace << "k " << i + 1 << ' ' << vc.trace.new_to_old[i] + 1 << '\n';
    }
    reduced = &vc.kernel;
  } else {
    report_.variant = "positive";
    original.variant = Variant::kPositive;
    const RootedForest forest = decomposition();
    report_.treedepth = forest.height();
    td = kernelize_td(original, forest, kernel_options());
    for (const TdDeletion& d : td.trace.deletions) {
      trace << "r " << d.node + 1 << " :";
      for (Vertex v : d.removed) trace << ' ' << v + 1;
      trace << '\n';
      for (const auto& s : d.survivors) {
        trace << "s :";
        for (Vertex v : s) trace << ' ' << v + 1;
        trace << '\n';
      }
    }
    for (std::size_t i = 0; i < td.trace.new_to_old.size(); ++i) {
      trace << "k " << i + 1 << ' ' << td.trace.new_to_old[i] + 1 << '\n';
    }
    reduced = &td.kernel;
  }
  report_.kernel = reduced->graph.order();
  report_.result = "ok";
  write_graph(kernel, reduced->graph, reduced->concepts.centers());
  emit(opt_.out, kernel.str(), "kernel");
  emit(opt_.trace, trace.str(), "");
  flush();
  return kSuccess;
}

std::string join(const std::vector<std::string>& args) {
  std::string s = "nctd";
  for (const std::string& a : args) s += " " + a;
  return s;
}

}  // namespace

void RunReport::print(std::ostream& out, bool porcelain) const {
  const char* sep = porcelain ? "=" : ": ";
  auto text = [&](const char* key, const std::string& value) {
    if (!value.empty()) out << key << sep << value << '\n';
  };
  auto number = [&](const char* key, const std::optional<int>& value) {
    if (value) out << key << sep << *value << '\n';
  };
  text("command", command);
  text("variant", variant);
  text("strategy", strategy);
  number("n", n);
  number("m", m);
  number("concepts", concepts);
  number("cover", cover);
  number("treedepth", treedepth);
  number("kernel", kernel);
  number("k", k);
  text("result", result);
  number("value", value);
  text("certificate", certificate);
  if (verified) text("verified", *verified ? "yes" : "no");
}

Outcome run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  RunReport& report = outcome.report;
  report.command = join(args);
  Options opt;

  CLI::App app("Non-clashing teaching maps for closed-neighborhood concept classes",
               "nctd");
  app.require_subcommand(1);
  const std::vector<std::string> variants{"general", "positive"};

  auto instance_flags = [&](CLI::App* sub, bool graph_required) {
    auto* g = sub->add_option("--graph", opt.graph, "graph file (p/e lines, optional b line)");
    if (graph_required) g->required();
    g->check(CLI::ExistingFile);
    sub->add_option("--class", opt.classes, "file of b lines; overrides the graph file")
        ->check(CLI::ExistingFile);
  };
  auto common = [&](CLI::App* sub) {
    sub->add_flag("--porcelain", opt.porcelain, "key=value report lines");
    sub->add_option("--out", opt.out, "write the artifact here instead of stdout");
  };

  auto* verify_app = app.add_subcommand("verify", "check a teaching map");
  instance_flags(verify_app, true);
  verify_app->add_option("--map", opt.map, "teaching map file")->required()->check(CLI::ExistingFile);
  verify_app->add_option("--variant", opt.variant)->check(CLI::IsMember(variants));
  verify_app->add_flag("--porcelain", opt.porcelain, "key=value report lines");

  auto* solve_app = app.add_subcommand("solve", "decide or minimize the map size");
  instance_flags(solve_app, true);
  solve_app->add_option("--variant", opt.variant)->check(CLI::IsMember(variants));
  solve_app->add_option("--strategy", opt.strategy)
      ->check(CLI::IsMember({"direct", "vc", "td"}));
  solve_app->add_option("--k", opt.k, "size bound");
  solve_app->add_flag("--minimize", opt.minimize, "smallest size with a map");
  solve_app->add_option("--cover", opt.cover, "vertex cover file (x line)")->check(CLI::ExistingFile);
  solve_app->add_option("--decomp", opt.decomp, "decomposition file (d lines)")->check(CLI::ExistingFile);
  solve_app->add_option("--threads", opt.threads, "search workers")->check(CLI::Range(1, 256));
  solve_app->add_option("--node-limit", opt.node_limit, "search nodes per decision, 0 = none");
  common(solve_app);

  auto* construct_app = app.add_subcommand("construct", "build a bounded map");
  instance_flags(construct_app, false);
  construct_app->add_flag("--planar-pos", opt.planar_pos, "positive map of size <= 7");
  construct_app->add_flag("--planar", opt.planar, "map of size <= 5");
  construct_app->add_flag("--unit-square", opt.unit_square, "positive map of size <= 4");
  construct_app->add_option("--arrangement", opt.arrangement, "square centers (s lines)")
      ->check(CLI::ExistingFile);
  construct_app->add_option("--graph-out", opt.graph_out, "write the unit-square graph here");
  common(construct_app);

  auto* generate_app = app.add_subcommand("generate", "3-SAT gadget graph");
  generate_app->add_option("--gadget", opt.gadget)->required()->check(CLI::IsMember(variants));
  generate_app->add_option("--cnf", opt.cnf, "DIMACS file")->required()->check(CLI::ExistingFile);
  common(generate_app);

  auto* encode_app = app.add_subcommand("encode", "graph of a finite concept class");
  encode_app->add_option("--concepts", opt.concepts, "one concept per line")
      ->required()->check(CLI::ExistingFile);
  encode_app->add_option("--universe", opt.universe, "number of elements");
  common(encode_app);

  auto* kernelize_app = app.add_subcommand("kernelize", "emit a kernel and its trace");
  instance_flags(kernelize_app, true);
  kernelize_app->add_option("--strategy", opt.strategy)->required()->check(CLI::IsMember({"vc", "td"}));
  kernelize_app->add_option("--k", opt.k, "size bound")->required();
  kernelize_app->add_option("--cover", opt.cover)->check(CLI::ExistingFile);
  kernelize_app->add_option("--decomp", opt.decomp)->check(CLI::ExistingFile);
  kernelize_app->add_option("--trace", opt.trace, "write the trace here");
  common(kernelize_app);

  auto finish = [&](int code) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    report.seconds = elapsed.count();
    err << "time" << (opt.porcelain ? "=" : ": ") << std::fixed << std::setprecision(3)
        << report.seconds << "s\n";
    outcome.exit_code = code;
    return outcome;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    Runner runner(opt, report, out);
    if (*verify_app) return finish(runner.verify_cmd());
    if (*solve_app) return finish(runner.solve_cmd());
    if (*construct_app) return finish(runner.construct_cmd());
    if (*generate_app) return finish(runner.generate_cmd());
    if (*encode_app) return finish(runner.encode_cmd());
    return finish(runner.kernelize_cmd());
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    outcome.exit_code = kSuccess;
    return outcome;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    outcome.exit_code = kUsage;
    return outcome;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return finish(kUsage);
  } catch (const PlanarityViolation& e) {
    err << "not planar: " << e.what() << '\n';
    return finish(kUsage);
  } catch (const ResourceLimitError& e) {
    report.result = "resource-exhausted";
    err << "resource limit: " << e.what() << '\n';
    return finish(kResource);
  } catch (const LiftingFailure& e) {
    err << "internal error: " << e.what() << '\n';
    return finish(kInternal);
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return finish(kInternal);
  }
}

}  // namespace nctd::cli
