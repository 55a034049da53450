// pathsep: build, verify, and bound strongly separating path systems.
//
// Exit codes: 0 success/PASS, 1 verification FAIL, 2 usage/parse/IO,
// 3 unsupported graph class or builder precondition, 4 resource limits or
// inconclusive search, 5 internal error (including a build that fails its own
// re-verification).

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "pathsep/bipartite.hpp"
#include "pathsep/cubic.hpp"
#include "pathsep/degenerate.hpp"
#include "pathsep/error.hpp"
#include "pathsep/generators.hpp"
#include "pathsep/graph_io.hpp"
#include "pathsep/oracle.hpp"
#include "pathsep/path_io.hpp"
#include "pathsep/path_system.hpp"
#include "pathsep/structure.hpp"
#include "pathsep/threads.hpp"

#ifndef PATHSEP_VERSION
#define PATHSEP_VERSION "0.0.0"
#endif

namespace {

using namespace pathsep;
using nlohmann::json;

enum Exit : int { ok = 0, fail = 1, usage = 2, unsupported = 3, limits = 4, internal = 5 };

// Both streams are buffered and emitted once, after the command finishes.
struct Output {
  std::string out;
  std::string err;
  std::string summary;
  template <class... Args>
  void say(fmt::format_string<Args...> f, Args&&... args) {
    out += fmt::format(f, std::forward<Args>(args)...);
    out += '\n';
  }
  template <class... Args>
  void warn(fmt::format_string<Args...> f, Args&&... args) {
    err += fmt::format(f, std::forward<Args>(args)...);
    err += '\n';
  }
};

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse: return usage;
    case ErrorKind::invalid_system: return usage;
    case ErrorKind::precondition: return unsupported;
    case ErrorKind::not_applicable: return unsupported;
    case ErrorKind::limit: return limits;
    case ErrorKind::internal: return internal;
  }
  return internal;
}

Graph load_graph(const std::string& path, bool loose) {
  const auto text = read_text_file(path);
  return loose ? parse_graph_loose(text).graph : parse_graph(text);
}

void emit(Output& o, const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") o.out += contents;
  else write_text_file(path, contents);
}

json verdict_json(const SeparationVerdict& v) {
  json w = nullptr;
  if (!v.pass()) {
    w = {{"kind", v.failure == SeparationFailure::uncovered ? "uncovered" : "comparable"},
         {"first", to_string(v.first)},
         {"shared_paths", v.shared_paths}};
    if (v.failure == SeparationFailure::comparable) w["second"] = to_string(v.second);
  }
  return {{"verdict", v.pass() ? "PASS" : "FAIL"}, {"witness", w}};
}

// ---------------------------------------------------------------- build

struct BuildArgs {
  std::string input;
  std::string method = "auto";
  bool bipartite = false;
  std::optional<std::int64_t> a, b;
  std::string out;
  std::string format = "text";
  std::string trace;
  bool loose = false;
};

int cmd_build(const BuildArgs& args, Output& o) {
  const bool bip = args.bipartite || args.method == "bipartite";
  std::optional<ConstructionTrace> trace;
  std::string construction;
  PathSystem sys;
  std::optional<std::size_t> bound;

  if (bip) {
    if (!args.a || !args.b) throw Error(ErrorKind::parse, "bipartite build needs --a and --b");
    sys = build_ssp_complete_bipartite(*args.a, *args.b);
    construction = "graceful-labeling construction for K_{a,b}, a < b/2";
    bound = static_cast<std::size_t>(*args.b);
  } else {
    if (args.input.empty()) throw Error(ErrorKind::parse, "build needs -i/--input (or --bipartite --a --b)");
    const auto g = load_graph(args.input, args.loose);
    if (args.method == "degenerate") {
      if (!is_2_degenerate(g).two_degenerate) throw Error(ErrorKind::precondition, "graph is not 2-degenerate");
      if (is_connected(g) && g.vertex_count() >= 3) {
        auto built = build_ssp_2degenerate(g);
        sys = std::move(built.system);
        trace = std::move(built.trace);
      } else {
        sys = build_ssp_outerplanar_entry(g).system;
      }
      construction = "2-degenerate induction";
      bound = g.vertex_count();
    } else if (args.method == "cubic") {
      sys = build_ssp_cubic(g).system;
      construction = "cubic re-routing";
      bound = g.vertex_count();
    } else {
      const auto d = args.method == "subcubic" ? build_ssp_subcubic(g) : build_ssp_auto(g);
      sys = d.system;
      std::map<std::string, std::size_t> used;
      for (const auto& c : d.report.components) {
        if (c.builder == BuilderKind::none) continue;
        used[std::string(to_string(c.builder))] += 1;
      }
      std::vector<std::string> parts;
      for (const auto& [name, count] : used) parts.push_back(fmt::format("{} x{}", name, count));
      construction = fmt::format("per-component dispatch: {}", parts.empty() ? "no edges" : fmt::format("{}", fmt::join(parts, ", ")));
      if (d.report.k4_components > 0) construction += fmt::format("; k = {} K4 components", d.report.k4_components);
      bound = d.report.n + d.report.k4_components;
    }
  }

  const auto verdict = verify_strong_separation(sys);
  if (!verdict.pass()) throw Error(ErrorKind::internal, "built system failed verification: " + verdict.describe());
  if (bound && sys.size() > *bound)
    throw Error(ErrorKind::internal, fmt::format("built system has {} paths, bound is {}", sys.size(), *bound));
  if (!args.trace.empty()) {
    if (!trace) throw Error(ErrorKind::precondition, "--trace needs -m degenerate on a connected graph with n >= 3");
    write_text_file(args.trace, to_json(*trace).dump(2) + "\n");
  }

  emit(o, args.out, args.format == "json" ? format_paths_json(sys) : format_paths_text(sys));
  auto& sink = args.out.empty() || args.out == "-" ? o.err : o.out;
  sink += fmt::format("paths = {} ({}); verified PASS\n", sys.size(), construction);
  o.summary = fmt::format("{} paths, verified", sys.size());
  return ok;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string graph, paths;
  bool strict = false;
  bool json_out = false;
  bool loose = false;
};

int cmd_verify(const VerifyArgs& args, Output& o) {
  const auto g = load_graph(args.graph, args.loose);
  const auto sys = attach(g, parse_paths(read_text_file(args.paths)));
  const auto verdict = verify_strong_separation(sys);
  std::optional<StructuralVerdict> structural;
  if (args.strict) structural = verify_structural_properties(sys);
  const bool pass = verdict.pass() && (!structural || structural->pass);

  if (args.json_out) {
    auto doc = verdict_json(verdict);
    doc["paths"] = sys.size();
    doc["edges"] = g.edge_count();
    if (structural) {
      doc["structural"] = {{"pass", structural->pass}, {"reason", structural->reason}};
      if (!structural->pass) doc["verdict"] = "FAIL";
    }
    o.say("{}", doc.dump());
  } else {
    o.say("{}: {} paths over {} edges", verdict.pass() ? "PASS" : "FAIL", sys.size(), g.edge_count());
    if (!verdict.pass()) o.say("witness: {}", verdict.describe());
    if (structural) {
      if (structural->pass) o.say("structural properties: PASS");
      else o.say("structural properties: FAIL: {}", structural->reason);
    }
  }
  o.summary = pass ? "PASS" : "FAIL";
  return pass ? ok : fail;
}

// ---------------------------------------------------------------- exact

struct ExactArgs {
  std::string graph;
  OracleConfig cfg;
  std::string out;
  bool json_out = false;
  bool loose = false;
};

int cmd_exact(const ExactArgs& args, Output& o) {
  const auto g = load_graph(args.graph, args.loose);
  const auto r = exact_ssp(g, args.cfg);
  if (!args.out.empty()) write_text_file(args.out, format_paths_text(r.witness));
  if (args.json_out) {
    json doc = {{"lower", r.lower}, {"upper", r.upper}, {"conclusive", r.conclusive},
                {"enumerated_paths", r.enumerated_paths}, {"search_nodes", r.search_nodes}};
    doc["ssp"] = r.conclusive ? json(r.lower) : json(nullptr);
    json witness = json::array();
    for (const auto& p : r.witness.paths()) witness.push_back(std::vector<Vertex>(p.vertices().begin(), p.vertices().end()));
    doc["witness"] = witness;
    o.say("{}", doc.dump());
  } else if (r.conclusive) {
    o.say("ssp = {}", r.lower);
    if (args.out.empty()) o.out += format_paths_text(r.witness);
  } else {
    o.say("ssp in [{}, {}] (inconclusive)", r.lower, r.upper);
  }
  o.summary = r.conclusive ? fmt::format("ssp = {}", r.lower) : fmt::format("ssp in [{}, {}]", r.lower, r.upper);
  return r.conclusive ? ok : limits;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  std::optional<std::int64_t> a, b, steps;
  bool table = false;
  bool json_out = false;
};

int cmd_bounds(const BoundsArgs& args, Output& o) {
  if (!args.b) throw Error(ErrorKind::parse, "bounds needs --b");
  if (args.table) {
    const auto rows = bounds_table(*args.b, args.steps.value_or(*args.b));
    if (args.json_out) {
      json doc = json::array();
      for (const auto& r : rows) doc.push_back({{"a", r.a}, {"lower", r.lower}});
      o.say("{}", doc.dump());
    } else {
      o.out += bounds_csv(rows);
    }
    o.summary = fmt::format("{} rows", rows.size());
    return ok;
  }
  if (!args.a) throw Error(ErrorKind::parse, "bounds needs --a (or --table)");
  const auto r = bipartite_bounds(*args.a, *args.b);
  if (args.json_out) {
    json doc = {{"a", r.a}, {"b", r.b}, {"lower", r.lower}, {"lower_source", r.lower_source}};
    doc["upper"] = r.upper ? json(*r.upper) : json(nullptr);
    doc["exact"] = r.exact ? json(*r.exact) : json(nullptr);
    if (r.upper) doc["upper_source"] = r.upper_source;
    o.say("{}", doc.dump());
  } else {
    o.say("K_{{{},{}}}", r.a, r.b);
    if (r.exact) o.say("exact = {}", *r.exact);
    o.say("lower = {} ({})", r.lower_exact ? std::to_string(*r.lower_exact) : format_bound_value(r.lower), r.lower_source);
    if (r.upper) o.say("upper = {} ({})", format_bound_value(*r.upper), r.upper_source);
  }
  o.summary = r.exact ? fmt::format("exact = {}", *r.exact) : fmt::format("lower = {}", format_bound_value(r.lower));
  return ok;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string family;
  std::optional<std::size_t> n, a, b;
  std::uint64_t seed = 0;
  std::string name;
  std::string out;
};

int cmd_gen(const GenArgs& args, Output& o) {
  Graph g;
  if (args.family == "two-degenerate") {
    if (!args.n) throw Error(ErrorKind::parse, "two-degenerate needs -n");
    g = random_two_degenerate(*args.n, args.seed);
  } else if (args.family == "cubic") {
    if (!args.n) throw Error(ErrorKind::parse, "cubic needs -n");
    g = random_cubic(*args.n, args.seed);
  } else if (args.family == "complete-bipartite") {
    if (!args.a || !args.b) throw Error(ErrorKind::parse, "complete-bipartite needs --a and --b");
    g = complete_bipartite(*args.a, *args.b);
  } else {
    if (args.name.empty()) throw Error(ErrorKind::parse, "named needs --name");
    g = named_graph(args.name);
  }
  emit(o, args.out, format_graph(g));
  o.summary = fmt::format("{} vertices, {} edges", g.vertex_count(), g.edge_count());
  return ok;
}

// ---------------------------------------------------------------- profile

struct ProfileArgs {
  std::string graph, paths;
  std::optional<std::int64_t> a, b;
  bool loose = false;
};

int cmd_profile(const ProfileArgs& args, Output& o) {
  const auto g = load_graph(args.graph, args.loose);
  const auto sys = attach(g, parse_paths(read_text_file(args.paths)));
  const auto prof = incidence_profile(sys);
  o.say("m = {}, p = {}", g.edge_count(), sys.size());
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < prof.histogram.size(); ++i)
    if (prof.histogram[i] > 0) parts.push_back(fmt::format("e{}={}", i, prof.histogram[i]));
  o.say("{}", fmt::join(parts, " "));
  o.summary = fmt::format("{}", fmt::join(parts, " "));
  if (!args.a && !args.b) return ok;
  if (!args.a || !args.b) throw Error(ErrorKind::parse, "profile needs both --a and --b");
  const auto verdict = verify_strong_separation(sys);
  if (!verdict.pass()) {
    o.say("certificate skipped: {}", verdict.describe());
    return fail;
  }
  const auto c = counting_certificate(sys, *args.a, *args.b);
  o.say("multiplicity: 3ab - 2e1 - e2 = {} <= 2ap = {}; slack {}", c.multiplicity_lhs, c.multiplicity_rhs,
        c.multiplicity_slack());
  o.say("pairs: e2 + 2e1 = {} <= C(p - e1, 2) + 2e1 = {}; slack {}", c.pair_lhs, c.pair_rhs, c.pair_slack());
  o.say("relaxed pairs: e2 + 2e1 = {} <= p^2/2 = {}; slack {}", c.pair_lhs, format_bound_value(c.relaxed_rhs),
        format_bound_value(c.relaxed_slack()));
  return c.holds() ? ok : fail;
}

json options_json(const CLI::App* sub) {
  json flags = json::object();
  for (const auto* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    const auto& res = opt->results();
    flags[opt->get_name()] = res.size() == 1 ? json(res.front()) : json(res);
  }
  return flags;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strongly separating path systems: build, verify, exact search, bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PATHSEP_VERSION);
  std::string manifest;
  app.add_option("--manifest", manifest, "write a JSON run manifest to this file");

  BuildArgs build;
  auto* b = app.add_subcommand("build", "build a strongly separating path system");
  b->add_option("-i,--input", build.input, "graph file");
  b->add_option("-m,--method", build.method, "construction")
      ->check(CLI::IsMember({"auto", "degenerate", "cubic", "subcubic", "bipartite"}));
  b->add_flag("--bipartite", build.bipartite, "K_{a,b} construction (same as -m bipartite)");
  b->add_option("--a", build.a, "smaller part size")->check(CLI::PositiveNumber);
  b->add_option("--b", build.b, "larger part size")->check(CLI::PositiveNumber);
  b->add_option("-o,--out", build.out, "path file to write (default stdout)");
  b->add_option("--format", build.format, "path file format")->check(CLI::IsMember({"text", "json"}));
  b->add_option("--trace", build.trace, "write the construction trace as JSON (-m degenerate)");
  b->add_flag("--loose", build.loose, "input is a header-less edge list");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "check strong separation of a path system");
  v->add_option("graph", verify.graph, "graph file")->required();
  v->add_option("paths", verify.paths, "path file")->required();
  v->add_flag("--strict", verify.strict, "also require every edge in exactly 2 paths and every vertex an endpoint of exactly 2");
  v->add_flag("--json", verify.json_out, "machine-readable output");
  v->add_flag("--loose", verify.loose, "graph is a header-less edge list");

  ExactArgs exact;
  auto* x = app.add_subcommand("exact", "exact minimum by search (small graphs)");
  x->add_option("graph", exact.graph, "graph file")->required();
  x->add_option("--max-vertices", exact.cfg.max_vertices, "refuse larger graphs")->capture_default_str();
  x->add_option("--max-edges", exact.cfg.max_edges, "refuse larger graphs")->capture_default_str();
  x->add_option("--max-paths", exact.cfg.max_path_budget, "largest system size searched")->capture_default_str();
  x->add_option("--time-budget", exact.cfg.time_budget_seconds, "seconds")->capture_default_str();
  x->add_option("--threads", exact.cfg.threads, "0 = OpenMP default");
  x->add_flag("--force", exact.cfg.force, "ignore the vertex and edge limits");
  x->add_option("-o,--out", exact.out, "write the witness system");
  x->add_flag("--json", exact.json_out, "machine-readable output");
  x->add_flag("--loose", exact.loose, "graph is a header-less edge list");

  BoundsArgs bounds;
  auto* bd = app.add_subcommand("bounds", "bounds on the minimum for K_{a,b}");
  bd->add_option("--a", bounds.a, "smaller part size");
  bd->add_option("--b", bounds.b, "larger part size");
  bd->add_flag("--table", bounds.table, "CSV of the lower bound for a spread over [1, b]");
  bd->add_option("--steps", bounds.steps, "table rows (default b)");
  bd->add_flag("--json", bounds.json_out, "machine-readable output");

  GenArgs gen;
  auto* gn = app.add_subcommand("gen", "generate a test graph");
  gn->add_option("-f,--family", gen.family, "graph family")
      ->required()
      ->check(CLI::IsMember({"two-degenerate", "cubic", "complete-bipartite", "named"}));
  gn->add_option("-n", gen.n, "vertex count");
  gn->add_option("-s,--seed", gen.seed, "64-bit seed")->capture_default_str();
  gn->add_option("--name", gen.name, "named graph")->check(CLI::IsMember(named_graph_names()));
  gn->add_option("--a", gen.a, "smaller part size");
  gn->add_option("--b", gen.b, "larger part size");
  gn->add_option("-o,--out", gen.out, "graph file to write (default stdout)");

  ProfileArgs profile;
  auto* pr = app.add_subcommand("profile", "incidence histogram and counting certificate");
  pr->add_option("graph", profile.graph, "graph file")->required();
  pr->add_option("paths", profile.paths, "path file")->required();
  pr->add_option("--a", profile.a, "K_{a,b} part size");
  pr->add_option("--b", profile.b, "K_{a,b} part size");
  pr->add_flag("--loose", profile.loose, "graph is a header-less edge list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  apply_thread_cap_from_env();
  const auto started = std::chrono::system_clock::now();
  Output o;
  int code = ok;
  CLI::App* sub = app.get_subcommands().front();
  try {
    if (sub == b) code = cmd_build(build, o);
    else if (sub == v) code = cmd_verify(verify, o);
    else if (sub == x) code = cmd_exact(exact, o);
    else if (sub == bd) code = cmd_bounds(bounds, o);
    else if (sub == gn) code = cmd_gen(gen, o);
    else code = cmd_profile(profile, o);
  } catch (const Error& e) {
    code = exit_for(e.kind());
    o.warn("error: {}", e.what());
    o.summary = fmt::format("error: {}", e.what());
  } catch (const std::exception& e) {
    code = internal;
    o.warn("error: {}", e.what());
    o.summary = fmt::format("error: {}", e.what());
  }

  std::cout << o.out << std::flush;
  std::cerr << o.err << std::flush;

  if (!manifest.empty()) {
    std::vector<std::string> inputs;
    for (const auto* s : {&build.input, &verify.graph, &verify.paths, &exact.graph, &profile.graph, &profile.paths})
      if (!s->empty()) inputs.push_back(*s);
    json doc = {{"command", sub->get_name()},
                {"inputs", inputs},
                {"flags", options_json(sub)},
                {"tool_version", PATHSEP_VERSION},
                {"outcome", {{"exit_code", code}, {"summary", o.summary}}},
                {"timestamp", fmt::format("{}", std::chrono::duration_cast<std::chrono::seconds>(
                                                    started.time_since_epoch()).count())}};
    doc["seed"] = sub == gn ? json(gen.seed) : json(nullptr);
    try {
      write_text_file(manifest, doc.dump(2) + "\n");
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      if (code == ok) code = usage;
    }
  }
  return code;
}
