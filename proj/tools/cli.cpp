#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "sdg/analysis.hpp"
#include "sdg/certificate_io.hpp"
#include "sdg/cycles.hpp"
#include "sdg/enumerate.hpp"
#include "sdg/fds_io.hpp"
#include "sdg/graph_io.hpp"
#include "sdg/synthesis.hpp"

namespace sdg::cli {

namespace {

using Report = nlohmann::ordered_json;

void render_lines(std::ostream& os, const std::string& prefix, const Report& r) {
  for (const auto& [key, value] : r.items()) {
    const auto name = prefix + key;
    if (value.is_object() && !value.empty() && name != "fds" && name != "witness") {
      render_lines(os, name + ".", value);
      continue;
    }
    os << name << ":";
    if (value.is_string()) {
      os << ' ' << value.get<std::string>();
    } else if (value.is_array() && std::all_of(value.begin(), value.end(), [](const auto& v) { return v.is_primitive(); })) {
      for (const auto& v : value) os << ' ' << (v.is_string() ? v.get<std::string>() : v.dump());
    } else {
      os << ' ' << value.dump();
    }
    os << '\n';
  }
}

std::string render(const Report& r, bool as_json) {
  if (as_json) return r.dump(2) + "\n";
  std::ostringstream os;
  render_lines(os, "", r);
  return os.str();
}

Limits limits_for(const CommandRequest& r) {
  Limits l;
  if (const char* env = std::getenv("SDG_CAP")) {
    try {
      l.state_cap = std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("SDG_CAP is not a number: ") + env);
    }
  }
  if (r.cap != 0) l.state_cap = r.cap;
  l.candidate_cap = std::max(l.candidate_cap, l.state_cap);
  return l;
}

std::vector<std::string> names_of(const SignedDigraph& g, const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.name(v));
  return out;
}

Report components_json(const SignedDigraph& g, const std::vector<std::vector<Vertex>>& comps) {
  Report out = Report::array();
  for (const auto& c : comps) out.push_back(names_of(g, c));
  return out;
}

std::filesystem::path certificate_path(const std::filesystem::path& out) {
  auto p = out;
  p.replace_extension();
  p += ".cert.json";
  return p;
}

SignedDigraph load_graph(const CommandRequest& r) {
  if (r.graph.empty()) throw ParseError("--graph is required");
  return read_sdg_file(r.graph);
}

Fds load_system(const std::filesystem::path& p, const SignedDigraph& g, const Limits& l, const char* what) {
  auto f = read_fds_file(p, l.state_cap);
  if (f.dimension() != g.vertex_count())
    throw PreconditionError(std::string(what) + " has " + std::to_string(f.dimension()) + " components, graph has " +
                            std::to_string(g.vertex_count()) + " vertices");
  return f;
}

struct Verdict {
  Report checks = Report::object();
  std::vector<std::string> failed;

  void record(const std::string& name, bool ok, const std::string& detail = {}) {
    checks[name] = ok ? "pass" : (detail.empty() ? "fail" : "fail (" + detail + ")");
    if (!ok) failed.push_back(name);
  }
  bool ok() const { return failed.empty(); }
};

// Checks shared by verify and by every synth command on its own output.
Verdict verify_bundle(const SignedDigraph& g, const Fds& f, const std::optional<Fds>& h, std::optional<std::size_t> steps,
                      Report& info) {
  Verdict v;
  const auto ig = interaction_graph(f, g.names());
  std::string diff;
  for (const auto& a : arc_difference(g, ig)) diff += (diff.empty() ? "missing " : ", ") + describe(g, a);
  for (const auto& a : arc_difference(ig, g)) diff += (diff.empty() ? "extra " : ", extra ") + describe(g, a);
  v.record("interaction_graph", diff.empty(), diff);
  const auto db = check_degree_bounded(f, ig);
  v.record("degree_bounded", db.bounded, db.bounded ? "" : "at " + [&] {
    std::string s;
    for (auto x : db.violations) s += (s.empty() ? "" : ",") + g.name(x);
    return s;
  }());
  if (h) {
    const std::size_t k = steps.value_or(0);
    const auto w = converges_toward(f, *h, k);
    v.record("converges_in_" + std::to_string(k), w.valid(), w.first_failure());
  } else if (steps) {
    v.record("constant_after_" + std::to_string(*steps), image_after(f, *steps).size() == 1);
  }
  const auto idx = nilpotency_index(f);
  info["states"] = f.domain().size();
  info["nilpotency_index"] = idx ? Report(*idx) : Report("none");
  info["fixed_points"] = fixed_points(f).size();
  return v;
}

void finish(RunResult& res, Report& report, const Verdict& v, bool as_json) {
  report["checks"] = v.checks;
  report["verdict"] = v.ok() ? "pass" : "fail: " + [&] {
    std::string s;
    for (const auto& f : v.failed) s += (s.empty() ? "" : ", ") + f;
    return s;
  }();
  res.report = render(report, as_json);
  res.status = v.ok() ? kOk : kCheckFailed;
}

// Writes the system (and certificate) or inlines it in the report, then re-reads
// what was written and re-verifies it.
Fds emit_system(const CommandRequest& r, const Fds& f, const std::string& certificate, Report& report, const Limits& l) {
  if (!r.out) {
    report["fds"] = Report::parse(format_fds_json(f));
    return f;
  }
  write_fds_file(*r.out, f);
  report["fds_file"] = r.out->string();
  if (!certificate.empty()) {
    const auto cp = certificate_path(*r.out);
    write_text_file(cp, certificate);
    report["certificate_file"] = cp.string();
  }
  return read_fds_file(*r.out, l.state_cap);
}

RunResult do_analyze(const CommandRequest& r) {
  const auto g = load_graph(r);
  Report rep;
  rep["vertices"] = g.vertex_count();
  rep["arcs"] = g.arc_count();
  if (g.empty()) {
    rep["lambda"] = "undefined";
    return {kOk, render(rep, r.json), {}};
  }
  const auto cs = component_structure(g);
  rep["lambda"] = cs.lambda;
  rep["beta"] = cs.beta;
  rep["basic"] = cs.basic;
  rep["connected_components"] = components_json(g, connected_components(g));
  rep["strong_components"] = components_json(g, cs.strong_components);
  rep["initial_components"] = components_json(g, cs.initial_components);
  const auto vc = classify_vertices(g);
  rep["sources"] = names_of(g, vc.sources);
  rep["sinks"] = names_of(g, vc.sinks);
  rep["isolated"] = names_of(g, vc.isolated);
  rep["signed_cycle"] = is_signed_cycle(g);
  const auto cycles = enumerate_cycles(g);
  std::size_t pos = 0;
  for (const auto& c : cycles) pos += c.sign == Sign::Positive;
  rep["cycles"] = cycles.size();
  rep["positive_cycles"] = pos;
  rep["negative_cycles"] = cycles.size() - pos;
  std::size_t nu = 0;
  while (pos > 0 && find_disjoint_positive_cycles(g, nu + 1)) ++nu;
  rep["disjoint_positive_cycles"] = nu;
  return {kOk, render(rep, r.json), {}};
}

RunResult do_synth_nilpotent(const CommandRequest& r) {
  const auto g = load_graph(r);
  const auto l = limits_for(r);
  const auto nil = construct_nilpotent(g, l.state_cap);
  const auto& c = nil.certificate;
  const std::size_t bound = c.lambda + static_cast<std::size_t>(c.beta);
  Report rep;
  rep["lambda"] = c.lambda;
  rep["beta"] = c.beta;
  rep["intervals"] = Report::array();
  for (const auto& iv : nil.system.domain().intervals()) rep["intervals"].push_back({iv.min, iv.max});
  rep["xi"] = c.target;
  const auto written = emit_system(r, nil.system, format_nilpotency_certificate(g, c), rep, l);
  Report info;
  auto v = verify_bundle(g, written, std::nullopt, bound, info);
  const auto idx = nilpotency_index(written);
  v.record("index_within_bound", idx && *idx <= bound);
  rep["result"] = idx ? "nilpotent, index " + std::to_string(*idx) : "not nilpotent";
  RunResult res;
  finish(res, rep, v, r.json);
  return res;
}

RunResult do_synth_converge(const CommandRequest& r) {
  const auto g = load_graph(r);
  const auto l = limits_for(r);
  if (!r.sub) throw ParseError("--sub is required");
  const auto h = load_system(*r.sub, g, l, "subsystem");
  const auto h_graph = interaction_graph(h, g.names());
  const auto conv = construct_converging(g, h_graph, h);
  Report rep;
  rep["route"] = to_string(conv.plan.route);
  rep["isolated"] = names_of(g, conv.plan.isolated);
  rep["steps"] = conv.witness.steps;
  const auto written = emit_system(r, conv.system, format_convergence_certificate(g, conv), rep, l);
  Report info;
  const auto v = verify_bundle(g, written, h, conv.witness.steps, info);
  rep["fixed_points"] = info["fixed_points"];
  RunResult res;
  finish(res, rep, v, r.json);
  return res;
}

RunResult do_synth_fixed_points(const CommandRequest& r) {
  const auto g = load_graph(r);
  const auto l = limits_for(r);
  const std::size_t k = r.cycles.value_or(1);
  const auto real = k == 0 ? construct_no_fixed_point(g) : construct_2k_fixed_points(g, k);
  const std::size_t expected = k == 0 ? 0 : std::size_t{1} << k;
  Report rep;
  rep["retained_arcs"] = Report::array();
  for (const auto& a : real.subgraph.arcs()) rep["retained_arcs"].push_back(describe(g, a));
  std::string cert;
  if (real.converging) cert = format_convergence_certificate(g, *real.converging);
  const auto written = emit_system(r, real.system, cert, rep, l);
  Report info;
  std::optional<std::size_t> steps;
  if (real.converging) steps = real.converging->witness.steps;
  auto v = verify_bundle(g, written, real.converging ? std::optional<Fds>(real.subsystem) : std::nullopt, steps, info);
  const std::size_t count = fixed_points(written).size();
  rep["fixed_points"] = count;
  v.record("fixed_point_count", count == expected, std::to_string(count) + " != " + std::to_string(expected));
  RunResult res;
  finish(res, rep, v, r.json);
  return res;
}

RunResult do_verify(const CommandRequest& r) {
  const auto g = load_graph(r);
  const auto l = limits_for(r);
  if (!r.fds) throw ParseError("--fds is required");
  const auto f = load_system(*r.fds, g, l, "system");
  std::optional<Fds> h;
  std::optional<std::size_t> steps = r.steps;
  if (r.sub) {
    h = load_system(*r.sub, g, l, "subsystem");
    if (!steps) {
      // Default to |I| + 1.
      const auto h_graph = interaction_graph(*h, g.names());
      std::size_t isolated = 0;
      for (Vertex v = 0; v < g.vertex_count(); ++v) isolated += h_graph.is_isolated(v) && !g.is_isolated(v);
      steps = isolated + 1;
    }
  }
  Report rep;
  const auto v = verify_bundle(g, f, h, steps, rep);
  RunResult res;
  finish(res, rep, v, r.json);
  return res;
}

RunResult do_enumerate(const CommandRequest& r) {
  const auto g = load_graph(r);
  const auto l = limits_for(r);
  Report rep;
  if (r.sample) {
    std::mt19937_64 rng(r.seed);
    std::size_t made = 0, nilpotent = 0;
    std::map<std::size_t, std::size_t> fixed;
    for (std::size_t t = 0; t < *r.sample; ++t) {
      const auto f = random_degree_bounded_system(g, rng);
      if (!f) continue;
      ++made;
      nilpotent += nilpotency_index(*f).has_value();
      ++fixed[fixed_points(*f).size()];
    }
    rep["mode"] = "sample";
    rep["seed"] = r.seed;
    rep["systems"] = made;
    rep["nilpotent"] = nilpotent;
    rep["fixed_point_histogram"] = Report::object();
    for (auto [k, c] : fixed) rep["fixed_point_histogram"][std::to_string(k)] = c;
    return {kOk, render(rep, r.json), {}};
  }
  if (r.steps) {
    const auto found = find_system_nilpotent_within(g, *r.steps, l);
    rep["mode"] = "search";
    rep["steps"] = *r.steps;
    rep["found"] = found.has_value();
    if (found) rep["witness"] = Report::parse(format_fds_json(*found));
    return {kOk, render(rep, r.json), {}};
  }
  std::size_t nilpotent = 0;
  std::optional<std::size_t> min_index;
  std::map<std::size_t, std::size_t> fixed;
  const auto total = for_each_degree_bounded_system(g, [&](const Fds& f) {
    if (const auto idx = nilpotency_index(f)) {
      ++nilpotent;
      min_index = std::min(min_index.value_or(*idx), *idx);
    }
    ++fixed[fixed_points(f).size()];
    return true;
  }, l);
  rep["mode"] = "exhaustive";
  rep["systems"] = total;
  rep["nilpotent"] = nilpotent;
  rep["min_nilpotency_index"] = min_index ? Report(*min_index) : Report("none");
  rep["fixed_point_histogram"] = Report::object();
  for (auto [k, c] : fixed) rep["fixed_point_histogram"][std::to_string(k)] = c;
  return {kOk, render(rep, r.json), {}};
}

RunResult do_export_dot(const CommandRequest& r) {
  const auto g = load_graph(r);
  const auto dot = to_dot(g);
  if (!r.out) return {kOk, dot, {}};
  write_text_file(*r.out, dot);
  Report rep;
  rep["dot_file"] = r.out->string();
  return {kOk, render(rep, r.json), {}};
}

}  // namespace

RunResult run(const CommandRequest& request) {
  try {
    const auto& s = request.subcommand;
    if (s == "analyze") return do_analyze(request);
    if (s == "synth-nilpotent") return do_synth_nilpotent(request);
    if (s == "synth-converge") return do_synth_converge(request);
    if (s == "synth-fixed-points") return do_synth_fixed_points(request);
    if (s == "verify") return do_verify(request);
    if (s == "enumerate") return do_enumerate(request);
    if (s == "export-dot") return do_export_dot(request);
    return {kParseError, {}, "unknown subcommand '" + s + "'\n"};
  } catch (const Error& e) {
    const int status = e.kind() == ErrorKind::Parse          ? kParseError
                       : e.kind() == ErrorKind::Precondition ? kPreconditionError
                       : e.kind() == ErrorKind::CapExceeded  ? kCapExceeded
                                                             : kCheckFailed;
    return {status, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kCheckFailed, {}, std::string("error: ") + e.what() + "\n"};
  }
}

RunResult run_args(const std::vector<std::string>& args) {
  CLI::App app{"Signed digraph analysis and finite dynamical system synthesis"};
  app.require_subcommand(1);
  CommandRequest req;
  std::string graph, fds, sub, out;

  auto common = [&](CLI::App* c) {
    c->add_option("--graph", graph, "Graph in sdg v1 format")->required();
    c->add_option("--cap", req.cap, "State cap (overrides SDG_CAP)");
    c->add_flag("--json", req.json, "JSON report");
  };
  auto* analyze = app.add_subcommand("analyze", "Components, lambda, beta, cycle census");
  common(analyze);
  auto* nil = app.add_subcommand("synth-nilpotent", "Nilpotent degree-bounded system");
  common(nil);
  nil->add_option("--out", out, "Output FDS JSON (certificate goes next to it)");
  auto* conv = app.add_subcommand("synth-converge", "System converging toward a subsystem");
  common(conv);
  conv->add_option("--sub", sub, "Subsystem h as FDS JSON")->required();
  conv->add_option("--out", out, "Output FDS JSON");
  auto* fix = app.add_subcommand("synth-fixed-points", "System with 2^k fixed points (k = 0: none)");
  common(fix);
  fix->add_option("--cycles", req.cycles, "k disjoint positive cycles; 0 asks for no fixed point");
  fix->add_option("--out", out, "Output FDS JSON");
  auto* verify = app.add_subcommand("verify", "Re-check a system against a graph");
  common(verify);
  verify->add_option("--fds", fds, "FDS JSON")->required();
  verify->add_option("--sub", sub, "Subsystem h for the convergence check");
  verify->add_option("--steps", req.steps, "k for the convergence or constancy check");
  auto* en = app.add_subcommand("enumerate", "Brute-force oracle over degree-bounded systems");
  common(en);
  en->add_option("--steps", req.steps, "Search for a system with f^k constant");
  en->add_option("--sample", req.sample, "Sample this many random systems instead");
  en->add_option("--seed", req.seed, "Random seed");
  auto* dot = app.add_subcommand("export-dot", "Graphviz export");
  common(dot);
  dot->add_option("--out", out, "Output DOT file");

  std::vector<const char*> argv{"sdg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    return {kOk, app.help(), {}};
  } catch (const CLI::ParseError& e) {
    return {kParseError, {}, std::string("error: ") + e.what() + "\n" + app.help()};
  }
  req.subcommand = app.get_subcommands().front()->get_name();
  req.graph = graph;
  if (!fds.empty()) req.fds = fds;
  if (!sub.empty()) req.sub = sub;
  if (!out.empty()) req.out = out;
  return run(req);
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto res = run_args(args);
  out << res.report;
  err << res.error;
  return res.status;
}

}  // namespace sdg::cli
