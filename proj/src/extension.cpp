#include <algorithm>

#include "sdg/analysis.hpp"
#include "sdg/synthesis.hpp"

namespace sdg {

std::string to_string(ExtensionCase c) {
  switch (c) {
    case ExtensionCase::InnerPositive: return "inner+";
    case ExtensionCase::InnerNegative: return "inner-";
    case ExtensionCase::FromSinkPositiveHigh: return "from-sink+/high";
    case ExtensionCase::FromSinkPositiveLow: return "from-sink+/low";
    case ExtensionCase::FromSinkNegativeHigh: return "from-sink-/high";
    case ExtensionCase::FromSinkNegativeLow: return "from-sink-/low";
    case ExtensionCase::IntoSourceRaise: return "into-source+/up";
    case ExtensionCase::IntoSourceDrop: return "into-source-/up";
    case ExtensionCase::IntoSourceRaiseBelow: return "into-source+/down";
    case ExtensionCase::IntoSourceDropBelow: return "into-source-/down";
  }
  return "?";
}

namespace {

std::vector<Vertex> compute_set_a(const SignedDigraph& h_graph, const SignedDigraph& current) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < h_graph.vertex_count(); ++v)
    if (h_graph.is_source(v) && !current.is_source(v)) out.push_back(v);
  return out;
}

std::vector<Vertex> compute_set_b(const SignedDigraph& h_graph, const SignedDigraph& current) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < h_graph.vertex_count(); ++v)
    if (h_graph.is_sink(v) && !current.is_sink(v)) out.push_back(v);
  return out;
}

void require_system_on(const SignedDigraph& graph, const Fds& f, const char* what) {
  if (f.dimension() != graph.vertex_count())
    throw PreconditionError(std::string(what) + ": system arity does not match the graph");
  if (!same_arcs(interaction_graph(f), graph))
    throw PreconditionError(std::string(what) + ": interaction graph of the system differs from the graph");
  if (!is_degree_bounded(f)) throw PreconditionError(std::string(what) + ": system is not degree-bounded");
}

}  // namespace

ExtensionState start_extension(const SignedDigraph& h_graph, const Fds& h, State anchor) {
  require_system_on(h_graph, h, "extension");
  if (!h.domain().contains(anchor)) throw PreconditionError("extension: anchor is not a state of Y");
  ExtensionState s;
  s.graph = h_graph;
  s.system = h;
  s.anchor = std::move(anchor);
  return s;
}

void check_extension_hypotheses(const SignedDigraph& g, const SignedDigraph& h_graph) {
  if (!is_spanning_subgraph(h_graph, g)) throw PreconditionError("extension: H is not a spanning subgraph of G");
  for (const auto& a : g.arcs()) {
    if (h_graph.is_sink(a.source) && h_graph.is_source(a.target))
      throw PreconditionError("extension: G has the arc " + describe(g, a) + " from a sink of H to a source of H");
    if (h_graph.is_isolated(a.target))
      throw PreconditionError("extension: G has the arc " + describe(g, a) + " into an isolated vertex of H");
  }
}

void check_extension_invariants(const ExtensionState& s, const SignedDigraph& h_graph, const Fds& h) {
  const auto& f = s.system;
  const auto& X = f.domain();
  const auto& Y = h.domain();
  const std::size_t n = f.dimension();
  auto fail = [&](const std::string& what) {
    throw InvariantViolation("extension invariant failed after " + std::to_string(s.history.size()) +
                             " arc(s): " + what);
  };
  if (!X.contains(Y)) fail("Y ⊆ X");

  // Value sets h_i(Y).
  std::vector<std::vector<char>> h_values(n);
  for (std::size_t i = 0; i < n; ++i) {
    h_values[i].assign(Y[i].size(), 0);
    for (int v : h.table(i)) h_values[i][static_cast<std::size_t>(v - Y[i].min)] = 1;
  }
  std::vector<bool> in_a(n, false), in_b(n, false);
  for (auto v : s.set_a) in_a[v] = true;
  for (auto v : s.set_b) in_b[v] = true;

  for (std::size_t i = 0; i < n; ++i)
    for (int v : f.table(i)) {
      if (!Y[i].contains(v)) fail("f(X) ⊆ Y at component " + h_graph.name(i));
      if (!in_a[i] && !h_values[i][static_cast<std::size_t>(v - Y[i].min)])
        fail("f_i(X) ⊆ h_i(Y) at component " + h_graph.name(i));
    }

  std::vector<bool> free_of_b(n, true);
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : s.graph.in_neighbors(i))
      if (in_b[j]) free_of_b[i] = false;

  State y(n);
  for (std::size_t off = 0; off < Y.size(); ++off) {
    Y.decode(off, y);
    bool anchored = true;
    for (auto b : s.set_b) anchored = anchored && y[b] == s.anchor[b];
    const auto xo = X.offset(y);
    for (std::size_t i = 0; i < n; ++i) {
      if (!anchored && !free_of_b[i]) continue;
      if (f.component(i, xo) != h.component(i, off))
        fail(anchored ? "f = h on Y where x_B = anchor_B" : "f_i = h_i on Y when G_i ∩ B = ∅");
    }
  }

  if (!same_arcs(interaction_graph(f), s.graph)) fail("interaction graph equals the current graph");
  if (!is_degree_bounded(f)) fail("degree-bounded");
}

ExtensionState extend_by_arc(const ExtensionState& s, const Arc& a, const SignedDigraph& h_graph, const Fds& h) {
  if (s.graph.has_arc(a)) throw PreconditionError("extension: arc " + describe(s.graph, a) + " is already present");
  const Vertex j = a.source, i = a.target;
  const bool positive = a.sign == Sign::Positive;
  const auto& ft = s.system;
  const auto& Xt = ft.domain();
  const bool j_sink = s.graph.is_sink(j);
  const bool i_source = s.graph.is_source(i);

  enum class Grow { None, Up, Down } grow = Grow::None;
  ExtensionCase which{};
  // f_i on the new domain: `level` when x_j == trigger, otherwise `rest`
  // (rest < 0 means keep f̃_i on the matching state of X̃).
  int level = 0, rest = -1;
  bool trigger_at_max = true;
  bool keep_rest = true;

  if (s.graph.is_isolated(i)) {
    throw InvariantViolation("extension: no case applies to " + describe(s.graph, a) + " (target isolated)");
  } else if (!j_sink && !i_source) {
    grow = Grow::Up;
    which = positive ? ExtensionCase::InnerPositive : ExtensionCase::InnerNegative;
    level = positive ? max_value(ft, i) : min_value(ft, i);
  } else if (j_sink && !i_source) {
    if (Xt[j].size() == 1) grow = Grow::Up;
    const int xj_max = Xt[j].max + (grow == Grow::Up ? 1 : 0);
    const bool high = s.anchor[j] < xj_max;
    trigger_at_max = high;
    if (positive) {
      which = high ? ExtensionCase::FromSinkPositiveHigh : ExtensionCase::FromSinkPositiveLow;
      level = high ? max_value(ft, i) : min_value(ft, i);
    } else {
      which = high ? ExtensionCase::FromSinkNegativeHigh : ExtensionCase::FromSinkNegativeLow;
      level = high ? min_value(ft, i) : max_value(ft, i);
    }
  } else if (!j_sink && i_source) {
    const int c = ft.table(i).front();
    if (min_value(ft, i) != c) throw InvariantViolation("extension: source component is not constant");
    const auto& Yi = h.domain()[i];
    if (!Yi.contains(c)) throw InvariantViolation("extension: source constant lies outside Y_i");
    keep_rest = false;
    rest = c;
    if (positive && c < Yi.max) {
      which = ExtensionCase::IntoSourceRaise, grow = Grow::Up, level = Yi.max;
    } else if (!positive && c > Yi.min) {
      which = ExtensionCase::IntoSourceDrop, grow = Grow::Up, level = Yi.min;
    } else if (positive) {
      which = ExtensionCase::IntoSourceRaiseBelow, grow = Grow::Down, level = Yi.min, trigger_at_max = false;
    } else {
      which = ExtensionCase::IntoSourceDropBelow, grow = Grow::Down, level = Yi.max, trigger_at_max = false;
    }
    if (Yi.size() < 2) throw InvariantViolation("extension: source of H with a one-point interval");
  } else {
    throw InvariantViolation("extension: no case applies to " + describe(s.graph, a) +
                             " (source is a sink and target a source of the current graph)");
  }

  auto intervals = Xt.intervals();
  if (grow == Grow::Up) ++intervals[j].max;
  if (grow == Grow::Down) --intervals[j].min;
  const IntervalProduct X(std::move(intervals));
  const int trigger = trigger_at_max ? X[j].max : X[j].min;
  const std::size_t n = ft.dimension();

  State base(n);
  auto f = Fds::tabulate(X, [&](std::span<const int> x, std::span<int> y) {
    std::copy(x.begin(), x.end(), base.begin());
    if (!Xt[j].contains(base[j])) base[j] += grow == Grow::Up ? -1 : 1;
    const auto bo = Xt.offset(base);
    for (std::size_t k = 0; k < n; ++k) y[k] = ft.component(k, bo);
    if (x[j] == trigger) y[i] = level;
    else if (!keep_rest) y[i] = rest;
  });

  ExtensionState next;
  next.graph = s.graph;
  next.graph.add_arc(a);
  next.system = std::move(f);
  next.anchor = s.anchor;
  next.set_a = compute_set_a(h_graph, next.graph);
  next.set_b = compute_set_b(h_graph, next.graph);
  next.history = s.history;
  next.history.push_back(which);
  check_extension_invariants(next, h_graph, h);
  return next;
}

Fds extend_all(const SignedDigraph& g, const SignedDigraph& h_graph, const Fds& h, const State& anchor,
               std::vector<ExtensionCase>* cases) {
  check_extension_hypotheses(g, h_graph);
  auto state = start_extension(h_graph, h, anchor);
  for (const auto& a : arc_difference(g, h_graph)) state = extend_by_arc(state, a, h_graph, h);
  if (cases) cases->insert(cases->end(), state.history.begin(), state.history.end());
  return std::move(state.system);
}

}  // namespace sdg
