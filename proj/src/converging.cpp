#include <algorithm>

#include "sdg/analysis.hpp"
#include "sdg/synthesis.hpp"

namespace sdg {

std::string to_string(ConvergenceRoute r) {
  switch (r) {
    case ConvergenceRoute::Direct: return "direct";
    case ConvergenceRoute::PropertyP: return "property-p";
    case ConvergenceRoute::Split: return "split";
  }
  return "?";
}

namespace {

std::vector<Vertex> newly_connected(const SignedDigraph& g, const SignedDigraph& h_graph) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (h_graph.is_isolated(v) && !g.is_isolated(v)) out.push_back(v);
  return out;
}

std::string vertex_list(const SignedDigraph& g, const std::vector<Vertex>& vs) {
  std::string s;
  for (auto v : vs) s += (s.empty() ? "" : ",") + g.name(v);
  return "{" + s + "}";
}

// Translates a nilpotent system so that its constant value becomes `target`.
Fds shift_onto(const NilpotentSystem& nil, const State& target) {
  std::vector<int> shift(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) shift[i] = target[i] - nil.certificate.target[i];
  return translate(nil.system, shift);
}

Fds converge(const SignedDigraph& g, const SignedDigraph& h_graph, const Fds& h, ConvergencePlan& plan) {
  const std::size_t n = g.vertex_count();
  const auto& Y = h.domain();
  plan.isolated = newly_connected(g, h_graph);
  const auto& I = plan.isolated;
  if (I.empty()) {
    plan.route = ConvergenceRoute::Direct;
    return extend_all(g, h_graph, h, Y.minimum(), &plan.cases);
  }

  std::vector<bool> in_i(n, false);
  for (auto v : I) in_i[v] = true;

  // Connected components of G[I], with the three conditions of property P.
  std::vector<std::vector<Vertex>> good, bad;
  for (const auto& local : connected_components(induced_subgraph(g, I))) {
    std::vector<Vertex> comp;
    for (auto l : local) comp.push_back(I[l]);
    std::vector<bool> in_f(n, false);
    for (auto v : comp) in_f[v] = true;
    bool leaving = false, entering = false;
    for (const auto& a : g.arcs()) {
      leaving = leaving || (in_f[a.source] && !in_i[a.target]);
      entering = entering || (!in_i[a.source] && in_f[a.target]);
    }
    const bool strong = is_strongly_connected(induced_subgraph(g, comp));
    (!strong || leaving || !entering ? good : bad).push_back(std::move(comp));
  }
  plan.property_p = bad.empty();

  if (plan.property_p) {
    plan.route = ConvergenceRoute::PropertyP;
    std::vector<bool> exits(n, false);
    for (const auto& a : g.arcs())
      if (!in_i[a.target]) exits[a.source] = true;

    plan.h_tilde = h_graph;
    for (const auto& a : g.arcs())
      if (in_i[a.source] && in_i[a.target] && !exits[a.source]) plan.h_tilde.add_arc(a);
    // A sink of G whose in-arcs inside I all come from exiting vertices would
    // stay isolated in H̃; take those arcs too.
    for (auto v : I)
      if (!exits[v] && plan.h_tilde.is_isolated(v))
        for (const auto& a : g.arcs())
          if (a.target == v && in_i[a.source]) plan.h_tilde.add_arc(a);
    // A cycle component of Q can only be entered from exiting vertices of I;
    // attach one such arc so that Q has no cycle component.
    for (const auto& local : connected_components(induced_subgraph(plan.h_tilde, I))) {
      std::vector<Vertex> comp;
      for (auto l : local) comp.push_back(I[l]);
      if (!is_signed_cycle(induced_subgraph(plan.h_tilde, comp))) continue;
      std::vector<bool> in_c(n, false);
      for (auto v : comp) in_c[v] = true;
      const auto& arcs = g.arcs();
      const auto entry = std::find_if(arcs.begin(), arcs.end(), [&](const Arc& a) {
        return in_i[a.source] && !in_c[a.source] && in_c[a.target];
      });
      if (entry == arcs.end()) throw InvariantViolation("property-p route: cycle " + vertex_list(g, comp) + " inside Q");
      plan.h_tilde.add_arc(*entry);
    }
    const auto q_local = induced_subgraph(plan.h_tilde, I);
    plan.q = spanning_subgraph(plan.h_tilde, [&](const Arc& a) { return in_i[a.source] && in_i[a.target]; });

    const auto nil = construct_nilpotent(q_local);
    State xi_i(I.size());
    for (std::size_t l = 0; l < I.size(); ++l) xi_i[l] = Y[I[l]].min;
    const auto gq = shift_onto(nil, xi_i);

    auto y_tilde = Y.intervals();
    for (std::size_t l = 0; l < I.size(); ++l) y_tilde[I[l]] = gq.domain()[l];
    State base(n), sub(I.size());
    const auto h_tilde_sys = Fds::tabulate(IntervalProduct(y_tilde), [&](std::span<const int> x, std::span<int> y) {
      std::copy(x.begin(), x.end(), base.begin());
      for (std::size_t l = 0; l < I.size(); ++l) {
        base[I[l]] = xi_i[l];
        sub[l] = x[I[l]];
      }
      const auto ho = Y.offset(base), go = gq.domain().offset(sub);
      for (std::size_t i = 0; i < n; ++i) y[i] = h.component(i, ho);
      for (std::size_t l = 0; l < I.size(); ++l) y[I[l]] = gq.component(l, go);
    });

    plan.g_tilde = plan.h_tilde;
    for (const auto& a : g.arcs())
      if (!in_i[a.target]) plan.g_tilde.insert_arc(a);

    auto anchor = h_tilde_sys.domain().minimum();
    for (std::size_t l = 0; l < I.size(); ++l) anchor[I[l]] = xi_i[l];
    plan.anchor = anchor;
    const auto f_tilde = extend_all(plan.g_tilde, plan.h_tilde, h_tilde_sys, anchor, &plan.cases);
    return extend_all(g, plan.g_tilde, f_tilde, f_tilde.domain().minimum(), &plan.cases);
  }

  plan.route = ConvergenceRoute::Split;
  for (const auto& c : good) plan.i_tilde.insert(plan.i_tilde.end(), c.begin(), c.end());
  for (const auto& c : bad) plan.j_set.insert(plan.j_set.end(), c.begin(), c.end());
  std::sort(plan.i_tilde.begin(), plan.i_tilde.end());
  std::sort(plan.j_set.begin(), plan.j_set.end());
  std::vector<bool> in_j(n, false);
  for (auto v : plan.j_set) in_j[v] = true;

  plan.g_tilde = spanning_subgraph(g, [&](const Arc& a) { return !in_j[a.target]; });
  ConvergencePlan inner;
  const auto f_tilde = converge(plan.g_tilde, h_graph, h, inner);
  plan.cases = std::move(inner.cases);
  const auto& Xt = f_tilde.domain();
  const State xi = Xt.maximum();
  plan.anchor = xi;

  plan.q = spanning_subgraph(g, [&](const Arc& a) { return in_j[a.target]; });
  const auto gq = shift_onto(construct_nilpotent(plan.q), xi);
  const auto& Z = gq.domain();

  std::vector<Interval> x_iv(n);
  for (Vertex i = 0; i < n; ++i) {
    if (in_j[i]) {
      if (!Z[i].contains(xi[i])) throw InvariantViolation("split route: anchor outside Z on J");
      x_iv[i] = Z[i];
    } else {
      if (Z[i].min != xi[i]) throw InvariantViolation("split route: min Z_i differs from max X̃_i off J");
      x_iv[i] = {Xt[i].min, Z[i].max};
    }
  }
  State pt(n), p(n);
  return Fds::tabulate(IntervalProduct(std::move(x_iv)), [&](std::span<const int> x, std::span<int> y) {
    for (Vertex i = 0; i < n; ++i) {
      pt[i] = in_j[i] ? xi[i] : std::min(x[i], xi[i]);
      p[i] = in_j[i] ? x[i] : std::max(x[i], xi[i]);
    }
    const auto to = Xt.offset(pt), po = Z.offset(p);
    for (Vertex i = 0; i < n; ++i) y[i] = in_j[i] ? gq.component(i, po) : f_tilde.component(i, to);
  });
}

// f^k(X) ⊆ h_1(Y) × ... × h_n(Y).
bool componentwise_within(const Fds& f, const Fds& h, std::size_t k) {
  const auto& Y = h.domain();
  std::vector<std::vector<char>> values(h.dimension());
  for (std::size_t i = 0; i < h.dimension(); ++i) {
    values[i].assign(Y[i].size(), 0);
    for (int v : h.table(i)) values[i][static_cast<std::size_t>(v - Y[i].min)] = 1;
  }
  for (auto off : image_after(f, k))
    for (std::size_t i = 0; i < f.dimension(); ++i) {
      const int v = f.domain().coordinate(off, i);
      if (!Y[i].contains(v) || !values[i][static_cast<std::size_t>(v - Y[i].min)]) return false;
    }
  return true;
}

}  // namespace

void check_converging_preconditions(const SignedDigraph& g, const SignedDigraph& h_graph, const Fds& h) {
  if (!is_spanning_subgraph(h_graph, g)) throw PreconditionError("H is not a spanning subgraph of G");
  if (h.dimension() != g.vertex_count()) throw PreconditionError("h has the wrong number of components");
  if (!same_arcs(interaction_graph(h), h_graph)) throw PreconditionError("interaction graph of h differs from H");
  if (const auto r = check_degree_bounded(h); !r.bounded)
    throw PreconditionError("h is not degree-bounded at " + vertex_list(g, r.violations));

  const auto I = newly_connected(g, h_graph);
  std::vector<bool> in_i(g.vertex_count(), false);
  for (auto v : I) in_i[v] = true;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in_i[v]) continue;
    if (h_graph.is_source(v) && !g.is_source(v))
      throw PreconditionError("vertex " + g.name(v) + " is a source of H \\ I but not of G");
    if (h_graph.is_sink(v) && !g.is_sink(v))
      throw PreconditionError("vertex " + g.name(v) + " is a sink of H \\ I but not of G");
  }
  for (const auto& comp : connected_components(g)) {
    if (!std::all_of(comp.begin(), comp.end(), [&](Vertex v) { return in_i[v]; })) continue;
    if (is_signed_cycle(induced_subgraph(g, comp)))
      throw PreconditionError("connected component " + vertex_list(g, comp) + " is a signed cycle inside I");
  }
}

ConvergingSystem construct_converging(const SignedDigraph& g, const SignedDigraph& h_graph, const Fds& h) {
  check_converging_preconditions(g, h_graph, h);
  ConvergingSystem out;
  out.system = converge(g, h_graph, h, out.plan);
  const std::size_t k = out.plan.isolated.size() + 1;
  out.witness = converges_toward(out.system, h, k);
  if (!out.witness.valid()) {
    // Each component lands in h_i(Y) after k steps; when h(Y) is not the
    // product of those sets one more step is needed.
    if (!out.witness.h_image_in_y || !out.witness.y_in_x || !out.witness.agrees_on_y ||
        !componentwise_within(out.system, h, k))
      throw InvariantViolation("convergence construction failed its check: " + out.witness.first_failure());
    out.witness = converges_toward(out.system, h, k + 1);
    if (!out.witness.valid())
      throw InvariantViolation("convergence construction failed its check: " + out.witness.first_failure());
  }
  if (!same_arcs(interaction_graph(out.system), g))
    throw InvariantViolation("convergence construction: interaction graph differs from G");
  if (!is_degree_bounded(out.system)) throw InvariantViolation("convergence construction: output is not degree-bounded");
  return out;
}

}  // namespace sdg
