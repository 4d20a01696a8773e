#include <algorithm>

#include "sdg/analysis.hpp"
#include "sdg/synthesis.hpp"

namespace sdg {

namespace {

enum class Rule : std::uint8_t {
  Zero,       // constant 0
  AnyAbove2,  // first layer: OR of literals at threshold 2
  AnyAbove1,  // later layer, target 1: OR of literals at threshold 1
  AllAbove1,  // later layer, target 0: AND of literals at threshold 1
  CycleStep,  // |G| a cycle: top value when the predecessor sits at the trigger
};

struct InLiteral {
  Vertex j;
  std::uint8_t mask;  // bit 0: j ∈ G_i^+, bit 1: j ∈ G_i^-
};

struct VertexRule {
  Rule kind = Rule::Zero;
  int top = 0;
  std::vector<InLiteral> in;
};

// x_j >= t for positive-only arcs, x_j = t for parallel ones, x_j < t for
// negative-only ones.
bool literal(const InLiteral& l, int xj, int t) {
  switch (l.mask) {
    case 1: return xj >= t;
    case 2: return xj < t;
    default: return xj == t;
  }
}

int evaluate_rule(const VertexRule& r, std::span<const int> x) {
  switch (r.kind) {
    case Rule::Zero: return 0;
    case Rule::AnyAbove2:
      return std::any_of(r.in.begin(), r.in.end(), [&](const InLiteral& l) { return literal(l, x[l.j], 2); }) ? 1 : 0;
    case Rule::AnyAbove1:
      return std::any_of(r.in.begin(), r.in.end(), [&](const InLiteral& l) { return literal(l, x[l.j], 1); }) ? 1 : 0;
    case Rule::AllAbove1:
      return std::all_of(r.in.begin(), r.in.end(), [&](const InLiteral& l) { return literal(l, x[l.j], 1); }) ? 1 : 0;
    case Rule::CycleStep: {
      const auto& l = r.in.front();
      const bool fire = (x[l.j] == 1 && (l.mask & 1u)) || (x[l.j] == 0 && l.mask == 2);
      return fire ? r.top : 0;
    }
  }
  return 0;
}

std::vector<InLiteral> in_literals(const SignedDigraph& g, Vertex i) {
  std::vector<InLiteral> out;
  for (auto j : g.in_neighbors(i)) out.push_back({j, g.sign_mask(j, i)});
  return out;
}

struct Build {
  std::vector<VertexRule> rules;
  std::vector<std::size_t> sizes;
  State target;
  std::vector<bool> is_rep;
  std::vector<std::vector<Vertex>> layers;
  NilpotencyCertificate cert;
};

void add_to_layer(Build& b, std::size_t p, Vertex v) {
  if (b.layers.size() <= p) b.layers.resize(p + 1);
  b.layers[p].push_back(v);
}

// |G| not a cycle. `comp` maps local indices of `sub` to g.
void build_acyclic_shape(const SignedDigraph& sub, const std::vector<Vertex>& comp, Build& b) {
  const auto cs = component_structure(sub);
  const auto und = underlying_digraph(sub);
  const std::size_t m = sub.vertex_count();

  std::vector<Vertex> reps;
  std::vector<bool> rep(m, false);
  for (const auto& init : cs.initial_components) {
    std::optional<Vertex> pick;
    for (auto v : init) {
      const auto in = sub.in_neighbors(v);
      const bool eligible = in.empty() || std::all_of(in.begin(), in.end(), [&](Vertex j) {
        return und.successors[j].size() >= 2;
      });
      if (eligible) {
        pick = v;
        break;
      }
    }
    if (!pick) throw InvariantViolation("initial component without an eligible representative");
    reps.push_back(*pick);
    rep[*pick] = true;
    std::vector<Vertex> members;
    for (auto v : init) members.push_back(comp[v]);
    b.cert.representatives.emplace_back(std::move(members), comp[*pick]);
  }

  for (Vertex i = 0; i < m; ++i) {
    std::size_t s = 2;
    for (auto w : sub.out_neighbors(i)) {
      if (rep[w]) s = std::max<std::size_t>(s, sub.parallel(i, w) ? 4 : 3);
      else if (sub.parallel(i, w)) s = std::max<std::size_t>(s, 3);
    }
    b.sizes[comp[i]] = s;
  }

  const auto stripped = spanning_subgraph(sub, [&](const Arc& a) { return !rep[a.target]; });
  const auto d = distances_from(stripped, reps);
  std::vector<Vertex> by_layer(m);
  for (Vertex v = 0; v < m; ++v) {
    if (d[v] == kUnreachable) throw InvariantViolation("vertex unreachable from the representatives");
    by_layer[v] = v;
  }
  std::stable_sort(by_layer.begin(), by_layer.end(), [&](Vertex a, Vertex c) { return d[a] < d[c]; });

  std::vector<int> xi(m, 0);
  for (auto i : by_layer) {
    const auto lits = in_literals(sub, i);
    if (d[i] == 0) {
      xi[i] = std::any_of(lits.begin(), lits.end(), [](const InLiteral& l) { return l.mask == 2; }) ? 1 : 0;
    } else {
      bool one = true;
      for (const auto& l : lits) {
        if (d[l.j] + 1 != d[i]) continue;
        if ((l.mask & 1u) && xi[l.j] != 1) one = false;
        if (l.mask == 2 && xi[l.j] != 0) one = false;
      }
      xi[i] = one ? 1 : 0;
    }
  }

  for (Vertex i = 0; i < m; ++i) {
    const Vertex gi = comp[i];
    auto& r = b.rules[gi];
    for (auto l : in_literals(sub, i)) r.in.push_back({comp[l.j], l.mask});
    r.kind = d[i] == 0 ? Rule::AnyAbove2 : (xi[i] == 1 ? Rule::AnyAbove1 : Rule::AllAbove1);
    b.target[gi] = xi[i];
    b.is_rep[gi] = rep[i];
    add_to_layer(b, d[i], gi);
  }
}

// |G| a cycle carrying at least one parallel pair.
void build_pseudo_cycle(const SignedDigraph& sub, const std::vector<Vertex>& comp, Build& b) {
  const std::size_t m = sub.vertex_count();
  const auto und = underlying_digraph(sub);
  auto succ = [&](Vertex v) { return und.successors[v].front(); };
  std::optional<Vertex> last;
  for (Vertex v = 0; v < m && !last; ++v)
    if (sub.parallel(v, succ(v))) last = v;
  if (!last) throw PreconditionError("connected component is a signed cycle");

  std::vector<Vertex> seq;
  for (Vertex v = succ(*last);; v = succ(v)) {
    seq.push_back(v);
    if (v == *last) break;
  }
  int prev_value = 0;
  for (std::size_t p = 0; p < seq.size(); ++p) {
    const Vertex v = seq[p];
    const Vertex u = p == 0 ? seq.back() : seq[p - 1];
    const std::size_t size = sub.parallel(v, succ(v)) ? 3 : 2;
    auto& r = b.rules[comp[v]];
    r.kind = Rule::CycleStep;
    r.top = static_cast<int>(size) - 1;
    r.in = {{comp[u], sub.sign_mask(u, v)}};
    b.sizes[comp[v]] = size;
    // ξ_{v_1} = 0 and ξ_{v_p} = f_{v_p}(ξ_{v_{p-1}}).
    State probe(b.rules.size(), 0);
    probe[comp[u]] = prev_value;
    const int value = p == 0 ? 0 : evaluate_rule(r, probe);
    b.target[comp[v]] = value;
    prev_value = value;
    add_to_layer(b, p, comp[v]);
  }
  b.is_rep[comp[seq.front()]] = true;
  std::vector<Vertex> members(comp.begin(), comp.end());
  b.cert.representatives.emplace_back(std::move(members), comp[seq.front()]);
}

}  // namespace

NilpotentSystem construct_nilpotent(const SignedDigraph& g, std::size_t state_cap) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw PreconditionError("construct_nilpotent: empty graph");

  Build b;
  b.rules.resize(n);
  b.sizes.assign(n, 1);
  b.target.assign(n, 0);
  b.is_rep.assign(n, false);

  for (const auto& comp : connected_components(g)) {
    const auto sub = induced_subgraph(g, comp);
    const auto cs = component_structure(sub);
    b.cert.lambda = std::max(b.cert.lambda, cs.lambda);
    b.cert.beta = std::max(b.cert.beta, cs.beta);
    if (sub.arc_count() == 0) {
      b.is_rep[comp[0]] = true;
      b.cert.representatives.emplace_back(comp, comp[0]);
      add_to_layer(b, 0, comp[0]);
    } else if (is_signed_cycle(sub)) {
      throw PreconditionError("connected component {" + [&] {
        std::string s;
        for (auto v : comp) s += (s.empty() ? "" : ",") + g.name(v);
        return s;
      }() + "} is a signed cycle; no nilpotent degree-bounded system exists on it");
    } else if (underlying_is_cycle(sub)) {
      build_pseudo_cycle(sub, comp, b);
    } else {
      build_acyclic_shape(sub, comp, b);
    }
  }
  for (auto& layer : b.layers) std::sort(layer.begin(), layer.end());

  auto f = Fds::tabulate(IntervalProduct::from_sizes(b.sizes), [&](std::span<const int> x, std::span<int> y) {
    for (Vertex i = 0; i < n; ++i) y[i] = evaluate_rule(b.rules[i], x);
  }, state_cap);

  auto& cert = b.cert;
  cert.stripped = spanning_subgraph(g, [&](const Arc& a) { return !b.is_rep[a.target]; });
  cert.layers = std::move(b.layers);
  cert.target = b.target;
  cert.interval_sizes = b.sizes;

  // Self-check.
  if (!same_arcs(interaction_graph(f), g)) throw InvariantViolation("nilpotent construction: interaction graph differs from input");
  if (!is_degree_bounded(f)) throw InvariantViolation("nilpotent construction: output is not degree-bounded");
  const std::size_t bound = cert.lambda + static_cast<std::size_t>(cert.beta);
  const auto image = image_after(f, bound);
  if (image.size() != 1 || f.domain().state(image.front()) != cert.target)
    throw InvariantViolation("nilpotent construction: f^(lambda+beta) is not the constant target");
  for (Vertex i = 0; i < n; ++i)
    if (g.is_source(i) && cert.target[i] != f.domain()[i].min)
      throw InvariantViolation("nilpotent construction: target differs from min X_i on a source");
  cert.index = nilpotency_index(f).value_or(0);
  if (cert.index == 0 || cert.index > bound) throw InvariantViolation("nilpotent construction: index above lambda+beta");
  return {std::move(f), std::move(cert)};
}

}  // namespace sdg
