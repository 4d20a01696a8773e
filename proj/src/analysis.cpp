#include "sdg/analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "sdg/error.hpp"

namespace sdg {

std::size_t UnsignedDigraph::arc_count() const {
  std::size_t c = 0;
  for (const auto& s : successors) c += s.size();
  return c;
}

bool UnsignedDigraph::has_arc(Vertex j, Vertex i) const {
  const auto& s = successors.at(j);
  return std::binary_search(s.begin(), s.end(), i);
}

UnsignedDigraph underlying_digraph(const SignedDigraph& g) {
  UnsignedDigraph u;
  u.successors.resize(g.vertex_count());
  for (Vertex j = 0; j < g.vertex_count(); ++j) u.successors[j] = g.out_neighbors(j);
  return u;
}

namespace {

// Tarjan; components come out in reverse topological order.
std::vector<std::vector<Vertex>> tarjan(const SignedDigraph& g) {
  const std::size_t n = g.vertex_count();
  const auto succ = underlying_digraph(g).successors;
  constexpr std::size_t kNone = kUnreachable;
  std::vector<std::size_t> number(n, kNone), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> out;
  std::size_t counter = 0;

  // Iterative DFS to keep deep chains off the call stack.
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (number[root] != kNone) continue;
    std::vector<Frame> frames{{root, 0}};
    number[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& fr = frames.back();
      if (fr.next < succ[fr.v].size()) {
        const Vertex w = succ[fr.v][fr.next++];
        if (number[w] == kNone) {
          number[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[fr.v] = std::min(low[fr.v], number[w]);
        }
        continue;
      }
      const Vertex v = fr.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] == number[v]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<Vertex>> strong_components(const SignedDigraph& g) {
  auto comps = tarjan(g);
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

std::vector<std::vector<Vertex>> strong_components_topological(const SignedDigraph& g) {
  auto comps = tarjan(g);
  std::reverse(comps.begin(), comps.end());
  return comps;
}

std::vector<std::vector<Vertex>> connected_components(const SignedDigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> comp(n, kUnreachable);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != kUnreachable) continue;
    std::vector<Vertex> members;
    std::deque<Vertex> queue{s};
    comp[s] = out.size();
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      members.push_back(v);
      for (Vertex w = 0; w < n; ++w) {
        if (comp[w] == kUnreachable && (g.adjacent(v, w) || g.adjacent(w, v))) {
          comp[w] = out.size();
          queue.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const SignedDigraph& g) { return connected_components(g).size() <= 1; }

bool is_strongly_connected(const SignedDigraph& g) { return strong_components(g).size() <= 1; }

bool condensation_is_acyclic(const SignedDigraph& g, const std::vector<std::vector<Vertex>>& components) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> id(n, kUnreachable);
  for (std::size_t c = 0; c < components.size(); ++c)
    for (Vertex v : components[c]) id[v] = c;
  SignedDigraph condensed(components.size());
  for (const auto& a : g.arcs())
    if (id[a.source] != id[a.target]) condensed.insert_arc({id[a.source], id[a.target], Sign::Positive});
  for (const auto& c : strong_components(condensed))
    if (c.size() > 1) return false;
  return true;
}

std::vector<std::size_t> distances_from(const SignedDigraph& g, std::span<const Vertex> from) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> dist(n, kUnreachable);
  std::deque<Vertex> queue;
  for (Vertex v : from) {
    if (v >= n) throw PreconditionError("unknown vertex index " + std::to_string(v));
    if (dist[v] != 0) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  const auto succ = underlying_digraph(g).successors;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : succ[v])
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::optional<std::size_t> distance(const SignedDigraph& g, std::span<const Vertex> from, Vertex to) {
  const auto d = distances_from(g, from).at(to);
  if (d == kUnreachable) return std::nullopt;
  return d;
}

ComponentStructure component_structure(const SignedDigraph& g) {
  if (g.empty()) throw PreconditionError("component structure of the empty graph");
  ComponentStructure cs;
  cs.strong_components = strong_components(g);
  for (const auto& comp : cs.strong_components) {
    bool entered = false;
    for (Vertex i : comp) {
      for (Vertex j : g.in_neighbors(i))
        if (!std::binary_search(comp.begin(), comp.end(), j)) entered = true;
    }
    if (!entered) cs.initial_components.push_back(comp);
  }
  for (const auto& init : cs.initial_components) {
    const bool trivial = init.size() == 1 && !g.adjacent(init.front(), init.front());
    if (!trivial) cs.basic = false;
  }
  cs.beta = cs.basic ? 0 : 1;

  std::vector<std::size_t> best(g.vertex_count(), kUnreachable);
  for (const auto& init : cs.initial_components) {
    const auto dist = distances_from(g, init);
    for (Vertex i = 0; i < g.vertex_count(); ++i)
      if (dist[i] != kUnreachable) best[i] = std::min(best[i], dist[i] + init.size());
  }
  cs.lambda = *std::max_element(best.begin(), best.end());
  return cs;
}

VertexClasses classify_vertices(const SignedDigraph& g) {
  VertexClasses vc;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const bool src = g.is_source(v), snk = g.is_sink(v);
    if (src) vc.sources.push_back(v);
    if (snk) vc.sinks.push_back(v);
    if (src && snk) vc.isolated.push_back(v);
  }
  return vc;
}

bool underlying_is_cycle(const SignedDigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  const auto u = underlying_digraph(g);
  for (Vertex v = 0; v < n; ++v)
    if (u.successors[v].size() != 1) return false;
  // Every out-degree is 1; a single cycle iff following successors from 0 visits all.
  Vertex v = 0;
  for (std::size_t step = 1; step <= n; ++step) {
    v = u.successors[v].front();
    if (v == 0) return step == n;
  }
  return false;
}

bool is_signed_cycle(const SignedDigraph& g) {
  if (!underlying_is_cycle(g)) return false;
  for (Vertex j = 0; j < g.vertex_count(); ++j)
    for (Vertex i = 0; i < g.vertex_count(); ++i)
      if (g.parallel(j, i)) return false;
  return true;
}

SignedDigraph remove_arcs(const SignedDigraph& g, std::span<const Arc> arcs) {
  SignedDigraph out = g;
  for (const auto& a : arcs) out.remove_arc(a);
  return out;
}

SignedDigraph without_arcs(const SignedDigraph& g) { return SignedDigraph(g.names()); }

SignedDigraph induced_subgraph(const SignedDigraph& g, std::span<const Vertex> vertices) {
  std::vector<std::string> names;
  std::vector<std::size_t> local(g.vertex_count(), kUnreachable);
  for (Vertex v : vertices) {
    if (v >= g.vertex_count()) throw PreconditionError("unknown vertex index " + std::to_string(v));
    local[v] = names.size();
    names.push_back(g.name(v));
  }
  SignedDigraph out(std::move(names));
  for (const auto& a : g.arcs())
    if (local[a.source] != kUnreachable && local[a.target] != kUnreachable)
      out.add_arc(local[a.source], local[a.target], a.sign);
  return out;
}

SignedDigraph without_vertices(const SignedDigraph& g, std::span<const Vertex> removed) {
  std::vector<bool> drop(g.vertex_count(), false);
  for (Vertex v : removed) drop.at(v) = true;
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!drop[v]) kept.push_back(v);
  return induced_subgraph(g, kept);
}

SignedDigraph union_with(const SignedDigraph& g, const SignedDigraph& other) {
  SignedDigraph out = g;
  for (const auto& name : other.names())
    if (!out.find(name)) out.add_vertex(name);
  for (const auto& a : other.arcs())
    out.insert_arc({out.index_of(other.name(a.source)), out.index_of(other.name(a.target)), a.sign});
  return out;
}

bool is_spanning_subgraph(const SignedDigraph& h, const SignedDigraph& g) {
  if (h.vertex_count() != g.vertex_count()) return false;
  for (const auto& a : h.arcs())
    if (!g.has_arc(a)) return false;
  return true;
}

}  // namespace sdg
