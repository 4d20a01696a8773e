#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "sdg/signed_digraph.hpp"

namespace sdg {

// |G|: same vertices, an arc j -> i iff j ∈ G_i.
struct UnsignedDigraph {
  std::vector<std::vector<Vertex>> successors;

  std::size_t vertex_count() const noexcept { return successors.size(); }
  std::size_t arc_count() const;
  bool has_arc(Vertex j, Vertex i) const;
};

UnsignedDigraph underlying_digraph(const SignedDigraph& g);

// Strong components, each sorted, listed by smallest member.
std::vector<std::vector<Vertex>> strong_components(const SignedDigraph& g);
// Strong components in a topological order of the condensation (sources first).
std::vector<std::vector<Vertex>> strong_components_topological(const SignedDigraph& g);
// Weakly connected components, each sorted, listed by smallest member.
std::vector<std::vector<Vertex>> connected_components(const SignedDigraph& g);

bool is_connected(const SignedDigraph& g);
bool is_strongly_connected(const SignedDigraph& g);
// Condensation is acyclic: a sanity check on a strong-component partition.
bool condensation_is_acyclic(const SignedDigraph& g, const std::vector<std::vector<Vertex>>& components);

struct ComponentStructure {
  std::vector<std::vector<Vertex>> strong_components;
  std::vector<std::vector<Vertex>> initial_components;
  bool basic = true;
  int beta = 0;
  std::size_t lambda = 0;
};

// Throws PreconditionError on the empty graph.
ComponentStructure component_structure(const SignedDigraph& g);

inline std::size_t lambda(const SignedDigraph& g) { return component_structure(g).lambda; }
inline int beta(const SignedDigraph& g) { return component_structure(g).beta; }

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

// d_G(I, i) for every i; kUnreachable where no path exists.
std::vector<std::size_t> distances_from(const SignedDigraph& g, std::span<const Vertex> from);
// Absent means infinity.
std::optional<std::size_t> distance(const SignedDigraph& g, std::span<const Vertex> from, Vertex to);

struct VertexClasses {
  std::vector<Vertex> sources;
  std::vector<Vertex> sinks;
  std::vector<Vertex> isolated;
};

VertexClasses classify_vertices(const SignedDigraph& g);

// |G| is a single directed cycle through every vertex.
bool underlying_is_cycle(const SignedDigraph& g);
// |G| is a cycle and no ordered pair carries both signs.
bool is_signed_cycle(const SignedDigraph& g);

// Graph edits. Spanning edits keep the vertex set; induced ones re-index in the
// order given (names are kept).
SignedDigraph remove_arcs(const SignedDigraph& g, std::span<const Arc> arcs);
SignedDigraph without_arcs(const SignedDigraph& g);
SignedDigraph induced_subgraph(const SignedDigraph& g, std::span<const Vertex> vertices);
SignedDigraph without_vertices(const SignedDigraph& g, std::span<const Vertex> removed);
// Vertices matched by name; vertices of `other` not in `g` are appended.
SignedDigraph union_with(const SignedDigraph& g, const SignedDigraph& other);

template <class Keep>
SignedDigraph spanning_subgraph(const SignedDigraph& g, Keep&& keep) {
  SignedDigraph out(g.names());
  for (const auto& a : g.arcs())
    if (keep(a)) out.add_arc(a);
  return out;
}

// Same vertices (by index) and every arc of h is an arc of g.
bool is_spanning_subgraph(const SignedDigraph& h, const SignedDigraph& g);

}  // namespace sdg
