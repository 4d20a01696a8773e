#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdg/error.hpp"
#include "sdg/fds.hpp"
#include "sdg/signed_digraph.hpp"

namespace sdg {

// ---------------------------------------------------------------------------
// Nilpotent systems.

struct NilpotencyCertificate {
  std::size_t lambda = 0;
  int beta = 0;
  // Each initial strong component (sorted members) with its chosen vertex.
  std::vector<std::pair<std::vector<Vertex>, Vertex>> representatives;
  // g with every arc into a representative removed.
  SignedDigraph stripped;
  // layers[p] = J_{p+1}: vertices at distance p from the representatives in
  // the stripped graph, merged over connected components.
  std::vector<std::vector<Vertex>> layers;
  State target;
  std::vector<std::size_t> interval_sizes;
  // Measured on the output, always <= lambda + beta.
  std::size_t index = 0;
};

struct NilpotentSystem {
  Fds system;
  NilpotencyCertificate certificate;
};

// Degree-bounded f on g with f^{λ+β} = cst = target and target_i = min X_i on
// sources. Every interval starts at 0. Each connected component is handled on
// its own: a trivial component gets X_i = {0}; when |G| is not a cycle,
// representatives are the smallest eligible vertex of each initial component;
// when |G| is a cycle with parallel arcs the smallest vertex with a parallel
// out-arc closes the cycle. The output is re-verified before it is returned.
// Throws PreconditionError on an empty graph or a component that is a signed
// cycle.
NilpotentSystem construct_nilpotent(const SignedDigraph& g, std::size_t state_cap = Limits{}.state_cap);

// ---------------------------------------------------------------------------
// Arc-by-arc extension of a system on a spanning subgraph.

enum class ExtensionCase {
  InnerPositive,        // j not a sink, i not a source, s = +
  InnerNegative,        // same, s = -
  FromSinkPositiveHigh, // j a sink, s = +, anchor below max X_j
  FromSinkPositiveLow,  // j a sink, s = +, anchor above min X_j
  FromSinkNegativeHigh, // j a sink, s = -, anchor below max X_j
  FromSinkNegativeLow,  // j a sink, s = -, anchor above min X_j
  IntoSourceRaise,      // i a source, s = +, c below max Y_i: X_j grows upward
  IntoSourceDrop,       // i a source, s = -, c above min Y_i: X_j grows upward
  IntoSourceRaiseBelow, // i a source, s = +, c = max Y_i: X_j grows downward
  IntoSourceDropBelow,  // i a source, s = -, c = min Y_i: X_j grows downward
};

std::string to_string(ExtensionCase c);

// The system being extended toward g, with A and B taken against the original
// subgraph H: A = sources of H that are not sources of `graph`, B = sinks of H
// that are not sinks of `graph`.
struct ExtensionState {
  SignedDigraph graph;
  Fds system;
  State anchor;
  std::vector<Vertex> set_a;
  std::vector<Vertex> set_b;
  std::vector<ExtensionCase> history;
};

// Throws PreconditionError unless h is a degree-bounded system on h_graph and
// anchor ∈ Y.
ExtensionState start_extension(const SignedDigraph& h_graph, const Fds& h, State anchor);

// Adds one arc. Throws PreconditionError when the arc is already present and
// InvariantViolation when no case applies or a postcondition fails.
ExtensionState extend_by_arc(const ExtensionState& state, const Arc& a, const SignedDigraph& h_graph, const Fds& h);

// Throws InvariantViolation naming the first failing check:
// f(X) ⊆ Y; f_i(X) ⊆ h_i(Y) off A; f = h on Y where x_B = anchor_B;
// f_i = h_i on Y when G_i ∩ B = ∅; IG(f) = graph; f degree-bounded.
void check_extension_invariants(const ExtensionState& state, const SignedDigraph& h_graph, const Fds& h);

// Throws PreconditionError unless h_graph is a spanning subgraph of g, g has no
// arc from a sink of H to a source of H, and no arc into an isolated vertex of H.
void check_extension_hypotheses(const SignedDigraph& g, const SignedDigraph& h_graph);

// Folds extend_by_arc over g \ H in (source, target, + before -) order.
Fds extend_all(const SignedDigraph& g, const SignedDigraph& h_graph, const Fds& h, const State& anchor,
               std::vector<ExtensionCase>* cases = nullptr);

// ---------------------------------------------------------------------------
// Convergence toward a subsystem.

enum class ConvergenceRoute { Direct, PropertyP, Split };

std::string to_string(ConvergenceRoute r);

struct ConvergencePlan {
  std::vector<Vertex> isolated;  // I: isolated in H, not in g
  bool property_p = true;
  ConvergenceRoute route = ConvergenceRoute::Direct;
  // PropertyP route.
  SignedDigraph h_tilde;
  SignedDigraph q;  // H̃[I] (PropertyP) or the arcs into J (Split), spanning
  SignedDigraph g_tilde;
  // Split route.
  std::vector<Vertex> i_tilde;
  std::vector<Vertex> j_set;
  State anchor;  // ξ = max X̃ (Split)
  std::vector<ExtensionCase> cases;  // every Lemma step taken, in order
};

struct ConvergingSystem {
  Fds system;
  // At k = |I| + 1 when that holds. Otherwise f^{|I|+1}(X) only lies in the
  // product of the sets h_i(Y), which can be larger than h(Y), and the
  // witness is taken at |I| + 2.
  ConvergenceWitness witness;
  ConvergencePlan plan;
};

// Throws PreconditionError unless: H is a spanning subgraph of g; h is a
// degree-bounded system on H; every source and every sink of H \ I is a source
// or sink of g; no connected component of g is a signed cycle inside I.
void check_converging_preconditions(const SignedDigraph& g, const SignedDigraph& h_graph, const Fds& h);

// Degree-bounded f on g with f = h on Y and f^{|I|+1}(X) inside the product of
// the sets h_i(Y). That gives convergence toward h in |I| + 1 steps when h(Y)
// is a product set, and in |I| + 2 steps always. The witness is recomputed on
// the output and must be valid, otherwise InvariantViolation.
ConvergingSystem construct_converging(const SignedDigraph& g, const SignedDigraph& h_graph, const Fds& h);

// ---------------------------------------------------------------------------
// Prescribed fixed-point counts.

struct FixedPointRealization {
  Fds system;
  SignedDigraph subgraph;  // the retained cycles
  Fds subsystem;           // the unique system on them, singletons elsewhere
  std::optional<ConvergingSystem> converging;  // absent when g is the subgraph
  std::size_t fixed_point_count = 0;
};

// Unique degree-bounded system on a union of vertex-disjoint signed cycles:
// f_v = x_u or 1 - x_u for the cycle arc u -> v, X_v = {0} off the cycles.
Fds cycle_union_system(const SignedDigraph& cycles);

// g connected with a negative cycle; the result has no fixed point.
FixedPointRealization construct_no_fixed_point(const SignedDigraph& g);

// g connected with k >= 1 vertex-disjoint positive cycles; exactly 2^k fixed
// points.
FixedPointRealization construct_2k_fixed_points(const SignedDigraph& g, std::size_t k);

}  // namespace sdg
