#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sdg/error.hpp"
#include "sdg/signed_digraph.hpp"

namespace sdg {

// A simple directed cycle with one sign per step. vertices[t] -> vertices[t+1]
// (cyclically) carries signs[t]; the cycle starts at its smallest vertex.
struct SignedCycle {
  std::vector<Vertex> vertices;
  std::vector<Sign> signs;
  Sign sign = Sign::Positive;

  std::vector<Arc> arcs() const;
  friend bool operator==(const SignedCycle&, const SignedCycle&) = default;
};

// Every simple cycle once per sign pattern (parallel arcs yield distinct
// descriptors). Order: by start vertex, then DFS order over ascending
// successors, then sign patterns with + before -. Throws CapExceeded when more
// than `cap` descriptors would be produced.
std::vector<SignedCycle> enumerate_cycles(const SignedDigraph& g,
                                          std::optional<std::size_t> max_length = std::nullopt,
                                          std::size_t cap = Limits{}.cycle_cap);

// Exact backtracking: absent means no such family exists.
std::optional<std::vector<SignedCycle>> find_disjoint_positive_cycles(const SignedDigraph& g, std::size_t k,
                                                                      std::size_t cap = Limits{}.cycle_cap);

std::optional<SignedCycle> find_cycle_of_sign(const SignedDigraph& g, Sign s, std::size_t cap = Limits{}.cycle_cap);
bool is_acyclic(const SignedDigraph& g);

// Spanning subgraph of g keeping only the arcs of the given cycles.
SignedDigraph cycles_subgraph(const SignedDigraph& g, const std::vector<SignedCycle>& cycles);

}  // namespace sdg
