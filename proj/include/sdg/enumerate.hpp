#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "sdg/error.hpp"
#include "sdg/fds.hpp"
#include "sdg/signed_digraph.hpp"

namespace sdg {

// Interval sizes a degree-bounded system on g may use at each vertex: 1 for
// isolated vertices, 2 for non-isolated sinks, otherwise 2..d_out+1 (at least 3
// when the vertex has parallel out-arcs, since both directions must show up).
std::vector<std::vector<std::size_t>> admissible_sizes(const SignedDigraph& g);

// Calls `visit` on every degree-bounded system whose interaction graph is
// exactly g, over every admissible size assignment (intervals start at 0).
// Order: size assignments as an odometer (last vertex fastest), then the
// product of per-vertex local functions in lexicographic table order.
// `visit` returns false to stop early. Throws CapExceeded before visiting
// anything when the filtered search space exceeds limits.candidate_cap.
// Returns the number of systems visited.
std::size_t for_each_degree_bounded_system(const SignedDigraph& g, const std::function<bool(const Fds&)>& visit,
                                           const Limits& limits = {});

std::vector<Fds> enumerate_degree_bounded_systems(const SignedDigraph& g, const Limits& limits = {});

// Exhaustive search for a degree-bounded system on g with f^m constant. Same
// search space as for_each_degree_bounded_system, explored vertex by vertex in
// a topological order of the strong components with pruning:
//  - table cells are filled in offset order and rejected as soon as a step
//    shows a sign that g does not have;
//  - a loop-free vertex forming its own strong component must be constant on
//    the projection of f^{m-1}(X_P), P the vertices placed before it;
//  - after each non-trivial strong component the placed prefix must already
//    satisfy f^m = cst.
// Absent means no such system exists. Throws CapExceeded when more than
// limits.candidate_cap search nodes are expanded.
std::optional<Fds> find_system_nilpotent_within(const SignedDigraph& g, std::size_t m, const Limits& limits = {});

// Random system with interaction graph exactly g on intervals {0..sizes[i]-1}.
// Each local function is found by hill-climbing on the number of sign
// mismatches, restarting on failure. Absent when the sizes make g unreachable
// (for example a parallel arc out of a 2-valued vertex) or no table was found.
std::optional<Fds> random_system_on(const SignedDigraph& g, std::span<const std::size_t> sizes, std::mt19937_64& rng);

// Random sizes from admissible_sizes, then random_system_on.
std::optional<Fds> random_degree_bounded_system(const SignedDigraph& g, std::mt19937_64& rng);

}  // namespace sdg
