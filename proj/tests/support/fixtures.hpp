#pragma once

#include <string_view>

#include "sdg/graph_io.hpp"
#include "sdg/signed_digraph.hpp"

namespace sdg::test {

inline SignedDigraph graph(std::string_view body) {
  std::string text = "sdg v1\n";
  text += body;
  return parse_sdg(text);
}

// One vertex with a positive and a negative loop.
inline SignedDigraph double_loop() { return graph("arc 1 1 +\narc 1 1 -\n"); }

// |G| is the cycle 1 -> 2 -> 3 -> 1 with parallel arcs 3 -> 1.
inline SignedDigraph pseudo_cycle() {
  return graph(
      "arc 1 2 +\n"
      "arc 2 3 -\n"
      "arc 3 1 +\n"
      "arc 3 1 -\n");
}

// Eight vertices, initial components {1,2,3}, {4,5}, {6}.
inline SignedDigraph eight_vertex() {
  return graph(
      "vertex 1\nvertex 2\nvertex 3\nvertex 4\nvertex 5\nvertex 6\nvertex 7\nvertex 8\n"
      "arc 1 2 -\n"
      "arc 2 1 +\n"
      "arc 2 1 -\n"
      "arc 3 1 +\n"
      "arc 2 3 -\n"
      "arc 4 5 +\n"
      "arc 5 4 -\n"
      "arc 3 7 +\n"
      "arc 4 7 -\n"
      "arc 4 8 +\n"
      "arc 5 8 -\n"
      "arc 6 8 -\n"
      "arc 7 8 +\n"
      "arc 7 8 -\n"
      "arc 8 7 -\n");
}

// Six vertices; the subgraph keeps only the negative cycle 4 -> 5 -> 6 -> 4.
inline SignedDigraph six_vertex_p() {
  return graph(
      "vertex 1\nvertex 2\nvertex 3\nvertex 4\nvertex 5\nvertex 6\n"
      "arc 6 4 -\n"
      "arc 4 5 -\n"
      "arc 4 5 +\n"
      "arc 5 6 +\n"
      "arc 6 5 +\n"
      "arc 3 1 -\n"
      "arc 1 2 -\n"
      "arc 1 3 -\n"
      "arc 2 3 +\n"
      "arc 3 2 +\n"
      "arc 1 6 +\n"
      "arc 3 6 +\n"
      "arc 4 1 -\n"
      "arc 4 3 +\n");
}

inline SignedDigraph six_vertex_p_sub() {
  return graph(
      "vertex 1\nvertex 2\nvertex 3\nvertex 4\nvertex 5\nvertex 6\n"
      "arc 6 4 -\n"
      "arc 4 5 -\n"
      "arc 5 6 +\n");
}

// Six vertices where the isolated set fails property P: {5,6} is a closed
// strongly connected block entered from 4.
inline SignedDigraph six_vertex_split() {
  return graph(
      "vertex 1\nvertex 2\nvertex 3\nvertex 4\nvertex 5\nvertex 6\n"
      "arc 1 4 +\n"
      "arc 4 1 +\n"
      "arc 2 1 -\n"
      "arc 4 5 +\n"
      "arc 2 3 +\n"
      "arc 3 2 +\n"
      "arc 5 6 +\n"
      "arc 6 5 -\n");
}

inline SignedDigraph six_vertex_split_sub() {
  return graph(
      "vertex 1\nvertex 2\nvertex 3\nvertex 4\nvertex 5\nvertex 6\n"
      "arc 1 4 +\n"
      "arc 4 1 +\n");
}

// Removing 2 -> 3 leaves vertex 2 a sink of the subgraph that is not a sink of
// the whole graph: no converging system exists.
inline SignedDigraph triangle_with_loop() {
  return graph(
      "arc 1 2 +\n"
      "arc 2 3 +\n"
      "arc 3 1 +\n"
      "arc 1 1 +\n");
}

inline SignedDigraph triangle_with_loop_sub() {
  return graph(
      "vertex 1\nvertex 2\nvertex 3\n"
      "arc 1 2 +\n"
      "arc 3 1 +\n"
      "arc 1 1 +\n");
}

}  // namespace sdg::test
