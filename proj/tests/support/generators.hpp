#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "sdg/fds.hpp"
#include "sdg/signed_digraph.hpp"

namespace sdg::test {

struct GraphShape {
  double arc_prob = 0.25;       // extra arcs on top of the spanning tree
  double parallel_prob = 0.15;  // chance an arc also gets the opposite sign
  double loop_prob = 0.1;
};

inline Sign random_sign(std::mt19937_64& rng) {
  return std::bernoulli_distribution(0.5)(rng) ? Sign::Positive : Sign::Negative;
}

inline void add_random_arc(SignedDigraph& g, Vertex j, Vertex i, double parallel_prob, std::mt19937_64& rng) {
  const Sign s = random_sign(rng);
  g.insert_arc({j, i, s});
  if (std::bernoulli_distribution(parallel_prob)(rng)) g.insert_arc({j, i, s * Sign::Negative});
}

// Weakly connected: a random spanning tree with random orientations, then extra
// arcs and loops.
inline SignedDigraph random_connected_graph(std::size_t n, std::mt19937_64& rng, const GraphShape& shape = {}) {
  SignedDigraph g(n);
  std::bernoulli_distribution coin(0.5), extra(shape.arc_prob), loop(shape.loop_prob);
  for (Vertex v = 1; v < n; ++v) {
    const Vertex u = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
    if (coin(rng))
      add_random_arc(g, u, v, shape.parallel_prob, rng);
    else
      add_random_arc(g, v, u, shape.parallel_prob, rng);
  }
  for (Vertex j = 0; j < n; ++j)
    for (Vertex i = 0; i < n; ++i) {
      if (j == i) {
        if (loop(rng)) add_random_arc(g, j, i, shape.parallel_prob, rng);
      } else if (extra(rng)) {
        add_random_arc(g, j, i, shape.parallel_prob, rng);
      }
    }
  return g;
}

// Arbitrary graph, possibly disconnected or arcless.
inline SignedDigraph random_graph(std::size_t n, std::mt19937_64& rng, double arc_prob, double parallel_prob = 0.1) {
  SignedDigraph g(n);
  std::bernoulli_distribution arc(arc_prob);
  for (Vertex j = 0; j < n; ++j)
    for (Vertex i = 0; i < n; ++i)
      if (arc(rng)) add_random_arc(g, j, i, parallel_prob, rng);
  return g;
}

// Cycle 1 -> 2 -> ... -> n -> 1 with random signs and a random vertex order.
inline SignedDigraph random_signed_cycle(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  SignedDigraph g(n);
  for (std::size_t t = 0; t < n; ++t) g.add_arc(order[t], order[(t + 1) % n], random_sign(rng));
  return g;
}

inline SignedDigraph cycle_with_signs(const std::vector<Sign>& signs) {
  const std::size_t n = signs.size();
  SignedDigraph g(n);
  for (std::size_t t = 0; t < n; ++t) g.add_arc(t, (t + 1) % n, signs[t]);
  return g;
}

// Random acyclic graph: arcs only from lower to higher index.
inline SignedDigraph random_acyclic_graph(std::size_t n, std::mt19937_64& rng, double arc_prob,
                                          double parallel_prob = 0.2) {
  SignedDigraph g(n);
  std::bernoulli_distribution arc(arc_prob);
  for (Vertex j = 0; j < n; ++j)
    for (Vertex i = j + 1; i < n; ++i)
      if (arc(rng)) add_random_arc(g, j, i, parallel_prob, rng);
  return g;
}

// Every sign assignment (with optional parallels) on an arc pattern: calls
// visit(g) for each of the 3^|pattern| signings.
template <class Visit>
void for_each_signing(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pattern, Visit&& visit) {
  std::vector<int> choice(pattern.size(), 0);
  while (true) {
    SignedDigraph g(n);
    for (std::size_t t = 0; t < pattern.size(); ++t) {
      const auto [j, i] = pattern[t];
      if (choice[t] != 1) g.add_arc(j, i, Sign::Positive);
      if (choice[t] != 0) g.add_arc(j, i, Sign::Negative);
    }
    visit(g);
    std::size_t t = 0;
    while (t < choice.size() && ++choice[t] == 3) choice[t++] = 0;
    if (t == choice.size()) break;
  }
}

// Random tables over 1..4 components with sizes 1..3. Each component reads a
// random subset of coordinates, so small interaction graphs show up often.
inline Fds random_sparse_fds(std::mt19937_64& rng, std::size_t max_n = 4, std::size_t max_size = 3) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  std::vector<std::size_t> s(n);
  for (auto& v : s) v = std::uniform_int_distribution<std::size_t>(1, max_size)(rng);
  const auto X = IntervalProduct::from_sizes(s);
  std::vector<std::vector<std::size_t>> deps(n);
  std::bernoulli_distribution dep(0.4);
  for (auto& d : deps)
    for (std::size_t j = 0; j < n; ++j)
      if (dep(rng)) d.push_back(j);
  std::vector<std::vector<int>> tables(n, std::vector<int>(X.size()));
  for (std::size_t i = 0; i < n; ++i) {
    std::map<std::vector<int>, int> local;
    for (std::size_t off = 0; off < X.size(); ++off) {
      std::vector<int> key;
      for (auto j : deps[i]) key.push_back(X.coordinate(off, j));
      auto it = local.find(key);
      if (it == local.end())
        it = local.emplace(key, std::uniform_int_distribution<int>(0, static_cast<int>(s[i]) - 1)(rng)).first;
      tables[i][off] = it->second;
    }
  }
  return Fds(X, tables);
}

}  // namespace sdg::test
