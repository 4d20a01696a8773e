#include <doctest.h>

#include <random>

#include "sdg/analysis.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace sdg;

namespace {

std::vector<std::vector<Vertex>> by_name(const SignedDigraph& g, std::initializer_list<std::vector<const char*>> sets) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& s : sets) {
    std::vector<Vertex> c;
    for (auto n : s) c.push_back(g.index_of(n));
    out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("underlying digraph merges parallel arcs") {
  const auto g = test::pseudo_cycle();
  const auto u = underlying_digraph(g);
  CHECK(u.arc_count() == 3);
  CHECK(u.has_arc(0, 1));
  CHECK(u.has_arc(1, 2));
  CHECK(u.has_arc(2, 0));
  CHECK(underlying_is_cycle(g));
  CHECK_FALSE(is_signed_cycle(g));
  CHECK(underlying_digraph(SignedDigraph{}).vertex_count() == 0);
}

TEST_CASE("signed cycle recognition") {
  CHECK(is_signed_cycle(test::graph("arc 1 2 +\narc 2 1 -\n")));
  CHECK(is_signed_cycle(test::graph("arc 1 1 +\n")));
  CHECK_FALSE(is_signed_cycle(test::double_loop()));
  CHECK_FALSE(is_signed_cycle(test::graph("arc 1 2 +\n")));
  CHECK_FALSE(is_signed_cycle(test::graph("arc 1 2 +\narc 2 1 +\narc 2 2 +\n")));
}

TEST_CASE("component structure of the eight-vertex graph") {
  const auto g = test::eight_vertex();
  const auto cs = component_structure(g);
  CHECK(cs.initial_components == by_name(g, {{"1", "2", "3"}, {"4", "5"}, {"6"}}));
  CHECK(cs.lambda == 3);
  CHECK(cs.beta == 1);
  CHECK_FALSE(cs.basic);
  const auto vc = classify_vertices(g);
  CHECK(vc.sources == std::vector<Vertex>{g.index_of("6")});
  CHECK(vc.sinks.empty());
  CHECK(vc.isolated.empty());
}

TEST_CASE("distances") {
  const auto path = test::graph("arc 1 2 +\narc 2 3 -\n");
  const Vertex one = 0, three = 2;
  CHECK(distance(path, std::span(&one, 1), 2) == 2);
  CHECK_FALSE(distance(path, std::span(&three, 1), 0).has_value());
  const auto g = test::eight_vertex();
  const std::vector<Vertex> first{0, 1, 2};
  CHECK(distances_from(g, first)[g.index_of("7")] == 1);
  CHECK(distances_from(g, first)[g.index_of("6")] == kUnreachable);
}

TEST_CASE("basic graphs have beta 0") {
  const auto path = test::graph("arc 1 2 +\narc 2 3 -\n");
  const auto cs = component_structure(path);
  CHECK(cs.basic);
  CHECK(cs.beta == 0);
  CHECK(cs.lambda == 3);
  const auto loop = component_structure(test::graph("arc 1 1 +\narc 1 2 +\n"));
  CHECK(loop.beta == 1);
  CHECK(loop.lambda == 2);
  CHECK_THROWS_AS(component_structure(SignedDigraph{}), PreconditionError);
}

TEST_CASE("lambda of a disconnected graph is the max over components") {
  const auto g = test::graph("arc 1 2 +\narc 2 3 +\narc 4 4 -\n");
  CHECK(lambda(g) == 3);
  CHECK(beta(g) == 1);
}

TEST_CASE("edits") {
  const auto g = test::eight_vertex();
  const std::vector<Arc> into_reps = [&] {
    std::vector<Arc> out;
    for (const auto& a : g.arcs())
      if (a.target == 0 || a.target == 3 || a.target == 5) out.push_back(a);
    return out;
  }();
  const auto h = remove_arcs(g, into_reps);
  CHECK(is_spanning_subgraph(h, g));
  CHECK_FALSE(is_spanning_subgraph(g, h));
  CHECK(component_structure(h).initial_components == by_name(h, {{"1"}, {"4"}, {"6"}}));
  CHECK(without_arcs(g).arc_count() == 0);
  CHECK(without_arcs(g).vertex_count() == 8);
  CHECK(induced_subgraph(g, std::vector<Vertex>{}).empty());
  const auto sub = induced_subgraph(g, std::vector<Vertex>{3, 4});
  CHECK(sub.names() == std::vector<std::string>{"4", "5"});
  CHECK(sub.arc_count() == 2);
  const auto rest = without_vertices(g, std::vector<Vertex>{0, 1, 2});
  CHECK(rest.vertex_count() == 5);
  CHECK(union_with(h, g) == g);
}

TEST_CASE("strong components agree with a reachability oracle") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto g = test::random_graph(1 + t % 7, rng, 0.3);
    const auto scc = strong_components(g);
    const auto d = test::all_distances(g);
    for (const auto& c : scc)
      for (auto u : c)
        for (auto v : c) CHECK((d[u][v] < test::kNone && d[v][u] < test::kNone));
    std::size_t total = 0;
    for (const auto& c : scc) total += c.size();
    CHECK(total == g.vertex_count());
    CHECK(condensation_is_acyclic(g, scc));
    const auto topo = strong_components_topological(g);
    CHECK(topo.size() == scc.size());
    // Sources first: no arc from a later component back to an earlier one.
    std::vector<std::size_t> rank(g.vertex_count());
    for (std::size_t r = 0; r < topo.size(); ++r)
      for (auto v : topo[r]) rank[v] = r;
    for (const auto& a : g.arcs()) CHECK(rank[a.source] <= rank[a.target]);
  }
}

TEST_CASE("lambda, beta and initial components agree with a brute-force oracle") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 400; ++t) {
    const auto g = test::random_graph(1 + t % 7, rng, 0.2 + 0.05 * (t % 5));
    const auto cs = component_structure(g);
    const auto brute = test::brute_structure(g);
    CHECK(cs.lambda == brute.lambda);
    CHECK(cs.beta == brute.beta);
    CHECK(cs.basic == (brute.beta == 0));
    CHECK(cs.initial_components == brute.initial);
  }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(test::eight_vertex()));
  CHECK_FALSE(is_connected(test::graph("arc 1 1 +\nvertex 2\n")));
  CHECK(connected_components(test::graph("arc 1 2 +\narc 3 3 -\n")).size() == 2);
  CHECK(is_strongly_connected(test::graph("vertex 1\n")));
  CHECK(is_strongly_connected(test::pseudo_cycle()));
  CHECK_FALSE(is_strongly_connected(test::eight_vertex()));
}
