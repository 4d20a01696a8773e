#include <doctest.h>

#include <random>

#include "sdg/analysis.hpp"
#include "sdg/certificate_io.hpp"
#include "sdg/synthesis.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace sdg;

namespace {

std::vector<std::size_t> interval_sizes(const Fds& f) {
  std::vector<std::size_t> out;
  for (const auto& iv : f.domain().intervals()) out.push_back(iv.size());
  return out;
}

void check_synthesized(const SignedDigraph& g, const NilpotentSystem& nil) {
  const auto& f = nil.system;
  const auto ig = test::naive_interaction_graph(f);
  CHECK(same_arcs(ig, g));
  CHECK(test::naive_degree_bounded(f, ig));
  const auto brute = test::brute_structure(g);
  const std::size_t bound = brute.lambda + static_cast<std::size_t>(brute.beta);
  State value;
  REQUIRE(test::pointwise_constant_after(f, bound, &value));
  CHECK(value == nil.certificate.target);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    CHECK(f.domain()[v].min == 0);
    if (g.is_source(v)) CHECK(value[v] == 0);
  }
  const auto idx = test::pointwise_nilpotency_index(f);
  REQUIRE(idx.has_value());
  CHECK(*idx == nil.certificate.index);
  CHECK(*idx <= bound);
}

}  // namespace

TEST_CASE("double loop: X = {0,1,2}, f = (0, 2, 0), index 2") {
  const auto nil = construct_nilpotent(test::double_loop());
  CHECK(nil.system.domain() == IntervalProduct({{0, 2}}));
  CHECK(nil.system.table(0) == std::vector<int>{0, 2, 0});
  CHECK(nilpotency_index(nil.system) == 2u);
  CHECK(nil.certificate.index == 2);
  CHECK(nil.certificate.lambda == 1);
  CHECK(nil.certificate.beta == 1);
}

TEST_CASE("pseudo-cycle: closing vertex 3 gets {0,1,2} and f^4 = (0,0,2)") {
  const auto g = test::pseudo_cycle();
  const auto nil = construct_nilpotent(g);
  const auto& f = nil.system;
  CHECK(interval_sizes(f) == std::vector<std::size_t>{2, 2, 3});
  for (const auto& x : test::all_states(f.domain())) {
    const State want{x[2] == 1 ? 1 : 0, x[0] == 1 ? 1 : 0, x[1] == 0 ? 2 : 0};
    CHECK(evaluate(f, x) == want);
    CHECK(iterate(f, x, 4) == State{0, 0, 2});
  }
  CHECK(nilpotency_index(f) == 4u);
  CHECK(nil.certificate.target == State{0, 0, 2});
}

TEST_CASE("eight-vertex graph reproduces the worked intervals and target") {
  const auto g = test::eight_vertex();
  const auto nil = construct_nilpotent(g);
  const auto& f = nil.system;
  const auto& c = nil.certificate;
  CHECK(interval_sizes(f) == std::vector<std::size_t>{2, 4, 3, 2, 3, 2, 3, 2});
  CHECK(f.domain().size() == 1728);
  CHECK(c.target == State{0, 1, 0, 1, 1, 0, 0, 1});
  CHECK(c.lambda == 3);
  CHECK(c.beta == 1);
  REQUIRE(c.representatives.size() == 3);
  CHECK(c.representatives[0].second == 0);
  CHECK(c.representatives[1].second == 3);
  CHECK(c.representatives[2].second == 5);
  REQUIRE(c.layers.size() == 3);
  CHECK(c.layers[0] == std::vector<Vertex>{0, 3, 5});
  CHECK(c.layers[1] == std::vector<Vertex>{1, 4, 6, 7});
  CHECK(c.layers[2] == std::vector<Vertex>{2});
  CHECK(c.stripped.arc_count() == g.arc_count() - 4);
  CHECK(nilpotency_index(f) == 4u);
  for (const auto& x : test::all_states(f.domain())) CHECK(iterate(f, x, 4) == c.target);
  // Components whose worked formulas list every in-neighbour.
  for (const auto& x : test::all_states(f.domain())) {
    const auto y = evaluate(f, x);
    CHECK(y[0] == ((x[1] == 2 || x[2] >= 2) ? 1 : 0));
    CHECK(y[1] == (x[0] < 1 ? 1 : 0));
    CHECK(y[2] == (x[1] < 1 ? 1 : 0));
    CHECK(y[3] == (x[4] < 2 ? 1 : 0));
    CHECK(y[4] == (x[3] >= 1 ? 1 : 0));
    CHECK(y[5] == 0);
    CHECK(y[7] == ((x[3] >= 1 || x[4] < 1 || x[5] < 1 || x[6] == 1) ? 1 : 0));
  }
}

TEST_CASE("trivial and disconnected inputs") {
  const auto single = construct_nilpotent(test::graph("vertex a\n"));
  CHECK(single.system.domain().size() == 1);
  CHECK(nilpotency_index(single.system) == 1u);
  const auto two = test::graph("arc 1 2 +\narc 3 3 +\narc 3 3 -\nvertex 4\n");
  const auto nil = construct_nilpotent(two);
  check_synthesized(two, nil);
  CHECK(nil.system.domain()[3].size() == 1);
}

TEST_CASE("signed cycles and empty graphs are rejected") {
  CHECK_THROWS_AS(construct_nilpotent(test::graph("arc 1 2 +\narc 2 1 -\n")), PreconditionError);
  CHECK_THROWS_AS(construct_nilpotent(test::graph("arc 1 1 +\n")), PreconditionError);
  CHECK_THROWS_AS(construct_nilpotent(test::graph("arc 1 2 +\narc 2 1 +\narc 3 4 -\n")), PreconditionError);
  CHECK_THROWS_AS(construct_nilpotent(SignedDigraph{}), PreconditionError);
}

TEST_CASE("state cap") {
  CHECK_THROWS_AS(construct_nilpotent(test::eight_vertex(), 100), CapExceeded);
}

TEST_CASE("certificate invariants and round trip") {
  const auto g = test::eight_vertex();
  const auto nil = construct_nilpotent(g);
  const auto& c = nil.certificate;
  std::vector<int> seen(g.vertex_count(), 0);
  for (const auto& layer : c.layers)
    for (auto v : layer) ++seen[v];
  CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
  for (std::size_t p = 1; p < c.layers.size(); ++p)
    for (auto v : c.layers[p]) {
      bool fed = false;
      for (auto u : c.layers[p - 1]) fed = fed || c.stripped.adjacent(u, v);
      CHECK(fed);
    }
  const auto text = format_nilpotency_certificate(g, c);
  CHECK(text.find("\"lambda\": 3") != std::string::npos);
  const auto back = parse_nilpotency_certificate(g, text);
  CHECK(back.lambda == c.lambda);
  CHECK(back.beta == c.beta);
  CHECK(back.layers == c.layers);
  CHECK(back.target == c.target);
  CHECK(back.representatives == c.representatives);
  CHECK(back.stripped == c.stripped);
  CHECK(back.interval_sizes == c.interval_sizes);
  CHECK(back.index == c.index);
  CHECK_THROWS_AS(parse_nilpotency_certificate(g, "{\"lambda\":1}"), ParseError);
}

TEST_CASE("random connected graphs: exact graph, bounded, constant within lambda + beta") {
  std::mt19937_64 rng(21);
  std::size_t done = 0;
  for (int t = 0; t < 300; ++t) {
    const auto g = test::random_connected_graph(1 + t % 6, rng);
    if (is_signed_cycle(g)) {
      CHECK_THROWS_AS(construct_nilpotent(g), PreconditionError);
      continue;
    }
    check_synthesized(g, construct_nilpotent(g));
    ++done;
  }
  CHECK(done > 250);
}

TEST_CASE("pseudo-cycles of every length") {
  std::mt19937_64 rng(22);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 10; ++t) {
      auto g = test::random_signed_cycle(n, rng);
      for (const auto& a : g.arcs())
        if (std::bernoulli_distribution(0.4)(rng) || a.source == 0) g.insert_arc({a.source, a.target, a.sign * Sign::Negative});
      check_synthesized(g, construct_nilpotent(g));
      CHECK(*nilpotency_index(construct_nilpotent(g).system) <= n + 1);
    }
}
