#include <doctest.h>

#include <filesystem>
#include <random>

#include "sdg/error.hpp"
#include "sdg/graph_io.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace sdg;

TEST_CASE("parse named vertices and comments") {
  const auto g = parse_sdg("sdg v1\n# a comment\nvertex z\narc a b +\n  arc b a -  \n\narc a a +\n");
  CHECK(g.names() == std::vector<std::string>{"z", "a", "b"});
  CHECK(g.arc_count() == 3);
  CHECK(g.has_arc(2, 1, Sign::Negative));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_sdg(""), ParseError);
  CHECK_THROWS_AS(parse_sdg("sdg v2\n"), ParseError);
  CHECK_THROWS_AS(parse_sdg("sdg v1\narc a b *\n"), ParseError);
  CHECK_THROWS_AS(parse_sdg("sdg v1\narc a b\n"), ParseError);
  CHECK_THROWS_AS(parse_sdg("sdg v1\nedge a b +\n"), ParseError);
  try {
    parse_sdg("sdg v1\narc a b +\narc a b +\n");
    FAIL("duplicate accepted");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
}

TEST_CASE("format/parse round trip") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const auto g = test::random_graph(1 + t % 6, rng, 0.3, 0.3);
    CHECK(parse_sdg(format_sdg(g)) == g);
  }
}

TEST_CASE("file round trip") {
  const auto path = std::filesystem::temp_directory_path() / "sdg_graph_io_test.sdg";
  const auto g = test::eight_vertex();
  write_sdg_file(path, g);
  CHECK(read_sdg_file(path) == g);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_sdg_file(path), ParseError);
}

TEST_CASE("dot export colours arcs by sign") {
  const auto dot = to_dot(test::pseudo_cycle());
  CHECK(dot.find("digraph G") != std::string::npos);
  CHECK(dot.find("\"3\" -> \"1\" [color=green]") != std::string::npos);
  CHECK(dot.find("\"3\" -> \"1\" [color=red]") != std::string::npos);
  CHECK(dot.find("\"2\" -> \"3\" [color=red]") != std::string::npos);
}
