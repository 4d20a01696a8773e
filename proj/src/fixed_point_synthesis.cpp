#include "sdg/analysis.hpp"
#include "sdg/cycles.hpp"
#include "sdg/synthesis.hpp"

namespace sdg {

Fds cycle_union_system(const SignedDigraph& cycles) {
  const std::size_t n = cycles.vertex_count();
  std::vector<std::size_t> sizes(n, 1);
  std::vector<std::optional<Arc>> into(n);
  for (const auto& a : cycles.arcs()) {
    if (into[a.target]) throw PreconditionError("cycle union: vertex " + cycles.name(a.target) + " has two in-arcs");
    into[a.target] = a;
    sizes[a.target] = 2;
  }
  for (Vertex v = 0; v < n; ++v)
    if (cycles.out_degree(v) != (into[v] ? 1u : 0u))
      throw PreconditionError("cycle union: vertex " + cycles.name(v) + " is not on exactly one cycle");
  return Fds::tabulate(IntervalProduct::from_sizes(sizes), [&](std::span<const int> x, std::span<int> y) {
    for (Vertex v = 0; v < n; ++v) {
      if (!into[v]) {
        y[v] = 0;
        continue;
      }
      const int u = x[into[v]->source];
      y[v] = into[v]->sign == Sign::Positive ? u : 1 - u;
    }
  });
}

namespace {

FixedPointRealization realize(const SignedDigraph& g, const std::vector<SignedCycle>& cycles) {
  FixedPointRealization r;
  r.subgraph = cycles_subgraph(g, cycles);
  r.subsystem = cycle_union_system(r.subgraph);
  if (r.subgraph == g) {
    r.system = r.subsystem;
  } else {
    r.converging = construct_converging(g, r.subgraph, r.subsystem);
    r.system = r.converging->system;
  }
  r.fixed_point_count = fixed_points(r.system).size();
  return r;
}

void require_connected(const SignedDigraph& g) {
  if (g.empty()) throw PreconditionError("graph is empty");
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
}

}  // namespace

FixedPointRealization construct_no_fixed_point(const SignedDigraph& g) {
  require_connected(g);
  const auto cycle = find_cycle_of_sign(g, Sign::Negative);
  if (!cycle) throw PreconditionError("graph has no negative cycle");
  auto r = realize(g, {*cycle});
  if (r.fixed_point_count != 0)
    throw InvariantViolation("no-fixed-point construction produced " + std::to_string(r.fixed_point_count) +
                             " fixed point(s)");
  return r;
}

FixedPointRealization construct_2k_fixed_points(const SignedDigraph& g, std::size_t k) {
  require_connected(g);
  if (k == 0) throw PreconditionError("k must be positive");
  const auto family = find_disjoint_positive_cycles(g, k);
  if (!family) throw PreconditionError("graph has fewer than " + std::to_string(k) + " vertex-disjoint positive cycles");
  auto r = realize(g, *family);
  if (r.fixed_point_count != (std::size_t{1} << k))
    throw InvariantViolation("2^k construction produced " + std::to_string(r.fixed_point_count) + " fixed points, expected " +
                             std::to_string(std::size_t{1} << k));
  return r;
}

}  // namespace sdg
