#pragma once

// Slow, direct re-implementations used to cross-check the library. None of
// them call into the code under test beyond the data types.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "sdg/fds.hpp"
#include "sdg/signed_digraph.hpp"

namespace sdg::test {

struct CycleCensus {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t total() const { return positive + negative; }
};

// Every vertex sequence starting at its smallest vertex, checked arc by arc,
// with one count per sign choice on parallel arcs.
inline CycleCensus naive_cycle_census(const SignedDigraph& g) {
  const std::size_t n = g.vertex_count();
  CycleCensus out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) members.push_back(v);
    // First member fixed, the rest permuted.
    std::vector<Vertex> rest(members.begin() + 1, members.end());
    do {
      std::vector<Vertex> seq{members.front()};
      seq.insert(seq.end(), rest.begin(), rest.end());
      std::size_t pos = 1, neg = 0;  // sign-pattern counts
      bool ok = true;
      for (std::size_t t = 0; t < seq.size() && ok; ++t) {
        const auto m = g.sign_mask(seq[t], seq[(t + 1) % seq.size()]);
        if (m == 0) {
          ok = false;
        } else if (m == 1) {
        } else if (m == 2) {
          std::swap(pos, neg);
        } else {
          const std::size_t both = pos + neg;
          pos = neg = both;
        }
      }
      if (ok) {
        out.positive += pos;
        out.negative += neg;
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return out;
}

// Floyd–Warshall distances (number of arcs); kNone when unreachable.
inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max() / 4;

inline std::vector<std::vector<std::size_t>> all_distances(const SignedDigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kNone));
  for (Vertex v = 0; v < n; ++v) d[v][v] = 0;
  for (Vertex j = 0; j < n; ++j)
    for (Vertex i = 0; i < n; ++i)
      if (j != i && g.adjacent(j, i)) d[j][i] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) d[a][b] = std::min(d[a][b], d[a][k] + d[k][b]);
  return d;
}

struct BruteStructure {
  std::vector<std::vector<Vertex>> initial;
  std::size_t lambda = 0;
  int beta = 0;
};

// Strong components from mutual reachability; a component is initial when
// nothing outside reaches it.
inline BruteStructure brute_structure(const SignedDigraph& g) {
  const std::size_t n = g.vertex_count();
  const auto d = all_distances(g);
  BruteStructure out;
  std::vector<bool> seen(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v]) continue;
    std::vector<Vertex> comp;
    for (Vertex u = 0; u < n; ++u)
      if (d[v][u] < kNone && d[u][v] < kNone) {
        comp.push_back(u);
        seen[u] = true;
      }
    bool initial = true;
    for (Vertex u = 0; u < n && initial; ++u)
      if (std::find(comp.begin(), comp.end(), u) == comp.end())
        for (auto c : comp)
          if (g.adjacent(u, c)) initial = false;
    if (initial) out.initial.push_back(comp);
  }
  for (const auto& c : out.initial)
    if (c.size() > 1 || g.adjacent(c[0], c[0])) out.beta = 1;
  for (Vertex i = 0; i < n; ++i) {
    std::size_t best = kNone;
    for (const auto& c : out.initial) {
      std::size_t dist = kNone;
      for (auto s : c) dist = std::min(dist, d[s][i]);
      if (dist < kNone) best = std::min(best, dist + c.size());
    }
    out.lambda = std::max(out.lambda, best);
  }
  return out;
}

// Own mixed-radix coding, independent of IntervalProduct::offset.
struct Radix {
  std::vector<int> lo, len;
  explicit Radix(const IntervalProduct& x) {
    for (const auto& iv : x.intervals()) {
      lo.push_back(iv.min);
      len.push_back(iv.max - iv.min + 1);
    }
  }
  std::size_t size() const {
    std::size_t s = 1;
    for (int l : len) s *= static_cast<std::size_t>(l);
    return s;
  }
  std::size_t encode(const State& x) const {
    std::size_t off = 0;
    for (std::size_t i = 0; i < len.size(); ++i) off = off * len[i] + static_cast<std::size_t>(x[i] - lo[i]);
    return off;
  }
  State decode(std::size_t off) const {
    State x(len.size());
    for (std::size_t i = len.size(); i-- > 0;) {
      x[i] = lo[i] + static_cast<int>(off % len[i]);
      off /= len[i];
    }
    return x;
  }
};

inline State step_once(const Fds& f, const State& x) {
  const Radix r(f.domain());
  const auto off = r.encode(x);
  State y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = f.table(i)[off];
  return y;
}

inline std::vector<State> all_states(const IntervalProduct& x) {
  const Radix r(x);
  std::vector<State> out;
  for (std::size_t off = 0; off < r.size(); ++off) out.push_back(r.decode(off));
  return out;
}

inline SignedDigraph naive_interaction_graph(const Fds& f) {
  const std::size_t n = f.dimension();
  SignedDigraph g(n);
  for (const auto& x : all_states(f.domain()))
    for (std::size_t j = 0; j < n; ++j) {
      if (x[j] == f.domain()[j].max) continue;
      State y = x;
      ++y[j];
      const auto fx = step_once(f, x), fy = step_once(f, y);
      for (std::size_t i = 0; i < n; ++i) {
        if (fy[i] > fx[i]) g.insert_arc({j, i, Sign::Positive});
        if (fy[i] < fx[i]) g.insert_arc({j, i, Sign::Negative});
      }
    }
  return g;
}

inline bool naive_degree_bounded(const Fds& f, const SignedDigraph& g) {
  for (Vertex i = 0; i < f.dimension(); ++i) {
    const auto size = f.domain()[i].size();
    const auto out = g.out_degree(i), in = g.in_degree(i);
    if (out == 0 && in > 0 ? size != 2 : size > out + 1) return false;
  }
  return true;
}

// Least k >= 1 with f^k constant, by pointwise iteration of every state.
inline std::optional<std::size_t> pointwise_nilpotency_index(const Fds& f) {
  auto states = all_states(f.domain());
  const std::size_t bound = states.size() + 1;
  for (std::size_t k = 1; k <= bound; ++k) {
    for (auto& x : states) x = step_once(f, x);
    if (std::all_of(states.begin(), states.end(), [&](const State& s) { return s == states.front(); })) return k;
  }
  return std::nullopt;
}

inline bool pointwise_constant_after(const Fds& f, std::size_t k, State* value = nullptr) {
  auto states = all_states(f.domain());
  for (auto& x : states)
    for (std::size_t t = 0; t < k; ++t) x = step_once(f, x);
  const bool constant =
      std::all_of(states.begin(), states.end(), [&](const State& s) { return s == states.front(); });
  if (constant && value) *value = states.front();
  return constant;
}

inline std::vector<State> naive_fixed_points(const Fds& f) {
  std::vector<State> out;
  for (const auto& x : all_states(f.domain()))
    if (step_once(f, x) == x) out.push_back(x);
  return out;
}

// f^k(X) ⊆ h(Y) ⊆ Y ⊆ X and f = h on Y, straight from the definition.
inline bool naive_converges(const Fds& f, const Fds& h, std::size_t k) {
  const auto& X = f.domain();
  const auto& Y = h.domain();
  for (std::size_t i = 0; i < X.dimension(); ++i)
    if (Y[i].min < X[i].min || Y[i].max > X[i].max) return false;
  std::set<State> hy;
  for (const auto& y : all_states(Y)) {
    const auto v = step_once(h, y);
    if (v != step_once(f, y)) return false;
    hy.insert(v);
  }
  for (const auto& v : hy)
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!Y[i].contains(v[i])) return false;
  for (auto x : all_states(X)) {
    for (std::size_t t = 0; t < k; ++t) x = step_once(f, x);
    if (!hy.count(x)) return false;
  }
  return true;
}

// f^k(X) ⊆ h_1(Y) × ... × h_n(Y): every component lands, states may not.
inline bool naive_lands_componentwise(const Fds& f, const Fds& h, std::size_t k) {
  const std::size_t n = f.dimension();
  std::vector<std::set<int>> values(n);
  for (const auto& y : all_states(h.domain())) {
    const auto v = step_once(h, y);
    for (std::size_t i = 0; i < n; ++i) values[i].insert(v[i]);
  }
  for (auto x : all_states(f.domain())) {
    for (std::size_t t = 0; t < k; ++t) x = step_once(f, x);
    for (std::size_t i = 0; i < n; ++i)
      if (!values[i].count(x[i])) return false;
  }
  return true;
}

// h(Y) equals the product of its projections.
inline bool image_is_product(const Fds& h) {
  std::set<State> image;
  std::vector<std::set<int>> values(h.dimension());
  for (const auto& y : all_states(h.domain())) {
    const auto v = step_once(h, y);
    image.insert(v);
    for (std::size_t i = 0; i < v.size(); ++i) values[i].insert(v[i]);
  }
  std::size_t product = 1;
  for (const auto& vs : values) product *= vs.size();
  return product == image.size();
}

}  // namespace sdg::test
