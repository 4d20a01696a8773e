#include "sdg/cycles.hpp"

#include <algorithm>

#include "sdg/analysis.hpp"

namespace sdg {

std::vector<Arc> SignedCycle::arcs() const {
  std::vector<Arc> out;
  for (std::size_t t = 0; t < vertices.size(); ++t)
    out.push_back({vertices[t], vertices[(t + 1) % vertices.size()], signs[t]});
  return out;
}

namespace {

class CycleWalker {
 public:
  CycleWalker(const SignedDigraph& g, std::optional<std::size_t> max_length, std::size_t cap)
      : g_(g), succ_(underlying_digraph(g).successors), max_length_(max_length), cap_(cap) {}

  std::vector<SignedCycle> run() {
    on_path_.assign(g_.vertex_count(), false);
    for (Vertex s = 0; s < g_.vertex_count(); ++s) {
      start_ = s;
      path_ = {s};
      on_path_[s] = true;
      walk(s);
      on_path_[s] = false;
    }
    return std::move(out_);
  }

 private:
  void walk(Vertex v) {
    for (Vertex w : succ_[v]) {
      if (w == start_) {
        emit();
      } else if (w > start_ && !on_path_[w]) {
        if (max_length_ && path_.size() + 1 > *max_length_) continue;
        path_.push_back(w);
        on_path_[w] = true;
        walk(w);
        on_path_[w] = false;
        path_.pop_back();
      }
    }
  }

  void emit() {
    const std::size_t len = path_.size();
    if (max_length_ && len > *max_length_) return;
    std::vector<std::vector<Sign>> choices(len);
    for (std::size_t t = 0; t < len; ++t) {
      const auto m = g_.sign_mask(path_[t], path_[(t + 1) % len]);
      if (m & 1u) choices[t].push_back(Sign::Positive);
      if (m & 2u) choices[t].push_back(Sign::Negative);
    }
    std::vector<std::size_t> pick(len, 0);
    while (true) {
      SignedCycle c;
      c.vertices = path_;
      c.sign = Sign::Positive;
      for (std::size_t t = 0; t < len; ++t) {
        c.signs.push_back(choices[t][pick[t]]);
        c.sign = c.sign * c.signs.back();
      }
      if (out_.size() >= cap_) throw CapExceeded("cycle enumeration exceeded cap of " + std::to_string(cap_));
      out_.push_back(std::move(c));
      // Odometer, last step fastest.
      bool advanced = false;
      for (std::size_t t = len; t-- > 0;) {
        if (++pick[t] < choices[t].size()) {
          advanced = true;
          break;
        }
        pick[t] = 0;
      }
      if (!advanced) return;
    }
  }

  const SignedDigraph& g_;
  std::vector<std::vector<Vertex>> succ_;
  std::optional<std::size_t> max_length_;
  std::size_t cap_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
  std::vector<bool> on_path_;
  std::vector<SignedCycle> out_;
};

bool search_disjoint(const std::vector<SignedCycle>& pool, std::size_t from, std::size_t k,
                     std::vector<bool>& used, std::vector<SignedCycle>& chosen) {
  if (chosen.size() == k) return true;
  for (std::size_t c = from; c < pool.size(); ++c) {
    const auto& cyc = pool[c];
    if (std::any_of(cyc.vertices.begin(), cyc.vertices.end(), [&](Vertex v) { return used[v]; })) continue;
    for (Vertex v : cyc.vertices) used[v] = true;
    chosen.push_back(cyc);
    if (search_disjoint(pool, c + 1, k, used, chosen)) return true;
    chosen.pop_back();
    for (Vertex v : cyc.vertices) used[v] = false;
  }
  return false;
}

}  // namespace

std::vector<SignedCycle> enumerate_cycles(const SignedDigraph& g, std::optional<std::size_t> max_length,
                                          std::size_t cap) {
  return CycleWalker(g, max_length, cap).run();
}

std::optional<std::vector<SignedCycle>> find_disjoint_positive_cycles(const SignedDigraph& g, std::size_t k,
                                                                      std::size_t cap) {
  if (k == 0) throw PreconditionError("k must be positive");
  std::vector<SignedCycle> pool;
  for (auto& c : enumerate_cycles(g, std::nullopt, cap)) {
    if (c.sign != Sign::Positive) continue;
    // One positive sign pattern per vertex sequence is enough for disjointness.
    if (!pool.empty() && pool.back().vertices == c.vertices) continue;
    pool.push_back(std::move(c));
  }
  std::vector<bool> used(g.vertex_count(), false);
  std::vector<SignedCycle> chosen;
  if (search_disjoint(pool, 0, k, used, chosen)) return chosen;
  return std::nullopt;
}

std::optional<SignedCycle> find_cycle_of_sign(const SignedDigraph& g, Sign s, std::size_t cap) {
  for (auto& c : enumerate_cycles(g, std::nullopt, cap))
    if (c.sign == s) return c;
  return std::nullopt;
}

bool is_acyclic(const SignedDigraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.adjacent(v, v)) return false;
  for (const auto& c : strong_components(g))
    if (c.size() > 1) return false;
  return true;
}

SignedDigraph cycles_subgraph(const SignedDigraph& g, const std::vector<SignedCycle>& cycles) {
  SignedDigraph out(g.names());
  for (const auto& c : cycles)
    for (const auto& a : c.arcs()) {
      if (!g.has_arc(a)) throw PreconditionError("cycle arc " + describe(g, a) + " not in graph");
      out.insert_arc(a);
    }
  return out;
}

}  // namespace sdg
