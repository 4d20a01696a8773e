#include "sdg/enumerate.hpp"

#include <algorithm>
#include <map>

#include "sdg/analysis.hpp"

namespace sdg {

namespace {

// f_v restricted to its in-neighbours: a table over Π X_j (j ∈ G_v), first
// in-neighbour most significant.
struct LocalSpec {
  Vertex v = 0;
  int range = 1;
  std::vector<Vertex> nb;
  std::vector<std::uint8_t> allowed;  // sign mask of the arc nb[t] -> v
  std::vector<std::size_t> nb_sizes;
  std::vector<std::size_t> strides;
  std::size_t cells = 1;
};

LocalSpec make_spec(const SignedDigraph& g, Vertex v, std::span<const std::size_t> sizes) {
  LocalSpec s;
  s.v = v;
  s.range = static_cast<int>(sizes[v]);
  s.nb = g.in_neighbors(v);
  for (auto j : s.nb) {
    s.allowed.push_back(g.sign_mask(j, v));
    s.nb_sizes.push_back(sizes[j]);
  }
  s.strides.assign(s.nb.size(), 1);
  for (std::size_t t = s.nb.size(); t-- > 0;) {
    s.strides[t] = s.cells;
    s.cells *= s.nb_sizes[t];
  }
  return s;
}

std::size_t local_cell(const LocalSpec& s, std::span<const int> x) {
  std::size_t cell = 0;
  for (std::size_t t = 0; t < s.nb.size(); ++t) cell += static_cast<std::size_t>(x[s.nb[t]]) * s.strides[t];
  return cell;
}

// Depth-first over the cells of one local table with sign pruning. `same`, when
// given, marks cells that must all carry one common value.
class LocalEnumerator {
 public:
  using Visit = std::function<bool(const std::vector<int>&)>;

  LocalEnumerator(const LocalSpec& spec, const std::vector<char>* same, std::size_t& budget)
      : s_(spec), same_(same), budget_(budget), table_(spec.cells, 0), pos_(spec.nb.size(), 0), neg_(spec.nb.size(), 0) {
    if (same_)
      for (std::size_t c = 0; c < s_.cells; ++c)
        if ((*same_)[c]) {
          first_same_ = c;
          break;
        }
  }

  // Returns true when `visit` asked to stop.
  bool run(const Visit& visit) { return fill(0, visit); }

 private:
  bool fill(std::size_t cell, const Visit& visit) {
    if (cell == s_.cells) {
      for (std::size_t t = 0; t < s_.nb.size(); ++t) {
        if ((s_.allowed[t] & 1u) && pos_[t] == 0) return false;
        if ((s_.allowed[t] & 2u) && neg_[t] == 0) return false;
      }
      if (budget_ == 0) throw CapExceeded("local function search exceeded the candidate cap");
      --budget_;
      return !visit(table_);
    }
    int lo = 0, hi = s_.range - 1;
    if (same_ && (*same_)[cell] && cell != first_same_) lo = hi = table_[first_same_];
    for (int value = lo; value <= hi; ++value) {
      table_[cell] = value;
      bool ok = true;
      std::size_t t = 0;
      for (; t < s_.nb.size(); ++t) {
        if ((cell / s_.strides[t]) % s_.nb_sizes[t] == 0) continue;
        const int d = value - table_[cell - s_.strides[t]];
        if ((d > 0 && !(s_.allowed[t] & 1u)) || (d < 0 && !(s_.allowed[t] & 2u))) {
          ok = false;
          break;
        }
        if (d > 0) ++pos_[t];
        if (d < 0) ++neg_[t];
      }
      const bool stop = ok && fill(cell + 1, visit);
      // Undo the counters touched before the break (or all of them).
      for (std::size_t u = 0; u < t; ++u) {
        if ((cell / s_.strides[u]) % s_.nb_sizes[u] == 0) continue;
        const int d = value - table_[cell - s_.strides[u]];
        if (d > 0) --pos_[u];
        if (d < 0) --neg_[u];
      }
      if (stop) return true;
    }
    return false;
  }

  const LocalSpec& s_;
  const std::vector<char>* same_;
  std::size_t& budget_;
  std::size_t first_same_ = 0;
  std::vector<int> table_;
  std::vector<std::size_t> pos_, neg_;
};

Fds assemble(const std::vector<LocalSpec>& specs, std::span<const std::size_t> sizes,
             const std::vector<const std::vector<int>*>& locals) {
  return Fds::tabulate(IntervalProduct::from_sizes(sizes), [&](std::span<const int> x, std::span<int> y) {
    for (std::size_t v = 0; v < specs.size(); ++v) y[v] = (*locals[v])[local_cell(specs[v], x)];
  });
}

// Advances an odometer over `options`; false once it wraps around.
bool advance(std::vector<std::size_t>& pick, const std::vector<std::size_t>& radix) {
  for (std::size_t t = pick.size(); t-- > 0;) {
    if (++pick[t] < radix[t]) return true;
    pick[t] = 0;
  }
  return false;
}

std::vector<std::size_t> current_sizes(const std::vector<std::vector<std::size_t>>& options,
                                       const std::vector<std::size_t>& pick) {
  std::vector<std::size_t> sizes(options.size());
  for (std::size_t v = 0; v < sizes.size(); ++v) sizes[v] = options[v][pick[v]];
  return sizes;
}

}  // namespace

std::vector<std::vector<std::size_t>> admissible_sizes(const SignedDigraph& g) {
  std::vector<std::vector<std::size_t>> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_isolated(v)) {
      out[v] = {1};
    } else if (g.is_sink(v)) {
      out[v] = {2};
    } else {
      std::size_t lo = 2;
      for (auto w : g.out_neighbors(v))
        if (g.parallel(v, w)) lo = 3;
      for (std::size_t s = lo; s <= g.out_degree(v) + 1; ++s) out[v].push_back(s);
    }
  }
  return out;
}

std::size_t for_each_degree_bounded_system(const SignedDigraph& g, const std::function<bool(const Fds&)>& visit,
                                           const Limits& limits) {
  const std::size_t n = g.vertex_count();
  const auto options = admissible_sizes(g);
  std::vector<std::size_t> radix(n);
  for (std::size_t v = 0; v < n; ++v) radix[v] = options[v].size();

  // Local tables depend only on |X_v| and the sizes of G_v; cache on that key.
  std::vector<std::map<std::vector<std::size_t>, std::vector<std::vector<int>>>> cache(n);
  std::size_t budget = limits.candidate_cap;
  auto locals_for = [&](Vertex v, const std::vector<std::size_t>& sizes) -> const std::vector<std::vector<int>>& {
    std::vector<std::size_t> key{sizes[v]};
    for (auto j : g.in_neighbors(v)) key.push_back(sizes[j]);
    auto it = cache[v].find(key);
    if (it != cache[v].end()) return it->second;
    const auto spec = make_spec(g, v, sizes);
    std::vector<std::vector<int>> list;
    LocalEnumerator(spec, nullptr, budget).run([&](const std::vector<int>& t) {
      list.push_back(t);
      return true;
    });
    return cache[v].emplace(std::move(key), std::move(list)).first->second;
  };

  // Pass 1: size the search space.
  std::size_t total = 0;
  std::vector<std::size_t> pick(n, 0);
  do {
    const auto sizes = current_sizes(options, pick);
    std::size_t count = 1;
    for (Vertex v = 0; v < n && count > 0; ++v) {
      const auto m = locals_for(v, sizes).size();
      if (m != 0 && count > limits.candidate_cap / m + 1) throw CapExceeded("degree-bounded system enumeration exceeds the candidate cap");
      count *= m;
    }
    total += count;
    if (total > limits.candidate_cap)
      throw CapExceeded("degree-bounded system enumeration needs " + std::to_string(total) +
                        "+ candidates, cap is " + std::to_string(limits.candidate_cap));
  } while (advance(pick, radix));

  // Pass 2: visit.
  std::size_t visited = 0;
  std::fill(pick.begin(), pick.end(), 0);
  do {
    const auto sizes = current_sizes(options, pick);
    std::vector<const std::vector<std::vector<int>>*> lists(n);
    std::vector<std::size_t> lradix(n);
    bool empty = false;
    for (Vertex v = 0; v < n; ++v) {
      lists[v] = &locals_for(v, sizes);
      lradix[v] = lists[v]->size();
      empty = empty || lradix[v] == 0;
    }
    if (empty) continue;
    std::vector<LocalSpec> specs;
    for (Vertex v = 0; v < n; ++v) specs.push_back(make_spec(g, v, sizes));
    std::vector<std::size_t> choice(n, 0);
    std::vector<const std::vector<int>*> locals(n);
    do {
      for (Vertex v = 0; v < n; ++v) locals[v] = &(*lists[v])[choice[v]];
      ++visited;
      if (!visit(assemble(specs, sizes, locals))) return visited;
    } while (advance(choice, lradix));
  } while (advance(pick, radix));
  return visited;
}

std::vector<Fds> enumerate_degree_bounded_systems(const SignedDigraph& g, const Limits& limits) {
  std::vector<Fds> out;
  for_each_degree_bounded_system(g, [&](const Fds& f) {
    out.push_back(f);
    return true;
  }, limits);
  return out;
}

namespace {

class NilpotentSearch {
 public:
  NilpotentSearch(const SignedDigraph& g, std::size_t m, std::size_t budget) : g_(g), m_(m), budget_(budget) {
    for (const auto& comp : strong_components_topological(g)) {
      const bool trivial = comp.size() == 1 && !g.adjacent(comp[0], comp[0]);
      for (std::size_t t = 0; t < comp.size(); ++t) {
        order_.push_back(comp[t]);
        trivial_.push_back(trivial);
        closes_scc_.push_back(t + 1 == comp.size());
      }
    }
  }

  std::optional<Fds> run(const std::vector<std::size_t>& sizes) {
    sizes_ = sizes;
    specs_.clear();
    for (Vertex v = 0; v < g_.vertex_count(); ++v) specs_.push_back(make_spec(g_, v, sizes_));
    tables_.assign(g_.vertex_count(), {});
    found_.reset();
    place(0);
    return found_;
  }

 private:
  // System on order_[0..k), which is closed under in-neighbours.
  Fds prefix(std::size_t k) const {
    std::vector<std::size_t> sz(k);
    for (std::size_t p = 0; p < k; ++p) sz[p] = sizes_[order_[p]];
    std::vector<int> full(g_.vertex_count(), 0);
    return Fds::tabulate(IntervalProduct::from_sizes(sz), [&](std::span<const int> x, std::span<int> y) {
      for (std::size_t p = 0; p < k; ++p) full[order_[p]] = x[p];
      for (std::size_t p = 0; p < k; ++p) y[p] = tables_[order_[p]][local_cell(specs_[order_[p]], full)];
    });
  }

  void place(std::size_t p) {
    if (p == order_.size()) {
      std::vector<const std::vector<int>*> locals;
      for (const auto& t : tables_) locals.push_back(&t);
      auto f = assemble(specs_, sizes_, locals);
      if (image_after(f, m_).size() != 1) throw InvariantViolation("pruned search accepted a non-nilpotent system");
      found_ = std::move(f);
      return;
    }
    const Vertex v = order_[p];
    const auto& spec = specs_[v];
    std::vector<char> same;
    if (trivial_[p]) {
      // f^m_v = f_v ∘ f^{m-1}: f_v must be constant on the projection of f^{m-1}(X_P).
      same.assign(spec.cells, 0);
      const auto fp = prefix(p);
      std::vector<int> full(g_.vertex_count(), 0);
      for (auto off : image_after(fp, m_ - 1)) {
        for (std::size_t q = 0; q < p; ++q) full[order_[q]] = fp.domain().coordinate(off, q);
        same[local_cell(spec, full)] = 1;
      }
    }
    LocalEnumerator(spec, trivial_[p] ? &same : nullptr, budget_).run([&](const std::vector<int>& t) {
      tables_[v] = t;
      if (closes_scc_[p] && !trivial_[p] && image_after(prefix(p + 1), m_).size() != 1) return true;
      place(p + 1);
      return !found_.has_value();
    });
  }

  const SignedDigraph& g_;
  std::size_t m_;
  std::size_t budget_;
  std::vector<Vertex> order_;
  std::vector<bool> trivial_, closes_scc_;
  std::vector<std::size_t> sizes_;
  std::vector<LocalSpec> specs_;
  std::vector<std::vector<int>> tables_;
  std::optional<Fds> found_;
};

}  // namespace

std::optional<Fds> find_system_nilpotent_within(const SignedDigraph& g, std::size_t m, const Limits& limits) {
  if (m == 0) {
    // f^0 is the identity, constant only on a one-point domain.
    if (g.arc_count() != 0) return std::nullopt;
    return Fds::constant(IntervalProduct::from_sizes(std::vector<std::size_t>(g.vertex_count(), 1)),
                         State(g.vertex_count(), 0));
  }
  const auto options = admissible_sizes(g);
  std::vector<std::size_t> radix;
  for (const auto& o : options) radix.push_back(o.size());
  NilpotentSearch search(g, m, limits.candidate_cap);
  std::vector<std::size_t> pick(g.vertex_count(), 0);
  do {
    if (auto f = search.run(current_sizes(options, pick))) return f;
  } while (advance(pick, radix));
  return std::nullopt;
}

std::optional<Fds> random_system_on(const SignedDigraph& g, std::span<const std::size_t> sizes, std::mt19937_64& rng) {
  const std::size_t n = g.vertex_count();
  if (sizes.size() != n) throw PreconditionError("size list does not match the vertex count");
  std::vector<LocalSpec> specs;
  for (Vertex v = 0; v < n; ++v) specs.push_back(make_spec(g, v, sizes));
  for (const auto& s : specs) {
    if (!s.nb.empty() && s.range < 2) return std::nullopt;
    for (std::size_t t = 0; t < s.nb.size(); ++t)
      if (s.nb_sizes[t] < (s.allowed[t] == 3 ? 3u : 2u)) return std::nullopt;
  }

  auto mismatch = [](const LocalSpec& s, const std::vector<int>& table) {
    int bad = 0;
    for (std::size_t t = 0; t < s.nb.size(); ++t) {
      bool up = false, down = false;
      for (std::size_t c = 0; c < s.cells; ++c) {
        if ((c / s.strides[t]) % s.nb_sizes[t] + 1 == s.nb_sizes[t]) continue;
        const int d = table[c + s.strides[t]] - table[c];
        up = up || d > 0;
        down = down || d < 0;
      }
      bad += (up != bool(s.allowed[t] & 1u)) + (down != bool(s.allowed[t] & 2u));
    }
    return bad;
  };

  std::vector<std::vector<int>> tables(n);
  for (const auto& s : specs) {
    std::uniform_int_distribution<int> value(0, s.range - 1);
    std::uniform_int_distribution<std::size_t> cell(0, s.cells - 1);
    bool solved = false;
    for (int restart = 0; restart < 64 && !solved; ++restart) {
      auto& table = tables[s.v];
      table.assign(s.cells, 0);
      for (auto& x : table) x = value(rng);
      int score = mismatch(s, table);
      for (int step = 0; step < 400 && score > 0; ++step) {
        const auto c = cell(rng);
        const int old = table[c];
        table[c] = value(rng);
        const int next = mismatch(s, table);
        if (next <= score)
          score = next;
        else
          table[c] = old;
      }
      solved = score == 0;
    }
    if (!solved) return std::nullopt;
  }
  std::vector<const std::vector<int>*> locals;
  for (const auto& t : tables) locals.push_back(&t);
  return assemble(specs, sizes, locals);
}

std::optional<Fds> random_degree_bounded_system(const SignedDigraph& g, std::mt19937_64& rng) {
  const auto options = admissible_sizes(g);
  std::vector<std::size_t> sizes;
  for (const auto& o : options) sizes.push_back(o[std::uniform_int_distribution<std::size_t>(0, o.size() - 1)(rng)]);
  return random_system_on(g, sizes, rng);
}

}  // namespace sdg
