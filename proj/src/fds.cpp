#include "sdg/fds.hpp"

#include <algorithm>

namespace sdg {

void Fds::check_cap(const IntervalProduct& domain, std::size_t state_cap) {
  if (domain.size() > state_cap)
    throw CapExceeded("state space of " + std::to_string(domain.size()) + " states exceeds cap of " +
                      std::to_string(state_cap));
}

Fds::Fds(IntervalProduct domain, std::vector<std::vector<int>> tables, std::size_t state_cap)
    : domain_(std::move(domain)), tables_(std::move(tables)) {
  check_cap(domain_, state_cap);
  if (tables_.size() != domain_.dimension())
    throw PreconditionError("expected " + std::to_string(domain_.dimension()) + " tables, got " +
                            std::to_string(tables_.size()));
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    if (tables_[i].size() != domain_.size())
      throw PreconditionError("table " + std::to_string(i + 1) + " has " + std::to_string(tables_[i].size()) +
                              " entries, expected " + std::to_string(domain_.size()));
    for (int v : tables_[i])
      if (!domain_[i].contains(v))
        throw PreconditionError("table " + std::to_string(i + 1) + " leaves its interval (value " +
                                std::to_string(v) + ")");
  }
}

Fds Fds::constant(IntervalProduct domain, const State& value) {
  if (!domain.contains(value)) throw PreconditionError("constant outside the domain");
  std::vector<std::vector<int>> tables;
  for (std::size_t i = 0; i < domain.dimension(); ++i) tables.emplace_back(domain.size(), value[i]);
  return Fds(std::move(domain), std::move(tables));
}

Fds Fds::identity(IntervalProduct domain) {
  return tabulate(std::move(domain), [](std::span<const int> x, std::span<int> y) {
    std::copy(x.begin(), x.end(), y.begin());
  });
}

std::size_t Fds::successor(std::size_t offset) const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < tables_.size(); ++i)
    out += static_cast<std::size_t>(tables_[i][offset] - domain_[i].min) * domain_.stride(i);
  return out;
}

std::vector<std::size_t> Fds::successor_table() const {
  std::vector<std::size_t> next(domain_.size());
  for (std::size_t off = 0; off < next.size(); ++off) next[off] = successor(off);
  return next;
}

State evaluate(const Fds& f, std::span<const int> x) {
  const auto off = f.domain().offset(x);
  State y(f.dimension());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = f.component(i, off);
  return y;
}

State iterate(const Fds& f, std::span<const int> x, std::size_t k) {
  std::size_t off = f.domain().offset(x);
  for (std::size_t step = 0; step < k; ++step) off = f.successor(off);
  return f.domain().state(off);
}

SignedDigraph interaction_graph(const Fds& f) { return interaction_graph(f, SignedDigraph(f.dimension()).names()); }

SignedDigraph interaction_graph(const Fds& f, const std::vector<std::string>& names) {
  const std::size_t n = f.dimension();
  if (names.size() != n) throw PreconditionError("name list does not match the system arity");
  const auto& X = f.domain();
  std::vector<std::uint8_t> mask(n * n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t stride = X.stride(j);
    const int top = X[j].max;
    for (std::size_t off = 0; off < X.size(); ++off) {
      if (X.coordinate(off, j) == top) continue;
      for (std::size_t i = 0; i < n; ++i) {
        auto& m = mask[j * n + i];
        if (m == 3) continue;
        const int d = f.component(i, off + stride) - f.component(i, off);
        if (d > 0) m |= 1u;
        if (d < 0) m |= 2u;
      }
    }
  }
  SignedDigraph g(names);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      if (mask[j * n + i] & 1u) g.add_arc(j, i, Sign::Positive);
      if (mask[j * n + i] & 2u) g.add_arc(j, i, Sign::Negative);
    }
  return g;
}

DegreeBoundReport check_degree_bounded(const Fds& f) { return check_degree_bounded(f, interaction_graph(f)); }

DegreeBoundReport check_degree_bounded(const Fds& f, const SignedDigraph& g) {
  DegreeBoundReport report;
  for (Vertex i = 0; i < f.dimension(); ++i) {
    const std::size_t size = f.domain()[i].size();
    const std::size_t out = g.out_degree(i), in = g.in_degree(i);
    const bool ok = (out == 0 && in > 0) ? size == 2 : size <= out + 1;
    if (!ok) report.violations.push_back(i);
  }
  report.bounded = report.violations.empty();
  return report;
}

namespace {

std::vector<std::size_t> apply_to_set(const std::vector<std::size_t>& next, const std::vector<std::size_t>& set,
                                      std::vector<char>& seen) {
  std::vector<std::size_t> out;
  for (auto off : set) {
    const auto t = next[off];
    if (!seen[t]) {
      seen[t] = 1;
      out.push_back(t);
    }
  }
  for (auto t : out) seen[t] = 0;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::size_t> image_after(const Fds& f, std::size_t k) {
  const std::size_t size = f.domain().size();
  std::vector<std::size_t> set(size);
  for (std::size_t off = 0; off < size; ++off) set[off] = off;
  if (k == 0) return set;
  const auto next = f.successor_table();
  std::vector<char> seen(size, 0);
  for (std::size_t step = 0; step < k; ++step) {
    auto shrunk = apply_to_set(next, set, seen);
    if (shrunk == set) break;  // stable from here on
    set = std::move(shrunk);
  }
  return set;
}

std::optional<std::size_t> nilpotency_index(const Fds& f) {
  const std::size_t size = f.domain().size();
  const auto next = f.successor_table();
  std::vector<char> seen(size, 0);
  std::vector<std::size_t> set(size);
  for (std::size_t off = 0; off < size; ++off) set[off] = off;
  for (std::size_t k = 1;; ++k) {
    auto image = apply_to_set(next, set, seen);
    if (image.size() == 1) return k;
    if (image.size() == set.size()) return std::nullopt;  // f is a bijection on the limit set
    set = std::move(image);
  }
}

std::vector<State> fixed_points(const Fds& f) {
  std::vector<State> out;
  for (std::size_t off = 0; off < f.domain().size(); ++off)
    if (f.successor(off) == off) out.push_back(f.domain().state(off));
  return out;
}

std::string ConvergenceWitness::first_failure() const {
  if (!y_in_x) return "Y ⊆ X";
  if (!h_image_in_y) return "h(Y) ⊆ Y";
  if (!fk_image_in_h_image) return "f^" + std::to_string(steps) + "(X) ⊆ h(Y)";
  if (!agrees_on_y) return "f = h on Y";
  return {};
}

ConvergenceWitness converges_toward(const Fds& f, const Fds& h, std::size_t k) {
  if (f.dimension() != h.dimension())
    throw PreconditionError("arity mismatch: f has " + std::to_string(f.dimension()) + " components, h has " +
                            std::to_string(h.dimension()));
  const auto& X = f.domain();
  const auto& Y = h.domain();
  ConvergenceWitness w;
  w.steps = k;
  w.y_in_x = X.contains(Y);

  for (auto off : image_after(f, k)) w.image_of_fk.push_back(X.state(off));
  for (auto off : image_after(h, 1)) w.image_of_h.push_back(Y.state(off));
  std::sort(w.image_of_h.begin(), w.image_of_h.end());

  w.h_image_in_y = std::all_of(w.image_of_h.begin(), w.image_of_h.end(), [&](const State& s) { return Y.contains(s); });
  w.fk_image_in_h_image = std::all_of(w.image_of_fk.begin(), w.image_of_fk.end(), [&](const State& s) {
    return std::binary_search(w.image_of_h.begin(), w.image_of_h.end(), s);
  });

  w.agrees_on_y = w.y_in_x;
  if (w.y_in_x) {
    State y(Y.dimension());
    for (std::size_t off = 0; off < Y.size() && w.agrees_on_y; ++off) {
      Y.decode(off, y);
      const auto xo = X.offset(y);
      for (std::size_t i = 0; i < y.size(); ++i)
        if (f.component(i, xo) != h.component(i, off)) {
          w.agrees_on_y = false;
          break;
        }
    }
  }
  return w;
}

Fds translate(const Fds& f, std::span<const int> shift) {
  if (shift.size() != f.dimension()) throw PreconditionError("shift arity mismatch");
  std::vector<Interval> iv;
  for (std::size_t i = 0; i < shift.size(); ++i) iv.push_back({f.domain()[i].min + shift[i], f.domain()[i].max + shift[i]});
  std::vector<std::vector<int>> tables = f.tables();
  for (std::size_t i = 0; i < shift.size(); ++i)
    for (auto& v : tables[i]) v += shift[i];
  // Offsets are base-independent, so the tables carry over unchanged.
  return Fds(IntervalProduct(std::move(iv)), std::move(tables));
}

int min_value(const Fds& f, std::size_t i) {
  const auto& t = f.table(i);
  return *std::min_element(t.begin(), t.end());
}

int max_value(const Fds& f, std::size_t i) {
  const auto& t = f.table(i);
  return *std::max_element(t.begin(), t.end());
}

}  // namespace sdg
