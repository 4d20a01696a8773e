#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdg/error.hpp"
#include "sdg/interval_product.hpp"
#include "sdg/signed_digraph.hpp"

namespace sdg {

// A finite dynamical system f: X -> X. Each component i keeps a total table
// over the full state offset of X (not projected to its in-neighbours).
class Fds {
 public:
  Fds() = default;
  // Validates totality, X ⊆ range, and the state cap.
  Fds(IntervalProduct domain, std::vector<std::vector<int>> tables, std::size_t state_cap = Limits{}.state_cap);

  // Tabulates `rule(x, out)` over every x ∈ domain; `out` arrives sized n.
  template <class Rule>
  static Fds tabulate(IntervalProduct domain, Rule&& rule, std::size_t state_cap = Limits{}.state_cap) {
    check_cap(domain, state_cap);
    const std::size_t n = domain.dimension(), size = domain.size();
    std::vector<std::vector<int>> tables(n, std::vector<int>(size));
    State x(n), y(n);
    for (std::size_t off = 0; off < size; ++off) {
      domain.decode(off, x);
      rule(std::span<const int>(x), std::span<int>(y));
      for (std::size_t i = 0; i < n; ++i) tables[i][off] = y[i];
    }
    return Fds(std::move(domain), std::move(tables), state_cap);
  }

  static Fds constant(IntervalProduct domain, const State& value);
  static Fds identity(IntervalProduct domain);

  const IntervalProduct& domain() const noexcept { return domain_; }
  std::size_t dimension() const noexcept { return domain_.dimension(); }
  const std::vector<int>& table(std::size_t i) const { return tables_.at(i); }
  const std::vector<std::vector<int>>& tables() const noexcept { return tables_; }

  int component(std::size_t i, std::size_t offset) const { return tables_[i][offset]; }
  // Offset of f(x) given the offset of x.
  std::size_t successor(std::size_t offset) const;
  std::vector<std::size_t> successor_table() const;

  friend bool operator==(const Fds& a, const Fds& b) { return a.domain_ == b.domain_ && a.tables_ == b.tables_; }

 private:
  static void check_cap(const IntervalProduct& domain, std::size_t state_cap);

  IntervalProduct domain_;
  std::vector<std::vector<int>> tables_;
};

// Throws PreconditionError when x is outside the domain.
State evaluate(const Fds& f, std::span<const int> x);
State iterate(const Fds& f, std::span<const int> x, std::size_t k);

// Exact extraction: (j, i, s) for every unit step x -> x + e_j that moves f_i in
// direction s. Vertex names default to "1".."n".
SignedDigraph interaction_graph(const Fds& f);
SignedDigraph interaction_graph(const Fds& f, const std::vector<std::string>& names);

struct DegreeBoundReport {
  bool bounded = true;
  std::vector<Vertex> violations;
};

// Against the interaction graph G of f: |X_i| = 2 for non-isolated sinks,
// |X_i| <= d_out(i) + 1 otherwise.
DegreeBoundReport check_degree_bounded(const Fds& f);
DegreeBoundReport check_degree_bounded(const Fds& f, const SignedDigraph& interaction);
inline bool is_degree_bounded(const Fds& f) { return check_degree_bounded(f).bounded; }

// Sorted offsets of f^k(X).
std::vector<std::size_t> image_after(const Fds& f, std::size_t k);
// Image chain S_1 = f(X), S_{m+1} = f(S_m) until it stops shrinking; least k
// with |S_k| = 1, absent when the limit set has more than one state.
std::optional<std::size_t> nilpotency_index(const Fds& f);

// Exhaustive, sorted by offset.
std::vector<State> fixed_points(const Fds& f);

// f converges toward h in k steps: f^k(X) ⊆ h(Y) ⊆ Y ⊆ X and f = h on Y.
struct ConvergenceWitness {
  std::size_t steps = 0;
  std::vector<State> image_of_fk;
  std::vector<State> image_of_h;
  bool fk_image_in_h_image = false;
  bool h_image_in_y = false;
  bool y_in_x = false;
  bool agrees_on_y = false;

  bool valid() const { return fk_image_in_h_image && h_image_in_y && y_in_x && agrees_on_y; }
  // Human-readable name of the first failing check, empty when valid.
  std::string first_failure() const;
};

// Throws PreconditionError on an arity mismatch.
ConvergenceWitness converges_toward(const Fds& f, const Fds& h, std::size_t k);

// x -> f(x - t) + t on X + t.
Fds translate(const Fds& f, std::span<const int> shift);

// Smallest and largest value taken by f_i over X.
int min_value(const Fds& f, std::size_t i);
int max_value(const Fds& f, std::size_t i);

}  // namespace sdg
