#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sdg {

using Vertex = std::size_t;

enum class Sign : std::uint8_t { Positive = 0, Negative = 1 };

constexpr std::uint8_t sign_bit(Sign s) { return s == Sign::Positive ? 1u : 2u; }
constexpr Sign operator*(Sign a, Sign b) { return a == b ? Sign::Positive : Sign::Negative; }
constexpr char sign_char(Sign s) { return s == Sign::Positive ? '+' : '-'; }

// Ordered by (source, target, sign) with + before -.
struct Arc {
  Vertex source = 0;
  Vertex target = 0;
  Sign sign = Sign::Positive;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Signed digraph G = (V, E) with E ⊆ V × V × {+,-}. A positive and a negative arc
// on the same ordered pair (parallel arcs) are two separate records.
//
// Vertices carry opaque string names and dense indices in insertion order; every
// deterministic tie-break in the library uses the index order.
class SignedDigraph {
 public:
  SignedDigraph() = default;
  // Vertices named "1", ..., "n".
  explicit SignedDigraph(std::size_t n);
  explicit SignedDigraph(std::vector<std::string> names);
  SignedDigraph(std::vector<std::string> names, std::span<const Arc> arcs);

  Vertex add_vertex(std::string name);
  // Throws PreconditionError on an unknown endpoint or a duplicate arc.
  void add_arc(Vertex source, Vertex target, Sign sign);
  void add_arc(const Arc& a) { add_arc(a.source, a.target, a.sign); }
  // Returns false if already present.
  bool insert_arc(const Arc& a);
  void remove_arc(const Arc& a);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t arc_count() const noexcept { return arc_count_; }
  bool empty() const noexcept { return names_.empty(); }

  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Vertex> find(std::string_view name) const;
  // Throws PreconditionError for an unknown name.
  Vertex index_of(std::string_view name) const;

  // Bit 0: positive arc, bit 1: negative arc.
  std::uint8_t sign_mask(Vertex source, Vertex target) const {
    return masks_[source * names_.size() + target];
  }
  bool has_arc(Vertex source, Vertex target, Sign s) const {
    return (sign_mask(source, target) & sign_bit(s)) != 0;
  }
  bool has_arc(const Arc& a) const { return has_arc(a.source, a.target, a.sign); }
  bool adjacent(Vertex source, Vertex target) const { return sign_mask(source, target) != 0; }
  bool parallel(Vertex source, Vertex target) const { return sign_mask(source, target) == 3; }

  // All arcs in (source, target, sign) order.
  std::vector<Arc> arcs() const;

  std::vector<Vertex> positive_in(Vertex i) const;  // G_i^+
  std::vector<Vertex> negative_in(Vertex i) const;  // G_i^-
  std::vector<Vertex> in_neighbors(Vertex i) const;  // G_i
  std::vector<Vertex> out_neighbors(Vertex j) const;

  // Signed degrees: parallel arcs count twice.
  std::size_t in_degree(Vertex i) const;
  std::size_t out_degree(Vertex j) const;

  bool is_source(Vertex v) const { return in_degree(v) == 0; }
  bool is_sink(Vertex v) const { return out_degree(v) == 0; }
  bool is_isolated(Vertex v) const { return is_source(v) && is_sink(v); }

  friend bool operator==(const SignedDigraph& a, const SignedDigraph& b) {
    return a.names_ == b.names_ && a.masks_ == b.masks_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::uint8_t> masks_;  // row-major, [source * n + target]
  std::size_t arc_count_ = 0;
};

// Same vertex count and the same arcs by index; names are ignored.
bool same_arcs(const SignedDigraph& a, const SignedDigraph& b);

// Arcs of `a` missing from `b` (by index).
std::vector<Arc> arc_difference(const SignedDigraph& a, const SignedDigraph& b);

std::string describe(const SignedDigraph& g, const Arc& a);

}  // namespace sdg
