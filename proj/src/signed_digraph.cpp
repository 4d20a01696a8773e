#include "sdg/signed_digraph.hpp"

#include <algorithm>
#include <bit>

#include "sdg/error.hpp"

namespace sdg {

SignedDigraph::SignedDigraph(std::size_t n) {
  for (std::size_t v = 0; v < n; ++v) add_vertex(std::to_string(v + 1));
}

SignedDigraph::SignedDigraph(std::vector<std::string> names) {
  for (auto& name : names) add_vertex(std::move(name));
}

SignedDigraph::SignedDigraph(std::vector<std::string> names, std::span<const Arc> arcs)
    : SignedDigraph(std::move(names)) {
  for (const auto& a : arcs) add_arc(a);
}

Vertex SignedDigraph::add_vertex(std::string name) {
  if (index_.contains(name)) throw PreconditionError("duplicate vertex '" + name + "'");
  const std::size_t n = names_.size();
  std::vector<std::uint8_t> grown((n + 1) * (n + 1), 0);
  for (std::size_t r = 0; r < n; ++r)
    std::copy_n(masks_.begin() + static_cast<std::ptrdiff_t>(r * n), n,
                grown.begin() + static_cast<std::ptrdiff_t>(r * (n + 1)));
  masks_ = std::move(grown);
  index_.emplace(name, n);
  names_.push_back(std::move(name));
  return n;
}

void SignedDigraph::check_vertex(Vertex v) const {
  if (v >= names_.size()) throw PreconditionError("unknown vertex index " + std::to_string(v));
}

void SignedDigraph::add_arc(Vertex source, Vertex target, Sign sign) {
  if (!insert_arc({source, target, sign}))
    throw PreconditionError("duplicate arc " + describe(*this, {source, target, sign}));
}

bool SignedDigraph::insert_arc(const Arc& a) {
  check_vertex(a.source);
  check_vertex(a.target);
  auto& m = masks_[a.source * names_.size() + a.target];
  if (m & sign_bit(a.sign)) return false;
  m |= sign_bit(a.sign);
  ++arc_count_;
  return true;
}

void SignedDigraph::remove_arc(const Arc& a) {
  check_vertex(a.source);
  check_vertex(a.target);
  auto& m = masks_[a.source * names_.size() + a.target];
  if (m & sign_bit(a.sign)) {
    m &= static_cast<std::uint8_t>(~sign_bit(a.sign));
    --arc_count_;
  }
}

std::optional<Vertex> SignedDigraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex SignedDigraph::index_of(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw PreconditionError("unknown vertex '" + std::string(name) + "'");
}

std::vector<Arc> SignedDigraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  const std::size_t n = names_.size();
  for (Vertex j = 0; j < n; ++j)
    for (Vertex i = 0; i < n; ++i) {
      const auto m = sign_mask(j, i);
      if (m & 1u) out.push_back({j, i, Sign::Positive});
      if (m & 2u) out.push_back({j, i, Sign::Negative});
    }
  return out;
}

std::vector<Vertex> SignedDigraph::positive_in(Vertex i) const {
  std::vector<Vertex> out;
  for (Vertex j = 0; j < names_.size(); ++j)
    if (sign_mask(j, i) & 1u) out.push_back(j);
  return out;
}

std::vector<Vertex> SignedDigraph::negative_in(Vertex i) const {
  std::vector<Vertex> out;
  for (Vertex j = 0; j < names_.size(); ++j)
    if (sign_mask(j, i) & 2u) out.push_back(j);
  return out;
}

std::vector<Vertex> SignedDigraph::in_neighbors(Vertex i) const {
  std::vector<Vertex> out;
  for (Vertex j = 0; j < names_.size(); ++j)
    if (sign_mask(j, i)) out.push_back(j);
  return out;
}

std::vector<Vertex> SignedDigraph::out_neighbors(Vertex j) const {
  std::vector<Vertex> out;
  for (Vertex i = 0; i < names_.size(); ++i)
    if (sign_mask(j, i)) out.push_back(i);
  return out;
}

std::size_t SignedDigraph::in_degree(Vertex i) const {
  std::size_t d = 0;
  for (Vertex j = 0; j < names_.size(); ++j) d += static_cast<std::size_t>(std::popcount(sign_mask(j, i)));
  return d;
}

std::size_t SignedDigraph::out_degree(Vertex j) const {
  std::size_t d = 0;
  for (Vertex i = 0; i < names_.size(); ++i) d += static_cast<std::size_t>(std::popcount(sign_mask(j, i)));
  return d;
}

bool same_arcs(const SignedDigraph& a, const SignedDigraph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  const std::size_t n = a.vertex_count();
  for (Vertex j = 0; j < n; ++j)
    for (Vertex i = 0; i < n; ++i)
      if (a.sign_mask(j, i) != b.sign_mask(j, i)) return false;
  return true;
}

std::vector<Arc> arc_difference(const SignedDigraph& a, const SignedDigraph& b) {
  std::vector<Arc> out;
  for (const auto& arc : a.arcs()) {
    const bool in_b = arc.source < b.vertex_count() && arc.target < b.vertex_count() && b.has_arc(arc);
    if (!in_b) out.push_back(arc);
  }
  return out;
}

std::string describe(const SignedDigraph& g, const Arc& a) {
  auto label = [&](Vertex v) { return v < g.vertex_count() ? g.name(v) : "#" + std::to_string(v); };
  return "(" + label(a.source) + "," + label(a.target) + "," + sign_char(a.sign) + ")";
}

}  // namespace sdg
