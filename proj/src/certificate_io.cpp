#include "sdg/certificate_io.hpp"

#include <json.hpp>

namespace sdg {

using json = nlohmann::ordered_json;

namespace {

json names_of(const SignedDigraph& g, const std::vector<Vertex>& vs) {
  json out = json::array();
  for (auto v : vs) out.push_back(g.name(v));
  return out;
}

std::string joined(const SignedDigraph& g, const std::vector<Vertex>& vs) {
  std::string s;
  for (auto v : vs) s += (s.empty() ? "" : ",") + g.name(v);
  return s;
}

}  // namespace

std::string format_nilpotency_certificate(const SignedDigraph& g, const NilpotencyCertificate& c) {
  json j;
  j["lambda"] = c.lambda;
  j["beta"] = c.beta;
  j["layers"] = json::array();
  for (const auto& layer : c.layers) j["layers"].push_back(names_of(g, layer));
  j["xi"] = c.target;
  j["representatives"] = json::object();
  for (const auto& [members, rep] : c.representatives) j["representatives"][joined(g, members)] = g.name(rep);
  j["interval_sizes"] = c.interval_sizes;
  j["index"] = c.index;
  return j.dump(2) + "\n";
}

NilpotencyCertificate parse_nilpotency_certificate(const SignedDigraph& g, std::string_view text) {
  try {
    const auto j = json::parse(text);
    NilpotencyCertificate c;
    c.lambda = j.at("lambda").get<std::size_t>();
    c.beta = j.at("beta").get<int>();
    for (const auto& layer : j.at("layers")) {
      std::vector<Vertex> vs;
      for (const auto& name : layer) vs.push_back(g.index_of(name.get<std::string>()));
      c.layers.push_back(std::move(vs));
    }
    c.target = j.at("xi").get<State>();
    std::vector<bool> rep(g.vertex_count(), false);
    for (const auto& [key, value] : j.at("representatives").items()) {
      std::vector<Vertex> members;
      std::size_t start = 0;
      while (start <= key.size()) {
        const auto comma = key.find(',', start);
        const auto end = comma == std::string::npos ? key.size() : comma;
        members.push_back(g.index_of(key.substr(start, end - start)));
        start = end + 1;
      }
      const auto r = g.index_of(value.get<std::string>());
      rep[r] = true;
      c.representatives.emplace_back(std::move(members), r);
    }
    if (j.contains("interval_sizes")) c.interval_sizes = j["interval_sizes"].get<std::vector<std::size_t>>();
    if (j.contains("index")) c.index = j["index"].get<std::size_t>();
    SignedDigraph stripped(g.names());
    for (const auto& a : g.arcs())
      if (!rep[a.target]) stripped.add_arc(a);
    c.stripped = std::move(stripped);
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate json: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("certificate json: ") + e.what());
  }
}

std::string format_convergence_certificate(const SignedDigraph& g, const ConvergingSystem& c) {
  json j;
  j["route"] = to_string(c.plan.route);
  j["isolated"] = names_of(g, c.plan.isolated);
  j["property_p"] = c.plan.property_p;
  if (c.plan.route == ConvergenceRoute::Split) {
    j["i_tilde"] = names_of(g, c.plan.i_tilde);
    j["j"] = names_of(g, c.plan.j_set);
    j["xi"] = c.plan.anchor;
  }
  j["steps"] = c.witness.steps;
  j["lemma_steps"] = json::array();
  for (auto s : c.plan.cases) j["lemma_steps"].push_back(to_string(s));
  j["checks"] = {{"fk_image_in_h_image", c.witness.fk_image_in_h_image},
                 {"h_image_in_y", c.witness.h_image_in_y},
                 {"y_in_x", c.witness.y_in_x},
                 {"agrees_on_y", c.witness.agrees_on_y}};
  return j.dump(2) + "\n";
}

}  // namespace sdg
