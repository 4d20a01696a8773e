#include "sdg/fds_io.hpp"

#include <json.hpp>

#include "sdg/graph_io.hpp"

namespace sdg {

using json = nlohmann::ordered_json;

std::string format_fds_json(const Fds& f) {
  json j;
  j["version"] = "fds.v1";
  j["intervals"] = json::array();
  for (const auto& iv : f.domain().intervals()) j["intervals"].push_back({iv.min, iv.max});
  j["tables"] = f.tables();
  return j.dump() + "\n";
}

Fds parse_fds_json(std::string_view text, std::size_t state_cap) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("fds json: ") + e.what());
  }
  try {
    if (!j.is_object() || j.value("version", "") != "fds.v1") throw ParseError("fds json: missing or unknown version tag");
    std::vector<Interval> intervals;
    for (const auto& iv : j.at("intervals")) {
      if (!iv.is_array() || iv.size() != 2) throw ParseError("fds json: interval must be [min,max]");
      intervals.push_back({iv[0].get<int>(), iv[1].get<int>()});
      if (intervals.back().min > intervals.back().max) throw ParseError("fds json: interval with min > max");
    }
    auto tables = j.at("tables").get<std::vector<std::vector<int>>>();
    try {
      return Fds(IntervalProduct(std::move(intervals)), std::move(tables), state_cap);
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("fds json: ") + e.what());
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("fds json: ") + e.what());
  }
}

Fds read_fds_file(const std::filesystem::path& path, std::size_t state_cap) {
  return parse_fds_json(read_text_file(path), state_cap);
}

void write_fds_file(const std::filesystem::path& path, const Fds& f) { write_text_file(path, format_fds_json(f)); }

}  // namespace sdg
