#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sdg/fds.hpp"

namespace sdg {

// "fds v1" JSON:
//   {"version":"fds.v1","intervals":[[min,max],...],"tables":[[...],...]}
// tables[i][offset] is f_i at the state with that mixed-radix offset.
std::string format_fds_json(const Fds& f);
// Throws ParseError on malformed JSON, a wrong version tag or a table that does
// not fit its domain.
Fds parse_fds_json(std::string_view text, std::size_t state_cap = Limits{}.state_cap);

Fds read_fds_file(const std::filesystem::path& path, std::size_t state_cap = Limits{}.state_cap);
void write_fds_file(const std::filesystem::path& path, const Fds& f);

}  // namespace sdg
