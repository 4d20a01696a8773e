#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sdg/signed_digraph.hpp"

namespace sdg {

// "sdg v1" text format:
//
//   sdg v1
//   # comment
//   vertex a
//   arc a b +
//   arc b a -
//
// Vertices named only in arc lines are created in first-seen order. Duplicate
// arc lines are rejected. Throws ParseError with the offending line number.
SignedDigraph parse_sdg(std::string_view text);
std::string format_sdg(const SignedDigraph& g);

SignedDigraph read_sdg_file(const std::filesystem::path& path);
void write_sdg_file(const std::filesystem::path& path, const SignedDigraph& g);

// Graphviz: positive arcs green, negative red, parallel arcs as two edges.
std::string to_dot(const SignedDigraph& g, std::string_view graph_name = "G");

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace sdg
