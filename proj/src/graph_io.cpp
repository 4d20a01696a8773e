#include "sdg/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "sdg/error.hpp"

namespace sdg {

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

std::string at_line(std::size_t number, const std::string& msg) {
  return "line " + std::to_string(number) + ": " + msg;
}

}  // namespace

SignedDigraph parse_sdg(std::string_view text) {
  SignedDigraph g;
  bool header = false;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto words = split_words(raw);
    if (words.empty()) continue;
    if (!header) {
      if (words.size() != 2 || words[0] != "sdg" || words[1] != "v1")
        throw ParseError(at_line(number, "expected header 'sdg v1'"));
      header = true;
      continue;
    }
    auto vertex = [&](const std::string& name) {
      if (auto v = g.find(name)) return *v;
      return g.add_vertex(name);
    };
    if (words[0] == "vertex") {
      if (words.size() != 2) throw ParseError(at_line(number, "expected 'vertex <name>'"));
      if (g.find(words[1])) throw ParseError(at_line(number, "duplicate vertex '" + words[1] + "'"));
      g.add_vertex(words[1]);
    } else if (words[0] == "arc") {
      if (words.size() != 4 || (words[3] != "+" && words[3] != "-"))
        throw ParseError(at_line(number, "expected 'arc <src> <dst> <+|->'"));
      const Vertex s = vertex(words[1]);
      const Vertex t = vertex(words[2]);
      const Sign sign = words[3] == "+" ? Sign::Positive : Sign::Negative;
      if (!g.insert_arc({s, t, sign}))
        throw ParseError(at_line(number, "duplicate arc " + describe(g, {s, t, sign})));
    } else {
      throw ParseError(at_line(number, "unknown directive '" + words[0] + "'"));
    }
  }
  if (!header) throw ParseError("missing 'sdg v1' header");
  return g;
}

std::string format_sdg(const SignedDigraph& g) {
  std::ostringstream out;
  out << "sdg v1\n";
  for (const auto& name : g.names()) out << "vertex " << name << '\n';
  for (const auto& a : g.arcs())
    out << "arc " << g.name(a.source) << ' ' << g.name(a.target) << ' ' << sign_char(a.sign) << '\n';
  return out.str();
}

SignedDigraph read_sdg_file(const std::filesystem::path& path) { return parse_sdg(read_text_file(path)); }

void write_sdg_file(const std::filesystem::path& path, const SignedDigraph& g) {
  write_text_file(path, format_sdg(g));
}

std::string to_dot(const SignedDigraph& g, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  for (const auto& name : g.names()) out << "  \"" << name << "\";\n";
  for (const auto& a : g.arcs()) {
    out << "  \"" << g.name(a.source) << "\" -> \"" << g.name(a.target) << "\" [color="
        << (a.sign == Sign::Positive ? "green" : "red") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace sdg
