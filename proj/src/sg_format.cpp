#include "sigcolor/sg_format.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "sigcolor/errors.hpp"

namespace sigcolor {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long parse_count(std::string_view token, std::size_t line, const char* what) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
    throw ParseError(line, std::string("expected non-negative integer for ") + what + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

}  // namespace

SignedGraph parse_sg(std::string_view text) {
  std::optional<SignedGraph> graph;
  long expected_edges = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (tokens.front() == "p") {
      if (graph) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != "sg") {
        throw ParseError(line_no, "header must be 'p sg <n> <m>'");
      }
      const long n = parse_count(tokens[2], line_no, "n");
      expected_edges = parse_count(tokens[3], line_no, "m");
      if (n > 1'000'000) throw ParseError(line_no, "vertex count too large");
      graph.emplace(static_cast<int>(n));
    } else if (tokens.front() == "e") {
      if (!graph) throw ParseError(line_no, "edge before header");
      if (tokens.size() != 4) throw ParseError(line_no, "edge line must be 'e <u> <v> <+|->'");
      const long u = parse_count(tokens[1], line_no, "endpoint");
      const long v = parse_count(tokens[2], line_no, "endpoint");
      if (tokens[3] != "+" && tokens[3] != "-") {
        throw ParseError(line_no, "edge sign must be '+' or '-'");
      }
      if (static_cast<long>(graph->m()) >= expected_edges) {
        throw ParseError(line_no, "more edge lines than declared");
      }
      if (u >= graph->n() || v >= graph->n()) {
        throw IndexError("line " + std::to_string(line_no) + ": endpoint out of range for n=" +
                         std::to_string(graph->n()));
      }
      graph->add_edge(static_cast<int>(u), static_cast<int>(v),
                      tokens[3] == "+" ? Sign::positive : Sign::negative);
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tokens.front()) + "'");
    }
  }
  if (!graph) throw ParseError(line_no, "missing header");
  if (static_cast<long>(graph->m()) != expected_edges) {
    throw ParseError(line_no, "declared " + std::to_string(expected_edges) + " edges, found " +
                                  std::to_string(graph->m()));
  }
  return *std::move(graph);
}

std::string format_sg(const SignedGraph& g) {
  std::ostringstream out;
  out << "p sg " << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.u << ' ' << e.v << ' ' << sign_char(e.sign) << '\n';
  }
  return out.str();
}

SignedGraph read_sg_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_sg(buffer.str());
}

void write_sg_file(const std::filesystem::path& path, const SignedGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << format_sg(g);
}

}  // namespace sigcolor
