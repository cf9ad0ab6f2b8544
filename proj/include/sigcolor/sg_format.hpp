#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sigcolor/signed_graph.hpp"

namespace sigcolor {

// Plain-text signed graph format:
//
//   # optional comment lines
//   p sg <n> <m>
//   e <u> <v> <+|->      (exactly m lines, 0-based endpoints, u == v is a loop)
//
// Throws ParseError (with line number) on malformed text and IndexError when
// an endpoint is >= n.
SignedGraph parse_sg(std::string_view text);
std::string format_sg(const SignedGraph& g);

SignedGraph read_sg_file(const std::filesystem::path& path);
void write_sg_file(const std::filesystem::path& path, const SignedGraph& g);

}  // namespace sigcolor
