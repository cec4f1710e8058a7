#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sfc/tree.hpp"

namespace sfc {

/// Raw contents of an edge-list file: header "n m" then m pairs. Blank lines
/// and lines starting with '#' are ignored; line breaks are otherwise not
/// significant, so the single-line variant parses identically.
struct EdgeList {
  int n = 0;
  std::vector<Edge> edges;
};

/// Throws ParseError on malformed text or out-of-range vertices. Pairs are
/// normalized to u < v; loops and duplicates are left for the consumer.
EdgeList parse_edge_list(std::string_view text);

std::string format_edge_list(int n, const std::vector<Edge>& edges, bool single_line);

std::string read_file(const std::string& path);

}  // namespace sfc
