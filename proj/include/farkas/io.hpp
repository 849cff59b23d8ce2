#pragma once

#include <string>
#include <string_view>

#include "farkas/graphs.hpp"
#include "farkas/types.hpp"

namespace farkas::io {

// Vector file: '#' comment lines, header "m n", then m rows of n integers.
// Parse errors carry the 1-based line number.
VectorFamily parse_vector_file(std::string_view text);

// Graph file: '#' comment lines, one "u v" edge per data line. Vertices
// are numbered in order of first appearance.
Graph parse_graph_file(std::string_view text);

std::string read_file(const std::string& path);

// Comma-separated lists such as "1,-2,3" and "1/2,0,-3/4".
std::vector<Integer> parse_integer_list(std::string_view text);
std::vector<Rational> parse_rational_list(std::string_view text);

std::string format_vector_file(const VectorFamily& family);
std::string format_graph_file(const Graph& g);

}  // namespace farkas::io
