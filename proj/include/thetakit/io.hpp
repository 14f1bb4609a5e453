#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "thetakit/graph.hpp"

namespace thetakit {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// graph6: size header, then the upper triangle packed column-wise,
// six bits per printable byte offset by 63. A leading ">>graph6<<" is accepted.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Plain text: first token is n, then one "u v" pair per edge, 0-indexed.
Graph from_edge_list_text(std::string_view text);
std::string to_edge_list_text(const Graph& g);

Graph read_graph6_file(const std::filesystem::path& path);
Graph read_edge_list_file(const std::filesystem::path& path);

}  // namespace thetakit
