#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "srgint/graph.hpp"

namespace srgint {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

std::string graph6_encode(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing newline.
Graph graph6_decode(std::string_view text);

/// {"n": .., "edges": [[i,j], ...], "labels": [...]}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace srgint
