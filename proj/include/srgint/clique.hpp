#pragma once

#include <cstdint>
#include <vector>

#include "srgint/graph.hpp"

namespace srgint {

struct CliqueResult {
    bool complete = false;        // false: node budget ran out, `witness` is only a lower bound
    std::vector<Vertex> witness;  // sorted; lexicographically least maximum set when complete
    std::uint64_t nodes = 0;

    std::size_t size() const { return witness.size(); }
};

/// Branch and bound over bitsets, branching on vertices in increasing order
/// with a greedy-colouring bound.
CliqueResult max_clique(const Graph& g, std::uint64_t budget = UINT64_MAX);
CliqueResult max_coclique(const Graph& g, std::uint64_t budget = UINT64_MAX);

bool is_clique(const Graph& g, const std::vector<Vertex>& vs);
bool is_coclique(const Graph& g, const std::vector<Vertex>& vs);

}  // namespace srgint
