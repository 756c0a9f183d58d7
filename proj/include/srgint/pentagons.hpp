#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "srgint/graph.hpp"

namespace srgint {

/// Vertex set of an induced 5-cycle, sorted ascending.
using Pentagon = std::array<Vertex, 5>;

/// All induced 5-cycles, each once, in lexicographic order.
std::vector<Pentagon> pentagons(const Graph& g);
std::size_t count_pentagons(const Graph& g);

std::size_t pentagon_cross_edges(const Graph& g, const Pentagon& a, const Pentagon& b);

struct PentagonPartitionCount {
    bool complete = false;  // false: budget ran out and `count` is only partial
    std::uint64_t count = 0;
    std::uint64_t nodes = 0;
    std::vector<Pentagon> first;  // one partition, if any was found
};

/// Partitions of V(g) into disjoint induced pentagons, any two of which are
/// joined by no edges or by five (a perfect matching), by exact cover. In
/// HoSi these are the Robertson-type decompositions {P^i} ∪ {Q^i}; plain
/// pentagon partitions are far more numerous.
PentagonPartitionCount pentagon_partitions(const Graph& g, std::uint64_t budget = UINT64_MAX);

/// Result of checking the neighbourhood structure around a pentagon H0:
/// N1(H0) should split into 5 pentagons H^j, N2(H0) into 4 pentagons H_i,
/// and every H_i ∪ H^j (H_0 included) should induce a Petersen graph.
struct PentagonStructureReport {
    bool ok = false;
    std::size_t n1_size = 0, n2_size = 0;
    std::vector<VertexSet> n1_pentagons;  // H^0..H^4 when ok
    std::vector<VertexSet> n2_pentagons;  // H_1..H_4 when ok
    std::size_t petersen_unions = 0;
    std::vector<std::string> problems;

    nlohmann::json to_json() const;
};

PentagonStructureReport verify_pentagon_structure(const Graph& g, const VertexSet& h0);

bool is_petersen(const Graph& g);

/// Distinct vertex sets of two disjoint pentagons whose union induces the
/// Petersen graph, sorted.
std::vector<VertexSet> enumerate_petersen_subgraphs(const Graph& g);

/// Members of `subgraphs` meeting every set in `fixed` in exactly `meet` vertices.
std::vector<VertexSet> petersen_meeting_all(const std::vector<VertexSet>& subgraphs,
                                            const std::vector<VertexSet>& fixed, std::size_t meet);

}  // namespace srgint
