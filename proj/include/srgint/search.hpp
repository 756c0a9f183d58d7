#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "srgint/certify.hpp"
#include "srgint/graph.hpp"

namespace srgint {

enum class Verdict { Found, Unsat, Unknown };
std::string to_string(Verdict v);

struct SearchOptions {
    std::int64_t s = 1, t = 1;
    std::vector<Vertex> order;  // empty: default_vertex_order
    std::uint64_t budget = UINT64_MAX;
    bool use_extra_rules = true;  // shared-support and row-coclique cuts
};

struct SearchResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<Certificate> certificate;  // set iff Found, already verified
    std::uint64_t nodes = 0;
    std::vector<std::uint64_t> depth_histogram;  // columns placed -> nodes at that depth
    std::vector<std::string> cuts;               // names of rules that fired, once each

    nlohmann::json to_json() const;
};

/// Lexicographically least maximum clique first, then repeatedly the vertex
/// with most neighbours already placed (ties: smaller index).
std::vector<Vertex> default_vertex_order(const Graph& g);

/// Searches for integer N with N^T N = s(A + tI). Rows of N are kept in
/// lexicographically non-increasing order (reading entries in vertex order)
/// with each row's first nonzero entry positive; every solution has such a
/// form, so exhausting the tree proves that none exists. Throws
/// std::domain_error when A + tI is not positive semidefinite.
SearchResult find_representation(const Graph& g, const SearchOptions& opts);

/// Integer vectors of norm s*t over `active` existing coordinates followed by
/// a nonincreasing tail of positive entries on fresh coordinates, with no
/// constraints from other columns. With active = 0 these are the column shapes.
std::vector<std::vector<std::int64_t>> canonical_column_enumerator(std::int64_t s, std::int64_t t, std::size_t active);

/// Partial assignment: columns for a prefix of the vertex order, as vectors
/// over a common set of rows.
struct SearchState {
    std::vector<Vertex> placed;
    std::vector<std::vector<std::int64_t>> columns;  // columns[i] belongs to placed[i]
    std::optional<bool> mu_at_least_10;              // cached SRG test; computed when absent
};

struct PruneDecision {
    bool keep = true;
    std::string reason;
};

/// Local necessary conditions on the newest column of `state`:
///  - s = 1, t = 3: two adjacent columns sharing three support positions force
///    equal closed neighbourhoods;
///  - s = 1, t = 3 and g strongly regular with mu >= 10: non-adjacent
///    columns share support;
///  - s = 2, t = 3: the support of a row contains no coclique larger than
///    coclique_bound_for_row;
///  - once every vertex is placed, each row satisfies the norm inequality.
PruneDecision prune(const SearchState& state, const Graph& g, std::int64_t s, std::int64_t t);

}  // namespace srgint
