#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "srgint/exact.hpp"
#include "srgint/graph.hpp"

namespace srgint {

/// Label used for the extra Golay coordinate.
inline constexpr int kInfinity = -1;

using PointMask = std::uint64_t;

/// Block design on at most 64 points; blocks are point bitmasks kept sorted
/// by their element sequence. `labels[i]` is the original name of local
/// point i, so derived designs remember where their points came from.
struct Design {
    std::size_t v = 0;
    std::vector<PointMask> blocks;
    std::vector<int> labels;

    std::size_t num_blocks() const { return blocks.size(); }
    std::size_t block_size() const;  // throws unless uniform
    std::size_t point_index(int label) const;
    std::vector<std::size_t> block_points(std::size_t b) const;

    bool operator==(const Design&) const = default;
};

struct DesignParams {
    int t = 0, v = 0, k = 0, lambda = 0;
};

/// Lexicographic order on sorted element sequences.
bool block_less(PointMask a, PointMask b);

/// Builds a design, sorting blocks and checking uniform size / distinctness.
Design make_design(std::size_t v, std::vector<PointMask> blocks, std::vector<int> labels = {});

/// The 12 generator rows of the extended binary Golay code; bit 0 is the
/// coordinate labelled infinity and bit 1+i is the residue i mod 23.
const std::vector<std::uint32_t>& golay_generator();
/// All 4096 codewords.
std::vector<std::uint32_t> golay_codewords();

Design golay_s_5_8_24();
/// Blocks through `point`, with that point deleted.
Design derive(const Design& d, std::size_t point);
/// Blocks avoiding `point`, on the remaining points.
Design residual(const Design& d, std::size_t point);
Design sts15();

/// lambda * C(v-s, t-s) / C(k-s, t-s).
Rational lambda_s(const DesignParams& p, int s);

/// lambda if every t-subset of points lies in the same number of blocks;
/// decided by counting every t-subset of every block.
std::optional<int> t_design_lambda(const Design& d, int t);

std::set<int> intersection_numbers(const Design& d);

/// Blocks as vertices, adjacent when they meet in exactly l2 points.
Graph block_graph(const Design& d, int l2);

/// points x blocks 0/1 matrix.
IntMatrix incidence_matrix(const Design& d);

/// "v b k" then one line of sorted local point indices per block.
std::string design_to_text(const Design& d);
Design design_from_text(const std::string& text);

}  // namespace srgint

namespace srgint {

/// derive(S(5,8,24), infinity): points labelled 0..22.
Design steiner_4_7_23();
/// derive(S(4,7,23), 0).
Design steiner_3_6_22();
/// residual(S(3,6,22), point labelled 1): quasi-symmetric with intersections {0,2}.
Design quasi_symmetric_2_21_6_4();

}  // namespace srgint
