#include "srgint/design.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "srgint/graph6.hpp"

namespace srgint {

std::size_t Design::block_size() const {
    if (blocks.empty()) throw std::domain_error("design has no blocks");
    const auto k = static_cast<std::size_t>(std::popcount(blocks.front()));
    for (auto b : blocks)
        if (static_cast<std::size_t>(std::popcount(b)) != k) throw std::domain_error("design blocks are not uniform");
    return k;
}

std::size_t Design::point_index(int label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    throw std::out_of_range("design has no point labelled " + std::to_string(label));
}

std::vector<std::size_t> Design::block_points(std::size_t b) const {
    std::vector<std::size_t> pts;
    for (auto m = blocks.at(b); m; m &= m - 1) pts.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return pts;
}

bool block_less(PointMask a, PointMask b) {
    while (a && b) {
        const auto ia = std::countr_zero(a), ib = std::countr_zero(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

Design make_design(std::size_t v, std::vector<PointMask> blocks, std::vector<int> labels) {
    if (v > 64) throw std::invalid_argument("designs are limited to 64 points");
    if (blocks.empty()) throw std::domain_error("design has no blocks");
    if (labels.empty())
        for (std::size_t i = 0; i < v; ++i) labels.push_back(static_cast<int>(i));
    if (labels.size() != v) throw std::invalid_argument("design label count mismatch");
    const PointMask universe = v == 64 ? ~PointMask{0} : (PointMask{1} << v) - 1;
    for (auto b : blocks)
        if (b & ~universe) throw std::invalid_argument("block mentions a point outside the design");
    std::sort(blocks.begin(), blocks.end(), block_less);
    if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end())
        throw std::domain_error("design has repeated blocks");
    Design d{v, std::move(blocks), std::move(labels)};
    (void)d.block_size();
    return d;
}

const std::vector<std::uint32_t>& golay_generator() {
    // Reduced echelon form of the span of the cyclic shifts of the
    // quadratic-residue word {1,2,3,4,6,8,9,12,13,16,18} mod 23, each
    // extended by an overall parity bit at infinity.
    static const std::vector<std::uint32_t> rows = {
        0x800ae3, 0x400f92, 0x200d2b, 0x100c76, 0x080cd9, 0x04066d,
        0x020337, 0x010b78, 0x0085bc, 0x0042de, 0x002b8d, 0x0015c7,
    };
    return rows;
}

std::vector<std::uint32_t> golay_codewords() {
    const auto& g = golay_generator();
    std::vector<std::uint32_t> words;
    words.reserve(std::size_t{1} << g.size());
    for (std::uint32_t m = 0; m < (1u << g.size()); ++m) {
        std::uint32_t w = 0;
        for (std::size_t i = 0; i < g.size(); ++i)
            if ((m >> i) & 1u) w ^= g[i];
        words.push_back(w);
    }
    return words;
}

Design golay_s_5_8_24() {
    std::vector<PointMask> octads;
    for (auto w : golay_codewords())
        if (std::popcount(w) == 8) octads.push_back(w);
    std::vector<int> labels{kInfinity};
    for (int i = 0; i < 23; ++i) labels.push_back(i);
    return make_design(24, std::move(octads), std::move(labels));
}

namespace {

// Deletes bit `point` and shifts higher bits down.
PointMask squeeze(PointMask m, std::size_t point) {
    const PointMask low = m & ((PointMask{1} << point) - 1);
    const PointMask high = point + 1 >= 64 ? 0 : (m >> (point + 1)) << point;
    return low | high;
}

std::vector<int> labels_without(const Design& d, std::size_t point) {
    auto l = d.labels;
    l.erase(l.begin() + static_cast<std::ptrdiff_t>(point));
    return l;
}

}  // namespace

Design derive(const Design& d, std::size_t point) {
    if (point >= d.v) throw std::out_of_range("derive: point out of range");
    std::vector<PointMask> out;
    for (auto b : d.blocks)
        if ((b >> point) & 1u) out.push_back(squeeze(b, point));
    if (out.empty()) throw std::domain_error("derive: point lies in no block");
    return make_design(d.v - 1, std::move(out), labels_without(d, point));
}

Design residual(const Design& d, std::size_t point) {
    if (point >= d.v) throw std::out_of_range("residual: point out of range");
    std::vector<PointMask> out;
    for (auto b : d.blocks)
        if (!((b >> point) & 1u)) out.push_back(squeeze(b, point));
    if (out.empty()) throw std::domain_error("residual: every block contains the point");
    return make_design(d.v - 1, std::move(out), labels_without(d, point));
}

Design sts15() {
    // Lines of PG(3,2): point i stands for the nonzero vector i+1 of F_2^4.
    std::vector<PointMask> lines;
    for (unsigned a = 1; a < 16; ++a)
        for (unsigned b = a + 1; b < 16; ++b) {
            const unsigned c = a ^ b;
            if (c > b) lines.push_back((PointMask{1} << (a - 1)) | (PointMask{1} << (b - 1)) | (PointMask{1} << (c - 1)));
        }
    return make_design(15, std::move(lines));
}

namespace {

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

Rational lambda_s(const DesignParams& p, int s) {
    if (s < 1 || s > p.t) throw std::domain_error("lambda_s: need 1 <= s <= t");
    return Rational(p.lambda * binomial(p.v - s, p.t - s), binomial(p.k - s, p.t - s));
}

std::optional<int> t_design_lambda(const Design& d, int t) {
    if (t < 1 || static_cast<std::size_t>(t) > d.v) throw std::domain_error("t_design_lambda: bad t");
    // Colex rank of a t-subset: sum C(p_i, i+1) over ascending elements p_i.
    std::vector<std::vector<std::uint64_t>> c(d.v + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(t) + 1, 0));
    for (std::size_t n = 0; n <= d.v; ++n) {
        c[n][0] = 1;
        for (std::size_t k = 1; k <= static_cast<std::size_t>(t) && k <= n; ++k)
            c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
    std::vector<std::uint32_t> hits(c[d.v][static_cast<std::size_t>(t)], 0);
    std::vector<std::size_t> pts, pick(static_cast<std::size_t>(t));
    for (std::size_t b = 0; b < d.num_blocks(); ++b) {
        pts = d.block_points(b);
        if (pts.size() < static_cast<std::size_t>(t)) continue;
        // Enumerate t-subsets of the block by index combinations.
        for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
        while (true) {
            std::uint64_t rank = 0;
            for (std::size_t i = 0; i < pick.size(); ++i) rank += c[pts[pick[i]]][i + 1];
            ++hits[rank];
            std::size_t i = pick.size();
            while (i > 0 && pick[i - 1] == pts.size() - pick.size() + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    const auto lambda = hits.front();
    for (auto h : hits)
        if (h != lambda) return std::nullopt;
    return static_cast<int>(lambda);
}

std::set<int> intersection_numbers(const Design& d) {
    if (d.num_blocks() < 2) throw std::domain_error("intersection_numbers: need at least two blocks");
    std::set<int> out;
    for (std::size_t i = 0; i < d.num_blocks(); ++i)
        for (std::size_t j = i + 1; j < d.num_blocks(); ++j) out.insert(std::popcount(d.blocks[i] & d.blocks[j]));
    return out;
}

namespace {

std::string block_label(const Design& d, PointMask b) {
    std::string s = "{";
    bool first = true;
    for (; b; b &= b - 1) {
        const int l = d.labels[static_cast<std::size_t>(std::countr_zero(b))];
        if (!first) s += ",";
        s += l == kInfinity ? std::string("inf") : std::to_string(l);
        first = false;
    }
    return s + "}";
}

}  // namespace

Graph block_graph(const Design& d, int l2) {
    auto numbers = intersection_numbers(d);
    if (numbers.size() > 2) throw std::domain_error("block_graph: design is not quasi-symmetric");
    if (!numbers.contains(l2) || *numbers.rbegin() != l2)
        throw std::domain_error("block_graph: l2 is not the larger intersection number");
    Graph g(d.num_blocks());
    for (std::size_t i = 0; i < d.num_blocks(); ++i)
        for (std::size_t j = i + 1; j < d.num_blocks(); ++j)
            if (std::popcount(d.blocks[i] & d.blocks[j]) == l2) g.add_edge(i, j);
    std::vector<std::string> labels;
    for (auto b : d.blocks) labels.push_back(block_label(d, b));
    g.set_labels(std::move(labels));
    return g;
}

IntMatrix incidence_matrix(const Design& d) {
    IntMatrix m(d.v, d.num_blocks());
    for (std::size_t b = 0; b < d.num_blocks(); ++b)
        for (auto p : d.block_points(b)) m(p, b) = 1;
    return m;
}

std::string design_to_text(const Design& d) {
    std::ostringstream out;
    out << d.v << ' ' << d.num_blocks() << ' ' << d.block_size() << '\n';
    for (std::size_t b = 0; b < d.num_blocks(); ++b) {
        auto pts = d.block_points(b);
        for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << pts[i];
        out << '\n';
    }
    return out.str();
}

Design design_from_text(const std::string& text) {
    std::istringstream in(text);
    std::size_t v = 0, b = 0, k = 0;
    if (!(in >> v >> b >> k)) throw ParseError("design: missing 'v b k' header", 0);
    std::vector<PointMask> blocks;
    for (std::size_t i = 0; i < b; ++i) {
        PointMask m = 0;
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t p = 0;
            if (!(in >> p)) throw ParseError("design: truncated block " + std::to_string(i), static_cast<std::size_t>(in.tellg()));
            if (p >= v) throw ParseError("design: point index out of range", static_cast<std::size_t>(in.tellg()));
            m |= PointMask{1} << p;
        }
        blocks.push_back(m);
    }
    std::string extra;
    if (in >> extra) throw ParseError("design: trailing data", static_cast<std::size_t>(in.tellg()));
    return make_design(v, std::move(blocks));
}

}  // namespace srgint

namespace srgint {

Design steiner_4_7_23() {
    auto s24 = golay_s_5_8_24();
    return derive(s24, s24.point_index(kInfinity));
}

Design steiner_3_6_22() {
    auto s23 = steiner_4_7_23();
    return derive(s23, s23.point_index(0));
}

Design quasi_symmetric_2_21_6_4() {
    auto s22 = steiner_3_6_22();
    return residual(s22, s22.point_index(1));
}

}  // namespace srgint
