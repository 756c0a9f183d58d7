#include "srgint/constructions.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "srgint/srg.hpp"

namespace srgint {

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::domain_error("cycle needs at least 3 vertices");
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_multipartite(std::size_t n, std::size_t t) {
    if (n < 2 || t < 1) throw std::domain_error("complete_multipartite needs n >= 2 parts of size t >= 1");
    Graph g(n * t);
    for (std::size_t x = 0; x < n * t; ++x)
        for (std::size_t y = x + 1; y < n * t; ++y)
            if (x / t != y / t) g.add_edge(x, y);
    return g;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> pairs_of(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) out.emplace_back(a, b);
    return out;
}

}  // namespace

Graph petersen() {
    const auto pairs = pairs_of(5);
    Graph g(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
        }
    return g;
}

Graph triangular(std::size_t n) {
    if (n < 4) throw std::domain_error("triangular graph needs n >= 4");
    const auto pairs = pairs_of(n);
    Graph g(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a == c || a == d || b == c || b == d) g.add_edge(i, j);
        }
    return g;
}

Graph lattice_graph(std::size_t n) {
    if (n < 2) throw std::domain_error("lattice graph needs n >= 2");
    Graph g(n * n);
    for (std::size_t x = 0; x < n * n; ++x)
        for (std::size_t y = x + 1; y < n * n; ++y)
            if (x / n == y / n || x % n == y % n) g.add_edge(x, y);
    return g;
}

Graph clebsch() {
    std::vector<unsigned> words;
    for (unsigned w = 0; w < 32; ++w)
        if (std::popcount(w) % 2 == 0) words.push_back(w);
    Graph g(words.size());
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (std::popcount(words[i] ^ words[j]) == 2) g.add_edge(i, j);
    return g;
}

Graph shrikhande() {
    Graph g(16);
    const int steps[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (const auto& s : steps) {
                const int c = (a + s[0]) % 4, d = (b + s[1]) % 4;
                const auto x = static_cast<std::size_t>(4 * a + b), y = static_cast<std::size_t>(4 * c + d);
                if (x < y) g.add_edge(x, y);
            }
    return g;
}

Graph hoffman_singleton() {
    Graph g(50);
    auto p = [](std::size_t i, std::size_t j) { return 5 * i + (j % 5); };
    auto q = [](std::size_t i, std::size_t l) { return 25 + 5 * i + (l % 5); };
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            g.add_edge(p(i, j), p(i, j + 1));
            g.add_edge(q(i, j), q(i, j + 2));
        }
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            for (std::size_t l = 0; l < 5; ++l) g.add_edge(q(i, l), p(j, i * j + l));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) labels.push_back("P(" + std::to_string(i) + "," + std::to_string(j) + ")");
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t l = 0; l < 5; ++l) labels.push_back(std::to_string(i) + "R" + std::to_string(l));
    g.set_labels(std::move(labels));
    return g;
}

VertexSet hoffman_singleton_petersen_part(std::size_t i) {
    if (i >= 5) throw std::out_of_range("pentagon index must be < 5");
    VertexSet s(50);
    for (std::size_t j = 0; j < 5; ++j) {
        s.insert(5 * i + j);
        s.insert(25 + 5 * i + j);
    }
    return s;
}

namespace {

std::string mask_label(const Design& d, PointMask m) {
    std::string s = "{";
    bool first = true;
    for (; m; m &= m - 1) {
        if (!first) s += ",";
        s += std::to_string(d.labels[static_cast<std::size_t>(std::countr_zero(m))]);
        first = false;
    }
    return s + "}";
}

}  // namespace

Graph mclaughlin_complement() {
    const Design s23 = steiner_4_7_23();
    const PointMask zero = PointMask{1} << s23.point_index(0);
    std::vector<PointMask> through_zero, avoiding_zero;
    for (auto b : s23.blocks) (b & zero ? through_zero : avoiding_zero).push_back(b);

    const std::size_t points = 22;
    const std::size_t n = points + through_zero.size() + avoiding_zero.size();
    Graph g(n);
    std::vector<std::string> labels;
    for (int i = 1; i <= 22; ++i) labels.push_back("p:" + std::to_string(i));
    for (auto b : through_zero) labels.push_back("b1:" + mask_label(s23, b));
    for (auto b : avoiding_zero) labels.push_back("b2:" + mask_label(s23, b));

    auto point_mask = [&](std::size_t x) { return PointMask{1} << s23.point_index(static_cast<int>(x + 1)); };
    const std::size_t b1_start = points, b2_start = points + through_zero.size();
    auto block_of = [&](std::size_t v) { return v < b2_start ? through_zero[v - b1_start] : avoiding_zero[v - b2_start]; };

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            bool edge = false;
            if (y < points) {
                edge = true;  // points form a clique
            } else if (x < points) {
                const bool inside = (block_of(y) & point_mask(x)) != 0;
                edge = y < b2_start ? inside : !inside;
            } else {
                const int meet = std::popcount(block_of(x) & block_of(y));
                const bool same_class = (x < b2_start) == (y < b2_start);
                edge = same_class ? meet == 3 : meet == 1;
            }
            if (edge) g.add_edge(x, y);
        }
    g.set_labels(std::move(labels));
    return g;
}

Graph gq39_complement() { return subconstituent(mclaughlin_complement(), 0, 2); }

Graph gq39() { return complement(gq39_complement()); }

Graph sims_gewirtz_complement() { return block_graph(quasi_symmetric_2_21_6_4(), 2); }

Graph sts15_block_graph() { return block_graph(sts15(), 1); }

Graph extend_by_dominating_clique(const Graph& g, std::size_t m) {
    if (m < 1) throw std::domain_error("extend_by_dominating_clique needs m >= 1");
    const auto n = g.order();
    Graph h(n + m);
    for (auto [x, y] : g.edges()) h.add_edge(x, y);
    for (std::size_t a = n; a < n + m; ++a)
        for (std::size_t y = 0; y < a; ++y) h.add_edge(y, a);
    if (g.has_labels()) {
        auto labels = g.labels();
        for (std::size_t a = 0; a < m; ++a) labels.push_back("x" + std::to_string(a + 1));
        h.set_labels(std::move(labels));
    }
    return h;
}

}  // namespace srgint
