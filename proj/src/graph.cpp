#include "srgint/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace srgint {

Graph::Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g(n);
    for (auto [x, y] : edges) g.add_edge(x, y);
    return g;
}

std::size_t Graph::size() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
}

void Graph::add_edge(Vertex x, Vertex y) {
    if (x >= order() || y >= order()) throw std::out_of_range("add_edge: vertex out of range");
    if (x == y) throw std::invalid_argument("add_edge: self-loop");
    adj_[x].insert(y);
    adj_[y].insert(x);
}

void Graph::remove_edge(Vertex x, Vertex y) {
    adj_[x].erase(y);
    adj_[y].erase(x);
}

std::optional<std::size_t> Graph::regular_degree() const {
    if (adj_.empty()) return std::nullopt;
    auto k = adj_[0].count();
    for (const auto& row : adj_)
        if (row.count() != k) return std::nullopt;
    return k;
}

std::size_t Graph::min_degree() const {
    std::size_t m = order() ? degree(0) : 0;
    for (Vertex x = 1; x < order(); ++x) m = std::min(m, degree(x));
    return m;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex x = 0; x < order(); ++x)
        for (auto y = adj_[x].next(x + 1); y < order(); y = adj_[x].next(y + 1)) out.emplace_back(x, y);
    return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != order())
        throw std::invalid_argument("set_labels: label count does not match vertex count");
    labels_ = std::move(labels);
}

const std::string& Graph::label(Vertex x) const {
    static const std::string none;
    return labels_.empty() ? none : labels_.at(x);
}

Graph Graph::induced(const std::vector<Vertex>& vertices) const {
    Graph h(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j])) h.add_edge(i, j);
    if (has_labels()) {
        std::vector<std::string> l;
        l.reserve(vertices.size());
        for (auto v : vertices) l.push_back(labels_[v]);
        h.labels_ = std::move(l);
    }
    return h;
}

Graph complement(const Graph& g) {
    const auto n = g.order();
    Graph h(n);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y)
            if (!g.adjacent(x, y)) h.add_edge(x, y);
    h.set_labels(g.labels());
    return h;
}

VertexSet distance_layer(const Graph& g, Vertex x, std::size_t i) {
    VertexSet seen(g.order()), frontier(g.order());
    seen.insert(x);
    frontier.insert(x);
    for (std::size_t d = 0; d < i; ++d) {
        VertexSet next(g.order());
        for (auto v = frontier.first(); v < g.order(); v = frontier.next(v + 1)) next |= g.neighbours(v);
        next -= seen;
        seen |= next;
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return frontier;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen(g.order());
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen.contains(s)) continue;
        VertexSet comp(g.order()), frontier(g.order());
        comp.insert(s);
        frontier.insert(s);
        while (!frontier.empty()) {
            VertexSet next(g.order());
            for (auto v = frontier.first(); v < g.order(); v = frontier.next(v + 1)) next |= g.neighbours(v);
            next -= comp;
            comp |= next;
            frontier = std::move(next);
        }
        seen |= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return g.order() == 0 || components(g).size() == 1; }

bool is_complete(const Graph& g) {
    const auto n = g.order();
    for (Vertex x = 0; x < n; ++x)
        if (g.degree(x) + 1 != n) return false;
    return true;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    const auto n = a.order();
    if (n != b.order() || a.size() != b.size()) return false;

    // Vertex invariant: degree plus sorted neighbour degrees.
    auto invariant = [](const Graph& g, Vertex x) {
        std::vector<std::size_t> v{g.degree(x)};
        std::vector<std::size_t> nd;
        const auto& nb = g.neighbours(x);
        for (auto y = nb.first(); y < g.order(); y = nb.next(y + 1)) nd.push_back(g.degree(y));
        std::sort(nd.begin(), nd.end());
        v.insert(v.end(), nd.begin(), nd.end());
        return v;
    };
    std::vector<std::vector<std::size_t>> ia(n), ib(n);
    for (Vertex x = 0; x < n; ++x) {
        ia[x] = invariant(a, x);
        ib[x] = invariant(b, x);
    }
    {
        auto sa = ia, sb = ib;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    // Map vertices of `a` in BFS-ish order so later choices are constrained.
    std::vector<Vertex> order;
    {
        VertexSet placed(n);
        while (order.size() < n) {
            Vertex best = n;
            std::size_t best_links = 0;
            for (Vertex x = 0; x < n; ++x) {
                if (placed.contains(x)) continue;
                auto links = a.neighbours(x).intersection_count(placed);
                if (best == n || links > best_links) {
                    best = x;
                    best_links = links;
                }
            }
            placed.insert(best);
            order.push_back(best);
        }
    }

    std::vector<Vertex> image(n, n);
    VertexSet used(n);
    std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
        if (depth == n) return true;
        const Vertex x = order[depth];
        for (Vertex y = 0; y < n; ++y) {
            if (used.contains(y) || ib[y] != ia[x]) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d) {
                const Vertex px = order[d];
                ok = a.adjacent(x, px) == b.adjacent(y, image[px]);
            }
            if (!ok) continue;
            image[x] = y;
            used.insert(y);
            if (extend(depth + 1)) return true;
            used.erase(y);
        }
        return false;
    };
    return extend(0);
}

}  // namespace srgint
