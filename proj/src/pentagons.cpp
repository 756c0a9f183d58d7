#include "srgint/pentagons.hpp"

#include <algorithm>
#include <set>

#include "srgint/dlx.hpp"
#include "srgint/srg.hpp"

namespace srgint {

std::vector<Pentagon> pentagons(const Graph& g) {
    // Each cycle a-b-x-y-c-a is found once from its least vertex a, with b < c
    // the two cycle neighbours of a.
    std::vector<Pentagon> out;
    const auto n = g.order();
    for (Vertex a = 0; a < n; ++a) {
        const auto& na = g.neighbours(a);
        for (Vertex b = na.next(a + 1); b < n; b = na.next(b + 1))
            for (Vertex c = na.next(b + 1); c < n; c = na.next(c + 1)) {
                if (g.adjacent(b, c)) continue;
                const auto& nb = g.neighbours(b);
                for (Vertex x = nb.next(a + 1); x < n; x = nb.next(x + 1)) {
                    if (x == c || na.contains(x) || g.adjacent(x, c)) continue;
                    const auto& nx = g.neighbours(x);
                    for (Vertex y = nx.next(a + 1); y < n; y = nx.next(y + 1)) {
                        if (y == b || !g.adjacent(y, c) || na.contains(y) || nb.contains(y)) continue;
                        Pentagon p{a, b, c, x, y};
                        std::sort(p.begin(), p.end());
                        out.push_back(p);
                    }
                }
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t count_pentagons(const Graph& g) { return pentagons(g).size(); }

std::size_t pentagon_cross_edges(const Graph& g, const Pentagon& a, const Pentagon& b) {
    std::size_t k = 0;
    for (auto x : a)
        for (auto y : b) k += g.adjacent(x, y);
    return k;
}

PentagonPartitionCount pentagon_partitions(const Graph& g, std::uint64_t budget) {
    const auto ps = pentagons(g);
    PentagonPartitionCount out;
    if (g.order() % 5 != 0 || ps.empty()) {
        out.complete = true;
        return out;
    }
    ExactCover ec(g.order());
    for (const auto& p : ps) ec.add_option(std::vector<std::size_t>(p.begin(), p.end()));
    ec.set_compatibility([&](std::size_t a, std::size_t b) {
        const auto k = pentagon_cross_edges(g, ps[a], ps[b]);
        return k == 0 || k == 5;
    });
    const auto r = ec.count(budget);
    out.complete = r.complete;
    out.count = r.solutions;
    out.nodes = r.nodes;
    for (auto i : r.first) out.first.push_back(ps[i]);
    std::sort(out.first.begin(), out.first.end());
    return out;
}

bool is_petersen(const Graph& g) {
    const auto p = is_srg(g);
    return p && *p == SrgParams{10, 3, 0, 1};
}

namespace {

// Splits the subgraph induced on `s` into components; each must be a 5-cycle.
bool split_into_pentagons(const Graph& g, const VertexSet& s, std::vector<VertexSet>& parts, std::string& why) {
    const auto vs = s.elements();
    const auto h = g.induced(vs);
    for (const auto& comp : components(h)) {
        VertexSet part(g.order());
        for (auto i : comp.elements()) part.insert(vs[i]);
        const auto sub = g.induced(part);
        if (part.count() != 5 || sub.regular_degree() != std::optional<std::size_t>{2}) {
            why = "component of size " + std::to_string(part.count()) + " is not a pentagon";
            return false;
        }
        parts.push_back(part);
    }
    return true;
}

}  // namespace

PentagonStructureReport verify_pentagon_structure(const Graph& g, const VertexSet& h0) {
    PentagonStructureReport r;
    if (h0.count() != 5 || g.induced(h0).regular_degree() != std::optional<std::size_t>{2} ||
        !is_connected(g.induced(h0))) {
        r.problems.push_back("H0 does not induce a pentagon");
        return r;
    }
    VertexSet n1(g.order());
    for (auto x : h0.elements()) n1 |= g.neighbours(x);
    n1 -= h0;
    VertexSet n2 = g.all_vertices() - h0 - n1;
    r.n1_size = n1.count();
    r.n2_size = n2.count();

    std::string why;
    if (!split_into_pentagons(g, n1, r.n1_pentagons, why)) r.problems.push_back("N1: " + why);
    if (!split_into_pentagons(g, n2, r.n2_pentagons, why)) r.problems.push_back("N2: " + why);
    if (r.n1_pentagons.size() != 5)
        r.problems.push_back("N1 has " + std::to_string(r.n1_pentagons.size()) + " pentagons, expected 5");
    if (r.n2_pentagons.size() != 4)
        r.problems.push_back("N2 has " + std::to_string(r.n2_pentagons.size()) + " pentagons, expected 4");

    std::vector<VertexSet> lower{h0};
    lower.insert(lower.end(), r.n2_pentagons.begin(), r.n2_pentagons.end());
    for (std::size_t i = 0; i < lower.size(); ++i)
        for (std::size_t j = 0; j < r.n1_pentagons.size(); ++j) {
            if (is_petersen(g.induced(lower[i] | r.n1_pentagons[j])))
                ++r.petersen_unions;
            else
                r.problems.push_back("H_" + std::to_string(i) + " ∪ H^" + std::to_string(j) + " is not a Petersen graph");
        }
    if (r.petersen_unions != 25)
        r.problems.push_back(std::to_string(r.petersen_unions) + " Petersen unions, expected 25");
    r.ok = r.problems.empty();
    return r;
}

nlohmann::json PentagonStructureReport::to_json() const {
    auto sets = [](const std::vector<VertexSet>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& s : v) a.push_back(s.elements());
        return a;
    };
    return {{"ok", ok},
            {"n1_size", n1_size},
            {"n2_size", n2_size},
            {"n1_pentagons", sets(n1_pentagons)},
            {"n2_pentagons", sets(n2_pentagons)},
            {"petersen_unions", petersen_unions},
            {"problems", problems}};
}

std::vector<VertexSet> enumerate_petersen_subgraphs(const Graph& g) {
    const auto ps = pentagons(g);
    std::vector<VertexSet> sets;
    for (const auto& p : ps) {
        VertexSet s(g.order());
        for (auto x : p) s.insert(x);
        sets.push_back(std::move(s));
    }
    std::set<std::vector<Vertex>> seen;
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (sets[i].intersects(sets[j])) continue;
            // In a cubic union each pentagon vertex has exactly one cross edge.
            std::size_t cross = 0;
            for (auto x : ps[i]) cross += g.neighbours(x).intersection_count(sets[j]);
            if (cross != 5) continue;
            const auto u = sets[i] | sets[j];
            auto key = u.elements();
            if (seen.contains(key) || !is_petersen(g.induced(key))) continue;
            seen.insert(std::move(key));
        }
    for (const auto& key : seen) {
        VertexSet s(g.order());
        for (auto x : key) s.insert(x);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<VertexSet> petersen_meeting_all(const std::vector<VertexSet>& subgraphs,
                                            const std::vector<VertexSet>& fixed, std::size_t meet) {
    std::vector<VertexSet> out;
    for (const auto& s : subgraphs)
        if (std::all_of(fixed.begin(), fixed.end(), [&](const VertexSet& f) { return s.intersection_count(f) == meet; }))
            out.push_back(s);
    return out;
}

}  // namespace srgint
