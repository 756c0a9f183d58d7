#include "srgint/clique.hpp"

namespace srgint {

namespace {

class CliqueSearch {
public:
    CliqueSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

    CliqueResult run() {
        std::vector<Vertex> current;
        complete_ = true;
        expand(current, g_.all_vertices());
        return {complete_, best_, nodes_};
    }

private:
    // Upper bound on the clique number of g[p] from a greedy colouring.
    std::size_t colour_bound(VertexSet p) const {
        std::size_t colours = 0;
        const auto n = g_.order();
        while (!p.empty()) {
            ++colours;
            VertexSet cls = p;
            for (auto v = cls.first(); v < n; v = cls.next(v + 1)) cls -= g_.neighbours(v);
            p -= cls;
        }
        return colours;
    }

    void expand(std::vector<Vertex>& current, const VertexSet& candidates) {
        if (++nodes_ > budget_) {
            complete_ = false;
            return;
        }
        if (current.size() > best_.size()) best_ = current;
        if (candidates.empty()) return;
        if (current.size() + colour_bound(candidates) <= best_.size()) return;
        const auto n = g_.order();
        VertexSet remaining = candidates;
        for (auto v = candidates.first(); v < n; v = candidates.next(v + 1)) {
            if (!complete_) return;
            if (current.size() + remaining.count() <= best_.size()) return;
            remaining.erase(v);
            current.push_back(v);
            expand(current, remaining & g_.neighbours(v));
            current.pop_back();
        }
    }

    const Graph& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool complete_ = true;
    std::vector<Vertex> best_;
};

}  // namespace

CliqueResult max_clique(const Graph& g, std::uint64_t budget) { return CliqueSearch(g, budget).run(); }

CliqueResult max_coclique(const Graph& g, std::uint64_t budget) { return max_clique(complement(g), budget); }

bool is_clique(const Graph& g, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

bool is_coclique(const Graph& g, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || g.adjacent(vs[i], vs[j])) return false;
    return true;
}

}  // namespace srgint
