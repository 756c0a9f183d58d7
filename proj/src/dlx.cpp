#include "srgint/dlx.hpp"

#include <algorithm>
#include <stdexcept>

namespace srgint {

// Node 0 is the root header, nodes 1..items are column headers.
ExactCover::ExactCover(std::size_t items) : sizes_(items + 1, 0), items_(items) {
    nodes_.resize(items + 1);
    for (std::size_t i = 0; i <= items; ++i) {
        nodes_[i] = {i == 0 ? items : i - 1, i == items ? 0 : i + 1, i, i, i, SIZE_MAX};
    }
}

std::size_t ExactCover::add_option(const std::vector<std::size_t>& items) {
    if (items.empty()) throw std::invalid_argument("exact cover option is empty");
    const std::size_t option = options_++;
    const std::size_t first = nodes_.size();
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (items[k] >= items_) throw std::out_of_range("exact cover item out of range");
        const std::size_t col = items[k] + 1;
        const std::size_t id = nodes_.size();
        Node n{};
        n.column = col;
        n.option = option;
        n.up = nodes_[col].up;
        n.down = col;
        n.left = k == 0 ? id : id - 1;
        n.right = first;
        nodes_.push_back(n);
        nodes_[nodes_[col].up].down = id;
        nodes_[col].up = id;
        if (k > 0) nodes_[id - 1].right = id;
        nodes_[first].left = id;
        ++sizes_[col];
    }
    return option;
}

void ExactCover::cover(std::size_t c) {
    nodes_[nodes_[c].right].left = nodes_[c].left;
    nodes_[nodes_[c].left].right = nodes_[c].right;
    for (auto i = nodes_[c].down; i != c; i = nodes_[i].down)
        for (auto j = nodes_[i].right; j != i; j = nodes_[j].right) {
            nodes_[nodes_[j].down].up = nodes_[j].up;
            nodes_[nodes_[j].up].down = nodes_[j].down;
            --sizes_[nodes_[j].column];
        }
}

void ExactCover::uncover(std::size_t c) {
    for (auto i = nodes_[c].up; i != c; i = nodes_[i].up)
        for (auto j = nodes_[i].left; j != i; j = nodes_[j].left) {
            ++sizes_[nodes_[j].column];
            nodes_[nodes_[j].down].up = j;
            nodes_[nodes_[j].up].down = j;
        }
    nodes_[nodes_[c].right].left = c;
    nodes_[nodes_[c].left].right = c;
}

void ExactCover::search(Result& r, std::vector<std::size_t>& partial, std::uint64_t budget) {
    if (++r.nodes > budget) {
        r.complete = false;
        return;
    }
    if (nodes_[0].right == 0) {
        if (r.solutions++ == 0) r.first = partial;
        return;
    }
    // Minimum remaining values.
    std::size_t c = nodes_[0].right;
    for (auto j = nodes_[c].right; j != 0; j = nodes_[j].right)
        if (sizes_[j] < sizes_[c]) c = j;
    if (sizes_[c] == 0) return;
    cover(c);
    for (auto i = nodes_[c].down; i != c && r.complete; i = nodes_[i].down) {
        if (compatible_ && !std::all_of(partial.begin(), partial.end(),
                                        [&](std::size_t o) { return compatible_(o, nodes_[i].option); }))
            continue;
        partial.push_back(nodes_[i].option);
        for (auto j = nodes_[i].right; j != i; j = nodes_[j].right) cover(nodes_[j].column);
        search(r, partial, budget);
        for (auto j = nodes_[i].left; j != i; j = nodes_[j].left) uncover(nodes_[j].column);
        partial.pop_back();
    }
    uncover(c);
}

ExactCover::Result ExactCover::count(std::uint64_t budget) {
    Result r;
    r.complete = true;
    std::vector<std::size_t> partial;
    search(r, partial, budget);
    return r;
}

}  // namespace srgint
