#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace srgint {

// Exact cover by dancing links (Knuth's Algorithm X). Items are 0..n-1; every
// item is primary. Options are lists of item indices.
class ExactCover {
public:
    explicit ExactCover(std::size_t items);

    std::size_t add_option(const std::vector<std::size_t>& items);

    /// Optional side condition: options a and b may only be chosen together
    /// when compatible(a, b) holds.
    void set_compatibility(std::function<bool(std::size_t, std::size_t)> compatible) { compatible_ = std::move(compatible); }

    struct Result {
        bool complete = false;  // false when the node budget ran out
        std::uint64_t solutions = 0;
        std::uint64_t nodes = 0;
        std::vector<std::size_t> first;  // option indices of the first solution found
    };

    Result count(std::uint64_t budget = UINT64_MAX);

private:
    struct Node {
        std::size_t left, right, up, down, column, option;
    };

    void cover(std::size_t c);
    void uncover(std::size_t c);
    void search(Result& r, std::vector<std::size_t>& partial, std::uint64_t budget);

    std::vector<Node> nodes_;
    std::vector<std::size_t> sizes_;
    std::size_t items_;
    std::size_t options_ = 0;
    std::function<bool(std::size_t, std::size_t)> compatible_;
};

}  // namespace srgint
