#pragma once

// Independent brute-force reference implementations. They only touch
// Graph::order() and Graph::adjacent() so they share no logic with the
// library code they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "srgint/graph.hpp"

namespace oracle {

using srgint::Graph;
using Matrix = std::vector<std::vector<std::int64_t>>;

inline Matrix adjacency(const Graph& g) {
    const auto n = g.order();
    Matrix a(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = g.adjacent(i, j) ? 1 : 0;
    return a;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    const auto n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    Matrix c(n, std::vector<std::int64_t>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            if (a[i][l])
                for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    return c;
}

struct Params {
    std::int64_t v, k, lambda, mu;
};

/// Parameters read off A^2 directly, or nothing when A^2 is not of SRG shape.
inline std::optional<Params> srg_by_squaring(const Graph& g) {
    const auto a = adjacency(g);
    const auto a2 = multiply(a, a);
    const auto n = g.order();
    std::optional<std::int64_t> k, lam, mu;
    auto agree = [](std::optional<std::int64_t>& slot, std::int64_t v) {
        if (!slot) slot = v;
        return *slot == v;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool ok = i == j ? agree(k, a2[i][j]) : (a[i][j] ? agree(lam, a2[i][j]) : agree(mu, a2[i][j]));
            if (!ok) return std::nullopt;
        }
    if (!k || !lam || !mu) return std::nullopt;
    return Params{static_cast<std::int64_t>(n), *k, *lam, *mu};
}

/// Calls f on every k-subset of {0..n-1} in lexicographic order.
inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> s(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
        if (pos == k) {
            f(s);
            return;
        }
        for (std::size_t i = from; i + (k - pos) <= n; ++i) {
            s[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

inline bool induces_clique(const Graph& g, const std::vector<std::size_t>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

inline bool induces_coclique(const Graph& g, const std::vector<std::size_t>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

/// Largest k with a k-subset passing `pred`, by increasing k.
inline std::size_t largest_subset(const Graph& g, bool (*pred)(const Graph&, const std::vector<std::size_t>&)) {
    std::size_t best = 0;
    for (std::size_t k = 1; k <= g.order(); ++k) {
        bool any = false;
        for_each_subset(g.order(), k, [&](const std::vector<std::size_t>& s) {
            if (!any && pred(g, s)) any = true;
        });
        if (!any) break;
        best = k;
    }
    return best;
}

/// 5-sets inducing a 5-cycle. The only 2-regular graph on five vertices is
/// the 5-cycle, so degree counting suffices.
inline bool induces_pentagon(const Graph& g, const std::vector<std::size_t>& s) {
    for (auto x : s) {
        int d = 0;
        for (auto y : s) d += g.adjacent(x, y);
        if (d != 2) return false;
    }
    return true;
}

inline std::size_t count_induced_pentagons(const Graph& g) {
    std::size_t c = 0;
    for_each_subset(g.order(), 5, [&](const std::vector<std::size_t>& s) { c += induces_pentagon(g, s); });
    return c;
}

/// graph6 written straight from the format description: N(n) as one byte
/// n + 63 for n <= 62, then the upper triangle column by column in 6-bit
/// groups, each group plus 63.
inline std::string graph6(const Graph& g) {
    const auto n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else {
        out += '~';
        for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
    }
    std::vector<int> bits;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
    while (bits.size() % 6) bits.push_back(0);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = 2 * v + bits[i + b];
        out += static_cast<char>(v + 63);
    }
    return out;
}

/// Plain backtracking for integer columns with N^T N = s(A + tI). Columns are
/// placed in vertex order; each may use any already opened coordinate plus
/// newly opened ones. Fresh coordinates have no earlier entries, so their
/// values may be taken positive and nonincreasing without loss. Inner
/// products with earlier columns are bounded by Cauchy-Schwarz while the
/// opened coordinates are filled; nothing else is assumed.
class RepresentationOracle {
public:
    RepresentationOracle(const Graph& g, std::int64_t s, std::int64_t t) : g_(g), s_(s), t_(t) {}

    bool exists() {
        cols_.clear();
        return place(0, 0);
    }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool place(std::size_t x, std::size_t open) {
        ++nodes_;
        if (x == g_.order()) return true;
        std::vector<std::int64_t> col(open, 0), dot(x, 0), target(x);
        for (std::size_t y = 0; y < x; ++y) target[y] = g_.adjacent(x, y) ? s_ : 0;
        // tail[y][i]: squared norm of column y over opened coordinates >= i.
        std::vector<std::vector<std::int64_t>> tail(x, std::vector<std::int64_t>(open + 1, 0));
        for (std::size_t y = 0; y < x; ++y)
            for (std::size_t i = open; i-- > 0;) {
                const auto v = i < cols_[y].size() ? cols_[y][i] : 0;
                tail[y][i] = tail[y][i + 1] + v * v;
            }
        auto entry = [&](std::size_t y, std::size_t i) { return i < cols_[y].size() ? cols_[y][i] : std::int64_t{0}; };
        std::function<bool(std::size_t, std::int64_t)> fill = [&](std::size_t i, std::int64_t left) -> bool {
            for (std::size_t y = 0; y < x; ++y) {
                const auto gap = target[y] - dot[y];
                if (gap * gap > left * tail[y][i]) return false;
            }
            if (i == open) return fresh(x, col, left, left);
            for (std::int64_t v = -2 * s_ * t_; v <= 2 * s_ * t_; ++v) {
                if (v * v > left) continue;
                col[i] = v;
                for (std::size_t y = 0; y < x; ++y) dot[y] += v * entry(y, i);
                const bool ok = fill(i + 1, left - v * v);
                for (std::size_t y = 0; y < x; ++y) dot[y] -= v * entry(y, i);
                if (ok) return true;
            }
            col[i] = 0;
            return false;
        };
        return fill(0, s_ * t_);
    }

    // Appends positive nonincreasing values with squares summing to `left`.
    bool fresh(std::size_t x, std::vector<std::int64_t>& col, std::int64_t left, std::int64_t cap) {
        if (left == 0) {
            cols_.push_back(col);
            const bool ok = place(x + 1, col.size());
            cols_.pop_back();
            return ok;
        }
        for (std::int64_t v = cap; v >= 1; --v) {
            if (v * v > left) continue;
            col.push_back(v);
            const bool ok = fresh(x, col, left - v * v, v);
            col.pop_back();
            if (ok) return true;
        }
        return false;
    }

    const Graph& g_;
    std::int64_t s_, t_;
    std::vector<std::vector<std::int64_t>> cols_;
    std::uint64_t nodes_ = 0;
};

}  // namespace oracle
