#include "srgint/search.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "srgint/clique.hpp"
#include "srgint/srg.hpp"

namespace srgint {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Found: return "found";
        case Verdict::Unsat: return "unsat";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

nlohmann::json SearchResult::to_json() const {
    nlohmann::json j{{"verdict", to_string(verdict)}, {"nodes", nodes}, {"depth_histogram", depth_histogram}, {"cuts", cuts}};
    if (certificate) j["rows"] = certificate->n.rows();
    return j;
}

std::vector<Vertex> default_vertex_order(const Graph& g) {
    const auto n = g.order();
    std::vector<Vertex> order = max_clique(g).witness;
    VertexSet placed(n);
    for (auto x : order) placed.insert(x);
    while (order.size() < n) {
        Vertex best = n;
        std::size_t best_score = 0;
        for (Vertex x = 0; x < n; ++x) {
            if (placed.contains(x)) continue;
            const auto score = g.neighbours(x).intersection_count(placed);
            if (best == n || score > best_score) {
                best = x;
                best_score = score;
            }
        }
        order.push_back(best);
        placed.insert(best);
    }
    return order;
}

namespace {

std::int64_t isqrt(std::int64_t v) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Nonincreasing positive tuples whose squares sum to `rem`, at most `slots` long.
void fresh_tails(std::int64_t rem, std::int64_t cap, std::size_t slots, std::vector<std::int64_t>& cur,
                 std::vector<std::vector<std::int64_t>>& out) {
    if (rem == 0) {
        out.push_back(cur);
        return;
    }
    if (slots == 0) return;
    for (std::int64_t x = std::min(cap, isqrt(rem)); x >= 1; --x) {
        cur.push_back(x);
        fresh_tails(rem - x * x, x, slots - 1, cur, out);
        cur.pop_back();
    }
}

class Searcher {
public:
    Searcher(const Graph& g, const SearchOptions& o) : g_(g), o_(o) {
        norm_ = o.s * o.t;
        bound_ = isqrt(norm_);
        max_rows_ = static_cast<std::size_t>(norm_) * g.order();
        order_ = o.order.empty() ? default_vertex_order(g) : o.order;
        if (order_.size() != g.order()) throw std::invalid_argument("vertex order must list every vertex once");
        std::vector<bool> seen(g.order(), false);
        for (auto x : order_) {
            if (x >= g.order() || seen[x]) throw std::invalid_argument("vertex order must list every vertex once");
            seen[x] = true;
        }
        for (std::int64_t rem = 0; rem <= norm_; ++rem) {
            std::vector<std::int64_t> cur;
            tails_.emplace_back();
            fresh_tails(rem, bound_, static_cast<std::size_t>(rem), cur, tails_.back());
        }
        result_.depth_histogram.assign(g.order() + 1, 0);
        tied_.assign(max_rows_ + 1, false);
        const auto p = is_srg(g);
        state_.mu_at_least_10 = p && p->mu >= 10;
    }

    SearchResult run() {
        const bool complete = place(0);
        if (result_.verdict != Verdict::Found) result_.verdict = complete && !exhausted_ ? Verdict::Unsat : Verdict::Unknown;
        for (const auto& c : cut_names_) result_.cuts.push_back(c);
        return result_;
    }

private:
    bool tick(std::size_t depth) {
        ++result_.nodes;
        ++result_.depth_histogram[depth];
        if (result_.nodes > o_.budget) exhausted_ = true;
        return !exhausted_;
    }

    // Returns false once the search should stop (found or out of budget).
    bool place(std::size_t depth) {
        if (!tick(depth)) return false;
        if (depth == order_.size()) return finish();
        const Vertex v = order_[depth];
        std::vector<std::int64_t> targets(depth, 0);
        for (std::size_t i = 0; i < depth; ++i) targets[i] = g_.adjacent(order_[i], v) ? o_.s : 0;
        // Suffix sums of squares of each placed column over the active rows.
        std::vector<std::vector<std::int64_t>> suffix(depth, std::vector<std::int64_t>(active_ + 1, 0));
        for (std::size_t u = 0; u < depth; ++u)
            for (std::size_t r = active_; r-- > 0;) suffix[u][r] = suffix[u][r + 1] + state_.columns[u][r] * state_.columns[u][r];
        std::vector<std::int64_t> col(active_, 0), dots(depth, 0);
        return enumerate(depth, 0, norm_, col, dots, targets, suffix);
    }

    bool enumerate(std::size_t depth, std::size_t row, std::int64_t rem, std::vector<std::int64_t>& col,
                   std::vector<std::int64_t>& dots, const std::vector<std::int64_t>& targets,
                   const std::vector<std::vector<std::int64_t>>& suffix) {
        if (row == active_) {
            for (std::size_t u = 0; u < depth; ++u)
                if (dots[u] != targets[u]) return true;
            for (const auto& tail : tails_[static_cast<std::size_t>(rem)]) {
                if (active_ + tail.size() > max_rows_) continue;
                if (!commit(depth, col, tail)) return false;
            }
            return true;
        }
        const std::int64_t hi = std::min(isqrt(rem), tied_[row] && row > 0 ? col[row - 1] : bound_);
        for (std::int64_t x = hi; x >= -isqrt(rem); --x) {
            if (!tick(depth)) return false;
            const std::int64_t left = rem - x * x;
            bool ok = true;
            for (std::size_t u = 0; u < depth && ok; ++u) {
                const auto d = dots[u] + x * state_.columns[u][row];
                const auto gap = targets[u] - d;
                ok = gap * gap <= left * suffix[u][row + 1];
            }
            if (!ok) continue;
            for (std::size_t u = 0; u < depth; ++u) dots[u] += x * state_.columns[u][row];
            col[row] = x;
            const bool go = enumerate(depth, row + 1, left, col, dots, targets, suffix);
            for (std::size_t u = 0; u < depth; ++u) dots[u] -= x * state_.columns[u][row];
            col[row] = 0;
            if (!go) return false;
        }
        return true;
    }

    bool commit(std::size_t depth, const std::vector<std::int64_t>& col, const std::vector<std::int64_t>& tail) {
        const auto old_active = active_;
        const auto old_tied = tied_;
        std::vector<std::int64_t> full(max_rows_, 0);
        std::copy(col.begin(), col.end(), full.begin());
        std::copy(tail.begin(), tail.end(), full.begin() + static_cast<std::ptrdiff_t>(active_));
        for (std::size_t r = 1; r < active_; ++r) tied_[r] = tied_[r] && col[r] == col[r - 1];
        for (std::size_t k = 0; k < tail.size(); ++k) tied_[active_ + k] = k > 0 && tail[k] == tail[k - 1];
        active_ += tail.size();
        state_.placed.push_back(order_[depth]);
        state_.columns.push_back(std::move(full));

        bool go = true;
        PruneDecision d = o_.use_extra_rules ? prune(state_, g_, o_.s, o_.t) : PruneDecision{};
        if (!d.keep)
            cut_names_.insert(d.reason);
        else
            go = place(depth + 1);

        state_.placed.pop_back();
        state_.columns.pop_back();
        active_ = old_active;
        tied_ = old_tied;
        return go;
    }

    bool finish() {
        Certificate c;
        c.s = o_.s;
        c.t = o_.t;
        c.n = IntMatrix(active_, g_.order());
        for (std::size_t i = 0; i < order_.size(); ++i)
            for (std::size_t r = 0; r < active_; ++r) c.n(r, order_[i]) = state_.columns[i][r];
        if (!verify_certificate(g_, c).accepted) throw std::logic_error("search produced an invalid certificate");
        result_.certificate = std::move(c);
        result_.verdict = Verdict::Found;
        return false;
    }

    const Graph& g_;
    SearchOptions o_;
    std::int64_t norm_ = 0, bound_ = 0;
    std::size_t max_rows_ = 0;
    std::vector<Vertex> order_;
    std::vector<std::vector<std::vector<std::int64_t>>> tails_;
    SearchState state_;
    std::size_t active_ = 0;
    std::vector<bool> tied_;
    SearchResult result_;
    std::set<std::string> cut_names_;
    bool exhausted_ = false;
};

}  // namespace

SearchResult find_representation(const Graph& g, const SearchOptions& opts) {
    if (opts.s < 1 || opts.t < 1) throw std::invalid_argument("s and t must be positive");
    if (!psd_shift_check(g, opts.t))
        throw std::domain_error("A + " + std::to_string(opts.t) + "I is not positive semidefinite");
    if (g.order() == 0) {
        SearchResult r;
        r.verdict = Verdict::Found;
        r.certificate = Certificate{opts.s, opts.t, IntMatrix(0, 0)};
        return r;
    }
    Searcher s(g, opts);
    return s.run();
}

std::vector<std::vector<std::int64_t>> canonical_column_enumerator(std::int64_t s, std::int64_t t, std::size_t active) {
    const auto norm = s * t;
    const auto bound = isqrt(norm);
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> head(active, 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t rem) -> void {
        if (i == active) {
            std::vector<std::vector<std::int64_t>> tails;
            std::vector<std::int64_t> cur;
            fresh_tails(rem, bound, static_cast<std::size_t>(rem), cur, tails);
            for (const auto& tail : tails) {
                auto v = head;
                v.insert(v.end(), tail.begin(), tail.end());
                out.push_back(std::move(v));
            }
            return;
        }
        for (std::int64_t x = isqrt(rem); x >= -isqrt(rem); --x) {
            head[i] = x;
            self(self, i + 1, rem - x * x);
        }
        head[i] = 0;
    };
    rec(rec, 0, norm);
    return out;
}

namespace {

bool equal_closed_neighbourhoods(const Graph& g, Vertex x, Vertex y) {
    auto a = g.neighbours(x), b = g.neighbours(y);
    a.insert(x);
    b.insert(y);
    return a == b;
}

}  // namespace

PruneDecision prune(const SearchState& state, const Graph& g, std::int64_t s, std::int64_t t) {
    if (state.placed.empty()) return {};
    const auto last = state.columns.size() - 1;
    const Vertex v = state.placed[last];
    const auto& cv = state.columns[last];

    if (s == 1 && t == 3) {
        bool mu_rule = false;
        if (state.mu_at_least_10) {
            mu_rule = *state.mu_at_least_10;
        } else {
            const auto p = is_srg(g);
            mu_rule = p && p->mu >= 10;
        }
        for (std::size_t i = 0; i < last; ++i) {
            const auto& cu = state.columns[i];
            std::size_t shared = 0;
            for (std::size_t r = 0; r < cv.size() && r < cu.size(); ++r) shared += cv[r] != 0 && cu[r] != 0;
            const Vertex u = state.placed[i];
            if (g.adjacent(u, v) && shared == 3 && !equal_closed_neighbourhoods(g, u, v))
                return {false, "adjacent columns share three positions"};
            if (mu_rule && !g.adjacent(u, v) && shared == 0)
                return {false, "non-adjacent columns share no position while mu >= 10"};
        }
    }

    if (s == 2 && t == 3) {
        for (std::size_t r = 0; r < cv.size(); ++r) {
            if (cv[r] == 0) continue;
            bool abs2 = false;
            std::vector<Vertex> chosen{v};
            for (std::size_t i = 0; i < state.columns.size(); ++i) {
                const auto e = r < state.columns[i].size() ? state.columns[i][r] : 0;
                if (e == 0) continue;
                abs2 = abs2 || std::abs(e) == 2;
                const Vertex u = state.placed[i];
                if (u == v) continue;
                if (std::none_of(chosen.begin(), chosen.end(), [&](Vertex w) { return g.adjacent(u, w); })) chosen.push_back(u);
            }
            if (static_cast<std::int64_t>(chosen.size()) > coclique_bound_for_row(abs2))
                return {false, "row support contains a coclique above the bound"};
        }
    }

    if (state.placed.size() == g.order()) {
        const auto rows = cv.size();
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<std::int64_t> row(g.order(), 0);
            for (std::size_t i = 0; i < state.columns.size(); ++i)
                row[state.placed[i]] = r < state.columns[i].size() ? state.columns[i][r] : 0;
            if (!norm_inequality_check(g, s, -t, row)) return {false, "row violates the norm inequality"};
        }
    }
    return {};
}

}  // namespace srgint
