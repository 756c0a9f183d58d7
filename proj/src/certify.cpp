#include "srgint/certify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "srgint/clique.hpp"
#include "srgint/constructions.hpp"
#include "srgint/design.hpp"
#include "srgint/graph6.hpp"
#include "srgint/srg.hpp"

namespace srgint {

nlohmann::json CertificateVerdict::to_json() const {
    nlohmann::json j{{"accepted", accepted}};
    if (mismatch) {
        j["mismatch"] = {mismatch->first, mismatch->second};
        j["expected"] = expected;
        j["found"] = found;
    }
    return j;
}

CertificateVerdict verify_certificate(const Graph& g, const Certificate& c) {
    if (c.n.cols() != g.order())
        throw std::invalid_argument("certificate has " + std::to_string(c.n.cols()) + " columns for a graph on " +
                                    std::to_string(g.order()) + " vertices");
    const auto gram = c.n.gram_of_columns();
    CertificateVerdict v;
    for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y = 0; y < g.order(); ++y) {
            const std::int64_t want = c.s * (x == y ? c.t : (g.adjacent(x, y) ? 1 : 0));
            if (gram(x, y) != want) {
                v.mismatch = {x, y};
                v.expected = want;
                v.found = gram(x, y);
                return v;
            }
        }
    v.accepted = true;
    return v;
}

std::string certificate_to_text(const Certificate& c) {
    std::ostringstream out;
    out << c.s << ' ' << c.t << ' ' << c.n.rows() << ' ' << c.n.cols() << '\n';
    for (std::size_t i = 0; i < c.n.rows(); ++i) {
        for (std::size_t j = 0; j < c.n.cols(); ++j) out << (j ? " " : "") << c.n(i, j);
        out << '\n';
    }
    return out.str();
}

Certificate certificate_from_text(const std::string& text) {
    std::istringstream in(text);
    Certificate c;
    std::size_t rows = 0, cols = 0;
    if (!(in >> c.s >> c.t >> rows >> cols)) throw ParseError("certificate: missing 's t rows cols' header", 0);
    if (c.s < 1 || c.t < 1) throw ParseError("certificate: s and t must be positive", 0);
    c.n = IntMatrix(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (!(in >> c.n(i, j)))
                throw ParseError("certificate: truncated matrix", in.eof() ? text.size() : static_cast<std::size_t>(in.tellg()));
    std::string extra;
    if (in >> extra) throw ParseError("certificate: trailing data", static_cast<std::size_t>(in.tellg()));
    return c;
}

Certificate knt_certificate(std::size_t n, std::size_t t) {
    if (n < 2 || t < 1) throw std::domain_error("knt_certificate needs n >= 2 and t >= 1");
    const std::size_t pairs = t * (t - 1) / 2;
    Certificate c;
    c.s = 1;
    c.t = static_cast<std::int64_t>(t);
    c.n = IntMatrix(1 + n * pairs, n * t);
    // Row of e_{i,l,j} (l < j) within part i.
    auto row = [&](std::size_t i, std::size_t l, std::size_t j) {
        const std::size_t before = l * t - l * (l + 1) / 2;  // pairs (l', j') with l' < l
        return 1 + i * pairs + before + (j - l - 1);
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            const auto col = i * t + j;
            c.n(0, col) = 1;
            for (std::size_t l = 0; l < j; ++l) c.n(row(i, l, j), col) = -1;
            for (std::size_t l = j + 1; l < t; ++l) c.n(row(i, j, l), col) = 1;
        }
    return c;
}

Certificate geometric_certificate(const Graph& g, const std::vector<VertexSet>& cliques) {
    for (auto [x, y] : g.edges()) {
        std::size_t cover = 0;
        for (const auto& c : cliques) cover += c.contains(x) && c.contains(y);
        if (cover != 1)
            throw std::domain_error("edge {" + std::to_string(x) + "," + std::to_string(y) + "} lies in " +
                                    std::to_string(cover) + " cliques");
    }
    std::vector<std::size_t> per_vertex(g.order(), 0);
    for (const auto& c : cliques) {
        for (auto x : c.elements()) ++per_vertex[x];
        for (auto x : c.elements())
            for (auto y : c.elements())
                if (x < y && !g.adjacent(x, y)) throw std::domain_error("a listed set is not a clique");
    }
    if (g.order() == 0 || std::adjacent_find(per_vertex.begin(), per_vertex.end(), std::not_equal_to<>()) != per_vertex.end())
        throw std::domain_error("vertices lie in differing numbers of cliques");
    Certificate c;
    c.s = 1;
    c.t = static_cast<std::int64_t>(per_vertex.front());
    c.n = IntMatrix(cliques.size(), g.order());
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (auto x : cliques[i].elements()) c.n(i, x) = 1;
    return c;
}

std::vector<VertexSet> edge_cliques(const Graph& g) {
    std::set<std::vector<Vertex>> seen;
    for (auto [x, y] : g.edges()) {
        auto s = g.neighbours(x) & g.neighbours(y);
        s.insert(x);
        s.insert(y);
        auto key = s.elements();
        if (!is_clique(g, key)) throw std::domain_error("common neighbourhood of an edge is not a clique");
        seen.insert(std::move(key));
    }
    std::vector<VertexSet> out;
    for (const auto& key : seen) {
        VertexSet s(g.order());
        for (auto x : key) s.insert(x);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<VertexSet> sts15_point_cliques() {
    const auto d = sts15();
    std::vector<VertexSet> out;
    for (std::size_t p = 0; p < d.v; ++p) {
        VertexSet s(d.num_blocks());
        for (std::size_t b = 0; b < d.num_blocks(); ++b)
            if ((d.blocks[b] >> p) & 1u) s.insert(b);
        out.push_back(std::move(s));
    }
    return out;
}

Certificate sims_gewirtz_certificate() { return {2, 3, incidence_matrix(quasi_symmetric_2_21_6_4())}; }

std::int64_t row_support_bound(const Graph& g, std::int64_t s, std::int64_t t, std::size_t rank) {
    if (rank == 0) throw std::domain_error("row_support_bound: rank is 0");
    return s * t * static_cast<std::int64_t>(g.order()) / static_cast<std::int64_t>(rank);
}

Profile profile_of(const Graph& g, const std::vector<std::int64_t>& r, Vertex x) {
    if (r.size() != g.order()) throw std::invalid_argument("profile_of: row length mismatch");
    Profile p;
    p.gamma = r[x];
    for (Vertex y = 0; y < g.order(); ++y) {
        p.sigma += r[y];
        if (y == x) continue;
        (g.adjacent(x, y) ? p.delta : p.zeta) += r[y];
    }
    return p;
}

std::int64_t eigenvector_row_constraint(const RationalMatrix& q, const std::vector<std::int64_t>& u,
                                        std::int64_t theta, const Partition& p,
                                        const std::vector<std::int64_t>& r) {
    if (q.size() != u.size() || p.cells.size() != u.size())
        throw std::invalid_argument("eigenvector_row_constraint: size mismatch");
    for (std::size_t i = 0; i < q.size(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < q.size(); ++j) s += q[i][j] * u[j];
        if (s != Rational(theta * u[i])) throw std::domain_error("eigenvector_row_constraint: u is not an eigenvector");
    }
    std::int64_t total = 0;
    for (std::size_t i = 0; i < p.cells.size(); ++i) {
        std::int64_t cell = 0;
        for (auto x : p.cells[i].elements()) cell += r.at(x);
        total += u[i] * cell;
    }
    return total;
}

bool norm_inequality_holds(std::int64_t sum_gamma_delta, std::int64_t norm, std::int64_t s, std::int64_t theta_floor) {
    return Rational(sum_gamma_delta) >= Rational(norm * norm, s) + theta_floor * norm;
}

bool norm_inequality_check(const Graph& g, std::int64_t s, std::int64_t theta_floor,
                           const std::vector<std::int64_t>& r, bool orthogonal_to_other_rows) {
    std::int64_t norm = 0, sum = 0;
    for (Vertex x = 0; x < g.order(); ++x) {
        norm += r.at(x) * r[x];
        sum += r[x] * profile_of(g, r, x).delta;
    }
    if (orthogonal_to_other_rows) return Rational(sum) == Rational(norm * norm, s) + theta_floor * norm;
    return norm_inequality_holds(sum, norm, s, theta_floor);
}

std::int64_t coclique_bound_for_row(bool has_abs2_entry) { return has_abs2_entry ? 3 : 6; }

const std::map<std::pair<int, int>, int>& RamseyTable::values() {
    static const std::map<std::pair<int, int>, int> table = {
        {{3, 3}, 6}, {{3, 4}, 9}, {{3, 5}, 14}, {{3, 6}, 18}, {{3, 7}, 23}, {{4, 4}, 18},
    };
    return table;
}

int RamseyTable::get(int a, int b) {
    const auto& t = values();
    auto it = t.find({std::min(a, b), std::max(a, b)});
    if (it == t.end()) throw std::out_of_range("no tabulated value for R(" + std::to_string(a) + "," + std::to_string(b) + ")");
    return it->second;
}

std::int64_t profile_support(const Profile& p) {
    const auto g = std::abs(p.gamma);
    return (g == 2 ? 1 : g) + std::abs(p.delta) + std::abs(p.zeta);
}

std::set<Profile> profile_solutions(const ProfileQuery& q) {
    if (q.u[2] == 0) throw std::domain_error("profile_solutions: third eigenvector entry must be nonzero");
    std::set<Profile> out;
    const std::int64_t limit = q.support_cap ? *q.support_cap : q.search_limit;
    for (auto gamma : q.gamma_domain)
        for (std::int64_t delta = -limit; delta <= limit; ++delta) {
            const std::int64_t rest = q.u[0] * gamma + q.u[1] * delta;
            if (rest % q.u[2] != 0) continue;
            Profile p{gamma, delta, -rest / q.u[2], 0};
            p.sigma = p.gamma + p.delta + p.zeta;
            if (q.support_cap && profile_support(p) > *q.support_cap) continue;
            if (q.zeta_cap && std::abs(p.zeta) > *q.zeta_cap) continue;
            if (q.sigma_modulus && p.sigma % *q.sigma_modulus != 0) continue;
            if (q.sigma_nonneg && p.sigma < 0) continue;
            if (q.sigma_value && p.sigma != *q.sigma_value) continue;
            out.insert(p);
        }
    return out;
}

namespace {

std::int64_t integer_theta_min(const Graph& g) {
    const auto params = is_srg(g);
    if (!params) throw std::domain_error("graph is not strongly regular");
    const auto theta = srg_spectrum(*params).theta_min();
    if (!theta.is_integer()) throw std::domain_error("smallest eigenvalue is not an integer");
    return theta.as_integer();
}

}  // namespace

DivisibilityConstraint coclique_divisibility_constraint(const Graph& g, const VertexSet& coclique) {
    Partition p{{coclique, g.all_vertices() - coclique}};
    p.validate(g.order());
    const auto q = is_equitable(g, p);
    if (!q) throw std::domain_error("coclique partition is not equitable");
    const auto theta = integer_theta_min(g);
    DivisibilityConstraint d;
    d.quotient = *q;
    d.eigenvector = integer_eigenvector(*q, Rational(theta));
    // a*sum_C + b*sum_rest = 0 gives (a - b)*sum_C = -b*sigma.
    const auto a = d.eigenvector[0], b = d.eigenvector[1];
    const auto diff = std::abs(a - b);
    d.modulus = diff == 0 ? 1 : diff / std::gcd(diff, std::abs(b));
    return d;
}

ProfileQuery hosi_profile_query() {
    ProfileQuery q;
    q.u = {21, -9, 1};
    q.gamma_domain = {-1, 1};
    q.support_cap = RamseyTable::get(3, 7) - 1;
    q.zeta_cap = RamseyTable::get(3, 6) - 1;
    q.sigma_nonneg = true;
    return q;
}

ProfileQuery hosi_abs2_query() {
    ProfileQuery q;
    q.u = {21, -9, 1};
    q.gamma_domain = {-2, 2};
    q.support_cap = RamseyTable::get(3, 4) - 1;
    return q;
}

ProfileQuery gq39c_profile_query() {
    ProfileQuery q;
    q.u = {135, -5, 9};
    q.gamma_domain = {-1, 1};
    q.support_cap = 30;
    q.sigma_modulus = 28;
    q.sigma_nonneg = true;
    return q;
}

ProfileQuery gq39c_abs2_query() {
    ProfileQuery q;
    q.u = {135, -5, 9};
    q.gamma_domain = {-2, 2};
    q.sigma_modulus = 28;
    return q;
}

std::set<Profile> hosi_expected_profiles() {
    return {{-1, -1, 12, 10}, {1, 3, 6, 10}, {1, 4, 15, 20}, {1, 2, -3, 0}, {-1, -2, 3, 0}};
}

std::set<Profile> gq39c_expected_profiles() {
    return {{1, 27, 0, 28}, {-1, 9, 20, 28}, {1, 9, -10, 0}, {-1, -9, 10, 0}};
}

nlohmann::json profiles_to_json(const std::set<Profile>& s) {
    auto a = nlohmann::json::array();
    for (const auto& p : s) a.push_back(p.to_json());
    return a;
}

Gq39ContradictionReport gq39c_contradiction() {
    const auto g = gq39_complement();
    Gq39ContradictionReport r;
    r.rank = exact_rank(shifted_adjacency(g, 3));
    r.support_bound = row_support_bound(g, 2, 3, r.rank);

    const auto coc = max_coclique(g);
    r.max_coclique = static_cast<std::int64_t>(coc.size());
    VertexSet c(g.order());
    for (auto x : coc.witness) c.insert(x);
    const auto d = coclique_divisibility_constraint(g, c);
    r.modulus = d.modulus;
    r.eigenvector = d.eigenvector;

    auto q1 = gq39c_profile_query();
    q1.sigma_modulus = r.modulus;
    q1.support_cap = r.support_bound;
    r.profiles = profile_solutions(q1);

    auto q2 = gq39c_abs2_query();
    q2.sigma_modulus = r.modulus;
    const auto abs2 = profile_solutions(q2);
    r.abs2_min_support = INT64_MAX;
    for (const auto& p : abs2) r.abs2_min_support = std::min(r.abs2_min_support, profile_support(p));

    // A vertex y with delta = 9 restricts to a row on the first
    // subconstituent with sum 9, which has some entry +1; the eigenvector
    // there fixes the profile of that entry. delta = -9 is the negated case.
    const auto sub = subconstituent(g, 0, 1);
    const auto qsub = *is_equitable(sub, vertex_partition(sub, 0));
    const auto usub = integer_eigenvector(qsub, Rational(-3));
    r.subconstituent_eigenvector = usub;
    ProfileQuery q3;
    q3.u = {usub[0], usub[1], usub[2]};
    q3.gamma_domain = {1};
    q3.sigma_value = 9;
    const auto sub_profiles = profile_solutions(q3);
    r.subconstituent_support = sub_profiles.empty() ? 0 : INT64_MAX;
    for (const auto& p : sub_profiles) r.subconstituent_support = std::min(r.subconstituent_support, profile_support(p));

    // sigma = 0 rows have profile (+-1, +-9, -+10) everywhere on the support,
    // so sum gamma*delta = 9|supp| with |supp| >= 1 + 17 + 10.
    r.sigma_zero_excluded = true;
    for (std::int64_t n = 1 + r.subconstituent_support + 10; n <= r.support_bound; ++n)
        if (norm_inequality_holds(9 * n, n, 2, -3)) r.sigma_zero_excluded = false;
    return r;
}

nlohmann::json Gq39ContradictionReport::to_json() const {
    return {{"check", "GQbar(3,9) row support bound versus forced support"},
            {"rank", rank},
            {"support_bound", support_bound},
            {"coclique_size", max_coclique},
            {"coclique_eigenvector", eigenvector},
            {"sigma_modulus", modulus},
            {"profiles", profiles_to_json(profiles)},
            {"abs2_min_support", abs2_min_support},
            {"subconstituent_eigenvector", subconstituent_eigenvector},
            {"subconstituent_support", subconstituent_support},
            {"sigma_zero_excluded", sigma_zero_excluded},
            {"contradiction", contradiction()}};
}

}  // namespace srgint
