// Acceptance run: one PASS/FAIL line per criterion, with timings.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "srgint/certify.hpp"
#include "srgint/clique.hpp"
#include "srgint/constructions.hpp"
#include "srgint/design.hpp"
#include "srgint/lattice.hpp"
#include "srgint/partition.hpp"
#include "srgint/pentagons.hpp"
#include "srgint/search.hpp"
#include "srgint/srg.hpp"

using namespace srgint;

namespace {

// Collects failed checks for one criterion.
struct Checker {
    std::vector<std::string> failures;
    std::ostringstream notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<void(Checker&)> body;
};

RationalMatrix rmat(std::initializer_list<std::initializer_list<int>> rows) {
    RationalMatrix m;
    for (auto r : rows) {
        m.emplace_back();
        for (auto x : r) m.back().emplace_back(x);
    }
    return m;
}

struct NamedSrg {
    std::string name;
    Graph g;
    SrgParams want;
};

std::vector<NamedSrg> zoo() {
    return {
        {"hoffman-singleton", hoffman_singleton(), {50, 7, 0, 1}},
        {"sims-gewirtz-complement", sims_gewirtz_complement(), {56, 45, 36, 36}},
        {"mclaughlin-complement", mclaughlin_complement(), {275, 162, 105, 81}},
        {"gq39-complement", gq39_complement(), {112, 81, 60, 54}},
        {"gq39", gq39(), {112, 30, 2, 10}},
        {"sts15-block-graph", sts15_block_graph(), {35, 18, 9, 9}},
    };
}

std::vector<NamedSrg> small_srgs() {
    return {
        {"C5", cycle_graph(5), {5, 2, 0, 1}},
        {"petersen", petersen(), {10, 3, 0, 1}},
        {"T(5)", triangular(5), {10, 6, 3, 4}},
        {"L2(3)", lattice_graph(3), {9, 4, 1, 2}},
        {"clebsch", clebsch(), {16, 10, 6, 6}},
        {"shrikhande", shrikhande(), {16, 6, 2, 2}},
        {"K2x3", complete_multipartite(2, 3), {6, 3, 0, 3}},
        {"K3x3", complete_multipartite(3, 3), {9, 6, 3, 6}},
    };
}

void golay_chain(Checker& c) {
    const auto s24 = golay_s_5_8_24();
    c.expect(s24.num_blocks() == 759, "S(5,8,24) has 759 blocks");
    c.expect(s24.block_size() == 8, "S(5,8,24) block size 8");
    c.expect(t_design_lambda(s24, 5) == std::optional<int>(1), "every one of the 42504 5-sets lies in exactly one block");
    const auto s23 = steiner_4_7_23();
    c.expect(s23.num_blocks() == 253, "S(4,7,23) has 253 blocks");
    c.expect(t_design_lambda(s23, 4) == std::optional<int>(1), "S(4,7,23) is a 4-(23,7,1) design");
    c.expect(intersection_numbers(s23) == std::set<int>{1, 3}, "S(4,7,23) intersection numbers {1,3}");
    const auto q = quasi_symmetric_2_21_6_4();
    c.expect(q.num_blocks() == 56, "residual design has 56 blocks");
    c.expect(t_design_lambda(q, 2) == std::optional<int>(4), "residual design is a 2-(21,6,4) design");
    c.expect(intersection_numbers(q) == std::set<int>{0, 2}, "residual design intersection numbers {0,2}");
    c.notes << "759 / 253 / 56 blocks";
}

void srg_zoo(Checker& c) {
    for (const auto& [name, g, want] : zoo()) {
        const auto p = is_srg(g);
        c.expect(p.has_value() && *p == want, name + " is_srg " + want.str());
        c.expect(satisfies_srg_identity(g, want), name + " satisfies the A^2 identity");
        c.notes << name << " " << (p ? p->str() : "none") << "; ";
    }
}

void gram_mcl(Checker& c) {
    const auto m = mclaughlin_complement();
    const auto g = gram(delta_tilde(delta_275(m)));
    const auto want = shifted_adjacency(m, 3);
    c.expect(g.rows() == 275 && g.cols() == 275, "275 x 275 Gram matrix");
    std::size_t bad = 0;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) bad += g(i, j) != want(i, j);
    c.expect(bad == 0, std::to_string(bad) + " entries differ from A + 3I");
    c.notes << "75625 entries compared, " << bad << " differ";
}

void sims_gewirtz(Checker& c) {
    const auto cert = sims_gewirtz_certificate();
    c.expect(cert.n.rows() == 21 && cert.n.cols() == 56, "incidence matrix is 21 x 56");
    c.expect(cert.s == 2 && cert.t == 3, "scale 2, shift 3");
    const auto v = verify_certificate(sims_gewirtz_complement(), cert);
    c.expect(v.accepted, "I^T I = 2A + 6I " + v.to_json().dump());
    c.notes << v.to_json().dump();
}

void hosi_facts(Checker& c) {
    const auto h = hoffman_singleton();
    const auto want_q = rmat({{0, 7, 0}, {1, 0, 6}, {0, 1, 6}});
    for (Vertex x = 0; x < h.order(); ++x) {
        const auto q = is_equitable(h, vertex_partition(h, x));
        c.expect(q && *q == want_q, "quotient at vertex " + std::to_string(x));
    }
    const auto profiles = profile_solutions(hosi_profile_query());
    c.expect(profiles == hosi_expected_profiles(), "profile set " + profiles_to_json(profiles).dump());
    c.expect(profile_solutions(hosi_abs2_query()).empty(), "|gamma| = 2 branch is empty");
    const auto np = count_pentagons(h);
    c.expect(np == 1260, "pentagon count " + std::to_string(np));
    const auto parts = pentagon_partitions(h);
    c.expect(parts.complete && parts.count == 126, "pentagon partitions " + std::to_string(parts.count));

    // Canonical partition {P^i} ∪ {Q^j}: every P^i ∪ Q^j induces the Petersen graph.
    std::size_t unions = 0;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            VertexSet s(50);
            for (std::size_t k = 0; k < 5; ++k) {
                s.insert(5 * i + k);
                s.insert(25 + 5 * j + k);
            }
            unions += is_petersen(h.induced(s));
        }
    c.expect(unions == 25, std::to_string(unions) + " of 25 cross unions are Petersen");
    VertexSet p0(50);
    for (Vertex k = 0; k < 5; ++k) p0.insert(k);
    const auto rep = verify_pentagon_structure(h, p0);
    c.expect(rep.ok && rep.petersen_unions == 25, "pentagon structure around P^0 " + rep.to_json().dump());

    const auto subs = enumerate_petersen_subgraphs(h);
    std::vector<VertexSet> fixed;
    for (std::size_t i = 0; i < 5; ++i) fixed.push_back(hoffman_singleton_petersen_part(i));
    const auto meeting = petersen_meeting_all(subs, fixed, 2);
    c.expect(meeting.empty(), std::to_string(meeting.size()) + " Petersen subgraphs meet every P^i ∪ Q^i in 2 vertices");
    c.notes << "pentagons " << np << ", partitions " << parts.count << ", Petersen subgraphs " << subs.size()
            << ", meeting all in 2: " << meeting.size();
}

void gq_contradiction(Checker& c) {
    const auto r = gq39c_contradiction();
    c.expect(r.modulus == 28, "modulus " + std::to_string(r.modulus));
    c.expect(r.eigenvector == std::vector<std::int64_t>{27, -1}, "coclique eigenvector (27,-1)");
    c.expect(r.profiles == gq39c_expected_profiles(), "profile set " + profiles_to_json(r.profiles).dump());
    c.expect(r.rank == 22, "rank of A + 3I is 22");
    c.expect(r.support_bound == 30, "row support bound 672/22 -> 30");
    c.expect(r.abs2_min_support == 31, "|gamma| = 2 branch needs support 31");
    c.expect(r.support_bound < r.abs2_min_support, "30 < 31");
    c.expect(r.contradiction(), "contradiction established");
    c.notes << r.to_json().dump();
}

void search_verdicts(Checker& c) {
    struct Case {
        std::string name;
        Graph g;
        std::int64_t s, t;
        Verdict want;
    };
    const std::vector<Case> cases = {
        {"C5", cycle_graph(5), 1, 2, Verdict::Found},
        {"K2x3", complete_multipartite(2, 3), 1, 3, Verdict::Found},
        {"K3x3", complete_multipartite(3, 3), 1, 3, Verdict::Found},
        {"T(5)", triangular(5), 1, 2, Verdict::Found},
        {"L2(3)", lattice_graph(3), 1, 2, Verdict::Found},
        {"petersen", petersen(), 2, 2, Verdict::Found},
        {"shrikhande", shrikhande(), 2, 2, Verdict::Found},
        {"petersen", petersen(), 1, 2, Verdict::Unsat},
        {"shrikhande", shrikhande(), 1, 2, Verdict::Unsat},
    };
    for (const auto& k : cases) {
        SearchOptions o;
        o.s = k.s;
        o.t = k.t;
        const auto r = find_representation(k.g, o);
        const auto label = k.name + "(" + std::to_string(k.s) + "," + std::to_string(k.t) + ")";
        c.expect(r.verdict == k.want, label + " gave " + to_string(r.verdict));
        if (r.verdict == Verdict::Found) {
            // Independent recheck: multiply N^T N again here.
            const auto& n = r.certificate->n;
            bool ok = n.cols() == k.g.order();
            for (Vertex x = 0; ok && x < k.g.order(); ++x)
                for (Vertex y = 0; ok && y < k.g.order(); ++y) {
                    std::int64_t dot = 0;
                    for (std::size_t i = 0; i < n.rows(); ++i) dot += n(i, x) * n(i, y);
                    ok = dot == k.s * (x == y ? k.t : std::int64_t(k.g.adjacent(x, y)));
                }
            c.expect(ok, label + " certificate recheck");
        }
        c.notes << label << " " << to_string(r.verdict) << " (" << r.nodes << " nodes); ";
    }
}

void property_suites(Checker& c) {
    auto all = zoo();
    for (auto& s : small_srgs()) all.push_back(std::move(s));

    // Pair identity: v = 2k - lambda + |W| on edges, 2 + 2k - mu + |W| off edges.
    std::size_t pairs = 0;
    for (const auto& [name, g, p] : all)
        for (Vertex x = 0; x < g.order(); ++x)
            for (Vertex y = x + 1; y < g.order(); ++y) {
                const auto w = static_cast<std::int64_t>(common_nonneighbors(g, x, y));
                const auto rhs = g.adjacent(x, y) ? 2 * p.k - p.lambda + w : 2 + 2 * p.k - p.mu + w;
                c.expect(rhs == p.v, name + " pair identity");
                ++pairs;
            }

    // lambda_s integrality on the Steiner systems.
    const std::vector<std::pair<std::string, DesignParams>> steiner = {
        {"S(5,8,24)", {5, 24, 8, 1}}, {"S(4,7,23)", {4, 23, 7, 1}}, {"S(3,6,22)", {3, 22, 6, 1}}, {"STS(15)", {2, 15, 3, 1}}};
    for (const auto& [name, p] : steiner)
        for (int s = 1; s <= p.t; ++s) {
            const auto l = lambda_s(p, s);
            c.expect(denominator(l) == 1, name + " lambda_" + std::to_string(s) + " = " + to_string(l));
        }
    c.expect(steiner_3_6_22().num_blocks() == 77, "S(3,6,22) has 77 blocks");

    // Delta and Delta tilde invariants.
    const auto a = a0();
    const auto delta = delta_275(mclaughlin_complement());
    for (const auto& u : delta) c.expect(ip(u, u) == 4 && ip(u, a) == 2, "Delta norm 4 and (u,a0) = 2");
    for (const auto& u : delta_tilde(delta)) c.expect(ip(u, u) == 3 && ip(u, a) == 0, "Delta tilde norm 3 and (u,a0) = 0");

    // Complement parameters are an involution.
    for (const auto& [name, g, p] : all) {
        if (p.k + 1 == p.v) continue;
        const auto cp = complement_params(p);
        c.expect(complement_params(cp) == p, name + " complement_params involution");
        c.expect(is_srg(complement(g)) == std::optional<SrgParams>(cp), name + " complement parameters");
    }

    // Certificates give zero row residual for equitable partitions with
    // theta_min = -t in the quotient, and satisfy the norm inequality.
    struct Cert {
        std::string name;
        Graph g;
        Certificate cert;
    };
    std::vector<Cert> certs = {
        {"K2x3", complete_multipartite(2, 3), knt_certificate(2, 3)},
        {"K3x3", complete_multipartite(3, 3), knt_certificate(3, 3)},
        {"STS(15)", sts15_block_graph(), geometric_certificate(sts15_block_graph(), sts15_point_cliques())},
        {"GQ(3,9)", gq39(), geometric_certificate(gq39(), edge_cliques(gq39()))},
        {"sims-gewirtz", sims_gewirtz_complement(), sims_gewirtz_certificate()},
    };
    for (const auto& [name, g, s, t] : std::vector<std::tuple<std::string, Graph, int, int>>{
             {"petersen", petersen(), 2, 2}, {"shrikhande", shrikhande(), 2, 2}, {"T(5)", triangular(5), 1, 2}}) {
        SearchOptions o;
        o.s = s;
        o.t = t;
        certs.push_back({name + " (searched)", g, *find_representation(g, o).certificate});
    }
    std::size_t rows = 0;
    for (const auto& [name, g, cert] : certs) {
        c.expect(verify_certificate(g, cert).accepted, name + " certificate verifies");
        for (Vertex x = 0; x < g.order(); x += 1 + g.order() / 8) {
            const auto p = vertex_partition(g, x);
            const auto q = *is_equitable(g, p);
            const auto u = integer_eigenvector(q, Rational(-cert.t));
            for (std::size_t i = 0; i < cert.n.rows(); ++i) {
                std::vector<std::int64_t> r(cert.n.cols());
                for (std::size_t j = 0; j < r.size(); ++j) r[j] = cert.n(i, j);
                c.expect(eigenvector_row_constraint(q, u, -cert.t, p, r) == 0, name + " row residual");
                c.expect(norm_inequality_check(g, cert.s, -cert.t, r), name + " norm inequality");
                ++rows;
            }
        }
    }
    c.notes << pairs << " vertex pairs, " << rows << " certificate rows checked";
}

void dominating_clique_extension(Checker& c) {
    const auto g = extend_by_dominating_clique(mclaughlin_complement(), 3);
    c.expect(g.order() == 278, "278 vertices");
    const auto md = g.min_degree();
    c.expect(md == 165, "minimum degree " + std::to_string(md));
    c.expect(psd_shift_check(g, 3), "A + 3I is positive semidefinite");
    c.expect(!psd_shift_check(g, 2), "A + 2I is not positive semidefinite");
    c.notes << "minimum degree " << md << " (the stated value is 166; construction gives 162 + 3 = 165)";
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Golay chain S(5,8,24) -> S(4,7,23) -> 2-(21,6,4)", 10, golay_chain},
        {2, "SRG zoo parameters via the A^2 identity", 30, srg_zoo},
        {3, "Gram of Delta tilde equals A(McL complement) + 3I", 5, gram_mcl},
        {4, "Sims-Gewirtz complement incidence certificate", 5, sims_gewirtz},
        {5, "Hoffman-Singleton quotient, profiles, pentagons, Petersen obstruction", 300, hosi_facts},
        {6, "GQbar(3,9) divisibility, profiles and support contradiction", 60, gq_contradiction},
        {7, "Search verdicts on the small exceptional graphs", 600, search_verdicts},
        {8, "Property suites", 120, property_suites},
        {9, "McL complement plus a dominating 3-clique", 120, dominating_clique_extension},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Checker c;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.body(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > cr.limit_seconds)
            c.failures.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(cr.limit_seconds) + " s");
        const bool ok = c.failures.empty();
        failed += !ok;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f s", secs);
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " [" << timing << "]\n";
        std::cout << "     " << c.notes.str() << "\n";
        for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) std::cout << "     failed: " << c.failures[i] << "\n";
    }
    std::cout << (failed ? "FAIL" : "PASS") << " overall: " << (criteria.size() - failed) << "/" << criteria.size()
              << " criteria\n";
    return failed ? 1 : 0;
}
