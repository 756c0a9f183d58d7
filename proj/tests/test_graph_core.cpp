#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "srgint/clique.hpp"
#include "srgint/constructions.hpp"
#include "srgint/graph6.hpp"
#include "srgint/partition.hpp"
#include "srgint/srg.hpp"

using namespace srgint;

namespace {

RationalMatrix rmat(std::initializer_list<std::initializer_list<int>> rows) {
    RationalMatrix m;
    for (auto r : rows) {
        m.emplace_back();
        for (auto x : r) m.back().emplace_back(x);
    }
    return m;
}

}  // namespace

TEST_CASE("is_srg agrees with parameters read off A^2") {
    const std::vector<Graph> gs = {cycle_graph(5), petersen(), complement(petersen()), triangular(5), lattice_graph(3),
                                   clebsch(), shrikhande(), complete_multipartite(2, 3), hoffman_singleton()};
    for (const auto& g : gs) {
        const auto p = is_srg(g);
        const auto o = oracle::srg_by_squaring(g);
        REQUIRE(p.has_value());
        REQUIRE(o.has_value());
        CHECK(p->v == o->v);
        CHECK(p->k == o->k);
        CHECK(p->lambda == o->lambda);
        CHECK(p->mu == o->mu);
    }
    CHECK(*is_srg(hoffman_singleton()) == SrgParams{50, 7, 0, 1});
    CHECK(*is_srg(cycle_graph(5)) == SrgParams{5, 2, 0, 1});
    CHECK_FALSE(is_srg(path_graph(3)).has_value());
    CHECK_FALSE(is_srg(complete_graph(5)).has_value());
    CHECK_FALSE(is_srg(empty_graph(4)).has_value());
}

TEST_CASE("complement and complement parameters") {
    CHECK(complement(complement(petersen())) == petersen());
    CHECK(complement(empty_graph(4)) == complete_graph(4));
    CHECK(*is_srg(complement(petersen())) == SrgParams{10, 6, 3, 4});
    CHECK(complement_params({56, 10, 0, 2}) == SrgParams{56, 45, 36, 36});
    CHECK(complement_params({50, 7, 0, 1}) == SrgParams{50, 42, 35, 36});
    CHECK(*is_srg(complement(hoffman_singleton())) == SrgParams{50, 42, 35, 36});
    CHECK(complement_params({6, 3, 0, 3}) == SrgParams{6, 2, 1, 0});
    CHECK_THROWS(complement_params({5, 4, 3, 4}));
}

TEST_CASE("srg_spectrum satisfies the trace identities") {
    const std::vector<SrgParams> ps = {{50, 7, 0, 1}, {275, 162, 105, 81}, {5, 2, 0, 1}, {10, 3, 0, 1},
                                       {16, 10, 6, 6}, {56, 45, 36, 36},   {112, 81, 60, 54}};
    for (const auto& p : ps) {
        const auto s = srg_spectrum(p);
        CHECK(s.total_multiplicity() == p.v);
        // tr A = 0 and tr A^2 = vk, evaluated in floating point from the surds.
        double tr1 = 0, tr2 = 0;
        for (const auto& e : s.eigenvalues) {
            const double x = (double(e.value.p) + double(e.value.q) * std::sqrt(double(e.value.d))) / double(e.value.r);
            tr1 += double(e.multiplicity) * x;
            tr2 += double(e.multiplicity) * x * x;
        }
        CHECK(std::abs(tr1) < 1e-9);
        CHECK(std::abs(tr2 - double(p.v * p.k)) < 1e-6);
    }
    const auto hosi = srg_spectrum({50, 7, 0, 1});
    REQUIRE(hosi.eigenvalues.size() == 3);
    CHECK(hosi.eigenvalues[0] == Eigenvalue{QuadraticSurd::integer(7), 1});
    CHECK(hosi.eigenvalues[1] == Eigenvalue{QuadraticSurd::integer(2), 28});
    CHECK(hosi.eigenvalues[2] == Eigenvalue{QuadraticSurd::integer(-3), 21});
    const auto mcl = srg_spectrum({275, 162, 105, 81});
    CHECK(mcl.eigenvalues[1] == Eigenvalue{QuadraticSurd::integer(27), 22});
    CHECK(mcl.eigenvalues[2] == Eigenvalue{QuadraticSurd::integer(-3), 252});
    const auto c5 = srg_spectrum({5, 2, 0, 1});
    CHECK(c5.eigenvalues[1] == Eigenvalue{QuadraticSurd{-1, 1, 5, 2}, 2});
    CHECK(c5.eigenvalues[2] == Eigenvalue{QuadraticSurd{-1, -1, 5, 2}, 2});
}

TEST_CASE("psd_shift_check") {
    CHECK(psd_shift_check(hoffman_singleton(), 3));
    CHECK_FALSE(psd_shift_check(hoffman_singleton(), 2));
    CHECK(psd_shift_check(complete_graph(5), 1));
    CHECK_FALSE(psd_shift_check(complete_graph(5), 0));
    // 6I - J is PSD on six points and not on seven.
    auto six_minus_j = [](std::size_t n) {
        IntMatrix m(n, n, -1);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 5;
        return m;
    };
    CHECK(is_positive_semidefinite(six_minus_j(6)));
    CHECK_FALSE(is_positive_semidefinite(six_minus_j(7)));
    CHECK(psd_shift_check(cycle_graph(5), 2));
    CHECK_FALSE(psd_shift_check(cycle_graph(5), 1));
}

TEST_CASE("subconstituents") {
    CHECK(*is_srg(subconstituent(mclaughlin_complement(), 0, 2)) == SrgParams{112, 81, 60, 54});
    CHECK(*is_srg(subconstituent(gq39_complement(), 0, 1)) == SrgParams{81, 60, 45, 42});
    CHECK(subconstituent(complete_graph(4), 0, 1) == complete_graph(3));
    CHECK_THROWS(subconstituent(complete_graph(4), 0, 2));
}

TEST_CASE("equitable partitions and quotients") {
    const auto h = hoffman_singleton();
    for (Vertex x = 0; x < h.order(); ++x) {
        const auto q = is_equitable(h, vertex_partition(h, x));
        REQUIRE(q.has_value());
        CHECK(*q == rmat({{0, 7, 0}, {1, 0, 6}, {0, 1, 6}}));
    }
    Partition pet{{hoffman_singleton_petersen_part(0), h.all_vertices() - hoffman_singleton_petersen_part(0)}};
    CHECK(*is_equitable(h, pet) == rmat({{3, 4}, {1, 6}}));
    CHECK(*is_equitable(petersen(), Partition{{petersen().all_vertices()}}) == rmat({{3}}));
    CHECK_THROWS(vertex_partition(cycle_graph(7), 0));

    // The quotient at any vertex of an SRG is [[0,k,0],[1,l,k-l-1],[0,m,k-m]].
    for (const auto& g : {petersen(), clebsch(), shrikhande(), sims_gewirtz_complement()}) {
        const auto p = *is_srg(g);
        const auto q = *is_equitable(g, vertex_partition(g, 0));
        CHECK(q == rmat({{0, int(p.k), 0},
                         {1, int(p.lambda), int(p.k - p.lambda - 1)},
                         {0, int(p.mu), int(p.k - p.mu)}}));
        CHECK(quotient_eigenvalues_in_spectrum(q, p));
    }
    CHECK(integer_eigenvector(rmat({{0, 7, 0}, {1, 0, 6}, {0, 1, 6}}), Rational(-3)) ==
          std::vector<std::int64_t>{21, -9, 1});
}

TEST_CASE("max clique and coclique against subset enumeration") {
    const std::vector<Graph> gs = {petersen(), cycle_graph(7), complete_graph(7), shrikhande(), clebsch(),
                                   lattice_graph(3), triangular(5), complete_multipartite(3, 2)};
    for (const auto& g : gs) {
        const auto c = max_clique(g);
        const auto a = max_coclique(g);
        CHECK(c.complete);
        CHECK(a.complete);
        CHECK(c.size() == oracle::largest_subset(g, oracle::induces_clique));
        CHECK(a.size() == oracle::largest_subset(g, oracle::induces_coclique));
        CHECK(is_clique(g, c.witness));
        CHECK(is_coclique(g, a.witness));
        // The witness is the lexicographically least maximum set.
        std::vector<std::size_t> least;
        oracle::for_each_subset(g.order(), c.size(), [&](const std::vector<std::size_t>& s) {
            if (least.empty() && oracle::induces_clique(g, s)) least = s;
        });
        CHECK(c.witness == least);
    }
    CHECK(max_coclique(petersen()).size() == 4);
    CHECK(max_clique(complete_graph(7)).size() == 7);
    CHECK(max_coclique(gq39_complement()).size() == 4);
    const auto partial = max_clique(hoffman_singleton(), 1);
    CHECK_FALSE(partial.complete);
}

TEST_CASE("Delsarte bound and common non-neighbours") {
    CHECK(delsarte_bound({112, 81, 60, 54}) == Rational(28));
    CHECK(delsarte_bound({50, 7, 0, 1}) == Rational(10, 3));
    CHECK(delsarte_bound({12, 9, 6, 9}) == Rational(4));
    const auto h = hoffman_singleton();
    CHECK(common_nonneighbors(h, 0, 1) == 36);
    CHECK(common_nonneighbors(complete_graph(4), 0, 1) == 0);
    CHECK(common_nonneighbors(cycle_graph(5), 0, 2) == 0);
    for (const auto& g : {petersen(), clebsch(), shrikhande(), h}) {
        const auto c = max_clique(g);
        const auto p = *is_srg(g);
        const auto theta = srg_spectrum(p).theta_min();
        if (theta.is_integer()) CHECK(Rational(c.size()) <= delsarte_bound(p));
    }
}

TEST_CASE("graph6 against an independent encoder") {
    CHECK(graph6_encode(complete_graph(3)) == "Bw");
    CHECK(oracle::graph6(complete_graph(3)) == "Bw");
    CHECK(graph6_decode("B?") == empty_graph(3));
    const std::vector<Graph> gs = {petersen(), hoffman_singleton(), cycle_graph(3), empty_graph(1), sims_gewirtz_complement(),
                                   gq39()};
    for (const auto& g : gs) {
        CHECK(graph6_encode(g) == oracle::graph6(g));
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
    CHECK(graph6_decode(">>graph6<<Bw\n") == complete_graph(3));
    try {
        graph6_decode("B");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }
    CHECK_THROWS_AS(graph6_decode("B\x01"), ParseError);
}

TEST_CASE("JSON graph round trip keeps labels") {
    const auto g = mclaughlin_complement();
    const auto back = graph_from_json(graph_to_json(g));
    CHECK(back == g);
    CHECK(back.labels() == g.labels());
}

TEST_CASE("exact linear algebra") {
    IntMatrix m(3, 3);
    m(0, 0) = 2, m(0, 1) = 1, m(1, 0) = 1, m(1, 1) = 2, m(2, 2) = 0;
    CHECK(exact_rank(m) == 2);
    CHECK(exact_determinant({{2, 1}, {1, 2}}) == 3);
    CHECK(exact_rank(shifted_adjacency(gq39_complement(), 3)) == 22);
    CHECK(exact_rank(shifted_adjacency(hoffman_singleton(), 3)) == 29);
}
