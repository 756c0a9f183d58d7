#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "srgint/exact.hpp"
#include "srgint/graph.hpp"
#include "srgint/partition.hpp"

namespace srgint {

/// Claims N^T N = s(A + tI); columns of N are indexed by vertices.
struct Certificate {
    std::int64_t s = 1, t = 1;
    IntMatrix n;
};

struct CertificateVerdict {
    bool accepted = false;
    std::optional<std::pair<Vertex, Vertex>> mismatch;  // first entry in row-major order
    std::int64_t expected = 0, found = 0;

    nlohmann::json to_json() const;
};

/// Exact check of N^T N = s(A + tI). Throws when N has the wrong column count.
CertificateVerdict verify_certificate(const Graph& g, const Certificate& c);

/// Header "s t rows cols", then the entries of N row by row.
std::string certificate_to_text(const Certificate& c);
Certificate certificate_from_text(const std::string& text);

/// Columns e - sum_{l<j} e_{i,l,j} + sum_{j<l} e_{i,j,l} for vertex i*t+j of
/// complete_multipartite(n, t); coordinate 0 is e.
Certificate knt_certificate(std::size_t n, std::size_t t);
/// Clique-vertex incidence matrix with s = 1 and t the number of cliques per
/// vertex. Throws listing an edge that is not covered exactly once, or when
/// vertices lie in differing numbers of cliques.
Certificate geometric_certificate(const Graph& g, const std::vector<VertexSet>& cliques);
/// The cliques {x, y} ∪ (N(x) ∩ N(y)) over all edges, deduplicated; throws if
/// one of them is not a clique.
std::vector<VertexSet> edge_cliques(const Graph& g);
/// For sts15_block_graph(): the 15 sets of blocks through a common point.
std::vector<VertexSet> sts15_point_cliques();
/// Incidence matrix of quasi_symmetric_2_21_6_4() with s = 2, t = 3.
Certificate sims_gewirtz_certificate();

/// floor(s * t * |V| / rank): some row of any certificate has at most this
/// many nonzero entries. Throws on rank 0.
std::int64_t row_support_bound(const Graph& g, std::int64_t s, std::int64_t t, std::size_t rank);

/// (gamma, delta, zeta, sigma) of a row at a vertex; sigma is the sum of all
/// entries, which equals gamma + delta + zeta.
struct Profile {
    std::int64_t gamma = 0, delta = 0, zeta = 0, sigma = 0;
    auto operator<=>(const Profile&) const = default;
    nlohmann::json to_json() const { return nlohmann::json::array({gamma, delta, zeta, sigma}); }
};
Profile profile_of(const Graph& g, const std::vector<std::int64_t>& r, Vertex x);

/// sum_i u_i * sum_{x in V_i} r_x after checking q u = theta u exactly.
std::int64_t eigenvector_row_constraint(const RationalMatrix& q, const std::vector<std::int64_t>& u,
                                        std::int64_t theta, const Partition& p,
                                        const std::vector<std::int64_t>& r);

/// sum_x gamma_x delta_x >= (r.r)^2 / s + floor(theta_min) (r.r), in exact
/// rationals. With `orthogonal_to_other_rows` the row is assumed orthogonal
/// to every other certificate row, which turns the bound into the equality
/// (r.r)^2 / s = r (A - floor(theta_min) I) r^T.
bool norm_inequality_check(const Graph& g, std::int64_t s, std::int64_t theta_floor,
                           const std::vector<std::int64_t>& r, bool orthogonal_to_other_rows = false);
/// The same inequality from the two scalars sum gamma*delta and r.r.
bool norm_inequality_holds(std::int64_t sum_gamma_delta, std::int64_t norm, std::int64_t s, std::int64_t theta_floor);

/// Largest coclique in the support graph of a row when s = 2 and
/// theta_min is in [-3,-2): 3 if the row has an entry of absolute value 2, else 6.
std::int64_t coclique_bound_for_row(bool has_abs2_entry);

struct RamseyTable {
    static const std::map<std::pair<int, int>, int>& values();
    static int get(int a, int b);  // throws for unknown pairs
};

struct ProfileQuery {
    std::array<std::int64_t, 3> u{};
    std::vector<std::int64_t> gamma_domain;
    /// Bound on |gamma| + |delta| + |zeta|, counted as |gamma| - 1 + ... when |gamma| = 2.
    std::optional<std::int64_t> support_cap;
    std::optional<std::int64_t> zeta_cap;  // |zeta| <= zeta_cap
    std::optional<std::int64_t> sigma_modulus;
    bool sigma_nonneg = false;
    std::optional<std::int64_t> sigma_value;
    /// Search range for delta when no support cap is given.
    std::int64_t search_limit = 200;
};

/// Minimal support of a vertex with the given profile: |gamma| - 1 + |delta|
/// + |zeta| when |gamma| = 2, else |gamma| + |delta| + |zeta|.
std::int64_t profile_support(const Profile& p);

std::set<Profile> profile_solutions(const ProfileQuery& q);

struct DivisibilityConstraint {
    std::int64_t modulus = 0;
    std::vector<std::int64_t> eigenvector;
    RationalMatrix quotient;
};
/// From the equitable partition {C, V - C} with theta_min as quotient
/// eigenvalue: every certificate row sum is divisible by `modulus`.
/// Throws when the partition is not equitable or theta_min is not a quotient eigenvalue.
DivisibilityConstraint coclique_divisibility_constraint(const Graph& g, const VertexSet& coclique);

/// Queries and expected answers for the two non-2-integrability arguments.
ProfileQuery hosi_profile_query();
ProfileQuery hosi_abs2_query();
ProfileQuery gq39c_profile_query();
ProfileQuery gq39c_abs2_query();
std::set<Profile> hosi_expected_profiles();
std::set<Profile> gq39c_expected_profiles();

nlohmann::json profiles_to_json(const std::set<Profile>& s);

/// Machine-checkable steps of the argument that GQbar(3,9) is not 2-integrable.
struct Gq39ContradictionReport {
    std::size_t rank = 0;                 // rank of A + 3I
    std::int64_t support_bound = 0;       // floor(672 / rank)
    std::int64_t modulus = 0;             // divisibility of row sums from a 4-coclique
    std::vector<std::int64_t> eigenvector;
    std::set<Profile> profiles;           // |gamma| = 1 branch
    std::int64_t abs2_min_support = 0;    // least support in the |gamma| = 2 branch
    std::vector<std::int64_t> subconstituent_eigenvector;
    std::int64_t subconstituent_support = 0;  // 1 + 12 + 4 from the (20,-1,2) eigenvector
    bool sigma_zero_excluded = false;     // norm inequality rules out sigma = 0 rows
    std::int64_t max_coclique = 0;

    bool contradiction() const { return support_bound < abs2_min_support && sigma_zero_excluded; }
    nlohmann::json to_json() const;
};
Gq39ContradictionReport gq39c_contradiction();

}  // namespace srgint
