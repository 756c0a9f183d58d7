#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srgint/exact.hpp"
#include "srgint/graph.hpp"

namespace srgint {

struct SrgParams {
    std::int64_t v = 0, k = 0, lambda = 0, mu = 0;

    bool feasible() const { return k * (k - lambda - 1) == (v - k - 1) * mu; }
    bool operator==(const SrgParams&) const = default;
    std::string str() const;
};

/// (p + q*sqrt(d)) / r with r > 0 and d squarefree (d == 1 only when q == 0).
struct QuadraticSurd {
    std::int64_t p = 0, q = 0, d = 1, r = 1;

    static QuadraticSurd integer(std::int64_t x) { return {x, 0, 1, 1}; }
    bool is_rational() const { return q == 0; }
    bool is_integer() const { return q == 0 && p % r == 0; }
    std::int64_t as_integer() const { return p / r; }
    Rational as_rational() const { return Rational(p, r); }

    bool operator==(const QuadraticSurd&) const = default;
    /// Exact comparison; both operands must share the same radicand or be rational.
    bool operator<(const QuadraticSurd& o) const;
    std::string str() const;
};

struct Eigenvalue {
    QuadraticSurd value;
    std::int64_t multiplicity = 0;
    bool operator==(const Eigenvalue&) const = default;
};

/// Eigenvalues sorted in decreasing order.
struct Spectrum {
    std::vector<Eigenvalue> eigenvalues;

    const QuadraticSurd& theta_min() const { return eigenvalues.back().value; }
    std::int64_t total_multiplicity() const;
    std::string str() const;
};

/// SRG parameters when g is regular with constant common-neighbour counts on
/// edges and on non-edges. Complete and edgeless graphs yield nothing.
std::optional<SrgParams> is_srg(const Graph& g);

/// A^2 == kI + lambda*A + mu*(J - I - A), checked entrywise in integers.
bool satisfies_srg_identity(const Graph& g, const SrgParams& p);

SrgParams complement_params(const SrgParams& p);

Spectrum srg_spectrum(const SrgParams& p);

/// A(g) + tI is positive semidefinite, decided in exact arithmetic.
bool psd_shift_check(const Graph& g, std::int64_t t);

/// A(g) + tI as an integer matrix.
IntMatrix shifted_adjacency(const Graph& g, std::int64_t t);

Graph subconstituent(const Graph& g, Vertex x, int i);

/// Upper bound 1 - k / theta_min on clique size. Requires rational theta_min.
Rational delsarte_bound(const SrgParams& p);

/// Number of vertices other than x, y adjacent to neither.
std::size_t common_nonneighbors(const Graph& g, Vertex x, Vertex y);

}  // namespace srgint
