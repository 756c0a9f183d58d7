#pragma once

#include <optional>
#include <vector>

#include "srgint/exact.hpp"
#include "srgint/graph.hpp"
#include "srgint/srg.hpp"

namespace srgint {

struct Partition {
    std::vector<VertexSet> cells;

    /// Throws unless cells are nonempty, pairwise disjoint and cover [0, n).
    void validate(std::size_t n) const;
    std::size_t cell_of(Vertex x) const;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Average-neighbour matrix q_ij = (1/|V_i|) * sum_{x in V_i} |N(x) ∩ V_j|.
RationalMatrix quotient_matrix(const Graph& g, const Partition& p);

/// The quotient matrix when every vertex of cell i sees exactly q_ij
/// neighbours in cell j; nothing otherwise.
std::optional<RationalMatrix> is_equitable(const Graph& g, const Partition& p);

/// True iff every eigenvalue of q lies in the SRG spectrum of `params`,
/// tested as m(q) == 0 for the minimal polynomial m of the graph. Quotients of
/// equitable partitions are diagonalisable, so this is the eigenvalue test.
bool quotient_eigenvalues_in_spectrum(const RationalMatrix& q, const SrgParams& params);

/// {{x}, N1(x), N2(x)}. Throws when x does not have eccentricity 2.
Partition vertex_partition(const Graph& g, Vertex x);

/// Primitive integer vector spanning ker(q - theta I), first nonzero entry
/// positive. Throws unless that kernel is one-dimensional.
std::vector<std::int64_t> integer_eigenvector(const RationalMatrix& q, const Rational& theta);

}  // namespace srgint
