#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "srgint/exact.hpp"
#include "srgint/graph.hpp"

namespace srgint {

/// A vector of R^24 stored as sqrt(8) times its coordinates. Coordinate 0 is
/// infinity and coordinate 1+i is the point i, for i = 0..22.
using LVec = std::array<std::int64_t, 24>;
using VectorSystem = std::vector<LVec>;

inline constexpr std::size_t coordinate_of(int label) { return static_cast<std::size_t>(label + 1); }

/// Sum of coordinate products; the true inner product is this over 8.
std::int64_t scaled_dot(const LVec& a, const LVec& b);
/// Inner product; throws when it is not an integer.
std::int64_t ip(const LVec& a, const LVec& b);

LVec operator+(const LVec& a, const LVec& b);
LVec operator-(const LVec& a, const LVec& b);
LVec operator*(std::int64_t c, const LVec& a);

/// (-3, 1^23) followed by (2^8, 0^16) on each of the 759 octads.
VectorSystem leech_generators();
/// (4, 4, 0^22): the entries sit at infinity and 0.
LVec a0();

/// Membership in the Leech lattice by the usual congruence description:
/// entries share a parity m, the sum is 4m mod 8, and the positions of each
/// residue class mod 4 form a Golay codeword.
bool in_leech(const LVec& v);

/// v - (v,a0)/4 * a0; throws when (v,a0) is odd.
LVec shorter_leech_project(const LVec& v);

/// Spanning set of the shorter Leech lattice: projections of the generators
/// v with (v,a0) even and of sums of two generators with odd (v,a0), plus
/// twice one odd generator.
VectorSystem shorter_leech_generators();

/// The 275 vectors a_i, b_B, c_B attached to the vertices of
/// mclaughlin_complement(), read from its vertex labels, in vertex order.
VectorSystem delta_275(const Graph& mcl);
/// u - a0/2 for each member; throws unless every (u,a0) equals 2.
VectorSystem delta_tilde(const VectorSystem& sys);

/// Integer Gram matrix; throws naming the first pair with a fractional product.
IntMatrix gram(const VectorSystem& sys);

/// Determinant of the lattice spanned by `sys` (Gram determinant of a Hermite
/// basis), with the dimension of that span.
struct LatticeDeterminant {
    std::size_t rank = 0;
    Rational determinant;
};
LatticeDeterminant lattice_determinant(const VectorSystem& sys);

/// One line of 24 integers per vector.
std::string vectors_to_text(const VectorSystem& sys);
VectorSystem vectors_from_text(const std::string& text);

}  // namespace srgint
