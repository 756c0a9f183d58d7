#pragma once

#include <cstddef>

#include "srgint/design.hpp"
#include "srgint/graph.hpp"

namespace srgint {

// Small families.
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);

/// K_{n x t}: vertex i*t + j is member j of part i.
Graph complete_multipartite(std::size_t n, std::size_t t);

/// Kneser graph K(5,2); vertices are the 2-subsets of {0..4} in lex order.
Graph petersen();
/// Line graph of K_n (n >= 4); vertices are 2-subsets of {0..n-1} in lex order.
Graph triangular(std::size_t n);
/// n x n rook's graph L_2(n) (n >= 2); vertex r*n + c.
Graph lattice_graph(std::size_t n);
/// Halved 5-cube: even-weight words of F_2^5, adjacent at Hamming distance 2.
/// Parameters (16,10,6,6), smallest eigenvalue -2.
Graph clebsch();
/// Cayley graph on Z_4^2 with connection set {±(1,0), ±(0,1), ±(1,1)}.
Graph shrikhande();

/// Robertson's pentagon/pentagram model. Vertex 5i+j is (i,j) of pentagon
/// P^i (edges j ~ j±1); vertex 25+5i+l is iRl of pentagram Q^i (edges l ~ l±2);
/// iRl is joined to (j, i*j + l mod 5).
Graph hoffman_singleton();
/// Vertex ids of P^i ∪ Q^i in hoffman_singleton().
VertexSet hoffman_singleton_petersen_part(std::size_t i);

/// Points 1..22, then the 77 blocks of S(4,7,23) through 0, then the 176
/// blocks avoiding 0, each in design order. Labels are "p:<i>", "b1:<block>"
/// and "b2:<block>" with blocks written over the labels 0..22.
Graph mclaughlin_complement();
/// Second subconstituent of mclaughlin_complement() at vertex 0.
Graph gq39_complement();
/// Complement of gq39_complement(): the collinearity graph of GQ(3,9).
Graph gq39();
/// Block graph of quasi_symmetric_2_21_6_4() with l2 = 2.
Graph sims_gewirtz_complement();
/// Block graph of sts15() with l2 = 1.
Graph sts15_block_graph();

/// Adds m mutually adjacent vertices joined to every vertex of g.
Graph extend_by_dominating_clique(const Graph& g, std::size_t m);

}  // namespace srgint
