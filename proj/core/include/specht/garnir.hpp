#pragma once

#include "specht/tableaux.hpp"

namespace specht {

// Data attached to a Garnir node A = (a,b,m): the belt of nodes to the right
// of A in row a and to the left of (a+1,b) in row a+1, tiled greedily by
// horizontal e-bricks whose leftmost residue equals res(A).
struct GarnirData {
    Node node;
    std::vector<Node> belt;                     // row a left to right, then row a+1 left to right
    std::vector<std::vector<Node>> bricks;      // labelled bottom-left to top-right
    int k = 0;                                  // total number of bricks
    int f = 0;                                  // bricks lying in row a
};

// Nodes A of the shape such that the node directly below A is also in the shape.
std::vector<Node> garnir_nodes(const SkewShape& shape);

GarnirData garnir_belt(const SkewShape& shape, const Node& A);

// The Garnir tableau g^A: agrees with the leading tableau off the belt, and the
// belt values are redistributed in order along row a+1 then row a.
SkewTableau garnir_tableau(const SkewShape& shape, const Node& A);

// All C(k,f) tableaux obtained by distributing the brick value runs of g^A over
// the brick positions, in lexicographic subset order.  The first member is the
// minimal one t^A and the last is g^A itself; all members except g^A are
// standard and all share the residue sequence of g^A.
std::vector<SkewTableau> garnir_set(const SkewShape& shape, const Node& A);

// Every standard member t of the Garnir set satisfies
//   deg t = deg(s_r g^A) + d_r(i)   with r = g^A(A) - 1 and i = i(g^A),
// where d_r(i) = -a_{i_r, i_{r+1}} is the degree of the crossing at r.
bool check_garnir_degree_lemma(const SkewShape& shape, const Node& A);

// The standard members of the Garnir set are exactly the standard tableaux
// dominated by g^A in the Bruhat order that share its residue sequence.
bool check_garnir_set_description(const SkewShape& shape, const Node& A);

// ASCII picture: '.' marks inner nodes, '*' belt nodes outside every brick,
// digits label bricks, 'o' everything else.
std::string render_garnir(const SkewShape& shape, const GarnirData& data);

}  // namespace specht
