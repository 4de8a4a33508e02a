#pragma once

#include "matroidkl/matroid.hpp"

namespace matroidkl {

Matroid uniform(int k, int n);
Matroid boolean_matroid(int n);

// V_{k,h,n} = U_{k-1,h} (elements 0..h-1) ⊕ U_{1,n-h} (elements h..n-1);
// {0..h-1} is its unique large stressed hyperplane.
Matroid v_matroid(int k, int h, int n);

Matroid graphic(const GraphSpec& g);

// Graphic matroid of K_{1,1,n}; edges ordered ab, a-v_1..a-v_n, b-v_1..b-v_n.
Matroid thagomizer(int n);
// Graphic matroid of K_{2,n}; edges ordered a-v_1..a-v_n, b-v_1..b-v_n.
Matroid complete_bipartite_2n(int n);
// Hub joined to every vertex of a path on n vertices; spokes 0..n-1 first,
// then the n-1 path edges.
Matroid fan(int n);
// Hub joined to every vertex of an n-cycle; spokes 0..n-1, rim n..2n-1.
Matroid wheel(int n);
// wheel(n) with its rim (the unique circuit-hyperplane) relaxed.
Matroid whirl(int n);

// Rank-(r+1) matroid of the points of PG(r,q); q in {2,3,4,5,7,8,9}.
Matroid projective_geometry(int r, int q);

}  // namespace matroidkl
