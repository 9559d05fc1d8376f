#pragma once

#include "spextree/graph.hpp"

namespace spextree {

/// K_k joined with (n-k) independent vertices, plus p independent edges among the
/// independent side placed on (k,k+1), (k+2,k+3), ...
///
/// Requires n > k > 0 and 0 <= p <= (n-k)/2.
Graph construct_S(int n, int k, int p);

/// Complete bipartite K_{a,b} plus p independent edges inside the b-side.
/// The a-side is 0..a-1; matched pairs are (a,a+1), (a+2,a+3), ...
Graph construct_K_ab_p(int a, int b, int p);

/// The universal candidate for trees of order l: S_{n,(l-2)/2}^0 for even l,
/// S_{n,(l-3)/2}^1 for odd l. Requires n >= l >= 4.
Graph construct_G_nl(int n, int l);

struct SParameters {
    int n;
    int k;
    int p;
};

/// Parameters (n,k,p) of construct_G_nl(n,l).
SParameters G_nl_parameters(int n, int l);

}  // namespace spextree
