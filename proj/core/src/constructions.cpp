#include "spextree/constructions.hpp"

#include <string>

#include "spextree/error.hpp"

namespace spextree {

namespace {

std::string str(int v) { return std::to_string(v); }

}  // namespace

Graph construct_S(int n, int k, int p) {
    if (k <= 0)
        throw RangeError("S(n,k,p) requires k > 0, got k=" + str(k));
    if (n <= k)
        throw RangeError("S(n,k,p) requires n > k, got n=" + str(n) + ", k=" + str(k));
    if (p < 0 || p > (n - k) / 2)
        throw RangeError("S(n,k,p) requires 0 <= p <= floor((n-k)/2) = " + str((n - k) / 2) +
                         ", got p=" + str(p));
    return join(complete_graph(k), matching_graph(n - k, p));
}

Graph construct_K_ab_p(int a, int b, int p) {
    if (a < 1)
        throw RangeError("K(a,b,p) requires a >= 1, got a=" + str(a));
    if (b < 1)
        throw RangeError("K(a,b,p) requires b >= 1, got b=" + str(b));
    if (p < 0 || p > b / 2)
        throw RangeError("K(a,b,p) requires 0 <= p <= floor(b/2) = " + str(b / 2) +
                         ", got p=" + str(p));
    return join(empty_graph(a), matching_graph(b, p));
}

SParameters G_nl_parameters(int n, int l) {
    if (l < 4)
        throw RangeError("G(n,l) requires l >= 4, got l=" + str(l));
    if (n < l)
        throw RangeError("G(n,l) requires n >= l, got n=" + str(n) + ", l=" + str(l));
    if (l % 2 == 0)
        return {n, (l - 2) / 2, 0};
    return {n, (l - 3) / 2, 1};
}

Graph construct_G_nl(int n, int l) {
    auto [nn, k, p] = G_nl_parameters(n, l);
    return construct_S(nn, k, p);
}

}  // namespace spextree
