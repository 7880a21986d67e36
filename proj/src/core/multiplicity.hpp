#ifndef MROOT_MULTIPLICITY_HPP
#define MROOT_MULTIPLICITY_HPP

#include <vector>

#include "poly.hpp"

namespace mroot {

struct MultiplicityResult {
    int mu = 0;
    int degree_cap_used = 0;
    bool stabilized = false;
    std::vector<int> dims;  // dual-space dimension per degree cap d = 1..
};

// Monomial exponent vectors with total degree <= d, graded order.
std::vector<Mono> monomials_upto(int n, int d);

// Local multiplicity of zeta as a root of f: dual-space kernel dimension of
// Macaulay-style matrices, stabilized over two consecutive degree caps.
// Rank decisions use a plain relative threshold, nothing from numrank.
MultiplicityResult multiplicity(const std::vector<Poly>& f, const std::vector<cd>& zeta,
                                int cap = 12, double rank_tol = 1e-8);

MultiplicityResult multiplicity(const PolySystem& f, const std::vector<cd>& zeta, int cap = 12);

// True iff mu(K_f at zeta) < mu(f at zeta), both stabilized. Rejects regular
// systems (mu = 1 cannot drop).
bool check_drop(const PolySystem& f, const SeriesSystem& K_f, const std::vector<cd>& zeta,
                int cap = 12);

}  // namespace mroot

#endif
