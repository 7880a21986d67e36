#ifndef MROOT_NEWTON_HPP
#define MROOT_NEWTON_HPP

#include <vector>

#include "deflate.hpp"
#include "poly.hpp"

namespace mroot {

struct NewtonRun {
    std::vector<std::vector<cd>> iterates;
    std::vector<double> residual_norms;
    std::vector<double> step_norms;
    std::vector<double> quadratic_ratios;  // step_{k+1} / step_k^2
    bool converged = false;
    DeflationTrace trace;  // the deflation backing the run (last one if refreshed)
};

struct NewtonOptions {
    DeflationOptions deflation;
    int max_iters = 30;
    double tol = 1e-14;
    bool redeflate = false;  // rebuild the deflated system at every iterate
};

// One classical Newton step of an n-equation series system at x.
std::vector<cd> newton_step(const SeriesSystem& g, const std::vector<cd>& x);

// Deflate once at x0 and iterate Newton on the fixed extracted system.
// A failed deflation returns x0 itself with converged = false.
NewtonRun singular_newton(const PolySystem& f, const std::vector<cd>& x0,
                          const NewtonOptions& opt);

}  // namespace mroot

#endif
