#include "newton.hpp"

#include <cmath>
#include <limits>

namespace mroot {

namespace {

double vec_norm(const std::vector<cd>& v) {
    double acc = 0.0;
    for (const auto& z : v) acc += std::norm(z);
    return std::sqrt(acc);
}

}  // namespace

std::vector<cd> newton_step(const SeriesSystem& g, const std::vector<cd>& x) {
    const int n = g.nvars();
    if (static_cast<int>(g.series.size()) != n)
        throw std::invalid_argument("newton_step: system must be square");
    std::vector<cd> u(n);
    for (int j = 0; j < n; ++j) u[j] = x[j] - g.center[j];

    Eigen::VectorXcd val(n);
    Eigen::MatrixXcd Dg(n, n);
    for (int i = 0; i < n; ++i) {
        val(i) = g.series[i].eval(u);
        for (int j = 0; j < n; ++j) Dg(i, j) = g.series[i].diff(j).eval(u);
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Dg);
    const auto& sv = svd.singularValues();
    double tau = n * std::numeric_limits<double>::epsilon() * sv(0);
    if (sv(n - 1) <= tau) throw std::domain_error("newton_step: singular Jacobian");

    Eigen::VectorXcd delta = Dg.partialPivLu().solve(val);
    std::vector<cd> out(n);
    for (int j = 0; j < n; ++j) out[j] = x[j] - delta(j);
    return out;
}

NewtonRun singular_newton(const PolySystem& f, const std::vector<cd>& x0,
                          const NewtonOptions& opt) {
    NewtonRun run;
    run.iterates.push_back(x0);
    run.residual_norms.push_back(vec_norm(eval_system(f.polys, x0)));

    run.trace = deflation_sequence(f, x0, opt.deflation);
    if (run.trace.status != DeflationStatus::completed) return run;

    std::vector<cd> x = x0;
    for (int it = 0; it < opt.max_iters; ++it) {
        if (opt.redeflate && it > 0) {
            auto tr = deflation_sequence(f, x, opt.deflation);
            if (tr.status != DeflationStatus::completed) break;
            run.trace = std::move(tr);
        }
        std::vector<cd> xn = newton_step(*run.trace.deflated, x);
        std::vector<cd> diff(xn.size());
        for (size_t j = 0; j < xn.size(); ++j) diff[j] = xn[j] - x[j];
        run.step_norms.push_back(vec_norm(diff));
        x = std::move(xn);
        run.iterates.push_back(x);
        run.residual_norms.push_back(vec_norm(eval_system(f.polys, x)));
        if (run.step_norms.back() <= opt.tol) break;
    }

    for (size_t k = 0; k + 1 < run.step_norms.size(); ++k) {
        double d = run.step_norms[k] * run.step_norms[k];
        run.quadratic_ratios.push_back(d > 0.0 ? run.step_norms[k + 1] / d : 0.0);
    }
    run.converged = !run.step_norms.empty() && run.step_norms.back() <= opt.tol;
    return run;
}

}  // namespace mroot
