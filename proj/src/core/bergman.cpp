#include "bergman.hpp"

#include <cmath>
#include <stdexcept>

namespace mroot {

double c0_constant() {
    static const double c0 = [] {
        double acc = 0.0;
        for (int k = 0;; ++k) {
            double t = std::pow(0.5, std::pow(2.0, k) - 1.0);
            if (t < 1e-17) break;
            acc += t;
        }
        return acc;
    }();
    return c0;
}

double alpha0_constant() {
    static const double a0 = [] {
        auto h = [](double u) {
            double q = 1.0 - 4.0 * u + 2.0 * u * u;
            return q * q - 2.0 * u;
        };
        double lo = 1e-30, hi = 0.2;  // h(0+) > 0, h(0.2) < 0
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            (h(mid) > 0.0 ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }();
    return a0;
}

double monomial_weight(const Mono& e, int n, double R) {
    int d = 0;
    for (int k : e) d += k;
    double w = std::pow(R, 2 * n + 2 * d) * std::tgamma(n + 1.0);
    for (int k : e) w *= std::tgamma(k + 1.0);
    w /= std::tgamma(n + d + 1.0);
    return w;
}

double bergman_norm(const Poly& p, int n, double R) {
    double acc = 0.0;
    for (const auto& [e, c] : p.t) acc += std::norm(c) * monomial_weight(e, n, R);
    return std::sqrt(acc);
}

double bergman_norm(const std::vector<Poly>& sys, int n, double R) {
    double acc = 0.0;
    for (const auto& p : sys) {
        double np = bergman_norm(p, n, R);
        acc += np * np;
    }
    return std::sqrt(acc);
}

double derivative_bound(double norm_f, const BallContext& ctx, const std::vector<cd>& x, int k) {
    const int n = ctx.n();
    double rho2 = 0.0;
    for (int j = 0; j < n; ++j) rho2 += std::norm(x[j] - ctx.omega[j]);
    double R2 = ctx.R * ctx.R;
    if (rho2 >= R2) throw std::domain_error("derivative_bound: point outside the open ball");
    double fac = 1.0;
    for (int i = 1; i <= k; ++i) fac *= n + i;
    return norm_f * fac * std::pow(ctx.R, 1 + k) /
           std::pow(R2 - rho2, 0.5 * (n + 1) + k);
}

double eta_threshold(double norm_f, int n, double R) {
    return 2.0 * alpha0_constant() /
           ((n + 1.0) * (n + 2.0) * (R + norm_f) * std::pow(R, n - 2));
}

SmallnessReport smallness_certificate(const std::vector<Poly>& series, const BallContext& ctx) {
    const int n = ctx.n();
    if (n < 2) throw std::domain_error("smallness_certificate: n must be >= 2");
    SmallnessReport rep;
    rep.norm_f = bergman_norm(series, n, ctx.R);
    double v2 = 0.0;
    for (const auto& p : series) v2 += std::norm(p.const_term());
    rep.value_norm = std::sqrt(v2);
    rep.eta = eta_threshold(rep.norm_f, n, ctx.R);
    rep.cond1 = c0_constant() * std::pow(ctx.R, n - 1) * rep.value_norm < 1.0;
    rep.cond2 = rep.value_norm <= rep.eta;
    rep.small = rep.cond2;
    return rep;
}

}  // namespace mroot
