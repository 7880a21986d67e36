#include "certify.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace mroot {

namespace {

struct PointData {
    double rho = 0.0;
    Eigen::VectorXcd value;
    Eigen::MatrixXcd jac;
    double inv_norm = 0.0;  // |Dg(x)^{-1}| spectral
};

PointData point_data(const SeriesSystem& g, const std::vector<cd>& x, const BallContext& ctx) {
    const int n = g.nvars();
    if (static_cast<int>(g.series.size()) != n)
        throw std::invalid_argument("certificate: system must be square");
    PointData d;
    double rho2 = 0.0;
    for (int j = 0; j < n; ++j) rho2 += std::norm(x[j] - ctx.omega[j]);
    d.rho = std::sqrt(rho2);
    if (d.rho >= ctx.R) throw std::domain_error("certificate: point outside the open ball");

    std::vector<cd> u(n);
    for (int j = 0; j < n; ++j) u[j] = x[j] - g.center[j];
    d.value.resize(n);
    d.jac.resize(n, n);
    for (int i = 0; i < n; ++i) {
        d.value(i) = g.series[i].eval(u);
        for (int j = 0; j < n; ++j) d.jac(i, j) = g.series[i].diff(j).eval(u);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(d.jac);
    double smin = svd.singularValues()(n - 1);
    if (smin <= 0.0) throw std::domain_error("certificate: Jacobian not invertible");
    d.inv_norm = 1.0 / smin;
    return d;
}

// A2 norm of g on the certificate ball; g's series is recentered to omega first.
double system_norm_on(const SeriesSystem& g, const BallContext& ctx) {
    std::vector<cd> dx(ctx.omega.size());
    for (size_t j = 0; j < dx.size(); ++j) dx[j] = ctx.omega[j] - g.center[j];
    std::vector<Poly> sh;
    sh.reserve(g.series.size());
    for (const auto& p : g.series) sh.push_back(p.shifted(dx));
    return bergman_norm(sh, ctx.n(), ctx.R);
}

double gamma_of(double norm_g, double inv_norm, double kappa, double rho, const BallContext& ctx) {
    const int n = ctx.n();
    double R2 = ctx.R * ctx.R;
    return std::max(1.0, norm_g * inv_norm * ctx.R * kappa /
                             std::pow(R2 - rho * rho, 0.5 * (n + 1)));
}

}  // namespace

Certificate alpha_certificate(const SeriesSystem& g, const std::vector<cd>& x0,
                              const BallContext& ctx) {
    const int n = ctx.n();
    auto d = point_data(g, x0, ctx);

    Certificate c;
    c.kind = CertificateKind::alpha;
    c.beta = d.jac.partialPivLu().solve(d.value).norm();
    c.kappa = std::max(1.0, ctx.R * (n + 1) / (ctx.R * ctx.R - d.rho * d.rho));
    c.norm_g = system_norm_on(g, ctx);
    c.gamma_val = gamma_of(c.norm_g, d.inv_norm, c.kappa, d.rho, ctx);
    c.alpha_val = c.beta * c.kappa;

    double tg = 2.0 * c.gamma_val + 1.0;
    c.bound = tg - std::sqrt(tg * tg - 1.0);
    double disc = (c.alpha_val + 1.0) * (c.alpha_val + 1.0) -
                  4.0 * c.alpha_val * (c.gamma_val + 1.0);
    c.verdict = c.alpha_val < c.bound && disc >= 0.0;
    if (c.verdict) {
        double ulo = (c.alpha_val + 1.0 - std::sqrt(disc)) / (2.0 * (c.gamma_val + 1.0));
        double uhi = 1.0 / (c.gamma_val + 1.0);
        double tlo = ulo / c.kappa;
        double thi = std::min(uhi / c.kappa, ctx.R - d.rho);
        c.verdict = tlo < thi;
        if (c.verdict) c.theta_interval = {tlo, thi};
    }
    return c;
}

Certificate gamma_certificate(const SeriesSystem& g, const std::vector<cd>& zeta,
                              const BallContext& ctx) {
    const int n = ctx.n();
    auto d = point_data(g, zeta, ctx);

    Certificate c;
    c.kind = CertificateKind::gamma;
    c.kappa = std::max(1.0, ctx.R * (n + 1) / (ctx.R * ctx.R - d.rho * d.rho));
    c.norm_g = system_norm_on(g, ctx);
    c.gamma_val = gamma_of(c.norm_g, d.inv_norm, c.kappa, d.rho, ctx);
    double gv = c.gamma_val;
    c.bound = (2.0 * gv + 1.0 - std::sqrt(4.0 * gv * gv + 3.0 * gv)) / (gv + 1.0);
    c.radius = c.bound / c.kappa;
    c.verdict = true;
    return c;
}

SingularCertificate certify_singular(const PolySystem& f, const std::vector<cd>& x0,
                                     const DeflationOptions& defl, const BallContext& cert_ball,
                                     bool at_root) {
    SingularCertificate out;
    out.trace = deflation_sequence(f, x0, defl);

    if (out.trace.status != DeflationStatus::completed) {
        if (out.trace.status == DeflationStatus::smallness_failed)
            out.failed_level = static_cast<int>(out.trace.levels.size()) - 1;
        return out;
    }
    const auto& dfl = *out.trace.deflated;
    out.certificate = at_root ? gamma_certificate(dfl, x0, cert_ball)
                              : alpha_certificate(dfl, x0, cert_ball);
    out.verdict = out.certificate->verdict;
    return out;
}

}  // namespace mroot
