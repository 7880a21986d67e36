#ifndef MROOT_CERTIFY_HPP
#define MROOT_CERTIFY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "bergman.hpp"
#include "deflate.hpp"
#include "poly.hpp"

namespace mroot {

enum class CertificateKind { alpha, gamma };

struct Certificate {
    CertificateKind kind = CertificateKind::alpha;
    double beta = 0.0;
    double kappa = 1.0;
    double gamma_val = 1.0;
    double alpha_val = 0.0;
    double bound = 0.0;
    double norm_g = 0.0;
    bool verdict = false;
    std::optional<std::pair<double, double>> theta_interval;  // alpha kind
    std::optional<double> radius;                             // gamma kind: bound / kappa
};

// Existence/uniqueness of a root of g near x0 inside B(omega, R):
// beta = |Dg(x0)^{-1} g(x0)|, kappa = max(1, R(n+1)/(R^2 - rho^2)),
// gamma = max(1, |g| |Dg(x0)^{-1}| R kappa / (R^2 - rho^2)^((n+1)/2)),
// alpha = beta kappa; verdict iff alpha < 2gamma+1 - sqrt((2gamma+1)^2 - 1)
// and the theta interval from (gamma+1)u^2 - (alpha+1)u + alpha is nonempty.
Certificate alpha_certificate(const SeriesSystem& g, const std::vector<cd>& x0,
                              const BallContext& ctx);

// Quadratic-convergence radius at a candidate root zeta:
// bound = (2gamma+1 - sqrt(4gamma^2+3gamma))/(gamma+1), radius = bound/kappa.
Certificate gamma_certificate(const SeriesSystem& g, const std::vector<cd>& zeta,
                              const BallContext& ctx);

struct SingularCertificate {
    DeflationTrace trace;
    std::optional<Certificate> certificate;
    bool verdict = false;
    std::optional<int> failed_level;  // level whose smallness test failed
};

// Deflate f at x0 (radius R_defl, order p), verify the per-level conditions,
// then certify the extracted system on B(omega, R_cert). at_root switches to
// the gamma certificate.
SingularCertificate certify_singular(const PolySystem& f, const std::vector<cd>& x0,
                                     const DeflationOptions& defl, const BallContext& cert_ball,
                                     bool at_root = false);

}  // namespace mroot

#endif
