#ifndef MROOT_BERGMAN_HPP
#define MROOT_BERGMAN_HPP

#include <vector>

#include "poly.hpp"

namespace mroot {

struct BallContext {
    std::vector<cd> omega;
    double R = 0.0;

    int n() const { return static_cast<int>(omega.size()); }
};

struct SmallnessReport {
    double norm_f = 0.0;     // A2 norm of the system on the ball
    double value_norm = 0.0; // Euclidean norm of F(omega)
    double eta = 0.0;
    bool cond1 = false;      // c0 * R^(n-1) * |F(omega)| < 1
    bool cond2 = false;      // |F(omega)| <= eta
    bool small = false;      // the deflation driver's test is cond2
};

// c0 = sum_k (1/2)^(2^k - 1), terms below 1e-17 dropped.
double c0_constant();
// First positive root of (1 - 4u + 2u^2)^2 - 2u, by bisection on (0, 0.2].
double alpha0_constant();

// Squared A2 norm of the monomial u^e on B(omega, R): R^(2n+2|e|) e! n! / (n+|e|)!
double monomial_weight(const Mono& e, int n, double R);

double bergman_norm(const Poly& p, int n, double R);
double bergman_norm(const std::vector<Poly>& sys, int n, double R);

// |f| (n+1)...(n+k) R^(1+k) / (R^2 - rho^2)^((n+1)/2 + k)
double derivative_bound(double norm_f, const BallContext& ctx, const std::vector<cd>& x, int k);

double eta_threshold(double norm_f, int n, double R);

// Smallness of the evaluation map at the ball center. Series must be centered
// at omega. Rejects n = 1 (the norm formulas hold for n >= 2).
SmallnessReport smallness_certificate(const std::vector<Poly>& series, const BallContext& ctx);

}  // namespace mroot

#endif
