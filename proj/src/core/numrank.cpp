#include "numrank.hpp"

#include <cmath>
#include <limits>

namespace mroot {

std::vector<double> singular_values(const Eigen::MatrixXcd& M) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    std::vector<double> out(svd.singularValues().data(),
                            svd.singularValues().data() + svd.singularValues().size());
    return out;
}

std::vector<double> elementary_symmetric(const std::vector<double>& sigma) {
    std::vector<double> e{1.0};
    for (double s : sigma) {
        e.push_back(0.0);
        for (size_t k = e.size() - 1; k >= 1; --k) e[k] += s * e[k - 1];
    }
    return e;
}

RankProfile numerical_rank(const Eigen::MatrixXcd& M) {
    Eigen::MatrixXcd A = (M.rows() < M.cols()) ? Eigen::MatrixXcd(M.adjoint()) : M;
    const int srows = static_cast<int>(A.rows());
    const int n = static_cast<int>(A.cols());

    RankProfile prof;
    prof.sigma = singular_values(A);
    prof.s_sums = elementary_symmetric(prof.sigma);
    const auto& s = prof.s_sums;

    double smax = prof.sigma.empty() ? 0.0 : prof.sigma.front();
    prof.tau_zero = std::max(srows, n) * std::numeric_limits<double>::epsilon() * smax;

    std::optional<RankCandidate> best;
    for (int m = 1; m <= n; ++m) {
        // s_{n-m} must sit above underflow to define b,g (m = n always admissible)
        if (m < n && !(s[n - m] > std::pow(prof.tau_zero, n - m))) continue;
        RankCandidate c;
        c.m = m;
        for (int i = 0; i < m; ++i)
            c.b = std::max(c.b, std::pow(s[n - i] / s[n - m], 1.0 / (m - i)));
        if (m == n) {
            c.g = 1.0;
        } else {
            for (int i = m + 1; i <= n; ++i)
                c.g = std::max(c.g, std::pow(s[n - i] / s[n - m], 1.0 / (i - m)));
        }
        c.a = c.b * c.g;
        prof.candidates.push_back(c);
        if (c.a < 1.0 / 9.0) best = c;
    }

    if (!best) {
        prof.rank = n;
        prof.epsilon = n > 0 ? prof.sigma.back() / 2.0 : 0.0;
    } else {
        prof.chosen_m = best->m;
        prof.rank = n - best->m;
        double a = best->a;
        prof.epsilon =
            (3.0 * a + 1.0 - std::sqrt((3.0 * a + 1.0) * (3.0 * a + 1.0) - 16.0 * a)) /
            (4.0 * best->g);
    }

    int plain = 0;
    for (double sv : prof.sigma)
        if (sv > prof.tau_zero) ++plain;
    prof.consistent = !(prof.chosen_m && *prof.chosen_m < n - plain);
    return prof;
}

}  // namespace mroot
