#ifndef MROOT_NUMRANK_HPP
#define MROOT_NUMRANK_HPP

#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace mroot {

struct RankCandidate {
    int m = 0;
    double b = 0.0;
    double g = 0.0;
    double a = 0.0;
};

struct RankProfile {
    std::vector<double> sigma;   // nonincreasing
    std::vector<double> s_sums;  // elementary symmetric sums, s_sums[0] = 1
    std::vector<RankCandidate> candidates;
    std::optional<int> chosen_m; // largest m with a_m < 1/9
    double epsilon = 0.0;
    int rank = 0;
    double tau_zero = 0.0;
    bool consistent = true;      // chosen_m vs. plain tau-threshold count
};

std::vector<double> singular_values(const Eigen::MatrixXcd& M);
std::vector<double> elementary_symmetric(const std::vector<double>& sigma);

// eps-free rank: a_m = b_m * g_m < 1/9 picks rank n - m (largest such m);
// otherwise full rank with epsilon = sigma_min / 2. Wide matrices are
// transposed first.
RankProfile numerical_rank(const Eigen::MatrixXcd& M);

}  // namespace mroot

#endif
