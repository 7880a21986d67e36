#ifndef MROOT_DEFLATE_HPP
#define MROOT_DEFLATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "bergman.hpp"
#include "kernel.hpp"
#include "numrank.hpp"
#include "poly.hpp"

namespace mroot {

enum class DeflationStatus { completed, smallness_failed, depth_exceeded };

struct DeflationLevel {
    SeriesSystem system;
    SmallnessReport smallness;
    RankProfile profile;
    std::vector<int> row_perm;  // pivot permutations used to kernel this level
    std::vector<int> col_perm;
};

struct DeflationTrace {
    std::vector<DeflationLevel> levels;
    DeflationStatus status = DeflationStatus::completed;
    std::optional<int> thickness;
    std::optional<SeriesSystem> deflated;
    std::vector<int> extracted_rows;
};

struct DeflationOptions {
    double R = 0.25;
    int order = 8;
    int max_depth = 32;
    double pivot_thresh = 0.5;
};

// Thrown when the next kerneling would drop the series order below 1.
struct OrderBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// n of the full-rank level's rows, chosen greedily by Jacobian row
// independence at the center; the result must pass numerical_rank = n.
std::vector<int> independent_rows(const Eigen::MatrixXcd& J0, int n, double tol = 1e-8);

SeriesSystem extract_deflated(const SeriesSystem& F, const RankProfile& profile,
                              std::vector<int>* picked_rows = nullptr);

// Iterated kerneling from f recentered at x0: level k holds order p - k.
// Levels that still kernel must pass the eta smallness test; the terminal
// full-rank level only needs its rank.
DeflationTrace deflation_sequence(const PolySystem& f, const std::vector<cd>& x0,
                                  const DeflationOptions& opt);

const char* to_string(DeflationStatus s);

}  // namespace mroot

#endif
