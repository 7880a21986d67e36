#include "deflate.hpp"

#include <cmath>

namespace mroot {

const char* to_string(DeflationStatus s) {
    switch (s) {
        case DeflationStatus::completed: return "completed";
        case DeflationStatus::smallness_failed: return "smallness_failed";
        case DeflationStatus::depth_exceeded: return "depth_exceeded";
    }
    return "unknown";
}

std::vector<int> independent_rows(const Eigen::MatrixXcd& J0, int n, double tol) {
    std::vector<Eigen::VectorXcd> basis;
    std::vector<int> picked;
    for (int i = 0; i < J0.rows() && static_cast<int>(picked.size()) < n; ++i) {
        Eigen::VectorXcd v = J0.row(i).transpose();
        double rn = v.norm();
        for (const auto& b : basis) v -= b.dot(v) * b;
        if (rn > 0.0 && v.norm() > tol * rn) {
            basis.push_back(v / v.norm());
            picked.push_back(i);
        }
    }
    return picked;
}

SeriesSystem extract_deflated(const SeriesSystem& F, const RankProfile& profile,
                              std::vector<int>* picked_rows) {
    const int n = F.nvars();
    if (profile.rank != n)
        throw std::invalid_argument("extract_deflated: system is not full rank");
    auto J = jacobian(F.series, n);
    Eigen::MatrixXcd J0(F.series.size(), n);
    for (size_t i = 0; i < F.series.size(); ++i)
        for (int j = 0; j < n; ++j) J0(static_cast<int>(i), j) = J[i][j].const_term();

    auto rows = independent_rows(J0, n);
    if (static_cast<int>(rows.size()) != n)
        throw std::runtime_error("extract_deflated: could not select n independent rows");

    SeriesSystem out;
    out.center = F.center;
    out.order = F.order;
    out.level = F.level;
    for (int i : rows) out.series.push_back(F.series[i]);

    Eigen::MatrixXcd Jsel(n, n);
    for (int i = 0; i < n; ++i) Jsel.row(i) = J0.row(rows[i]);
    if (numerical_rank(Jsel).rank != n)
        throw std::runtime_error("extract_deflated: selected rows are numerically dependent");
    if (picked_rows) *picked_rows = rows;
    return out;
}

DeflationTrace deflation_sequence(const PolySystem& f, const std::vector<cd>& x0,
                                  const DeflationOptions& opt) {
    if (opt.order < 1) throw std::invalid_argument("deflation_sequence: order must be >= 1");
    if (opt.R <= 0.0) throw std::invalid_argument("deflation_sequence: radius must be > 0");

    const int n = f.n;
    DeflationTrace trace;
    SeriesSystem F = recenter(f, x0, opt.order);
    BallContext ctx{x0, opt.R};

    for (int k = 0;; ++k) {
        DeflationLevel lv;
        lv.system = F;
        lv.smallness = smallness_certificate(F.series, ctx);

        auto J = jacobian(F.series, n);
        Eigen::MatrixXcd J0(F.series.size(), n);
        for (size_t i = 0; i < F.series.size(); ++i)
            for (int j = 0; j < n; ++j) J0(static_cast<int>(i), j) = J[i][j].const_term();
        lv.profile = numerical_rank(J0);
        const int r = lv.profile.rank;

        if (r == n) {
            // terminal level: the smallness test gates kerneling, not extraction
            trace.levels.push_back(std::move(lv));
            trace.status = DeflationStatus::completed;
            trace.thickness = k;
            trace.deflated = extract_deflated(F, trace.levels.back().profile,
                                              &trace.extracted_rows);
            return trace;
        }
        if (!lv.smallness.small) {
            trace.levels.push_back(std::move(lv));
            trace.status = DeflationStatus::smallness_failed;
            return trace;
        }
        if (k == opt.max_depth) {
            trace.levels.push_back(std::move(lv));
            trace.status = DeflationStatus::depth_exceeded;
            return trace;
        }
        if (F.order - 1 < 1)
            throw OrderBudgetError(
                "deflation_sequence: series order budget exhausted; retry with a larger order "
                "(try 2p)");

        auto kr = kerneling(F, r, F.order - 1, opt.pivot_thresh);
        lv.row_perm = kr.row_perm;
        lv.col_perm = kr.col_perm;
        trace.levels.push_back(std::move(lv));
        F = std::move(kr.system);
    }
}

}  // namespace mroot
