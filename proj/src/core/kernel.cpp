#include "kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace mroot {

std::pair<std::vector<int>, std::vector<int>> pivot_block(const Eigen::MatrixXcd& J0, int r,
                                                          double thresh) {
    Eigen::MatrixXcd M = J0;
    const int srows = static_cast<int>(M.rows());
    const int n = static_cast<int>(M.cols());
    std::vector<int> rp(srows), cp(n);
    for (int i = 0; i < srows; ++i) rp[i] = i;
    for (int j = 0; j < n; ++j) cp[j] = j;

    for (int t = 0; t < r; ++t) {
        double mx = 0.0;
        for (int i = t; i < srows; ++i)
            for (int j = t; j < n; ++j) mx = std::max(mx, std::abs(M(i, j)));
        if (mx == 0.0) throw std::domain_error("pivot_block: rank deficient beyond r");
        int pi = t, pj = t;
        bool found = false;
        for (int i = t; i < srows && !found; ++i)
            for (int j = t; j < n && !found; ++j)
                if (std::abs(M(i, j)) >= thresh * mx) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        M.row(t).swap(M.row(pi));
        M.col(t).swap(M.col(pj));
        std::swap(rp[t], rp[pi]);
        std::swap(cp[t], cp[pj]);
        for (int i = t + 1; i < srows; ++i) {
            cd f = M(i, t) / M(t, t);
            for (int j = t; j < n; ++j) M(i, j) -= f * M(t, j);
        }
    }
    return {rp, cp};
}

std::vector<std::vector<Poly>> schur_complement(const std::vector<std::vector<Poly>>& J, int r,
                                                const std::vector<int>& row_perm,
                                                const std::vector<int>& col_perm, int order) {
    const int srows = static_cast<int>(J.size());
    const int ncols = static_cast<int>(J[0].size());
    std::vector<std::vector<Poly>> P(srows, std::vector<Poly>(ncols));
    for (int i = 0; i < srows; ++i)
        for (int j = 0; j < ncols; ++j) P[i][j] = J[row_perm[i]][col_perm[j]];
    if (r == 0) return P;

    std::vector<std::vector<Poly>> A(r, std::vector<Poly>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) A[i][j] = P[i][j];
    auto Ai = series_mat_invert(A, order);

    std::vector<std::vector<Poly>> out(srows - r, std::vector<Poly>(ncols - r));
    for (int i = 0; i < srows - r; ++i)
        for (int j = 0; j < ncols - r; ++j) {
            Poly acc = P[r + i][r + j];
            for (int k = 0; k < r; ++k)
                for (int l = 0; l < r; ++l)
                    acc = acc - mul(P[r + i][k], mul(Ai[k][l], P[l][r + j], order), order);
            out[i][j] = std::move(acc);
        }
    return out;
}

KernelingResult kerneling(const SeriesSystem& F, int r, int order_out, double thresh) {
    const int n = F.nvars();
    const int srows = static_cast<int>(F.series.size());
    if (r >= n) throw std::invalid_argument("kerneling: rank must be < n");
    auto J = jacobian(F.series, n);

    KernelingResult res;
    res.system.center = F.center;
    res.system.order = order_out;
    res.system.level = F.level + 1;

    if (r == 0) {
        res.row_perm.resize(srows);
        res.col_perm.resize(n);
        for (int i = 0; i < srows; ++i) res.row_perm[i] = i;
        for (int j = 0; j < n; ++j) res.col_perm[j] = j;
        for (int i = 0; i < srows; ++i)
            for (int j = 0; j < n; ++j) res.system.series.push_back(J[i][j].truncated(order_out));
        return res;
    }

    Eigen::MatrixXcd J0(srows, n);
    for (int i = 0; i < srows; ++i)
        for (int j = 0; j < n; ++j) J0(i, j) = J[i][j].const_term();
    auto [rp, cp] = pivot_block(J0, r, thresh);
    res.row_perm = rp;
    res.col_perm = cp;

    auto S = schur_complement(J, r, rp, cp, order_out);
    for (int i = 0; i < r; ++i)
        res.system.series.push_back(F.series[rp[i]].truncated(order_out));
    for (const auto& row : S)
        for (const auto& p : row) res.system.series.push_back(p.truncated(order_out));
    return res;
}

}  // namespace mroot
