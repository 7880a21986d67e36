#include "multiplicity.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include <Eigen/Dense>

namespace mroot {

std::vector<Mono> monomials_upto(int n, int d) {
    std::vector<Mono> out;
    Mono cur(n, 0);
    // graded enumeration, leading exponents descending within each degree
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, left - e);
        }
    };
    for (int dd = 0; dd <= d; ++dd) rec(rec, 0, dd);
    return out;
}

MultiplicityResult multiplicity(const std::vector<Poly>& f, const std::vector<cd>& zeta,
                                int cap, double rank_tol) {
    if (f.empty()) throw std::invalid_argument("multiplicity: empty system");
    const int n = f[0].n;

    std::vector<Poly> loc;
    loc.reserve(f.size());
    double res2 = 0.0;
    for (const auto& q : f) {
        loc.push_back(q.shifted(zeta));
        res2 += std::norm(loc.back().const_term());
    }
    if (std::sqrt(res2) > 1e-8)
        throw std::domain_error("multiplicity: point is not a root of the system");

    MultiplicityResult result;
    int prev = -1;
    for (int d = 1; d <= cap; ++d) {
        auto cols = monomials_upto(n, d);
        if (cols.size() > 2000)
            throw std::length_error("multiplicity: matrix exceeds the supported size");
        std::map<Mono, int> cidx;
        for (size_t i = 0; i < cols.size(); ++i) cidx.emplace(cols[i], static_cast<int>(i));

        auto shifts = monomials_upto(n, d - 1);
        Eigen::MatrixXcd A(loc.size() * shifts.size(), cols.size());
        A.setZero();
        int row = 0;
        for (const auto& q : loc)
            for (const auto& a : shifts) {
                for (const auto& [e, c] : q.t) {
                    Mono ee(n);
                    int deg = 0;
                    for (int j = 0; j < n; ++j) {
                        ee[j] = e[j] + a[j];
                        deg += ee[j];
                    }
                    if (deg <= d) A(row, cidx.at(ee)) = c;
                }
                ++row;
            }

        int rank = 0;
        if (A.size() > 0 && A.norm() > 0.0) {
            Eigen::BDCSVD<Eigen::MatrixXcd> svd(A);
            const auto& sv = svd.singularValues();
            for (int i = 0; i < sv.size(); ++i)
                if (sv(i) > rank_tol * sv(0)) ++rank;
        }
        int mu = static_cast<int>(cols.size()) - rank;
        result.dims.push_back(mu);
        result.degree_cap_used = d;
        if (prev >= 0 && mu == prev) {
            result.mu = mu;
            result.stabilized = true;
            return result;
        }
        prev = mu;
    }
    result.mu = prev;
    result.stabilized = false;
    return result;
}

MultiplicityResult multiplicity(const PolySystem& f, const std::vector<cd>& zeta, int cap) {
    return multiplicity(f.polys, zeta, cap);
}

bool check_drop(const PolySystem& f, const SeriesSystem& K_f, const std::vector<cd>& zeta,
                int cap) {
    auto mf = multiplicity(f.polys, zeta, cap);
    if (!mf.stabilized) throw std::runtime_error("check_drop: multiplicity did not stabilize");
    if (mf.mu <= 1)
        throw std::invalid_argument("check_drop: system is regular at the point, nothing to drop");

    // K_f is already centered; evaluate its multiplicity at zeta relative to its center
    std::vector<cd> rel(zeta.size());
    for (size_t j = 0; j < zeta.size(); ++j) rel[j] = zeta[j] - K_f.center[j];
    auto mk = multiplicity(K_f.series, rel, cap);
    if (!mk.stabilized) throw std::runtime_error("check_drop: multiplicity did not stabilize");
    return mk.mu < mf.mu;
}

}  // namespace mroot
