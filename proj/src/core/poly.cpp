#include "poly.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mroot {

namespace {

int total_deg(const Mono& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

Poly Poly::constant(int nvars, cd value) {
    Poly p(nvars);
    if (value != cd(0.0)) p.t.emplace(Mono(nvars, 0), value);
    return p;
}

Poly Poly::variable(int nvars, int j) {
    Poly p(nvars);
    Mono e(nvars, 0);
    e[j] = 1;
    p.t.emplace(std::move(e), cd(1.0));
    return p;
}

void Poly::set(const Mono& e, cd c) {
    if (c == cd(0.0))
        t.erase(e);
    else
        t[e] = c;
}

void Poly::add_term(const Mono& e, cd c) {
    auto it = t.find(e);
    if (it == t.end()) {
        if (c != cd(0.0)) t.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == cd(0.0)) t.erase(it);
}

cd Poly::coeff(const Mono& e) const {
    auto it = t.find(e);
    return it == t.end() ? cd(0.0) : it->second;
}

cd Poly::const_term() const { return coeff(Mono(n, 0)); }

int Poly::degree() const {
    int d = -1;
    for (const auto& [e, c] : t) d = std::max(d, total_deg(e));
    return d;
}

int Poly::valuation() const {
    int v = 1 << 20;
    for (const auto& [e, c] : t) v = std::min(v, total_deg(e));
    return v;
}

cd Poly::eval(const std::vector<cd>& x) const {
    if (static_cast<int>(x.size()) != n) throw std::invalid_argument("eval: dimension mismatch");
    cd acc = 0.0;
    for (const auto& [e, c] : t) {
        cd term = c;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < e[j]; ++k) term *= x[j];
        acc += term;
    }
    return acc;
}

Poly Poly::diff(int j) const {
    Poly out(n);
    for (const auto& [e, c] : t) {
        if (e[j] == 0) continue;
        Mono d = e;
        d[j] -= 1;
        out.add_term(d, c * static_cast<double>(e[j]));
    }
    return out;
}

Poly Poly::truncated(int order) const {
    Poly out(n);
    for (const auto& [e, c] : t)
        if (total_deg(e) <= order) out.t.emplace(e, c);
    return out;
}

Poly Poly::shifted(const std::vector<cd>& x0) const {
    if (static_cast<int>(x0.size()) != n) throw std::invalid_argument("shift: dimension mismatch");
    Poly out(n);
    // binomial expansion per variable: (u_j + x0_j)^e_j
    for (const auto& [e, c] : t) {
        std::map<Mono, cd> cur;
        cur.emplace(Mono(n, 0), c);
        for (int j = 0; j < n; ++j) {
            if (e[j] == 0) continue;
            // binomial row for exponent e[j]
            std::vector<double> binom(e[j] + 1, 1.0);
            for (int k = 1; k <= e[j]; ++k)
                binom[k] = binom[k - 1] * double(e[j] - k + 1) / double(k);
            std::map<Mono, cd> next;
            for (const auto& [me, mc] : cur) {
                for (int k = e[j]; k >= 0; --k) {
                    // term u_j^k * x0_j^(e[j]-k)
                    Mono ne = me;
                    ne[j] += k;
                    cd contrib = mc * binom[k];
                    for (int q = 0; q < e[j] - k; ++q) contrib *= x0[j];
                    auto it = next.find(ne);
                    if (it == next.end())
                        next.emplace(std::move(ne), contrib);
                    else
                        it->second += contrib;
                }
            }
            cur = std::move(next);
        }
        for (const auto& [me, mc] : cur) out.add_term(me, mc);
    }
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [e, c] : b.t) out.add_term(e, c);
    return out;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [e, c] : b.t) out.add_term(e, -c);
    return out;
}

Poly operator*(const Poly& a, cd s) {
    Poly out(a.n);
    if (s == cd(0.0)) return out;
    for (const auto& [e, c] : a.t) out.t.emplace(e, c * s);
    return out;
}

Poly mul(const Poly& a, const Poly& b, int order) {
    Poly out(a.n);
    for (const auto& [ea, ca] : a.t) {
        int da = total_deg(ea);
        for (const auto& [eb, cb] : b.t) {
            if (order >= 0 && da + total_deg(eb) > order) continue;
            Mono e(a.n);
            for (int j = 0; j < a.n; ++j) e[j] = ea[j] + eb[j];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

std::vector<cd> eval_system(const std::vector<Poly>& polys, const std::vector<cd>& x) {
    std::vector<cd> v;
    v.reserve(polys.size());
    for (const auto& p : polys) v.push_back(p.eval(x));
    return v;
}

std::vector<std::vector<Poly>> jacobian(const std::vector<Poly>& polys, int n) {
    std::vector<std::vector<Poly>> J;
    J.reserve(polys.size());
    for (const auto& p : polys) {
        std::vector<Poly> row;
        row.reserve(n);
        for (int j = 0; j < n; ++j) row.push_back(p.diff(j));
        J.push_back(std::move(row));
    }
    return J;
}

SeriesSystem recenter(const PolySystem& f, const std::vector<cd>& x0, int p) {
    if (static_cast<int>(x0.size()) != f.n)
        throw std::invalid_argument("recenter: point dimension mismatch");
    SeriesSystem out;
    out.center = x0;
    out.order = p;
    out.series.reserve(f.polys.size());
    for (const auto& q : f.polys) out.series.push_back(q.shifted(x0).truncated(p));
    return out;
}

Poly series_invert(const Poly& u, int order) {
    double maxc = 1.0;
    for (const auto& [e, c] : u.t) maxc = std::max(maxc, std::abs(c));
    cd u0 = u.const_term();
    if (std::abs(u0) <= 1e-12 * maxc)
        throw std::domain_error("series_invert: constant term is not a unit");
    auto M = series_mat_invert({{u}}, order);
    return M[0][0];
}

std::vector<std::vector<Poly>> series_mat_invert(const std::vector<std::vector<Poly>>& A,
                                                 int order) {
    const int r = static_cast<int>(A.size());
    const int n = A[0][0].n;
    Eigen::MatrixXcd A0(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) A0(i, j) = A[i][j].const_term();
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(A0);
    if (!lu.isInvertible())
        throw std::domain_error("series_mat_invert: constant block not invertible");
    Eigen::MatrixXcd X0 = lu.inverse();

    std::vector<std::vector<Poly>> X(r, std::vector<Poly>(r, Poly(n)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (X0(i, j) != cd(0.0)) X[i][j].set(Mono(n, 0), X0(i, j));

    auto matmul = [&](const std::vector<std::vector<Poly>>& L,
                      const std::vector<std::vector<Poly>>& Rm) {
        std::vector<std::vector<Poly>> out(r, std::vector<Poly>(r, Poly(n)));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                Poly acc(n);
                for (int k = 0; k < r; ++k) acc = acc + mul(L[i][k], Rm[k][j], order);
                out[i][j] = std::move(acc);
            }
        return out;
    };

    int iters = 0;
    while ((1 << iters) <= order + 1) ++iters;  // doubles correct order each step
    for (int it = 0; it < iters; ++it) {
        auto AX = matmul(A, X);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                AX[i][j] = AX[i][j] * cd(-1.0);
                if (i == j) AX[i][j].add_term(Mono(n, 0), cd(2.0));
            }
        X = matmul(X, AX);
    }
    return X;
}

}  // namespace mroot
