#ifndef MROOT_POLY_HPP
#define MROOT_POLY_HPP

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mroot {

using cd = std::complex<double>;
using Mono = std::vector<int>;

// Sparse multivariate polynomial / truncated power series over complex doubles.
// Terms are keyed by exponent vectors of fixed length n; zero coefficients are
// never stored (canonical form).
struct Poly {
    int n = 0;
    std::map<Mono, cd> t;

    explicit Poly(int nvars = 0) : n(nvars) {}

    static Poly constant(int nvars, cd value);
    static Poly variable(int nvars, int j);

    void set(const Mono& e, cd c);
    void add_term(const Mono& e, cd c);

    cd coeff(const Mono& e) const;
    cd const_term() const;
    bool is_zero() const { return t.empty(); }
    int degree() const;     // max total degree, -1 for the zero polynomial
    int valuation() const;  // min total degree, large sentinel for zero

    cd eval(const std::vector<cd>& x) const;
    Poly diff(int j) const;
    Poly truncated(int order) const;     // keep total degree <= order
    Poly shifted(const std::vector<cd>& x0) const;  // exact binomial Taylor shift: p(x0 + u)
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, cd s);
// product truncated at total degree `order`; order < 0 means no truncation
Poly mul(const Poly& a, const Poly& b, int order = -1);

struct PolySystem {
    int n = 0;
    std::vector<std::string> vars;
    std::vector<std::string> names;
    std::vector<Poly> polys;

    size_t size() const { return polys.size(); }
};

// System of truncated series in u = x - center, all sharing one order budget.
struct SeriesSystem {
    std::vector<cd> center;
    int order = 0;
    int level = 0;
    std::vector<Poly> series;

    int nvars() const { return static_cast<int>(center.size()); }
    size_t size() const { return series.size(); }
};

std::vector<cd> eval_system(const std::vector<Poly>& polys, const std::vector<cd>& x);
std::vector<std::vector<Poly>> jacobian(const std::vector<Poly>& polys, int n);

// Taylor-shift every equation to x0 and truncate at total degree p.
SeriesSystem recenter(const PolySystem& f, const std::vector<cd>& x0, int p);

// Series inverse of u with u(0) != 0, to total degree `order`.
// Newton iteration X <- X(2 - uX); throws on a non-unit constant term.
Poly series_invert(const Poly& u, int order);

// r x r series matrix inverse by the same Newton scheme, constant term
// inverted by LU. Used by the Schur complement.
std::vector<std::vector<Poly>> series_mat_invert(const std::vector<std::vector<Poly>>& A,
                                                 int order);

}  // namespace mroot

#endif
