#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "poly.hpp"

using namespace mroot;

namespace {

Poly from_terms(int n, std::initializer_list<std::pair<Mono, cd>> terms) {
    Poly p(n);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

}  // namespace

TEST_CASE("term arithmetic keeps canonical form") {
    Poly p(2);
    p.add_term({1, 0}, 2.0);
    p.add_term({1, 0}, -2.0);
    CHECK(p.is_zero());
    p.add_term({0, 1}, cd(0.0, 1.0));
    CHECK(p.coeff({0, 1}) == cd(0.0, 1.0));
    CHECK(p.coeff({5, 5}) == cd(0.0));
    CHECK(p.degree() == 1);
}

TEST_CASE("degree and valuation") {
    auto p = from_terms(2, {{{2, 1}, 1.0}, {{0, 1}, 3.0}});
    CHECK(p.degree() == 3);
    CHECK(p.valuation() == 1);
    CHECK(Poly(2).degree() == -1);
}

TEST_CASE("evaluation") {
    // x^2 y + 2y at (3, -1)
    auto p = from_terms(2, {{{2, 1}, 1.0}, {{0, 1}, 2.0}});
    CHECK(p.eval({3.0, -1.0}) == cd(-11.0));
    CHECK(p.eval({cd(0, 1), cd(1, 0)}) == cd(1.0));  // (i)^2 * 1 + 2 = 1
}

TEST_CASE("differentiation") {
    auto p = from_terms(2, {{{3, 1}, 2.0}, {{0, 2}, 1.0}});
    auto px = p.diff(0);
    CHECK(px.coeff({2, 1}) == cd(6.0));
    CHECK(px.t.size() == 1);
    auto py = p.diff(1);
    CHECK(py.coeff({3, 0}) == cd(2.0));
    CHECK(py.coeff({0, 1}) == cd(2.0));
}

TEST_CASE("truncated product") {
    auto a = from_terms(1, {{{0}, 1.0}, {{1}, 1.0}});
    auto full = mul(a, a);
    CHECK(full.coeff({2}) == cd(1.0));
    auto cut = mul(a, a, 1);
    CHECK(cut.coeff({2}) == cd(0.0));
    CHECK(cut.coeff({1}) == cd(2.0));
}

TEST_CASE("Taylor shift is exact and invertible") {
    // (x + y)^2 shifted by (1, -2): coefficients from the binomial expansion
    auto p = from_terms(2, {{{2, 0}, 1.0}, {{1, 1}, 2.0}, {{0, 2}, 1.0}});
    auto q = p.shifted({1.0, -2.0});
    CHECK(q.const_term() == cd(1.0));   // (1 - 2)^2
    CHECK(q.coeff({1, 0}) == cd(-2.0)); // 2(x0 + y0)
    CHECK(q.coeff({0, 1}) == cd(-2.0));
    CHECK(q.coeff({2, 0}) == cd(1.0));

    auto back = q.shifted({-1.0, 2.0});
    for (const auto& [e, c] : p.t) CHECK(std::abs(back.coeff(e) - c) < 1e-14);
    CHECK(back.t.size() == p.t.size());
}

TEST_CASE("shift agrees with evaluation") {
    auto p = from_terms(2, {{{3, 0}, 1.0 / 3}, {{1, 2}, 1.0}, {{2, 0}, 1.0}, {{1, 1}, 2.0}});
    std::vector<cd> x0{-0.01, 0.02}, u{0.003, -0.007};
    auto q = p.shifted(x0);
    cd direct = p.eval({x0[0] + u[0], x0[1] + u[1]});
    CHECK(std::abs(q.eval(u) - direct) < 1e-15);
}

TEST_CASE("series inverse of a unit") {
    // 1/(2 + x) = 1/2 - x/4 + x^2/8 - x^3/16
    auto u = from_terms(1, {{{0}, 2.0}, {{1}, 1.0}});
    auto v = series_invert(u, 3);
    CHECK(v.coeff({0}) == cd(0.5));
    CHECK(std::abs(v.coeff({1}) - cd(-0.25)) < 1e-15);
    CHECK(std::abs(v.coeff({2}) - cd(0.125)) < 1e-15);
    CHECK(std::abs(v.coeff({3}) - cd(-0.0625)) < 1e-15);
    auto prod = mul(u, v, 3);
    CHECK(std::abs(prod.const_term() - cd(1.0)) < 1e-15);
    CHECK(std::abs(prod.coeff({1})) < 1e-15);
    CHECK(std::abs(prod.coeff({3})) < 1e-15);
}

TEST_CASE("series inverse rejects non-units") {
    auto u = from_terms(1, {{{1}, 1.0}});
    CHECK_THROWS(series_invert(u, 3));
}

TEST_CASE("series matrix inverse") {
    // A = [[2 + x, y], [0, 1 - y]]; check A * A^{-1} = I through order 4
    std::vector<std::vector<Poly>> A(2, std::vector<Poly>(2, Poly(2)));
    A[0][0] = from_terms(2, {{{0, 0}, 2.0}, {{1, 0}, 1.0}});
    A[0][1] = from_terms(2, {{{0, 1}, 1.0}});
    A[1][0] = Poly(2);
    A[1][1] = from_terms(2, {{{0, 0}, 1.0}, {{0, 1}, -1.0}});
    int order = 4;
    auto Ai = series_mat_invert(A, order);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Poly acc(2);
            for (int k = 0; k < 2; ++k) acc = acc + mul(A[i][k], Ai[k][j], order);
            if (i == j) acc.add_term({0, 0}, -1.0);
            for (const auto& [e, c] : acc.t) CHECK(std::abs(c) < 1e-13);
        }
    }
}

TEST_CASE("recenter truncates at the requested order") {
    PolySystem f;
    f.n = 2;
    f.vars = {"x", "y"};
    f.names = {"f1"};
    f.polys = {from_terms(2, {{{3, 0}, 1.0}, {{0, 2}, 1.0}})};
    auto F = recenter(f, {1.0, 1.0}, 2);
    CHECK(F.order == 2);
    CHECK(F.series[0].degree() <= 2);
    CHECK(F.series[0].const_term() == cd(2.0));
    CHECK(F.series[0].coeff({1, 0}) == cd(3.0));
}
