#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "newton.hpp"
#include "parser.hpp"

using namespace mroot;

namespace {

const char* kSample =
    "vars: x y\n"
    "f1 = x^3/3 + x*y^2 + x^2 + 2*x*y + y^2\n"
    "f2 = x^2*y - x*y^2 + x^2 + 2*x*y + y^2\n";

double dist(const std::vector<cd>& a, std::initializer_list<double> b) {
    double acc = 0.0;
    auto it = b.begin();
    for (const auto& z : a) acc += std::norm(z - cd(*it++));
    return std::sqrt(acc);
}

double norm_of(const std::vector<cd>& a) {
    double acc = 0.0;
    for (const auto& z : a) acc += std::norm(z);
    return std::sqrt(acc);
}

}  // namespace

TEST_CASE("iteration on the fixed deflated system") {
    auto f = parse_system(kSample);
    auto run = singular_newton(f, {-0.01, 0.02}, {});
    CHECK(run.converged);
    REQUIRE(run.iterates.size() >= 3);
    CHECK(dist(run.iterates[1], {-0.00010174089984165205, 0.0003438465596502377}) < 1e-12);
    CHECK(dist(run.iterates[2], {-1.7494537036359128e-8, 8.17554794308329e-8}) < 1e-12);
    CHECK(run.trace.status == DeflationStatus::completed);
    CHECK(run.residual_norms.size() == run.iterates.size());
    CHECK(run.quadratic_ratios.size() + 1 == run.step_norms.size());
    // the root is the origin; error contraction is quadratic for the first
    // few iterates
    for (int k = 0; k + 1 < 3; ++k) {
        double e0 = norm_of(run.iterates[k]), e1 = norm_of(run.iterates[k + 1]);
        CHECK(e1 <= e0 * e0);
    }
}

TEST_CASE("redeflating at every iterate reaches machine precision") {
    auto f = parse_system(kSample);
    NewtonOptions opt;
    opt.redeflate = true;
    auto run = singular_newton(f, {-0.01, 0.02}, opt);
    CHECK(run.converged);
    REQUIRE(run.iterates.size() >= 4);
    CHECK(dist(run.iterates[2], {-1.7494561307e-8, 8.1755503688e-8}) < 1e-12);
    CHECK(norm_of(run.iterates[3]) < 1e-14);
    // error ratios e_{k+1}/e_k^2 stay near a constant while above noise
    double prev = norm_of(run.iterates[0]);
    for (int k = 1; k <= 3; ++k) {
        double cur = norm_of(run.iterates[k]);
        CHECK(cur / (prev * prev) < 1.0);
        prev = cur;
    }
}

TEST_CASE("a failed deflation halts before any step") {
    auto f = parse_system("vars: x y\nf1 = x^2\nf2 = y^2\n");
    NewtonOptions opt;
    opt.deflation.R = 0.1;
    auto run = singular_newton(f, {10.0, 0.0}, opt);
    CHECK_FALSE(run.converged);
    CHECK(run.iterates.size() == 1);
    CHECK(run.step_norms.empty());
    CHECK(run.trace.status == DeflationStatus::smallness_failed);
}

TEST_CASE("regular system: the first step is the classical Newton step") {
    auto f = parse_system("vars: x y\nf1 = x^2 + y^2 - 1\nf2 = x - y\n");
    std::vector<cd> x0{0.8, 0.7};
    auto run = singular_newton(f, x0, {});
    CHECK(run.trace.thickness == 0);

    Eigen::MatrixXcd J(2, 2);
    Eigen::VectorXcd v(2);
    for (int i = 0; i < 2; ++i) {
        v(i) = f.polys[i].eval(x0);
        for (int j = 0; j < 2; ++j) J(i, j) = f.polys[i].diff(j).eval(x0);
    }
    Eigen::VectorXcd d = J.partialPivLu().solve(v);
    REQUIRE(run.iterates.size() >= 2);
    for (int j = 0; j < 2; ++j)
        CHECK(std::abs(run.iterates[1][j] - (x0[j] - d(j))) < 1e-12);

    CHECK(run.converged);
    // converged to the circle/diagonal intersection
    double s = 1.0 / std::sqrt(2.0);
    CHECK(dist(run.iterates.back(), {s, s}) < 1e-12);
}

TEST_CASE("linear systems converge in one step") {
    auto f = parse_system("vars: x y\nf1 = x - 1\nf2 = y - 2\n");
    auto run = singular_newton(f, {1.01, 2.02}, {});
    CHECK(run.converged);
    CHECK(dist(run.iterates[1], {1.0, 2.0}) < 1e-14);
}

TEST_CASE("newton_step rejects singular Jacobians") {
    SeriesSystem g;
    g.center = {0.0, 0.0};
    g.order = 2;
    Poly p(2), q(2);
    p.add_term({1, 0}, 1.0);
    p.add_term({0, 1}, 1.0);
    q.add_term({1, 0}, 2.0);
    q.add_term({0, 1}, 2.0);
    g.series = {p, q};
    CHECK_THROWS_AS(newton_step(g, {0.1, 0.1}), std::domain_error);
}

TEST_CASE("newton_step requires a square system") {
    SeriesSystem g;
    g.center = {0.0, 0.0};
    Poly p(2);
    p.add_term({1, 0}, 1.0);
    g.series = {p};
    CHECK_THROWS_AS(newton_step(g, {0.1, 0.1}), std::invalid_argument);
}

TEST_CASE("iteration cap and tolerance are honored") {
    auto f = parse_system(kSample);
    NewtonOptions opt;
    opt.max_iters = 1;
    opt.tol = 1e-30;
    auto run = singular_newton(f, {-0.01, 0.02}, opt);
    CHECK_FALSE(run.converged);
    CHECK(run.step_norms.size() == 1);
}
