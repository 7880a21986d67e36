#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "numrank.hpp"
#include "oracles.hpp"

using namespace mroot;

namespace {

Eigen::MatrixXcd diag(const std::vector<double>& d) {
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) M(i, i) = d[i];
    return M;
}

}  // namespace

TEST_CASE("elementary symmetric sums against brute force") {
    std::vector<double> sig{3.0, 2.0, 0.5};
    auto s = elementary_symmetric(sig);
    REQUIRE(s.size() == 4);
    CHECK(s[0] == doctest::Approx(1.0));
    CHECK(s[1] == doctest::Approx(3.0 + 2.0 + 0.5));
    CHECK(s[2] == doctest::Approx(3 * 2.0 + 3 * 0.5 + 2 * 0.5));
    CHECK(s[3] == doctest::Approx(3.0 * 2.0 * 0.5));
}

TEST_CASE("zero matrix has rank zero") {
    auto prof = numerical_rank(Eigen::MatrixXcd::Zero(3, 2));
    CHECK(prof.rank == 0);
}

TEST_CASE("identity is full rank with sigma_min/2 epsilon") {
    auto prof = numerical_rank(Eigen::MatrixXcd::Identity(3, 3));
    CHECK(prof.rank == 3);
    CHECK_FALSE(prof.chosen_m.has_value());
    CHECK(prof.epsilon == doctest::Approx(0.5));
}

TEST_CASE("clean gap is detected") {
    auto prof = numerical_rank(diag({1.0, 2e-9}));
    CHECK(prof.rank == 1);
    REQUIRE(prof.chosen_m.has_value());
    CHECK(*prof.chosen_m == 1);
    // epsilon separates the head from the tail
    CHECK(prof.epsilon < 1.0);
    CHECK(prof.epsilon >= 2e-9);
    CHECK(prof.consistent);
}

TEST_CASE("near-ties inside the head are not split") {
    // adjacent ratio 2 stays below the a < 1/9 threshold (needs ratio ~6.9)
    auto prof = numerical_rank(diag({4.0, 2.0, 1.0}));
    CHECK(prof.rank == 3);
}

TEST_CASE("lone scalar cases") {
    Eigen::MatrixXcd one(1, 1);
    one(0, 0) = 0.3;
    auto prof = numerical_rank(one);
    CHECK(prof.rank == 1);
    one(0, 0) = 0.0;
    CHECK(numerical_rank(one).rank == 0);
}

TEST_CASE("wide matrices go through the adjoint") {
    Eigen::MatrixXcd M(2, 4);
    M.setZero();
    M(0, 0) = 2.0;
    M(1, 1) = 1e-8;
    auto wide = numerical_rank(M);
    auto tall = numerical_rank(Eigen::MatrixXcd(M.adjoint()));
    CHECK(wide.rank == tall.rank);
    CHECK(wide.epsilon == doctest::Approx(tall.epsilon).epsilon(1e-13));
}

TEST_CASE("scaling covariance") {
    // rank and chosen_m are scale-free; epsilon scales linearly
    std::mt19937_64 rng(4);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> logc(-2.3, 2.3);
    for (int t = 0; t < 20; ++t) {
        Eigen::MatrixXcd M(4, 3);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 3; ++j) M(i, j) = cd(g(rng), g(rng));
        double c = std::exp(logc(rng));
        auto p1 = numerical_rank(M);
        auto p2 = numerical_rank(Eigen::MatrixXcd(c * M));
        CHECK(p1.rank == p2.rank);
        CHECK(p2.epsilon == doctest::Approx(c * p1.epsilon).epsilon(1e-8));
    }
    // rank-deficient spectra, exact by construction
    for (auto d : {std::vector<double>{3.0, 1.5, 1e-8}, std::vector<double>{5.0, 4.0, 1e-7, 2e-8}}) {
        double c = std::exp(logc(rng));
        auto p1 = numerical_rank(diag(d));
        for (auto& v : d) v *= c;
        auto p2 = numerical_rank(diag(d));
        CHECK(p1.rank == p2.rank);
        CHECK(p1.chosen_m == p2.chosen_m);
        CHECK(p2.epsilon == doctest::Approx(c * p1.epsilon).epsilon(1e-12));
    }
}

TEST_CASE("epsilon sits between the head and the tail") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        auto [M, r] = oracles::planted_rank_matrix(rng);
        auto prof = numerical_rank(M);
        REQUIRE(prof.rank == r);
        int n = static_cast<int>(prof.sigma.size());
        if (r > 0) CHECK(prof.sigma[r - 1] > prof.epsilon);
        if (r < n) CHECK(prof.sigma[r] <= prof.epsilon);
        CHECK(prof.consistent);
    }
}

TEST_CASE("planted ranks are recovered, 100 trials") {
    std::mt19937_64 rng(20260814);
    int good = 0;
    for (int t = 0; t < 100; ++t) {
        auto [M, r] = oracles::planted_rank_matrix(rng);
        if (numerical_rank(M).rank == r) ++good;
    }
    CHECK(good == 100);
}

TEST_CASE("candidate list covers every defect and picks the largest admissible") {
    auto prof = numerical_rank(diag({5.0, 4.0, 1e-7, 2e-8}));
    CHECK(prof.rank == 2);
    REQUIRE(prof.chosen_m.has_value());
    CHECK(*prof.chosen_m == 2);
    bool saw_m2 = false;
    for (const auto& c : prof.candidates) {
        if (c.m == 2) {
            saw_m2 = true;
            CHECK(c.a < 1.0 / 9.0);
            CHECK(c.a == doctest::Approx(c.b * c.g).epsilon(1e-13));
        }
    }
    CHECK(saw_m2);
}
