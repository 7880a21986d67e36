#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kernel.hpp"
#include "multiplicity.hpp"
#include "parser.hpp"

using namespace mroot;

namespace {

const char* kSample =
    "vars: x y\n"
    "f1 = x^3/3 + x*y^2 + x^2 + 2*x*y + y^2\n"
    "f2 = x^2*y - x*y^2 + x^2 + 2*x*y + y^2\n";

}  // namespace

TEST_CASE("graded monomial enumeration") {
    auto ms = monomials_upto(2, 2);
    REQUIRE(ms.size() == 6);
    CHECK(ms[0] == Mono{0, 0});
    CHECK(ms[1] == Mono{1, 0});
    CHECK(ms[2] == Mono{0, 1});
    CHECK(ms[3] == Mono{2, 0});
    // count is binomial(n + d, n)
    CHECK(monomials_upto(3, 4).size() == 35);
}

TEST_CASE("multiplicity of the sample cubic at the origin is six") {
    auto f = parse_system(kSample);
    auto res = multiplicity(f, {0.0, 0.0});
    CHECK(res.mu == 6);
    CHECK(res.stabilized);
    CHECK(res.degree_cap_used == 4);
    CHECK(res.dims == std::vector<int>{3, 5, 6, 6});
}

TEST_CASE("squares have multiplicity four") {
    auto f = parse_system("vars: x y\nf1 = x^2\nf2 = y^2\n");
    auto res = multiplicity(f, {0.0, 0.0});
    CHECK(res.mu == 4);
    CHECK(res.stabilized);
}

TEST_CASE("simple roots have multiplicity one") {
    auto f = parse_system("vars: x\nf = x - 1\n");
    auto res = multiplicity(f, {1.0});
    CHECK(res.mu == 1);
    CHECK(res.stabilized);
}

TEST_CASE("mixed-degree pair and its critical system") {
    auto f = parse_system("vars: x y\nf1 = x^2 + y^3\nf2 = x^2 - y^3\n");
    CHECK(multiplicity(f, {0.0, 0.0}).mu == 6);
    // gradient components of x^2 + y^3
    auto g = parse_system("vars: x y\ng1 = 2*x\ng2 = 3*y^2\n");
    CHECK(multiplicity(g, {0.0, 0.0}).mu == 2);
}

TEST_CASE("multiplicity respects the Bezout bound") {
    auto f = parse_system(kSample);
    auto res = multiplicity(f, {0.0, 0.0});
    CHECK(res.mu <= 3 * 3);
    auto sq = parse_system("vars: x y\nf1 = x^2\nf2 = y^2\n");
    CHECK(multiplicity(sq, {0.0, 0.0}).mu == 4);  // equals d^n here
}

TEST_CASE("shifted roots work through the Taylor shift") {
    // (x - 1)^2 expanded; the grammar has no parenthesized products
    auto f = parse_system("vars: x y\nf1 = x^2 - 2*x + 1\nf2 = y - 2\n");
    auto res = multiplicity(f, {1.0, 2.0});
    CHECK(res.mu == 2);
}

TEST_CASE("non-roots are rejected") {
    auto f = parse_system(kSample);
    CHECK_THROWS_AS(multiplicity(f, {0.5, 0.5}), std::domain_error);
}

TEST_CASE("cap exhaustion reports no stabilization") {
    auto f = parse_system("vars: x\nf = x^6\n");
    auto res = multiplicity(f, {0.0}, 4);
    CHECK_FALSE(res.stabilized);
    auto full = multiplicity(f, {0.0});
    CHECK(full.mu == 6);
    CHECK(full.stabilized);
}

TEST_CASE("oversized problems are rejected rather than attempted") {
    std::string text = "vars: a b c d e f g h\nq = a + b + c + d + e + f + g + h\n";
    auto f = parse_system(text);
    CHECK_THROWS_AS(multiplicity(f, std::vector<cd>(8, 0.0)), std::length_error);
}

TEST_CASE("kerneling drops the multiplicity") {
    auto f = parse_system(kSample);
    auto F0 = recenter(f, {0.0, 0.0}, 8);
    auto K = kerneling(F0, 0, 7);
    CHECK(check_drop(f, K.system, {0.0, 0.0}));
}

TEST_CASE("check_drop rejects regular systems") {
    auto f = parse_system("vars: x y\nf1 = x - 1\nf2 = y\n");
    auto F0 = recenter(f, {1.0, 0.0}, 4);
    auto K = kerneling(F0, 0, 3);
    CHECK_THROWS_AS(check_drop(f, K.system, {1.0, 0.0}), std::invalid_argument);
}
