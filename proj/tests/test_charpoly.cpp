#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "treespectra/charpoly.hpp"
#include "treespectra/graph.hpp"

using namespace treespectra;
using Catch::Approx;

TEST_CASE("seeds and small cases") {
    CHECK(charpoly_path(0).is_zero());
    CHECK(charpoly_path(1) == CharPoly::x());
    CHECK(charpoly_B(0) == CharPoly::constant(1));
    CHECK(charpoly_H(0) == CharPoly::constant(1));
    // Phi(P_2) = x^2 - 2x, from det(xI - L(P_2)) by hand
    CHECK(charpoly_path(2) == CharPoly({BigInt(0), BigInt(-2), BigInt(1)}));
    CHECK(charpoly_B(1) == CharPoly({BigInt(-1), BigInt(1)}));
    CHECK(charpoly_H(1) == CharPoly({BigInt(-2), BigInt(1)}));
}

TEST_CASE("three-term recurrence and division identities") {
    const CharPoly x = CharPoly::x();
    const CharPoly step({BigInt(-2), BigInt(1)});
    for (int n = 1; n <= 20; ++n) {
        CHECK(charpoly_path(n + 1) == step * charpoly_path(n) - charpoly_path(n - 1));
        CHECK(x * charpoly_B(n) == charpoly_path(n + 1) + charpoly_path(n));
        CHECK(x * charpoly_H(n) == charpoly_path(n + 1));
        CHECK(charpoly_B(n) + charpoly_B(n - 1) == charpoly_path(n));
    }
    for (int m = 2; m <= 12; ++m)
        for (int n = 1; n <= 12; ++n)
            CHECK(charpoly_path(m) * charpoly_path(n) -
                      charpoly_path(m - 1) * charpoly_path(n + 1) ==
                  charpoly_path(m - 1) * charpoly_path(n - 1) -
                      charpoly_path(m - 2) * charpoly_path(n));
}

TEST_CASE("recurrences reproduce fraction-free determinants") {
    for (int n = 1; n <= 12; ++n) {
        // Phi(P_n) = det(xI - L(P_n))
        CHECK(charpoly_path(n) == oracle::det_xI_minus(oracle::laplacian_int(build_path(n))));
        // B_n deletes the first row/column of L(P_{n+1})
        auto lp = oracle::laplacian_int(build_path(n + 1));
        std::vector<std::vector<long long>> b(n, std::vector<long long>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b[i][j] = lp[i + 1][j + 1];
        CHECK(charpoly_B(n) == oracle::det_xI_minus(b));
        // H_n deletes both end rows/columns of L(P_{n+2})
        auto lp2 = oracle::laplacian_int(build_path(n + 2));
        std::vector<std::vector<long long>> h(n, std::vector<long long>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) h[i][j] = lp2[i + 1][j + 1];
        CHECK(charpoly_H(n) == oracle::det_xI_minus(h));
    }
}

TEST_CASE("closed-form roots evaluate to zero") {
    for (int n = 2; n <= 20; ++n) {
        const CharPoly pp = charpoly_path(n);
        for (int i = 1; i <= n; ++i) {
            const double root = 4 * std::pow(std::sin((i - 1) * std::numbers::pi / (2 * n)), 2);
            CHECK(std::abs(pp.eval(root)) <= 1e-6 * pp.l1_norm());
        }
        const CharPoly pb = charpoly_B(n);
        for (int i = 1; i <= n; ++i) {
            const double root =
                4 * std::pow(std::sin((2 * i - 1) * std::numbers::pi / (4 * n + 2)), 2);
            CHECK(std::abs(pb.eval(root)) <= 1e-6 * pb.l1_norm());
        }
    }
}

TEST_CASE("polynomial arithmetic") {
    const CharPoly a({BigInt(1), BigInt(2)});   // 2x + 1
    const CharPoly b({BigInt(-1), BigInt(1)});  // x - 1
    CHECK((a * b) == CharPoly({BigInt(-1), BigInt(-1), BigInt(2)}));
    CHECK((a + b) == CharPoly({BigInt(0), BigInt(3)}));
    CHECK((a - a).is_zero());
    CHECK(a.eval(BigRat(1, 2)) == BigRat(2));
    CHECK(a.derivative() == CharPoly::constant(2));
    CHECK(charpoly_path(3).to_string() == "x^3 - 4*x^2 + 3*x");
    CHECK(CharPoly().to_string() == "0");
}

TEST_CASE("smallest_positive_root") {
    // (x - 1)(x - 3) x = x^3 - 4x^2 + 3x
    CHECK(smallest_positive_root(charpoly_path(3)) == Approx(1.0).margin(1e-12));
    // cubic x^3 - 6x^2 + 10x - 4 has smallest root 2 - sqrt(2)
    const CharPoly cubic({BigInt(-4), BigInt(10), BigInt(-6), BigInt(1)});
    CHECK(smallest_positive_root(cubic) == Approx(2 - std::sqrt(2.0)).margin(1e-12));
    // zero roots are stripped before isolation
    CHECK(smallest_positive_root(CharPoly({BigInt(0), BigInt(0), BigInt(-2), BigInt(1)})) ==
          Approx(2.0).margin(1e-12));
    CHECK_THROWS_AS(smallest_positive_root(CharPoly()), std::invalid_argument);
    // x^2 + 1 has no real roots
    CHECK_THROWS_AS(smallest_positive_root(CharPoly({BigInt(1), BigInt(0), BigInt(1)})),
                    std::invalid_argument);
}

TEST_CASE("divexact oracle helper") {
    const CharPoly p = charpoly_path(6);
    const CharPoly q = charpoly_path(3);
    CHECK(oracle::divexact(p * q, q) == p);
    CHECK_THROWS(oracle::divexact(p + CharPoly::constant(1), CharPoly::x()));
}

TEST_CASE("int64 serialization") {
    const auto v = charpoly_to_int64(charpoly_path(4));
    CHECK(v == std::vector<std::int64_t>{0, -4, 10, -6, 1});
    // 2^70 overflows
    CharPoly big({BigInt(1) << 70});
    CHECK_THROWS_AS(charpoly_to_int64(big), std::overflow_error);
}
