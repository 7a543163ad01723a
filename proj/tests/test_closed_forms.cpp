#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <set>

#include "oracles.hpp"
#include "treespectra/closed_forms.hpp"
#include "treespectra/enumeration.hpp"
#include "treespectra/graph.hpp"
#include "treespectra/spectra.hpp"

using namespace treespectra;
using Catch::Approx;

namespace {

TreeGraph two_length_spider(int p1, int p2, int l1, int l2) {
    std::vector<std::pair<int, int>> parts;
    if (p1 > 0) parts.emplace_back(p1, l1);
    if (p2 > 0) parts.emplace_back(p2, l2);
    if (p1 == 0) return build_spider(parts);  // single surviving part
    return build_spider({{p1, l1}, {p2, l2}});
}

void check_spectra_match(const std::vector<double>& closed, const std::vector<double>& numeric,
                         double tol = 1e-9) {
    REQUIRE(closed.size() == numeric.size());
    for (size_t i = 0; i < closed.size(); ++i)
        CHECK(numeric[i] == Approx(closed[i]).margin(tol));
}

double boundary_residual(const TreeGraph& t, const Eigenfunction& f) {
    const auto b = leaves(t);
    const auto lam = dtn_matrix(t, b);
    Eigen::VectorXd fb(b.size());
    for (int i = 0; i < b.size(); ++i) fb[i] = f.values[b.members[i]];
    return eigen_residual(lam, f.eigenvalue, fb);
}

}  // namespace

TEST_CASE("spider_steklov closed spectrum") {
    // two legs of one length: {0, 1/l}
    for (int l = 1; l <= 4; ++l) {
        const auto s = spider_steklov(2, 0, l, 1);
        REQUIRE(s.order() == 2);
        CHECK(s.sorted_values()[1] == Approx(1.0 / l).margin(1e-15));
    }
    // (1,2,2,1): {0, 3/5, 1}
    const auto s = spider_steklov(1, 2, 2, 1);
    check_spectra_match(s.sorted_values(), {0.0, 0.6, 1.0}, 1e-15);
    // sigma_2 of the legs-2-and-1 family is exactly 1/2 for m >= 3
    for (int m = 3; m <= 6; ++m)
        for (int n = 2 * m; n <= 2 * m + 3; ++n)
            CHECK(spider_steklov(m - 1, n - 2 * m + 1, 2, 1).sorted_values()[1] == 0.5);
    CHECK_THROWS_AS(spider_steklov(1, 0, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(spider_steklov(2, 2, 1, 3), std::invalid_argument);
}

TEST_CASE("spider closed spectrum equals numeric DtN") {
    for (int p1 = 0; p1 <= 4; ++p1)
        for (int p2 = 0; p2 <= 4; ++p2) {
            if (p1 + p2 < 2) continue;
            for (int l1 = 1; l1 <= 4; ++l1)
                for (int l2 = 1; l2 <= l1; ++l2) {
                    const auto t = two_length_spider(p1, p2, l1, l2);
                    check_spectra_match(spider_steklov(p1, p2, l1, l2).sorted_values(),
                                        steklov_spectrum(t).values);
                }
        }
}

TEST_CASE("spider_eigenfunctions") {
    // constant eigenfunction has zero residual
    const auto t = two_length_spider(2, 2, 2, 1);
    const auto funcs = spider_eigenfunctions(2, 2, 2, 1);
    REQUIRE(funcs.size() == 4);
    CHECK(boundary_residual(t, funcs[0]) <= 1e-12);
    // the sign-alternating long-leg pair sits at eigenvalue 1/2
    CHECK(funcs[1].eigenvalue == Approx(0.5));
    CHECK(boundary_residual(t, funcs[1]) <= 1e-9);

    // center value of the cross-part eigenfunction of (1,2,2,1) is -2/5
    const auto cross = spider_eigenfunctions(1, 2, 2, 1);
    REQUIRE(cross.size() == 3);
    CHECK(cross[1].label == "cross_part");
    CHECK(cross[1].values[0] == Approx(-0.4).margin(1e-15));

    // all eigenfunctions across a grid: residual and harmonic-extension checks
    for (int p1 = 0; p1 <= 3; ++p1)
        for (int p2 = 0; p2 <= 3; ++p2) {
            if (p1 + p2 < 2) continue;
            for (int l1 = 1; l1 <= 3; ++l1)
                for (int l2 = 1; l2 <= l1; ++l2) {
                    const auto tree = two_length_spider(p1, p2, l1, l2);
                    const auto fs = spider_eigenfunctions(p1, p2, l1, l2);
                    REQUIRE(static_cast<int>(fs.size()) == leaves(tree).size());
                    for (const auto& f : fs) {
                        CHECK(boundary_residual(tree, f) <= 1e-9);
                        // the stated vertex function is the harmonic extension
                        const auto b = leaves(tree);
                        Eigen::VectorXd fb(b.size());
                        for (int i = 0; i < b.size(); ++i) fb[i] = f.values[b.members[i]];
                        const auto ext = harmonic_extension(tree, b, fb);
                        CHECK((ext - f.values).cwiseAbs().maxCoeff() <= 1e-9);
                    }
                }
        }
}

TEST_CASE("es_sigma_pm") {
    const auto [sm, sp] = es_sigma_pm(3, 1);
    CHECK(sm == Approx((12 - std::sqrt(12.0)) / 22).margin(1e-12));
    CHECK(sp == Approx((12 + std::sqrt(12.0)) / 22).margin(1e-12));
    CHECK(sm < sp);
    // conjugate pair sum: (2bp + 3b - 3) / d
    for (int b = 3; b <= 8; ++b)
        for (int p = 1; p <= 4; ++p) {
            const auto [lo, hi] = es_sigma_pm(b, p);
            const double d = static_cast<double>(b) * p * p + 3.0 * b * p - 3 * p + 2 * b - 4;
            CHECK(lo + hi == Approx((2.0 * b * p + 3 * b - 3) / d).margin(1e-12));
        }
    CHECK_THROWS_AS(es_sigma_pm(2, 1), std::invalid_argument);
}

TEST_CASE("es_steklov closed spectrum") {
    // b = 3 omits the 1/p eigenvalue
    const auto s32 = es_steklov(3, 2);
    CHECK(s32.entries.size() == 3);
    CHECK(s32.order() == 3);
    for (const auto& e : s32.entries) CHECK(e.label != "p_leg_pairs");

    for (int b = 3; b <= 7; ++b)
        for (int p = 1; p <= 4; ++p) CHECK(es_steklov(b, p).order() == b);

    check_spectra_match(es_steklov(4, 1).sorted_values(),
                        steklov_spectrum(build_extra_special(4, 1)).values);
    for (int b = 3; b <= 7; ++b)
        for (int p = 1; p <= 4; ++p)
            check_spectra_match(es_steklov(b, p).sorted_values(),
                                steklov_spectrum(build_extra_special(b, p)).values);
}

TEST_CASE("es_eigenfunctions") {
    {
        const auto t = build_extra_special(3, 1);
        const auto fs = es_eigenfunctions(3, 1);
        REQUIRE(fs.size() == 3);
        CHECK(boundary_residual(t, fs[0]) <= 1e-12);
        CHECK(fs[1].label == "sigma_minus");
        CHECK(boundary_residual(t, fs[1]) <= 1e-9);
    }
    {
        const auto t = build_extra_special(5, 2);
        const auto fs = es_eigenfunctions(5, 2);
        REQUIRE(fs.size() == 5);
        CHECK(fs[3].eigenvalue == Approx(0.5));  // 1/p
        CHECK(boundary_residual(t, fs[3]) <= 1e-9);
        // supported on two p-legs only
        int nonzero_legs = 0;
        for (int v = 0; v < t.n; ++v) nonzero_legs += std::abs(fs[3].values[v]) > 1e-14;
        CHECK(nonzero_legs == 4);  // two legs of length p = 2
    }
    for (int b = 3; b <= 7; ++b)
        for (int p = 1; p <= 4; ++p) {
            const auto t = build_extra_special(b, p);
            for (const auto& f : es_eigenfunctions(b, p)) CHECK(boundary_residual(t, f) <= 1e-9);
        }
}

TEST_CASE("crab_steklov") {
    check_spectra_match(crab_steklov(1, 2, 1).sorted_values(), {0.0, 0.6, 1.0}, 1e-15);
    for (int b = 2; b <= 7; ++b)
        CHECK(crab_steklov(1, b - 1, 1).sorted_values()[1] ==
              Approx(static_cast<double>(b) / (2 * b - 1)).margin(1e-15));
    for (int b = 3; b <= 6; ++b)
        for (int r = 1; r <= 3; ++r)
            CHECK(crab_steklov(1, b - 1, 2 * r).sorted_values()[1] ==
                  Approx(1.0 / (2 * r + (b - 1.0) / b)).margin(1e-12));
    for (int b1 = 1; b1 <= 4; ++b1)
        for (int b2 = 1; b2 <= 4; ++b2)
            for (int r = 1; r <= 3; ++r)
                check_spectra_match(crab_steklov(b1, b2, r).sorted_values(),
                                    steklov_spectrum(build_crab(b1, b2, r)).values);
}

TEST_CASE("quotient_matrix_crab structure") {
    // Q_{1,1;r} is L(P_{2r+2}) after laying the path across the two centers
    for (int r = 1; r <= 4; ++r) {
        const auto q = quotient_matrix_crab(1, 1, r);
        const auto L = oracle::laplacian_int(build_path(2 * r + 2));
        std::vector<int> pos(q.order);
        pos[0] = r;
        for (int i = 1; i <= r; ++i) pos[i] = r - i;
        pos[r + 1] = r + 1;
        for (int i = 1; i <= r; ++i) pos[r + 1 + i] = r + 1 + i;
        for (int i = 0; i < q.order; ++i)
            for (int j = 0; j < q.order; ++j)
                CHECK(q.entries[i][j] == BigRat(L[pos[i]][pos[j]]));
    }
    // row sums vanish
    for (int b1 = 1; b1 <= 3; ++b1)
        for (int b2 = 1; b2 <= 3; ++b2)
            for (int r = 1; r <= 3; ++r) {
                const auto q = quotient_matrix_crab(b1, b2, r);
                for (int i = 0; i < q.order; ++i) {
                    BigRat s = 0;
                    for (int j = 0; j < q.order; ++j) s += q.entries[i][j];
                    CHECK(s == 0);
                }
            }
}

TEST_CASE("L P = P Q for the crab partition") {
    for (int b1 = 1; b1 <= 3; ++b1)
        for (int b2 = 1; b2 <= 3; ++b2)
            for (int r = 1; r <= 3; ++r) {
                const auto t = build_crab(b1, b2, r);
                const auto q = quotient_matrix_crab(b1, b2, r);
                // part index of every vertex under the constructor layout
                std::vector<int> part(t.n);
                part[0] = 0;
                for (int leg = 0; leg < b1; ++leg)
                    for (int j = 1; j <= r; ++j) part[1 + leg * r + (j - 1)] = j;
                const int v0 = b1 * r + 1;
                part[v0] = r + 1;
                for (int leg = 0; leg < b2; ++leg)
                    for (int j = 1; j <= r; ++j) part[v0 + 1 + leg * r + (j - 1)] = r + 1 + j;
                const auto L = oracle::laplacian_int(t);
                for (int v = 0; v < t.n; ++v)
                    for (int c = 0; c < q.order; ++c) {
                        long long lhs = 0;  // (L P)_{v,c}
                        for (int w = 0; w < t.n; ++w)
                            if (part[w] == c) lhs += L[v][w];
                        CHECK(BigRat(lhs) == q.entries[part[v]][c]);
                    }
            }
}

TEST_CASE("quotient charpoly expansion") {
    for (int b = 2; b <= 8; ++b)
        CHECK(charpoly_quotient_crab(1, b - 1, 1) == CharPoly::x() * crab_r1_cubic(b));
    for (int b1 = 1; b1 <= 4; ++b1)
        for (int b2 = 1; b2 <= 4; ++b2)
            for (int r = 1; r <= 4; ++r)
                CHECK(charpoly_quotient_crab(b1, b2, r) ==
                      oracle::charpoly_of_quotient(quotient_matrix_crab(b1, b2, r)));
}

TEST_CASE("quotient_matrix_spider") {
    for (int b = 1; b <= 5; ++b)
        for (int r = 1; r <= 4; ++r) {
            const auto q = quotient_matrix_spider(b, r);
            // Q_{b;r} = diag(b, 1, ..., 1) * L(P_{r+1})
            const auto L = oracle::laplacian_int(build_path(r + 1));
            for (int i = 0; i <= r; ++i)
                for (int j = 0; j <= r; ++j)
                    CHECK(q.entries[i][j] == BigRat((i == 0 ? b : 1) * L[i][j]));
            BigRat row0 = 0;
            for (int j = 0; j <= r; ++j) row0 += q.entries[0][j];
            CHECK(row0 == 0);
        }
    // mu(Q_{1;r}) equals the path Laplacian spectrum, and mu_2(Q_{b;r}) >= lambda_2(P_{r+1})
    for (int r = 1; r <= 5; ++r) {
        const auto mus = quotient_eigenvalues(quotient_matrix_spider(1, r));
        const auto lams = laplacian_spectrum(build_path(r + 1));
        for (int i = 0; i <= r; ++i) CHECK(mus.values[i] == Approx(lams.values[i]).margin(1e-10));
        for (int b = 2; b <= 6; ++b)
            CHECK(quotient_eigenvalues(quotient_matrix_spider(b, r)).values[1] >=
                  lams.values[1] - 1e-10);
    }
}

TEST_CASE("crab_lambda2") {
    for (int b1 = 1; b1 <= 4; ++b1)
        for (int b2 = 1; b2 <= 4; ++b2)
            for (int r = 1; r <= 4; ++r) {
                const double via_quotient = crab_lambda2(b1, b2, r);
                CHECK(via_quotient ==
                      Approx(laplacian_spectrum(build_crab(b1, b2, r)).values[1]).margin(1e-9));
                CHECK(via_quotient == Approx(crab_lambda2_root(b1, b2, r)).margin(1e-9));
            }
    // (1, b-1, 1) is the smallest root of the r = 1 cubic
    for (int b = 2; b <= 8; ++b)
        CHECK(crab_lambda2(1, b - 1, 1) ==
              Approx(smallest_positive_root(crab_r1_cubic(b))).margin(1e-10));
    // balancing the two sides never increases the connectivity
    for (int r = 1; r <= 3; ++r)
        for (int b = 3; b <= 7; ++b) {
            for (int b1 = 1; b1 + 1 <= b - b1 - 1; ++b1)
                CHECK(crab_lambda2(b1 + 1, b - b1 - 1, r) <= crab_lambda2(b1, b - b1, r) + 1e-12);
            for (int b1 = 2; b1 < b - 1; ++b1)
                CHECK(crab_lambda2(b1, b - b1, r) < crab_lambda2(1, b - 1, r) - 1e-12);
            // strictly above lambda_2(P_{2r+3})
            CHECK(crab_lambda2(1, b - 1, r) >
                  laplacian_spectrum(build_path(2 * r + 3)).values[1]);
        }
}

TEST_CASE("spider_lambda2") {
    CHECK(spider_lambda2(3, 2) ==
          Approx(4 * std::pow(std::sin(std::numbers::pi / 10), 2)).margin(1e-15));
    for (int r = 1; r <= 4; ++r) {
        const double v = spider_lambda2(2, r);
        for (int b = 2; b <= 7; ++b) {
            CHECK(spider_lambda2(b, r) == v);  // independent of b
            CHECK(laplacian_spectrum(build_spider({{b, r}})).values[1] == Approx(v).margin(1e-9));
        }
    }
    CHECK_THROWS_AS(spider_lambda2(1, 2), std::invalid_argument);
}

TEST_CASE("lifted path eigenfunctions") {
    for (auto [b1, b2, r] : std::vector<std::tuple<int, int, int>>{
             {2, 2, 2}, {1, 3, 2}, {3, 2, 3}, {2, 5, 1}}) {
        const auto t = build_crab(b1, b2, r);
        const auto L = laplacian_matrix(t);
        const auto spaces = lifted_path_eigenfunctions(b1, b2, r);
        REQUIRE(static_cast<int>(spaces.size()) == r);
        for (const auto& space : spaces) {
            CHECK(static_cast<int>(space.functions.size()) == b1 + b2 - 2);
            for (const auto& f : space.functions) {
                CHECK(eigen_residual(L, space.eigenvalue, f) <= 1e-9);
                // orthogonal to every part indicator
                std::vector<double> part_sum(2 * r + 2, 0.0);
                std::vector<int> part(t.n);
                part[0] = 0;
                for (int leg = 0; leg < b1; ++leg)
                    for (int j = 1; j <= r; ++j) part[1 + leg * r + (j - 1)] = j;
                const int v0 = b1 * r + 1;
                part[v0] = r + 1;
                for (int leg = 0; leg < b2; ++leg)
                    for (int j = 1; j <= r; ++j) part[v0 + 1 + leg * r + (j - 1)] = r + 1 + j;
                for (int v = 0; v < t.n; ++v) part_sum[part[v]] += f[v];
                for (double s : part_sum) CHECK(std::abs(s) <= 1e-9);
            }
        }
    }
}

TEST_CASE("full crab spectrum accounted by quotient plus lifts") {
    for (auto [b1, b2, r] :
         std::vector<std::tuple<int, int, int>>{{2, 3, 2}, {3, 3, 1}, {1, 4, 2}}) {
        std::vector<double> combo = quotient_eigenvalues(quotient_matrix_crab(b1, b2, r)).values;
        for (const auto& space : lifted_path_eigenfunctions(b1, b2, r))
            for (int k = 0; k < b1 + b2 - 2; ++k) combo.push_back(space.eigenvalue);
        std::sort(combo.begin(), combo.end());
        const auto full = laplacian_spectrum(build_crab(b1, b2, r)).values;
        REQUIRE(combo.size() == full.size());  // r(b1+b2) + 2 functions in total
        for (size_t i = 0; i < combo.size(); ++i)
            CHECK(combo[i] == Approx(full[i]).margin(1e-8));
    }
}

TEST_CASE("charpoly_identity_checks") {
    const auto rep = charpoly_identity_checks(4, 6);
    CHECK(rep.ok());
    CHECK(rep.checks_run > 100);
    // b1 = b2 - 1 makes the first difference vanish
    for (int r = 1; r <= 3; ++r)
        for (int b1 = 1; b1 <= 3; ++b1)
            CHECK(charpoly_quotient_crab(b1 + 1, b1, r) == charpoly_quotient_crab(b1, b1 + 1, r));
    // b = 2 makes the second difference vanish
    for (int r = 1; r <= 4; ++r)
        CHECK(charpoly_quotient_crab(1, 1, r) == charpoly_quotient_crab(1, 2 - 1, r));
}

TEST_CASE("eigenvalue product inequality") {
    // P = identity and P = c * identity reduce to exact equalities
    Eigen::MatrixXd s(3, 3);
    s << 2, 1, 0, 1, 2, 1, 0, 1, 2;
    const auto mu_s = eigenvalues_sym(SymmetricMatrix(Eigen::MatrixXd(s))).values;
    const auto mu_cs = eigenvalues_sym(SymmetricMatrix(Eigen::MatrixXd(2.5 * s))).values;
    for (int k = 0; k < 3; ++k) CHECK(mu_cs[k] == Approx(2.5 * mu_s[k]).margin(1e-12));

    const auto rep = eigenvalue_product_inequality_check(500);
    CHECK(rep.ok());
    CHECK(rep.checks_run >= 500);
    CHECK_THROWS_AS(eigenvalue_product_inequality_check(0), std::invalid_argument);
}

TEST_CASE("theorem_bound_nm") {
    const auto star = theorem_bound_nm(6, 1, Operator::steklov);
    CHECK(star.bound == 1.0);
    CHECK(star.claim == ExtremalClaim::unique);
    REQUIRE(star.extremal.size() == 1);
    CHECK(star.extremal[0].to_string() == "star:6");

    const auto crab = theorem_bound_nm(7, 2, Operator::steklov);
    CHECK(crab.bound == Approx(5.0 / 9).margin(1e-15));
    CHECK(crab.extremal[0].to_string() == "crab:1,4,1");

    const auto spider = theorem_bound_nm(9, 3, Operator::steklov);
    CHECK(spider.bound == 0.5);
    CHECK(spider.extremal[0].to_string() == "spider:2x2,4x1");

    // ranch m = 2: smallest cubic root matches the numeric crab connectivity
    for (int n = 5; n <= 10; ++n) {
        const auto tb = theorem_bound_nm(n, 2, Operator::laplacian);
        CHECK(tb.bound ==
              Approx(laplacian_spectrum(build_crab(1, n - 3, 1)).values[1]).margin(1e-9));
    }
    CHECK(theorem_bound_nm(8, 3, Operator::laplacian).bound ==
          Approx(4 * std::pow(std::sin(std::numbers::pi / 10), 2)).margin(1e-15));

    CHECK_THROWS_AS(theorem_bound_nm(5, 3, Operator::steklov), std::invalid_argument);
    CHECK_THROWS_AS(theorem_bound_nm(1, 1, Operator::steklov), std::invalid_argument);
}

TEST_CASE("theorem_bound_bm") {
    const auto open_case = theorem_bound_bm(4, 4 * 1 + 2, Operator::steklov);
    CHECK(open_case.case_label == "fell:m=br+2");
    CHECK(open_case.bound == Approx(2.0 / 7).margin(1e-15));
    CHECK(open_case.claim == ExtremalClaim::open);
    CHECK(open_case.extremal.empty());
    CHECK(open_case.conjecture_value == Approx(es_sigma_pm(4, 2).first).margin(1e-12));

    const auto path_case = theorem_bound_bm(2, 5, Operator::laplacian);
    CHECK(path_case.bound == Approx(4 * std::pow(std::sin(std::numbers::pi / 20), 2)).margin(1e-15));
    CHECK(path_case.extremal[0].to_string() == "path:10");

    // fell m = br+1: crab bound b/(2rb + b - 1)
    const auto crab_case = theorem_bound_bm(4, 5, Operator::steklov);
    CHECK(crab_case.case_label == "fell:m=br+1");
    CHECK(crab_case.bound == Approx(4.0 / 11).margin(1e-15));
    CHECK(crab_case.extremal[0].to_string() == "crab:1,3,2");

    // unit m = br+1: exact quotient root equals the numeric crab connectivity
    const auto unit_crab = theorem_bound_bm(4, 5, Operator::laplacian);
    CHECK(unit_crab.bound ==
          Approx(laplacian_spectrum(build_crab(1, 3, 2)).values[1]).margin(1e-9));

    // attainment case: the named spider lies in the class and attains the bound
    const auto attain = theorem_bound_bm(5, 4, Operator::steklov);  // m = 4 = 5*0 + 4, s = 4
    CHECK(attain.case_label == "fell:m=br+s");
    CHECK(attain.claim == ExtremalClaim::attains);
    CHECK(attain.bound == 0.5);
    const auto sp = attain.extremal[0].build();
    CHECK(leaves(sp).size() == 5);
    CHECK(matching_number(sp) == 4);
    CHECK(steklov_spectrum(sp).values[1] == Approx(0.5).margin(1e-12));

    CHECK_THROWS_AS(theorem_bound_bm(1, 1, Operator::steklov), std::invalid_argument);
}
