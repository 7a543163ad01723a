// Closed-form spectra, explicit eigenfunctions, quotient matrices of
// equitable partitions, and the extremal bound tables.
//
// Explicit eigenfunctions are emitted as full vertex functions under the
// constructors' fixed indexing (see graph.hpp); their boundary restrictions
// are DtN eigenvectors and the full functions are the harmonic extensions.
#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>

#include "treespectra/charpoly.hpp"
#include "treespectra/graph.hpp"
#include "treespectra/spectra.hpp"

namespace treespectra {

// Eigenvalue kept in exact form: a rational, or a chosen root of an
// integer-coefficient quadratic. Comparisons against numeric spectra happen
// only after real evaluation.
struct ExactValue {
    enum class Form { rational, quadratic_root };

    Form form = Form::rational;
    BigRat rational;        // Form::rational
    BigInt qa, qb, qc;      // Form::quadratic_root: qa*x^2 + qb*x + qc = 0
    int root_sign = -1;     // -1 picks (-qb - sqrt(disc)) / (2 qa), +1 the other

    static ExactValue from_rational(BigRat r) {
        ExactValue v;
        v.form = Form::rational;
        v.rational = std::move(r);
        return v;
    }
    static ExactValue quadratic_root(BigInt a, BigInt b, BigInt c, int sign) {
        ExactValue v;
        v.form = Form::quadratic_root;
        v.qa = std::move(a);
        v.qb = std::move(b);
        v.qc = std::move(c);
        v.root_sign = sign;
        return v;
    }

    double to_double() const {
        if (form == Form::rational) return rational.convert_to<double>();
        const double a = qa.convert_to<double>();
        const double b = qb.convert_to<double>();
        const double c = qc.convert_to<double>();
        const double disc = std::sqrt(b * b - 4 * a * c);
        return (-b + root_sign * disc) / (2 * a);
    }
};

struct ClosedEntry {
    ExactValue value;
    int multiplicity = 1;
    std::string label;
};

struct ClosedSpectrum {
    std::vector<ClosedEntry> entries;

    int order() const {
        int s = 0;
        for (const auto& e : entries) s += e.multiplicity;
        return s;
    }
    std::vector<double> sorted_values() const {
        std::vector<double> v;
        for (const auto& e : entries)
            for (int k = 0; k < e.multiplicity; ++k) v.push_back(e.value.to_double());
        std::sort(v.begin(), v.end());
        return v;
    }
};

struct Eigenfunction {
    double eigenvalue = 0;
    Eigen::VectorXd values;  // on all vertices of the associated graph
    std::string label;
};

// ---------------------------------------------------------------------------
// Spider graphs with two leg lengths

namespace detail {
inline void check_two_length_spider(int p1, int p2, int l1, int l2) {
    if (p1 < 0 || p2 < 0 || p1 + p2 < 2)
        throw std::invalid_argument("spider: p1, p2 >= 0 and p1 + p2 >= 2 required");
    if (l2 < 1 || l1 < l2) throw std::invalid_argument("spider: l1 >= l2 >= 1 required");
}
}  // namespace detail

// Steklov spectrum of Sp_{p1,p2; l1,l2} with leaves as boundary:
// {0} u {1/l1 x (p1-1)} u {(p1+p2)/(l2 p1 + l1 p2)} u {1/l2 x (p2-1)},
// where entries whose leg population is too small are omitted.
inline ClosedSpectrum spider_steklov(int p1, int p2, int l1, int l2) {
    detail::check_two_length_spider(p1, p2, l1, l2);
    ClosedSpectrum s;
    s.entries.push_back({ExactValue::from_rational(BigRat(0)), 1, "constant"});
    if (p1 >= 2)
        s.entries.push_back({ExactValue::from_rational(BigRat(1, l1)), p1 - 1, "long_leg_pairs"});
    if (p1 >= 1 && p2 >= 1)
        s.entries.push_back({ExactValue::from_rational(BigRat(p1 + p2, l2 * p1 + l1 * p2)), 1,
                             "cross_part"});
    if (p2 >= 2)
        s.entries.push_back({ExactValue::from_rational(BigRat(1, l2)), p2 - 1, "short_leg_pairs"});
    return s;
}

// The eigenfunctions behind spider_steklov, as vertex functions on
// build_spider({{p1,l1},{p2,l2}}). Functions whose eigenvalue is omitted from
// the spectrum are omitted here as well.
inline std::vector<Eigenfunction> spider_eigenfunctions(int p1, int p2, int l1, int l2) {
    detail::check_two_length_spider(p1, p2, l1, l2);
    const int nverts = 1 + p1 * l1 + p2 * l2;
    const auto u = [&](int i, int j) { return 1 + (i - 1) * l1 + (j - 1); };
    const auto v = [&](int i, int j) { return 1 + p1 * l1 + (i - 1) * l2 + (j - 1); };

    std::vector<Eigenfunction> out;
    out.push_back({0.0, Eigen::VectorXd::Ones(nverts), "constant"});
    // sign-alternating pairs of long legs, eigenvalue 1/l1
    for (int m = 2; m <= p1; ++m) {
        Eigen::VectorXd f = Eigen::VectorXd::Zero(nverts);
        for (int j = 1; j <= l1; ++j) {
            f[u(m - 1, j)] = static_cast<double>(j) / l1;
            f[u(m, j)] = -static_cast<double>(j) / l1;
        }
        out.push_back({1.0 / l1, std::move(f), "long_leg_pairs"});
    }
    if (p1 >= 1 && p2 >= 1) {
        const double denom = l2 * p1 + l1 * p2;
        const double sigma = (p1 + p2) / denom;
        Eigen::VectorXd f = Eigen::VectorXd::Zero(nverts);
        for (int i = 1; i <= p1; ++i)
            for (int j = 1; j <= l1; ++j) f[u(i, j)] = p2 * (1 - (l1 - j) * sigma);
        for (int i = 1; i <= p2; ++i)
            for (int j = 1; j <= l2; ++j) f[v(i, j)] = -p1 * (1 - (l2 - j) * sigma);
        f[0] = (l2 - l1) * p1 * p2 / denom;
        out.push_back({sigma, std::move(f), "cross_part"});
    }
    // sign-alternating pairs of short legs, eigenvalue 1/l2
    for (int m = p1 + 2; m <= p1 + p2; ++m) {
        Eigen::VectorXd f = Eigen::VectorXd::Zero(nverts);
        for (int j = 1; j <= l2; ++j) {
            f[v(m - p1 - 1, j)] = static_cast<double>(j) / l2;
            f[v(m - p1, j)] = -static_cast<double>(j) / l2;
        }
        out.push_back({1.0 / l2, std::move(f), "short_leg_pairs"});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Extra special graphs ES_{b;p} = Sp_{1,1,b-2; p+2,p+1,p}

namespace detail {
inline void check_es(int b, int p) {
    if (b < 3 || p < 1) throw std::invalid_argument("extra special: b >= 3, p >= 1 required");
}
// common denominator of the sigma_ES^{+-} pair
inline long long es_denom(int b, int p) {
    return static_cast<long long>(b) * p * p + 3LL * b * p - 3LL * p + 2LL * b - 4;
}
}  // namespace detail

inline std::pair<double, double> es_sigma_pm(int b, int p) {
    detail::check_es(b, p);
    const double d = static_cast<double>(detail::es_denom(b, p));
    const double num = 2.0 * b * p + 3.0 * b - 3.0;
    const double s = std::sqrt(static_cast<double>(b) * b - 2.0 * b + 9.0);
    return {(num - s) / (2 * d), (num + s) / (2 * d)};
}

// {0, sigma^-, sigma^+, 1/p x (b-3)}; for b = 3 the 1/p entry is missing.
inline ClosedSpectrum es_steklov(int b, int p) {
    detail::check_es(b, p);
    const BigInt d = detail::es_denom(b, p);
    const BigInt num = 2LL * b * p + 3LL * b - 3;
    // sigma satisfies 4d^2 x^2 - 4 d num x + (num^2 - (b^2 - 2b + 9)) = 0
    const BigInt qa = 4 * d * d;
    const BigInt qb = -4 * d * num;
    const BigInt qc = num * num - (BigInt(b) * b - 2 * b + 9);
    ClosedSpectrum s;
    s.entries.push_back({ExactValue::from_rational(BigRat(0)), 1, "constant"});
    s.entries.push_back({ExactValue::quadratic_root(qa, qb, qc, -1), 1, "sigma_minus"});
    s.entries.push_back({ExactValue::quadratic_root(qa, qb, qc, +1), 1, "sigma_plus"});
    if (b > 3)
        s.entries.push_back({ExactValue::from_rational(BigRat(1, p)), b - 3, "p_leg_pairs"});
    return s;
}

// Eigenfunctions on build_extra_special(b, p). The two mixed eigenfunctions
// scale the three leg families by f1, f2, 1 so that the function is affine
// along every leg and consistent at the center.
inline std::vector<Eigenfunction> es_eigenfunctions(int b, int p) {
    detail::check_es(b, p);
    const int nverts = 1 + (p + 2) + (p + 1) + (b - 2) * p;
    const auto v1 = [&](int j) { return j; };
    const auto v2 = [&](int j) { return (p + 2) + j; };
    const auto vi = [&](int i, int j) { return (p + 2) + (p + 1) + (i - 3) * p + j; };

    std::vector<Eigenfunction> out;
    out.push_back({0.0, Eigen::VectorXd::Ones(nverts), "constant"});
    const double d = static_cast<double>(detail::es_denom(b, p));
    const auto [sm, sp] = es_sigma_pm(b, p);
    const char* labels[2] = {"sigma_minus", "sigma_plus"};
    int which = 0;
    for (double sigma : {sm, sp}) {
        const double f1 = 1 - 2.0 * b - static_cast<double>(b) * p + d * sigma;
        const double f2 = 1 + b + static_cast<double>(b) * p - d * sigma;
        Eigen::VectorXd f = Eigen::VectorXd::Zero(nverts);
        for (int j = 1; j <= p + 2; ++j) f[v1(j)] = f1 * (1 - (p + 2 - j) * sigma);
        for (int j = 1; j <= p + 1; ++j) f[v2(j)] = f2 * (1 - (p + 1 - j) * sigma);
        for (int i = 3; i <= b; ++i)
            for (int j = 1; j <= p; ++j) f[vi(i, j)] = 1 - (p - j) * sigma;
        f[0] = 1 - p * sigma;
        out.push_back({sigma, std::move(f), labels[which++]});
    }
    for (int m = 4; m <= b; ++m) {
        Eigen::VectorXd f = Eigen::VectorXd::Zero(nverts);
        for (int j = 1; j <= p; ++j) {
            f[vi(m - 1, j)] = static_cast<double>(j) / p;
            f[vi(m, j)] = -static_cast<double>(j) / p;
        }
        out.push_back({1.0 / p, std::move(f), "p_leg_pairs"});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Crab graphs

// {0, (b1+b2)/(b1 b2 + r (b1+b2)), 1/r x (b1+b2-2)}
inline ClosedSpectrum crab_steklov(int b1, int b2, int r) {
    if (b1 < 1 || b2 < 1 || r < 1) throw std::invalid_argument("crab: b1, b2, r >= 1 required");
    ClosedSpectrum s;
    s.entries.push_back({ExactValue::from_rational(BigRat(0)), 1, "constant"});
    s.entries.push_back(
        {ExactValue::from_rational(BigRat(b1 + b2, b1 * b2 + r * (b1 + b2))), 1, "cross_center"});
    if (b1 + b2 > 2)
        s.entries.push_back({ExactValue::from_rational(BigRat(1, r)), b1 + b2 - 2, "leg_pairs"});
    return s;
}

// ---------------------------------------------------------------------------
// Quotient matrices of the equitable partitions

// Row sums are 0; the spectrum is real because diag(sqrt(part sizes)) turns Q
// into a symmetric matrix by similarity.
struct QuotientMatrix {
    int order = 0;
    std::vector<std::vector<BigRat>> entries;
    std::vector<int> part_sizes;

    Eigen::MatrixXd to_double() const {
        Eigen::MatrixXd m(order, order);
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j) m(i, j) = entries[i][j].convert_to<double>();
        return m;
    }
};

// Parts [u0, u-rings 1..r, v0, v-rings 1..r] of CG_{b1,b2;r}; order 2r+2.
inline QuotientMatrix quotient_matrix_crab(int b1, int b2, int r) {
    if (b1 < 1 || b2 < 1 || r < 1)
        throw std::invalid_argument("quotient_matrix_crab: b1, b2, r >= 1 required");
    QuotientMatrix q;
    q.order = 2 * r + 2;
    q.entries.assign(q.order, std::vector<BigRat>(q.order, BigRat(0)));
    const auto fill_block = [&](int center, int first_ring, int legs) {
        q.entries[center][center] = legs + 1;
        q.entries[center][first_ring] = -legs;
        q.entries[first_ring][center] = -1;
        for (int i = 0; i < r; ++i) {
            q.entries[first_ring + i][first_ring + i] = (i == r - 1) ? 1 : 2;
            if (i + 1 < r) {
                q.entries[first_ring + i][first_ring + i + 1] = -1;
                q.entries[first_ring + i + 1][first_ring + i] = -1;
            }
        }
    };
    fill_block(0, 1, b1);
    fill_block(r + 1, r + 2, b2);
    q.entries[0][r + 1] = -1;
    q.entries[r + 1][0] = -1;
    q.part_sizes.assign(q.order, 1);
    for (int i = 1; i <= r; ++i) {
        q.part_sizes[i] = b1;
        q.part_sizes[r + 1 + i] = b2;
    }
    return q;
}

// Parts [center, rings 1..r] of Sp_{b;r}; order r+1. Equals
// diag(b,1,...,1) * L(P_{r+1}).
inline QuotientMatrix quotient_matrix_spider(int b, int r) {
    if (b < 1 || r < 1) throw std::invalid_argument("quotient_matrix_spider: b, r >= 1 required");
    QuotientMatrix q;
    q.order = r + 1;
    q.entries.assign(q.order, std::vector<BigRat>(q.order, BigRat(0)));
    q.entries[0][0] = b;
    q.entries[0][1] = -b;
    q.entries[1][0] = -1;
    for (int i = 1; i <= r; ++i) {
        q.entries[i][i] = (i == r) ? 1 : 2;
        if (i + 1 <= r) {
            q.entries[i][i + 1] = -1;
            q.entries[i + 1][i] = -1;
        }
    }
    q.part_sizes.assign(q.order, b);
    q.part_sizes[0] = 1;
    return q;
}

inline Spectrum quotient_eigenvalues(const QuotientMatrix& q) {
    Eigen::MatrixXd m = q.to_double();
    for (int i = 0; i < q.order; ++i)
        for (int j = 0; j < q.order; ++j)
            m(i, j) *= std::sqrt(static_cast<double>(q.part_sizes[i]) / q.part_sizes[j]);
    return eigenvalues_sym(SymmetricMatrix(std::move(m)));
}

// Laplace expansion of Phi(Q_{b1,b2;r}) in terms of Phi(B_r), Phi(B_{r-1}).
inline CharPoly charpoly_quotient_crab(int b1, int b2, int r) {
    if (b1 < 1 || b2 < 1 || r < 1)
        throw std::invalid_argument("charpoly_quotient_crab: b1, b2, r >= 1 required");
    const CharPoly br = charpoly_B(r), br1 = charpoly_B(r - 1);
    const CharPoly head(
        {BigInt(static_cast<long long>(b1) * b2 + b1 + b2), BigInt(-(b1 + b2 + 2)), BigInt(1)});
    const CharPoly mid({BigInt(-(2LL * b1 * b2 + b1 + b2)), BigInt(b1 + b2)});
    return head * br * br - mid * br * br1 + BigInt(static_cast<long long>(b1) * b2) * br1 * br1;
}

// Smallest root of x^3 - (b+4) x^2 + (3b+4) x - (b+2), i.e. the algebraic
// connectivity of CG_{1,b-1;1} with b leaves.
inline CharPoly crab_r1_cubic(int b) {
    return CharPoly({BigInt(-(b + 2)), BigInt(3 * b + 4), BigInt(-(b + 4)), BigInt(1)});
}

// mu_2 of the quotient, which equals lambda_2 of the full crab graph.
inline double crab_lambda2(int b1, int b2, int r) {
    return quotient_eigenvalues(quotient_matrix_crab(b1, b2, r)).values[1];
}

// Same value through the exact characteristic polynomial and Sturm isolation.
inline double crab_lambda2_root(int b1, int b2, int r) {
    return smallest_positive_root(charpoly_quotient_crab(b1, b2, r));
}

inline double spider_lambda2(int b, int r) {
    if (b < 2 || r < 1) throw std::invalid_argument("spider_lambda2: b >= 2, r >= 1 required");
    const double s = std::sin(std::numbers::pi / (4 * r + 2));
    return 4 * s * s;  // independent of b
}

// ---------------------------------------------------------------------------
// Lifted path eigenfunctions on the crab graph

struct LiftedEigenspace {
    double eigenvalue = 0;                    // lambda_{2i}(P_{2r+1})
    std::vector<Eigen::VectorXd> functions;   // b1+b2-2 of them, vanishing off two legs
};

// For each even-index eigenvalue of L(P_{2r+1}) (whose eigenvector vanishes at
// the path midpoint), lays the eigenvector along pairs of adjacent legs
// through a center and extends by zero. Each lift is a Laplacian eigenfunction
// of CG_{b1,b2;r} orthogonal to all part indicator functions.
inline std::vector<LiftedEigenspace> lifted_path_eigenfunctions(int b1, int b2, int r) {
    if (b1 < 1 || b2 < 1 || r < 1 || b1 + b2 < 2)
        throw std::invalid_argument("lifted_path_eigenfunctions: b1, b2, r >= 1 required");
    const int n_path = 2 * r + 1;
    const int n_full = (b1 + b2) * r + 2;
    const int v0 = b1 * r + 1;
    const auto u_at = [&](int leg, int j) { return 1 + (leg - 1) * r + (j - 1); };
    const auto v_at = [&](int leg, int j) { return v0 + 1 + (leg - 1) * r + (j - 1); };

    std::vector<LiftedEigenspace> out;
    for (int i = 1; i <= r; ++i) {
        LiftedEigenspace space;
        const double theta = (2 * i - 1) * std::numbers::pi / (2 * n_path);
        space.eigenvalue = 4 * std::sin(theta) * std::sin(theta);
        // path eigenvector xi(w_t) = cos((2t-1) theta), antisymmetric about the midpoint
        std::vector<double> xi(n_path + 1);
        for (int t = 1; t <= n_path; ++t) xi[t] = std::cos((2 * t - 1) * theta);
        const auto lay = [&](auto at, int leg) {
            Eigen::VectorXd f = Eigen::VectorXd::Zero(n_full);
            for (int j = 1; j <= r; ++j) {
                f[at(leg, j)] = xi[r + 1 - j];
                f[at(leg + 1, j)] = xi[r + 1 + j];
            }
            return f;
        };
        for (int leg = 1; leg < b1; ++leg) space.functions.push_back(lay(u_at, leg));
        for (int leg = 1; leg < b2; ++leg) space.functions.push_back(lay(v_at, leg));
        out.push_back(std::move(space));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact polynomial identity checks

struct IdentityCheckReport {
    int checks_run = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// Verifies, coefficientwise in exact arithmetic over r <= r_max, b <= b_max:
//  - the three-term recurrence for Phi(P), the B/H division identities,
//    the product identity, and Phi(B_n) + Phi(B_{n-1}) = Phi(P_n);
//  - both Phi(Q) difference identities.
inline IdentityCheckReport charpoly_identity_checks(int r_max, int b_max) {
    IdentityCheckReport rep;
    const auto expect = [&](bool cond, const std::string& what) {
        ++rep.checks_run;
        if (!cond) rep.violations.push_back(what);
    };
    const CharPoly x = CharPoly::x();
    const CharPoly step({BigInt(-2), BigInt(1)});
    const int n_max = std::max(2 * r_max + 2, 12);
    for (int n = 1; n < n_max; ++n) {
        expect(charpoly_path(n + 1) == step * charpoly_path(n) - charpoly_path(n - 1),
               "path recurrence at n=" + std::to_string(n));
        expect(x * charpoly_B(n) == charpoly_path(n + 1) + charpoly_path(n),
               "x*Phi(B_n) identity at n=" + std::to_string(n));
        expect(x * charpoly_H(n) == charpoly_path(n + 1),
               "x*Phi(H_n) identity at n=" + std::to_string(n));
        expect(charpoly_B(n) + charpoly_B(n - 1) == charpoly_path(n),
               "Phi(B_n)+Phi(B_{n-1})=Phi(P_n) at n=" + std::to_string(n));
    }
    for (int m = 2; m < n_max; ++m)
        for (int n = 1; n < n_max; ++n)
            expect(charpoly_path(m) * charpoly_path(n) - charpoly_path(m - 1) * charpoly_path(n + 1) ==
                       charpoly_path(m - 1) * charpoly_path(n - 1) -
                           charpoly_path(m - 2) * charpoly_path(n),
                   "product identity at m=" + std::to_string(m) + ", n=" + std::to_string(n));
    for (int r = 1; r <= r_max; ++r) {
        const CharPoly br = charpoly_B(r), br1 = charpoly_B(r - 1), pr = charpoly_path(r);
        for (int b1 = 1; b1 <= b_max; ++b1)
            for (int b2 = b1 + 1; b2 <= b_max; ++b2) {
                const CharPoly lhs =
                    charpoly_quotient_crab(b1 + 1, b2 - 1, r) - charpoly_quotient_crab(b1, b2, r);
                const CharPoly sq = br1 + br;
                expect(lhs == BigInt(b2 - b1 - 1) * (sq * sq),
                       "first difference identity at b1=" + std::to_string(b1) +
                           ", b2=" + std::to_string(b2) + ", r=" + std::to_string(r));
                expect(lhs == BigInt(b2 - b1 - 1) * (pr * pr),
                       "first difference identity (Phi(P_r)^2 form) at b1=" + std::to_string(b1) +
                           ", b2=" + std::to_string(b2) + ", r=" + std::to_string(r));
            }
        const CharPoly one_minus_x({BigInt(1), BigInt(-1)});
        for (int b = 2; b <= b_max; ++b)
            expect(charpoly_quotient_crab(1, b - 1, r) - charpoly_quotient_crab(1, 1, r) ==
                       BigInt(b - 2) * ((one_minus_x * br + pr) * pr),
                   "second difference identity at b=" + std::to_string(b) +
                       ", r=" + std::to_string(r));
    }
    return rep;
}

// mu_k(PS) >= mu_1(P) mu_k(S) for random positive definite P and positive
// semidefinite S of orders <= 8, checked through the symmetric conjugate
// sqrt(P) S sqrt(P).
inline IdentityCheckReport eigenvalue_product_inequality_check(int trials,
                                                               std::uint64_t seed = 20240501) {
    if (trials < 1) throw std::invalid_argument("eigenvalue_product_inequality_check: trials >= 1");
    IdentityCheckReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int t = 0; t < trials; ++t) {
        const int k = 1 + static_cast<int>(rng() % 8);
        Eigen::MatrixXd a(k, k), bmat(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                a(i, j) = unif(rng);
                bmat(i, j) = unif(rng);
            }
        const Eigen::MatrixXd p = a * a.transpose() + 0.1 * Eigen::MatrixXd::Identity(k, k);
        const Eigen::MatrixXd s = bmat * bmat.transpose();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ep(p);
        const Eigen::MatrixXd sqrt_p = ep.operatorSqrt();
        const double mu1_p = ep.eigenvalues()[0];
        const auto mu_ps = eigenvalues_sym(SymmetricMatrix(sqrt_p * s * sqrt_p)).values;
        const auto mu_s = eigenvalues_sym(SymmetricMatrix(s)).values;
        for (int i = 0; i < k; ++i) {
            ++rep.checks_run;
            if (mu_ps[i] < mu1_p * mu_s[i] - 1e-9)
                rep.violations.push_back("trial " + std::to_string(t) + " order " +
                                         std::to_string(k) + " index " + std::to_string(i));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Extremal bound tables

enum class Operator { steklov, laplacian };

enum class ExtremalClaim {
    unique,   // the listed graph is claimed to be the only maximizer
    attains,  // the listed graph attains the bound, uniqueness not claimed
    open      // inequality only; equality is conjectural
};

struct TheoremBound {
    std::string theorem;     // slope | fell | ranch | unit
    std::string case_label;  // e.g. "fell:m=br+1"
    double bound = 0;
    // when the bound is the smallest positive root of an exact polynomial,
    // its ascending integer coefficients (empty otherwise)
    std::vector<std::int64_t> bound_poly;
    std::vector<FamilySpec> extremal;
    ExtremalClaim claim = ExtremalClaim::unique;
    // conjectured sharp value for the open case, when one is available
    double conjecture_value = std::numeric_limits<double>::quiet_NaN();
    std::string conjecture_basis;
};

namespace detail {
inline double four_sin_sq(int denom) {
    const double s = std::sin(std::numbers::pi / denom);
    return 4 * s * s;
}
}  // namespace detail

// Bound table over T(n, m): max sigma_2 (slope) or max lambda_2 (ranch).
inline TheoremBound theorem_bound_nm(int n, int m, Operator op) {
    if (n < 2 || m < 1 || 2 * m > n)
        throw std::invalid_argument("theorem_bound_nm: need n >= 2 and 1 <= m <= n/2");
    TheoremBound tb;
    tb.theorem = op == Operator::steklov ? "slope" : "ranch";
    if (m == 1) {
        tb.case_label = tb.theorem + ":m=1";
        tb.bound = 1.0;
        tb.extremal = {FamilySpec::star(n)};
    } else if (m == 2) {
        tb.case_label = tb.theorem + ":m=2";
        if (op == Operator::steklov) {
            tb.bound = static_cast<double>(n - 2) / (2 * n - 5);
        } else {
            const CharPoly cubic = crab_r1_cubic(n - 2);
            tb.bound = smallest_positive_root(cubic);
            tb.bound_poly = charpoly_to_int64(cubic);
        }
        tb.extremal = {FamilySpec::crab(1, n - 3, 1)};
    } else {
        tb.case_label = tb.theorem + ":m>=3";
        tb.bound = op == Operator::steklov ? 0.5 : detail::four_sin_sq(10);
        tb.extremal = {FamilySpec::spider({{m - 1, 2}, {n - 2 * m + 1, 1}})};
    }
    tb.claim = ExtremalClaim::unique;
    return tb;
}

// Bound table over T~(b, m): max sigma_2 (fell) or max lambda_2 (unit).
inline TheoremBound theorem_bound_bm(int b, int m, Operator op) {
    if (b < 2 || m < 1) throw std::invalid_argument("theorem_bound_bm: need b >= 2 and m >= 1");
    TheoremBound tb;
    tb.theorem = op == Operator::steklov ? "fell" : "unit";
    tb.claim = ExtremalClaim::unique;
    if (m == 1) {
        tb.case_label = tb.theorem + ":m=1";
        tb.bound = 1.0;
        tb.extremal = {FamilySpec::star(b + 1)};
        return tb;
    }
    if (m == 2) {
        tb.case_label = tb.theorem + ":m=2";
        if (op == Operator::steklov) {
            tb.bound = static_cast<double>(b) / (2 * b - 1);
        } else {
            const CharPoly cubic = crab_r1_cubic(b);
            tb.bound = smallest_positive_root(cubic);
            tb.bound_poly = charpoly_to_int64(cubic);
        }
        tb.extremal = {FamilySpec::crab(1, b - 1, 1)};
        return tb;
    }
    if (b == 2) {
        tb.case_label = tb.theorem + ":b=2";
        tb.bound = op == Operator::steklov ? 2.0 / (2 * m - 1) : detail::four_sin_sq(4 * m);
        tb.extremal = {FamilySpec::path(2 * m)};
        return tb;
    }
    // b >= 3, m >= 3: write m = b r + s with s in [1, b]
    const int s = (m - 1) % b + 1;
    const int r = (m - s) / b;
    if (s == 1) {
        tb.case_label = tb.theorem + ":m=br+1";
        if (op == Operator::steklov) {
            tb.bound = static_cast<double>(b) / (2.0 * r * b + b - 1);
        } else {
            const CharPoly phi = charpoly_quotient_crab(1, b - 1, 2 * r);
            tb.bound = smallest_positive_root(phi);
            tb.bound_poly = charpoly_to_int64(phi);
        }
        tb.extremal = {FamilySpec::crab(1, b - 1, 2 * r)};
        return tb;
    }
    if (s == 2) {
        tb.case_label = tb.theorem + ":m=br+2";
        tb.claim = ExtremalClaim::open;
        if (op == Operator::steklov) {
            tb.bound = 2.0 / (4 * r + 3);
            tb.conjecture_value = es_sigma_pm(b, 2 * r).first;
            tb.conjecture_basis = "sigma_minus_ES(b,2r)";
        } else {
            tb.bound = detail::four_sin_sq(8 * r + 8);
            // no closed form is available for the conjectured sharp value
            tb.conjecture_value = laplacian_spectrum(build_extra_special(b, 2 * r)).values[1];
            tb.conjecture_basis = "numeric_lambda2_ES(b,2r)";
        }
        return tb;
    }
    tb.case_label = tb.theorem + ":m=br+s";
    tb.claim = ExtremalClaim::attains;
    tb.bound = op == Operator::steklov ? 1.0 / (2 * r + 2) : detail::four_sin_sq(8 * r + 10);
    tb.extremal = {FamilySpec::spider({{s - 1, 2 * r + 2}, {b - s + 1, 2 * r + 1}})};
    return tb;
}

}  // namespace treespectra
