// Exact integer-coefficient characteristic polynomials and real root
// isolation.
//
// Phi(P_n), Phi(B_n), Phi(H_n) are the characteristic polynomials of the path
// Laplacian L(P_n) and of its principal truncations: B_{n-1} deletes one end
// row/column of L(P_n), H_{n-2} deletes both. All three families satisfy the
// same three-term recurrence f_{k+1} = (x-2) f_k - f_{k-1}; they differ only
// in their seeds:
//   Phi(P_0) = 0, Phi(P_1) = x
//   Phi(B_0) = 1, Phi(B_1) = x - 1
//   Phi(H_0) = 1, Phi(H_1) = x - 2
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace treespectra {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Integer polynomial in x, ascending coefficients; empty vector is the zero
// polynomial. Arithmetic is exact.
struct CharPoly {
    std::vector<BigInt> coeff;

    CharPoly() = default;
    explicit CharPoly(std::vector<BigInt> c) : coeff(std::move(c)) { normalize(); }
    static CharPoly constant(long long c) { return CharPoly({BigInt(c)}); }
    static CharPoly x() { return CharPoly({BigInt(0), BigInt(1)}); }

    void normalize() {
        while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
    }
    bool is_zero() const { return coeff.empty(); }
    int degree() const { return static_cast<int>(coeff.size()) - 1; }
    const BigInt& operator[](size_t i) const {
        static const BigInt kZero = 0;
        return i < coeff.size() ? coeff[i] : kZero;
    }

    friend CharPoly operator+(const CharPoly& a, const CharPoly& b) {
        std::vector<BigInt> c(std::max(a.coeff.size(), b.coeff.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
        return CharPoly(std::move(c));
    }
    friend CharPoly operator-(const CharPoly& a, const CharPoly& b) {
        std::vector<BigInt> c(std::max(a.coeff.size(), b.coeff.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
        return CharPoly(std::move(c));
    }
    friend CharPoly operator*(const CharPoly& a, const CharPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> c(a.coeff.size() + b.coeff.size() - 1, 0);
        for (size_t i = 0; i < a.coeff.size(); ++i)
            for (size_t j = 0; j < b.coeff.size(); ++j) c[i + j] += a.coeff[i] * b.coeff[j];
        return CharPoly(std::move(c));
    }
    friend CharPoly operator*(const BigInt& s, const CharPoly& a) {
        std::vector<BigInt> c = a.coeff;
        for (auto& v : c) v *= s;
        return CharPoly(std::move(c));
    }
    friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.coeff == b.coeff; }

    BigRat eval(const BigRat& x) const {
        BigRat acc = 0;
        for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * x + BigRat(*it);
        return acc;
    }
    double eval(double x) const {
        double acc = 0;
        for (auto it = coeff.rbegin(); it != coeff.rend(); ++it)
            acc = acc * x + it->convert_to<double>();
        return acc;
    }
    // L1 norm of the coefficients, used to scale numeric evaluation tolerances.
    double l1_norm() const {
        BigInt s = 0;
        for (const auto& c : coeff) s += abs(c);
        return s.convert_to<double>();
    }
    CharPoly derivative() const {
        if (coeff.size() <= 1) return {};
        std::vector<BigInt> c(coeff.size() - 1);
        for (size_t i = 1; i < coeff.size(); ++i) c[i - 1] = coeff[i] * BigInt(i);
        return CharPoly(std::move(c));
    }
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const BigInt& c = coeff[i];
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            BigInt a = abs(c);
            if (a != 1 || i == 0) os << a.str();
            if (i > 0) os << (a == 1 ? "x" : "*x");
            if (i > 1) os << "^" << i;
        }
        return os.str();
    }
};

namespace detail {
inline CharPoly three_term(int n, CharPoly f0, CharPoly f1) {
    if (n == 0) return f0;
    const CharPoly step = CharPoly({BigInt(-2), BigInt(1)});  // x - 2
    for (int k = 1; k < n; ++k) {
        CharPoly next = step * f1 - f0;
        f0 = std::move(f1);
        f1 = std::move(next);
    }
    return f1;
}
}  // namespace detail

inline CharPoly charpoly_path(int n) {
    if (n < 0) throw std::invalid_argument("charpoly_path: n >= 0 required");
    return detail::three_term(n, CharPoly(), CharPoly::x());
}

inline CharPoly charpoly_B(int n) {
    if (n < 0) throw std::invalid_argument("charpoly_B: n >= 0 required");
    return detail::three_term(n, CharPoly::constant(1), CharPoly({BigInt(-1), BigInt(1)}));
}

inline CharPoly charpoly_H(int n) {
    if (n < 0) throw std::invalid_argument("charpoly_H: n >= 0 required");
    return detail::three_term(n, CharPoly::constant(1), CharPoly({BigInt(-2), BigInt(1)}));
}

// ---------------------------------------------------------------------------
// Sturm-chain root isolation over exact rationals.

namespace detail {

using RatPoly = std::vector<BigRat>;  // ascending, normalized

inline void rat_normalize(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly to_rat(const CharPoly& p) {
    RatPoly r(p.coeff.size());
    for (size_t i = 0; i < p.coeff.size(); ++i) r[i] = BigRat(p.coeff[i]);
    return r;
}

inline BigRat rat_eval(const RatPoly& p, const BigRat& x) {
    BigRat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Remainder of polynomial division a / b, b nonzero.
inline RatPoly rat_rem(RatPoly a, const RatPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        const BigRat q = a.back() / b.back();
        const size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        a.pop_back();
        rat_normalize(a);
    }
    return a;
}

inline std::vector<RatPoly> sturm_chain(const CharPoly& p) {
    std::vector<RatPoly> chain;
    RatPoly f0 = to_rat(p), f1 = to_rat(p.derivative());
    rat_normalize(f0);
    rat_normalize(f1);
    chain.push_back(f0);
    if (f1.empty()) return chain;
    chain.push_back(f1);
    while (true) {
        RatPoly r = rat_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sign_variations(const std::vector<RatPoly>& chain, const BigRat& x) {
    int variations = 0, last = 0;
    for (const auto& f : chain) {
        const BigRat v = rat_eval(f, x);
        const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

// Number of distinct real roots in the half-open interval (a, b].
inline int sturm_count(const std::vector<RatPoly>& chain, const BigRat& a, const BigRat& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

}  // namespace detail

// Smallest strictly positive real root, located by exact Sturm bisection and
// returned as a double accurate to abs_tol. Roots at exactly 0 are ignored.
inline double smallest_positive_root(const CharPoly& p, double abs_tol = 1e-13) {
    if (p.is_zero()) throw std::invalid_argument("smallest_positive_root: zero polynomial");
    CharPoly q = p;
    while (!q.coeff.empty() && q.coeff.front() == 0)
        q.coeff.erase(q.coeff.begin());  // strip factor x^k
    if (q.degree() < 1) throw std::invalid_argument("smallest_positive_root: no positive roots");
    const auto chain = detail::sturm_chain(q);
    // Cauchy bound: all roots lie in |x| <= 1 + max |c_i| / |c_d|
    BigRat bound = 0;
    for (const auto& c : q.coeff) {
        BigRat a = abs(BigRat(c)) / abs(BigRat(q.coeff.back()));
        if (a > bound) bound = a;
    }
    bound += 1;
    BigRat lo = 0, hi = bound;
    if (detail::sturm_count(chain, lo, hi) < 1)
        throw std::invalid_argument("smallest_positive_root: no positive roots");
    for (int iter = 0; iter < 200; ++iter) {
        if ((hi - lo).convert_to<double>() < abs_tol) break;
        const BigRat mid = (lo + hi) / 2;
        if (detail::sturm_count(chain, lo, mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    return ((lo + hi) / 2).convert_to<double>();
}

// JSON-friendly ascending coefficient array; throws when a coefficient falls
// outside the exact int64 range.
inline std::vector<std::int64_t> charpoly_to_int64(const CharPoly& p) {
    std::vector<std::int64_t> out;
    out.reserve(p.coeff.size());
    for (const auto& c : p.coeff) {
        if (c < std::numeric_limits<std::int64_t>::min() ||
            c > std::numeric_limits<std::int64_t>::max())
            throw std::overflow_error("charpoly_to_int64: coefficient exceeds int64");
        out.push_back(c.convert_to<std::int64_t>());
    }
    return out;
}

}  // namespace treespectra
