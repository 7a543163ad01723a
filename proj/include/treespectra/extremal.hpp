// Exhaustive verification of the extremal bound tables over enumerated tree
// classes, and numeric exploration of the two conjectured sharp bounds.
//
// Scans start at order 3: the one order-2 tree P_2 has boundary = V, so its
// DtN operator is the Laplacian itself and sigma_2 = lambda_2 = 2, outside
// the star bounds that every table's m = 1 row asserts. Trees with a
// nonempty interior (n >= 3) are the intended universe.
#pragma once

#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "treespectra/closed_forms.hpp"
#include "treespectra/enumeration.hpp"
#include "treespectra/graph.hpp"
#include "treespectra/spectra.hpp"

namespace treespectra {

constexpr int kMinScanOrder = 3;

// Running maximum plus every code within `tol` of it. Merging is associative
// and commutative, so sharded scans may combine partial results in any order.
struct ClassScan {
    double max_value = -std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, std::string>> near_max;
    long long count = 0;

    void add(double value, std::string code, double tol) {
        ++count;
        if (value > max_value) {
            max_value = value;
            prune(tol);
        }
        if (value >= max_value - tol) near_max.emplace_back(value, std::move(code));
    }
    void merge(const ClassScan& other, double tol) {
        count += other.count;
        max_value = std::max(max_value, other.max_value);
        for (const auto& item : other.near_max) near_max.push_back(item);
        prune(tol);
    }
    std::vector<std::string> argmax_codes(double tol) const {
        std::vector<std::string> out;
        for (const auto& [v, c] : near_max)
            if (v >= max_value - tol) out.push_back(c);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

  private:
    void prune(double tol) {
        std::erase_if(near_max, [&](const auto& item) { return item.first < max_value - tol; });
    }
};

struct VerificationReport {
    TreeClassQuery query;
    std::string theorem;
    std::string case_label;
    double bound = 0;
    std::vector<std::int64_t> bound_poly;  // exact coefficients when root-isolated
    double observed_max = 0;
    long long class_size = 0;
    std::vector<std::string> argmax_codes;
    std::vector<std::string> claimed_codes;
    std::string claim;        // unique | attains | open
    bool bound_ok = false;    // observed_max <= bound + tol
    bool attained = false;    // |observed_max - bound| <= tol
    bool extremal_ok = false; // claim-dependent argmax comparison
    bool pass = false;
    double tol = 0;
    std::string note;
};

namespace detail {

inline double sigma2_of(const TreeGraph& t) { return steklov_spectrum(t).values[1]; }
inline double lambda2_of(const TreeGraph& t) { return laplacian_spectrum(t).values[1]; }
// max sigma_k over k >= 3; only defined for trees with at least 3 leaves
inline double sigma_k_max_of(const TreeGraph& t) {
    const auto s = steklov_spectrum(t);
    double m = -std::numeric_limits<double>::infinity();
    for (int k = 3; k <= s.size(); ++k) m = std::max(m, s.values[k - 1]);
    return m;
}

inline std::vector<std::string> claimed_codes_of(const TheoremBound& tb) {
    std::vector<std::string> codes;
    for (const auto& fam : tb.extremal) codes.push_back(canonical_code(fam.build()));
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    return codes;
}

inline bool subset_of(const std::vector<std::string>& small, const std::vector<std::string>& big) {
    for (const auto& s : small)
        if (!std::binary_search(big.begin(), big.end(), s)) return false;
    return true;
}

inline VerificationReport make_report(const TreeClassQuery& q, const TheoremBound& tb,
                                      const ClassScan& scan, double tol) {
    VerificationReport rep;
    rep.query = q;
    rep.theorem = tb.theorem;
    rep.case_label = tb.case_label;
    rep.bound = tb.bound;
    rep.bound_poly = tb.bound_poly;
    rep.observed_max = scan.max_value;
    rep.class_size = scan.count;
    rep.argmax_codes = scan.argmax_codes(tol);
    rep.claimed_codes = claimed_codes_of(tb);
    rep.tol = tol;
    rep.bound_ok = scan.max_value <= tb.bound + tol;
    rep.attained = std::abs(scan.max_value - tb.bound) <= tol;
    switch (tb.claim) {
        case ExtremalClaim::unique:
            rep.claim = "unique";
            rep.extremal_ok = rep.argmax_codes == rep.claimed_codes;
            rep.pass = rep.bound_ok && rep.attained && rep.extremal_ok;
            if (!rep.extremal_ok) {
                rep.note = "argmax set differs from the claimed unique extremal";
            }
            break;
        case ExtremalClaim::attains:
            rep.claim = "attains";
            rep.extremal_ok = subset_of(rep.claimed_codes, rep.argmax_codes);
            rep.pass = rep.bound_ok && rep.attained && rep.extremal_ok;
            break;
        case ExtremalClaim::open:
            rep.claim = "open";
            rep.extremal_ok = true;
            rep.pass = rep.bound_ok;
            break;
    }
    if (scan.count == 0) {
        rep.pass = true;
        rep.extremal_ok = true;
        rep.note = "empty class";
    }
    return rep;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Verification over T(n, m), n <= n_max

inline std::vector<VerificationReport> verify_nm(int n_max, Operator op, double tol = 1e-8) {
    if (n_max < 4 || n_max > 14)
        throw std::invalid_argument("verify_nm: n_max must be in [4, 14]");
    std::vector<VerificationReport> reports;
    for (int n = kMinScanOrder; n <= n_max; ++n) {
        std::map<int, ClassScan> by_m;
        for_each_free_tree(n, [&](const TreeGraph& t) {
            const double v = op == Operator::steklov ? detail::sigma2_of(t) : detail::lambda2_of(t);
            by_m[matching_number(t)].add(v, canonical_code(t), tol);
        });
        for (auto& [m, scan] : by_m)
            reports.push_back(detail::make_report(TreeClassQuery::by_vertices(n, m),
                                                  theorem_bound_nm(n, m, op), scan, tol));
    }
    return reports;
}

inline std::vector<VerificationReport> verify_sigma_nm(int n_max, double tol = 1e-8) {
    return verify_nm(n_max, Operator::steklov, tol);
}
inline std::vector<VerificationReport> verify_lambda_nm(int n_max, double tol = 1e-8) {
    return verify_nm(n_max, Operator::laplacian, tol);
}

// ---------------------------------------------------------------------------
// Verification over T~(b, m), b <= b_max, m <= m_max

namespace detail {

// Buckets every tree with b <= b_max and m <= m_max by (b, m), enumerating all
// orders the classes can reach. A qualifying tree at n >= 2m+b would violate
// the class-finiteness bound and aborts.
inline std::map<std::pair<int, int>, ClassScan> scan_bm(
    int b_max, int m_max, double tol, const std::function<double(const TreeGraph&)>& value) {
    const int n_top = 2 * m_max + b_max;
    if (n_top > kMaxEnumerationOrder)
        throw std::invalid_argument("scan_bm: requested range needs orders beyond 20");
    std::map<std::pair<int, int>, ClassScan> scans;
    for (int n = kMinScanOrder; n <= n_top; ++n) {
        for_each_free_tree(n, [&](const TreeGraph& t) {
            const int b = static_cast<int>(leaves(t).members.size());
            const int m = matching_number(t);
            if (b > b_max || m > m_max) return;
            if (n >= 2 * m + b)
                throw std::logic_error("scan_bm: finiteness margin violated at b=" +
                                       std::to_string(b) + " m=" + std::to_string(m) +
                                       " n=" + std::to_string(n));
            scans[{b, m}].add(value(t), canonical_code(t), tol);
        });
    }
    return scans;
}

}  // namespace detail

inline std::vector<VerificationReport> verify_bm(int b_max, int m_max, Operator op,
                                                 double tol = 1e-8) {
    if (b_max < 2 || b_max > 6 || m_max < 1 || m_max > 6)
        throw std::invalid_argument("verify_bm: need 2 <= b_max <= 6 and 1 <= m_max <= 6");
    auto scans = detail::scan_bm(b_max, m_max, tol, [&](const TreeGraph& t) {
        return op == Operator::steklov ? detail::sigma2_of(t) : detail::lambda2_of(t);
    });
    std::vector<VerificationReport> reports;
    for (int b = 2; b <= b_max; ++b)
        for (int m = 1; m <= m_max; ++m)
            reports.push_back(detail::make_report(TreeClassQuery::by_leaves(b, m),
                                                  theorem_bound_bm(b, m, op), scans[{b, m}], tol));
    return reports;
}

inline std::vector<VerificationReport> verify_sigma_bm(int b_max, int m_max, double tol = 1e-8) {
    return verify_bm(b_max, m_max, Operator::steklov, tol);
}
inline std::vector<VerificationReport> verify_lambda_bm(int b_max, int m_max, double tol = 1e-8) {
    return verify_bm(b_max, m_max, Operator::laplacian, tol);
}

// ---------------------------------------------------------------------------
// Higher Steklov eigenvalues: sigma_k <= 1 for 3 <= k <= b, with the spider
// Sp_{1,b-1; 2m-1,1} attaining sigma_k = 1 in every class.

inline std::vector<VerificationReport> verify_sigma_k(int b_max, int m_max, double tol = 1e-8) {
    if (b_max < 3 || b_max > 6 || m_max < 1 || m_max > 6)
        throw std::invalid_argument("verify_sigma_k: need 3 <= b_max <= 6 and 1 <= m_max <= 6");
    auto scans = detail::scan_bm(b_max, m_max, tol, [](const TreeGraph& t) {
        return static_cast<int>(leaves(t).members.size()) >= 3
                   ? detail::sigma_k_max_of(t)
                   : -std::numeric_limits<double>::infinity();
    });
    std::vector<VerificationReport> reports;
    for (int b = 3; b <= b_max; ++b)
        for (int m = 1; m <= m_max; ++m) {
            const auto& scan = scans[{b, m}];
            VerificationReport rep;
            rep.query = TreeClassQuery::by_leaves(b, m);
            rep.theorem = "older";
            rep.case_label = "older:k>=3";
            rep.bound = 1.0;
            rep.observed_max = scan.max_value;
            rep.class_size = scan.count;
            rep.argmax_codes = scan.argmax_codes(tol);
            rep.claim = "attains";
            rep.tol = tol;
            rep.bound_ok = scan.max_value <= 1.0 + tol;
            rep.attained = std::abs(scan.max_value - 1.0) <= tol;
            const auto spider = FamilySpec::spider({{1, 2 * m - 1}, {b - 1, 1}});
            rep.claimed_codes = {canonical_code(spider.build())};
            // the attaining spider must carry sigma_k = 1 for every k in [3, b]
            const TreeGraph st = spider.build();
            bool attains = static_cast<int>(leaves(st).members.size()) == b &&
                           matching_number(st) == m;
            const auto spec = steklov_spectrum(st);
            for (int k = 3; attains && k <= b; ++k)
                attains = std::abs(spec.values[k - 1] - 1.0) <= 1e-9;
            rep.extremal_ok = attains;
            rep.pass = rep.bound_ok && rep.attained && rep.extremal_ok && scan.count > 0;
            reports.push_back(std::move(rep));
        }
    return reports;
}

// ---------------------------------------------------------------------------
// Conjecture exploration over T~(b, br+2) (report only)

struct ConjectureReport {
    int b = 0;
    int r = 0;
    Operator op = Operator::steklov;
    TreeClassQuery query;
    long long class_size = 0;
    double class_max = 0;
    std::vector<std::string> argmax_codes;
    double conjectured_value = 0;
    std::string conjecture_basis;
    double gap = 0;  // |class_max - conjectured_value|, reported, never asserted zero
    bool argmax_is_es = false;
    bool es_in_class = false;
    double tol = 0;
};

inline ConjectureReport explore_conjecture(int b, int r, Operator op, double tol = 1e-8) {
    if (b < 3 || r < 1) throw std::invalid_argument("explore_conjecture: b >= 3, r >= 1 required");
    const int m = b * r + 2;
    ConjectureReport rep;
    rep.b = b;
    rep.r = r;
    rep.op = op;
    rep.query = TreeClassQuery::by_leaves(b, m);
    rep.tol = tol;

    ClassScan scan;
    for_each_tree_in_class(rep.query, [&](const TreeGraph& t) {
        if (t.n < kMinScanOrder) return;
        const double v = op == Operator::steklov ? detail::sigma2_of(t) : detail::lambda2_of(t);
        scan.add(v, canonical_code(t), tol);
    });
    rep.class_size = scan.count;
    rep.class_max = scan.max_value;
    rep.argmax_codes = scan.argmax_codes(tol);

    const TreeGraph es = build_extra_special(b, 2 * r);
    const std::string es_code = canonical_code(es);
    rep.es_in_class =
        static_cast<int>(leaves(es).members.size()) == b && matching_number(es) == m;
    rep.argmax_is_es = rep.argmax_codes == std::vector<std::string>{es_code};
    if (op == Operator::steklov) {
        rep.conjectured_value = es_sigma_pm(b, 2 * r).first;
        rep.conjecture_basis = "sigma_minus_ES(b,2r)";
    } else {
        rep.conjectured_value = laplacian_spectrum(es).values[1];
        rep.conjecture_basis = "numeric_lambda2_ES(b,2r)";
    }
    rep.gap = std::abs(rep.class_max - rep.conjectured_value);
    return rep;
}

// ---------------------------------------------------------------------------
// Serialization

inline bool all_pass(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["class"] = r.query.to_string();
    j["theorem"] = r.theorem;
    j["case"] = r.case_label;
    j["bound"] = r.bound;
    if (!r.bound_poly.empty()) j["bound_poly"] = r.bound_poly;
    j["observed_max"] = r.observed_max;
    j["class_size"] = r.class_size;
    j["argmax_codes"] = r.argmax_codes;
    j["claimed_codes"] = r.claimed_codes;
    j["claim"] = r.claim;
    j["bound_ok"] = r.bound_ok;
    j["attained"] = r.attained;
    j["extremal_ok"] = r.extremal_ok;
    j["pass"] = r.pass;
    j["tol"] = r.tol;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline nlohmann::ordered_json to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    nlohmann::ordered_json j;
    j["reports"] = std::move(arr);
    j["all_pass"] = all_pass(reports);
    return j;
}

inline nlohmann::ordered_json to_json(const ConjectureReport& r) {
    nlohmann::ordered_json j;
    j["b"] = r.b;
    j["r"] = r.r;
    j["operator"] = r.op == Operator::steklov ? "steklov" : "laplacian";
    j["class"] = r.query.to_string();
    j["class_size"] = r.class_size;
    j["class_max"] = r.class_max;
    j["argmax_codes"] = r.argmax_codes;
    j["conjectured_value"] = r.conjectured_value;
    j["conjecture_basis"] = r.conjecture_basis;
    j["gap"] = r.gap;
    j["argmax_is_es"] = r.argmax_is_es;
    j["es_in_class"] = r.es_in_class;
    j["tol"] = r.tol;
    return j;
}

// One row per (class, case, bound, max, argmax).
inline std::string to_csv(const std::vector<VerificationReport>& reports) {
    std::string out =
        "class,case,bound,observed_max,class_size,claim,bound_ok,attained,extremal_ok,pass,"
        "argmax_codes,claimed_codes\n";
    char buf[64];
    const auto num = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    const auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ';';
            s += v[i];
        }
        return s;
    };
    for (const auto& r : reports) {
        out += "\"" + r.query.to_string() + "\"," + r.case_label + ',' + num(r.bound) + ',' +
               num(r.observed_max) + ',' + std::to_string(r.class_size) + ',' + r.claim + ',' +
               (r.bound_ok ? "1" : "0") + ',' + (r.attained ? "1" : "0") + ',' +
               (r.extremal_ok ? "1" : "0") + ',' + (r.pass ? "1" : "0") + ",\"" +
               join(r.argmax_codes) + "\",\"" + join(r.claimed_codes) + "\"\n";
    }
    return out;
}

}  // namespace treespectra
