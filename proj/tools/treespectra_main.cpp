// treespectra CLI: spectra of trees and named families, free-tree
// enumeration, exhaustive verification of the extremal bound tables, and
// conjecture exploration.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 internal/numeric failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "treespectra/closed_forms.hpp"
#include "treespectra/enumeration.hpp"
#include "treespectra/extremal.hpp"
#include "treespectra/graph.hpp"
#include "treespectra/spectra.hpp"

namespace {

using namespace treespectra;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

// default tolerance, overridable by TREESPECTRA_TOL (read once at startup)
double startup_tolerance() {
    if (const char* env = std::getenv("TREESPECTRA_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("TREESPECTRA_TOL must be a positive number");
    }
    return 1e-8;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string exact_value_string(const ExactValue& v) {
    if (v.form == ExactValue::Form::rational) {
        std::ostringstream os;
        os << v.rational;
        return os.str();
    }
    std::ostringstream os;
    os << "root" << (v.root_sign > 0 ? "+" : "-") << "(" << v.qa.str() << "x^2"
       << (v.qb >= 0 ? "+" : "") << v.qb.str() << "x" << (v.qc >= 0 ? "+" : "") << v.qc.str()
       << ")";
    return os.str();
}

ordered_json spectrum_json(const Spectrum& s) {
    ordered_json j;
    j["values"] = s.values;
    j["tol"] = s.grouping_tol;
    return j;
}

ordered_json closed_json(const ClosedSpectrum& s) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : s.entries) {
        ordered_json item;
        item["value"] = e.value.to_double();
        item["exact"] = exact_value_string(e.value);
        item["multiplicity"] = e.multiplicity;
        item["label"] = e.label;
        arr.push_back(std::move(item));
    }
    return arr;
}

// Closed-form Steklov spectrum for the named families that have one.
ClosedSpectrum closed_steklov_of(const FamilySpec& fam) {
    switch (fam.kind) {
        case FamilySpec::Kind::path: {
            if (fam.n < 2) throw std::invalid_argument("closed form: path needs n >= 2");
            ClosedSpectrum s;
            s.entries.push_back({ExactValue::from_rational(BigRat(0)), 1, "constant"});
            s.entries.push_back(
                {ExactValue::from_rational(BigRat(2, fam.n - 1)), 1, "end_difference"});
            return s;
        }
        case FamilySpec::Kind::star:
            if (fam.n == 2) return closed_steklov_of(FamilySpec::path(2));
            return spider_steklov(fam.n - 1, 0, 1, 1);
        case FamilySpec::Kind::spider: {
            std::vector<std::pair<int, int>> parts;
            for (auto [p, l] : fam.parts)
                if (p > 0) parts.emplace_back(p, l);
            if (parts.size() == 1)
                return spider_steklov(parts[0].first, 0, parts[0].second,
                                      std::min(parts[0].second, 1));
            if (parts.size() == 2)
                return spider_steklov(parts[0].first, parts[1].first, parts[0].second,
                                      parts[1].second);
            throw std::invalid_argument(
                "closed form: spiders with more than two distinct leg lengths are unsupported");
        }
        case FamilySpec::Kind::crab: return crab_steklov(fam.b1, fam.b2, fam.r);
        case FamilySpec::Kind::extra_special: return es_steklov(fam.b, fam.p);
    }
    throw std::logic_error("closed_steklov_of: bad kind");
}

// Closed-form algebraic connectivity for the families that expose one.
std::optional<std::pair<double, std::string>> closed_lambda2_of(const FamilySpec& fam) {
    switch (fam.kind) {
        case FamilySpec::Kind::path:
            if (fam.n >= 2) {
                const double s = std::sin(std::numbers::pi / (2 * fam.n));
                return {{4 * s * s, "4sin^2(pi/2n)"}};
            }
            return std::nullopt;
        case FamilySpec::Kind::star: return {{1.0, "star"}};
        case FamilySpec::Kind::crab:
            return {{crab_lambda2_root(fam.b1, fam.b2, fam.r), "smallest root of Phi(Q)"}};
        case FamilySpec::Kind::spider: {
            std::vector<std::pair<int, int>> parts;
            for (auto [p, l] : fam.parts)
                if (p > 0) parts.emplace_back(p, l);
            if (parts.size() == 1 && parts[0].first >= 2)
                return {{spider_lambda2(parts[0].first, parts[0].second), "4sin^2(pi/(4r+2))"}};
            return std::nullopt;
        }
        case FamilySpec::Kind::extra_special: return std::nullopt;
    }
    return std::nullopt;
}

struct SpectrumOptions {
    std::string family;
    std::string tree_file;
    std::string op = "both";
    bool closed_form = false;
    std::string format = "text";
    std::string out;
    std::string export_matrix;  // dense text dump of the operator matrix
};

int run_spectrum(const SpectrumOptions& opt) {
    if (opt.family.empty() == opt.tree_file.empty())
        throw std::invalid_argument("spectrum: exactly one of --family / --tree is required");
    std::optional<FamilySpec> fam;
    TreeGraph tree = [&] {
        if (!opt.family.empty()) {
            fam = FamilySpec::parse(opt.family);
            return fam->build();
        }
        std::ifstream in(opt.tree_file);
        if (!in) throw std::invalid_argument("spectrum: cannot read tree file " + opt.tree_file);
        std::stringstream buf;
        buf << in.rdbuf();
        return from_edge_list_text(buf.str());
    }();
    if (opt.closed_form && !fam)
        throw std::invalid_argument("spectrum: --closed-form requires --family");

    const bool want_steklov = opt.op == "steklov" || opt.op == "both";
    const bool want_laplacian = opt.op == "laplacian" || opt.op == "both";
    std::optional<Spectrum> sigma, lambda;
    if (want_steklov) sigma = steklov_spectrum(tree);
    if (want_laplacian) lambda = laplacian_spectrum(tree);
    if (!opt.export_matrix.empty()) {
        if (opt.op == "both")
            throw std::invalid_argument("spectrum: --export-matrix needs a single --operator");
        const auto m = opt.op == "steklov" ? dtn_matrix(tree, leaves(tree)) : laplacian_matrix(tree);
        write_output(opt.export_matrix, matrix_to_text(m));
    }

    std::optional<ClosedSpectrum> closed_sigma;
    std::optional<std::pair<double, std::string>> closed_lambda;
    if (opt.closed_form) {
        if (want_steklov) closed_sigma = closed_steklov_of(*fam);
        if (want_laplacian) {
            closed_lambda = closed_lambda2_of(*fam);
            if (!closed_lambda && !want_steklov)
                throw std::invalid_argument(
                    "spectrum: no closed-form algebraic connectivity for this family");
        }
    }

    std::ostringstream os;
    if (opt.format == "json") {
        ordered_json j;
        j["tree"] = fam ? fam->to_string() : opt.tree_file;
        j["n"] = tree.n;
        if (sigma) j["steklov"] = spectrum_json(*sigma);
        if (lambda) j["laplacian"] = spectrum_json(*lambda);
        if (closed_sigma) j["closed_form_steklov"] = closed_json(*closed_sigma);
        if (closed_lambda) {
            j["closed_form_lambda2"] = closed_lambda->first;
            j["closed_form_lambda2_basis"] = closed_lambda->second;
        }
        os << j.dump(2) << '\n';
    } else if (opt.format == "csv") {
        os << "operator,index,value\n";
        if (sigma)
            for (size_t i = 0; i < sigma->values.size(); ++i)
                os << "steklov," << i + 1 << ',' << format_double(sigma->values[i]) << '\n';
        if (lambda)
            for (size_t i = 0; i < lambda->values.size(); ++i)
                os << "laplacian," << i + 1 << ',' << format_double(lambda->values[i]) << '\n';
    } else {
        os << "tree: " << (fam ? fam->to_string() : opt.tree_file) << "  (n=" << tree.n << ")\n";
        const auto print_spec = [&](const char* name, const Spectrum& s) {
            os << name << ":";
            for (double v : s.values) os << ' ' << format_double(v);
            os << '\n';
        };
        if (sigma) print_spec("steklov", *sigma);
        if (lambda) print_spec("laplacian", *lambda);
        if (closed_sigma) {
            os << "closed-form steklov:";
            for (const auto& e : closed_sigma->entries)
                os << ' ' << exact_value_string(e.value) << " (" << e.label << " x"
                   << e.multiplicity << ")";
            os << '\n';
        }
        if (closed_lambda)
            os << "closed-form lambda2: " << format_double(closed_lambda->first) << "  ["
               << closed_lambda->second << "]\n";
    }
    write_output(opt.out, os.str());
    return kExitOk;
}

struct EnumerateOptions {
    int n = 0;
    std::string cls;
    bool count_only = false;
    bool codes = false;
    std::string out;
};

int run_enumerate(const EnumerateOptions& opt) {
    if ((opt.n > 0) == !opt.cls.empty())
        throw std::invalid_argument("enumerate: exactly one of --n / --class is required");
    std::ostringstream os;
    long long count = 0;
    const auto emit = [&](const TreeGraph& t) {
        ++count;
        if (opt.count_only) return;
        if (opt.codes)
            os << canonical_code(t) << '\n';
        else
            os << to_edge_list_text(t) << '\n';
    };
    if (opt.n > 0)
        for_each_free_tree(opt.n, emit);
    else
        for_each_tree_in_class(TreeClassQuery::parse(opt.cls), emit);
    if (opt.count_only) os << count << '\n';
    write_output(opt.out, os.str());
    return kExitOk;
}

struct VerifyOptions {
    std::string theorem;
    int max_n = 0;
    int max_b = 0;
    int max_m = 0;
    double tol = 1e-8;
    std::string format = "json";
    std::string out;
};

int run_verify(const VerifyOptions& opt) {
    std::vector<VerificationReport> reports;
    if (opt.theorem == "slope" || opt.theorem == "ranch") {
        if (opt.max_n == 0)
            throw std::invalid_argument("verify: --max-n is required for " + opt.theorem);
        reports = opt.theorem == "slope" ? verify_sigma_nm(opt.max_n, opt.tol)
                                         : verify_lambda_nm(opt.max_n, opt.tol);
    } else if (opt.theorem == "fell" || opt.theorem == "unit" || opt.theorem == "older") {
        if (opt.max_b == 0 || opt.max_m == 0)
            throw std::invalid_argument("verify: --max-b and --max-m are required for " +
                                        opt.theorem);
        reports = opt.theorem == "fell"   ? verify_sigma_bm(opt.max_b, opt.max_m, opt.tol)
                  : opt.theorem == "unit" ? verify_lambda_bm(opt.max_b, opt.max_m, opt.tol)
                                          : verify_sigma_k(opt.max_b, opt.max_m, opt.tol);
    } else {
        throw std::invalid_argument("verify: unknown theorem '" + opt.theorem + "'");
    }

    std::ostringstream os;
    if (opt.format == "csv") {
        os << to_csv(reports);
    } else if (opt.format == "text") {
        for (const auto& r : reports)
            os << (r.pass ? "pass" : "FAIL") << "  " << r.query.to_string() << "  ["
               << r.case_label << "]  bound=" << format_double(r.bound)
               << " max=" << format_double(r.observed_max) << " argmax=" << r.argmax_codes.size()
               << (r.note.empty() ? "" : "  note: " + r.note) << '\n';
        os << (all_pass(reports) ? "all pass\n" : "verification failures present\n");
    } else {
        ordered_json j = to_json(reports);
        j["theorem"] = opt.theorem;
        j["tol"] = opt.tol;
        os << j.dump(2) << '\n';
    }
    write_output(opt.out, os.str());
    return all_pass(reports) ? kExitOk : kExitVerifyFail;
}

struct ConjectureOptions {
    int b = 0;
    int r = 1;
    std::string op = "steklov";
    std::string out;
};

int run_conjecture(const ConjectureOptions& opt) {
    const Operator op = opt.op == "laplacian" ? Operator::laplacian : Operator::steklov;
    const ConjectureReport rep = explore_conjecture(opt.b, opt.r, op);
    std::ostringstream os;
    os << to_json(rep).dump(2) << '\n';
    write_output(opt.out, os.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    double default_tol;
    try {
        default_tol = startup_tolerance();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    CLI::App app{"Steklov and Laplacian spectra of trees"};
    app.require_subcommand(1);

    SpectrumOptions sopt;
    auto* spectrum = app.add_subcommand("spectrum", "Spectra of a named family or tree file");
    spectrum->add_option("--family", sopt.family,
                         "family spec: path:n | star:n | spider:p1xL1,... | crab:b1,b2,r | es:b,p");
    spectrum->add_option("--tree", sopt.tree_file, "edge-list file (first line n, then 'u v')");
    spectrum->add_option("--operator", sopt.op, "steklov | laplacian | both")
        ->check(CLI::IsMember({"steklov", "laplacian", "both"}));
    spectrum->add_flag("--closed-form", sopt.closed_form, "also emit closed-form values");
    spectrum->add_option("--format", sopt.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    spectrum->add_option("--out", sopt.out, "output path (default stdout)");
    spectrum->add_option("--export-matrix", sopt.export_matrix,
                         "write the operator matrix as dense text (order, then rows)");

    EnumerateOptions eopt;
    auto* enumerate = app.add_subcommand("enumerate", "Non-isomorphic trees, whole order or class");
    enumerate->add_option("--n", eopt.n, "order (1..20)");
    enumerate->add_option("--class", eopt.cls, "class query: n=K,m=J or b=K,m=J");
    enumerate->add_flag("--count-only", eopt.count_only, "print only the number of trees");
    enumerate->add_flag("--codes", eopt.codes, "print canonical codes instead of edge lists");
    enumerate->add_option("--out", eopt.out, "output path (default stdout)");

    VerifyOptions vopt;
    vopt.tol = default_tol;
    auto* verify = app.add_subcommand("verify", "Exhaustively verify a bound table");
    verify->add_option("--theorem", vopt.theorem, "slope | fell | older | ranch | unit")
        ->required();
    verify->add_option("--max-n", vopt.max_n, "largest order for slope/ranch");
    verify->add_option("--max-b", vopt.max_b, "largest leaf count for fell/older/unit");
    verify->add_option("--max-m", vopt.max_m, "largest matching number for fell/older/unit");
    verify->add_option("--tol", vopt.tol, "comparison tolerance");
    verify->add_option("--format", vopt.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_option("--out", vopt.out, "output path (default stdout)");

    ConjectureOptions copt;
    auto* conjecture = app.add_subcommand("conjecture", "Scan T~(b, br+2) against the ES bound");
    conjecture->add_option("--b", copt.b, "leaf count (>= 3)")->required();
    conjecture->add_option("--r", copt.r, "parameter r (>= 1)");
    conjecture->add_option("--operator", copt.op, "steklov | laplacian")
        ->check(CLI::IsMember({"steklov", "laplacian"}));
    conjecture->add_option("--out", copt.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (spectrum->parsed()) return run_spectrum(sopt);
        if (enumerate->parsed()) return run_enumerate(eopt);
        if (verify->parsed()) return run_verify(vopt);
        if (conjecture->parsed()) return run_conjecture(copt);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const solver_error& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
