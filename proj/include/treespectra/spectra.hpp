// Laplacian and Steklov (Dirichlet-to-Neumann) operators on trees.
//
// The DtN operator is realized as the Schur complement of the Laplacian onto
// the boundary block: Lambda = L_BB - L_BI L_II^{-1} L_IB. Edges between two
// boundary vertices contribute through L_BB; with an empty interior the
// operator is the Laplacian itself (e.g. P_2 with both ends as boundary).
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "treespectra/graph.hpp"

namespace treespectra {

struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense symmetric matrix; construction symmetrizes exactly and rejects inputs
// that are more than roundoff away from symmetric.
class SymmetricMatrix {
  public:
    explicit SymmetricMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols())
            throw std::invalid_argument("SymmetricMatrix: square matrix required");
        const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
        if ((m_ - m_.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
            throw std::invalid_argument("SymmetricMatrix: input is not symmetric");
        m_ = ((m_ + m_.transpose()) / 2).eval();
    }

    int order() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXd& data() const { return m_; }

  private:
    Eigen::MatrixXd m_;
};

struct Spectrum {
    std::vector<double> values;       // ascending
    double grouping_tol = 1e-7;       // used only for multiplicity reporting

    int size() const { return static_cast<int>(values.size()); }

    // Groups consecutive eigenvalues whose gap is below grouping_tol.
    // Values themselves are never rounded.
    std::vector<std::pair<double, int>> grouped() const {
        std::vector<std::pair<double, int>> out;
        double last = 0;
        for (double v : values) {
            if (!out.empty() && v - last < grouping_tol)
                ++out.back().second;
            else
                out.emplace_back(v, 1);
            last = v;
        }
        return out;
    }
};

inline SymmetricMatrix laplacian_matrix(const TreeGraph& t) {
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(t.n, t.n);
    for (auto [u, v] : t.edges) {
        L(u, u) += 1;
        L(v, v) += 1;
        L(u, v) -= 1;
        L(v, u) -= 1;
    }
    return SymmetricMatrix(std::move(L));
}

namespace detail {
inline void check_boundary(const TreeGraph& t, const BoundarySet& b) {
    if (b.members.empty()) throw std::invalid_argument("boundary set must be nonempty");
    int prev = -1;
    for (int v : b.members) {
        if (v < 0 || v >= t.n) throw std::invalid_argument("boundary vertex out of range");
        if (v <= prev) throw std::invalid_argument("boundary set must be sorted and unique");
        prev = v;
    }
}

inline std::vector<int> interior_of(const TreeGraph& t, const BoundarySet& b) {
    std::vector<char> is_b(t.n, 0);
    for (int v : b.members) is_b[v] = 1;
    std::vector<int> interior;
    for (int v = 0; v < t.n; ++v)
        if (!is_b[v]) interior.push_back(v);
    return interior;
}
}  // namespace detail

// Unique function agreeing with f on B whose Laplacian vanishes at every
// interior vertex. The interior block of a connected tree's Laplacian is
// positive definite whenever B is nonempty.
inline Eigen::VectorXd harmonic_extension(const TreeGraph& t, const BoundarySet& b,
                                          const Eigen::VectorXd& f) {
    detail::check_boundary(t, b);
    if (f.size() != static_cast<Eigen::Index>(b.members.size()))
        throw std::invalid_argument("harmonic_extension: boundary data size mismatch");
    const auto interior = detail::interior_of(t, b);
    Eigen::VectorXd g = Eigen::VectorXd::Zero(t.n);
    for (size_t i = 0; i < b.members.size(); ++i) g[b.members[i]] = f[i];
    if (interior.empty()) return g;

    const SymmetricMatrix lap = laplacian_matrix(t);
    const Eigen::MatrixXd& L = lap.data();
    const int ni = static_cast<int>(interior.size());
    Eigen::MatrixXd LII(ni, ni);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(ni);
    for (int i = 0; i < ni; ++i) {
        for (int j = 0; j < ni; ++j) LII(i, j) = L(interior[i], interior[j]);
        for (size_t j = 0; j < b.members.size(); ++j)
            rhs[i] -= L(interior[i], b.members[j]) * f[j];
    }
    Eigen::LDLT<Eigen::MatrixXd> ldlt(LII);
    if (ldlt.info() != Eigen::Success)
        throw solver_error("harmonic_extension: interior solve failed");
    const Eigen::VectorXd x = ldlt.solve(rhs);
    for (int i = 0; i < ni; ++i) g[interior[i]] = x[i];
    return g;
}

inline SymmetricMatrix dtn_matrix(const TreeGraph& t, const BoundarySet& b) {
    detail::check_boundary(t, b);
    const auto interior = detail::interior_of(t, b);
    const SymmetricMatrix lap = laplacian_matrix(t);
    const Eigen::MatrixXd& L = lap.data();
    const int nb = static_cast<int>(b.members.size());
    Eigen::MatrixXd LBB(nb, nb);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) LBB(i, j) = L(b.members[i], b.members[j]);
    if (interior.empty()) return SymmetricMatrix(std::move(LBB));

    const int ni = static_cast<int>(interior.size());
    Eigen::MatrixXd LII(ni, ni), LIB(ni, nb);
    for (int i = 0; i < ni; ++i) {
        for (int j = 0; j < ni; ++j) LII(i, j) = L(interior[i], interior[j]);
        for (int j = 0; j < nb; ++j) LIB(i, j) = L(interior[i], b.members[j]);
    }
    Eigen::LDLT<Eigen::MatrixXd> ldlt(LII);
    if (ldlt.info() != Eigen::Success) throw solver_error("dtn_matrix: interior solve failed");
    Eigen::MatrixXd schur = LBB - LIB.transpose() * ldlt.solve(LIB);
    return SymmetricMatrix(std::move(schur));
}

struct EigenPairs {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXd vectors;  // column k pairs with values[k]
};

inline EigenPairs eigen_pairs_sym(const SymmetricMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.data());
    if (solver.info() != Eigen::Success)
        throw solver_error("eigen_pairs_sym: eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

inline Spectrum eigenvalues_sym(const SymmetricMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.data(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw solver_error("eigenvalues_sym: eigensolver did not converge");
    Spectrum s;
    s.values.assign(solver.eigenvalues().data(),
                    solver.eigenvalues().data() + solver.eigenvalues().size());
    return s;
}

inline Spectrum steklov_spectrum(const TreeGraph& t, const BoundarySet& b) {
    return eigenvalues_sym(dtn_matrix(t, b));
}

inline Spectrum steklov_spectrum(const TreeGraph& t) { return steklov_spectrum(t, leaves(t)); }

inline Spectrum laplacian_spectrum(const TreeGraph& t) {
    return eigenvalues_sym(laplacian_matrix(t));
}

inline double eigen_residual(const SymmetricMatrix& m, double mu, const Eigen::VectorXd& v) {
    if (v.size() != m.order()) throw std::invalid_argument("eigen_residual: dimension mismatch");
    return (m.data() * v - mu * v).cwiseAbs().maxCoeff();
}

// Plain-text dense export: order, then one row per line.
inline std::string matrix_to_text(const SymmetricMatrix& m) {
    std::ostringstream os;
    os.precision(17);
    os << m.order() << '\n';
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            if (j) os << ' ';
            os << m.data()(i, j);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace treespectra
