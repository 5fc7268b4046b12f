#ifndef CRITGRAPH_SYM_MATRIX_HPP
#define CRITGRAPH_SYM_MATRIX_HPP

#include <Eigen/Dense>
#include <string>

namespace critgraph {

/// Dense symmetric real matrix. The upper triangle is authoritative:
/// every construction path mirrors it, so entries (i,j) and (j,i) are
/// bitwise equal.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int dim) : m_(Eigen::MatrixXd::Zero(dim, dim)) {}

    /// Canonicalizes an arbitrary square matrix: copies the upper
    /// triangle onto the lower. Asymmetry in the input is discarded;
    /// measure it beforehand if it matters.
    static SymMatrix from_dense(const Eigen::MatrixXd& a);

    int dim() const { return static_cast<int>(m_.rows()); }
    double operator()(int i, int j) const { return m_(i, j); }
    void set(int i, int j, double value) {
        m_(i, j) = value;
        m_(j, i) = value;
    }

    const Eigen::MatrixXd& dense() const { return m_; }

    /// Eigenvalues in ascending order.
    Eigen::VectorXd eigenvalues() const;
    double min_eigenvalue() const;
    bool is_psd(double tol) const { return min_eigenvalue() >= -tol; }
    double frobenius_norm() const { return m_.norm(); }

    SymMatrix& operator+=(const SymMatrix& other);
    friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
    friend SymMatrix operator*(double s, const SymMatrix& a) {
        return SymMatrix::from_dense(s * a.m_);
    }

    bool operator==(const SymMatrix& other) const { return m_ == other.m_; }

private:
    Eigen::MatrixXd m_;
};

double frobenius_dot(const SymMatrix& a, const SymMatrix& b);

/// Row-major full-square CSV with shortest round-trip number formatting,
/// so save/load is bit-exact and re-runs are byte-identical.
void save_matrix_csv(const std::string& path, const Eigen::MatrixXd& m);
Eigen::MatrixXd load_matrix_csv(const std::string& path);

std::string format_double(double v);

}  // namespace critgraph

#endif
