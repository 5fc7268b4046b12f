#include "critgraph/sym_matrix.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <vector>

namespace critgraph {

SymMatrix SymMatrix::from_dense(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("matrix is not square");
    }
    SymMatrix s(static_cast<int>(a.rows()));
    for (int i = 0; i < s.dim(); ++i) {
        for (int j = i; j < s.dim(); ++j) {
            s.set(i, j, a(i, j));
        }
    }
    return s;
}

Eigen::VectorXd SymMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigenvalue computation failed");
    }
    return solver.eigenvalues();
}

double SymMatrix::min_eigenvalue() const {
    if (dim() == 0) return 0.0;
    return eigenvalues()(0);
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
    if (dim() != other.dim()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(dim()) +
                                    " vs " + std::to_string(other.dim()));
    }
    m_ += other.m_;
    return *this;
}

double frobenius_dot(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("dimension mismatch in Frobenius product");
    }
    return a.dense().cwiseProduct(b.dense()).sum();
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

void save_matrix_csv(const std::string& path, const Eigen::MatrixXd& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ",";
            out << format_double(m(i, j));
        }
        out << "\n";
    }
}

Eigen::MatrixXd load_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc() || ptr != cell.data() + cell.size()) {
                throw std::invalid_argument("bad CSV number: " + cell);
            }
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    const auto n = rows.size();
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw std::invalid_argument("CSV matrix is not square");
        }
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

}  // namespace critgraph
