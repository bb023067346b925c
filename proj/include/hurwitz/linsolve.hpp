#pragma once

#include <hurwitz/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

/// Coefficient matrix does not have full column rank.
class RankDeficient : public Infeasible {
public:
    using Infeasible::Infeasible;
};

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

struct LinearSolution {
    std::vector<Rational> x;
    std::size_t rank = 0;
    /// A x - b for every row of the original system.
    std::vector<Rational> residual;

    bool residual_is_zero() const {
        for (const auto& r : residual) {
            if (r != 0) return false;
        }
        return true;
    }
};

/// Column rank by elimination on a copy.
inline std::size_t matrix_rank(RationalMatrix a) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(rank, j));
        for (std::size_t i = rank + 1; i < a.rows(); ++i) {
            if (a(i, col) == 0) continue;
            const Rational factor = a(i, col) / a(rank, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= factor * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

/// Solves the (possibly overdetermined) system A x = b by Gauss-Jordan
/// elimination over the rationals. Requires full column rank; the residual
/// over all rows, including surplus ones, is returned for the caller to
/// judge rather than discarded.
inline LinearSolution solve_exact(const RationalMatrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_exact: rhs size mismatch");
    const std::size_t m = a.rows(), u = a.cols();

    RationalMatrix work(m, u + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < u; ++j) work(i, j) = a(i, j);
        work(i, u) = b[i];
    }

    std::size_t rank = 0;
    std::vector<std::size_t> pivot_row(u, m);
    for (std::size_t col = 0; col < u && rank < m; ++col) {
        std::size_t pivot = rank;
        while (pivot < m && work(pivot, col) == 0) ++pivot;
        if (pivot == m) continue;
        if (pivot != rank) {
            for (std::size_t j = 0; j <= u; ++j) std::swap(work(pivot, j), work(rank, j));
        }
        const Rational inv = 1 / work(rank, col);
        for (std::size_t j = col; j <= u; ++j) work(rank, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank || work(i, col) == 0) continue;
            const Rational factor = work(i, col);
            for (std::size_t j = col; j <= u; ++j) work(i, j) -= factor * work(rank, j);
        }
        pivot_row[col] = rank;
        ++rank;
    }

    if (rank < u) {
        throw RankDeficient("linear system has rank " + std::to_string(rank) + " < " + std::to_string(u) +
                            " unknowns");
    }

    LinearSolution sol;
    sol.rank = rank;
    sol.x.resize(u);
    for (std::size_t col = 0; col < u; ++col) sol.x[col] = work(pivot_row[col], u);

    sol.residual.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rational acc = -b[i];
        for (std::size_t j = 0; j < u; ++j) acc += a(i, j) * sol.x[j];
        sol.residual[i] = acc;
    }
    return sol;
}

}  // namespace hurwitz
