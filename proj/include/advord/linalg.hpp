#pragma once

// Small direct solver for banded linear systems: LU with partial pivoting in
// LAPACK-style band storage. The steady discrete system couples each cell to
// {j-2 .. j+1}, so it fits a (kl=2, ku=1) band; pivoting fills at most kl
// extra superdiagonals, which the storage reserves up front.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace advord {

// Numerical failure inside an algorithm (singular system, lost pivot).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

class BandedSolver {
public:
    BandedSolver(int n, int kl, int ku)
        : n_(checked_order(n, kl, ku)), kl_(kl), ku_(ku), ld_(2 * kl + ku + 1),
          ab_(static_cast<std::size_t>(ld_) * n, 0.0), ipiv_(n, 0) {}

    // Assignable reference to A(i, j); only entries inside the declared band exist.
    double& entry(int i, int j) {
        if (i < 0 || i >= n_ || j < 0 || j >= n_ || i - j > kl_ || j - i > ku_)
            throw std::invalid_argument("BandedSolver::entry: (" + std::to_string(i) + ", " + std::to_string(j) +
                                        ") is outside the band");
        return at(i, j);
    }

    void factor() {
        for (int k = 0; k < n_; ++k) {
            const int last_row = std::min(n_ - 1, k + kl_);
            const int last_col = std::min(n_ - 1, k + kl_ + ku_);
            int p = k;
            for (int i = k + 1; i <= last_row; ++i)
                if (std::abs(at(i, k)) > std::abs(at(p, k))) p = i;
            if (at(p, k) == 0.0)
                throw NumericalError("BandedSolver: singular system (zero pivot in column " + std::to_string(k) + ")");
            ipiv_[k] = p;
            if (p != k)
                for (int j = k; j <= last_col; ++j) std::swap(at(k, j), at(p, j));
            for (int i = k + 1; i <= last_row; ++i) {
                const double m = at(i, k) / at(k, k);
                at(i, k) = m;
                for (int j = k + 1; j <= last_col; ++j) at(i, j) -= m * at(k, j);
            }
        }
        factored_ = true;
    }

    // Solves A x = rhs in place using the stored factorization.
    void solve(std::vector<double>& rhs) const {
        if (!factored_) throw std::logic_error("BandedSolver::solve: factor() has not been called");
        if (static_cast<int>(rhs.size()) != n_) throw std::invalid_argument("BandedSolver::solve: size mismatch");
        for (int k = 0; k < n_; ++k) {
            if (ipiv_[k] != k) std::swap(rhs[k], rhs[ipiv_[k]]);
            const int last_row = std::min(n_ - 1, k + kl_);
            for (int i = k + 1; i <= last_row; ++i) rhs[i] -= at(i, k) * rhs[k];
        }
        for (int k = n_ - 1; k >= 0; --k) {
            rhs[k] /= at(k, k);
            const int first_row = std::max(0, k - kl_ - ku_);
            for (int i = first_row; i < k; ++i) rhs[i] -= at(i, k) * rhs[k];
        }
    }

    int size() const { return n_; }

private:
    // Runs before the members are sized so a bad bandwidth cannot feed the
    // storage computation.
    static int checked_order(int n, int kl, int ku) {
        if (n < 1 || kl < 0 || ku < 0) throw std::invalid_argument("BandedSolver: bad dimensions");
        return n;
    }

    // Band storage: A(i, j) lives at row kl + ku + i - j of column j; rows
    // 0 .. kl-1 hold pivoting fill-in.
    double& at(int i, int j) { return ab_[static_cast<std::size_t>(kl_ + ku_ + i - j) * n_ + j]; }
    double at(int i, int j) const { return ab_[static_cast<std::size_t>(kl_ + ku_ + i - j) * n_ + j]; }

    int n_, kl_, ku_, ld_;
    std::vector<double> ab_;
    std::vector<int> ipiv_;
    bool factored_ = false;
};

}  // namespace detail
}  // namespace advord
