#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "majcol/digraph.hpp"

namespace majcol {

// Power iteration failed to reach the residual target. Carries the best
// iterate seen so callers that only need steering weights (not certified
// spectral accuracy) can still use it.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(double residual, int iterations, std::vector<double> best_u)
        : std::runtime_error("power iteration did not converge (residual " +
                             std::to_string(residual) + " after " + std::to_string(iterations) +
                             " iterations)"),
          residual_(residual),
          iterations_(iterations),
          best_u_(std::move(best_u)) {}
    double residual() const noexcept { return residual_; }
    int iterations() const noexcept { return iterations_; }
    const std::vector<double>& best_u() const noexcept { return best_u_; }

private:
    double residual_;
    int iterations_;
    std::vector<double> best_u_;
};

// Row-substochastic matrix with zero diagonal, stored as sparse base rows
// plus an optional per-row uniform off-diagonal mixing weight:
//
//   entry(i, j) = (1 - mix(i)) * base(i, j) + mix(i) / (n - 1)   for i != j.
//
// The mixing term is how pad_and_perturb makes rows strictly positive
// without densifying anything; matvecs stay O(arcs + n).
class RowStochasticMatrix {
public:
    RowStochasticMatrix() = default;
    RowStochasticMatrix(int n, std::vector<std::vector<std::pair<int, double>>> base_rows,
                        std::vector<double> mix = {});

    int size() const noexcept { return n_; }
    double entry(int i, int j) const;
    double row_sum(int i) const;
    double base_row_sum(int i) const;
    bool row_is_sink(int i) const { return base_[i].empty(); }
    double mix_weight(int i) const { return mix_.empty() ? 0.0 : mix_[i]; }
    const std::vector<std::pair<int, double>>& base_row(int i) const { return base_.at(i); }

    // True iff every off-diagonal entry is strictly positive.
    bool all_off_diagonal_positive() const;

    // Left multiplication y = x A.
    std::vector<double> left_apply(const std::vector<double>& x) const;

private:
    int n_ = 0;
    std::vector<std::vector<std::pair<int, double>>> base_;
    std::vector<double> mix_;
};

// Positive left eigenvector of eigenvalue 1, normalized to sum 1, together
// with the achieved L1 residual of u A - u.
struct PerronWeights {
    std::vector<double> u;
    double residual = 0.0;
};

// a_ij = 1 / d+(v_i) on arcs, 0 elsewhere. Rows of sinks are all-zero.
RowStochasticMatrix matrix_from_digraph(const Digraph& d);

// Mixes each row with the uniform off-diagonal distribution using the
// smallest weight lambda in [eps, 1] that makes every off-diagonal entry at
// least eps / n while keeping the row sum at 1. Rows whose base sum falls
// short of 1 (sinks in particular) become fully uniform (lambda = 1).
// Requires 0 < eps < 1/n.
RowStochasticMatrix pad_and_perturb(const RowStochasticMatrix& a, double eps);

int default_power_iterations(int n);

// Power iteration u <- u A from the uniform vector, renormalizing to sum 1,
// until the L1 residual drops to tol. Requires a strictly positive
// off-diagonal and unit row sums; throws ConvergenceError if max_iter steps
// (default: default_power_iterations) are not enough.
PerronWeights perron_left_vector(const RowStochasticMatrix& a, double tol = 1e-12,
                                 int max_iter = -1);

}  // namespace majcol
