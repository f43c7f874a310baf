#include "majcol/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace majcol {

namespace {
constexpr double kRowSumSlack = 1e-12;
}

RowStochasticMatrix::RowStochasticMatrix(int n,
                                         std::vector<std::vector<std::pair<int, double>>> base_rows,
                                         std::vector<double> mix)
    : n_(n), base_(std::move(base_rows)), mix_(std::move(mix)) {
    if (n_ < 0) throw std::invalid_argument("matrix dimension must be non-negative");
    if (static_cast<int>(base_.size()) != n_)
        throw std::invalid_argument("row count does not match dimension");
    if (!mix_.empty() && static_cast<int>(mix_.size()) != n_)
        throw std::invalid_argument("mix vector does not match dimension");
    for (int i = 0; i < n_; ++i) {
        double sum = 0.0;
        std::sort(base_[i].begin(), base_[i].end());
        int prev = -1;
        for (const auto& [j, a] : base_[i]) {
            if (j < 0 || j >= n_) throw std::invalid_argument("column index out of range");
            if (j == i) throw std::invalid_argument("diagonal entries must be zero");
            if (j == prev) throw std::invalid_argument("duplicate column in row");
            if (a < 0.0) throw std::invalid_argument("entries must be non-negative");
            prev = j;
            sum += a;
        }
        const double lambda = mix_.empty() ? 0.0 : mix_[i];
        if (lambda < 0.0 || lambda > 1.0)
            throw std::invalid_argument("mixing weight outside [0, 1]");
        if ((1.0 - lambda) * sum + lambda > 1.0 + kRowSumSlack)
            throw std::invalid_argument("row sum exceeds 1");
    }
}

double RowStochasticMatrix::entry(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("matrix index");
    if (i == j) return 0.0;
    const auto& row = base_[i];
    const auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(j, 0.0),
                                     [](const auto& a, const auto& b) { return a.first < b.first; });
    const double base = (it != row.end() && it->first == j) ? it->second : 0.0;
    const double lambda = mix_weight(i);
    if (lambda == 0.0) return base;
    return (1.0 - lambda) * base + lambda / static_cast<double>(n_ - 1);
}

double RowStochasticMatrix::base_row_sum(int i) const {
    double sum = 0.0;
    for (const auto& [j, a] : base_.at(i)) sum += a;
    return sum;
}

double RowStochasticMatrix::row_sum(int i) const {
    const double lambda = mix_weight(i);
    return (1.0 - lambda) * base_row_sum(i) + lambda;
}

bool RowStochasticMatrix::all_off_diagonal_positive() const {
    if (n_ <= 1) return true;
    for (int i = 0; i < n_; ++i) {
        if (mix_weight(i) > 0.0) continue;
        if (static_cast<int>(base_[i].size()) != n_ - 1) return false;
        for (const auto& [j, a] : base_[i])
            if (a <= 0.0) return false;
    }
    return true;
}

std::vector<double> RowStochasticMatrix::left_apply(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw std::invalid_argument("vector length does not match dimension");
    std::vector<double> y(n_, 0.0);
    double mixed_mass = 0.0;
    for (int i = 0; i < n_; ++i) {
        const double lambda = mix_weight(i);
        const double scale = x[i] * (1.0 - lambda);
        if (scale != 0.0)
            for (const auto& [j, a] : base_[i]) y[j] += scale * a;
        mixed_mass += x[i] * lambda;
    }
    if (mixed_mass != 0.0 && n_ > 1) {
        const double inv = 1.0 / static_cast<double>(n_ - 1);
        for (int j = 0; j < n_; ++j) y[j] += (mixed_mass - x[j] * mix_weight(j)) * inv;
    }
    return y;
}

RowStochasticMatrix matrix_from_digraph(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<std::vector<std::pair<int, double>>> rows(n);
    for (int v = 0; v < n; ++v) {
        const int deg = d.out_degree(v);
        if (deg == 0) continue;
        const double a = 1.0 / static_cast<double>(deg);
        rows[v].reserve(deg);
        for (int w : d.out_neighbours(v)) rows[v].emplace_back(w, a);
    }
    return RowStochasticMatrix(n, std::move(rows));
}

RowStochasticMatrix pad_and_perturb(const RowStochasticMatrix& a, double eps) {
    const int n = a.size();
    if (n <= 1) return a;
    if (!(eps > 0.0 && eps < 1.0 / static_cast<double>(n)))
        throw std::invalid_argument("perturbation must satisfy 0 < eps < 1/n");

    const double floor_entry = eps / static_cast<double>(n);
    const double uniform = 1.0 / static_cast<double>(n - 1);
    std::vector<std::vector<std::pair<int, double>>> rows(n);
    std::vector<double> mix(n, 0.0);
    for (int i = 0; i < n; ++i) {
        rows[i] = a.base_row(i);
        const double lambda_in = a.mix_weight(i);
        if (lambda_in != 0.0)
            throw std::invalid_argument("matrix was already padded");
        const double sum = a.base_row_sum(i);
        if (sum < 1.0 - kRowSumSlack) {
            // Deficient rows (sinks included) have no mass to preserve the
            // row sum with, so they go fully uniform.
            mix[i] = 1.0;
            continue;
        }
        double a_min = rows[i].size() == static_cast<std::size_t>(n - 1)
                           ? rows[i][0].second
                           : 0.0;
        for (const auto& [j, value] : rows[i]) a_min = std::min(a_min, value);
        double needed = 0.0;
        if (a_min < floor_entry) needed = (floor_entry - a_min) / (uniform - a_min);
        mix[i] = std::min(1.0, std::max(eps, needed));
    }
    return RowStochasticMatrix(n, std::move(rows), std::move(mix));
}

int default_power_iterations(int n) {
    const double nd = std::max(1, n);
    return static_cast<int>(10.0 * nd * std::log(nd)) + 10000;
}

PerronWeights perron_left_vector(const RowStochasticMatrix& a, double tol, int max_iter) {
    const int n = a.size();
    if (n == 0) return {{}, 0.0};
    if (n == 1) return {{1.0}, 0.0};
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (!a.all_off_diagonal_positive())
        throw std::invalid_argument("matrix must have strictly positive off-diagonal entries");
    for (int i = 0; i < n; ++i)
        if (std::abs(a.row_sum(i) - 1.0) > 1e-9)
            throw std::invalid_argument("row sums must equal 1");
    if (max_iter < 0) max_iter = default_power_iterations(n);

    std::vector<double> u(n, 1.0 / static_cast<double>(n));
    std::vector<double> best_u = u;
    double best_residual = std::numeric_limits<double>::infinity();
    for (int it = 0; it <= max_iter; ++it) {
        std::vector<double> next = a.left_apply(u);
        double residual = 0.0;
        for (int j = 0; j < n; ++j) residual += std::abs(next[j] - u[j]);
        if (residual <= tol) return {std::move(u), residual};
        if (residual < best_residual) {
            best_residual = residual;
            best_u = u;
        }
        double total = 0.0;
        for (double x : next) total += x;
        for (double& x : next) x /= total;
        u = std::move(next);
    }
    throw ConvergenceError(best_residual, max_iter, std::move(best_u));
}

}  // namespace majcol
