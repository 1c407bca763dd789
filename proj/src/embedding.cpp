#include "inflmatch/embedding.hpp"

#include "inflmatch/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace inflmatch {

namespace {

constexpr double kStressFloor = 1e-12;

double planar_distance(const Matrix& x, std::size_t i, std::size_t j) {
    const double dx = x(i, 0) - x(j, 0);
    const double dy = x(i, 1) - x(j, 1);
    return std::sqrt(dx * dx + dy * dy);
}

void center_columns(Matrix& x) {
    const std::size_t m = x.rows();
    if (m == 0) return;
    for (std::size_t c = 0; c < x.cols(); ++c) {
        double mean = 0.0;
        for (std::size_t i = 0; i < m; ++i) mean += x(i, c);
        mean /= static_cast<double>(m);
        for (std::size_t i = 0; i < m; ++i) x(i, c) -= mean;
    }
}

Embedding2D make_embedding(Matrix coordinates, const Matrix& distances) {
    Embedding2D e;
    e.stress = stress(distances, coordinates);
    e.coordinates = std::move(coordinates);
    e.row_labels.assign(e.coordinates.rows(), std::string());
    e.categories.assign(e.coordinates.rows(), std::nullopt);
    return e;
}

}  // namespace

void check_distance_matrix(const Matrix& distances) {
    if (distances.rows() != distances.cols()) {
        throw Error(ErrorCode::kDimensionMismatch, "distance matrix is not square");
    }
    const std::size_t m = distances.rows();
    for (std::size_t i = 0; i < m; ++i) {
        if (distances(i, i) != 0.0) {
            throw Error(ErrorCode::kNonzeroDiagonal, "distance matrix has nonzero diagonal at row " + std::to_string(i));
        }
        for (std::size_t j = i + 1; j < m; ++j) {
            if (distances(i, j) != distances(j, i)) {
                throw Error(ErrorCode::kAsymmetricInput, "distance matrix is not symmetric at (" + std::to_string(i) +
                                                             "," + std::to_string(j) + ")");
            }
        }
    }
}

double stress(const Matrix& distances, const Matrix& coordinates) {
    if (distances.rows() != distances.cols() || coordinates.rows() != distances.rows() || coordinates.cols() != 2) {
        throw Error(ErrorCode::kDimensionMismatch, "stress needs an m x m distance matrix and m x 2 coordinates");
    }
    const std::size_t m = distances.rows();
    double sigma = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double r = planar_distance(coordinates, i, j) - distances(i, j);
            sigma += r * r;
        }
    }
    return sigma;
}

Embedding2D classical_mds(const Matrix& distances) {
    check_distance_matrix(distances);
    const std::size_t m = distances.rows();
    if (m < 2) throw Error(ErrorCode::kSingletonSet, "MDS needs at least 2 points");

    // Double centering of the squared distances.
    Matrix sq(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) sq(i, j) = distances(i, j) * distances(i, j);
    }
    std::vector<double> row_mean(m, 0.0);
    double grand = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) row_mean[i] += sq(i, j);
        grand += row_mean[i];
        row_mean[i] /= static_cast<double>(m);
    }
    grand /= static_cast<double>(m * m);
    Matrix b(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            // row_mean doubles as column mean since sq is symmetric
            b(i, j) = -0.5 * (sq(i, j) - row_mean[i] - row_mean[j] + grand);
        }
    }
    // Symmetrize away rounding asymmetry before the solver.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double avg = 0.5 * (b(i, j) + b(j, i));
            b(i, j) = avg;
            b(j, i) = avg;
        }
    }

    const SymmetricEigen eig = jacobi_eigen(b);
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return eig.values[l] > eig.values[r]; });

    Matrix coords(m, 2);
    bool any_positive = false;
    for (std::size_t c = 0; c < 2; ++c) {
        const std::size_t idx = order[c];
        const double lambda = eig.values[idx];
        if (!(lambda > 0.0)) continue;  // clamped: column stays exactly zero
        any_positive = true;
        const double scale = std::sqrt(lambda);
        for (std::size_t i = 0; i < m; ++i) coords(i, c) = eig.vectors(i, idx) * scale;
    }
    center_columns(coords);

    for (std::size_t c = 0; c < 2; ++c) {
        std::size_t arg = 0;
        for (std::size_t i = 1; i < m; ++i) {
            if (std::fabs(coords(i, c)) > std::fabs(coords(arg, c))) arg = i;
        }
        if (coords(arg, c) < 0.0) {
            for (std::size_t i = 0; i < m; ++i) coords(i, c) = -coords(i, c);
        }
        for (std::size_t i = 0; i < m; ++i) coords(i, c) += 0.0;  // no negative zeros
    }

    Embedding2D e = make_embedding(std::move(coords), distances);
    e.degenerate = !any_positive;
    return e;
}

Embedding2D smacof_refine(const Matrix& distances, const Embedding2D& initial, const SmacofOptions& options,
                          std::vector<double>* stress_trace) {
    check_distance_matrix(distances);
    const std::size_t m = distances.rows();
    if (initial.coordinates.rows() != m || initial.coordinates.cols() != 2) {
        throw Error(ErrorCode::kDimensionMismatch, "initial configuration must be m x 2");
    }
    if (options.max_iter < 1 || !(options.tol > 0.0)) {
        throw Error(ErrorCode::kInvalidArgument, "SMACOF needs max_iter >= 1 and tol > 0");
    }

    Matrix x = initial.coordinates;
    double sigma_prev = stress(distances, x);
    if (stress_trace) {
        stress_trace->clear();
        stress_trace->push_back(sigma_prev);
    }

    Matrix next(m, 2);
    const double inv_m = 1.0 / static_cast<double>(m);
    for (int iter = 0; iter < options.max_iter; ++iter) {
        // X <- (1/m) B(X) X, with B(X) built row by row.
        for (std::size_t i = 0; i < m; ++i) {
            double diag = 0.0;
            double sx = 0.0;
            double sy = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                if (j == i) continue;
                const double dij = planar_distance(x, i, j);
                const double bij = dij > 0.0 ? -distances(i, j) / dij : 0.0;
                diag -= bij;
                sx += bij * x(j, 0);
                sy += bij * x(j, 1);
            }
            next(i, 0) = inv_m * (sx + diag * x(i, 0));
            next(i, 1) = inv_m * (sy + diag * x(i, 1));
        }
        std::swap(x, next);
        const double sigma = stress(distances, x);
        if (stress_trace) stress_trace->push_back(sigma);
        const bool converged = (sigma_prev - sigma) / std::max(sigma_prev, kStressFloor) < options.tol;
        sigma_prev = sigma;
        if (converged) break;
    }

    center_columns(x);
    Embedding2D e = make_embedding(std::move(x), distances);
    e.row_labels = initial.row_labels;
    e.categories = initial.categories;
    e.degenerate = initial.degenerate;
    if (e.row_labels.size() != m) e.row_labels.assign(m, std::string());
    if (e.categories.size() != m) e.categories.assign(m, std::nullopt);
    return e;
}

}  // namespace inflmatch
