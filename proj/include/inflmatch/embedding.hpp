#pragma once

#include "inflmatch/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace inflmatch {

/// m x 2 centered configuration.
struct Embedding2D {
    Matrix coordinates;
    std::vector<std::string> row_labels;
    std::vector<std::optional<std::string>> categories;
    double stress = 0.0;
    /// Set when both leading eigenvalues of the centered Gram matrix were <= 0.
    bool degenerate = false;

    std::size_t rows() const noexcept { return coordinates.rows(); }
};

/// Raw stress, sum over i<j of (embedded distance - input distance)^2.
double stress(const Matrix& distances, const Matrix& coordinates);

/// Torgerson scaling: top two eigenpairs of -1/2 J D^2 J, negative eigenvalues
/// clamped to zero. Each column is flipped so that its largest-magnitude entry
/// is positive (earliest row on ties).
Embedding2D classical_mds(const Matrix& distances);

struct SmacofOptions {
    int max_iter = 300;
    double tol = 1e-6;
};

/// Guttman-transform iterations from `initial`. If `stress_trace` is given it
/// receives the initial stress followed by the stress after every iteration.
Embedding2D smacof_refine(const Matrix& distances, const Embedding2D& initial, const SmacofOptions& options = {},
                          std::vector<double>* stress_trace = nullptr);

/// Throws AsymmetricInput / NonzeroDiagonal / DimensionMismatch.
void check_distance_matrix(const Matrix& distances);

}  // namespace inflmatch
