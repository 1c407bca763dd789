#include "inflmatch/matcher.hpp"

#include "inflmatch/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace inflmatch {

double euclidean_distance(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) {
        throw Error(ErrorCode::kDimensionMismatch, "distance between vectors of dimension " +
                                                       std::to_string(u.size()) + " and " +
                                                       std::to_string(v.size()));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double d = u[i] - v[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

Matrix pairwise_distances(const Matrix& rows) {
    const std::size_t m = rows.rows();
    Matrix out(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double d = euclidean_distance(rows.row(i), rows.row(j));
            out(i, j) = d;
            out(j, i) = d;
        }
    }
    return out;
}

MatchResult knn_match(const DocTermMatrix& matrix, std::size_t target_index, std::size_t k) {
    const std::size_t m = matrix.rows();
    if (m < 2) throw Error(ErrorCode::kSingletonSet, "matching needs at least 2 profiles, got " + std::to_string(m));
    if (target_index >= m) {
        throw Error(ErrorCode::kTargetOutOfRange,
                    "target row " + std::to_string(target_index) + " out of range for " + std::to_string(m) + " rows");
    }
    if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");

    std::vector<std::pair<double, std::size_t>> candidates;
    candidates.reserve(m - 1);
    const auto target = matrix.values.row(target_index);
    for (std::size_t i = 0; i < m; ++i) {
        if (i == target_index) continue;
        candidates.emplace_back(euclidean_distance(target, matrix.values.row(i)), i);
    }
    const std::size_t take = std::min(k, m - 1);
    std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(take), candidates.end());

    MatchResult result;
    result.target_username = matrix.row_labels.at(target_index);
    result.target_row = target_index;
    result.k = k;
    result.neighbors.reserve(take);
    for (std::size_t r = 0; r < take; ++r) {
        const auto [distance, row] = candidates[r];
        result.neighbors.push_back({row, matrix.row_labels.at(row), distance});
    }
    return result;
}

std::string format_match_report(const MatchResult& result) {
    std::string out = "# target: " + result.target_username + "\n";
    char buf[64];
    for (std::size_t r = 0; r < result.neighbors.size(); ++r) {
        const auto& n = result.neighbors[r];
        std::snprintf(buf, sizeof buf, "%.6f", n.distance);
        out += std::to_string(r + 1) + "\t" + n.username + "\t" + buf + "\n";
    }
    return out;
}

}  // namespace inflmatch
