#pragma once

#include "inflmatch/linalg.hpp"
#include "inflmatch/vectorizer.hpp"

#include <span>
#include <string>
#include <vector>

namespace inflmatch {

struct Neighbor {
    std::size_t row = 0;
    std::string username;
    double distance = 0.0;

    bool operator==(const Neighbor&) const = default;
};

struct MatchResult {
    std::string target_username;
    std::size_t target_row = 0;
    std::size_t k = 0;  // as requested
    std::vector<Neighbor> neighbors;  // ascending distance, then ascending row

    bool truncated() const noexcept { return neighbors.size() < k; }
};

double euclidean_distance(std::span<const double> u, std::span<const double> v);

/// Symmetric m x m matrix of row distances; each unordered pair is computed once.
Matrix pairwise_distances(const Matrix& rows);

/// The min(k, m-1) rows nearest the target, target excluded. Equal distances
/// resolve by ascending row index.
MatchResult knn_match(const DocTermMatrix& matrix, std::size_t target_index, std::size_t k = 5);

/// `# target: <name>` then `rank<TAB>username<TAB>distance` lines, distance to 6 d.p.
std::string format_match_report(const MatchResult& result);

}  // namespace inflmatch
