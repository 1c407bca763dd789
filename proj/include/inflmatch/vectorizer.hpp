#pragma once

#include "inflmatch/content.hpp"
#include "inflmatch/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace inflmatch {

/// Token -> column index, assigned in ascending byte-wise order of the token.
class Vocabulary {
public:
    Vocabulary() = default;
    explicit Vocabulary(std::vector<std::string> sorted_unique_tokens);

    std::size_t size() const noexcept { return index_to_token_.size(); }
    bool empty() const noexcept { return index_to_token_.empty(); }
    std::optional<std::size_t> index_of(const std::string& token) const;
    const std::string& token(std::size_t index) const { return index_to_token_.at(index); }
    const std::vector<std::string>& tokens() const noexcept { return index_to_token_; }

    bool operator==(const Vocabulary& other) const { return index_to_token_ == other.index_to_token_; }

private:
    std::map<std::string, std::size_t> token_to_index_;
    std::vector<std::string> index_to_token_;
};

enum class Weighting { kCounts, kTfidf };

std::string_view weighting_name(Weighting w) noexcept;

/// Rows are documents (profiles), columns are vocabulary tokens.
struct DocTermMatrix {
    Matrix values;
    std::vector<std::string> row_labels;
    Vocabulary vocabulary;
    Weighting weighting = Weighting::kCounts;

    std::size_t rows() const noexcept { return values.rows(); }
    std::size_t cols() const noexcept { return values.cols(); }

    bool operator==(const DocTermMatrix&) const = default;
};

/// Throws EmptyCorpus when no document holds a token.
Vocabulary build_vocabulary(const std::vector<ContentDocument>& documents);

DocTermMatrix count_vectorize(const std::vector<ContentDocument>& documents, const Vocabulary& vocabulary);

/// Smoothed idf, ln((1+m)/(1+df)) + 1.
double smoothed_idf(std::size_t documents, std::size_t document_frequency);

/// count * idf per entry, then each nonzero row scaled to unit Euclidean norm.
DocTermMatrix tfidf_transform(const DocTermMatrix& counts);

/// Tab-separated: header `username<TAB>token...`, then one row per document.
std::string format_matrix_tsv(const DocTermMatrix& matrix);

}  // namespace inflmatch
