#include "inflmatch/vectorizer.hpp"

#include "inflmatch/error.hpp"

#include <cmath>
#include <cstdio>
#include <set>

namespace inflmatch {

Vocabulary::Vocabulary(std::vector<std::string> sorted_unique_tokens)
    : index_to_token_(std::move(sorted_unique_tokens)) {
    for (std::size_t i = 0; i < index_to_token_.size(); ++i) {
        const bool fresh = token_to_index_.emplace(index_to_token_[i], i).second;
        if (!fresh || (i > 0 && !(index_to_token_[i - 1] < index_to_token_[i]))) {
            throw Error(ErrorCode::kInvalidArgument, "vocabulary tokens must be sorted and unique");
        }
    }
}

std::optional<std::size_t> Vocabulary::index_of(const std::string& token) const {
    auto it = token_to_index_.find(token);
    if (it == token_to_index_.end()) return std::nullopt;
    return it->second;
}

std::string_view weighting_name(Weighting w) noexcept {
    return w == Weighting::kTfidf ? "tfidf" : "counts";
}

Vocabulary build_vocabulary(const std::vector<ContentDocument>& documents) {
    std::set<std::string> distinct;
    for (const auto& doc : documents) distinct.insert(doc.tokens.begin(), doc.tokens.end());
    if (distinct.empty()) {
        throw Error(ErrorCode::kEmptyCorpus, "no tokens in any document; nothing to match on");
    }
    return Vocabulary(std::vector<std::string>(distinct.begin(), distinct.end()));
}

DocTermMatrix count_vectorize(const std::vector<ContentDocument>& documents, const Vocabulary& vocabulary) {
    if (vocabulary.empty()) throw Error(ErrorCode::kEmptyCorpus, "empty vocabulary");
    DocTermMatrix out;
    out.values = Matrix(documents.size(), vocabulary.size());
    out.vocabulary = vocabulary;
    out.weighting = Weighting::kCounts;
    out.row_labels.reserve(documents.size());
    for (std::size_t i = 0; i < documents.size(); ++i) {
        out.row_labels.push_back(documents[i].username);
        for (const auto& token : documents[i].tokens) {
            if (auto j = vocabulary.index_of(token)) out.values(i, *j) += 1.0;
        }
    }
    return out;
}

double smoothed_idf(std::size_t documents, std::size_t document_frequency) {
    return std::log((1.0 + static_cast<double>(documents)) / (1.0 + static_cast<double>(document_frequency))) + 1.0;
}

DocTermMatrix tfidf_transform(const DocTermMatrix& counts) {
    if (counts.weighting != Weighting::kCounts) {
        throw Error(ErrorCode::kInvalidArgument, "tfidf_transform expects a count-weighted matrix");
    }
    const std::size_t m = counts.rows();
    const std::size_t n = counts.cols();

    std::vector<double> idf(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t df = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (counts.values(i, j) > 0.0) ++df;
        }
        idf[j] = smoothed_idf(m, df);
    }

    DocTermMatrix out = counts;
    out.weighting = Weighting::kTfidf;
    for (std::size_t i = 0; i < m; ++i) {
        auto row = out.values.row(i);
        double norm2 = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            row[j] *= idf[j];
            norm2 += row[j] * row[j];
        }
        if (norm2 > 0.0) {
            const double norm = std::sqrt(norm2);
            for (double& v : row) v /= norm;
        }
    }
    return out;
}

std::string format_matrix_tsv(const DocTermMatrix& matrix) {
    std::string out = "username";
    for (const auto& token : matrix.vocabulary.tokens()) out += "\t" + token;
    out += '\n';
    char buf[64];
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        out += matrix.row_labels[i];
        for (double v : matrix.values.row(i)) {
            if (matrix.weighting == Weighting::kCounts) {
                std::snprintf(buf, sizeof buf, "\t%.0f", v);
            } else {
                std::snprintf(buf, sizeof buf, "\t%.10g", v);
            }
            out += buf;
        }
        out += '\n';
    }
    return out;
}

}  // namespace inflmatch
