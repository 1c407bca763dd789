#include "inflmatch/content.hpp"

#include "inflmatch/error.hpp"

#include <algorithm>

namespace inflmatch {

namespace {

bool is_word_byte(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        if (!is_word_byte(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && is_word_byte(static_cast<unsigned char>(text[j]))) ++j;
        if (j - i >= 2) {
            std::string token(text.substr(i, j - i));
            std::transform(token.begin(), token.end(), token.begin(), ascii_lower);
            tokens.push_back(std::move(token));
        }
        i = j;
    }
    return tokens;
}

ContentDocument synthesize_document(const Profile& profile, const SynthesisOptions& options) {
    if (options.top_k == 0) throw Error(ErrorCode::kInvalidArgument, "top_k must be at least 1");
    ContentDocument doc{profile.username, {}};
    for (const auto& post : profile.posts) {
        if (post.is_video) continue;
        const std::size_t take = std::min(options.top_k, post.tag_predictions.size());
        for (std::size_t r = 0; r < take; ++r) {
            const auto& pred = post.tag_predictions[r];
            if (pred.confidence < options.min_confidence) continue;
            auto words = tokenize(pred.label);
            doc.tokens.insert(doc.tokens.end(), std::make_move_iterator(words.begin()),
                              std::make_move_iterator(words.end()));
        }
    }
    return doc;
}

std::vector<ContentDocument> synthesize_documents(const ProfileSet& set, const SynthesisOptions& options) {
    std::vector<ContentDocument> docs;
    docs.reserve(set.size());
    for (const auto& p : set.profiles()) docs.push_back(synthesize_document(p, options));
    return docs;
}

}  // namespace inflmatch
