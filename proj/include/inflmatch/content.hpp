#pragma once

#include "inflmatch/profile_store.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace inflmatch {

/// The tokenized tag text of one profile, in post order then tag-rank order.
struct ContentDocument {
    std::string username;
    std::vector<std::string> tokens;

    bool operator==(const ContentDocument&) const = default;
};

struct SynthesisOptions {
    std::size_t top_k = 3;
    double min_confidence = 0.0;
};

/// Maximal runs of word bytes of length >= 2, ASCII-lowercased. Word bytes are
/// ASCII letters and digits plus any byte >= 0x80, so UTF-8 letters stay inside
/// their word; everything else separates.
std::vector<std::string> tokenize(std::string_view text);

ContentDocument synthesize_document(const Profile& profile, const SynthesisOptions& options = {});

std::vector<ContentDocument> synthesize_documents(const ProfileSet& set, const SynthesisOptions& options = {});

}  // namespace inflmatch
