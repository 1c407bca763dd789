#pragma once

#include "inflmatch/content.hpp"
#include "inflmatch/embedding.hpp"
#include "inflmatch/error.hpp"
#include "inflmatch/matcher.hpp"
#include "inflmatch/profile_store.hpp"
#include "inflmatch/vectorizer.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace inflmatch {

struct PipelineOptions {
    SynthesisOptions synthesis;
    Weighting weighting = Weighting::kCounts;
};

/// Profiles -> documents -> vocabulary -> counts (-> tfidf). The vocabulary
/// spans every row, target included.
DocTermMatrix build_matrix(const ProfileSet& set, const PipelineOptions& options = {});

/// Classical MDS seed refined by SMACOF; labels and categories copied from the set.
Embedding2D embed_profiles(const DocTermMatrix& matrix, const ProfileSet& set, const SmacofOptions& smacof = {});

/// Header `username<TAB>category<TAB>x<TAB>y`, coordinates to 6 d.p.
std::string format_embedding_tsv(const Embedding2D& embedding);

struct ValidationEntry {
    std::string username;
    std::optional<std::string> category;
    bool is_target = false;
    bool loaded = false;
    std::size_t post_count = 0;
    std::size_t image_count = 0;
    std::size_t classified_count = 0;
    std::optional<ErrorCode> error;
    std::string message;  // error text or warning, empty when clean

    bool vectorizable() const { return loaded && classified_count > 0; }
};

struct ValidationReport {
    std::vector<ValidationEntry> entries;
    /// Set when the user list itself could not be read or the target is unknown.
    std::optional<ErrorCode> list_error;
    std::string list_message;

    /// Every profile loads, the target (if any) is vectorizable, and at least
    /// one profile is vectorizable. Non-target profiles without classified
    /// media only warn.
    bool ok() const;
    /// First failing code, or nullopt when ok().
    std::optional<ErrorCode> failure() const;
};

/// Loads every listed profile independently, collecting per-profile problems
/// instead of stopping at the first one.
ValidationReport validate_profiles(const std::filesystem::path& user_list, const std::filesystem::path& metadata_dir,
                                   const std::optional<std::string>& target, const LoadOptions& options = {});

std::string format_validation_report(const ValidationReport& report);

}  // namespace inflmatch
