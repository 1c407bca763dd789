#include "inflmatch/pipeline.hpp"

#include <algorithm>
#include <cstdio>

namespace inflmatch {

DocTermMatrix build_matrix(const ProfileSet& set, const PipelineOptions& options) {
    const auto documents = synthesize_documents(set, options.synthesis);
    const auto vocabulary = build_vocabulary(documents);
    DocTermMatrix counts = count_vectorize(documents, vocabulary);
    if (options.weighting == Weighting::kTfidf) return tfidf_transform(counts);
    return counts;
}

Embedding2D embed_profiles(const DocTermMatrix& matrix, const ProfileSet& set, const SmacofOptions& smacof) {
    if (matrix.rows() != set.size()) {
        throw Error(ErrorCode::kDimensionMismatch, "matrix rows do not match the profile set");
    }
    const Matrix distances = pairwise_distances(matrix.values);
    Embedding2D seed = classical_mds(distances);
    Embedding2D refined = smacof_refine(distances, seed, smacof);
    refined.row_labels = matrix.row_labels;
    refined.categories.clear();
    for (const auto& p : set.profiles()) refined.categories.push_back(p.category);
    return refined;
}

std::string format_embedding_tsv(const Embedding2D& embedding) {
    auto fixed6 = [](double v) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.6f", v);
        std::string s(buf);
        return s == "-0.000000" ? std::string("0.000000") : s;
    };
    std::string out = "username\tcategory\tx\ty\n";
    for (std::size_t i = 0; i < embedding.rows(); ++i) {
        const auto& cat = i < embedding.categories.size() ? embedding.categories[i] : std::nullopt;
        out += embedding.row_labels.at(i) + "\t" + (cat ? *cat : std::string()) + "\t" +
               fixed6(embedding.coordinates(i, 0)) + "\t" + fixed6(embedding.coordinates(i, 1)) + "\n";
    }
    return out;
}

bool ValidationReport::ok() const {
    return !failure().has_value();
}

std::optional<ErrorCode> ValidationReport::failure() const {
    if (list_error) return list_error;
    bool any_vectorizable = false;
    for (const auto& e : entries) {
        if (e.error) return e.error;
        if (e.is_target && !e.vectorizable()) return ErrorCode::kValidationFailed;
        any_vectorizable = any_vectorizable || e.vectorizable();
    }
    if (!any_vectorizable) return ErrorCode::kEmptyCorpus;
    return std::nullopt;
}

ValidationReport validate_profiles(const std::filesystem::path& user_list, const std::filesystem::path& metadata_dir,
                                   const std::optional<std::string>& target, const LoadOptions& options) {
    ValidationReport report;
    std::vector<UserListEntry> users;
    try {
        users = read_user_list(user_list);
    } catch (const Error& e) {
        report.list_error = e.code();
        report.list_message = e.what();
        return report;
    }

    bool target_seen = false;
    std::vector<std::string> seen;
    for (const auto& u : users) {
        ValidationEntry entry;
        entry.username = u.username;
        entry.category = u.category;
        entry.is_target = target && *target == u.username;
        target_seen = target_seen || entry.is_target;

        if (std::find(seen.begin(), seen.end(), u.username) != seen.end()) {
            entry.error = ErrorCode::kDuplicateUsername;
            entry.message = "duplicate username in user list";
            report.entries.push_back(std::move(entry));
            continue;
        }
        seen.push_back(u.username);

        const auto file = metadata_dir / (u.username + ".json");
        try {
            if (!std::filesystem::is_regular_file(file)) {
                throw Error(ErrorCode::kMissingProfileFile, "no metadata file (expected " + file.string() + ")");
            }
            const Profile p = load_profile(file, u.username, options);
            entry.loaded = true;
            entry.post_count = p.posts.size();
            entry.image_count = p.image_count();
            entry.classified_count = p.classified_count();
            if (entry.classified_count == 0) entry.message = "no classifiable media";
        } catch (const Error& e) {
            entry.error = e.code();
            entry.message = e.what();
        }
        report.entries.push_back(std::move(entry));
    }

    if (target && !target_seen) {
        report.list_error = ErrorCode::kUnknownTarget;
        report.list_message = "target '" + *target + "' is not in the user list";
    }
    return report;
}

std::string format_validation_report(const ValidationReport& report) {
    std::string out;
    if (report.list_error) {
        out += "error\t" + std::string(error_code_name(*report.list_error)) + "\t" + report.list_message + "\n";
    }
    for (const auto& e : report.entries) {
        std::string status;
        if (e.error) {
            status = "error\t" + std::string(error_code_name(*e.error)) + "\t" + e.message;
        } else if (!e.vectorizable()) {
            status = std::string(e.is_target ? "error" : "warning") + "\t" + e.message;
        } else {
            status = "ok";
        }
        out += e.username + (e.is_target ? " (target)" : "") + "\tposts=" + std::to_string(e.post_count) +
               "\timages=" + std::to_string(e.image_count) + "\tclassified=" + std::to_string(e.classified_count) +
               "\t" + status + "\n";
    }
    std::size_t failures = 0;
    for (const auto& e : report.entries) failures += (e.error || (e.is_target && !e.vectorizable())) ? 1 : 0;
    out += "# " + std::to_string(report.entries.size()) + " profiles, " + std::to_string(failures) + " failing: " +
           (report.ok() ? "OK" : "FAILED") + "\n";
    return out;
}

}  // namespace inflmatch
