#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace inflmatch {

/// One classifier (label, score) pair attached to an image post.
struct TagPrediction {
    std::string label;
    double confidence = 0.0;

    bool operator==(const TagPrediction&) const = default;
};

struct Post {
    std::string id;  // basename of the first media URL
    std::vector<TagPrediction> tag_predictions;  // descending confidence, at most 5
    std::uint64_t like_count = 0;
    std::uint64_t comment_count = 0;
    std::optional<std::string> caption;
    std::vector<std::string> hashtags;  // parsed, never used for matching
    bool is_video = false;

    bool operator==(const Post&) const = default;
};

struct Profile {
    std::string username;
    std::vector<Post> posts;
    std::optional<std::string> category;

    /// Number of non-video posts.
    std::size_t image_count() const;
    /// Number of posts carrying at least one tag prediction.
    std::size_t classified_count() const;
    bool vectorizable() const { return classified_count() > 0; }

    bool operator==(const Profile&) const = default;
};

/// Profiles in row order. Immutable once built; the constructor enforces
/// unique usernames and an in-range target.
class ProfileSet {
public:
    ProfileSet() = default;
    ProfileSet(std::vector<Profile> profiles, std::optional<std::size_t> target_index);

    const std::vector<Profile>& profiles() const noexcept { return profiles_; }
    std::size_t size() const noexcept { return profiles_.size(); }
    const Profile& operator[](std::size_t i) const { return profiles_.at(i); }
    std::optional<std::size_t> target_index() const noexcept { return target_index_; }
    std::optional<std::size_t> find(const std::string& username) const;

    bool operator==(const ProfileSet&) const = default;

private:
    std::vector<Profile> profiles_;
    std::optional<std::size_t> target_index_;
};

inline constexpr std::size_t kUnlimitedImages = std::numeric_limits<std::size_t>::max();

struct LoadOptions {
    /// Keep at most this many image posts (first-listed first); video posts
    /// are not counted against the cap.
    std::size_t image_cap = 50;
};

struct UserListEntry {
    std::string username;
    std::optional<std::string> category;

    bool operator==(const UserListEntry&) const = default;
};

/// Parses `username[,category]` lines; blank and `#` lines are skipped.
std::vector<UserListEntry> parse_user_list(const std::string& text);
std::vector<UserListEntry> read_user_list(const std::filesystem::path& path);
std::string format_user_list(const ProfileSet& set);

/// Parses a JSON array of scraper post objects.
Profile parse_profile(const std::string& json_text, const std::string& username,
                      const LoadOptions& options = {});
Profile load_profile(const std::filesystem::path& path, const std::string& username,
                     const LoadOptions& options = {});

/// Serializes posts back to the scraper JSON schema (4-space indent, sorted keys).
std::string serialize_profile(const Profile& profile);

ProfileSet load_profile_set(const std::filesystem::path& user_list_path,
                            const std::filesystem::path& metadata_dir,
                            const std::optional<std::string>& target_username,
                            const LoadOptions& options = {});

/// Writes `<dir>/<user_list_name>` plus one `<dir>/<username>.json` per profile.
void write_profile_set(const ProfileSet& set, const std::filesystem::path& dir,
                       const std::string& user_list_name = "users.txt");

}  // namespace inflmatch
