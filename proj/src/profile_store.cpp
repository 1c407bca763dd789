#include "inflmatch/profile_store.hpp"

#include "inflmatch/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace inflmatch {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxPredictions = 5;

std::string trim(std::string_view s) {
    const auto* ws = " \t\r\n\f\v";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(ws);
    return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void malformed(const std::string& username, std::size_t post, const std::string& what) {
    throw Error(ErrorCode::kMalformedFile,
                "profile '" + username + "', post " + std::to_string(post) + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& username, std::size_t post) {
    auto it = obj.find(key);
    if (it == obj.end()) malformed(username, post, std::string("missing field '") + key + "'");
    return *it;
}

std::uint64_t read_count(const json& post_obj, const char* key, const std::string& username,
                         std::size_t post) {
    const json& edge = require(post_obj, key, username, post);
    if (!edge.is_object()) malformed(username, post, std::string("'") + key + "' is not an object");
    const json& count = require(edge, "count", username, post);
    if (!count.is_number_unsigned()) {
        malformed(username, post, std::string("'") + key + ".count' is not a nonnegative integer");
    }
    return count.get<std::uint64_t>();
}

std::string basename_of(const std::string& url) {
    const auto slash = url.find_last_of('/');
    return slash == std::string::npos ? url : url.substr(slash + 1);
}

Post parse_post(const json& obj, const std::string& username, std::size_t index) {
    if (!obj.is_object()) malformed(username, index, "post is not an object");
    Post post;

    const json& is_video = require(obj, "is_video", username, index);
    if (!is_video.is_boolean()) malformed(username, index, "'is_video' is not a boolean");
    post.is_video = is_video.get<bool>();

    const json& urls = require(obj, "urls", username, index);
    if (!urls.is_array() || urls.empty()) malformed(username, index, "'urls' is not a non-empty array");
    for (const auto& u : urls) {
        if (!u.is_string()) malformed(username, index, "'urls' holds a non-string entry");
    }
    post.id = basename_of(urls.front().get<std::string>());

    post.like_count = read_count(obj, "edge_media_preview_like", username, index);
    post.comment_count = read_count(obj, "edge_media_to_comment", username, index);

    if (auto it = obj.find("edge_media_to_caption"); it != obj.end()) {
        if (!it->is_object()) malformed(username, index, "'edge_media_to_caption' is not an object");
        auto edges = it->find("edges");
        if (edges != it->end()) {
            if (!edges->is_array()) malformed(username, index, "'edge_media_to_caption.edges' is not an array");
            if (!edges->empty()) {
                const json& first = edges->front();
                if (!first.is_object() || !first.contains("node") || !first["node"].is_object() ||
                    !first["node"].contains("text") || !first["node"]["text"].is_string()) {
                    malformed(username, index, "caption edge lacks a string 'node.text'");
                }
                post.caption = first["node"]["text"].get<std::string>();
            }
        }
    }

    if (auto it = obj.find("tags"); it != obj.end() && !it->is_null()) {
        if (!it->is_array()) malformed(username, index, "'tags' is not an array");
        for (const auto& t : *it) {
            if (!t.is_string()) malformed(username, index, "'tags' holds a non-string entry");
            post.hashtags.push_back(t.get<std::string>());
        }
    }

    const auto contents = obj.find("image_contents");
    const auto scores = obj.find("image_scores");
    const bool has_contents = contents != obj.end() && !contents->is_null();
    const bool has_scores = scores != obj.end() && !scores->is_null();
    if (!has_contents && !has_scores) return post;

    if (has_contents && !contents->is_array()) malformed(username, index, "'image_contents' is not an array");
    if (has_scores && !scores->is_array()) malformed(username, index, "'image_scores' is not an array");
    const std::size_t n_contents = has_contents ? contents->size() : 0;
    const std::size_t n_scores = has_scores ? scores->size() : 0;
    if (n_contents != n_scores) {
        throw Error(ErrorCode::kScoreLengthMismatch,
                    "profile '" + username + "', post " + std::to_string(index) + ": " +
                        std::to_string(n_contents) + " image_contents vs " + std::to_string(n_scores) +
                        " image_scores");
    }
    if (n_contents > kMaxPredictions) {
        malformed(username, index, "more than 5 tag predictions");
    }

    std::vector<TagPrediction> predictions;
    predictions.reserve(n_contents);
    for (std::size_t i = 0; i < n_contents; ++i) {
        const json& label = (*contents)[i];
        const json& score = (*scores)[i];
        if (!label.is_string()) malformed(username, index, "'image_contents' holds a non-string entry");
        if (!score.is_number()) malformed(username, index, "'image_scores' holds a non-numeric entry");
        TagPrediction p{label.get<std::string>(), score.get<double>()};
        if (trim(p.label).empty()) malformed(username, index, "empty tag label");
        if (!(p.confidence >= 0.0 && p.confidence <= 1.0)) {
            throw Error(ErrorCode::kScoreOutOfRange, "profile '" + username + "', post " +
                                                         std::to_string(index) + ": score " +
                                                         score.dump() + " outside [0,1]");
        }
        if (!predictions.empty() && p.confidence > predictions.back().confidence) {
            malformed(username, index, "image_scores are not in descending order");
        }
        predictions.push_back(std::move(p));
    }
    // Videos are never classified.
    if (!post.is_video) post.tag_predictions = std::move(predictions);
    return post;
}

std::string read_file(const std::filesystem::path& path, ErrorCode missing_code, const std::string& what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(missing_code, "cannot open " + what + " '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

std::size_t Profile::image_count() const {
    return static_cast<std::size_t>(
        std::count_if(posts.begin(), posts.end(), [](const Post& p) { return !p.is_video; }));
}

std::size_t Profile::classified_count() const {
    return static_cast<std::size_t>(std::count_if(
        posts.begin(), posts.end(), [](const Post& p) { return !p.tag_predictions.empty(); }));
}

ProfileSet::ProfileSet(std::vector<Profile> profiles, std::optional<std::size_t> target_index)
    : profiles_(std::move(profiles)), target_index_(target_index) {
    std::unordered_set<std::string> seen;
    for (const auto& p : profiles_) {
        if (p.username.empty()) throw Error(ErrorCode::kInvalidArgument, "empty username in profile set");
        if (!seen.insert(p.username).second) {
            throw Error(ErrorCode::kDuplicateUsername, "duplicate username '" + p.username + "'");
        }
    }
    if (target_index_ && *target_index_ >= profiles_.size()) {
        throw Error(ErrorCode::kTargetOutOfRange, "target index " + std::to_string(*target_index_) +
                                                      " out of range for " +
                                                      std::to_string(profiles_.size()) + " profiles");
    }
}

std::optional<std::size_t> ProfileSet::find(const std::string& username) const {
    for (std::size_t i = 0; i < profiles_.size(); ++i) {
        if (profiles_[i].username == username) return i;
    }
    return std::nullopt;
}

std::vector<UserListEntry> parse_user_list(const std::string& text) {
    std::vector<UserListEntry> entries;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        UserListEntry entry;
        if (auto comma = stripped.find(','); comma != std::string::npos) {
            entry.username = trim(std::string_view(stripped).substr(0, comma));
            std::string category = trim(std::string_view(stripped).substr(comma + 1));
            if (!category.empty()) entry.category = std::move(category);
        } else {
            entry.username = stripped;
        }
        if (entry.username.empty()) {
            throw Error(ErrorCode::kMalformedFile, "user list line " + std::to_string(line_no) + ": empty username");
        }
        if (entry.username.find_first_of("/\\") != std::string::npos || entry.username == "." ||
            entry.username == "..") {
            throw Error(ErrorCode::kMalformedFile, "user list line " + std::to_string(line_no) +
                                                       ": invalid username '" + entry.username + "'");
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<UserListEntry> read_user_list(const std::filesystem::path& path) {
    return parse_user_list(read_file(path, ErrorCode::kIoError, "user list"));
}

std::string format_user_list(const ProfileSet& set) {
    std::string out;
    for (const auto& p : set.profiles()) {
        out += p.username;
        if (p.category) out += "," + *p.category;
        out += '\n';
    }
    return out;
}

Profile parse_profile(const std::string& json_text, const std::string& username, const LoadOptions& options) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::kMalformedFile, "profile '" + username + "': invalid JSON: " + e.what());
    }
    if (!doc.is_array()) {
        throw Error(ErrorCode::kMalformedFile, "profile '" + username + "': top level is not a JSON array");
    }

    Profile profile;
    profile.username = username;
    std::size_t images = 0;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        Post post = parse_post(doc[i], username, i);
        if (!post.is_video) {
            if (images >= options.image_cap) continue;
            ++images;
        }
        profile.posts.push_back(std::move(post));
    }
    return profile;
}

Profile load_profile(const std::filesystem::path& path, const std::string& username, const LoadOptions& options) {
    return parse_profile(read_file(path, ErrorCode::kMissingProfileFile, "metadata file for '" + username + "'"),
                         username, options);
}

std::string serialize_profile(const Profile& profile) {
    json doc = json::array();
    for (const auto& post : profile.posts) {
        json obj = json::object();
        obj["is_video"] = post.is_video;
        obj["urls"] = json::array({post.id});
        obj["edge_media_preview_like"] = {{"count", post.like_count}};
        obj["edge_media_to_comment"] = {{"count", post.comment_count}};
        json edges = json::array();
        if (post.caption) edges.push_back({{"node", {{"text", *post.caption}}}});
        obj["edge_media_to_caption"] = {{"edges", edges}};
        obj["tags"] = post.hashtags;
        if (!post.tag_predictions.empty()) {
            json contents = json::array();
            json scores = json::array();
            for (const auto& p : post.tag_predictions) {
                contents.push_back(p.label);
                scores.push_back(p.confidence);
            }
            obj["image_contents"] = std::move(contents);
            obj["image_scores"] = std::move(scores);
        }
        doc.push_back(std::move(obj));
    }
    return doc.dump(4) + "\n";
}

ProfileSet load_profile_set(const std::filesystem::path& user_list_path,
                            const std::filesystem::path& metadata_dir,
                            const std::optional<std::string>& target_username, const LoadOptions& options) {
    const auto entries = read_user_list(user_list_path);

    std::unordered_set<std::string> seen;
    for (const auto& e : entries) {
        if (!seen.insert(e.username).second) {
            throw Error(ErrorCode::kDuplicateUsername, "duplicate username '" + e.username + "' in user list");
        }
    }

    std::optional<std::size_t> target_index;
    if (target_username) {
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].username == *target_username) target_index = i;
        }
        if (!target_index) {
            throw Error(ErrorCode::kUnknownTarget, "target '" + *target_username + "' is not in the user list");
        }
    }

    std::vector<Profile> profiles;
    profiles.reserve(entries.size());
    for (const auto& e : entries) {
        const auto file = metadata_dir / (e.username + ".json");
        if (!std::filesystem::is_regular_file(file)) {
            throw Error(ErrorCode::kMissingProfileFile,
                        "no metadata file for '" + e.username + "' (expected " + file.string() + ")");
        }
        Profile p = load_profile(file, e.username, options);
        p.category = e.category;
        profiles.push_back(std::move(p));
    }
    return ProfileSet(std::move(profiles), target_index);
}

void write_profile_set(const ProfileSet& set, const std::filesystem::path& dir, const std::string& user_list_name) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::kIoError, "cannot create directory '" + dir.string() + "': " + ec.message());

    auto write = [](const std::filesystem::path& path, const std::string& content) {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path.string() + "'");
        out << content;
        if (!out) throw Error(ErrorCode::kIoError, "write failed for '" + path.string() + "'");
    };

    write(dir / user_list_name, format_user_list(set));
    for (const auto& p : set.profiles()) write(dir / (p.username + ".json"), serialize_profile(p));
}

}  // namespace inflmatch
