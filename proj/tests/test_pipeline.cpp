#include "inflmatch/fixtures.hpp"
#include "inflmatch/pipeline.hpp"

#include "test_util.hpp"

#include <json.hpp>

using namespace inflmatch;
using inflmatch::testing::TempDir;

namespace {

std::string video_only() {
    return nlohmann::json::array({{{"is_video", true},
                                   {"urls", {"v.mp4"}},
                                   {"edge_media_preview_like", {{"count", 1}}},
                                   {"edge_media_to_comment", {{"count", 0}}}}})
        .dump();
}

}  // namespace

TEST_CASE("validate a clean fixture") {
    TempDir dir;
    write_profile_set(generate_experiment(default_fixture_spec(), "dogs", "brand_dogs"), dir.path());
    const auto report = validate_profiles(dir.path() / "users.txt", dir.path(), std::string("brand_dogs"));
    CHECK(report.ok());
    CHECK(report.entries.size() == 26);
    CHECK(report.entries.back().is_target);
    CHECK(report.entries[0].post_count == 20);
    CHECK(report.entries[0].classified_count == 20);
    const auto text = format_validation_report(report);
    CHECK(text.find("# 26 profiles, 0 failing: OK") != std::string::npos);
}

TEST_CASE("validate reports problems per profile") {
    TempDir dir;
    write_profile_set(generate_profile_set(default_fixture_spec()), dir.path());

    SUBCASE("missing file") {
        dir.write("users.txt", "dogs_01\nghost_user\ncats_02\n");
        const auto report = validate_profiles(dir.path() / "users.txt", dir.path(), std::nullopt);
        CHECK_FALSE(report.ok());
        CHECK(report.failure() == ErrorCode::kMissingProfileFile);
        CHECK(report.entries.size() == 3);
        CHECK(report.entries[2].loaded);
        CHECK(format_validation_report(report).find("ghost_user") != std::string::npos);
    }
    SUBCASE("video-only influencer warns, video-only target fails") {
        dir.write("videos.json", video_only());
        dir.write("users.txt", "dogs_01\nvideos\n");
        const auto as_influencer = validate_profiles(dir.path() / "users.txt", dir.path(), std::string("dogs_01"));
        CHECK(as_influencer.ok());
        CHECK(format_validation_report(as_influencer).find("warning\tno classifiable media") != std::string::npos);

        const auto as_target = validate_profiles(dir.path() / "users.txt", dir.path(), std::string("videos"));
        CHECK(as_target.failure() == ErrorCode::kValidationFailed);
    }
    SUBCASE("nothing vectorizable") {
        dir.write("videos.json", video_only());
        dir.write("users.txt", "videos\n");
        CHECK(validate_profiles(dir.path() / "users.txt", dir.path(), std::nullopt).failure() ==
              ErrorCode::kEmptyCorpus);
    }
    SUBCASE("unknown target and unreadable list") {
        dir.write("users.txt", "dogs_01\n");
        CHECK(validate_profiles(dir.path() / "users.txt", dir.path(), std::string("nobody")).failure() ==
              ErrorCode::kUnknownTarget);
        CHECK(validate_profiles(dir.path() / "absent.txt", dir.path(), std::nullopt).failure() ==
              ErrorCode::kIoError);
    }
}

TEST_CASE("tfidf weighting through the pipeline") {
    const auto set = generate_experiment(default_fixture_spec(), "cars", "brand_cars");
    PipelineOptions options;
    options.weighting = Weighting::kTfidf;
    const auto m = build_matrix(set, options);
    CHECK(m.weighting == Weighting::kTfidf);
    const auto r = knn_match(m, *set.target_index(), 5);
    for (const auto& n : r.neighbors) CHECK(*set[n.row].category == "cars");
}

TEST_CASE("embedding TSV") {
    Embedding2D e;
    e.coordinates = Matrix(2, 2);
    e.coordinates(0, 0) = -1e-9;
    e.coordinates(1, 1) = 2.5;
    e.row_labels = {"a", "b"};
    e.categories = {std::string("dogs"), std::nullopt};
    CHECK(format_embedding_tsv(e) == "username\tcategory\tx\ty\na\tdogs\t0.000000\t0.000000\nb\t\t0.000000\t2.500000\n");
}
