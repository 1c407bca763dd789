// inflmatch command-line front end. Talks to the library only through the C API.

#include "inflmatch/inflmatch.h"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

template <class T, void (*Free)(T*)>
struct HandleDeleter {
    void operator()(T* p) const { Free(p); }
};

using ProfileSetPtr = std::unique_ptr<im_profile_set, HandleDeleter<im_profile_set, im_profile_set_free>>;
using ValidationPtr = std::unique_ptr<im_validation, HandleDeleter<im_validation, im_validation_free>>;
using MatrixPtr = std::unique_ptr<im_matrix, HandleDeleter<im_matrix, im_matrix_free>>;
using MatchPtr = std::unique_ptr<im_match, HandleDeleter<im_match, im_match_free>>;
using EmbeddingPtr = std::unique_ptr<im_embedding, HandleDeleter<im_embedding, im_embedding_free>>;

struct OwnedString {
    char* p = nullptr;
    ~OwnedString() { im_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

struct Failure {
    im_status status;
};

void check(im_status status) {
    if (status != IM_OK) {
        std::cerr << "error: " << im_status_name(status) << ": " << im_last_error() << "\n";
        throw Failure{status};
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (out) out << content;
    if (!out) {
        std::cerr << "error: IoError: cannot write '" << path << "'\n";
        throw Failure{IM_ERR_IO};
    }
}

struct RunConfig {
    std::string users;
    std::string metadata;
    std::string target;
    std::size_t k = 5;
    std::size_t top_k_tags = 3;
    std::string weighting = "counts";
    std::size_t image_cap = 50;
    std::string output;
    std::string embedding;
    std::string plot;
    std::string export_matrix;

    std::string metadata_dir() const {
        if (!metadata.empty()) return metadata;
        const auto parent = std::filesystem::path(users).parent_path();
        return parent.empty() ? std::string(".") : parent.string();
    }
    const char* target_or_null() const { return target.empty() ? nullptr : target.c_str(); }
    im_weighting weighting_mode() const { return weighting == "tfidf" ? IM_WEIGHTING_TFIDF : IM_WEIGHTING_COUNTS; }
};

struct SynthConfig {
    std::uint64_t seed = 42;
    std::string out_dir;
    std::string brand;
    std::string target;
    std::size_t users_per_category = 5;
    std::size_t posts_per_user = 20;
    double noise = 0.1;
};

void add_input_options(CLI::App* cmd, RunConfig& cfg, bool target_required) {
    cmd->add_option("--users", cfg.users, "User list file (username[,category] per line)")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--metadata", cfg.metadata, "Directory holding <username>.json files (default: user list dir)");
    auto* target = cmd->add_option("--target", cfg.target, "Target brand username");
    if (target_required) target->required();
    cmd->add_option("--image-cap", cfg.image_cap, "Maximum image posts per profile")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
}

void add_vectorizer_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--top-k-tags", cfg.top_k_tags, "Tags taken from each image")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--weighting", cfg.weighting, "Term weighting")
        ->capture_default_str()
        ->check(CLI::IsMember({"counts", "tfidf"}));
    cmd->add_option("--export-matrix", cfg.export_matrix, "Write the document-term matrix as TSV");
}

ProfileSetPtr load(const RunConfig& cfg) {
    im_profile_set* raw = nullptr;
    check(im_profile_set_load(cfg.users.c_str(), cfg.metadata_dir().c_str(), cfg.target_or_null(), cfg.image_cap,
                              &raw));
    return ProfileSetPtr(raw);
}

MatrixPtr vectorize(const RunConfig& cfg, const im_profile_set* set) {
    im_matrix* raw = nullptr;
    check(im_matrix_build(set, cfg.top_k_tags, cfg.weighting_mode(), &raw));
    MatrixPtr matrix(raw);
    if (!cfg.export_matrix.empty()) {
        OwnedString tsv;
        check(im_matrix_format_tsv(matrix.get(), &tsv.p));
        write_file(cfg.export_matrix, tsv.str());
    }
    return matrix;
}

void warn_if_unclassified(const im_matrix* matrix, std::size_t row, const char* username) {
    for (std::size_t j = 0; j < im_matrix_cols(matrix); ++j) {
        if (im_matrix_value(matrix, row, j) != 0.0) return;
    }
    std::cerr << "warning: target '" << username << "' has no classifiable media; all distances are to the origin\n";
}

int cmd_validate(const RunConfig& cfg) {
    im_validation* raw = nullptr;
    check(im_validate(cfg.users.c_str(), cfg.metadata_dir().c_str(), cfg.target_or_null(), cfg.image_cap, &raw));
    ValidationPtr report(raw);
    OwnedString text;
    check(im_validation_format(report.get(), &text.p));
    std::cout << text.str();
    return im_validation_status(report.get());
}

int cmd_match(const RunConfig& cfg) {
    auto set = load(cfg);
    auto matrix = vectorize(cfg, set.get());
    const auto target = static_cast<std::size_t>(im_profile_set_target(set.get()));
    warn_if_unclassified(matrix.get(), target, im_profile_set_username(set.get(), target));

    im_match* raw = nullptr;
    check(im_match_run(matrix.get(), target, cfg.k, &raw));
    MatchPtr match(raw);
    const std::size_t found = im_match_size(match.get());
    if (found < cfg.k) {
        std::cerr << "warning: k=" << cfg.k << " truncated to " << found << " (only " << found
                  << " other profiles)\n";
    }

    OwnedString report;
    check(im_match_format(match.get(), &report.p));
    if (cfg.output.empty()) {
        std::cout << report.str();
        return 0;
    }
    write_file(cfg.output, report.str());
    std::cout << "Target profile is:\n" << im_match_target(match.get()) << "\n\nMost closely related profiles are:\n";
    for (std::size_t r = 0; r < found; ++r) {
        const char* name = nullptr;
        check(im_match_neighbor(match.get(), r, nullptr, &name, nullptr));
        std::cout << name << "\n";
    }
    return 0;
}

int cmd_embed(const RunConfig& cfg) {
    auto set = load(cfg);
    auto matrix = vectorize(cfg, set.get());
    im_embedding* raw = nullptr;
    check(im_embed(matrix.get(), set.get(), 0, 0.0, &raw));
    EmbeddingPtr embedding(raw);
    if (im_embedding_degenerate(embedding.get())) {
        std::cerr << "warning: DegenerateEmbedding: distances carry no 2-D structure; all coordinates are zero\n";
    }

    OwnedString tsv;
    check(im_embedding_format_tsv(embedding.get(), &tsv.p));
    if (!cfg.embedding.empty()) write_file(cfg.embedding, tsv.str());

    if (!cfg.plot.empty()) {
        const ptrdiff_t target = im_profile_set_target(set.get());
        const std::string title = target >= 0 ? "Target brand profile: " +
                                                    std::string(im_profile_set_username(set.get(), target))
                                              : std::string("Profile map");
        im_plot_options options = im_plot_options_default();
        options.title = title.c_str();
        OwnedString svg;
        check(im_embedding_render_svg(embedding.get(), &options, target, &svg.p));
        write_file(cfg.plot, svg.str());
    }
    if (cfg.embedding.empty() && cfg.plot.empty()) std::cout << tsv.str();
    return 0;
}

int cmd_synth(const SynthConfig& cfg) {
    im_fixture_options options = im_fixture_options_default();
    options.seed = cfg.seed;
    options.users_per_category = cfg.users_per_category;
    options.posts_per_user = cfg.posts_per_user;
    options.cross_category_noise = cfg.noise;
    options.brand_category = cfg.brand.empty() ? nullptr : cfg.brand.c_str();
    options.brand_username = cfg.target.empty() ? nullptr : cfg.target.c_str();

    im_profile_set* raw = nullptr;
    check(im_fixture_generate(&options, &raw));
    ProfileSetPtr set(raw);
    check(im_profile_set_write(set.get(), cfg.out_dir.c_str()));
    std::cout << "wrote " << im_profile_set_size(set.get()) << " profiles to " << cfg.out_dir << "\n";
    const ptrdiff_t target = im_profile_set_target(set.get());
    if (target >= 0) std::cout << "target: " << im_profile_set_username(set.get(), target) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Match brands to influencers by the image tags of their posts"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(im_version()));

    RunConfig cfg;
    SynthConfig synth;

    auto* validate = app.add_subcommand("validate", "Load every listed profile and report schema problems");
    add_input_options(validate, cfg, false);

    auto* match = app.add_subcommand("match", "Rank influencers nearest the target brand");
    add_input_options(match, cfg, true);
    add_vectorizer_options(match, cfg);
    match->add_option("--k", cfg.k, "Number of neighbors")->capture_default_str()->check(CLI::PositiveNumber);
    match->add_option("--output", cfg.output, "Report path (default: standard output)");

    auto* embed = app.add_subcommand("embed", "2-D MDS embedding, TSV and SVG plot");
    add_input_options(embed, cfg, false);
    add_vectorizer_options(embed, cfg);
    embed->add_option("--embedding", cfg.embedding, "Embedding TSV path");
    embed->add_option("--plot", cfg.plot, "SVG plot path");

    auto* synth_cmd = app.add_subcommand("synth", "Write a seeded synthetic fixture (user list + JSON files)");
    synth_cmd->add_option("--out", synth.out_dir, "Output directory")->required();
    synth_cmd->add_option("--seed", synth.seed, "PRNG seed")->capture_default_str();
    synth_cmd->add_option("--brand", synth.brand, "Category the brand profile draws from (omit for no brand)");
    synth_cmd->add_option("--target", synth.target, "Brand username (default: brand_<category>)");
    synth_cmd->add_option("--users-per-category", synth.users_per_category)
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    synth_cmd->add_option("--posts-per-user", synth.posts_per_user)
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    synth_cmd->add_option("--noise", synth.noise, "Cross-category tag fraction in [0,1)")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : IM_ERR_INVALID_ARGUMENT;
    }

    try {
        if (*validate) return cmd_validate(cfg);
        if (*match) return cmd_match(cfg);
        if (*embed) return cmd_embed(cfg);
        if (*synth_cmd) return cmd_synth(synth);
    } catch (const Failure& f) {
        return f.status;
    }
    return IM_ERR_INVALID_ARGUMENT;
}
