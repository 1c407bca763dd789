#include "inflmatch/inflmatch.h"

#include "inflmatch/fixtures.hpp"
#include "inflmatch/pipeline.hpp"
#include "inflmatch/visualization.hpp"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

using namespace inflmatch;

struct im_profile_set {
    ProfileSet set;
};

struct im_validation {
    ValidationReport report;
};

struct im_matrix {
    DocTermMatrix matrix;
};

struct im_match {
    MatchResult result;
};

struct im_embedding {
    Embedding2D embedding;
};

namespace {

static_assert(static_cast<int>(ErrorCode::kInternal) == IM_ERR_INTERNAL);
static_assert(static_cast<int>(ErrorCode::kMalformedFile) == IM_ERR_MALFORMED_FILE);
static_assert(static_cast<int>(ErrorCode::kValidationFailed) == IM_ERR_VALIDATION_FAILED);

thread_local std::string g_last_error;

im_status to_status(ErrorCode code) {
    return static_cast<im_status>(static_cast<int>(code));
}

im_status fail(im_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

// Runs `fn`, translating exceptions into status codes.
template <class Fn>
im_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return IM_OK;
    } catch (const Error& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(IM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(IM_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(IM_ERR_INTERNAL, "unknown exception");
    }
}

char* copy_string(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

im_status null_argument(const char* what) {
    return fail(IM_ERR_INVALID_ARGUMENT, std::string("null argument: ") + what);
}

LoadOptions load_options(size_t image_cap) {
    LoadOptions o;
    o.image_cap = image_cap == 0 ? kUnlimitedImages : image_cap;
    return o;
}

std::optional<std::string> optional_string(const char* s) {
    if (!s) return std::nullopt;
    return std::string(s);
}

}  // namespace

extern "C" {

const char* im_version(void) { return "1.0.0"; }

const char* im_status_name(im_status status) {
    if (status == IM_OK) return "OK";
    if (status < IM_OK || status > IM_ERR_INTERNAL) return "Unknown";
    return error_code_name(static_cast<ErrorCode>(status)).data();
}

const char* im_last_error(void) { return g_last_error.c_str(); }

void im_string_free(char* s) { std::free(s); }

im_status im_profile_set_load(const char* user_list, const char* metadata_dir, const char* target, size_t image_cap,
                              im_profile_set** out) {
    if (!user_list || !metadata_dir || !out) return null_argument("user_list, metadata_dir and out are required");
    *out = nullptr;
    return guarded([&] {
        auto set = load_profile_set(user_list, metadata_dir, optional_string(target), load_options(image_cap));
        *out = new im_profile_set{std::move(set)};
    });
}

void im_profile_set_free(im_profile_set* set) { delete set; }

size_t im_profile_set_size(const im_profile_set* set) { return set ? set->set.size() : 0; }

ptrdiff_t im_profile_set_target(const im_profile_set* set) {
    if (!set || !set->set.target_index()) return -1;
    return static_cast<ptrdiff_t>(*set->set.target_index());
}

const char* im_profile_set_username(const im_profile_set* set, size_t row) {
    if (!set || row >= set->set.size()) return nullptr;
    return set->set[row].username.c_str();
}

const char* im_profile_set_category(const im_profile_set* set, size_t row) {
    if (!set || row >= set->set.size() || !set->set[row].category) return nullptr;
    return set->set[row].category->c_str();
}

im_status im_profile_set_write(const im_profile_set* set, const char* dir) {
    if (!set || !dir) return null_argument("set and dir are required");
    return guarded([&] { write_profile_set(set->set, dir); });
}

im_fixture_options im_fixture_options_default(void) {
    const FixtureSpec spec;
    im_fixture_options o{};
    o.seed = kDefaultFixtureSeed;
    o.users_per_category = spec.users_per_category;
    o.posts_per_user = spec.posts_per_user;
    o.cross_category_noise = spec.cross_category_noise;
    o.brand_category = nullptr;
    o.brand_username = nullptr;
    return o;
}

im_status im_fixture_categories(char** out) {
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        std::string names;
        for (const auto& c : default_fixture_spec().categories) names += (names.empty() ? "" : ",") + c.name;
        *out = copy_string(names);
    });
}

im_status im_fixture_generate(const im_fixture_options* options, im_profile_set** out) {
    if (!options || !out) return null_argument("options and out are required");
    *out = nullptr;
    return guarded([&] {
        FixtureSpec spec = default_fixture_spec(options->seed);
        spec.users_per_category = options->users_per_category;
        spec.posts_per_user = options->posts_per_user;
        spec.cross_category_noise = options->cross_category_noise;
        if (options->brand_category) {
            const std::string category = options->brand_category;
            const std::string username =
                options->brand_username ? std::string(options->brand_username) : "brand_" + category;
            *out = new im_profile_set{generate_experiment(spec, category, username)};
        } else {
            *out = new im_profile_set{generate_profile_set(spec)};
        }
    });
}

im_status im_validate(const char* user_list, const char* metadata_dir, const char* target, size_t image_cap,
                      im_validation** out) {
    if (!user_list || !metadata_dir || !out) return null_argument("user_list, metadata_dir and out are required");
    *out = nullptr;
    return guarded([&] {
        *out = new im_validation{
            validate_profiles(user_list, metadata_dir, optional_string(target), load_options(image_cap))};
    });
}

void im_validation_free(im_validation* report) { delete report; }

im_status im_validation_status(const im_validation* report) {
    if (!report) return null_argument("report");
    const auto failure = report->report.failure();
    return failure ? to_status(*failure) : IM_OK;
}

size_t im_validation_size(const im_validation* report) { return report ? report->report.entries.size() : 0; }

im_status im_validation_entry(const im_validation* report, size_t i, const char** username, size_t* post_count,
                              size_t* image_count, size_t* classified_count, im_status* status,
                              const char** message) {
    if (!report) return null_argument("report");
    if (i >= report->report.entries.size()) return fail(IM_ERR_INVALID_ARGUMENT, "validation entry out of range");
    const auto& e = report->report.entries[i];
    if (username) *username = e.username.c_str();
    if (post_count) *post_count = e.post_count;
    if (image_count) *image_count = e.image_count;
    if (classified_count) *classified_count = e.classified_count;
    if (status) {
        if (e.error) *status = to_status(*e.error);
        else if (e.is_target && !e.vectorizable()) *status = IM_ERR_VALIDATION_FAILED;
        else *status = IM_OK;
    }
    if (message) *message = e.message.c_str();
    return IM_OK;
}

im_status im_validation_format(const im_validation* report, char** out) {
    if (!report || !out) return null_argument("report and out are required");
    *out = nullptr;
    return guarded([&] { *out = copy_string(format_validation_report(report->report)); });
}

im_status im_matrix_build(const im_profile_set* set, size_t top_k_tags, im_weighting weighting, im_matrix** out) {
    if (!set || !out) return null_argument("set and out are required");
    *out = nullptr;
    if (weighting != IM_WEIGHTING_COUNTS && weighting != IM_WEIGHTING_TFIDF) {
        return fail(IM_ERR_INVALID_ARGUMENT, "unknown weighting");
    }
    return guarded([&] {
        PipelineOptions options;
        options.synthesis.top_k = top_k_tags;
        options.weighting = weighting == IM_WEIGHTING_TFIDF ? Weighting::kTfidf : Weighting::kCounts;
        *out = new im_matrix{build_matrix(set->set, options)};
    });
}

void im_matrix_free(im_matrix* matrix) { delete matrix; }

size_t im_matrix_rows(const im_matrix* matrix) { return matrix ? matrix->matrix.rows() : 0; }

size_t im_matrix_cols(const im_matrix* matrix) { return matrix ? matrix->matrix.cols() : 0; }

double im_matrix_value(const im_matrix* matrix, size_t row, size_t col) {
    if (!matrix || row >= matrix->matrix.rows() || col >= matrix->matrix.cols()) return 0.0;
    return matrix->matrix.values(row, col);
}

const char* im_matrix_token(const im_matrix* matrix, size_t col) {
    if (!matrix || col >= matrix->matrix.cols()) return nullptr;
    return matrix->matrix.vocabulary.token(col).c_str();
}

im_status im_matrix_format_tsv(const im_matrix* matrix, char** out) {
    if (!matrix || !out) return null_argument("matrix and out are required");
    *out = nullptr;
    return guarded([&] { *out = copy_string(format_matrix_tsv(matrix->matrix)); });
}

im_status im_match_run(const im_matrix* matrix, size_t target_row, size_t k, im_match** out) {
    if (!matrix || !out) return null_argument("matrix and out are required");
    *out = nullptr;
    return guarded([&] { *out = new im_match{knn_match(matrix->matrix, target_row, k)}; });
}

void im_match_free(im_match* match) { delete match; }

size_t im_match_size(const im_match* match) { return match ? match->result.neighbors.size() : 0; }

size_t im_match_requested_k(const im_match* match) { return match ? match->result.k : 0; }

const char* im_match_target(const im_match* match) {
    return match ? match->result.target_username.c_str() : nullptr;
}

im_status im_match_neighbor(const im_match* match, size_t rank, size_t* row, const char** username,
                            double* distance) {
    if (!match) return null_argument("match");
    if (rank >= match->result.neighbors.size()) return fail(IM_ERR_INVALID_ARGUMENT, "neighbor rank out of range");
    const auto& n = match->result.neighbors[rank];
    if (row) *row = n.row;
    if (username) *username = n.username.c_str();
    if (distance) *distance = n.distance;
    return IM_OK;
}

im_status im_match_format(const im_match* match, char** out) {
    if (!match || !out) return null_argument("match and out are required");
    *out = nullptr;
    return guarded([&] { *out = copy_string(format_match_report(match->result)); });
}

im_status im_embed(const im_matrix* matrix, const im_profile_set* set, int max_iter, double tol,
                   im_embedding** out) {
    if (!matrix || !set || !out) return null_argument("matrix, set and out are required");
    *out = nullptr;
    return guarded([&] {
        SmacofOptions smacof;
        if (max_iter > 0) smacof.max_iter = max_iter;
        if (tol > 0.0) smacof.tol = tol;
        *out = new im_embedding{embed_profiles(matrix->matrix, set->set, smacof)};
    });
}

void im_embedding_free(im_embedding* embedding) { delete embedding; }

size_t im_embedding_rows(const im_embedding* embedding) { return embedding ? embedding->embedding.rows() : 0; }

im_status im_embedding_point(const im_embedding* embedding, size_t row, double* x, double* y) {
    if (!embedding) return null_argument("embedding");
    if (row >= embedding->embedding.rows()) return fail(IM_ERR_INVALID_ARGUMENT, "embedding row out of range");
    if (x) *x = embedding->embedding.coordinates(row, 0);
    if (y) *y = embedding->embedding.coordinates(row, 1);
    return IM_OK;
}

double im_embedding_stress(const im_embedding* embedding) { return embedding ? embedding->embedding.stress : 0.0; }

int im_embedding_degenerate(const im_embedding* embedding) {
    return embedding && embedding->embedding.degenerate ? 1 : 0;
}

im_status im_embedding_format_tsv(const im_embedding* embedding, char** out) {
    if (!embedding || !out) return null_argument("embedding and out are required");
    *out = nullptr;
    return guarded([&] { *out = copy_string(format_embedding_tsv(embedding->embedding)); });
}

im_plot_options im_plot_options_default(void) {
    const PlotSpec spec;
    return im_plot_options{"", spec.width_px, spec.height_px, spec.margin_px};
}

im_status im_embedding_render_svg(const im_embedding* embedding, const im_plot_options* options, ptrdiff_t target_row,
                                  char** out) {
    if (!embedding || !options || !out) return null_argument("embedding, options and out are required");
    *out = nullptr;
    return guarded([&] {
        std::optional<std::size_t> target;
        if (target_row >= 0) target = static_cast<std::size_t>(target_row);
        PlotSpec spec;
        spec.title = options->title ? options->title : "";
        spec.width_px = options->width_px;
        spec.height_px = options->height_px;
        spec.margin_px = options->margin_px;
        spec.category_order = category_order_of(embedding->embedding, target);
        *out = copy_string(emit_scatter_svg(embedding->embedding, spec, target));
    });
}

}  // extern "C"
