/*
 * inflmatch C API.
 *
 * Every fallible call returns an im_status; IM_OK is zero. On failure the
 * calling thread's im_last_error() holds a message. Handles are opaque and
 * released with their matching *_free function (NULL is accepted). Strings
 * returned through `char**` are owned by the caller and released with
 * im_string_free(); `const char*` accessors borrow from their handle.
 */
#ifndef INFLMATCH_INFLMATCH_H
#define INFLMATCH_INFLMATCH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(INFLMATCH_BUILDING)
#    define IM_API __declspec(dllexport)
#  else
#    define IM_API __declspec(dllimport)
#  endif
#else
#  define IM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum im_status {
    IM_OK = 0,
    IM_ERR_INVALID_ARGUMENT = 1,
    IM_ERR_IO = 2,
    IM_ERR_MALFORMED_FILE = 3,
    IM_ERR_SCORE_LENGTH_MISMATCH = 4,
    IM_ERR_SCORE_OUT_OF_RANGE = 5,
    IM_ERR_MISSING_PROFILE_FILE = 6,
    IM_ERR_UNKNOWN_TARGET = 7,
    IM_ERR_DUPLICATE_USERNAME = 8,
    IM_ERR_EMPTY_CORPUS = 9,
    IM_ERR_DIMENSION_MISMATCH = 10,
    IM_ERR_TARGET_OUT_OF_RANGE = 11,
    IM_ERR_SINGLETON_SET = 12,
    IM_ERR_ASYMMETRIC_INPUT = 13,
    IM_ERR_NONZERO_DIAGONAL = 14,
    IM_ERR_UNKNOWN_CATEGORY = 15,
    IM_ERR_OVERLAPPING_POOLS = 16,
    IM_ERR_VALIDATION_FAILED = 17,
    IM_ERR_INTERNAL = 18
} im_status;

typedef enum im_weighting {
    IM_WEIGHTING_COUNTS = 0,
    IM_WEIGHTING_TFIDF = 1
} im_weighting;

typedef struct im_profile_set im_profile_set;
typedef struct im_validation im_validation;
typedef struct im_matrix im_matrix;
typedef struct im_match im_match;
typedef struct im_embedding im_embedding;

IM_API const char* im_version(void);
IM_API const char* im_status_name(im_status status);
IM_API const char* im_last_error(void);
IM_API void im_string_free(char* s);

/* ---- profile sets ------------------------------------------------------ */

/* `target` may be NULL. `image_cap` 0 means no cap. */
IM_API im_status im_profile_set_load(const char* user_list, const char* metadata_dir, const char* target,
                                     size_t image_cap, im_profile_set** out);
IM_API void im_profile_set_free(im_profile_set* set);
IM_API size_t im_profile_set_size(const im_profile_set* set);
/* Returns -1 when the set has no target. */
IM_API ptrdiff_t im_profile_set_target(const im_profile_set* set);
IM_API const char* im_profile_set_username(const im_profile_set* set, size_t row);
/* NULL when the row has no category. */
IM_API const char* im_profile_set_category(const im_profile_set* set, size_t row);
/* Writes `<dir>/users.txt` and one `<dir>/<username>.json` per profile. */
IM_API im_status im_profile_set_write(const im_profile_set* set, const char* dir);

typedef struct im_fixture_options {
    uint64_t seed;
    size_t users_per_category;
    size_t posts_per_user;
    double cross_category_noise;
    /* Category the brand profile draws from; NULL for influencers only. */
    const char* brand_category;
    /* NULL selects "brand_<category>". */
    const char* brand_username;
} im_fixture_options;

/* seed 42, 5 users per category, 20 posts, noise 0.1, no brand. */
IM_API im_fixture_options im_fixture_options_default(void);
/* Writes the built-in category names, comma-separated. */
IM_API im_status im_fixture_categories(char** out);
IM_API im_status im_fixture_generate(const im_fixture_options* options, im_profile_set** out);

/* ---- validation -------------------------------------------------------- */

IM_API im_status im_validate(const char* user_list, const char* metadata_dir, const char* target, size_t image_cap,
                             im_validation** out);
IM_API void im_validation_free(im_validation* report);
/* IM_OK when every profile loads and the target is vectorizable. */
IM_API im_status im_validation_status(const im_validation* report);
IM_API size_t im_validation_size(const im_validation* report);
IM_API im_status im_validation_entry(const im_validation* report, size_t i, const char** username,
                                     size_t* post_count, size_t* image_count, size_t* classified_count,
                                     im_status* status, const char** message);
IM_API im_status im_validation_format(const im_validation* report, char** out);

/* ---- document-term matrix ---------------------------------------------- */

IM_API im_status im_matrix_build(const im_profile_set* set, size_t top_k_tags, im_weighting weighting,
                                 im_matrix** out);
IM_API void im_matrix_free(im_matrix* matrix);
IM_API size_t im_matrix_rows(const im_matrix* matrix);
IM_API size_t im_matrix_cols(const im_matrix* matrix);
IM_API double im_matrix_value(const im_matrix* matrix, size_t row, size_t col);
IM_API const char* im_matrix_token(const im_matrix* matrix, size_t col);
IM_API im_status im_matrix_format_tsv(const im_matrix* matrix, char** out);

/* ---- k-NN matching ----------------------------------------------------- */

IM_API im_status im_match_run(const im_matrix* matrix, size_t target_row, size_t k, im_match** out);
IM_API void im_match_free(im_match* match);
IM_API size_t im_match_size(const im_match* match);
IM_API size_t im_match_requested_k(const im_match* match);
IM_API const char* im_match_target(const im_match* match);
IM_API im_status im_match_neighbor(const im_match* match, size_t rank, size_t* row, const char** username,
                                   double* distance);
/* `# target: <name>` then `rank<TAB>username<TAB>distance` lines. */
IM_API im_status im_match_format(const im_match* match, char** out);

/* ---- embedding and plotting -------------------------------------------- */

/* Classical MDS followed by SMACOF (max_iter 0 selects 300, tol <= 0 selects 1e-6). */
IM_API im_status im_embed(const im_matrix* matrix, const im_profile_set* set, int max_iter, double tol,
                          im_embedding** out);
IM_API void im_embedding_free(im_embedding* embedding);
IM_API size_t im_embedding_rows(const im_embedding* embedding);
IM_API im_status im_embedding_point(const im_embedding* embedding, size_t row, double* x, double* y);
IM_API double im_embedding_stress(const im_embedding* embedding);
IM_API int im_embedding_degenerate(const im_embedding* embedding);
IM_API im_status im_embedding_format_tsv(const im_embedding* embedding, char** out);

typedef struct im_plot_options {
    const char* title;
    int width_px;
    int height_px;
    int margin_px;
} im_plot_options;

/* 900 x 900, margin 60, empty title. */
IM_API im_plot_options im_plot_options_default(void);
/* `target_row` < 0 draws no star. Category colors follow first appearance. */
IM_API im_status im_embedding_render_svg(const im_embedding* embedding, const im_plot_options* options,
                                         ptrdiff_t target_row, char** out);

#ifdef __cplusplus
}
#endif

#endif /* INFLMATCH_INFLMATCH_H */
