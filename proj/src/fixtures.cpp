#include "inflmatch/fixtures.hpp"

#include "inflmatch/content.hpp"
#include "inflmatch/error.hpp"
#include "inflmatch/prng.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace inflmatch {

namespace {

struct Band {
    double lo;
    double hi;
};
constexpr Band kConfidenceBands[3] = {{0.5, 1.0}, {0.2, 0.5}, {0.05, 0.2}};

const FixtureCategory& find_category(const FixtureSpec& spec, const std::string& name) {
    for (const auto& c : spec.categories) {
        if (c.name == name) return c;
    }
    throw Error(ErrorCode::kUnknownCategory, "no fixture category named '" + name + "'");
}

std::string two_digits(std::size_t n) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%02zu", n);
    return buf;
}

// Each profile gets its own stream: seed XOR fnv1a64(username).
Profile generate_profile(const FixtureSpec& spec, const FixtureCategory& own, const std::string& username) {
    std::vector<std::string> others;
    for (const auto& c : spec.categories) {
        if (c.name == own.name) continue;
        others.insert(others.end(), c.tag_pool.begin(), c.tag_pool.end());
    }

    Xorshift64Star rng(spec.seed ^ fnv1a64(username));
    Profile profile;
    profile.username = username;
    profile.category = own.name;
    for (std::size_t p = 0; p < spec.posts_per_user; ++p) {
        Post post;
        post.id = username + "_" + two_digits(p + 1) + ".jpg";
        for (const auto& band : kConfidenceBands) {
            std::string label;
            do {
                const bool noisy = !others.empty() && rng.uniform() < spec.cross_category_noise;
                const auto& pool = noisy ? others : own.tag_pool;
                label = pool[rng.below(pool.size())];
            } while (std::any_of(post.tag_predictions.begin(), post.tag_predictions.end(),
                                 [&](const TagPrediction& t) { return t.label == label; }));
            post.tag_predictions.push_back({label, rng.uniform(band.lo, band.hi)});
        }
        post.like_count = rng.below(1000);
        post.comment_count = rng.below(100);
        post.caption = "synthetic " + own.name + " post " + std::to_string(p + 1);
        post.hashtags = {own.name};
        profile.posts.push_back(std::move(post));
    }
    return profile;
}

}  // namespace

FixtureSpec default_fixture_spec(std::uint64_t seed) {
    FixtureSpec spec;
    spec.seed = seed;
    spec.categories = {
        {"dogs",
         {"golden retriever", "Labrador retriever", "Eskimo dog, husky",
          "German shepherd, German shepherd dog, German police dog, alsatian", "Border collie", "beagle",
          "pug, pug-dog", "malamute, malemute, Alaskan malamute", "tennis ball", "Pembroke, Pembroke Welsh corgi"}},
        {"mountains",
         {"alp", "volcano", "valley, vale", "cliff, drop, drop-off", "mountain tent", "lakeside, lakeshore", "ski",
          "promontory, headland, head, foreland", "geyser"}},
        {"pizza",
         {"pizza, pizza pie", "plate", "French loaf", "cheeseburger", "espresso", "wine bottle",
          "restaurant, eating house, eating place, eatery", "carbonara", "trifle"}},
        {"cats",
         {"tabby, tabby cat", "tiger cat", "Persian cat", "Egyptian cat", "Siamese cat, Siamese", "lynx, catamount",
          "window screen", "quilt, comforter, comfort, puff", "Angora, Angora rabbit"}},
        {"cars",
         {"sports car, sport car", "convertible", "racer, race car, racing car", "grille, radiator grille",
          "car wheel", "beach wagon, station wagon, wagon, estate car, beach waggon, station waggon, waggon",
          "limousine, limo", "pickup, pickup truck", "minivan"}},
    };
    return spec;
}

void validate_fixture_spec(const FixtureSpec& spec) {
    if (spec.categories.empty()) throw Error(ErrorCode::kInvalidArgument, "fixture needs at least one category");
    if (spec.users_per_category == 0 || spec.posts_per_user == 0) {
        throw Error(ErrorCode::kInvalidArgument, "users_per_category and posts_per_user must be positive");
    }
    if (!(spec.cross_category_noise >= 0.0 && spec.cross_category_noise < 1.0)) {
        throw Error(ErrorCode::kInvalidArgument, "cross_category_noise must lie in [0, 1)");
    }
    std::map<std::string, std::string> token_owner;
    std::map<std::string, int> names;
    for (const auto& c : spec.categories) {
        if (c.name.empty() || c.name == "target" || c.name.find_first_of(",/\\ \t") != std::string::npos) {
            throw Error(ErrorCode::kInvalidArgument, "invalid fixture category name '" + c.name + "'");
        }
        if (names[c.name]++ > 0) throw Error(ErrorCode::kInvalidArgument, "duplicate category '" + c.name + "'");
        if (c.tag_pool.size() < 8) {
            throw Error(ErrorCode::kInvalidArgument, "category '" + c.name + "' needs at least 8 tags");
        }
        for (const auto& label : c.tag_pool) {
            const auto tokens = tokenize(label);
            if (tokens.empty()) {
                throw Error(ErrorCode::kInvalidArgument, "tag '" + label + "' has no tokens");
            }
            for (const auto& t : tokens) {
                auto [it, fresh] = token_owner.emplace(t, c.name);
                if (!fresh && it->second != c.name) {
                    throw Error(ErrorCode::kOverlappingPools, "token '" + t + "' appears in both '" + it->second +
                                                                  "' and '" + c.name + "' pools");
                }
            }
        }
        auto sorted = c.tag_pool;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw Error(ErrorCode::kInvalidArgument, "category '" + c.name + "' repeats a tag");
        }
    }
}

ProfileSet generate_profile_set(const FixtureSpec& spec) {
    validate_fixture_spec(spec);
    std::vector<Profile> profiles;
    for (const auto& c : spec.categories) {
        for (std::size_t u = 0; u < spec.users_per_category; ++u) {
            profiles.push_back(generate_profile(spec, c, c.name + "_" + two_digits(u + 1)));
        }
    }
    return ProfileSet(std::move(profiles), std::nullopt);
}

Profile generate_brand_profile(const FixtureSpec& spec, const std::string& category_name, const std::string& username) {
    validate_fixture_spec(spec);
    Profile brand = generate_profile(spec, find_category(spec, category_name), username);
    brand.category = "target";
    return brand;
}

ProfileSet generate_experiment(const FixtureSpec& spec, const std::string& brand_category,
                               const std::string& brand_username) {
    ProfileSet influencers = generate_profile_set(spec);
    std::vector<Profile> profiles = influencers.profiles();
    profiles.push_back(generate_brand_profile(spec, brand_category, brand_username));
    const std::size_t target = profiles.size() - 1;
    return ProfileSet(std::move(profiles), target);
}

}  // namespace inflmatch
