#pragma once

#include "inflmatch/profile_store.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace inflmatch {

struct FixtureCategory {
    std::string name;
    std::vector<std::string> tag_pool;  // at least 8 labels
};

struct FixtureSpec {
    std::uint64_t seed = 42;
    std::vector<FixtureCategory> categories;
    std::size_t users_per_category = 5;
    std::size_t posts_per_user = 20;
    double cross_category_noise = 0.1;
};

inline constexpr std::uint64_t kDefaultFixtureSeed = 42;

/// Five themes (dogs, mountains, pizza, cats, cars) with token-disjoint
/// ImageNet-style tag pools.
FixtureSpec default_fixture_spec(std::uint64_t seed = kDefaultFixtureSeed);

/// Throws InvalidArgument or OverlappingPools. Pools must be disjoint at the
/// token level, not just as label strings.
void validate_fixture_spec(const FixtureSpec& spec);

/// Influencers `<category>_NN` grouped by category in spec order.
ProfileSet generate_profile_set(const FixtureSpec& spec);

/// A brand profile drawn from one category's pool; its category label is "target".
Profile generate_brand_profile(const FixtureSpec& spec, const std::string& category_name, const std::string& username);

/// generate_profile_set plus the brand appended as the last row, which becomes the target.
ProfileSet generate_experiment(const FixtureSpec& spec, const std::string& brand_category,
                               const std::string& brand_username);

}  // namespace inflmatch
