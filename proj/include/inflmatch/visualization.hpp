#pragma once

#include "inflmatch/embedding.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace inflmatch {

/// Category colors, assigned by position in PlotSpec::category_order (cycling after 10).
inline constexpr std::array<std::string_view, 10> kCategoryPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};
inline constexpr std::string_view kTargetColor = "#bfbf00";
/// Rows without a category are plotted under this name.
inline constexpr std::string_view kUncategorized = "uncategorized";

struct PlotSpec {
    std::string title;
    int width_px = 900;
    int height_px = 900;
    int margin_px = 60;
    std::vector<std::string> category_order;
};

/// Categories of non-target rows in order of first appearance.
std::vector<std::string> category_order_of(const Embedding2D& embedding, std::optional<std::size_t> target_index);

/// Standalone SVG 1.1 scatter plot. Non-target rows are `circle.point`, the
/// target is a `path.target` star, every row gets a `text.label`, and the
/// legend is a list of `g.legend-entry` groups.
std::string emit_scatter_svg(const Embedding2D& embedding, const PlotSpec& spec,
                             std::optional<std::size_t> target_index);

std::string xml_escape(std::string_view text);

}  // namespace inflmatch
