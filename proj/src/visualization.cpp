#include "inflmatch/visualization.hpp"

#include "inflmatch/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace inflmatch {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s(buf);
    if (s == "-0.00") s = "0.00";
    return s;
}

std::string category_of(const Embedding2D& e, std::size_t row) {
    if (row < e.categories.size() && e.categories[row]) return *e.categories[row];
    return std::string(kUncategorized);
}

// Five outer and five inner vertices, first point straight up.
std::string star_path(double cx, double cy, double outer) {
    const double inner = outer * 0.4;
    std::string d;
    for (int k = 0; k < 10; ++k) {
        const double r = (k % 2 == 0) ? outer : inner;
        const double angle = -std::numbers::pi / 2.0 + k * std::numbers::pi / 5.0;
        d += (k == 0 ? "M" : " L") + fmt(cx + r * std::cos(angle)) + "," + fmt(cy + r * std::sin(angle));
    }
    return d + " Z";
}

struct Viewport {
    double scale = 1.0;
    double data_cx = 0.0;
    double data_cy = 0.0;
    double pixel_cx = 0.0;
    double pixel_cy = 0.0;

    double px(double x) const { return pixel_cx + (x - data_cx) * scale; }
    double py(double y) const { return pixel_cy - (y - data_cy) * scale; }
};

Viewport fit_viewport(const Matrix& xy, const PlotSpec& spec) {
    double xmin = xy(0, 0), xmax = xy(0, 0), ymin = xy(0, 1), ymax = xy(0, 1);
    for (std::size_t i = 1; i < xy.rows(); ++i) {
        xmin = std::min(xmin, xy(i, 0));
        xmax = std::max(xmax, xy(i, 0));
        ymin = std::min(ymin, xy(i, 1));
        ymax = std::max(ymax, xy(i, 1));
    }
    // 5% padding on each side of the data range.
    double xr = (xmax - xmin) * 1.1;
    double yr = (ymax - ymin) * 1.1;
    if (xr <= 0.0 && yr <= 0.0) xr = yr = 1.0;

    const double avail_w = spec.width_px - 2.0 * spec.margin_px;
    const double avail_h = spec.height_px - 2.0 * spec.margin_px;
    double scale = std::numeric_limits<double>::infinity();
    if (xr > 0.0) scale = std::min(scale, avail_w / xr);
    if (yr > 0.0) scale = std::min(scale, avail_h / yr);

    Viewport v;
    v.scale = scale;
    v.data_cx = xmin + 0.5 * (xmax - xmin);
    v.data_cy = ymin + 0.5 * (ymax - ymin);
    v.pixel_cx = spec.width_px / 2.0;
    v.pixel_cy = spec.height_px / 2.0;
    return v;
}

}  // namespace

std::string xml_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default:
                // Control characters other than tab/newline are not valid XML 1.0.
                if (static_cast<unsigned char>(c) < 0x20 && c != '\t' && c != '\n' && c != '\r') {
                    out += '?';
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::vector<std::string> category_order_of(const Embedding2D& embedding, std::optional<std::size_t> target_index) {
    std::vector<std::string> order;
    for (std::size_t i = 0; i < embedding.rows(); ++i) {
        if (target_index && *target_index == i) continue;
        auto c = category_of(embedding, i);
        if (std::find(order.begin(), order.end(), c) == order.end()) order.push_back(std::move(c));
    }
    return order;
}

std::string emit_scatter_svg(const Embedding2D& embedding, const PlotSpec& spec,
                             std::optional<std::size_t> target_index) {
    const std::size_t m = embedding.rows();
    if (m == 0) throw Error(ErrorCode::kInvalidArgument, "cannot plot an empty embedding");
    if (embedding.coordinates.cols() != 2) throw Error(ErrorCode::kDimensionMismatch, "embedding must have 2 columns");
    if (target_index && *target_index >= m) {
        throw Error(ErrorCode::kTargetOutOfRange, "target row " + std::to_string(*target_index) + " out of range");
    }
    if (spec.margin_px < 0 || spec.width_px < 2 * spec.margin_px + 10 || spec.height_px < 2 * spec.margin_px + 10) {
        throw Error(ErrorCode::kInvalidArgument, "plot size must be at least 2*margin + 10 pixels");
    }

    std::vector<std::size_t> color_index(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (target_index && *target_index == i) continue;
        const auto c = category_of(embedding, i);
        auto it = std::find(spec.category_order.begin(), spec.category_order.end(), c);
        if (it == spec.category_order.end()) {
            throw Error(ErrorCode::kUnknownCategory, "category '" + c + "' of row " + std::to_string(i) +
                                                         " is missing from the category order");
        }
        color_index[i] = static_cast<std::size_t>(it - spec.category_order.begin()) % kCategoryPalette.size();
    }

    const Viewport view = fit_viewport(embedding.coordinates, spec);
    const std::string w = std::to_string(spec.width_px);
    const std::string h = std::to_string(spec.height_px);

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
           "\" viewBox=\"0 0 " + w + " " + h + "\" font-family=\"sans-serif\">\n";
    svg += "<title>" + xml_escape(spec.title) + "</title>\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"#ffffff\"/>\n";
    svg += "<rect class=\"frame\" x=\"" + std::to_string(spec.margin_px) + "\" y=\"" +
           std::to_string(spec.margin_px) + "\" width=\"" + std::to_string(spec.width_px - 2 * spec.margin_px) +
           "\" height=\"" + std::to_string(spec.height_px - 2 * spec.margin_px) +
           "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    svg += "<text class=\"title\" x=\"" + fmt(spec.width_px / 2.0) + "\" y=\"" + fmt(spec.margin_px / 2.0 + 6.0) +
           "\" text-anchor=\"middle\" font-size=\"18\">" + xml_escape(spec.title) + "</text>\n";

    svg += "<g id=\"points\">\n";
    for (std::size_t i = 0; i < m; ++i) {
        const double x = view.px(embedding.coordinates(i, 0));
        const double y = view.py(embedding.coordinates(i, 1));
        if (target_index && *target_index == i) {
            svg += "<path class=\"target\" d=\"" + star_path(x, y, 11.0) + "\" fill=\"" +
                   std::string(kTargetColor) + "\" stroke=\"#000000\" stroke-width=\"0.8\"/>\n";
        } else {
            svg += "<circle class=\"point\" cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"5\" fill=\"" +
                   std::string(kCategoryPalette[color_index[i]]) + "\"/>\n";
        }
    }
    svg += "</g>\n";

    svg += "<g id=\"labels\" font-size=\"11\" fill=\"#222222\">\n";
    for (std::size_t i = 0; i < m; ++i) {
        const double x = view.px(embedding.coordinates(i, 0));
        const double y = view.py(embedding.coordinates(i, 1));
        const std::string name = i < embedding.row_labels.size() ? embedding.row_labels[i] : std::string();
        svg += "<text class=\"label\" x=\"" + fmt(x + 7.0) + "\" y=\"" + fmt(y + 4.0) + "\">" + xml_escape(name) +
               "</text>\n";
    }
    svg += "</g>\n";

    svg += "<g id=\"legend\" font-size=\"12\">\n";
    std::vector<std::pair<std::string, std::string>> entries;
    for (std::size_t c = 0; c < spec.category_order.size(); ++c) {
        entries.emplace_back(spec.category_order[c], std::string(kCategoryPalette[c % kCategoryPalette.size()]));
    }
    if (target_index) entries.emplace_back("target", std::string(kTargetColor));
    const double lx = spec.margin_px + 10.0;
    for (std::size_t e = 0; e < entries.size(); ++e) {
        const double ly = spec.margin_px + 12.0 + 18.0 * static_cast<double>(e);
        svg += "<g class=\"legend-entry\"><rect x=\"" + fmt(lx) + "\" y=\"" + fmt(ly) +
               "\" width=\"10\" height=\"10\" fill=\"" + entries[e].second + "\"/><text x=\"" + fmt(lx + 16.0) +
               "\" y=\"" + fmt(ly + 9.0) + "\">" + xml_escape(entries[e].first) + "</text></g>\n";
    }
    svg += "</g>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace inflmatch
