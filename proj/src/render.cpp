#include "rectcarto/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include "rectcarto/error.hpp"
#include "rectcarto/format.hpp"
#include "rectcarto/metrics.hpp"

namespace rectcarto {

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::vector<double> column_values(const Cartogram& cart, const std::string& name,
                                  const std::map<std::string, std::vector<double>>& extra) {
    std::vector<double> v;
    v.reserve(cart.size());
    auto collect = [&](auto get) {
        for (const auto& r : cart.regions) {
            v.push_back(get(r));
        }
    };
    if (name == "x") {
        collect([](const PlacedRegion& r) { return r.rect.x; });
    } else if (name == "y") {
        collect([](const PlacedRegion& r) { return r.rect.y; });
    } else if (name == "dx") {
        collect([](const PlacedRegion& r) { return r.rect.dx; });
    } else if (name == "dy") {
        collect([](const PlacedRegion& r) { return r.rect.dy; });
    } else if (name == "z") {
        collect([](const PlacedRegion& r) { return r.z; });
    } else if (name == "dfs.num") {
        collect([](const PlacedRegion& r) { return static_cast<double>(r.dfs_num); });
    } else if (name == "topology.error") {
        collect([](const PlacedRegion& r) { return static_cast<double>(r.topology_error); });
    } else if (name == "relpos.error") {
        collect([](const PlacedRegion& r) { return r.relpos_error; });
    } else if (name == "relposnh.error") {
        collect([](const PlacedRegion& r) { return r.relposnh_error; });
    } else if (const auto it = extra.find(name); it != extra.end()) {
        if (it->second.size() != cart.size()) {
            throw ValidationError("colour column '" + name + "' has the wrong length");
        }
        v = it->second;
    } else {
        throw ValidationError("unknown colour column '" + name + "'");
    }
    return v;
}

}  // namespace

std::vector<std::string> default_colormap(std::size_t k) {
    // dark red -> near white
    constexpr double lo[3] = {0xB2, 0x18, 0x2B};
    constexpr double hi[3] = {0xF7, 0xF4, 0xF0};
    std::vector<std::string> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double t = k > 1 ? static_cast<double>(i) / static_cast<double>(k - 1) : 0.0;
        char buf[8];
        std::snprintf(buf, sizeof buf, "#%02X%02X%02X",
                      static_cast<unsigned>(std::lround(lo[0] + t * (hi[0] - lo[0]))),
                      static_cast<unsigned>(std::lround(lo[1] + t * (hi[1] - lo[1]))),
                      static_cast<unsigned>(std::lround(lo[2] + t * (hi[2] - lo[2]))));
        out.emplace_back(buf);
    }
    return out;
}

std::size_t colormap_index(double v, double lo, double hi, std::size_t k) {
    if (k <= 1 || !(hi > lo) || !std::isfinite(v)) {
        return 1;
    }
    const double t = std::clamp((v - lo) / (hi - lo), 0.0, 1.0);
    return static_cast<std::size_t>(std::lround(static_cast<double>(k - 1) * t)) + 1;
}

double label_width(const std::string& text, double font_size) {
    return 0.6 * font_size * static_cast<double>(std::max<std::size_t>(text.size(), 1));
}

double label_font_size(const std::string& text, double width, double height) {
    const double by_width = width / label_width(text, 1.0);
    return std::max(0.0, std::min(by_width, 0.8 * height));
}

void render_svg(std::ostream& out, const Cartogram& cart, const SvgOptions& options,
                const std::map<std::string, std::vector<double>>& extra) {
    const auto rects = cart.rects();
    const BoundingBox box = bounding_box(rects);
    const double span_x = std::max(box.xmax - box.xmin, 1e-12);
    const double span_y = std::max(box.ymax - box.ymin, 1e-12);
    const double scale = options.width_px / span_x;
    const double width = options.width_px;
    const double height = span_y * scale;

    std::vector<std::string> fills(cart.size(), "#FFFFFF");
    if (!options.color_by.empty()) {
        const auto values = column_values(cart, options.color_by, extra);
        const auto cmap = options.colormap.empty() ? default_colormap(10) : options.colormap;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (double v : values) {
            if (std::isfinite(v)) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
        for (std::size_t j = 0; j < values.size(); ++j) {
            fills[j] = cmap[colormap_index(values[j], lo, hi, cmap.size()) - 1];
        }
    }

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height)
        << "\">\n";
    for (std::size_t j = 0; j < cart.size(); ++j) {
        const Rect& r = rects[j];
        out << "  <rect x=\"" << fmt((r.xmin() - box.xmin) * scale) << "\" y=\""
            << fmt((box.ymax - r.ymax()) * scale) << "\" width=\"" << fmt(2.0 * r.dx * scale)
            << "\" height=\"" << fmt(2.0 * r.dy * scale) << "\" fill=\"" << fills[j]
            << "\" stroke=\"#333333\" stroke-width=\"0.5\"><title>"
            << xml_escape(cart.regions[j].name) << "</title></rect>\n";
    }
    if (options.label) {
        for (std::size_t j = 0; j < cart.size(); ++j) {
            const Rect& r = rects[j];
            const std::string& name = cart.regions[j].name;
            // truncate so the printed size never exceeds the fitted one
            const double size =
                std::floor(label_font_size(name, 2.0 * r.dx * scale, 2.0 * r.dy * scale) * 1000.0) /
                1000.0;
            out << "  <text x=\"" << fmt((r.x - box.xmin) * scale) << "\" y=\""
                << fmt((box.ymax - r.y) * scale) << "\" font-size=\"" << fmt(size)
                << "\" font-family=\"monospace\" text-anchor=\"middle\" "
                   "dominant-baseline=\"central\">"
                << xml_escape(name) << "</text>\n";
        }
    }
    out << "</svg>\n";
}

void render_svg(const Cartogram& cart, const std::filesystem::path& path, const SvgOptions& options,
                const std::map<std::string, std::vector<double>>& extra) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write '" + path.string() + "'");
    }
    render_svg(out, cart, options, extra);
    out.flush();
    if (!out) {
        throw IoError("error while writing '" + path.string() + "'");
    }
}

}  // namespace rectcarto
