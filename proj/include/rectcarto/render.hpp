#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "rectcarto/cartogram.hpp"

namespace rectcarto {

struct SvgOptions {
    std::string color_by;                 // empty: uniform fill
    std::vector<std::string> colormap;    // empty: default_colormap(10)
    bool label = true;
    double width_px = 800.0;
};

/// `k` colours from dark red (low) to near white (high).
[[nodiscard]] std::vector<std::string> default_colormap(std::size_t k);

/// 1-based colour index round((k - 1) * (v - lo) / (hi - lo)) + 1; 1 when hi == lo.
[[nodiscard]] std::size_t colormap_index(double v, double lo, double hi, std::size_t k);

/// Estimated rendered width of `text` at `font_size` (0.6 em per character).
[[nodiscard]] double label_width(const std::string& text, double font_size);

/// Largest font size whose label fits the rectangle width 2*dx (and 80% of its height).
[[nodiscard]] double label_font_size(const std::string& text, double width, double height);

/// One <rect> per region (y axis pointing up in map units), plus a centred
/// label per region when enabled. `color_by` names a cartogram column
/// (x, y, dx, dy, z, dfs.num, topology.error, relpos.error, relposnh.error)
/// or a key of `extra`; anything else throws ValidationError.
void render_svg(std::ostream& out, const Cartogram& cart, const SvgOptions& options,
                const std::map<std::string, std::vector<double>>& extra = {});
void render_svg(const Cartogram& cart, const std::filesystem::path& path, const SvgOptions& options,
                const std::map<std::string, std::vector<double>>& extra = {});

}  // namespace rectcarto
