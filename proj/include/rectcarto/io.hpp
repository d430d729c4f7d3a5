#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rectcarto/cartogram.hpp"
#include "rectcarto/map_model.hpp"

namespace rectcarto {

/// A parsed region table: the required x,y,dx,dy,z,name columns as an
/// InputMap, plus any further numeric columns keyed by header name.
/// Output diagnostic columns (dfs.num, topology.error, relpos.error,
/// relposnh.error) land in `extra` like any other numeric column.
struct RegionTable {
    InputMap map;
    std::vector<std::string> extra_order;
    std::map<std::string, std::vector<double>> extra;
};

enum class OutputFormat { csv, geojson };

/// Reads a CSV region table. "name" may be omitted (names are synthesised).
/// Throws ValidationError with a line-addressed message on missing columns,
/// non-numeric cells, non-positive dx/dy/z or duplicate names; IoError if the
/// file cannot be read.
[[nodiscard]] RegionTable read_region_table(std::istream& in);
[[nodiscard]] RegionTable read_region_table(const std::filesystem::path& path);
[[nodiscard]] InputMap read_map(const std::filesystem::path& path);

/// Rebuilds a cartogram from a CSV written by write_cartogram. Missing
/// diagnostic columns default to 0; topology.error == 100 marks a sentinel.
[[nodiscard]] Cartogram cartogram_from_table(const RegionTable& table);
[[nodiscard]] Cartogram read_cartogram(const std::filesystem::path& path);

void write_map_csv(std::ostream& out, const InputMap& map);
void write_map(const InputMap& map, const std::filesystem::path& path);

void write_cartogram_csv(std::ostream& out, const Cartogram& cart);
/// FeatureCollection with one closed counter-clockwise 5-point ring per
/// region. Coordinates are in map units.
void write_cartogram_geojson(std::ostream& out, const Cartogram& cart, const InputMap& input);
void write_cartogram(const Cartogram& cart, const InputMap& input,
                     const std::filesystem::path& path, OutputFormat format);

/// csv unless the extension is .geojson or .json.
[[nodiscard]] OutputFormat format_for(const std::filesystem::path& path);

/// 1-based indices, one per line or separated by commas/whitespace.
[[nodiscard]] Permutation read_order(const std::filesystem::path& path, std::size_t n);

}  // namespace rectcarto
