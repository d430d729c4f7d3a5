#include "rectcarto/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

#include "rectcarto/error.hpp"
#include "rectcarto/format.hpp"
#include "rectcarto/map_model.hpp"

namespace rectcarto {

namespace {

constexpr std::array<const char*, 5> kNumericColumns{"x", "y", "dx", "dy", "z"};

std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (ch != '\r') {
            field += ch;
        }
    }
    if (quoted) {
        throw ValidationError("line " + std::to_string(line_no) + ": unterminated quote");
    }
    fields.push_back(std::move(field));
    return fields;
}

std::string trim(std::string s) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    out += '"';
    return out;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write '" + path.string() + "'");
    }
    return out;
}

void finish_write(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) {
        throw IoError("error while writing '" + path.string() + "'");
    }
}

}  // namespace

RegionTable read_region_table(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_no;
        if (!trim(line).empty()) {
            header = split_csv_line(line, line_no);
            break;
        }
    }
    if (header.empty()) {
        throw ValidationError("missing header row");
    }
    for (auto& h : header) {
        h = trim(h);
    }
    auto column = [&](const std::string& name) -> std::optional<std::size_t> {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - header.begin());
    };
    std::array<std::size_t, 5> num_idx{};
    for (std::size_t k = 0; k < kNumericColumns.size(); ++k) {
        const auto idx = column(kNumericColumns[k]);
        if (!idx) {
            throw ValidationError(std::string("missing required column '") + kNumericColumns[k] +
                                  "'");
        }
        num_idx[k] = *idx;
    }
    const auto name_idx = column("name");

    std::vector<std::size_t> extra_idx;
    std::vector<std::string> extra_order;
    for (std::size_t c = 0; c < header.size(); ++c) {
        const bool required = std::find(num_idx.begin(), num_idx.end(), c) != num_idx.end() ||
                              (name_idx && *name_idx == c);
        if (!required && !header[c].empty()) {
            extra_idx.push_back(c);
            extra_order.push_back(header[c]);
        }
    }

    std::vector<InputRegion> regions;
    std::unordered_set<std::string> seen_names;
    std::vector<std::vector<double>> extra_cols(extra_idx.size());
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split_csv_line(line, line_no);
        if (fields.size() != header.size()) {
            throw ValidationError("line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(header.size()) + " fields, found " +
                                  std::to_string(fields.size()));
        }
        std::array<double, 5> v{};
        for (std::size_t k = 0; k < kNumericColumns.size(); ++k) {
            if (!parse_double(fields[num_idx[k]], v[k])) {
                throw ValidationError("line " + std::to_string(line_no) + ": column '" +
                                      kNumericColumns[k] + "' is not a finite number: '" +
                                      fields[num_idx[k]] + "'");
            }
        }
        if (!(v[2] > 0.0) || !(v[3] > 0.0)) {
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": dx and dy must be positive");
        }
        if (!(v[4] > 0.0)) {
            throw ValidationError("line " + std::to_string(line_no) + ": z must be positive");
        }
        std::string name = name_idx ? trim(fields[*name_idx]) : std::string();
        if (name.empty()) {
            name = "region_" + std::to_string(regions.size() + 1);
        }
        if (!seen_names.insert(name).second) {
            throw ValidationError("line " + std::to_string(line_no) + ": duplicate name '" + name +
                                  "'");
        }
        for (std::size_t e = 0; e < extra_idx.size(); ++e) {
            double value = 0.0;
            if (!parse_double(fields[extra_idx[e]], value)) {
                value = std::numeric_limits<double>::quiet_NaN();
            }
            extra_cols[e].push_back(value);
        }
        regions.push_back({v[0], v[1], v[2], v[3], v[4], std::move(name)});
    }
    if (regions.empty()) {
        throw ValidationError("table has no data rows");
    }
    RegionTable table{InputMap(std::move(regions)), std::move(extra_order), {}};
    for (std::size_t e = 0; e < extra_idx.size(); ++e) {
        table.extra[table.extra_order[e]] = std::move(extra_cols[e]);
    }
    return table;
}

RegionTable read_region_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read '" + path.string() + "'");
    }
    try {
        return read_region_table(in);
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

InputMap read_map(const std::filesystem::path& path) { return read_region_table(path).map; }

Cartogram cartogram_from_table(const RegionTable& table) {
    const InputMap& map = table.map;
    auto column = [&](const char* name) -> const std::vector<double>* {
        const auto it = table.extra.find(name);
        return it == table.extra.end() ? nullptr : &it->second;
    };
    const auto* dfs = column("dfs.num");
    const auto* topo = column("topology.error");
    const auto* relpos = column("relpos.error");
    const auto* relposnh = column("relposnh.error");

    Cartogram cart;
    cart.regions.resize(map.size());
    for (std::size_t j = 0; j < map.size(); ++j) {
        PlacedRegion& r = cart.regions[j];
        r.rect = map[j].rect();
        r.name = map[j].name;
        r.z = map[j].z;
        r.dfs_num = dfs ? static_cast<std::size_t>((*dfs)[j]) : j + 1;
        r.topology_error = topo ? static_cast<int>((*topo)[j]) : 0;
        r.relpos_error = relpos ? (*relpos)[j] : 0.0;
        r.relposnh_error = relposnh ? (*relposnh)[j] : 0.0;
        r.overlap_fallback = r.topology_error == kSentinelTopologyError;
    }
    cart.feasible = cart.sentinel_count() == 0;
    return cart;
}

Cartogram read_cartogram(const std::filesystem::path& path) {
    return cartogram_from_table(read_region_table(path));
}

void write_map_csv(std::ostream& out, const InputMap& map) {
    out << "x,y,dx,dy,z,name\n";
    for (const auto& r : map) {
        out << format_double(r.x) << ',' << format_double(r.y) << ',' << format_double(r.dx) << ','
            << format_double(r.dy) << ',' << format_double(r.z) << ',' << csv_field(r.name) << '\n';
    }
}

void write_map(const InputMap& map, const std::filesystem::path& path) {
    auto out = open_for_write(path);
    write_map_csv(out, map);
    finish_write(out, path);
}

void write_cartogram_csv(std::ostream& out, const Cartogram& cart) {
    out << "x,y,dx,dy,z,name,dfs.num,topology.error,relpos.error,relposnh.error\n";
    for (const auto& r : cart.regions) {
        out << format_double(r.rect.x) << ',' << format_double(r.rect.y) << ','
            << format_double(r.rect.dx) << ',' << format_double(r.rect.dy) << ','
            << format_double(r.z) << ',' << csv_field(r.name) << ',' << r.dfs_num << ','
            << r.topology_error << ',' << format_double(r.relpos_error) << ','
            << format_double(r.relposnh_error) << '\n';
    }
}

void write_cartogram_geojson(std::ostream& out, const Cartogram& cart, const InputMap& input) {
    using nlohmann::json;
    const auto desired = desired_areas(input);
    json features = json::array();
    for (std::size_t j = 0; j < cart.size(); ++j) {
        const PlacedRegion& r = cart.regions[j];
        const Rect& b = r.rect;
        json ring = json::array({
            json::array({b.xmin(), b.ymin()}),
            json::array({b.xmax(), b.ymin()}),
            json::array({b.xmax(), b.ymax()}),
            json::array({b.xmin(), b.ymax()}),
            json::array({b.xmin(), b.ymin()}),
        });
        features.push_back({
            {"type", "Feature"},
            {"geometry", {{"type", "Polygon"}, {"coordinates", json::array({ring})}}},
            {"properties",
             {{"name", r.name},
              {"z", r.z},
              {"desired_area", j < desired.size() ? desired[j] : 0.0},
              {"dfs.num", r.dfs_num},
              {"topology.error", r.topology_error},
              {"relpos.error", r.relpos_error},
              {"relposnh.error", r.relposnh_error}}},
        });
    }
    const json doc = {{"type", "FeatureCollection"}, {"features", std::move(features)}};
    out << doc.dump() << '\n';
}

void write_cartogram(const Cartogram& cart, const InputMap& input, const std::filesystem::path& path,
                     OutputFormat format) {
    auto out = open_for_write(path);
    if (format == OutputFormat::csv) {
        write_cartogram_csv(out, cart);
    } else {
        write_cartogram_geojson(out, cart, input);
    }
    finish_write(out, path);
}

OutputFormat format_for(const std::filesystem::path& path) {
    const auto ext = path.extension().string();
    return ext == ".geojson" || ext == ".json" ? OutputFormat::geojson : OutputFormat::csv;
}

Permutation read_order(const std::filesystem::path& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read '" + path.string() + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream tokens(text);
    std::vector<std::size_t> order;
    std::string tok;
    while (tokens >> tok) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != tok.size() || v < 1) {
            throw ValidationError(path.string() + ": bad index '" + tok + "'");
        }
        order.push_back(static_cast<std::size_t>(v - 1));
    }
    if (order.size() != n) {
        throw ValidationError(path.string() + ": expected " + std::to_string(n) + " indices, got " +
                              std::to_string(order.size()));
    }
    return Permutation(std::move(order));
}

}  // namespace rectcarto
