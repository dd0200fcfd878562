#include "bgph/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bgph::io {

using nlohmann::json;

std::vector<std::vector<double>> parse_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = line.find_first_not_of(" \t") == std::string::npos;
        if (blank) continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            std::size_t pos = 0;
            double v;
            try {
                v = std::stod(cell, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("line " + std::to_string(lineno) + ": not a number: '" +
                                            cell + "'");
            }
            if (cell.find_first_not_of(" \t", pos) != std::string::npos)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": trailing characters in '" + cell + "'");
            row.push_back(v);
        }
        if (row.empty())
            throw std::invalid_argument("line " + std::to_string(lineno) + ": empty row");
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::invalid_argument("line " + std::to_string(lineno) + ": ragged row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("no data rows");
    return rows;
}

pseudo_metric_space points_from_csv(const std::string& text) {
    return pseudo_metric_space::from_points(parse_csv(text));
}

pseudo_metric_space matrix_from_csv(const std::string& text, std::string* warning) {
    auto rows = parse_csv(text);
    const std::size_t n = rows.size();
    if (rows.front().size() != n)
        throw std::invalid_argument("distance matrix must be square, got " + std::to_string(n) +
                                    " rows of " + std::to_string(rows.front().size()));
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return pseudo_metric_space::from_matrix(std::move(flat), n, warning);
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fnv1a_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a(bytes);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string serialize(const barcode_document& doc) {
    json j;
    j["version"] = doc.version;
    j["kind"] = doc.bars.kind == grading_kind::degree ? "degree" : "bigraded";
    j["field"] = doc.field_p;
    j["grid"] = doc.bars.grid.values;

    barcode sorted = doc.bars;
    sorted.sort_canonical();
    json bars = json::array();
    for (const auto& b : sorted.bars) {
        json e;
        if (doc.bars.kind == grading_kind::degree)
            e["grade"] = json::array({b.grade.i});
        else
            e["grade"] = json::array({-b.grade.i, 2 * b.grade.j});
        e["birth"] = b.birth;
        e["death"] = b.infinite() ? json(nullptr) : json(b.death);
        bars.push_back(std::move(e));
    }
    j["bars"] = std::move(bars);
    j["provenance"] = {
        {"input_fnv1a", doc.input_hash},
        {"config", {{"cap", doc.vertex_cap}, {"tol", doc.tolerance}}},
    };
    return j.dump(2) + "\n";
}

barcode_document deserialize(const std::string& text) {
    json j = json::parse(text);
    barcode_document doc;
    doc.version = j.at("version").get<std::string>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind != "degree" && kind != "bigraded")
        throw std::invalid_argument("unknown grading kind: " + kind);
    doc.bars.kind = kind == "degree" ? grading_kind::degree : grading_kind::bigraded;
    doc.field_p = j.at("field").get<unsigned>();
    doc.bars.grid.values = j.at("grid").get<std::vector<double>>();
    for (const auto& e : j.at("bars")) {
        bar b;
        const auto& g = e.at("grade");
        if (doc.bars.kind == grading_kind::degree) {
            if (g.size() != 1) throw std::invalid_argument("degree grade must have one entry");
            b.grade = {g[0].get<int>(), 0};
        } else {
            if (g.size() != 2) throw std::invalid_argument("bidegree must have two entries");
            int mi = g[0].get<int>(), jj = g[1].get<int>();
            if (mi > 0 || jj < 0 || jj % 2 != 0) throw std::invalid_argument("malformed bidegree");
            b.grade = {-mi, jj / 2};
        }
        b.birth = e.at("birth").get<double>();
        b.death = e.at("death").is_null() ? kInfiniteDeath : e.at("death").get<double>();
        doc.bars.bars.push_back(b);
    }
    const auto& prov = j.at("provenance");
    doc.input_hash = prov.at("input_fnv1a").get<std::string>();
    doc.vertex_cap = prov.at("config").at("cap").get<std::size_t>();
    doc.tolerance = prov.at("config").at("tol").get<double>();
    return doc;
}

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

std::string render_svg(const barcode& b) {
    barcode sorted = b;
    sorted.sort_canonical();

    double tmax = sorted.grid.values.empty() ? 0.0 : sorted.grid.values.back();
    for (const auto& br : sorted.bars) {
        tmax = std::max(tmax, br.birth);
        if (!br.infinite()) tmax = std::max(tmax, br.death);
    }
    if (tmax <= 0.0) tmax = 1.0;

    // group bars per grade, keep table coordinates (row -i, column 2j)
    std::map<bigrade, std::vector<bar>> panels;
    for (const auto& br : sorted.bars) panels[br.grade].push_back(br);
    std::vector<int> cols, rows;
    for (const auto& [g, bars] : panels) {
        cols.push_back(g.j);
        rows.push_back(g.i);
    }
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    std::size_t max_bars = 1;
    for (const auto& [g, bars] : panels) max_bars = std::max(max_bars, bars.size());
    const double panel_w = kSvgMarginLeft + kSvgPlotWidth + kSvgMarginRight;
    const double panel_h = kSvgHeaderHeight + kSvgBarPitch * static_cast<double>(max_bars) + 10.0;
    const double width = panel_w * static_cast<double>(cols.size());
    const double height = panel_h * static_cast<double>(rows.size());

    auto x_of = [&](double t) { return kSvgMarginLeft + t / tmax * kSvgPlotWidth; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
           num(height) + "\">\n";
    for (const auto& [g, bars] : panels) {
        std::size_t ci = static_cast<std::size_t>(
            std::lower_bound(cols.begin(), cols.end(), g.j) - cols.begin());
        std::size_t ri = static_cast<std::size_t>(
            std::lower_bound(rows.begin(), rows.end(), g.i) - rows.begin());
        double ox = panel_w * static_cast<double>(ci);
        double oy = panel_h * static_cast<double>(ri);
        std::string label = b.kind == grading_kind::degree
                                ? "degree " + std::to_string(g.i)
                                : "(" + std::to_string(-g.i) + ", " + std::to_string(2 * g.j) + ")";
        svg += "  <text x=\"" + num(ox + 4.0) + "\" y=\"" + num(oy + 14.0) +
               "\" font-size=\"11\">" + label + "</text>\n";
        svg += "  <line x1=\"" + num(ox + x_of(0)) + "\" y1=\"" + num(oy + kSvgHeaderHeight) +
               "\" x2=\"" + num(ox + x_of(tmax)) + "\" y2=\"" + num(oy + kSvgHeaderHeight) +
               "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
        double y = oy + kSvgHeaderHeight + kSvgBarPitch / 2.0;
        for (const auto& br : bars) {
            double x1 = ox + x_of(br.birth);
            double x2 = ox + (br.infinite() ? x_of(tmax) + kSvgMarginRight / 2.0 : x_of(br.death));
            svg += "  <line x1=\"" + num(x1) + "\" y1=\"" + num(y) + "\" x2=\"" + num(x2) +
                   "\" y2=\"" + num(y) + "\" stroke=\"#1f4e9c\" stroke-width=\"3\"" +
                   (br.infinite() ? " stroke-dasharray=\"6,2\"" : "") + "/>\n";
            y += kSvgBarPitch;
        }
    }
    svg += "</svg>\n";
    return svg;
}

std::string betti_csv(const std::map<bigrade, int>& table, std::size_t m) {
    int max_i = 0;
    for (const auto& [g, d] : table) max_i = std::max(max_i, g.i);
    std::string out = "i\\2j";
    for (std::size_t j = 0; j <= m; ++j) out += "," + std::to_string(2 * j);
    out += "\n";
    for (int i = 0; i <= max_i; ++i) {
        out += std::to_string(-i);
        for (std::size_t j = 0; j <= m; ++j) {
            auto it = table.find({i, static_cast<int>(j)});
            out += "," + std::to_string(it == table.end() ? 0 : it->second);
        }
        out += "\n";
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace bgph::io
