#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bgph/hochster.hpp"
#include "bgph/persistence.hpp"

namespace bgph::io {

// Strict CSV: comma-separated doubles, one row per line, every row the same
// width. Blank lines are skipped.
std::vector<std::vector<double>> parse_csv(const std::string& text);

pseudo_metric_space points_from_csv(const std::string& text);
pseudo_metric_space matrix_from_csv(const std::string& text, std::string* warning = nullptr);

std::uint64_t fnv1a(const std::string& bytes);
std::string fnv1a_hex(const std::string& bytes);

// On-disk barcode format. Deaths are null when infinite, never a sentinel
// float; grades serialize as [degree] or as the displayed bidegree
// [-i, 2j]. Serialization bytes are deterministic for a fixed input, config
// and version.
struct barcode_document {
    std::string version = "1";
    barcode bars;
    unsigned field_p = 2;
    std::string input_hash;  // fnv1a of the raw input bytes, hex
    std::size_t vertex_cap = 20;
    double tolerance = kDefaultTolerance;
};

std::string serialize(const barcode_document& doc);
barcode_document deserialize(const std::string& text);

// One panel per grade holding horizontal bars over t; panels are laid out on
// the bigrade table (column per 2j, row per -i). Bar geometry is affine in
// (birth, death): x(t) = kSvgMarginLeft + t / t_max * kSvgPlotWidth.
inline constexpr double kSvgMarginLeft = 48.0;
inline constexpr double kSvgMarginRight = 24.0;
inline constexpr double kSvgPlotWidth = 320.0;
inline constexpr double kSvgHeaderHeight = 22.0;
inline constexpr double kSvgBarPitch = 12.0;

std::string render_svg(const barcode& b);

// rows -i from 0 down, columns 2j from 0 up to 2m
std::string betti_csv(const std::map<bigrade, int>& table, std::size_t m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace bgph::io
