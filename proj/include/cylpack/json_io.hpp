#pragma once
#include <string>

#include "cylpack/packing.hpp"
#include "cylpack/slice.hpp"

namespace cylpack {

/// Canonical packing JSON:
/// { "version": 1, "capped": bool, "t": real, "R": real,
///   "cylinders": [ { "p0": [x,y,z], "p1": [x,y,z] }, ... ] }
/// Non-congruent lengths are rejected unless "mixed": true is present.
std::string packing_to_json(const Packing& p);
Packing packing_from_json(const std::string& text);

void write_packing_file(const Packing& p, const std::string& path);
Packing read_packing_file(const std::string& path);

struct SliceReport {
    double area{0.0};
    bool qualified{false};
    bool end_near{false};
    bool truncation_valid{false};
    double area_dstar{0.0};
    double area_dstarstar{0.0};
};

std::string slice_to_json(const DirichletSlice& s, const SliceReport& rep);

/// 512×512 viewport, 100 px per unit, centered at x. Draws S_x(1),
/// S_x(2/√3), the sampled boundary and event markers. With `reproducible`
/// set, no generator metadata is emitted.
std::string slice_to_svg(const DirichletSlice& s, bool reproducible = false);

/// RFC-4180 field quoting.
std::string csv_escape(const std::string& field);

} // namespace cylpack
