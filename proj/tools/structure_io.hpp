#pragma once

#include <stdexcept>
#include <string>

#include "pdm1d/structure.hpp"

namespace pdm::cli {

/// Parsed structure description file: geometry plus the ordering parameter
/// and unit system it was written for.
struct StructureFile {
    Structure structure;
    double beta;
    double hbar = 1.0;
};

/// Malformed structure file; the message carries the offending field path
/// (e.g. "layers[2].width") or the JSON syntax location.
struct structure_parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses the JSON structure description:
/// {
///   "hbar": 1.0,                 // optional, > 0, default 1
///   "beta": -0.5,
///   "left_lead":  {"mass": m, "potential": v},
///   "layers":     [{"width": w, "mass": m, "potential": v}, ...],  // optional
///   "right_lead": {"mass": m, "potential": v}
/// }
StructureFile parse_structure_json(const std::string& text);

/// Reads and parses a structure description file.
StructureFile load_structure_file(const std::string& path);

}  // namespace pdm::cli
