#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "maxfock/constants.hpp"
#include "maxfock/field.hpp"
#include "maxfock/representations.hpp"

namespace maxfock {

/**
 * Field snapshot file.
 *
 *   format_version: 1
 *   L: <box length>
 *   N: <points per axis>
 *   field_kind: real3 | complex3 | bispinor
 *   constants: hbar=<v> eps0=<v> c=<v>
 *   label: <free text, optional>
 *   <blank line>
 *   little-endian float64 payload, x fastest, component innermost, complex as (re, im).
 *
 * A bispinor stores six components per point: upper 0..2 then lower 0..2.
 */
struct Snapshot {
    GridSpec grid;
    PhysicalConstants constants;
    std::string label;
    std::variant<VectorFieldR, VectorFieldC, Bispinor> field;
};

void write_snapshot(std::ostream& os, const Snapshot& snap);
Snapshot read_snapshot(std::istream& is);

void write_snapshot(const std::filesystem::path& path, const Snapshot& snap);
Snapshot read_snapshot(const std::filesystem::path& path);

} // namespace maxfock
