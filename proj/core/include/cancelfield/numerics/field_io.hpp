#pragma once

#include "cancelfield/numerics/field.hpp"

#include <filesystem>
#include <iosfwd>

namespace cancelfield::num {

/// "x,z,value" header, then one line per node, x-major. Values use %.17g.
void write_csv(std::ostream& os, const ScalarField2D& s);
void write_csv(const std::filesystem::path& p, const ScalarField2D& s);

/// Reads back a CSV written by write_csv; the grid is inferred from the
/// distinct x and z columns.
ScalarField2D read_csv(const std::filesystem::path& p);

/// Little-endian: uint64 nx, uint64 nz, float64 Z, then nx*nz float64
/// values in storage order.
void write_binary(std::ostream& os, const ScalarField2D& s);
void write_binary(const std::filesystem::path& p, const ScalarField2D& s);
ScalarField2D read_binary(std::istream& is);
ScalarField2D read_binary(const std::filesystem::path& p);

} // namespace cancelfield::num
