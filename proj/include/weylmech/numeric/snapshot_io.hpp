#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <variant>

#include "weylmech/numeric/fields.hpp"

namespace weylmech::numeric {

// Binary snapshot layout, all integers and floats little-endian:
//
//   offset  size  field
//        0     8  magic "WEYLSNAP"
//        8     4  u32 format version (1)
//       12     4  u32 kind: 0 = PhaseField, 1 = OperatorMatrix
//       16     8  u64 n
//       24     8  f64 x_min
//       32     8  f64 x_max
//       40     8  f64 hbar
//       48     4  u32 role tag (generic 0, observable 1, density 2, quasidensity 3)
//       52  16n²  row-major (re, im) f64 pairs
inline constexpr std::uint32_t kSnapshotVersion = 1;

using Snapshot = std::variant<PhaseField, OperatorMatrix>;

void write_snapshot(std::ostream& out, const PhaseField& f);
void write_snapshot(std::ostream& out, const OperatorMatrix& m);
void write_snapshot(const std::filesystem::path& path, const Snapshot& s);

/// Throws std::runtime_error on malformed input.
Snapshot read_snapshot(std::istream& in);
Snapshot read_snapshot(const std::filesystem::path& path);

/// CSV of real parts: header "q,p,value" (fields) or "x,y,kernel" (matrices), one row
/// per node, 17 significant digits.
void write_csv(std::ostream& out, const PhaseField& f);
void write_csv(std::ostream& out, const OperatorMatrix& m);

}  // namespace weylmech::numeric
