// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "nsm/spectral_field.hpp"

namespace nsm {

/// NSMW binary field snapshot, all values little-endian:
///
///   char[4]  "NSMW"
///   uint32   format version (currently 1)
///   uint32   d
///   uint32   n
///   float64  L
///   float64  time
///   3 x n^d  complex128 (re, im), component-major, row-major modes, x1 slowest
inline constexpr std::uint32_t kSnapshotVersion = 1;

struct Snapshot {
  SpectralField field;
  double time;
};

void write_snapshot(std::ostream& os, const SpectralField& field, double time);
void write_snapshot(const std::filesystem::path& path, const SpectralField& field, double time);

/// Throws FormatError on bad magic, unknown version, or truncated data. When
/// `grid` is given the header must match it; otherwise a new grid is created.
Snapshot read_snapshot(std::istream& is, GridPtr grid = nullptr);
Snapshot read_snapshot(const std::filesystem::path& path, GridPtr grid = nullptr);

}  // namespace nsm
