// Copyright 2026 The nsm Authors
// SPDX-License-Identifier: Apache-2.0

#include "nsm/snapshot.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "nsm/error.hpp"

namespace nsm {

namespace {

constexpr std::array<char, 4> kMagic{'N', 'S', 'M', 'W'};

template <typename T>
void put_le(std::ostream& os, T value) {
  std::array<char, sizeof(T)> bytes;
  std::memcpy(bytes.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  os.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(std::istream& is) {
  std::array<char, sizeof(T)> bytes;
  if (!is.read(bytes.data(), bytes.size())) throw FormatError("truncated NSMW snapshot");
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  T value;
  std::memcpy(&value, bytes.data(), sizeof(T));
  return value;
}

}  // namespace

void write_snapshot(std::ostream& os, const SpectralField& field, double time) {
  const Grid& g = field.grid();
  os.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(os, kSnapshotVersion);
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(g.dim()));
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(g.n()));
  put_le<double>(os, g.box_length());
  put_le<double>(os, time);
  for (const cplx& z : field.data()) {
    put_le<double>(os, z.real());
    put_le<double>(os, z.imag());
  }
  if (!os) throw std::runtime_error("failed writing NSMW snapshot");
}

void write_snapshot(const std::filesystem::path& path, const SpectralField& field, double time) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_snapshot(os, field, time);
}

Snapshot read_snapshot(std::istream& is, GridPtr grid) {
  std::array<char, 4> magic{};
  if (!is.read(magic.data(), magic.size()) || magic != kMagic) {
    throw FormatError("not an NSMW snapshot");
  }
  const auto version = get_le<std::uint32_t>(is);
  if (version != kSnapshotVersion) {
    throw FormatError("unsupported NSMW version " + std::to_string(version));
  }
  const auto d = get_le<std::uint32_t>(is);
  const auto n = get_le<std::uint32_t>(is);
  const auto L = get_le<double>(is);
  const auto time = get_le<double>(is);
  if (grid) {
    if (static_cast<std::uint32_t>(grid->dim()) != d || static_cast<std::uint32_t>(grid->n()) != n ||
        grid->box_length() != L) {
      throw FormatError("snapshot grid does not match the requested grid");
    }
  } else {
    try {
      grid = Grid::create(static_cast<int>(d), static_cast<int>(n), L);
    } catch (const InvalidArgument& e) {
      throw FormatError(std::string("invalid grid in snapshot header: ") + e.what());
    }
  }
  SpectralField field(grid);
  for (cplx& z : field.data()) {
    const double re = get_le<double>(is);
    const double im = get_le<double>(is);
    z = {re, im};
  }
  return {std::move(field), time};
}

Snapshot read_snapshot(const std::filesystem::path& path, GridPtr grid) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FormatError("cannot open " + path.string());
  return read_snapshot(is, std::move(grid));
}

}  // namespace nsm
