#pragma once

#include <filesystem>
#include <vector>

#include "gsqg/field.hpp"

namespace gsqg {

/// Flat binary container (.fld):
///   header  : n_side (uint64), box_length (float64), components (uint64), little-endian
///   payload : components x n_side^2 float64 samples, each component row-major
void write_field_binary(const std::filesystem::path& path, std::span<const ScalarField> components);
void write_field_binary(const std::filesystem::path& path, const ScalarField& f);
void write_field_binary(const std::filesystem::path& path, const VectorField& v);

/// Reads every component stored in a container.
std::vector<ScalarField> read_field_binary(const std::filesystem::path& path);

/// CSV with header "x,y,c0[,c1...]".
void write_field_csv(const std::filesystem::path& path, std::span<const ScalarField> components);

}  // namespace gsqg
