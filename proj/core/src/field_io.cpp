#include "gsqg/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <stdexcept>

namespace gsqg {
namespace {

static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);

std::uint64_t to_little(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else {
    return __builtin_bswap64(v);
  }
}

void put_u64(std::ostream& os, std::uint64_t v) {
  v = to_little(v);
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void put_f64(std::ostream& os, double d) { put_u64(os, std::bit_cast<std::uint64_t>(d)); }

std::uint64_t get_u64(std::istream& is) {
  std::uint64_t v = 0;
  if (!is.read(reinterpret_cast<char*>(&v), sizeof v)) throw std::runtime_error("field container truncated");
  return to_little(v);
}

double get_f64(std::istream& is) { return std::bit_cast<double>(get_u64(is)); }

}  // namespace

void write_field_binary(const std::filesystem::path& path, std::span<const ScalarField> components) {
  if (components.empty()) throw std::invalid_argument("write_field_binary: no components");
  const Grid2D& grid = components.front().grid();
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string());
  put_u64(os, grid.n_side());
  put_f64(os, grid.box_length());
  put_u64(os, components.size());
  for (const auto& c : components) {
    if (!(c.grid() == grid)) throw std::invalid_argument("write_field_binary: components on different grids");
    for (double v : c.values()) put_f64(os, v);
  }
}

void write_field_binary(const std::filesystem::path& path, const ScalarField& f) {
  write_field_binary(path, std::span<const ScalarField>(&f, 1));
}

void write_field_binary(const std::filesystem::path& path, const VectorField& v) {
  write_field_binary(path, std::span<const ScalarField>(v.components));
}

std::vector<ScalarField> read_field_binary(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path.string());
  const auto n = get_u64(is);
  const double length = get_f64(is);
  const auto count = get_u64(is);
  Grid2D grid(static_cast<std::size_t>(n), length);
  std::vector<ScalarField> out;
  for (std::uint64_t c = 0; c < count; ++c) {
    std::vector<double> values(grid.size());
    for (auto& v : values) v = get_f64(is);
    out.push_back(ScalarField::from_values(grid, std::move(values)));
  }
  return out;
}

void write_field_csv(const std::filesystem::path& path, std::span<const ScalarField> components) {
  if (components.empty()) throw std::invalid_argument("write_field_csv: no components");
  const Grid2D& grid = components.front().grid();
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path.string());
  os << "x,y";
  for (std::size_t c = 0; c < components.size(); ++c) os << ",c" << c;
  os << '\n' << std::setprecision(17);
  for (std::size_t i2 = 0; i2 < grid.n_side(); ++i2) {
    for (std::size_t i1 = 0; i1 < grid.n_side(); ++i1) {
      os << grid.coordinate(i1) << ',' << grid.coordinate(i2);
      for (const auto& c : components) os << ',' << c.value(i1, i2);
      os << '\n';
    }
  }
}

}  // namespace gsqg
