#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

namespace dfsbary {

/// Shortest round-trip decimal representation (never more than 17
/// significant digits for a double).
std::string format_double(double v);

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // row-major

  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Headerless numeric CSV, all rows the same width.
Matrix read_matrix_csv(const std::string& path);
void write_matrix_csv(const std::string& path, std::span<const double> data, std::size_t rows,
                      std::size_t cols);

/// Two-column point list (phi,theta) or (phi,rho); a leading non-numeric
/// header line is skipped.
std::vector<std::array<double, 2>> read_points_csv(const std::string& path);

/// One value per row under a "value" header.
void write_values_csv(const std::string& path, std::span<const double> values);
std::vector<double> read_values_csv(const std::string& path);

/// Grid export: one file per direction, headers "index,phi" and
/// "index,coord", radians.
void write_grid_direction_csv(const std::string& path, const std::string& value_header,
                              std::span<const double> values);

}  // namespace dfsbary
