#include "dfsbary/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "dfsbary/errors.hpp"

namespace dfsbary {

std::string format_double(double v) {
  std::array<char, 40> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

namespace {

bool parse_field(std::string_view field, double& out) {
  // from_chars rejects leading whitespace and '+'; trim both
  std::size_t b = field.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return false;
  std::size_t e = field.find_last_not_of(" \t\r");
  field = field.substr(b, e - b + 1);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  const auto res = std::from_chars(field.data(), field.data() + field.size(), out);
  return res.ec == std::errc{} && res.ptr == field.data() + field.size();
}

bool parse_row(const std::string& line, std::vector<double>& out) {
  out.clear();
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    const std::string_view field(line.data() + start,
                                 (comma == std::string::npos ? line.size() : comma) - start);
    double v = 0.0;
    if (!parse_field(field, v)) return false;
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return true;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw size_error("cannot open file: " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw size_error("cannot open file for writing: " + path);
  return out;
}

}  // namespace

Matrix read_matrix_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  Matrix mat;
  std::string line;
  std::vector<double> row;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    if (!parse_row(line, row)) {
      throw size_error(path + ":" + std::to_string(line_no) + ": non-numeric CSV row");
    }
    if (mat.rows == 0) {
      mat.cols = row.size();
    } else if (row.size() != mat.cols) {
      throw size_error(path + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(mat.cols) + " columns, found " +
                       std::to_string(row.size()));
    }
    mat.data.insert(mat.data.end(), row.begin(), row.end());
    ++mat.rows;
  }
  return mat;
}

void write_matrix_csv(const std::string& path, std::span<const double> data, std::size_t rows,
                      std::size_t cols) {
  if (data.size() != rows * cols) {
    throw size_error("write_matrix_csv: data size does not match rows x cols");
  }
  std::ofstream out = open_out(path);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c) out << ',';
      out << format_double(data[r * cols + c]);
    }
    out << '\n';
  }
}

std::vector<std::array<double, 2>> read_points_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::vector<std::array<double, 2>> pts;
  std::string line;
  std::vector<double> row;
  std::size_t line_no = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    if (!parse_row(line, row)) {
      if (first_content) {  // header line
        first_content = false;
        continue;
      }
      throw size_error(path + ":" + std::to_string(line_no) + ": non-numeric CSV row");
    }
    first_content = false;
    if (row.size() != 2) {
      throw size_error(path + ":" + std::to_string(line_no) + ": expected 2 columns, found " +
                       std::to_string(row.size()));
    }
    pts.push_back({row[0], row[1]});
  }
  return pts;
}

void write_values_csv(const std::string& path, std::span<const double> values) {
  std::ofstream out = open_out(path);
  out << "value\n";
  for (double v : values) out << format_double(v) << '\n';
}

std::vector<double> read_values_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    double v = 0.0;
    if (!parse_field(line, v)) {
      if (first_content) {
        first_content = false;
        continue;
      }
      throw size_error(path + ":" + std::to_string(line_no) + ": non-numeric value row");
    }
    first_content = false;
    values.push_back(v);
  }
  return values;
}

void write_grid_direction_csv(const std::string& path, const std::string& value_header,
                              std::span<const double> values) {
  std::ofstream out = open_out(path);
  out << "index," << value_header << '\n';
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << i << ',' << format_double(values[i]) << '\n';
  }
}

}  // namespace dfsbary
