#include "aicbnb/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "aicbnb/errors.hpp"

namespace aicbnb {

namespace {

constexpr double kConstantStdTol = 1e-12;

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    // trim surrounding whitespace and a trailing CR from Windows line ends
    std::size_t begin = cell.find_first_not_of(" \t\r");
    std::size_t end = cell.find_last_not_of(" \t\r");
    cells.push_back(begin == std::string::npos ? std::string{} : cell.substr(begin, end - begin + 1));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_cell(const std::string& cell, std::size_t row, std::size_t col,
                  const std::string& name) {
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw DataError("non-numeric cell '" + cell + "' at row " + std::to_string(row) +
                    ", column " + std::to_string(col + 1) + " (" + name + ")");
  }
  return value;
}

double column_mean(const std::vector<double>& col) {
  double s = 0.0;
  for (double v : col) s += v;
  return s / static_cast<double>(col.size());
}

// Sample standard deviation, divisor n-1.
double column_std(const std::vector<double>& col, double mean) {
  double s = 0.0;
  for (double v : col) s += (v - mean) * (v - mean);
  return std::sqrt(s / static_cast<double>(col.size() - 1));
}

bool is_constant(double mean, double sd) { return sd <= kConstantStdTol * std::abs(mean) + 1e-300; }

}  // namespace

Dataset::Dataset(std::vector<std::vector<double>> columns, std::vector<double> response,
                 std::vector<std::string> names, std::optional<Standardization> standardization)
    : columns_(std::move(columns)),
      response_(std::move(response)),
      names_(std::move(names)),
      standardization_(std::move(standardization)) {
  p_ = static_cast<int>(columns_.size());
  n_ = static_cast<int>(response_.size());
  if (n_ < 2) throw DataError("dataset needs at least 2 rows, got " + std::to_string(n_));
  if (p_ < 1) throw DataError("dataset needs at least 1 predictor column");
  for (int j = 0; j < p_; ++j) {
    if (static_cast<int>(columns_[static_cast<std::size_t>(j)].size()) != n_)
      throw DataError("column " + std::to_string(j + 1) + " has inconsistent length");
    for (double v : columns_[static_cast<std::size_t>(j)])
      if (!std::isfinite(v)) throw DataError("non-finite value in column " + std::to_string(j + 1));
  }
  for (double v : response_)
    if (!std::isfinite(v)) throw DataError("non-finite value in response");
  if (static_cast<int>(names_.size()) != p_ + 1)
    throw DataError("expected p+1 column labels");
}

Dataset load_csv(const std::string& path, const std::string& response) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw DataError("empty file: " + path);
  std::vector<std::string> header = split_csv_line(line);
  if (header.empty()) throw DataError("empty header row in " + path);
  const std::size_t ncols = header.size();

  // Resolve the response column: exact name first, then integer position.
  int response_col = -1;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (header[c] == response) {
      response_col = static_cast<int>(c);
      break;
    }
  }
  if (response_col < 0) {
    int idx = 0;
    auto [ptr, ec] = std::from_chars(response.data(), response.data() + response.size(), idx);
    if (ec == std::errc{} && ptr == response.data() + response.size()) {
      if (idx < 0) idx += static_cast<int>(ncols);
      if (idx >= 0 && idx < static_cast<int>(ncols)) response_col = idx;
    }
  }
  if (response_col < 0)
    throw DataError("response column '" + response + "' not found in " + path);

  std::vector<std::vector<double>> cells(ncols);
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> parts = split_csv_line(line);
    if (parts.size() != ncols)
      throw DataError("row " + std::to_string(row) + " has " + std::to_string(parts.size()) +
                      " cells, expected " + std::to_string(ncols));
    for (std::size_t c = 0; c < ncols; ++c)
      cells[c].push_back(parse_cell(parts[c], row, c, header[c]));
  }
  if (cells[0].size() < 2)
    throw DataError("fewer than 2 data rows in " + path);

  std::vector<std::vector<double>> predictors;
  std::vector<std::string> names;
  predictors.reserve(ncols - 1);
  for (std::size_t c = 0; c < ncols; ++c) {
    if (static_cast<int>(c) == response_col) continue;
    predictors.push_back(std::move(cells[c]));
    names.push_back(header[c]);
  }
  names.push_back(header[static_cast<std::size_t>(response_col)]);
  return Dataset(std::move(predictors), std::move(cells[static_cast<std::size_t>(response_col)]),
                 std::move(names));
}

Dataset standardize(const Dataset& d) {
  if (d.standardized()) throw UsageError("dataset is already standardized");

  Standardization meta;
  meta.predictors.resize(static_cast<std::size_t>(d.p()));
  std::vector<std::vector<double>> columns(static_cast<std::size_t>(d.p()));

  for (int j = 1; j <= d.p(); ++j) {
    const std::vector<double>& col = d.column(j);
    double mean = column_mean(col);
    double sd = column_std(col, mean);
    ColumnScaling& sc = meta.predictors[static_cast<std::size_t>(j - 1)];
    if (is_constant(mean, sd)) {
      sc = {0.0, 1.0, true};
      columns[static_cast<std::size_t>(j - 1)] = col;  // left as-is, only flagged
      continue;
    }
    sc = {mean, sd, false};
    std::vector<double> out(col.size());
    for (std::size_t i = 0; i < col.size(); ++i) out[i] = (col[i] - mean) / sd;
    columns[static_cast<std::size_t>(j - 1)] = std::move(out);
  }

  double ymean = column_mean(d.response());
  double ysd = column_std(d.response(), ymean);
  if (is_constant(ymean, ysd))
    throw DataError("response column is constant; variable selection is degenerate");
  meta.response = {ymean, ysd, false};
  std::vector<double> y(d.response().size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = (d.response()[i] - ymean) / ysd;

  return Dataset(std::move(columns), std::move(y), d.names(), std::move(meta));
}

Dataset destandardize(const Dataset& d) {
  if (!d.standardized()) throw UsageError("dataset carries no standardization metadata");
  const Standardization& meta = d.standardization();
  std::vector<std::vector<double>> columns(static_cast<std::size_t>(d.p()));
  for (int j = 1; j <= d.p(); ++j) {
    const ColumnScaling& sc = meta.predictors[static_cast<std::size_t>(j - 1)];
    const std::vector<double>& col = d.column(j);
    std::vector<double> out(col.size());
    for (std::size_t i = 0; i < col.size(); ++i)
      out[i] = sc.constant ? col[i] : col[i] * sc.scale + sc.mean;
    columns[static_cast<std::size_t>(j - 1)] = std::move(out);
  }
  std::vector<double> y(d.response().size());
  for (std::size_t i = 0; i < y.size(); ++i)
    y[i] = d.response()[i] * meta.response.scale + meta.response.mean;
  return Dataset(std::move(columns), std::move(y), d.names());
}

std::vector<int> constant_predictors(const Dataset& d) {
  std::vector<int> out;
  if (d.standardized()) {
    for (int j = 1; j <= d.p(); ++j)
      if (d.standardization().predictors[static_cast<std::size_t>(j - 1)].constant)
        out.push_back(j);
    return out;
  }
  for (int j = 1; j <= d.p(); ++j) {
    double mean = column_mean(d.column(j));
    double sd = column_std(d.column(j), mean);
    if (is_constant(mean, sd)) out.push_back(j);
  }
  return out;
}

}  // namespace aicbnb
