#pragma once

#include <optional>
#include <string>
#include <vector>

namespace aicbnb {

struct ColumnScaling {
  double mean = 0.0;
  double scale = 1.0;
  bool constant = false;
};

/// Per-column centering/scaling applied by standardize(). The last entry in
/// reports refers to the response. Divisor convention: sample standard
/// deviation with divisor n-1.
struct Standardization {
  std::vector<ColumnScaling> predictors;
  ColumnScaling response;
};

/// An in-memory regression dataset: p predictor columns of length n plus a
/// response column. Immutable after construction.
class Dataset {
 public:
  Dataset(std::vector<std::vector<double>> columns, std::vector<double> response,
          std::vector<std::string> names,
          std::optional<Standardization> standardization = std::nullopt);

  int n() const { return n_; }
  int p() const { return p_; }

  const std::vector<double>& column(int j) const { return columns_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<double>& response() const { return response_; }

  /// p predictor names followed by the response name (p+1 labels).
  const std::vector<std::string>& names() const { return names_; }
  const std::string& predictor_name(int j) const { return names_[static_cast<std::size_t>(j - 1)]; }
  const std::string& response_name() const { return names_.back(); }

  bool standardized() const { return standardization_.has_value(); }
  const Standardization& standardization() const { return *standardization_; }

 private:
  int n_ = 0;
  int p_ = 0;
  std::vector<std::vector<double>> columns_;
  std::vector<double> response_;
  std::vector<std::string> names_;
  std::optional<Standardization> standardization_;
};

/// Reads a comma-separated file with one header row. The response column is
/// selected by exact header name, or by integer position when `response`
/// parses as an integer (0-based; negative counts from the end).
Dataset load_csv(const std::string& path, const std::string& response);

/// Centers every predictor column and the response to mean zero and scales to
/// unit sample standard deviation (divisor n-1). Constant columns are left
/// untouched and flagged. Throws DataError when the response is constant.
Dataset standardize(const Dataset& d);

/// Inverse of standardize(), reconstructing the original values from the
/// scaling metadata.
Dataset destandardize(const Dataset& d);

/// 1-based indices of predictor columns with (numerically) zero variance.
std::vector<int> constant_predictors(const Dataset& d);

}  // namespace aicbnb
