#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mobius {

/// Dense square matrix of extended reals, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n, double fill = 0.0);

  /// Throws ErrorKind::Shape when the rows are ragged or the array is not square.
  static DistanceMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }

  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }

  std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * n_, n_};
  }

  std::vector<std::vector<double>> to_rows() const;

  /// Submatrix on the listed indices, in the listed order.
  DistanceMatrix induced(std::span<const std::size_t> keep) const;

  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

}  // namespace mobius
