#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hmon/ring.hpp"

namespace hmon {

/// Dense row-major matrix over Frac(S). Matrices over S are the ones with
/// `is_integral()`; every constructor that reads user data enforces that.
class Mat {
 public:
  Mat(const BaseRing& ring, std::size_t rows, std::size_t cols);

  static Mat identity(const BaseRing& ring, std::size_t n);
  static Mat scalar(const BaseRing& ring, std::size_t n, const Scalar& s);
  static Mat diagonal(const BaseRing& ring, const std::vector<Scalar>& diag);
  static Mat from_ints(const BaseRing& ring, std::initializer_list<std::initializer_list<long>> rows);
  static Mat from_rows(const BaseRing& ring, const std::vector<std::vector<Scalar>>& rows);
  /// Assembles a block matrix. Row heights come from the first column,
  /// column widths from the first row; the grid must be consistent.
  static Mat from_blocks(const std::vector<std::vector<Mat>>& grid);
  static Mat direct_sum(const Mat& a, const Mat& b);

  [[nodiscard]] const BaseRing& ring() const { return ring_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] Mat operator+(const Mat& o) const;
  [[nodiscard]] Mat operator-(const Mat& o) const;
  [[nodiscard]] Mat operator*(const Mat& o) const;
  [[nodiscard]] Mat operator-() const;
  [[nodiscard]] Mat scaled(const Scalar& s) const;
  [[nodiscard]] Mat div_exact(const Scalar& s) const;
  [[nodiscard]] Mat transpose() const;
  [[nodiscard]] Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_integral() const;
  /// Minimum entry valuation (kInfinity for the zero matrix).
  [[nodiscard]] int valuation() const;

  [[nodiscard]] std::string to_string() const;

  bool operator==(const Mat& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  void check_same_ring(const Mat& o) const;

  BaseRing ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

}  // namespace hmon
