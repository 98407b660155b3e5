#include "hmon/matrix.hpp"

#include <algorithm>

#include "hmon/error.hpp"

namespace hmon {

namespace {
std::string dims(const Mat& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }
}  // namespace

Mat::Mat(const BaseRing& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(ring)) {}

Mat Mat::identity(const BaseRing& ring, std::size_t n) { return scalar(ring, n, Scalar::one(ring)); }

Mat Mat::scalar(const BaseRing& ring, std::size_t n, const Scalar& s) {
  Mat m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Mat Mat::diagonal(const BaseRing& ring, const std::vector<Scalar>& diag) {
  Mat m(ring, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Mat Mat::from_ints(const BaseRing& ring, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Scalar>> r;
  for (const auto& row : rows) {
    std::vector<Scalar> v;
    for (long x : row) v.push_back(Scalar::from_int(ring, x));
    r.push_back(std::move(v));
  }
  return from_rows(ring, r);
}

Mat Mat::from_rows(const BaseRing& ring, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Mat m(ring, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw Error(ErrorCode::ParseError, "ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) {
      if (!(rows[i][j].ring() == ring)) throw Error(ErrorCode::ContextMismatch, "matrix entry from another ring");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Mat Mat::from_blocks(const std::vector<std::vector<Mat>>& grid) {
  if (grid.empty() || grid.front().empty()) throw Error(ErrorCode::ContextMismatch, "empty block grid");
  const BaseRing ring = grid[0][0].ring();
  std::vector<std::size_t> heights, widths;
  for (const auto& row : grid) heights.push_back(row.front().rows());
  for (const auto& b : grid.front()) widths.push_back(b.cols());
  std::size_t total_r = 0, total_c = 0;
  for (auto h : heights) total_r += h;
  for (auto w : widths) total_c += w;
  Mat m(ring, total_r, total_c);
  std::size_t r0 = 0;
  for (std::size_t bi = 0; bi < grid.size(); ++bi) {
    if (grid[bi].size() != widths.size()) throw Error(ErrorCode::ContextMismatch, "block grid rows differ in length");
    std::size_t c0 = 0;
    for (std::size_t bj = 0; bj < widths.size(); ++bj) {
      const Mat& b = grid[bi][bj];
      if (b.rows() != heights[bi] || b.cols() != widths[bj])
        throw Error(ErrorCode::ContextMismatch, "block (" + std::to_string(bi) + "," + std::to_string(bj) + ") is " + dims(b));
      b.check_same_ring(m);
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
      c0 += widths[bj];
    }
    r0 += heights[bi];
  }
  return m;
}

Mat Mat::direct_sum(const Mat& a, const Mat& b) {
  a.check_same_ring(b);
  Mat m(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

void Mat::check_same_ring(const Mat& o) const {
  if (!(ring_ == o.ring_))
    throw Error(ErrorCode::ContextMismatch, "matrices over " + ring_.describe() + " and " + o.ring_.describe());
}

Mat Mat::operator+(const Mat& o) const {
  check_same_ring(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::ContextMismatch, "adding " + dims(*this) + " and " + dims(o));
  Mat r(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

Mat Mat::operator-() const {
  Mat r(*this);
  for (auto& x : r.data_) x = -x;
  return r;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator*(const Mat& o) const {
  check_same_ring(o);
  if (cols_ != o.rows_) throw Error(ErrorCode::ContextMismatch, "multiplying " + dims(*this) + " by " + dims(o));
  Mat r(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
    }
  return r;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat r(*this);
  for (auto& x : r.data_) x = x * s;
  return r;
}

Mat Mat::div_exact(const Scalar& s) const {
  Mat r(*this);
  for (auto& x : r.data_) x = x.div_exact(s);
  return r;
}

Mat Mat::transpose() const {
  Mat r(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::ContextMismatch, "block outside " + dims(*this));
  Mat r(ring_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
  return r;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool Mat::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_integral(); });
}

int Mat::valuation() const {
  int v = kInfinity;
  for (const auto& x : data_) v = std::min(v, x.valuation());
  return v;
}

std::string Mat::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

}  // namespace hmon
