#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hmon/matrix.hpp"

namespace hmon {

/// Smith normal form over the DVR: A = U * D * V with U, V invertible over
/// S and D = diag(pi^svals[0], pi^svals[1], ...) padded with zeros.
struct SnfResult {
  Mat U;
  Mat D;
  Mat V;
  Mat U_inv;
  Mat V_inv;
  /// Weakly increasing; kInfinity marks zero pivots and sorts last.
  std::vector<int> svals;

  [[nodiscard]] std::size_t rank() const;
};

/// Valuation-minimal pivoting; ties go to the smallest (row, col) in
/// lexicographic order, so the output is a deterministic function of A.
SnfResult snf(const Mat& A);
/// Just the exponents of snf(A), without the transforms.
std::vector<int> smith_exponents(const Mat& A);

/// Determinant over Frac(S) by fraction-field elimination.
Scalar determinant(const Mat& A);

/// Inverse over Frac(S). Throws SingularMatrix when A is singular or not square.
Mat inverse_frac(const Mat& A);

/// Solves pi^left[j] * X[j][i] * pi^right[i] == B[j][i] (mod pi^t) cell by
/// cell. kInfinity exponents stand for zero diagonal entries. A cell is
/// solvable iff valuation(B[j][i]) >= min(left[j] + right[i], t).
std::optional<Mat> solve_sandwich_congruence(const std::vector<int>& left, const std::vector<int>& right, const Mat& B,
                                             const RingCtx& ctx);

/// Finds X over S with A * X * B == C (mod omega), reducing to the sandwich
/// problem through the Smith forms of A and B.
std::optional<Mat> solve_two_sided_congruence(const Mat& A, const Mat& B, const Mat& C, const RingCtx& ctx);

struct LinearSolution {
  Mat particular;  // A * particular == B
  Mat kernel;      // columns span {x : A x == 0} over S
};

/// Exact solution of A X = B over S, or nullopt when none exists.
std::optional<LinearSolution> solve_exact(const Mat& A, const Mat& B);

/// Deterministic product of bounded elementary operations; its determinant
/// is always a unit of S.
Mat random_unimodular(std::size_t n, std::uint64_t seed, const RingCtx& ctx);

}  // namespace hmon
