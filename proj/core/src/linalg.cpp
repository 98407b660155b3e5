#include "hmon/linalg.hpp"

#include <algorithm>
#include <random>

#include "hmon/error.hpp"

namespace hmon {

std::size_t SnfResult::rank() const {
  return static_cast<std::size_t>(std::count_if(svals.begin(), svals.end(), [](int s) { return s != kInfinity; }));
}

namespace {

// Keeps A == U * W * V while W is reduced; U_inv and V_inv track inverses.
class SnfWorker {
 public:
  // track = false skips U, V and their inverses (exponents only)
  SnfWorker(const Mat& A, bool track)
      : W(A),
        U(Mat::identity(A.ring(), track ? A.rows() : 0)),
        U_inv(U),
        V(Mat::identity(A.ring(), track ? A.cols() : 0)),
        V_inv(V) {}

  // row i += c * row r
  void add_row(std::size_t i, std::size_t r, const Scalar& c) {
    for (std::size_t j = 0; j < W.cols(); ++j) W(i, j) += c * W(r, j);
    for (std::size_t k = 0; k < U.rows(); ++k) U(k, r) -= c * U(k, i);
    for (std::size_t j = 0; j < U_inv.cols(); ++j) U_inv(i, j) += c * U_inv(r, j);
  }

  // col i += c * col r
  void add_col(std::size_t i, std::size_t r, const Scalar& c) {
    for (std::size_t k = 0; k < W.rows(); ++k) W(k, i) += c * W(k, r);
    for (std::size_t j = 0; j < V.cols(); ++j) V(r, j) -= c * V(i, j);
    for (std::size_t k = 0; k < V_inv.rows(); ++k) V_inv(k, i) += c * V_inv(k, r);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < W.cols(); ++j) std::swap(W(a, j), W(b, j));
    for (std::size_t k = 0; k < U.rows(); ++k) std::swap(U(k, a), U(k, b));
    for (std::size_t j = 0; j < U_inv.cols(); ++j) std::swap(U_inv(a, j), U_inv(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < W.rows(); ++k) std::swap(W(k, a), W(k, b));
    for (std::size_t j = 0; j < V.cols(); ++j) std::swap(V(a, j), V(b, j));
    for (std::size_t k = 0; k < V_inv.rows(); ++k) std::swap(V_inv(k, a), V_inv(k, b));
  }

  // row i *= u for a unit u
  void scale_row(std::size_t i, const Scalar& u) {
    const Scalar u_inv = Scalar::one(u.ring()).frac_div(u);
    for (std::size_t j = 0; j < W.cols(); ++j) W(i, j) *= u;
    for (std::size_t k = 0; k < U.rows(); ++k) U(k, i) *= u_inv;
    for (std::size_t j = 0; j < U_inv.cols(); ++j) U_inv(i, j) *= u;
  }

  Mat W, U, U_inv, V, V_inv;
};

std::vector<int> reduce(SnfWorker& w) {
  const std::size_t m = w.W.rows(), n = w.W.cols(), steps = std::min(m, n);
  std::vector<int> svals;
  for (std::size_t k = 0; k < steps; ++k) {
    int best = kInfinity;
    std::size_t bi = k, bj = k;
    for (std::size_t i = k; i < m; ++i)
      for (std::size_t j = k; j < n; ++j) {
        const int v = w.W(i, j).valuation();
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best == kInfinity) {
      svals.resize(steps, kInfinity);
      break;
    }
    w.swap_rows(k, bi);
    w.swap_cols(k, bj);
    const Scalar pivot = w.W(k, k);
    for (std::size_t i = k + 1; i < m; ++i)
      if (!w.W(i, k).is_zero()) w.add_row(i, k, -w.W(i, k).div_exact(pivot));
    for (std::size_t j = k + 1; j < n; ++j)
      if (!w.W(k, j).is_zero()) w.add_col(j, k, -w.W(k, j).div_exact(pivot));
    const Scalar unit = pivot.unit_part();
    if (!unit.is_one()) w.scale_row(k, Scalar::one(w.W.ring()).frac_div(unit));
    svals.push_back(best);
  }
  return svals;
}

}  // namespace

SnfResult snf(const Mat& A) {
  if (!A.is_integral()) throw Error(ErrorCode::DivisionLeavesRing, "Smith form needs a matrix over S");
  SnfWorker w(A, true);
  std::vector<int> svals = reduce(w);
  return SnfResult{std::move(w.U), std::move(w.W), std::move(w.V), std::move(w.U_inv), std::move(w.V_inv),
                   std::move(svals)};
}

std::vector<int> smith_exponents(const Mat& A) {
  if (!A.is_integral()) throw Error(ErrorCode::DivisionLeavesRing, "Smith form needs a matrix over S");
  SnfWorker w(A, false);
  return reduce(w);
}

namespace {

// Row-reduces [A | B] over Frac(S); returns the determinant of A and leaves
// A^{-1} B in `rhs` when A is invertible.
Scalar eliminate(Mat a, Mat& rhs) {
  const std::size_t n = a.rows();
  Scalar det = Scalar::one(a.ring());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return Scalar::zero(a.ring());
    if (p != k) {
      det = -det;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(k, j), rhs(p, j));
    }
    const Scalar piv = a(k, k);
    det *= piv;
    for (std::size_t j = 0; j < n; ++j) a(k, j) = a(k, j).frac_div(piv);
    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(k, j) = rhs(k, j).frac_div(piv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      const Scalar c = a(i, k);
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= c * a(k, j);
      for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) -= c * rhs(k, j);
    }
  }
  return det;
}

}  // namespace

Scalar determinant(const Mat& A) {
  if (!A.is_square()) throw Error(ErrorCode::NonSquare, "determinant of a non-square matrix");
  Mat rhs(A.ring(), A.rows(), 0);
  return eliminate(A, rhs);
}

Mat inverse_frac(const Mat& A) {
  if (!A.is_square()) throw Error(ErrorCode::SingularMatrix, "non-square matrix has no inverse");
  Mat rhs = Mat::identity(A.ring(), A.rows());
  if (eliminate(A, rhs).is_zero()) throw Error(ErrorCode::SingularMatrix, "det = 0");
  return rhs;
}

std::optional<Mat> solve_sandwich_congruence(const std::vector<int>& left, const std::vector<int>& right, const Mat& B,
                                             const RingCtx& ctx) {
  if (B.rows() != left.size() || B.cols() != right.size())
    throw Error(ErrorCode::ContextMismatch, "sandwich right-hand side has the wrong shape");
  Mat X(B.ring(), B.rows(), B.cols());
  const int t = ctx.t();
  for (std::size_t j = 0; j < left.size(); ++j)
    for (std::size_t i = 0; i < right.size(); ++i) {
      const int e = (left[j] == kInfinity || right[i] == kInfinity) ? kInfinity : left[j] + right[i];
      const int vb = B(j, i).valuation();
      if (vb < std::min(e, t)) return std::nullopt;
      if (e < t && !B(j, i).is_zero()) X(j, i) = B(j, i).div_exact(ctx.pi_power(e));
    }
  return X;
}

std::optional<Mat> solve_two_sided_congruence(const Mat& A, const Mat& B, const Mat& C, const RingCtx& ctx) {
  if (A.rows() != C.rows() || B.cols() != C.cols())
    throw Error(ErrorCode::ContextMismatch, "two-sided congruence shapes do not match");
  const SnfResult sa = snf(A);
  const SnfResult sb = snf(B);
  const Mat rhs = sa.U_inv * C * sb.V_inv;
  std::vector<int> left(A.rows(), kInfinity), right(B.cols(), kInfinity);
  std::copy(sa.svals.begin(), sa.svals.end(), left.begin());
  std::copy(sb.svals.begin(), sb.svals.end(), right.begin());
  auto cells = solve_sandwich_congruence(left, right, rhs, ctx);
  if (!cells) return std::nullopt;
  Mat Y(A.ring(), A.cols(), B.rows());
  for (std::size_t j = 0; j < sa.svals.size(); ++j)
    for (std::size_t i = 0; i < sb.svals.size(); ++i) Y(j, i) = (*cells)(j, i);
  return sa.V_inv * Y * sb.U_inv;
}

std::optional<LinearSolution> solve_exact(const Mat& A, const Mat& B) {
  if (A.rows() != B.rows()) throw Error(ErrorCode::ContextMismatch, "solve_exact: row counts differ");
  const SnfResult s = snf(A);
  const Mat rhs = s.U_inv * B;
  const std::size_t r = s.rank();
  Mat Y(A.ring(), A.cols(), B.cols());
  for (std::size_t j = 0; j < A.rows(); ++j)
    for (std::size_t i = 0; i < B.cols(); ++i) {
      if (j >= r) {
        if (!rhs(j, i).is_zero()) return std::nullopt;
        continue;
      }
      const Scalar q = rhs(j, i).frac_div(s.D(j, j));
      if (!q.is_integral()) return std::nullopt;
      Y(j, i) = q;
    }
  return LinearSolution{s.V_inv * Y, s.V_inv.block(0, r, A.cols(), A.cols() - r)};
}

Mat random_unimodular(std::size_t n, std::uint64_t seed, const RingCtx& ctx) {
  const BaseRing& base = ctx.base();
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + n);
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto small = [&]() {
    Scalar c = ctx.from_int(pick(-3, 3));
    if (base.kind == BaseKind::PolyLocal) c += ctx.from_int(pick(-2, 2)) * ctx.uniformizer();
    return c;
  };
  auto unit = [&]() {
    const Scalar one_plus_pi = ctx.one() + ctx.uniformizer();
    switch (pick(0, 3)) {
      case 0: return ctx.from_int(-1);
      case 1: return one_plus_pi;
      case 2: return -one_plus_pi;
      default: return ctx.one().frac_div(one_plus_pi);
    }
  };
  Mat M = Mat::identity(base, n);
  const std::size_t ops = 3 * n + 1;
  for (std::size_t k = 0; k < ops; ++k) {
    const int kind = n > 1 ? pick(0, 9) : 9;
    if (kind < 6) {
      const auto i = static_cast<std::size_t>(pick(0, static_cast<int>(n) - 1));
      auto r = static_cast<std::size_t>(pick(0, static_cast<int>(n) - 2));
      if (r >= i) ++r;
      const Scalar c = small();
      for (std::size_t j = 0; j < n; ++j) M(i, j) += c * M(r, j);
    } else if (kind < 8) {
      const auto a = static_cast<std::size_t>(pick(0, static_cast<int>(n) - 1));
      const auto b = static_cast<std::size_t>(pick(0, static_cast<int>(n) - 1));
      for (std::size_t j = 0; j < n; ++j) std::swap(M(a, j), M(b, j));
    } else {
      const auto i = static_cast<std::size_t>(pick(0, static_cast<int>(n) - 1));
      const Scalar u = unit();
      for (std::size_t j = 0; j < n; ++j) M(i, j) *= u;
    }
  }
  return M;
}

}  // namespace hmon
