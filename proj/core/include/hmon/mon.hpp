#pragma once

#include <memory>
#include <vector>

#include "hmon/linalg.hpp"

namespace hmon {

/// An object (P -f-> Q) of Mon(omega, P): a square matrix over S with
/// det f != 0 and every elementary divisor exponent in [0, t].
/// Copies share the validated state, including the lazily built Sigma-partner.
class MonObject {
 public:
  /// Throws NonSquare, NotMono or CokernelNotOmegaTorsion.
  static MonObject validate(const Mat& f, const RingCtx& ctx);
  /// The rank-zero object.
  static MonObject zero(const RingCtx& ctx);

  [[nodiscard]] const RingCtx& ctx() const;
  [[nodiscard]] std::size_t n() const;
  [[nodiscard]] const Mat& matrix() const;
  [[nodiscard]] const SnfResult& snf() const;
  /// Elementary divisor exponents, weakly increasing.
  [[nodiscard]] const std::vector<int>& svals() const;
  /// f_Sigma = omega * f^{-1}; computed once.
  [[nodiscard]] const MonObject& sigma() const;

  bool operator==(const MonObject& o) const { return ctx() == o.ctx() && matrix() == o.matrix(); }

 private:
  struct State;
  explicit MonObject(std::shared_ptr<State> st) : st_(std::move(st)) {}
  std::shared_ptr<State> st_;
};

/// A morphism (psi1, psi0) with psi0 * f == f' * psi1.
class MonMorphism {
 public:
  /// Throws SquareNotCommuting (and ContextMismatch on shape errors).
  static MonMorphism make(const MonObject& src, const MonObject& tgt, Mat psi1, Mat psi0);
  /// No commutativity check; pair with is_valid(). Used for negative controls.
  static MonMorphism make_unchecked(const MonObject& src, const MonObject& tgt, Mat psi1, Mat psi0);
  static MonMorphism identity(const MonObject& obj);
  static MonMorphism zero(const MonObject& src, const MonObject& tgt);

  [[nodiscard]] const MonObject& src() const { return src_; }
  [[nodiscard]] const MonObject& tgt() const { return tgt_; }
  [[nodiscard]] const Mat& psi1() const { return psi1_; }
  [[nodiscard]] const Mat& psi0() const { return psi0_; }
  [[nodiscard]] bool is_valid() const;

  /// this o first (first runs first). Throws NotComposable.
  [[nodiscard]] MonMorphism after(const MonMorphism& first) const;
  [[nodiscard]] MonMorphism operator+(const MonMorphism& o) const;
  [[nodiscard]] MonMorphism operator-(const MonMorphism& o) const;
  [[nodiscard]] MonMorphism operator-() const;

 private:
  MonMorphism(MonObject src, MonObject tgt, Mat psi1, Mat psi0)
      : src_(std::move(src)), tgt_(std::move(tgt)), psi1_(std::move(psi1)), psi0_(std::move(psi0)) {}

  MonObject src_;
  MonObject tgt_;
  Mat psi1_;
  Mat psi0_;
};

/// The R-module (+)_e R/pi^e; e == t is a free summand.
struct RModuleObj {
  RingCtx ctx;
  std::vector<int> exps;  // sorted, each in (0, t]

  static RModuleObj make(const RingCtx& ctx, std::vector<int> exps);
  bool operator==(const RModuleObj&) const = default;
};

inline MonMorphism is_morphism(const Mat& psi1, const Mat& psi0, const MonObject& src, const MonObject& tgt) {
  return MonMorphism::make(src, tgt, psi1, psi0);
}

const MonObject& sigma(const MonObject& f);
/// (psi0, psi1): f_Sigma -> f'_Sigma.
MonMorphism induced_sigma_morphism(const MonMorphism& psi);

MonObject direct_sum(const MonObject& a, const MonObject& b);
MonMorphism direct_sum(const MonMorphism& a, const MonMorphism& b);

/// Multiset of elementary divisor exponents: f is isomorphic to the direct
/// sum of the objects (S -pi^s-> S).
std::vector<int> decompose(const MonObject& f);
bool is_indecomposable(const MonObject& f);
RModuleObj cokernel(const MonObject& f);
bool is_projective(const MonObject& f);

struct ProjectiveEnvelope {
  MonObject l;     // [[-f_Sigma, I], [0, f]] : Q+P -> P+Q
  MonMorphism pi;  // projections onto f
};
ProjectiveEnvelope projective_env(const MonObject& f);

}  // namespace hmon
