#include "hmon/mon.hpp"

#include <algorithm>
#include <mutex>

#include "hmon/error.hpp"

namespace hmon {

struct MonObject::State {
  State(RingCtx c, Mat m, std::vector<int> s) : ctx(std::move(c)), f(std::move(m)), svals(std::move(s)) {}

  RingCtx ctx;
  Mat f;
  std::vector<int> svals;
  std::once_flag snf_once;
  std::unique_ptr<SnfResult> snf;
  std::once_flag sigma_once;
  std::unique_ptr<MonObject> sigma;
};

MonObject MonObject::validate(const Mat& f, const RingCtx& ctx) {
  if (!(f.ring() == ctx.base())) throw Error(ErrorCode::ContextMismatch, "matrix over " + f.ring().describe() + ", context " + ctx.describe());
  if (!f.is_square())
    throw Error(ErrorCode::NonSquare, std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                                          ": an injective map with omega-torsion cokernel between free modules must be square");
  std::vector<int> s = smith_exponents(f);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == kInfinity) throw Error(ErrorCode::NotMono, "det f = 0");
    if (s[i] > ctx.t())
      throw Error(ErrorCode::CokernelNotOmegaTorsion,
                  "elementary divisor pi^" + std::to_string(s[i]) + " exceeds omega = pi^" + std::to_string(ctx.t()));
  }
  return MonObject(std::make_shared<State>(ctx, f, std::move(s)));
}

MonObject MonObject::zero(const RingCtx& ctx) { return validate(Mat(ctx.base(), 0, 0), ctx); }

const RingCtx& MonObject::ctx() const { return st_->ctx; }
std::size_t MonObject::n() const { return st_->f.rows(); }
const Mat& MonObject::matrix() const { return st_->f; }
const SnfResult& MonObject::snf() const {
  std::call_once(st_->snf_once, [this] { st_->snf = std::make_unique<SnfResult>(hmon::snf(st_->f)); });
  return *st_->snf;
}
const std::vector<int>& MonObject::svals() const { return st_->svals; }

const MonObject& MonObject::sigma() const {
  std::call_once(st_->sigma_once, [this] {
    const SnfResult& s = snf();
    const RingCtx& ctx = st_->ctx;
    std::vector<Scalar> diag;
    for (int e : s.svals) diag.push_back(ctx.pi_power(ctx.t() - e));
    // f = U D V, so omega f^{-1} = V^{-1} (omega D^{-1}) U^{-1}
    Mat fs = s.V_inv * Mat::diagonal(ctx.base(), diag) * s.U_inv;
    st_->sigma = std::make_unique<MonObject>(validate(fs, ctx));
  });
  return *st_->sigma;
}

namespace {

void check_shapes(const MonObject& src, const MonObject& tgt, const Mat& psi1, const Mat& psi0) {
  if (!(src.ctx() == tgt.ctx())) throw Error(ErrorCode::ContextMismatch, "source and target over different contexts");
  if (psi1.rows() != tgt.n() || psi1.cols() != src.n() || psi0.rows() != tgt.n() || psi0.cols() != src.n())
    throw Error(ErrorCode::ContextMismatch, "morphism components must be " + std::to_string(tgt.n()) + "x" +
                                                std::to_string(src.n()));
}

}  // namespace

MonMorphism MonMorphism::make(const MonObject& src, const MonObject& tgt, Mat psi1, Mat psi0) {
  MonMorphism m = make_unchecked(src, tgt, std::move(psi1), std::move(psi0));
  if (!m.psi1_.is_integral() || !m.psi0_.is_integral())
    throw Error(ErrorCode::DivisionLeavesRing, "morphism entries must lie in S");
  if (!m.is_valid()) throw Error(ErrorCode::SquareNotCommuting, "psi0 * f != f' * psi1");
  return m;
}

MonMorphism MonMorphism::make_unchecked(const MonObject& src, const MonObject& tgt, Mat psi1, Mat psi0) {
  check_shapes(src, tgt, psi1, psi0);
  return MonMorphism(src, tgt, std::move(psi1), std::move(psi0));
}

MonMorphism MonMorphism::identity(const MonObject& obj) {
  const Mat id = Mat::identity(obj.ctx().base(), obj.n());
  return MonMorphism(obj, obj, id, id);
}

MonMorphism MonMorphism::zero(const MonObject& src, const MonObject& tgt) {
  const Mat z(src.ctx().base(), tgt.n(), src.n());
  check_shapes(src, tgt, z, z);
  return MonMorphism(src, tgt, z, z);
}

bool MonMorphism::is_valid() const {
  return psi0_ * src_.matrix() == tgt_.matrix() * psi1_;
}

MonMorphism MonMorphism::after(const MonMorphism& first) const {
  if (!(first.tgt_ == src_)) throw Error(ErrorCode::NotComposable, "target of the first map is not the source of the second");
  return MonMorphism(first.src_, tgt_, psi1_ * first.psi1_, psi0_ * first.psi0_);
}

MonMorphism MonMorphism::operator+(const MonMorphism& o) const {
  if (!(src_ == o.src_) || !(tgt_ == o.tgt_)) throw Error(ErrorCode::ContextMismatch, "adding morphisms between different objects");
  return MonMorphism(src_, tgt_, psi1_ + o.psi1_, psi0_ + o.psi0_);
}

MonMorphism MonMorphism::operator-() const { return MonMorphism(src_, tgt_, -psi1_, -psi0_); }

MonMorphism MonMorphism::operator-(const MonMorphism& o) const { return *this + (-o); }

RModuleObj RModuleObj::make(const RingCtx& ctx, std::vector<int> exps) {
  for (int e : exps)
    if (e <= 0 || e > ctx.t())
      throw Error(ErrorCode::ParseError, "module exponent " + std::to_string(e) + " outside (0, " + std::to_string(ctx.t()) + "]");
  std::sort(exps.begin(), exps.end());
  return RModuleObj{ctx, std::move(exps)};
}

const MonObject& sigma(const MonObject& f) { return f.sigma(); }

MonMorphism induced_sigma_morphism(const MonMorphism& psi) {
  return MonMorphism::make(psi.src().sigma(), psi.tgt().sigma(), psi.psi0(), psi.psi1());
}

MonObject direct_sum(const MonObject& a, const MonObject& b) {
  if (!(a.ctx() == b.ctx())) throw Error(ErrorCode::ContextMismatch, "direct sum over different contexts");
  return MonObject::validate(Mat::direct_sum(a.matrix(), b.matrix()), a.ctx());
}

MonMorphism direct_sum(const MonMorphism& a, const MonMorphism& b) {
  return MonMorphism::make_unchecked(direct_sum(a.src(), b.src()), direct_sum(a.tgt(), b.tgt()),
                                     Mat::direct_sum(a.psi1(), b.psi1()), Mat::direct_sum(a.psi0(), b.psi0()));
}

std::vector<int> decompose(const MonObject& f) { return f.svals(); }

bool is_indecomposable(const MonObject& f) { return f.n() == 1; }

RModuleObj cokernel(const MonObject& f) {
  std::vector<int> exps;
  for (int s : f.svals())
    if (s > 0) exps.push_back(s);
  return RModuleObj{f.ctx(), exps};
}

bool is_projective(const MonObject& f) {
  const int t = f.ctx().t();
  return std::all_of(f.svals().begin(), f.svals().end(), [t](int s) { return s == 0 || s == t; });
}

ProjectiveEnvelope projective_env(const MonObject& f) {
  const BaseRing& r = f.ctx().base();
  const std::size_t n = f.n();
  const Mat id = Mat::identity(r, n), z(r, n, n);
  MonObject l = MonObject::validate(Mat::from_blocks({{-f.sigma().matrix(), id}, {z, f.matrix()}}), f.ctx());
  const Mat proj = Mat::from_blocks({{z, id}});
  return ProjectiveEnvelope{l, MonMorphism::make(l, f, proj, proj)};
}

}  // namespace hmon
