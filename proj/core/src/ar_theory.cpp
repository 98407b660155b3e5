#include "hmon/ar_theory.hpp"

#include <algorithm>

#include "hmon/error.hpp"

namespace hmon {

namespace {

void require_indecomposable_nonprojective(const MonObject& f) {
  if (!is_indecomposable(f))
    throw Error(ErrorCode::NotIndecomposable, "object of rank " + std::to_string(f.n()) + " is not indecomposable");
  const int s = f.svals()[0];
  if (s == 0 || s == f.ctx().t()) throw Error(ErrorCode::ProjectiveObject, "object is projective");
}

constexpr std::uint64_t kMaxCandidates = std::uint64_t{1} << 16;

// All morphisms src -> tgt up to adding omega-multiples of psi0.
std::vector<MonMorphism> morphisms_mod_omega(const MonObject& src, const MonObject& tgt) {
  const FiniteResidueRing R(src.ctx());
  const std::size_t cells = tgt.n() * src.n();
  std::uint64_t total = 1;
  for (std::size_t c = 0; c < cells; ++c) {
    if (total > kMaxCandidates / R.size()) throw Error(ErrorCode::ParametersTooLarge, "Hom enumeration too large");
    total *= R.size();
  }
  const RingCtx& ctx = src.ctx();
  const Mat& fs = tgt.sigma().matrix();
  std::vector<Scalar> lifts;
  for (std::uint64_t c = 0; c < R.size(); ++c) lifts.push_back(R.lift(c));
  std::vector<MonMorphism> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Mat psi0(ctx.base(), tgt.n(), src.n());
    std::uint64_t rest = idx;
    for (std::size_t c = 0; c < cells; ++c) {
      psi0(c / src.n(), c % src.n()) = lifts[rest % R.size()];
      rest /= R.size();
    }
    const Mat num = fs * psi0 * src.matrix();  // omega * psi1
    if (num.valuation() < ctx.t()) continue;
    out.push_back(MonMorphism::make(src, tgt, num.div_exact(ctx.omega()), psi0));
  }
  return out;
}

bool structurally_exact(const ArSequence& seq, std::vector<std::string>& notes) {
  if (!seq.theta.is_valid()) notes.emplace_back("theta is not a morphism");
  if (!seq.g.is_valid()) notes.emplace_back("g is not a morphism");
  if (!notes.empty()) return false;
  const MonMorphism comp = seq.g.after(seq.theta);
  if (!comp.psi1().is_zero() || !comp.psi0().is_zero()) notes.emplace_back("g o theta != 0");
  if (seq.tau_f.n() + seq.end.n() != seq.middle.n()) notes.emplace_back("ranks do not add up");
  auto all_units = [](const Mat& m) {
    const SnfResult s = snf(m);
    return std::all_of(s.svals.begin(), s.svals.end(), [](int v) { return v == 0; });
  };
  for (const Mat* m : {&seq.theta.psi1(), &seq.theta.psi0()})
    if (!all_units(*m)) notes.emplace_back("theta is not split injective");
  for (const Mat* m : {&seq.g.psi1(), &seq.g.psi0()})
    if (!all_units(*m)) notes.emplace_back("g is not surjective");
  return notes.empty();
}

}  // namespace

MonObject tau(const MonObject& f, int d) {
  require_indecomposable_nonprojective(f);
  return d % 2 == 0 ? f : f.sigma();
}

RModuleObj tau_gp(const RModuleObj& m, int d) {
  if (m.exps.size() != 1) throw Error(ErrorCode::NotIndecomposable, "module is not cyclic");
  if (m.exps[0] == m.ctx.t()) throw Error(ErrorCode::ProjectiveObject, "module is free");
  return d % 2 == 0 ? m : syzygy(m);
}

ArSequence ar_sequence(const MonObject& f) {
  require_indecomposable_nonprojective(f);
  const RingCtx& ctx = f.ctx();
  const BaseRing& r = ctx.base();
  const Scalar a = f.matrix()(0, 0);
  const int s = f.svals()[0];
  // Cokernel level: f1(1) = (1, pi), f2(x, y) = pi x - y. Over S the middle
  // term is q = [[a, u pi^{s-1}], [0, a]] with a = u pi^s; Coker q has
  // exponents (s-1, s+1).
  const Scalar h = a.unit_part() * ctx.pi_power(s - 1);
  MonObject middle = MonObject::validate(Mat::from_rows(r, {{a, h}, {ctx.zero(), a}}), ctx);
  const Mat in = Mat::from_rows(r, {{ctx.one()}, {ctx.zero()}});
  const Mat out = Mat::from_rows(r, {{ctx.zero(), ctx.one()}});
  MonObject tf = tau(f, 0);
  MonMorphism theta = MonMorphism::make(tf, middle, in, in);
  MonMorphism g = MonMorphism::make(middle, f, out, out);
  return ArSequence{tf, middle, f, std::move(theta), std::move(g)};
}

ArSequence ar_control(const MonObject& f, ArControl kind) {
  require_indecomposable_nonprojective(f);
  const RingCtx& ctx = f.ctx();
  const BaseRing& r = ctx.base();
  const Scalar a = f.matrix()(0, 0);
  const Scalar h = kind == ArControl::Split ? ctx.zero() : a.unit_part() * ctx.pi_power(f.svals()[0] - 1);
  const Scalar lower = kind == ArControl::Split ? a : -a;
  MonObject middle = MonObject::validate(Mat::from_rows(r, {{a, h}, {ctx.zero(), lower}}), ctx);
  const Mat in = Mat::from_rows(r, {{ctx.one()}, {ctx.zero()}});
  const Mat out = Mat::from_rows(r, {{ctx.zero(), ctx.one()}});
  return ArSequence{f, middle, f, MonMorphism::make_unchecked(f, middle, in, in),
                    MonMorphism::make_unchecked(middle, f, out, out)};
}

std::optional<MonMorphism> lift_through(const MonMorphism& g, const MonMorphism& h) {
  if (!(g.tgt() == h.tgt())) throw Error(ErrorCode::NotComposable, "g and h have different targets");
  const MonObject& B = g.src();
  const MonObject& X = h.src();
  const RingCtx& ctx = B.ctx();
  // alpha0 = P + K Z with g0 alpha0 = h0; alpha1 = B^{-1} alpha0 X must be integral,
  // i.e. B_Sigma K Z X == -B_Sigma P X (mod omega).
  auto sol = solve_exact(g.psi0(), h.psi0());
  if (!sol) return std::nullopt;
  const Mat& bs = B.sigma().matrix();
  const Mat rhs = -(bs * sol->particular * X.matrix());
  Mat alpha0 = sol->particular;
  if (sol->kernel.cols() > 0) {
    auto z = solve_two_sided_congruence(bs * sol->kernel, X.matrix(), rhs, ctx);
    if (!z) return std::nullopt;
    alpha0 = alpha0 + sol->kernel * *z;
  } else if (rhs.valuation() < ctx.t()) {
    return std::nullopt;
  }
  const Mat num = bs * alpha0 * X.matrix();
  MonMorphism alpha = MonMorphism::make(X, B, num.div_exact(ctx.omega()), alpha0);
  const MonMorphism check = g.after(alpha);
  if (!(check.psi0() == h.psi0()) || !(check.psi1() == h.psi1())) return std::nullopt;
  return alpha;
}

bool is_split_epi(const MonMorphism& h) { return lift_through(h, MonMorphism::identity(h.tgt())).has_value(); }

bool ArReport::pass() const {
  return structural && !g_split && tau_end_local &&
         std::all_of(tests.begin(), tests.end(), [](const ArTestLine& l) { return l.pass; });
}

ArReport verify_right_almost_split(const ArSequence& seq) {
  const RingCtx& ctx = seq.end.ctx();
  ArReport rep;
  rep.t = ctx.t();
  rep.s = seq.end.n() == 1 ? seq.end.svals()[0] : -1;
  if (seq.middle.n() > 4 || seq.end.n() > 2 || ctx.t() > 4)
    throw Error(ErrorCode::ParametersTooLarge, "verifier is limited to t <= 4 and small ranks");
  rep.structural = structurally_exact(seq, rep.notes);
  if (!rep.structural) return rep;
  rep.g_split = is_split_epi(seq.g);
  if (rep.g_split) rep.notes.emplace_back("g is a split epimorphism");
  rep.tau_end_local = end_ring_is_local(seq.tau_f);
  if (!rep.tau_end_local) rep.notes.emplace_back("End(tau f) is not local");

  for (int s2 = 0; s2 <= ctx.t(); ++s2) {
    const MonObject test = MonObject::validate(Mat::scalar(ctx.base(), 1, ctx.pi_power(s2)), ctx);
    ArTestLine line{s2, 0, 0, true};
    // coset representatives of Hom(test, end) modulo null-homotopy
    std::vector<MonMorphism> reps;
    for (const MonMorphism& h : morphisms_mod_omega(test, seq.end)) {
      const bool seen = std::any_of(reps.begin(), reps.end(), [&h](const MonMorphism& r) { return homotopic(h, r); });
      if (!seen) reps.push_back(h);
    }
    line.classes = reps.size();
    for (const MonMorphism& h : reps) {
      const bool split = is_split_epi(h);
      const bool lifts = lift_through(seq.g, h).has_value();
      if (lifts && !split) ++line.factored;
      if (split == lifts) line.pass = false;  // non-split must lift, split must not
    }
    // null-homotopic maps: psi1 = s0 g' + end_Sigma s1, psi0 = end s0 + s1 g'_Sigma
    const std::size_t m = seq.end.n(), n = test.n();
    for (int which = 0; which < 2; ++which)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Mat s0(ctx.base(), m, n), s1(ctx.base(), m, n);
          (which == 0 ? s0 : s1)(i, j) = ctx.one();
          MonMorphism nh = MonMorphism::make(test, seq.end, s0 * test.matrix() + seq.end.sigma().matrix() * s1,
                                             seq.end.matrix() * s0 + s1 * test.sigma().matrix());
          if (!lift_through(seq.g, nh)) line.pass = false;
        }
    rep.tests.push_back(line);
  }
  return rep;
}

bool end_ring_is_local(const MonObject& f) {
  const auto endos = morphisms_mod_omega(f, f);
  std::vector<Mat> nonunits;
  for (const MonMorphism& e : endos)
    if (!determinant(e.psi0()).is_unit()) nonunits.push_back(e.psi0());
  for (std::size_t i = 0; i < nonunits.size(); ++i)
    for (std::size_t j = i; j < nonunits.size(); ++j)
      if (determinant(nonunits[i] + nonunits[j]).is_unit()) return false;
  return true;
}

}  // namespace hmon
