#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hmon/ar_theory.hpp"
#include "hmon/error.hpp"

namespace moncli {

using namespace hmon;

namespace {

constexpr std::size_t kMaxReported = 5;

// A trial returns an empty string on success, otherwise the reason.
using Trial = std::function<std::string(InstanceGen&, const RingCtx&, const SuiteParams&)>;

RingCtx draw_ring(InstanceGen& gen, const SuiteParams& p) {
  switch (p.mode) {
    case RingMode::Ints: return gen.ring({2, 3}, p.max_t);
    case RingMode::Any: return gen.any_ring(p.max_t);
    case RingMode::Fixed: break;
  }
  return RingCtx(p.fixed, gen.uniform(1, p.max_t));
}

bool same_morphism(const MonMorphism& a, const MonMorphism& b) { return a.psi1() == b.psi1() && a.psi0() == b.psi0(); }

std::vector<int> with_projectives_removed(std::vector<int> s, int t) {
  s.erase(std::remove_if(s.begin(), s.end(), [t](int v) { return v == 0 || v == t; }), s.end());
  return s;
}

std::string trial_sigma(InstanceGen& gen, const RingCtx& ctx, const SuiteParams& p) {
  const MonObject f = gen.object_upto(ctx, p.max_size);
  const Mat& fs = f.sigma().matrix();
  const Mat w = Mat::scalar(ctx.base(), f.n(), ctx.omega());
  if (!(f.matrix() * fs == w)) return "f f_Sigma != omega";
  if (!(fs * f.matrix() == w)) return "f_Sigma f != omega";
  if (!(f.sigma().sigma().matrix() == f.matrix())) return "(f_Sigma)_Sigma != f";
  std::vector<int> dual;
  for (int s : f.svals()) dual.push_back(ctx.t() - s);
  std::sort(dual.begin(), dual.end());
  if (decompose(f.sigma()) != dual) return "svals of f_Sigma are not t - s";
  return {};
}

std::string trial_snf(InstanceGen& gen, const RingCtx& ctx, const SuiteParams& p) {
  const MonObject f = gen.object_upto(ctx, p.max_size);
  const SnfResult& r = f.snf();
  if (!(r.U * r.D * r.V == f.matrix())) return "U D V != A";
  const Mat e1 = random_unimodular(f.n(), gen.engine()(), ctx), e2 = random_unimodular(f.n(), gen.engine()(), ctx);
  if (snf(e1 * f.matrix() * e2).svals != r.svals) return "svals changed under unimodular conjugation";
  if (snf(r.D).svals != r.svals) return "snf(D) differs";
  return {};
}

std::string trial_tr1(InstanceGen& gen, const RingCtx& ctx, const SuiteParams& p) {
  const MonObject f = gen.object_upto(ctx, p.max_size);
  if (!is_projective(cone(MonMorphism::identity(f)).C)) return "cone of the identity is not projective";
  return {};
}

std::string trial_nullity(InstanceGen& gen, const RingCtx& ctx, const SuiteParams& p) {
  const MonObject a = gen.object_upto(ctx, p.max_size), b = gen.object_upto(ctx, p.max_size);
  const Triangle tr = standard_triangle(gen.morphism(a, b));
  const auto w = triangle_nullity(tr);
  if (!w) return "a consecutive composite is not null-homotopic";
  const MonMorphism comps[3] = {tr.v.after(tr.u), tr.w.after(tr.v), suspend(tr.u).after(tr.w)};
  for (int i = 0; i < 3; ++i)
    if (!check_witness(comps[i], (*w)[i])) return "witness " + std::to_string(i) + " does not check";
  return {};
}

std::string trial_tr2(InstanceGen& gen, const RingCtx& ctx, const SuiteParams& p) {
  const MonObject a = gen.object_upto(ctx, p.max_size), b = gen.object_upto(ctx, p.max_size);
  const Triangle tr = standard_triangle(gen.morphism(a, b));
  const Cone cv = cone(tr.v);
  const int t = ctx.t();
  if (with_projectives_removed(decompose(cv.C), t) != with_projectives_removed(decompose(suspend(a)), t))
    return "C([id 0]^T) is not Sigma(src) plus projectives";
  const Rotation rot = rotate(tr);
  if (!is_iso_in_homotopy(rot.iso_witness)) return "comparison C(v) -> Sigma A is not an isomorphism";
  if (!triangle_nullity(rot.rotated)) return "rotated triangle has a non-null composite";
  return {};
}

std::string trial_tr3(InstanceGen& gen, const RingCtx& ctx, const SuiteParams& p) {
  const Tr3Square sq = random_tr3_square(gen, ctx, p.max_size);
  const Tr3Completion c = complete_morphism_tr3(sq.gamma, sq.eps, sq.psi, sq.eps_prime);
  if (!c.eta.is_valid()) return "eta is not a morphism";
  if (!c.left_homotopy || !c.right_homotopy) return "a square does not commute";
  return {};
}

std::string trial_tr4(InstanceGen& gen, const RingCtx& ctx, const SuiteParams& p) {
  const MonObject a = gen.object_upto(ctx, p.max_size), b = gen.object_upto(ctx, p.max_size),
                  c = gen.object_upto(ctx, p.max_size);
  const Octahedron o = octahedron(gen.morphism(a, b), gen.morphism(b, c));
  if (!o.squares_commute) return "octahedron squares do not commute";
  if (!o.delta_strict) return "[0 id] o epsilon != delta";
  if (!o.witness_ok) return "epsilon o gamma - inj witness fails";
  if (!o.epsilon_iso) return "epsilon is not an isomorphism in HMon";
  return {};
}

std::string trial_factor(InstanceGen& gen, const RingCtx& ctx, const SuiteParams& p) {
  const MonObject a = gen.object_upto(ctx, p.max_size), b = gen.object_upto(ctx, p.max_size);
  const MonMorphism psi = gen.null_homotopic(a, b);
  const auto w = null_homotopy(psi);
  if (!w) return "constructed null-homotopic map not recognised";
  const ProjectiveFactorization fac = factor_through_projective(psi, *w);
  if (!is_projective(fac.alpha.tgt())) return "middle object is not projective";
  if (!same_morphism(fac.beta.after(fac.alpha), psi)) return "beta o alpha != psi";
  return {};
}

std::string trial_sigma_null(InstanceGen& gen, const RingCtx& ctx, const SuiteParams& p) {
  const MonObject a = gen.object_upto(ctx, p.max_size), b = gen.object_upto(ctx, p.max_size);
  const MonMorphism psi = gen.uniform(0, 1) ? gen.morphism(a, b) : gen.null_homotopic(a, b);
  const MonMorphism sig = induced_sigma_morphism(psi);
  if (null_homotopy(psi).has_value() != null_homotopy(sig).has_value()) return "decisions differ";
  if (!same_morphism(induced_sigma_morphism(sig), psi)) return "double application is not the identity";
  return {};
}

std::string trial_resolve(InstanceGen& gen, const RingCtx& drawn, const SuiteParams& p) {
  // enumeration needs a finite residue field; Q[x] draws are moved to F_2[x]
  const RingCtx ctx = drawn.base().finite_residue_field() ? drawn : RingCtx(BaseRing::poly_prime_field(2), drawn.t());
  const MonObject f = gen.object_upto(ctx, p.max_size);
  if (!resolution_is_exact(two_periodic_resolution(f, 4), ctx)) return "2-periodic complex is not exact";
  return {};
}

std::string trial_tau2(InstanceGen& gen, const RingCtx& ctx, const SuiteParams&) {
  if (ctx.t() < 2) return {};
  const MonObject f = gen.object_with(ctx, {gen.uniform(1, ctx.t() - 1)});
  for (int d = 0; d < 2; ++d)
    if (decompose(tau(tau(f, d), d)) != decompose(f)) return "tau^2 != id for d = " + std::to_string(d);
  const RModuleObj m = cokernel(f);
  for (int d = 0; d < 2; ++d) {
    if (!(stable_class(cokernel(tau(f, d))) == stable_class(tau_gp(m, d))))
      return "coker o tau != tau_gp o coker for d = " + std::to_string(d);
  }
  return {};
}

const std::map<std::string, Trial>& registry() {
  static const std::map<std::string, Trial> r{
      {"sigma", trial_sigma}, {"snf", trial_snf},   {"tr1", trial_tr1},         {"nullity", trial_nullity},
      {"tr2", trial_tr2},     {"tr3", trial_tr3},   {"tr4", trial_tr4},         {"factor", trial_factor},
      {"sigma-null", trial_sigma_null},     {"resolve", trial_resolve}, {"tau2", trial_tau2},
  };
  return r;
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

}  // namespace

std::string SuiteResult::summary() const {
  return name + " " + std::to_string(passed) + "/" + std::to_string(total) + (pass() ? " PASS" : " FAIL");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"sigma", "snf", "tr1", "nullity", "tr2", "tr3",
                                              "tr4",   "factor", "sigma-null", "resolve", "tau2"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteParams& params) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorCode::ParseError, "unknown suite \"" + name + "\"");
  SuiteResult res{upper(name), 0, params.iters, {}};
  InstanceGen gen(params.seed);
  for (std::size_t i = 0; i < params.iters; ++i) {
    std::string why;
    try {
      const RingCtx ctx = draw_ring(gen, params);
      why = it->second(gen, ctx, params);
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (why.empty()) ++res.passed;
    else if (res.failures.size() < kMaxReported) res.failures.push_back("trial " + std::to_string(i) + ": " + why);
  }
  return res;
}

}  // namespace moncli
