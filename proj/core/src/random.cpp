#include "hmon/random.hpp"

#include <algorithm>

namespace hmon {

RingCtx InstanceGen::ring(const std::vector<long>& primes, int max_t) {
  const long p = primes[static_cast<std::size_t>(uniform(0, static_cast<int>(primes.size()) - 1))];
  return RingCtx(BaseRing::int_local(p), uniform(1, max_t));
}

RingCtx InstanceGen::any_ring(int max_t) {
  const int t = uniform(1, max_t);
  switch (uniform(0, 4)) {
    case 0: return RingCtx(BaseRing::int_local(2), t);
    case 1: return RingCtx(BaseRing::int_local(3), t);
    case 2: return RingCtx(BaseRing::poly_prime_field(2), t);
    case 3: return RingCtx(BaseRing::poly_prime_field(3), t);
    default: return RingCtx(BaseRing::poly_rational(), t);
  }
}

Scalar InstanceGen::scalar(const RingCtx& ctx) {
  Scalar c = ctx.from_int(uniform(-4, 4));
  if (ctx.base().kind == BaseKind::PolyLocal && uniform(0, 1)) c += ctx.from_int(uniform(-2, 2)) * ctx.uniformizer();
  if (uniform(0, 5) == 0) c = c.frac_div(ctx.one() + ctx.uniformizer());
  return c;
}

Mat InstanceGen::matrix(const RingCtx& ctx, std::size_t rows, std::size_t cols) {
  Mat m(ctx.base(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar(ctx);
  return m;
}

MonObject InstanceGen::object_with(const RingCtx& ctx, const std::vector<int>& svals) {
  std::vector<Scalar> d;
  for (int s : svals) d.push_back(ctx.pi_power(s));
  const std::size_t n = svals.size();
  if (n == 0) return MonObject::zero(ctx);
  const Mat e1 = random_unimodular(n, rng_(), ctx);
  const Mat e2 = random_unimodular(n, rng_(), ctx);
  return MonObject::validate(e1 * Mat::diagonal(ctx.base(), d) * e2, ctx);
}

MonObject InstanceGen::object(const RingCtx& ctx, std::size_t n) {
  std::vector<int> s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(uniform(0, ctx.t()));
  return object_with(ctx, s);
}

MonMorphism InstanceGen::morphism(const MonObject& src, const MonObject& tgt) {
  const RingCtx& ctx = src.ctx();
  const SnfResult& a = src.snf();
  const SnfResult& b = tgt.snf();
  // Y in Smith coordinates: Y[j][i] divisible by pi^{max(s'_j - s_i, 0)}
  Mat Y(ctx.base(), tgt.n(), src.n()), Z(ctx.base(), tgt.n(), src.n());
  for (std::size_t j = 0; j < tgt.n(); ++j)
    for (std::size_t i = 0; i < src.n(); ++i) {
      if (uniform(0, 3) == 0) continue;
      const int v = std::max(b.svals[j] - a.svals[i], 0) + (uniform(0, 3) == 0 ? 1 : 0);
      Y(j, i) = scalar(ctx) * ctx.pi_power(v);
      Z(j, i) = (Y(j, i) * ctx.pi_power(a.svals[i])).div_exact(ctx.pi_power(b.svals[j]));
    }
  return MonMorphism::make(src, tgt, b.V_inv * Z * a.V, b.U * Y * a.U_inv);
}

MonMorphism InstanceGen::null_homotopic(const MonObject& src, const MonObject& tgt) {
  const RingCtx& ctx = src.ctx();
  const Mat s0 = matrix(ctx, tgt.n(), src.n());
  const Mat s1 = matrix(ctx, tgt.n(), src.n());
  return MonMorphism::make(src, tgt, s0 * src.matrix() + tgt.sigma().matrix() * s1,
                           tgt.matrix() * s0 + s1 * src.sigma().matrix());
}

Tr3Square random_tr3_square(InstanceGen& gen, const RingCtx& ctx, std::size_t max_size) {
  const int kind = gen.uniform(0, 2);
  const MonObject f = gen.object_upto(ctx, max_size);
  if (kind == 0) {
    // gamma = id, eps' = eps psi + N
    const MonObject f2 = gen.object_upto(ctx, max_size), g2 = gen.object_upto(ctx, max_size);
    const MonMorphism psi = gen.morphism(f, f2), eps = gen.morphism(f2, g2);
    const MonMorphism eps_prime = eps.after(psi) + gen.null_homotopic(f, g2);
    return Tr3Square{MonMorphism::identity(f), eps, psi, eps_prime, kind};
  }
  if (kind == 1) {
    // psi = id, eps = eps' gamma + N
    const MonObject g = gen.object_upto(ctx, max_size), g2 = gen.object_upto(ctx, max_size);
    const MonMorphism gamma = gen.morphism(f, g), eps_prime = gen.morphism(g, g2);
    const MonMorphism eps = eps_prime.after(gamma) + gen.null_homotopic(f, g2);
    return Tr3Square{gamma, eps, MonMorphism::identity(f), eps_prime, kind};
  }
  // g = f + h, g' = f' + h', gamma and eps inclusions, eps' = psi + k
  const MonObject f2 = gen.object_upto(ctx, max_size);
  const MonObject h = gen.object_upto(ctx, max_size), h2 = gen.object_upto(ctx, max_size);
  const MonMorphism psi = gen.morphism(f, f2);
  const MonMorphism eps_prime = direct_sum(psi, gen.morphism(h, h2));
  const BaseRing& r = ctx.base();
  const Mat in1 = Mat::from_blocks({{Mat::identity(r, f.n())}, {Mat(r, h.n(), f.n())}});
  const Mat in2 = Mat::from_blocks({{Mat::identity(r, f2.n())}, {Mat(r, h2.n(), f2.n())}});
  const MonMorphism gamma = MonMorphism::make(f, eps_prime.src(), in1, in1);
  const MonMorphism eps = MonMorphism::make(f2, eps_prime.tgt(), in2, in2);
  return Tr3Square{gamma, eps, psi, eps_prime, kind};
}

}  // namespace hmon
