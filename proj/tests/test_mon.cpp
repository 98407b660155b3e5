#include "doctest.h"

#include <algorithm>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace hmon;
using testutil::error_of;
using testutil::obj;

namespace {

const BaseRing Z2 = BaseRing::int_local(2);

std::vector<int> merged(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

TEST_SUITE("moncat") {
  TEST_CASE("validate examples") {
    const RingCtx c2(Z2, 2);
    CHECK(obj(c2, {{2}}).svals() == std::vector<int>{1});
    CHECK(error_of([] { (void)obj(RingCtx(Z2, 1), {{4}}); }) == ErrorCode::CokernelNotOmegaTorsion);
    CHECK(obj(c2, {{2, 1}, {0, -2}}).svals() == std::vector<int>{0, 2});
    CHECK(error_of([&] { (void)obj(c2, {{1, 2}, {2, 4}}); }) == ErrorCode::NotMono);
    CHECK(error_of([&] { (void)MonObject::validate(Mat(Z2, 2, 1), c2); }) == ErrorCode::NonSquare);
    CHECK(error_of([&] { (void)MonObject::validate(Mat::from_ints(BaseRing::int_local(3), {{3}}), c2); }) ==
          ErrorCode::ContextMismatch);
    CHECK(MonObject::zero(c2).n() == 0);
  }

  TEST_CASE("sigma examples") {
    const RingCtx c2(Z2, 2);
    CHECK(obj(c2, {{2}}).sigma().matrix() == Mat::from_ints(Z2, {{2}}));
    CHECK(obj(c2, {{1, 0}, {0, 1}}).sigma().matrix() == Mat::from_ints(Z2, {{4, 0}, {0, 4}}));
    // 4 * f^{-1} through the cofactor oracle
    const oracle::QMat s = oracle::sigma_partner({{2, 1}, {0, 2}}, 4);
    CHECK(s == oracle::QMat{{2, -1}, {0, 2}});
    CHECK(obj(c2, {{2, 1}, {0, 2}}).sigma().matrix() == Mat::from_ints(Z2, {{2, -1}, {0, 2}}));
  }

  TEST_CASE("sigma laws on random objects") {
    InstanceGen gen(21);
    for (int it = 0; it < 150; ++it) {
      const RingCtx ctx = gen.any_ring(4);
      const MonObject f = gen.object_upto(ctx, 3);
      const Mat w = Mat::scalar(ctx.base(), f.n(), ctx.omega());
      CHECK(f.matrix() * f.sigma().matrix() == w);
      CHECK(f.sigma().matrix() * f.matrix() == w);
      CHECK(f.sigma().sigma().matrix() == f.matrix());
      std::vector<int> dual;
      for (int s : f.svals()) dual.push_back(ctx.t() - s);
      std::sort(dual.begin(), dual.end());
      CHECK(decompose(f.sigma()) == dual);
      CHECK(is_indecomposable(f) == is_indecomposable(f.sigma()));
    }
  }

  TEST_CASE("morphism examples") {
    const RingCtx c2(Z2, 2);
    const MonObject f = obj(c2, {{2}}), one = obj(c2, {{1}});
    CHECK(MonMorphism::identity(f).is_valid());
    const MonMorphism psi = is_morphism(Mat::from_ints(Z2, {{2}}), Mat::from_ints(Z2, {{1}}), f, one);
    CHECK(psi.is_valid());
    CHECK(error_of([&] { (void)is_morphism(Mat::from_ints(Z2, {{1}}), Mat::from_ints(Z2, {{0}}), f, f); }) ==
          ErrorCode::SquareNotCommuting);
    const MonMorphism sig = induced_sigma_morphism(psi);
    CHECK(sig.src().matrix() == Mat::from_ints(Z2, {{2}}));
    CHECK(sig.tgt().matrix() == Mat::from_ints(Z2, {{4}}));
    CHECK(sig.psi1() == Mat::from_ints(Z2, {{1}}));
    CHECK(sig.psi0() == Mat::from_ints(Z2, {{2}}));
    CHECK(testutil::same(induced_sigma_morphism(MonMorphism::identity(f)), MonMorphism::identity(f.sigma())));
    CHECK(error_of([&] { (void)psi.after(psi); }) == ErrorCode::NotComposable);
  }

  TEST_CASE("induced sigma morphism is an involution") {
    InstanceGen gen(22);
    for (int it = 0; it < 100; ++it) {
      const RingCtx ctx = gen.any_ring(3);
      const MonMorphism psi = gen.morphism(gen.object_upto(ctx, 3), gen.object_upto(ctx, 3));
      const MonMorphism back = induced_sigma_morphism(induced_sigma_morphism(psi));
      CHECK(testutil::same(back, psi));
      CHECK(back.src() == psi.src());
    }
  }

  TEST_CASE("direct sums") {
    const RingCtx c2(Z2, 2);
    CHECK(direct_sum(obj(c2, {{2}}), obj(c2, {{1}})).matrix() == Mat::from_ints(Z2, {{2, 0}, {0, 1}}));
    CHECK(direct_sum(obj(c2, {{2}}), MonObject::zero(c2)) == obj(c2, {{2}}));
    CHECK(error_of([&] { (void)direct_sum(obj(c2, {{2}}), obj(RingCtx(Z2, 3), {{2}})); }) == ErrorCode::ContextMismatch);
    InstanceGen gen(23);
    for (int it = 0; it < 100; ++it) {
      const RingCtx ctx = gen.any_ring(3);
      const MonObject a = gen.object_upto(ctx, 2), b = gen.object_upto(ctx, 2);
      CHECK(direct_sum(a, b).svals() == merged(a.svals(), b.svals()));
    }
  }

  TEST_CASE("decompose, cokernel, projectivity") {
    const RingCtx c2(Z2, 2);
    CHECK(decompose(obj(c2, {{2, 1}, {0, -2}})) == std::vector<int>{0, 2});
    CHECK(decompose(obj(RingCtx(Z2, 4), {{8}})) == std::vector<int>{3});
    CHECK(cokernel(obj(c2, {{2}})).exps == std::vector<int>{1});
    CHECK(cokernel(obj(c2, {{1}})).exps.empty());
    CHECK(cokernel(obj(c2, {{2, 1}, {0, -2}})).exps == std::vector<int>{2});
    CHECK(is_projective(obj(c2, {{1}})));
    CHECK_FALSE(is_projective(obj(c2, {{2}})));
    CHECK(is_projective(obj(c2, {{2, 1}, {0, -2}})));
    InstanceGen gen(24);
    for (int it = 0; it < 100; ++it) {
      const RingCtx ctx = gen.any_ring(4);
      const MonObject f = gen.object_upto(ctx, 3);
      const Mat e1 = random_unimodular(f.n(), gen.engine()(), ctx), e2 = random_unimodular(f.n(), gen.engine()(), ctx);
      CHECK(decompose(MonObject::validate(e1 * f.matrix() * e2, ctx)) == decompose(f));
      if (f.n() == 1) {
        const int s = f.svals()[0];
        if (s > 0) CHECK(cokernel(f).exps == std::vector<int>{s});
      }
    }
  }

  TEST_CASE("projective envelope") {
    const RingCtx c2(Z2, 2);
    const ProjectiveEnvelope env = projective_env(obj(c2, {{2}}));
    CHECK(env.l.matrix() == Mat::from_ints(Z2, {{-2, 1}, {0, 2}}));
    CHECK(env.l.svals() == std::vector<int>{0, 2});
    InstanceGen gen(25);
    for (int it = 0; it < 100; ++it) {
      const RingCtx ctx = gen.any_ring(3);
      const MonObject f = gen.object_upto(ctx, 3);
      const ProjectiveEnvelope e = projective_env(f);
      CHECK(is_projective(e.l));
      CHECK(e.pi.is_valid());
      CHECK(e.pi.tgt() == f);
      CHECK(cokernel(e.l).exps == std::vector<int>(f.n(), ctx.t()));
      // projections are surjective: some f.n() columns form the identity
      CHECK(snf(e.pi.psi1()).svals == std::vector<int>(f.n(), 0));
      CHECK(snf(e.pi.psi0()).svals == std::vector<int>(f.n(), 0));
    }
  }
}
