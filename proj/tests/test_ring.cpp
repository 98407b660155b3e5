#include "doctest.h"

#include "hmon/error.hpp"
#include "hmon/random.hpp"
#include "oracles.hpp"

using namespace hmon;

namespace {

const BaseRing Z2 = BaseRing::int_local(2);
const BaseRing Z3 = BaseRing::int_local(3);
const BaseRing F2x = BaseRing::poly_prime_field(2);
const BaseRing Qx = BaseRing::poly_rational();

Scalar q(const BaseRing& r, const char* s) { return parse_scalar(s, r); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_SUITE("ring") {
  TEST_CASE("arith examples") {
    CHECK(q(Z2, "6").div_exact(q(Z2, "2")) == q(Z2, "3"));
    CHECK(q(Z2, "1/3") * q(Z2, "3") == Scalar::one(Z2));
    CHECK(code_of([] { (void)q(Z2, "1").div_exact(q(Z2, "2")); }) == ErrorCode::DivisionLeavesRing);
    CHECK(-q(Z3, "4") + q(Z3, "4") == Scalar::zero(Z3));
  }

  TEST_CASE("valuation examples") {
    CHECK(q(Z2, "12").valuation() == 2);
    CHECK(q(Z2, "1/3").valuation() == 0);
    CHECK(Scalar::zero(Z2).valuation() == kInfinity);
    CHECK(q(F2x, "x^3 + x^2").valuation() == 2);
    CHECK(q(Qx, "(x)/(1 + x)").valuation() == 1);
  }

  TEST_CASE("reduce examples") {
    const RingCtx c22(Z2, 2);
    CHECK(reduce_mod_omega(q(Z2, "6"), c22).lift() == q(Z2, "2"));
    // 1/3 mod 4 against an extended-gcd inverse
    const long inv3 = oracle::inverse_mod(3, 4);
    CHECK(reduce_mod_omega(q(Z2, "1/3"), c22).lift() == Scalar::from_int(Z2, inv3));
    CHECK(reduce_mod_omega(q(F2x, "x^4 + x"), RingCtx(F2x, 3)).lift() == q(F2x, "x"));
    CHECK(reduce_mod_omega(q(Z2, "-1"), c22).lift() == q(Z2, "3"));
  }

  TEST_CASE("parse syntax") {
    CHECK(q(Z3, "-3/5").to_string() == "-3/5");
    CHECK(q(Qx, "1 + 2*x^2") == q(Qx, " 2*x^2+1 "));
    CHECK(q(Qx, "1/2*x").valuation() == 1);
    CHECK(code_of([] { (void)q(Z2, "2x"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { (void)q(Qx, "1 +"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { (void)q(Z2, ""); }) == ErrorCode::ParseError);
  }

  TEST_CASE("context invariants") {
    CHECK_THROWS_AS(RingCtx(Z2, 0), Error);
    CHECK_THROWS_AS(BaseRing::int_local(4), Error);
    CHECK_THROWS_AS(BaseRing::poly_prime_field(6), Error);
    CHECK(code_of([] { (void)(Scalar::one(Z2) + Scalar::one(Z3)); }) == ErrorCode::ContextMismatch);
  }

  TEST_CASE("valuation laws and reduction is a ring map") {
    InstanceGen gen(11);
    for (int it = 0; it < 300; ++it) {
      const RingCtx ctx = gen.any_ring(4);
      const Scalar a = gen.uniform(0, 1) ? Scalar::zero(ctx.base()) : ctx.pi_power(gen.uniform(0, 3));
      const Scalar x = a + ctx.from_int(gen.uniform(-9, 9)) * ctx.pi_power(gen.uniform(0, 3));
      const Scalar y = ctx.from_int(gen.uniform(-9, 9)).frac_div(ctx.one() + ctx.uniformizer()) * ctx.pi_power(gen.uniform(0, 2));
      if (!x.is_zero() && !y.is_zero()) CHECK((x * y).valuation() == x.valuation() + y.valuation());
      const int vx = x.valuation(), vy = y.valuation();
      const int vs = (x + y).valuation();
      CHECK(vs >= std::min(vx, vy));
      if (vx != vy) CHECK(vs == std::min(vx, vy));
      const auto rx = reduce_mod_omega(x, ctx), ry = reduce_mod_omega(y, ctx);
      CHECK(reduce_mod_omega(x + y, ctx) == rx + ry);
      CHECK(reduce_mod_omega(x * y, ctx) == rx * ry);
      CHECK(reduce_mod_omega(rx.lift(), ctx) == rx);
      CHECK(parse_scalar(x.to_string(), ctx.base()) == x);
      CHECK(parse_scalar(y.to_string(), ctx.base()) == y);
    }
  }

  TEST_CASE("finite residue ring codes") {
    for (const BaseRing& r : {Z2, Z3, F2x, BaseRing::poly_prime_field(3)}) {
      const RingCtx ctx(r, 3);
      const FiniteResidueRing R(ctx);
      CHECK(R.size() == static_cast<std::uint64_t>(oracle::ipow(r.prime, 3)));
      for (std::uint64_t c = 0; c < R.size(); ++c) {
        CHECK(R.encode(R.lift(c)) == c);
        CHECK(R.encode(R.lift(c) * ctx.uniformizer()) == R.mul_pi_power(c, 1));
        for (std::uint64_t d = 0; d < R.size(); d += 5) {
          CHECK(R.encode(R.lift(c) + R.lift(d)) == R.add(c, d));
          CHECK(R.encode(R.lift(c) * R.lift(d)) == R.mul(c, d));
        }
      }
    }
    CHECK_THROWS_AS(FiniteResidueRing(RingCtx(Qx, 2)), Error);
  }
}
