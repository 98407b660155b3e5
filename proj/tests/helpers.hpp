#pragma once

#include <functional>

#include "hmon/error.hpp"
#include "hmon/random.hpp"

namespace testutil {

inline hmon::Mat random_matrix(hmon::InstanceGen& gen, const hmon::RingCtx& ctx, std::size_t r, std::size_t c,
                               int lo = -6, int hi = 6) {
  hmon::Mat m(ctx.base(), r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = ctx.from_int(gen.uniform(lo, hi));
  return m;
}

inline hmon::MonObject obj(const hmon::RingCtx& ctx, std::initializer_list<std::initializer_list<long>> rows) {
  return hmon::MonObject::validate(hmon::Mat::from_ints(ctx.base(), rows), ctx);
}

inline hmon::ErrorCode error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const hmon::Error& e) {
    return e.code();
  }
  throw std::logic_error("expected an hmon::Error");
}

inline bool same(const hmon::MonMorphism& a, const hmon::MonMorphism& b) {
  return a.psi1() == b.psi1() && a.psi0() == b.psi0();
}

}  // namespace testutil
