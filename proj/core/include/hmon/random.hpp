#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hmon/homotopy.hpp"

namespace hmon {

/// Seeded generators for property runs. All draws go through one engine so
/// a (seed, call sequence) pair reproduces the same instances.
class InstanceGen {
 public:
  explicit InstanceGen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// int-local at p in `primes`, t uniform in [1, max_t].
  RingCtx ring(const std::vector<long>& primes, int max_t);
  /// Also draws poly-local rings over Q, F_2 and F_3.
  RingCtx any_ring(int max_t);

  /// Small element of S; never leaves S.
  Scalar scalar(const RingCtx& ctx);
  /// E1 * diag(pi^{s_i}) * E2 with s_i uniform in [0, t].
  MonObject object(const RingCtx& ctx, std::size_t n);
  MonObject object_with(const RingCtx& ctx, const std::vector<int>& svals);
  MonObject object_upto(const RingCtx& ctx, std::size_t max_size) {
    return object(ctx, static_cast<std::size_t>(uniform(1, static_cast<int>(max_size))));
  }
  /// Random morphism through the Smith coordinates of src and tgt.
  MonMorphism morphism(const MonObject& src, const MonObject& tgt);
  /// psi1 = s0 f + f'_Sigma s1, psi0 = f' s0 + s1 f_Sigma for random s0, s1.
  MonMorphism null_homotopic(const MonObject& src, const MonObject& tgt);

 private:
  Mat matrix(const RingCtx& ctx, std::size_t rows, std::size_t cols);
  std::mt19937_64 rng_;
};

/// gamma: f -> g, eps: f' -> g', psi: f -> f', eps': g -> g' with
/// eps o psi ~ eps' o gamma.
struct Tr3Square {
  MonMorphism gamma;
  MonMorphism eps;
  MonMorphism psi;
  MonMorphism eps_prime;
  int kind = 0;
};
Tr3Square random_tr3_square(InstanceGen& gen, const RingCtx& ctx, std::size_t max_size);

}  // namespace hmon
