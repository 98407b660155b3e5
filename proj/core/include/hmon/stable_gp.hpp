#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "hmon/homotopy.hpp"

namespace hmon {

/// R-linear map between (+)_e R/pi^e modules in the cyclic-generator bases.
/// Entry (j, i) is the canonical representative modulo pi^{tgt.exps[j]}.
struct RModuleMap {
  RModuleObj src;
  RModuleObj tgt;
  Mat m;
};

/// T(psi): the map induced on cokernels, in the Smith bases of src and tgt.
RModuleMap coker_functor(const MonMorphism& psi);

/// Stable classes: free summands dropped, e -> t - e.
RModuleObj syzygy(const RModuleObj& m);
RModuleObj cosyzygy(const RModuleObj& m);
/// Cokernel of the dual of the minimal presentation, free summands dropped.
RModuleObj transpose(const RModuleObj& m);
/// Drops free summands.
RModuleObj stable_class(const RModuleObj& m);

struct PeriodicResolution {
  Mat f_bar;     // P/omega P -> Q/omega Q
  Mat fsig_bar;  // Q/omega Q -> P/omega P
  std::size_t length = 0;
};
PeriodicResolution two_periodic_resolution(const MonObject& f, std::size_t terms);
/// Enumerates R^n and checks ker f_bar = im fsig_bar and ker fsig_bar = im f_bar.
/// Throws InfiniteResidueField or ParametersTooLarge.
bool resolution_is_exact(const PeriodicResolution& res, const RingCtx& ctx);

/// Brute-force model of Hom_R(M, N) and its subgroup of maps factoring
/// through a free module R^k, k = number of generators of N.
class StableHomOracle {
 public:
  /// Throws InfiniteResidueField or ParametersTooLarge.
  StableHomOracle(const RModuleObj& m, const RModuleObj& n);

  [[nodiscard]] std::uint64_t hom_size() const { return hom_size_; }
  [[nodiscard]] std::uint64_t factoring_size() const { return factoring_.size(); }
  /// Invariant factors of Hom / (factoring subgroup).
  [[nodiscard]] std::vector<int> lengths() const;
  /// True iff the map lies in the factoring subgroup.
  [[nodiscard]] bool factors_through_projective(const RModuleMap& h) const;

 private:
  using Cells = std::vector<std::uint64_t>;
  [[nodiscard]] std::uint64_t key(const Cells& c) const;
  [[nodiscard]] Cells times_pi_power(const Cells& c, int j) const;
  [[nodiscard]] Cells add(const Cells& a, const Cells& b) const;

  FiniteResidueRing R_;
  RModuleObj m_, n_;
  std::uint64_t hom_size_ = 1;
  std::vector<Cells> hom_;
  std::unordered_set<std::uint64_t> factoring_;
};

StableHomModule stable_hom_R_bruteforce(const RModuleObj& m, const RModuleObj& n);

struct PairReport {
  int s = 0;
  int s2 = 0;
  std::vector<int> mon;
  std::vector<int> oracle;
  bool pass = false;
};
struct FaithfulReport {
  std::vector<PairReport> pairs;
  [[nodiscard]] bool all_pass() const;
};
/// Compares stable_hom with the brute-force oracle on all pairs of
/// indecomposables (S -pi^s-> S), 0 <= s, s2 <= max_s.
FaithfulReport check_fully_faithful(const RingCtx& ctx, int max_s);

std::string format_lengths(const std::vector<int>& lengths);

}  // namespace hmon
