#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hmon/stable_gp.hpp"

namespace hmon {

/// tau_Mon: f for even d, f_Sigma for odd d. Throws NotIndecomposable or
/// ProjectiveObject.
MonObject tau(const MonObject& f, int d = 0);
/// M for even d, Omega M for odd d.
RModuleObj tau_gp(const RModuleObj& m, int d = 0);

/// 0 -> tau_f -theta-> middle -g-> end -> 0.
struct ArSequence {
  MonObject tau_f;
  MonObject middle;
  MonObject end;
  MonMorphism theta;
  MonMorphism g;
};

/// Lifts 0 -> M_s -> M_{s-1} + M_{s+1} -> M_s -> 0 (M_e = R/pi^e) to Mon.
/// Throws NotIndecomposable or ProjectiveObject.
ArSequence ar_sequence(const MonObject& f);

enum class ArControl { Split, SignCorrupted };
/// Deliberately broken variants of ar_sequence(f) for negative tests.
ArSequence ar_control(const MonObject& f, ArControl kind);

/// alpha with g o alpha == h exactly, if one exists.
std::optional<MonMorphism> lift_through(const MonMorphism& g, const MonMorphism& h);
bool is_split_epi(const MonMorphism& h);

struct ArTestLine {
  int s2 = 0;
  std::size_t classes = 0;
  std::size_t factored = 0;
  bool pass = false;
};
struct ArReport {
  int s = 0;
  int t = 0;
  bool structural = false;
  bool g_split = false;
  bool tau_end_local = false;
  std::vector<ArTestLine> tests;
  std::vector<std::string> notes;
  [[nodiscard]] bool pass() const;
};
/// Enumerates Hom(g', end) modulo null-homotopy for every (S -pi^s'-> S),
/// 0 <= s' <= t, and decides strict factorization through seq.g.
/// Throws InfiniteResidueField or ParametersTooLarge.
ArReport verify_right_almost_split(const ArSequence& seq);

/// Non-invertible endomorphisms closed under addition, by enumeration mod omega.
bool end_ring_is_local(const MonObject& f);

}  // namespace hmon
