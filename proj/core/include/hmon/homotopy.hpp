#pragma once

#include <optional>
#include <vector>

#include "hmon/mon.hpp"

namespace hmon {

/// (s0, s1) with psi0 f - f' s0 f == omega s1; equivalently
/// psi0 = f' s0 + s1 f_Sigma and psi1 = s0 f + f'_Sigma s1.
struct HomotopyWitness {
  Mat s0;  // Q -> P'
  Mat s1;  // P -> Q'
};

/// Decides null-homotopy through the Smith forms of f and f'.
std::optional<HomotopyWitness> null_homotopy(const MonMorphism& psi);
bool check_witness(const MonMorphism& psi, const HomotopyWitness& w);
/// a == b in HMon.
bool homotopic(const MonMorphism& a, const MonMorphism& b);

struct ProjectiveFactorization {
  MonMorphism alpha;  // src -> l', l' = projective_env(tgt).l
  MonMorphism beta;   // l' -> tgt
};
/// Throws InvalidWitness when w does not witness psi.
ProjectiveFactorization factor_through_projective(const MonMorphism& psi, const HomotopyWitness& w);

struct StableHomModule {
  std::vector<int> lengths;  // sorted, each in (0, t]
  bool operator==(const StableHomModule&) const = default;
};
StableHomModule stable_hom(const MonObject& src, const MonObject& tgt);
/// Length of Hom((S -pi^s-> S), (S -pi^s2-> S)) in HMon, 0 when zero.
int stable_hom_cell(int s, int s2, int t);

MonObject suspend(const MonObject& f);
MonMorphism suspend(const MonMorphism& psi);

struct Cone {
  MonObject C;       // [[f', psi0], [0, -f_Sigma]]
  MonMorphism inj;   // tgt -> C
  MonMorphism proj;  // C -> Sigma src
};
Cone cone(const MonMorphism& psi);

/// A -u-> B -v-> C -w-> Sigma A.
struct Triangle {
  MonMorphism u;
  MonMorphism v;
  MonMorphism w;
};
Triangle standard_triangle(const MonMorphism& psi);
/// Witnesses for v o u, w o v and (Sigma u) o w, or nullopt if one is missing.
std::optional<std::vector<HomotopyWitness>> triangle_nullity(const Triangle& tr);

struct Rotation {
  Triangle rotated;         // B -v-> C -w-> Sigma A -(-Sigma u)-> Sigma B
  MonMorphism iso_witness;  // C(v) -> Sigma A
};
/// Throws NotExactTriangle when the composites are not null-homotopic.
Rotation rotate(const Triangle& tr);

struct Tr3Completion {
  MonMorphism eta;  // C(psi) -> C(eps')
  HomotopyWitness witness;  // for eps o psi - eps' o gamma
  bool left_strict = false;
  bool right_strict = false;
  bool left_homotopy = false;
  bool right_homotopy = false;
};
/// Given psi: f -> f', eps': g -> g', gamma: f -> g, eps: f' -> g' with
/// eps o psi ~ eps' o gamma, completes to eta: C(psi) -> C(eps').
/// Throws SquaresNotHomotopyCommuting.
Tr3Completion complete_morphism_tr3(const MonMorphism& gamma, const MonMorphism& eps, const MonMorphism& psi,
                                    const MonMorphism& eps_prime);

bool is_iso_in_homotopy(const MonMorphism& psi);

struct Octahedron {
  Triangle tri_psi;    // f -> f' -> C(psi)
  Triangle tri_comp;   // f -> f'' -> C(eta psi)
  Triangle tri_eta;    // f' -> f'' -> C(eta)
  MonMorphism phi;     // C(psi) -> C(eta psi)
  MonMorphism gamma;   // C(eta psi) -> C(eta)
  MonMorphism delta;   // C(eta) -> Sigma C(psi)
  Triangle bottom;     // standard triangle of phi
  MonMorphism epsilon; // C(eta) -> C(phi)
  HomotopyWitness epsilon_witness;  // for epsilon o gamma - inj_phi

  bool squares_commute = false;
  bool delta_strict = false;
  bool witness_ok = false;
  bool epsilon_iso = false;
  [[nodiscard]] bool ok() const { return squares_commute && delta_strict && witness_ok && epsilon_iso; }
};
/// psi: f -> f', eta: f' -> f''. Throws NotComposable.
Octahedron octahedron(const MonMorphism& psi, const MonMorphism& eta);

}  // namespace hmon
