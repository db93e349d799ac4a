// The bicrossproduct almost Hopf algebra built from a matched pair, its
// dual, the pairing between them, the star operation on both sides, and the
// inverse/T-map machinery that exhibits the two as isomorphic.
//
// Basis layout on both sides is row-major in (s, u) with s from M and u
// from G, so the Kronecker pairing matches equal indices.

#ifndef ALMOSTHOPF_BICROSS_HPP
#define ALMOSTHOPF_BICROSS_HPP

#include <vector>

#include "almosthopf/hopf.hpp"
#include "almosthopf/matched_pair.hpp"

namespace almosthopf {

// kM ▷◀ k(G): basis Pair(GroupElem(s), DeltaElem(u)), construction tag
// "bicross". Structure maps:
//   (s⊗δ_u)(t⊗δ_v) = [u = t▷v] st⊗δ_v
//   Δ(s⊗δ_u)       = Σ_{xy=u} (s⊗δ_x) ⊗ ((s◁x)⊗δ_y)
//   S(s⊗δ_u)       = (s◁u)^i ⊗ δ_{(s▷u)^i}
//   ε(s⊗δ_u)       = [u ∈ J_G] ss^i⊗δ_u
//   η(j⊗δ_n)       = Σ_{zz^i=n} j⊗δ_z
struct BicrossAlgebra {
  AlmostHopfStructure h;
  MatchedPair source;
};

// k(M) ◀▶ kG: basis Pair(DeltaElem(s), GroupElem(u)), tag "dualBicross".
//   (δ_s⊗u)(δ_t⊗v) = [s◁u = t] δ_s⊗uv
//   Δ(δ_s⊗u)       = Σ_{ab=s} (δ_a⊗(b▷u)) ⊗ (δ_b⊗u)
//   S(δ_s⊗u)       = δ_{(s◁u)^i} ⊗ (s▷u)^i
//   ε(δ_s⊗u)       = [s ∈ J_M] δ_s⊗uu^i
//   η(δ_j⊗n)       = Σ_{aa^i=j} δ_a⊗n
struct DualBicrossAlgebra {
  AlmostHopfStructure h;
  MatchedPair source;
};

// Both throw PreconditionError when verify_matched fails.
BicrossAlgebra bicrossproduct(const MatchedPair& mp);
DualBicrossAlgebra dual_bicrossproduct(const MatchedPair& mp);

// Bilinear extension of ⟨δ_s⊗u, t⊗δ_v⟩ = [s=t][u=v]. Throws
// std::invalid_argument when the algebras come from different matched pairs
// or a term is not a basis label of its side.
Rational pairing(const DualBicrossAlgebra& hp, const LinComb& x,
                 const BicrossAlgebra& h, const LinComb& y);

// Exhaustive duality check between the two constructions. Rules:
//   unit-counit-duality          ⟨ε'x', a⟩ = ⟨x', ηa⟩ and ⟨η'a', y⟩ = ⟨a', εy⟩
//   antipode-duality             ⟨S'x', y⟩ = ⟨x', Sy⟩
//   product-coproduct-duality    ⟨x'x'', y⟩ = ⟨x'⊗x'', Δy⟩
//   coproduct-product-duality    ⟨x', yy'⟩ = ⟨Δ'x', y⊗y'⟩
CheckReport verify_duality(const DualBicrossAlgebra& hp,
                           const BicrossAlgebra& h);
CheckReport verify_duality(const MatchedPair& mp);

// (s⊗δ_u)* = s^i ⊗ δ_{s▷u} on H; (δ_s⊗u)* = δ_{s◁u} ⊗ u^i on H'. Over the
// rationals conjugate-linear extension coincides with linear extension.
LinComb star(const BicrossAlgebra& h, const BasisLabel& x);
LinComb star(const BicrossAlgebra& h, const LinComb& x);
LinComb star_dual(const DualBicrossAlgebra& hp, const BasisLabel& x);
LinComb star_dual(const DualBicrossAlgebra& hp, const LinComb& x);

// Exhaustive star checks against explicit star tables (star_h[i] is the star
// of basis element i, likewise star_hp on the dual side). Rules, each with a
// "star-dual-..." twin for the dual algebra:
//   star-involution              (x*)* = x
//   star-antimultiplicative      (xy)* = y*x*
//   star-comultiplicative        Δ(x*) = (*⊗*)(Δx)
//   star-unit                    η(a)* = η(a*)
//   star-counit                  ε(x*) = ε(x)*
//   star-antipode                (Sx)* = S(x*)
CheckReport verify_star_tables(const BicrossAlgebra& h,
                               const DualBicrossAlgebra& hp,
                               const std::vector<LinComb>& star_h,
                               const std::vector<LinComb>& star_hp);
CheckReport verify_star(const MatchedPair& mp);

// Inversion data for a matched pair whose doublecross product is a group:
// inv_g[u] names u's inverse inside M, inv_m[s] names s's inverse inside G,
// dx_inverse indexes the doublecross carrier (u*|M|+s layout).
struct InverseData {
  std::vector<int> inv_g;
  std::vector<int> inv_m;
  std::vector<int> dx_inverse;

  bool operator==(const InverseData&) const = default;
};

// Scans the doublecross table for the identity and two-sided inverses, then
// reads the cross-carrier inverses off the embedded elements: an inverse of
// (u, e_M) of the literal form (e_G, m) gives inv_g[u] = m directly, and one
// of the form (g, e_M) gives the M element sharing g's label when there is
// one. Throws PreconditionError when any step fails.
InverseData derive_inverse_data(const MatchedPair& mp);

// The five mutually-inverse conditions, one rule each:
//   dx-group                 doublecross has an identity and dx_inverse is
//                            a two-sided inverse for it
//   inverse-maps             inv_g and inv_m are mutually inverse bijections
//                            that reverse products and commute with i
//   inverse-j-bijection      inv_g restricts to a bijection J_G -> J_M
//   involution-compatible    dx_inverse(x^i) = (dx_inverse x)^i
//   action-inversion         u⁻¹▷s⁻¹ = (s◁u)⁻¹ and u⁻¹◁s⁻¹ = (s▷u)⁻¹
// Throws std::invalid_argument on malformed data shapes and
// PreconditionError when the matched pair itself fails verification.
CheckReport check_mutually_inverse(const MatchedPair& mp,
                                   const InverseData& data);

// T(s⊗δ_u) = δ_{u⁻¹} ⊗ s⁻¹ with u⁻¹ = inv_g[u], s⁻¹ = inv_m[s]; basis
// labels map to basis labels. t_j_map is the restriction to the H_J basis
// and throws PreconditionError off it.
LinComb t_map(const BicrossAlgebra& h, const DualBicrossAlgebra& hp,
              const InverseData& data, const BasisLabel& x);
LinComb t_map(const BicrossAlgebra& h, const DualBicrossAlgebra& hp,
              const InverseData& data, const LinComb& x);
LinComb t_j_map(const BicrossAlgebra& h, const DualBicrossAlgebra& hp,
                const InverseData& data, const BasisLabel& x);

// T alone against every structure map, one rule per identity:
//   t-antimultiplicative     T(xy) = T(y)T(x)
//   t-anticomultiplicative   (T⊗T)(Δx) = flip(Δ'(Tx))
//   t-antipode-commute       S'(Tx) = T(Sx)
//   t-star-commute           (Tx)* = T(x*)
//   t-unit                   T(η(a)) = η'(T(a))
//   t-counit                 ε'(Tx) = T(ε(x))
CheckReport check_t_properties(const BicrossAlgebra& h,
                               const DualBicrossAlgebra& hp,
                               const InverseData& data);

// The composite TS as an isomorphism from H onto H'. Rules:
//   ts-bijective             TS permutes the paired bases
//   ts-multiplicative        TS(xy) = TS(x)TS(y)
//   ts-comultiplicative      (TS⊗TS)(Δx) = Δ'(TS x)
//   ts-counit                ε'(TS x) = TS(ε x)
//   ts-unit                  TS(η(a)) = η'(TS a)
//   ts-antipode              S'(TS x) = TS(S x)
CheckReport verify_self_duality(const MatchedPair& mp,
                                const InverseData& data);
CheckReport verify_self_duality(const MatchedPair& mp);

}  // namespace almosthopf

#endif
