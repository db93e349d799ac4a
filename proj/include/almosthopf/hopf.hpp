// Finite-dimensional almost Hopf algebras as explicit structure-constant
// tables, the two constructions over an almost group (functions on it, and
// its group-like algebra), and the exhaustive axiom verifier.
//
// The counit lands in the distinguished subalgebra H_J rather than the
// scalars, the counit law holds only up to a tensor flip, and the unit
// exchange law is only required against H_J; the verifier checks exactly
// that, so classical Hopf counterexamples here are not bugs.

#ifndef ALMOSTHOPF_HOPF_HPP
#define ALMOSTHOPF_HOPF_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "almosthopf/almost_group.hpp"
#include "almosthopf/lincomb.hpp"
#include "almosthopf/report.hpp"
#include "json.hpp"

namespace almosthopf {

struct AlmostHopfStructure {
  std::vector<BasisLabel> basis;          // index -> label
  std::vector<int> j_basis;               // basis indices of H_J, ascending
  std::vector<std::vector<LinComb>> mul;  // N x N
  std::vector<LinComb> comul;             // N, values in H (x) H
  std::vector<LinComb> counit;            // N, values in the H_J span
  std::vector<LinComb> unit;              // one per j_basis entry, in order
  std::vector<LinComb> antipode;          // N
  std::string construction;
  // Renders a leaf label against the carriers this structure was built over.
  std::function<std::string(LabelKind, int)> leaf_name;

  std::size_t dim() const { return basis.size(); }

  // Index of a basis label; -1 when it is not a basis element.
  int index_of(const BasisLabel& l) const;
  bool label_in_j(const BasisLabel& l) const;

  // Position of a label inside j_basis, -1 when absent.
  int j_position(const BasisLabel& l) const;

  // Linear extensions of the tables. unit_lc throws PreconditionError when
  // its argument is not supported on j_basis labels.
  LinComb mul_lc(const LinComb& a, const LinComb& b) const;
  LinComb comul_lc(const LinComb& a) const;
  LinComb counit_lc(const LinComb& a) const;
  LinComb antipode_lc(const LinComb& a) const;
  LinComb unit_lc(const LinComb& a) const;

  // Componentwise product on H (x) H: (a⊗b)(c⊗d) = ac ⊗ bd.
  LinComb mul_tensor(const LinComb& a, const LinComb& b) const;

  // Multiplies the two legs of every tensor term: a⊗b -> ab.
  LinComb fold_mul(const LinComb& a) const;

  std::string render(const LinComb& a) const;
  std::string render(const BasisLabel& l) const;
};

using HopfReport = CheckReport;

// Functions on an almost group: delta functions multiply as projections,
// the coproduct sums over factorizations, the antipode pulls back along i.
// Throws PreconditionError when g fails verify_axioms.
AlmostHopfStructure function_algebra(const AlmostGroup& g);

// The linearized structure itself: elements are group-like up to the
// J-valued counit x x^i. Throws PreconditionError when g fails verify_axioms.
AlmostHopfStructure group_algebra(const AlmostGroup& g);

// Exhaustive verification over all basis tuples:
//   hj-commutative, hj-closed      the span of j_basis is commutative, closed
//   assoc                          associativity of mul
//   coassoc                        coassociativity of comul
//   counit-twisted                 (eps⊗id)Δ = flip∘(id⊗eps)Δ
//   unit-exchange                  unit(j)·x = x·unit(j) for j-basis j
//   antipode                       mul(S⊗id)Δ = mul(id⊗S)Δ = unit∘counit
//   comul-multiplicative           Δ(xy) = Δx · Δy
//   counit-multiplicative          eps(xy) = eps(x)eps(y)
//   unit-multiplicative            unit(ab) = unit(a)unit(b) on j_basis
//   counit-into-j                  eps lands in the j_basis span
HopfReport verify_hopf(const AlmostHopfStructure& h);

// S(xy) = S(y)S(x) on every basis pair.
CheckReport check_antipode_antimul(const AlmostHopfStructure& h);

// flip∘Δ∘S = (S⊗S)∘Δ on every basis element.
CheckReport check_antipode_anticomul(const AlmostHopfStructure& h);

// S restricts to the j-span and commutes with counit and unit:
// S(j-span) ⊆ j-span, eps∘S = S∘eps, S∘unit = unit∘S.
CheckReport check_antipode_j_compat(const AlmostHopfStructure& h);

// Structure constants as JSON, every list in ascending index order, so a
// given structure always serializes to identical bytes.
nlohmann::json export_structure_json(const AlmostHopfStructure& h);

}  // namespace almosthopf

#endif
