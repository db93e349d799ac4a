// Matched pairs of almost groups: two carriers acting on one another through
// dense index tables, an exhaustive rule verifier, and the doublecross
// product built from the actions.

#ifndef ALMOSTHOPF_MATCHED_PAIR_HPP
#define ALMOSTHOPF_MATCHED_PAIR_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "almosthopf/almost_group.hpp"

namespace almosthopf {

struct MatchedPair {
  AlmostGroup g;
  AlmostGroup m;
  // right_table[s][u] is the G-index of s▷u, left_table[s][u] the M-index
  // of s◁u; both are |M| x |G|.
  std::vector<std::vector<int>> right_table;
  std::vector<std::vector<int>> left_table;

  // Checked lookups; throw std::out_of_range.
  int right(int s, int u) const;
  int left(int s, int u) const;

  bool operator==(const MatchedPair&) const = default;
};

// Shape validation only (table dimensions and index ranges); throws
// std::invalid_argument. Rule checking is verify_matched's job.
MatchedPair build_matched_pair(AlmostGroup g, AlmostGroup m,
                               std::vector<std::vector<int>> right_table,
                               std::vector<std::vector<int>> left_table);

// s▷u = u and s◁u = s. Throws PreconditionError unless both carriers pass
// verify_axioms.
MatchedPair trivial_pair(const AlmostGroup& g, const AlmostGroup& m);

// Z/2 acting on Z/n by negation: s▷u = (-1)^s u, s◁u = s. Nontrivial from
// n = 3 on; the doublecross product is the dihedral group on 2n elements.
MatchedPair inversion_pair(int n);

// Exhaustive verification. Rules, in report order:
//   g-axioms, m-axioms         the carriers individually verify
//   left-over-g-product        s◁(uv) = (s◁u)◁v
//   left-over-m-product        (st)◁u = (s◁(t▷u))(t◁u)
//   right-over-m-product       (st)▷u = s▷(t▷u)
//   right-over-g-product       s▷(uv) = (s▷u)((s◁u)▷v)
//   involution-right           (s◁u)^i ▷ (s▷u)^i = u^i
//   involution-left            (s◁u)^i ◁ (s▷u)^i = s^i
//   vacuum-m                   j▷u = u and j◁u = j for j in J_M
//   vacuum-g                   s▷j = j and s◁j = s for j in J_G
//   norm-left                  (s◁w)^i(s◁w) = ss^i = s^i s
//   norm-right                 (s▷w)(s▷w)^i = ww^i = w^i w
// The two norm rules follow from the others on verified carriers; they are
// checked anyway because the bicrossproduct construction leans on them.
AxiomReport verify_matched(const MatchedPair& mp);

// Doublecross product on the carrier G x M, indexed u*|M|+s:
//   (u,s)(v,t) = (u(s▷v), (s◁v)t)
//   (u,s)^i    = (s^i▷u^i, s^i◁u^i)
//   J          = J_G x J_M
// Throws PreconditionError when verify_matched fails.
AlmostGroup doublecross(const MatchedPair& mp);

// Text format: a `G <path>` line and an `M <path>` line naming .agrp files
// (resolved by parse_mpair_file against the .mpair file's directory), then
// one `right <s> <u> : <g>` and one `left <s> <u> : <m>` line for every
// (s,u). Missing or repeated entries are parse errors.
MatchedPair parse_mpair_file(const std::string& path);
std::string serialize_mpair(const MatchedPair& mp, const std::string& g_ref,
                            const std::string& m_ref);

}  // namespace almosthopf

#endif
