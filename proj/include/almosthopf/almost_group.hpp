// Finite multiplicative structures with an order-two anti-automorphism i and
// a central "vacuum" subset J that absorbs every g·g^i. Ordinary groups are
// the special case J = {e}, i = inverse; the interesting examples are not
// groups at all.

#ifndef ALMOSTHOPF_ALMOST_GROUP_HPP
#define ALMOSTHOPF_ALMOST_GROUP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "almosthopf/report.hpp"

namespace almosthopf {

struct AlmostGroup {
  std::vector<std::string> elements;     // unique labels, N >= 1
  std::vector<std::vector<int>> mul;     // N x N table of element indices
  std::vector<int> inv;                  // the map i, as indices
  std::vector<bool> in_j;                // J membership per element

  std::size_t size() const { return elements.size(); }

  // Range-checked table access; std::out_of_range on bad indices.
  int mul_at(int a, int b) const;
  int i_at(int g) const;
  bool is_j(int g) const;

  // Index of a label, -1 when absent.
  int index_of(const std::string& label) const;

  bool operator==(const AlmostGroup&) const = default;
};

using AxiomReport = CheckReport;

// Validates shapes only (sizes, index ranges, duplicate labels); axioms are
// deliberately not checked here so that violating structures can be built as
// negative fixtures. Throws std::invalid_argument.
AlmostGroup build_almost_group(std::vector<std::string> elements,
                               std::vector<std::vector<int>> mul,
                               std::vector<int> inv,
                               const std::vector<int>& j_indices);

// Exhaustive check of every structure axiom:
//   assoc               (gh)k = g(hk)
//   anti-involution     (gh)^i = h^i g^i
//   involution          (g^i)^i = g
//   central-j           jg = gj for j in J
//   norm-in-j           g g^i = g^i g and g g^i lies in J
//   j-closed-mul        J closed under multiplication
//   j-closed-inv        J closed under i
AxiomReport verify_axioms(const AlmostGroup& g);

// Wraps a group Cayley table: i becomes the group inverse and J = {e}.
// Throws PreconditionError when the table is not a group with the given
// identity (associativity, identity law, two-sided inverses).
AlmostGroup from_group(std::vector<std::string> elements,
                       std::vector<std::vector<int>> cayley,
                       const std::string& identity_label);

// A x A with componentwise product, (a,b)^i = (b,a), J = the diagonal.
// Requires A to be an abelian group table; throws PreconditionError.
AlmostGroup pair_construction(const AlmostGroup& a);

// Small standard structures used across the test suites.
AlmostGroup cyclic_group(int n);
AlmostGroup symmetric_group_3();
AlmostGroup group_product(const AlmostGroup& a, const AlmostGroup& b);
// Three elements, every product equals the first, i = id, J = first two.
AlmostGroup constant_product_structure();
// Three elements, first is an identity, all other products collapse to the
// second, i = id, J = first two.
AlmostGroup unital_collapse_structure();

// Line-oriented text format:
//   elements a b c
//   row a : a a a        (one row per element, in element order)
//   row b : ...
//   i a b c              (images of the elements, in order)
//   J a b
// '#' starts a comment, blank lines are ignored. Throws ParseError.
AlmostGroup parse_agrp(std::istream& in);
AlmostGroup parse_agrp_file(const std::string& path);
std::string serialize_agrp(const AlmostGroup& g);

}  // namespace almosthopf

#endif
