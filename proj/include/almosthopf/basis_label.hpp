// Structured names for basis vectors: group-like elements, delta functions,
// and tensor pairs of labels. Pairs nest, so triple tensors are represented
// right-associated as Pair(a, Pair(b, c)).

#ifndef ALMOSTHOPF_BASIS_LABEL_HPP
#define ALMOSTHOPF_BASIS_LABEL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace almosthopf {

enum class LabelKind { GroupElem, DeltaElem, Pair };

class BasisLabel {
 public:
  static BasisLabel group_elem(int index);
  static BasisLabel delta_elem(int index);
  static BasisLabel pair(const BasisLabel& left, const BasisLabel& right);

  LabelKind kind() const;

  // Leaf accessors; throw when called on a Pair.
  int index() const;

  // Pair accessors; throw when called on a leaf.
  BasisLabel left() const;
  BasisLabel right() const;

  bool operator==(const BasisLabel&) const = default;
  auto operator<=>(const BasisLabel&) const = default;

  // Structural rendering: "g3", "d2", "(g1⊗d0)". `name` (when given) maps a
  // leaf to the element label of its carrier.
  std::string to_string() const;
  std::string to_string(
      const std::function<std::string(LabelKind, int)>& name) const;

 private:
  BasisLabel() = default;
  // Preorder encoding; leaves occupy two slots (tag, index), pairs one tag
  // slot followed by both sub-encodings.
  std::vector<int32_t> code_;
};

}  // namespace almosthopf

#endif
