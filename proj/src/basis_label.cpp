#include "almosthopf/basis_label.hpp"

#include <stdexcept>

namespace almosthopf {

namespace {

constexpr int32_t kGroupTag = 0;
constexpr int32_t kDeltaTag = 1;
constexpr int32_t kPairTag = 2;

// Length of the encoding starting at `pos`.
std::size_t subtree_len(const std::vector<int32_t>& code, std::size_t pos) {
  if (code[pos] != kPairTag) return 2;
  std::size_t l = subtree_len(code, pos + 1);
  std::size_t r = subtree_len(code, pos + 1 + l);
  return 1 + l + r;
}

}  // namespace

BasisLabel BasisLabel::group_elem(int index) {
  if (index < 0) throw std::invalid_argument("BasisLabel: negative index");
  BasisLabel b;
  b.code_ = {kGroupTag, index};
  return b;
}

BasisLabel BasisLabel::delta_elem(int index) {
  if (index < 0) throw std::invalid_argument("BasisLabel: negative index");
  BasisLabel b;
  b.code_ = {kDeltaTag, index};
  return b;
}

BasisLabel BasisLabel::pair(const BasisLabel& left, const BasisLabel& right) {
  BasisLabel b;
  b.code_.reserve(1 + left.code_.size() + right.code_.size());
  b.code_.push_back(kPairTag);
  b.code_.insert(b.code_.end(), left.code_.begin(), left.code_.end());
  b.code_.insert(b.code_.end(), right.code_.begin(), right.code_.end());
  return b;
}

LabelKind BasisLabel::kind() const {
  switch (code_[0]) {
    case kGroupTag: return LabelKind::GroupElem;
    case kDeltaTag: return LabelKind::DeltaElem;
    default: return LabelKind::Pair;
  }
}

int BasisLabel::index() const {
  if (code_[0] == kPairTag)
    throw std::logic_error("BasisLabel: index() on a pair");
  return code_[1];
}

BasisLabel BasisLabel::left() const {
  if (code_[0] != kPairTag)
    throw std::logic_error("BasisLabel: left() on a leaf");
  std::size_t l = subtree_len(code_, 1);
  BasisLabel b;
  b.code_.assign(code_.begin() + 1, code_.begin() + 1 + l);
  return b;
}

BasisLabel BasisLabel::right() const {
  if (code_[0] != kPairTag)
    throw std::logic_error("BasisLabel: right() on a leaf");
  std::size_t l = subtree_len(code_, 1);
  BasisLabel b;
  b.code_.assign(code_.begin() + 1 + l, code_.end());
  return b;
}

std::string BasisLabel::to_string() const {
  return to_string([](LabelKind k, int i) {
    return (k == LabelKind::GroupElem ? "g" : "d") + std::to_string(i);
  });
}

std::string BasisLabel::to_string(
    const std::function<std::string(LabelKind, int)>& name) const {
  switch (kind()) {
    case LabelKind::GroupElem:
      return name(LabelKind::GroupElem, index());
    case LabelKind::DeltaElem:
      return name(LabelKind::DeltaElem, index());
    default:
      return "(" + left().to_string(name) + "⊗" + right().to_string(name) +
             ")";
  }
}

}  // namespace almosthopf
