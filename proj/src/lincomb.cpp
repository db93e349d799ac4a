#include "almosthopf/lincomb.hpp"

#include <stdexcept>

namespace almosthopf {

LinComb LinComb::term(const BasisLabel& l, const Rational& c) {
  LinComb r;
  r.add_term(l, c);
  return r;
}

Rational LinComb::coeff(const BasisLabel& l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? Rational() : it->second;
}

void LinComb::add_term(const BasisLabel& l, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(l, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LinComb& LinComb::operator+=(const LinComb& o) {
  for (const auto& [l, c] : o.terms_) add_term(l, c);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& o) {
  for (const auto& [l, c] : o.terms_) add_term(l, -c);
  return *this;
}

LinComb LinComb::operator-() const {
  LinComb r;
  for (const auto& [l, c] : terms_) r.terms_.emplace(l, -c);
  return r;
}

std::string LinComb::to_string() const {
  return to_string([](LabelKind k, int i) {
    return (k == LabelKind::GroupElem ? "g" : "d") + std::to_string(i);
  });
}

std::string LinComb::to_string(
    const std::function<std::string(LabelKind, int)>& name) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [l, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.to_string() + "·" + l.to_string(name);
  }
  return out;
}

LinComb scale(const Rational& c, const LinComb& a) {
  LinComb r;
  if (c.is_zero()) return r;
  for (const auto& [l, d] : a) r.add_term(l, c * d);
  return r;
}

LinComb tensor(const LinComb& a, const LinComb& b) {
  LinComb r;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b)
      r.add_term(BasisLabel::pair(la, lb), ca * cb);
  return r;
}

LinComb apply_linear(const std::map<BasisLabel, LinComb>& f, const LinComb& a) {
  LinComb r;
  for (const auto& [l, c] : a) {
    auto it = f.find(l);
    if (it == f.end())
      throw std::out_of_range("apply_linear: undefined label " + l.to_string());
    r += scale(c, it->second);
  }
  return r;
}

LinComb apply_linear(const LabelFn& f, const LinComb& a) {
  LinComb r;
  for (const auto& [l, c] : a) r += scale(c, f(l));
  return r;
}

namespace {

BasisLabel require_pair(const BasisLabel& l, const char* who) {
  if (l.kind() != LabelKind::Pair)
    throw std::logic_error(std::string(who) + ": term is not a tensor: " +
                           l.to_string());
  return l;
}

}  // namespace

LinComb tensor_swap(const LinComb& a) {
  LinComb r;
  for (const auto& [l, c] : a) {
    require_pair(l, "tensor_swap");
    r.add_term(BasisLabel::pair(l.right(), l.left()), c);
  }
  return r;
}

LinComb assoc_to_right(const LinComb& a) {
  LinComb r;
  for (const auto& [l, c] : a) {
    require_pair(l, "assoc_to_right");
    BasisLabel ab = require_pair(l.left(), "assoc_to_right");
    r.add_term(
        BasisLabel::pair(ab.left(), BasisLabel::pair(ab.right(), l.right())),
        c);
  }
  return r;
}

LinComb assoc_to_left(const LinComb& a) {
  LinComb r;
  for (const auto& [l, c] : a) {
    require_pair(l, "assoc_to_left");
    BasisLabel bc = require_pair(l.right(), "assoc_to_left");
    r.add_term(
        BasisLabel::pair(BasisLabel::pair(l.left(), bc.left()), bc.right()),
        c);
  }
  return r;
}

LinComb apply_to_left(const LabelFn& f, const LinComb& a) {
  LinComb r;
  for (const auto& [l, c] : a) {
    require_pair(l, "apply_to_left");
    r += scale(c, tensor(f(l.left()), LinComb::basis(l.right())));
  }
  return r;
}

LinComb apply_to_right(const LabelFn& f, const LinComb& a) {
  LinComb r;
  for (const auto& [l, c] : a) {
    require_pair(l, "apply_to_right");
    r += scale(c, tensor(LinComb::basis(l.left()), f(l.right())));
  }
  return r;
}

}  // namespace almosthopf
