// Sparse linear combinations of basis labels with exact rational
// coefficients. Zero coefficients are never stored, so equality of
// combinations is equality of the underlying maps.

#ifndef ALMOSTHOPF_LINCOMB_HPP
#define ALMOSTHOPF_LINCOMB_HPP

#include <functional>
#include <map>
#include <string>

#include "almosthopf/basis_label.hpp"
#include "almosthopf/rational.hpp"

namespace almosthopf {

class LinComb {
 public:
  using Terms = std::map<BasisLabel, Rational>;

  LinComb() = default;

  static LinComb zero() { return LinComb(); }
  static LinComb basis(const BasisLabel& l) { return term(l, Rational(1)); }
  static LinComb term(const BasisLabel& l, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Terms::const_iterator begin() const { return terms_.begin(); }
  Terms::const_iterator end() const { return terms_.end(); }

  // Coefficient of `l`, zero when absent.
  Rational coeff(const BasisLabel& l) const;

  // Accumulates `c` onto the coefficient of `l`, erasing it if it cancels.
  void add_term(const BasisLabel& l, const Rational& c);

  LinComb& operator+=(const LinComb&);
  LinComb& operator-=(const LinComb&);
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  LinComb operator-() const;

  bool operator==(const LinComb&) const = default;

  // "0" for the empty combination, otherwise "c1·l1 + c2·l2 + ..." in label
  // order with canonical "p/q" coefficients.
  std::string to_string() const;
  std::string to_string(
      const std::function<std::string(LabelKind, int)>& name) const;

 private:
  Terms terms_;
};

LinComb scale(const Rational& c, const LinComb& a);

// Bilinear tensor: (Σ cᵢ aᵢ) ⊗ (Σ dⱼ bⱼ) = Σ cᵢdⱼ Pair(aᵢ, bⱼ).
LinComb tensor(const LinComb& a, const LinComb& b);

// Linear extension of a basis map. The table overload throws
// std::out_of_range when a label of `a` has no entry.
using LabelFn = std::function<LinComb(const BasisLabel&)>;
LinComb apply_linear(const std::map<BasisLabel, LinComb>& f, const LinComb& a);
LinComb apply_linear(const LabelFn& f, const LinComb& a);

// Tensor utilities; every term of the argument must be a Pair (and for the
// re-associations, suitably nested), otherwise std::logic_error.
LinComb tensor_swap(const LinComb& a);                  // a⊗b  -> b⊗a
LinComb assoc_to_right(const LinComb& a);               // (a⊗b)⊗c -> a⊗(b⊗c)
LinComb assoc_to_left(const LinComb& a);                // a⊗(b⊗c) -> (a⊗b)⊗c
LinComb apply_to_left(const LabelFn& f, const LinComb& a);   // f⊗id
LinComb apply_to_right(const LabelFn& f, const LinComb& a);  // id⊗f

}  // namespace almosthopf

#endif
