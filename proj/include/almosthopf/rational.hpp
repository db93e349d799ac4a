// Exact rational scalars for the ground field.
// Values are always held in lowest terms with a positive denominator;
// the integer parts are arbitrary precision.

#ifndef ALMOSTHOPF_RATIONAL_HPP
#define ALMOSTHOPF_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

namespace almosthopf {

class Rational {
 public:
  Rational();                      // 0/1
  Rational(long n);                // n/1
  Rational(long num, long den);    // reduced; den == 0 throws
  ~Rational();

  Rational(const Rational&);
  Rational(Rational&&) noexcept;
  Rational& operator=(const Rational&);
  Rational& operator=(Rational&&) noexcept;

  // Accepts "p", "p/q", optional leading '-'; q == 0 or malformed input throws.
  static Rational from_string(const std::string& s);

  bool is_zero() const;
  bool is_one() const;

  // Decimal digits of the reduced numerator and denominator.
  std::string numerator() const;
  std::string denominator() const;

  // Canonical form "p/q", lowest terms, positive q; zero is "0/1".
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational&);
  Rational& operator-=(const Rational&);
  Rational& operator*=(const Rational&);
  Rational& operator/=(const Rational&);   // division by zero throws

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  bool operator==(const Rational&) const;
  std::strong_ordering operator<=>(const Rational&) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::ostream& operator<<(std::ostream&, const Rational&);

}  // namespace almosthopf

#endif
