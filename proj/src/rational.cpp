// GMP-backed implementation of the Rational type. The wrapper keeps values
// canonicalized (lowest terms, positive denominator) after every operation.

#include "almosthopf/rational.hpp"

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>

namespace almosthopf {

struct Rational::Impl {
  mpq_class v;
};

Rational::Rational() : impl_(new Impl{mpq_class(0)}) {}

Rational::Rational(long n) : impl_(new Impl{mpq_class(n)}) {}

Rational::Rational(long num, long den) : impl_(new Impl{}) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  impl_->v = mpq_class(num, den);
  impl_->v.canonicalize();
}

Rational::~Rational() = default;
Rational::Rational(const Rational& o) : impl_(new Impl{o.impl_->v}) {}
Rational::Rational(Rational&&) noexcept = default;

Rational& Rational::operator=(const Rational& o) {
  if (this != &o) impl_->v = o.impl_->v;
  return *this;
}

Rational& Rational::operator=(Rational&&) noexcept = default;

Rational Rational::from_string(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational: malformed literal '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  q.canonicalize();
  Rational r;
  r.impl_->v = q;
  return r;
}

bool Rational::is_zero() const { return impl_->v == 0; }
bool Rational::is_one() const { return impl_->v == 1; }

std::string Rational::numerator() const { return impl_->v.get_num().get_str(); }
std::string Rational::denominator() const { return impl_->v.get_den().get_str(); }

std::string Rational::to_string() const {
  return numerator() + "/" + denominator();
}

Rational Rational::operator-() const {
  Rational r;
  r.impl_->v = -impl_->v;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  impl_->v += o.impl_->v;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  impl_->v -= o.impl_->v;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  impl_->v *= o.impl_->v;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  impl_->v /= o.impl_->v;
  return *this;
}

bool Rational::operator==(const Rational& o) const {
  return impl_->v == o.impl_->v;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  int c = cmp(impl_->v, o.impl_->v);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace almosthopf
