#pragma once

#include <compare>
#include <map>

#include "jordanian/polynomial.hpp"

namespace jordanian {

// Reduced quotient of polynomials. The denominator is nonzero, monic under the
// monomial order and coprime to the numerator; polynomial values have
// denominator 1. Equality is structural.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(Symbol x) : num_(x), den_(1) {}  // NOLINT
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT
  // Reduces; throws DivisionByZero when den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_one(); }
  // Requires is_constant().
  Rational constant_value() const { return num_.constant_term(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& b);
  RationalFunction& operator-=(const RationalFunction& b);
  RationalFunction& operator*=(const RationalFunction& b);
  RationalFunction& operator/=(const RationalFunction& b);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  RationalFunction pow(int n) const;

  // Simultaneous substitution; throws DivisionByZero if the denominator
  // vanishes under the bindings.
  RationalFunction substitute(const std::map<Symbol, RationalFunction>& bindings) const;
  Rational evaluate(const std::map<Symbol, Rational>& point) const;

  std::vector<Symbol> symbols() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
  friend std::strong_ordering operator<=>(const RationalFunction& a, const RationalFunction& b);

 private:
  struct Reduced {};
  RationalFunction(Polynomial num, Polynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  void monic_denominator();
  void multiply_reduced(const Polynomial& n, const Polynomial& d);

  Polynomial num_;
  Polynomial den_;
};

using Scalar = RationalFunction;

}  // namespace jordanian
