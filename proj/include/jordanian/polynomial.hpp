#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "jordanian/symbol.hpp"

namespace jordanian {

using Rational = mpq_class;

// Power product of parameter symbols. Factors are kept sorted by symbol order
// and never carry a zero exponent.
class Monomial {
 public:
  using Factor = std::pair<Symbol, unsigned>;

  Monomial() = default;
  static Monomial variable(Symbol x, unsigned exponent = 1);

  unsigned degree() const noexcept { return degree_; }
  unsigned exponent(Symbol x) const noexcept;
  std::span<const Factor> factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }

  bool divides(const Monomial& other) const noexcept;
  // Requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial without(Symbol x) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.factors_ == b.factors_;
  }
  // Graded lexicographic: higher total degree is greater; ties are broken by
  // exponent of h, then s, then colour symbols.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

// Multivariate polynomial over Q in canonical form: terms sorted from the
// leading (greatest) monomial down, no zero coefficients.
class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const Rational& constant);
  explicit Polynomial(Symbol x);
  Polynomial(Monomial m, const Rational& coeff);

  // Sorts and merges arbitrary terms.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;
  // Coefficient of the unit monomial.
  Rational constant_term() const;
  // Requires a nonzero polynomial.
  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  unsigned total_degree() const noexcept;
  unsigned degree_in(Symbol x) const noexcept;
  // Smallest total degree in the given symbols over all terms.
  unsigned min_degree_in(std::span<const Symbol> symbols) const noexcept;
  std::vector<Symbol> symbols() const;
  bool contains(Symbol x) const noexcept;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  Polynomial pow(unsigned n) const;
  // Scales so that the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;

  // Simultaneous polynomial substitution; unbound symbols are kept.
  Polynomial substitute(const std::map<Symbol, Polynomial>& bindings) const;
  // Every symbol must be bound.
  Rational evaluate(const std::map<Symbol, Rational>& point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<Term> terms_;
};

// Quotient when b divides a exactly; throws InexactDivision otherwise and
// DivisionByZero for b = 0.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& b, const Polynomial& a);

// Monic greatest common divisor over Q (gcd(0, 0) = 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

std::strong_ordering compare_rational(const Rational& a, const Rational& b);

}  // namespace jordanian
