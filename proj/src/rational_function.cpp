#include "jordanian/rational_function.hpp"

#include <algorithm>

#include "jordanian/error.hpp"

namespace jordanian {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_constant()) {
    const Polynomial g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  monic_denominator();
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_, Reduced{}}; }

RationalFunction& RationalFunction::operator+=(const RationalFunction& b) {
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  if (den_ == b.den_) {
    num_ += b.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = Polynomial(1);
    return *this;
  }
  if (b.den_.is_one()) {
    num_ += b.num_ * den_;
    return *this;  // still coprime to den_
  }
  if (den_.is_one()) {
    num_ = num_ * b.den_ + b.num_;
    den_ = b.den_;
    return *this;
  }
  // Both operands are reduced, so only a factor of gcd(den, b.den) can cancel.
  const Polynomial g = gcd(den_, b.den_);
  const Polynomial da = exact_quotient(den_, g);
  const Polynomial db = exact_quotient(b.den_, g);
  num_ = num_ * db + b.num_ * da;
  den_ = da * b.den_;
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return *this;
  }
  if (!g.is_one()) {
    const Polynomial c = gcd(num_, g);
    if (!c.is_one()) {
      num_ = exact_quotient(num_, c);
      den_ = exact_quotient(den_, c);
    }
  }
  monic_denominator();
  return *this;
}

void RationalFunction::monic_denominator() {
  if (den_.leading_coeff() != 1) {
    const Rational inv = 1 / den_.leading_coeff();
    num_ *= inv;
    den_ *= inv;
  }
}

// Product of reduced quotients, cancelling only across the two operands.
void RationalFunction::multiply_reduced(const Polynomial& n, const Polynomial& d) {
  const Polynomial g1 = gcd(num_, d);
  const Polynomial g2 = gcd(n, den_);
  num_ = exact_quotient(num_, g1) * exact_quotient(n, g2);
  den_ = exact_quotient(den_, g2) * exact_quotient(d, g1);
  monic_denominator();
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& b) { return *this += -b; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& b) {
  if (is_zero() || b.is_zero()) return *this = RationalFunction{};
  if (den_.is_one() && b.den_.is_one()) {
    num_ *= b.num_;
    return *this;
  }
  if (b.is_constant()) {
    num_ *= b.num_.leading_coeff();
    return *this;
  }
  multiply_reduced(b.num_, b.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
  if (b.is_constant()) {
    num_ *= Rational(1 / b.num_.leading_coeff());
    return *this;
  }
  if (is_zero()) return *this;
  multiply_reduced(b.den_, b.num_);
  return *this;
}

RationalFunction RationalFunction::pow(int n) const {
  if (n < 0) {
    if (is_zero()) throw DivisionByZero("negative power of zero");
    return RationalFunction(den_.pow(static_cast<unsigned>(-n)), num_.pow(static_cast<unsigned>(-n)));
  }
  return RationalFunction(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)), Reduced{});
}

namespace {

RationalFunction substitute_polynomial(const Polynomial& p,
                                       const std::map<Symbol, RationalFunction>& bindings) {
  RationalFunction out;
  for (const auto& t : p.terms()) {
    RationalFunction term(t.coeff);
    Monomial kept;
    for (const auto& [sym, e] : t.monomial.factors()) {
      auto it = bindings.find(sym);
      if (it == bindings.end()) {
        kept = kept * Monomial::variable(sym, e);
      } else {
        term *= it->second.pow(static_cast<int>(e));
      }
    }
    term *= RationalFunction(Polynomial(kept, 1));
    out += term;
  }
  return out;
}

}  // namespace

RationalFunction RationalFunction::substitute(
    const std::map<Symbol, RationalFunction>& bindings) const {
  if (bindings.empty()) return *this;
  const RationalFunction n = substitute_polynomial(num_, bindings);
  if (den_.is_one()) return n;
  const RationalFunction d = substitute_polynomial(den_, bindings);
  if (d.is_zero()) throw DivisionByZero("denominator vanishes under substitution");
  return n / d;
}

Rational RationalFunction::evaluate(const std::map<Symbol, Rational>& point) const {
  const Rational d = den_.evaluate(point);
  if (sgn(d) == 0) throw DivisionByZero("denominator vanishes at evaluation point");
  return num_.evaluate(point) / d;
}

std::vector<Symbol> RationalFunction::symbols() const {
  auto out = num_.symbols();
  for (Symbol x : den_.symbols()) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::strong_ordering operator<=>(const RationalFunction& a, const RationalFunction& b) {
  if (auto c = a.num_ <=> b.num_; c != 0) return c;
  return a.den_ <=> b.den_;
}

}  // namespace jordanian
