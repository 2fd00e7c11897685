#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "jordanian/param_matrix.hpp"
#include "jordanian/parameters.hpp"

namespace jordanian {

// Generators of U_{h,s}gl(2). E stands for exp(2h J+) and Einv for its inverse.
enum class Generator { One, J3, Jplus, Jminus, Z, E, Einv };

std::string generator_name(Generator g);

// Product of generators; the empty word is the unit. One never appears.
using Word = std::vector<Generator>;

// Linear combination of words in one tensor leg.
class Element {
 public:
  Element() = default;
  Element(Generator g);  // NOLINT(google-explicit-constructor)
  Element(const Scalar& c);  // NOLINT(google-explicit-constructor)
  Element(long c) : Element(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  const std::map<Word, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(const Word& w, const Scalar& c);

  Element& operator+=(const Element& b);
  Element& operator-=(const Element& b);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(const Element& a) { return Element() - a; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Scalar& c, const Element& a);

  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::map<Word, Scalar> terms_;
};

// Formal sum of tensor products of words with a fixed number of legs.
class TensorExpression {
 public:
  using Legs = std::vector<Word>;

  explicit TensorExpression(std::size_t legs) : legs_(legs) {}
  static TensorExpression tensor(std::span<const Element> factors);
  static TensorExpression tensor(const Element& a, const Element& b);

  std::size_t legs() const noexcept { return legs_; }
  const std::map<Legs, Scalar>& terms() const noexcept { return terms_; }
  void add_term(const Legs& legs, const Scalar& c);

  TensorExpression& operator+=(const TensorExpression& b);
  friend TensorExpression operator+(TensorExpression a, const TensorExpression& b) { return a += b; }
  friend TensorExpression operator-(const TensorExpression& a, const TensorExpression& b);
  friend TensorExpression operator*(const TensorExpression& a, const TensorExpression& b);
  friend TensorExpression operator*(const Scalar& c, const TensorExpression& a);

  friend bool operator==(const TensorExpression&, const TensorExpression&) = default;

 private:
  std::size_t legs_;
  std::map<Legs, Scalar> terms_;
};

// Images of the generators in the fundamental 2x2 representation at colour eta.
ParamMatrix fundamental_image(Generator g, const Colour& eta, const Deformation& p = {});
std::map<Generator, ParamMatrix> fundamental_rep(const Colour& eta, const Deformation& p = {});
// Undeformed gl(2): J3 = diag(1,-1), J+ = e12, J- = e21, Z = eta*I.
ParamMatrix classical_image(Generator g, const Colour& eta);

TensorExpression coproduct(Generator g, const Deformation& p = {});
TensorExpression coproduct(const Word& w, const Deformation& p = {});
TensorExpression coproduct(const Element& x, const Deformation& p = {});
// Applies the coproduct to one leg (0-based), producing legs()+1 legs.
TensorExpression coproduct_on_leg(const TensorExpression& t, std::size_t leg, const Deformation& p = {});

Element antipode(Generator g, const Deformation& p = {});
Element antipode(const Word& w, const Deformation& p = {});
Element antipode(const Element& x, const Deformation& p = {});

Scalar counit(Generator g);
Scalar counit(const Word& w);
Scalar counit(const Element& x);

// Contracts leg 0 with the counit.
TensorExpression counit_on_leg(const TensorExpression& t, std::size_t leg);
// m(gamma (x) id) or m(id (x) gamma) on a two-leg expression.
Element antipode_multiply(const TensorExpression& t, std::size_t antipode_leg, const Deformation& p = {});

ParamMatrix evaluate(const Element& x, const Colour& eta, const Deformation& p = {});
ParamMatrix evaluate(const TensorExpression& t, std::span<const Colour> colours, const Deformation& p = {});

}  // namespace jordanian
