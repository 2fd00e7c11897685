#include "jordanian/hopf_structure.hpp"

#include <algorithm>

#include "jordanian/error.hpp"

namespace jordanian {

std::string generator_name(Generator g) {
  switch (g) {
    case Generator::One: return "1";
    case Generator::J3: return "J3";
    case Generator::Jplus: return "J+";
    case Generator::Jminus: return "J-";
    case Generator::Z: return "Z";
    case Generator::E: return "E";
    case Generator::Einv: return "Einv";
  }
  return "?";
}

// ----------------------------------------------------------------- Element

Element::Element(Generator g) {
  if (g == Generator::One) {
    terms_.emplace(Word{}, Scalar(1));
  } else {
    terms_.emplace(Word{g}, Scalar(1));
  }
}

Element::Element(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Word{}, c);
}

void Element::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& b) {
  for (const auto& [w, c] : b.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& b) {
  for (const auto& [w, c] : b.terms_) add_term(w, -c);
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  Element out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

Element operator*(const Scalar& c, const Element& a) {
  Element out;
  for (const auto& [w, x] : a.terms_) out.add_term(w, c * x);
  return out;
}

// -------------------------------------------------------- TensorExpression

TensorExpression TensorExpression::tensor(std::span<const Element> factors) {
  TensorExpression out(factors.size());
  out.terms_.emplace(Legs(factors.size()), Scalar(1));
  for (std::size_t leg = 0; leg < factors.size(); ++leg) {
    TensorExpression next(factors.size());
    for (const auto& [legs, c] : out.terms_) {
      for (const auto& [w, x] : factors[leg].terms()) {
        Legs l = legs;
        l[leg] = w;
        next.add_term(l, c * x);
      }
    }
    out = std::move(next);
  }
  return out;
}

TensorExpression TensorExpression::tensor(const Element& a, const Element& b) {
  const Element pair[] = {a, b};
  return tensor(pair);
}

void TensorExpression::add_term(const Legs& legs, const Scalar& c) {
  if (legs.size() != legs_) throw DimensionMismatch("tensor expression leg count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(legs, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorExpression& TensorExpression::operator+=(const TensorExpression& b) {
  if (b.legs_ != legs_) throw DimensionMismatch("tensor expression leg count");
  for (const auto& [l, c] : b.terms_) add_term(l, c);
  return *this;
}

TensorExpression operator-(const TensorExpression& a, const TensorExpression& b) {
  return a + Scalar(-1) * b;
}

TensorExpression operator*(const TensorExpression& a, const TensorExpression& b) {
  if (a.legs_ != b.legs_) throw DimensionMismatch("tensor expression leg count");
  TensorExpression out(a.legs_);
  for (const auto& [la, ca] : a.terms_) {
    for (const auto& [lb, cb] : b.terms_) {
      TensorExpression::Legs l = la;
      for (std::size_t k = 0; k < l.size(); ++k) l[k].insert(l[k].end(), lb[k].begin(), lb[k].end());
      out.add_term(l, ca * cb);
    }
  }
  return out;
}

TensorExpression operator*(const Scalar& c, const TensorExpression& a) {
  TensorExpression out(a.legs_);
  for (const auto& [l, x] : a.terms_) out.add_term(l, c * x);
  return out;
}

// ---------------------------------------------------------- representation

ParamMatrix fundamental_image(Generator g, const Colour& eta, const Deformation& p) {
  switch (g) {
    case Generator::One: return ParamMatrix::identity(2);
    case Generator::J3: return {{1, 0}, {0, -1}};
    case Generator::Jplus: return {{0, 1}, {0, 0}};
    case Generator::Z: return {{eta, 0}, {0, eta}};
    case Generator::Jminus: {
      const Scalar plus = p.plus(eta);
      const Scalar minus = p.minus(eta);
      const Scalar two_h = Scalar(2) * p.h;
      return {{plus * plus / two_h, 0}, {1, minus * minus / two_h}};
    }
    case Generator::E: return {{1, Scalar(2) * p.h}, {0, 1}};
    case Generator::Einv: return {{1, Scalar(-2) * p.h}, {0, 1}};
  }
  throw Error("unknown generator");
}

std::map<Generator, ParamMatrix> fundamental_rep(const Colour& eta, const Deformation& p) {
  std::map<Generator, ParamMatrix> images;
  for (Generator g : {Generator::One, Generator::J3, Generator::Jplus, Generator::Jminus, Generator::Z,
                      Generator::E, Generator::Einv}) {
    images.emplace(g, fundamental_image(g, eta, p));
  }
  return images;
}

ParamMatrix classical_image(Generator g, const Colour& eta) {
  switch (g) {
    case Generator::One: return ParamMatrix::identity(2);
    case Generator::J3: return {{1, 0}, {0, -1}};
    case Generator::Jplus: return {{0, 1}, {0, 0}};
    case Generator::Jminus: return {{0, 0}, {1, 0}};
    case Generator::Z: return {{eta, 0}, {0, eta}};
    default: throw Error("group-like generators have no classical image");
  }
}

// -------------------------------------------------------------- structure

TensorExpression coproduct(Generator g, const Deformation& p) {
  using G = Generator;
  const Element one(G::One);
  const Scalar s_over_h = p.s / p.h;
  switch (g) {
    case G::One: return TensorExpression::tensor(one, one);
    case G::Jplus:
    case G::Z: return TensorExpression::tensor(one, g) + TensorExpression::tensor(g, one);
    case G::J3:
      return TensorExpression::tensor(one, G::J3) + TensorExpression::tensor(G::J3, G::E) +
             s_over_h * TensorExpression::tensor(G::Z, Element(G::E) - one);
    case G::Jminus:
      return TensorExpression::tensor(one, G::Jminus) + TensorExpression::tensor(G::Jminus, G::E) +
             p.s * TensorExpression::tensor(Element(G::J3) + s_over_h * Element(G::Z),
                                           Element(G::Z) * Element(G::E));
    case G::E:
    case G::Einv: return TensorExpression::tensor(g, g);
  }
  throw Error("unknown generator");
}

TensorExpression coproduct(const Word& w, const Deformation& p) {
  TensorExpression out = coproduct(Generator::One, p);
  for (Generator g : w) out = out * coproduct(g, p);
  return out;
}

TensorExpression coproduct(const Element& x, const Deformation& p) {
  TensorExpression out(2);
  for (const auto& [w, c] : x.terms()) out += c * coproduct(w, p);
  return out;
}

TensorExpression coproduct_on_leg(const TensorExpression& t, std::size_t leg, const Deformation& p) {
  if (leg >= t.legs()) throw DimensionMismatch("coproduct_on_leg: leg out of range");
  TensorExpression out(t.legs() + 1);
  for (const auto& [legs, c] : t.terms()) {
    const TensorExpression split = coproduct(legs[leg], p);
    for (const auto& [pair, x] : split.terms()) {
      TensorExpression::Legs l;
      l.reserve(t.legs() + 1);
      l.insert(l.end(), legs.begin(), legs.begin() + static_cast<std::ptrdiff_t>(leg));
      l.push_back(pair[0]);
      l.push_back(pair[1]);
      l.insert(l.end(), legs.begin() + static_cast<std::ptrdiff_t>(leg) + 1, legs.end());
      out.add_term(l, c * x);
    }
  }
  return out;
}

Element antipode(Generator g, const Deformation& p) {
  using G = Generator;
  const Scalar s_over_h = p.s / p.h;
  switch (g) {
    case G::One: return Element(G::One);
    case G::Jplus:
    case G::Z: return -Element(g);
    case G::J3: return -(Element(G::J3) * G::Einv) + s_over_h * (Element(G::Z) * (Element(G::One) - G::Einv));
    case G::Jminus:
      return -(Element(G::Jminus) * G::Einv) +
             p.s * ((Element(G::J3) + s_over_h * Element(G::Z)) * Element(G::Z) * G::Einv);
    case G::E: return Element(G::Einv);
    case G::Einv: return Element(G::E);
  }
  throw Error("unknown generator");
}

Element antipode(const Word& w, const Deformation& p) {
  Element out(Generator::One);
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = out * antipode(*it, p);
  return out;
}

Element antipode(const Element& x, const Deformation& p) {
  Element out;
  for (const auto& [w, c] : x.terms()) out += c * antipode(w, p);
  return out;
}

Scalar counit(Generator g) {
  switch (g) {
    case Generator::One:
    case Generator::E:
    case Generator::Einv: return Scalar(1);
    default: return Scalar(0);
  }
}

Scalar counit(const Word& w) {
  Scalar out(1);
  for (Generator g : w) out *= counit(g);
  return out;
}

Scalar counit(const Element& x) {
  Scalar out;
  for (const auto& [w, c] : x.terms()) out += c * counit(w);
  return out;
}

TensorExpression counit_on_leg(const TensorExpression& t, std::size_t leg) {
  if (t.legs() < 2 || leg >= t.legs()) throw DimensionMismatch("counit_on_leg: leg out of range");
  TensorExpression out(t.legs() - 1);
  for (const auto& [legs, c] : t.terms()) {
    TensorExpression::Legs l = legs;
    const Scalar e = counit(l[leg]);
    l.erase(l.begin() + static_cast<std::ptrdiff_t>(leg));
    out.add_term(l, c * e);
  }
  return out;
}

Element antipode_multiply(const TensorExpression& t, std::size_t antipode_leg, const Deformation& p) {
  if (t.legs() != 2 || antipode_leg > 1) throw DimensionMismatch("antipode_multiply needs two legs");
  Element out;
  for (const auto& [legs, c] : t.terms()) {
    Element first;
    Element second;
    first.add_term(legs[0], Scalar(1));
    second.add_term(legs[1], Scalar(1));
    if (antipode_leg == 0) {
      first = antipode(legs[0], p);
    } else {
      second = antipode(legs[1], p);
    }
    out += c * (first * second);
  }
  return out;
}

ParamMatrix evaluate(const Element& x, const Colour& eta, const Deformation& p) {
  ParamMatrix out = ParamMatrix::zero(2, 2);
  const auto images = fundamental_rep(eta, p);
  for (const auto& [w, c] : x.terms()) {
    ParamMatrix m = ParamMatrix::identity(2);
    for (Generator g : w) m = m * images.at(g);
    out += c * m;
  }
  return out;
}

ParamMatrix evaluate(const TensorExpression& t, std::span<const Colour> colours, const Deformation& p) {
  if (colours.size() != t.legs()) throw DimensionMismatch("evaluate: leg/colour count mismatch");
  std::vector<std::map<Generator, ParamMatrix>> images;
  images.reserve(colours.size());
  for (const auto& c : colours) images.push_back(fundamental_rep(c, p));
  std::size_t dim = 1;
  for (std::size_t k = 0; k < t.legs(); ++k) dim *= 2;
  ParamMatrix out = ParamMatrix::zero(dim, dim);
  for (const auto& [legs, c] : t.terms()) {
    ParamMatrix m = ParamMatrix::identity(1);
    for (std::size_t k = 0; k < legs.size(); ++k) {
      ParamMatrix leg = ParamMatrix::identity(2);
      for (Generator g : legs[k]) leg = leg * images[k].at(g);
      m = kron(m, leg);
    }
    out += c * m;
  }
  return out;
}

}  // namespace jordanian
