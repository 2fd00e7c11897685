#include "jordanian/nc_poly.hpp"

#include <algorithm>

namespace jordanian {

char letter_char(Letter l) noexcept {
  return static_cast<char>('a' + static_cast<int>(l));
}

bool operator==(const NCGenerator& x, const NCGenerator& y) {
  return x.letter == y.letter && x.copy == y.copy && x.colour == y.colour;
}

std::strong_ordering operator<=>(const NCGenerator& x, const NCGenerator& y) {
  if (auto c = x.letter <=> y.letter; c != 0) return c;
  if (auto c = x.colour <=> y.colour; c != 0) return c;
  return x.copy <=> y.copy;
}

bool operator==(const Slot& x, const Slot& y) { return x.copy == y.copy && x.colour == y.colour; }

std::strong_ordering operator<=>(const Slot& x, const Slot& y) {
  if (auto c = x.colour <=> y.colour; c != 0) return c;
  return x.copy <=> y.copy;
}

Multidegree multidegree(const NCWord& w) {
  Multidegree out;
  for (const auto& g : w) ++out[Slot{g.colour, g.copy}];
  return out;
}

// ------------------------------------------------------------------ NCPoly

NCPoly::NCPoly(const NCGenerator& g) { terms_.emplace(NCWord{g}, Scalar(1)); }

NCPoly::NCPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(NCWord{}, c);
}

NCPoly NCPoly::word(NCWord w, const Scalar& c) {
  NCPoly out;
  out.add_term(w, c);
  return out;
}

Scalar NCPoly::coefficient(const NCWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void NCPoly::add_term(const NCWord& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<Multidegree> NCPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  Multidegree first = multidegree(terms_.begin()->first);
  for (const auto& [w, c] : terms_) {
    if (multidegree(w) != first) return std::nullopt;
  }
  return first;
}

std::optional<std::size_t> NCPoly::length() const {
  if (terms_.empty()) return std::nullopt;
  const std::size_t n = terms_.begin()->first.size();
  for (const auto& [w, c] : terms_) {
    if (w.size() != n) return std::nullopt;
  }
  return n;
}

NCPoly& NCPoly::operator+=(const NCPoly& b) {
  for (const auto& [w, c] : b.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& b) {
  for (const auto& [w, c] : b.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      NCWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

NCPoly NCPoly::substitute(const std::map<Symbol, Scalar>& bindings) const {
  NCPoly out;
  for (const auto& [w, c] : terms_) {
    NCWord v = w;
    for (auto& g : v) g.colour = g.colour.substitute(bindings);
    out.add_term(v, c.substitute(bindings));
  }
  return out;
}

NCWord copies_normal_ordered(NCWord w) {
  std::stable_sort(w.begin(), w.end(), [](const NCGenerator& x, const NCGenerator& y) { return x.copy < y.copy; });
  return w;
}

NCPoly NCPoly::copies_normal_ordered() const {
  NCPoly out;
  for (const auto& [w, c] : terms_) out.add_term(jordanian::copies_normal_ordered(w), c);
  return out;
}

NCPoly NCPoly::with_copy(int copy) const {
  NCPoly out;
  for (const auto& [w, c] : terms_) {
    NCWord v = w;
    for (auto& g : v) g.copy = copy;
    out.add_term(v, c);
  }
  return out;
}

NCPoly commutator(const NCPoly& x, const NCPoly& y) { return x * y - y * x; }

// -------------------------------------------------------------- formatting

namespace {

bool is_atomic(const Scalar& c) {
  if (c.is_zero()) return true;
  if (!c.is_polynomial() || c.numerator().size() != 1) return false;
  const auto& t = c.numerator().leading_term();
  return t.monomial.is_one() ? t.coeff >= 0 && t.coeff.get_den() == 1
                             : t.coeff == 1 && t.monomial.factors().size() == 1 && t.monomial.degree() == 1;
}

}  // namespace

std::string format_generator(const NCGenerator& g, ScalarStyle style) {
  std::string out(1, letter_char(g.letter));
  if (g.copy > 0) out += std::string(static_cast<std::size_t>(g.copy), '\'');
  const std::string colour = format_scalar(g.colour, style);
  if (style == ScalarStyle::latex) return out + "_{" + colour + "}";
  return out + "_" + (is_atomic(g.colour) ? colour : "(" + colour + ")");
}

std::string format_word(const NCWord& w, ScalarStyle style) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& g : w) {
    if (!out.empty()) out += style == ScalarStyle::plain ? "*" : " ";
    out += format_generator(g, style);
  }
  return out;
}

std::string format_ncpoly(const NCPoly& p, ScalarStyle style) {
  if (p.is_zero()) return "0";
  const bool plain = style == ScalarStyle::plain;
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    // A coefficient counts as negative when it is a single term with a negative sign.
    const bool negative = c.is_polynomial() && c.numerator().size() == 1 && sgn(c.numerator().leading_coeff()) < 0;
    const Scalar magnitude = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += plain ? (negative ? " - " : " + ") : (negative ? "-" : "+");
    }
    std::string coeff;
    if (!magnitude.is_one()) {
      const bool single = magnitude.is_polynomial() && magnitude.numerator().size() == 1;
      coeff = format_scalar(magnitude, style);
      if (!single) coeff = plain ? "(" + coeff + ")" : "\\left(" + coeff + "\\right)";
    }
    if (w.empty()) {
      out += coeff.empty() ? "1" : coeff;
    } else if (coeff.empty()) {
      out += format_word(w, style);
    } else {
      out += coeff + (plain ? "*" : " ") + format_word(w, style);
    }
  }
  return out;
}

// ------------------------------------------------------------- RelationSet

void RelationSet::add(std::string name, NCPoly element) {
  names.push_back(std::move(name));
  elements.push_back(std::move(element));
}

void RelationSet::append(const RelationSet& other) {
  names.insert(names.end(), other.names.begin(), other.names.end());
  elements.insert(elements.end(), other.elements.begin(), other.elements.end());
}

}  // namespace jordanian
