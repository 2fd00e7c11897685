#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jordanian/expression.hpp"
#include "jordanian/parameters.hpp"

namespace jordanian {

enum class Letter { a, b, c, d };

char letter_char(Letter l) noexcept;

// Entry of the quantum matrix T_colour. copy distinguishes T from T' when
// two commuting copies are in play (0 = unprimed).
struct NCGenerator {
  Letter letter = Letter::a;
  Colour colour;
  int copy = 0;
};

bool operator==(const NCGenerator& x, const NCGenerator& y);
// By letter (a < b < c < d), then colour, then copy.
std::strong_ordering operator<=>(const NCGenerator& x, const NCGenerator& y);

using NCWord = std::vector<NCGenerator>;

// Colour and copy of a letter; words are graded by how often each occurs.
struct Slot {
  Colour colour;
  int copy = 0;
};

bool operator==(const Slot& x, const Slot& y);
std::strong_ordering operator<=>(const Slot& x, const Slot& y);

using Multidegree = std::map<Slot, unsigned>;

Multidegree multidegree(const NCWord& w);

// Element of the free algebra on coloured generators over the scalar ring.
// Terms are keyed by word; zero coefficients are never stored.
class NCPoly {
 public:
  NCPoly() = default;
  NCPoly(const NCGenerator& g);  // NOLINT(google-explicit-constructor)
  explicit NCPoly(const Scalar& c);
  static NCPoly word(NCWord w, const Scalar& c = Scalar(1));

  const std::map<NCWord, Scalar>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const NCWord& w) const;
  void add_term(const NCWord& w, const Scalar& c);

  // Common multidegree of all words; nullopt when zero or inhomogeneous.
  std::optional<Multidegree> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
  // Word length of a homogeneous element.
  std::optional<std::size_t> length() const;

  NCPoly& operator+=(const NCPoly& b);
  NCPoly& operator-=(const NCPoly& b);
  NCPoly& operator*=(const Scalar& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator-(NCPoly a) { return a *= Scalar(-1); }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }
  friend NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }

  // Substitutes into coefficients and colours alike; words that become equal
  // are merged.
  NCPoly substitute(const std::map<Symbol, Scalar>& bindings) const;
  // Moves letters of lower copy index to the left, keeping relative order
  // inside each copy. This is the product of commuting copies.
  NCPoly copies_normal_ordered() const;
  NCPoly with_copy(int copy) const;

  friend bool operator==(const NCPoly&, const NCPoly&) = default;

 private:
  std::map<NCWord, Scalar> terms_;
};

NCPoly commutator(const NCPoly& x, const NCPoly& y);

NCWord copies_normal_ordered(NCWord w);

std::string format_generator(const NCGenerator& g, ScalarStyle style = ScalarStyle::plain);
std::string format_word(const NCWord& w, ScalarStyle style = ScalarStyle::plain);
std::string format_ncpoly(const NCPoly& p, ScalarStyle style = ScalarStyle::plain);

// Named list of homogeneous relation elements (each taken as "= 0").
struct RelationSet {
  std::vector<NCPoly> elements;
  std::vector<std::string> names;

  std::size_t size() const noexcept { return elements.size(); }
  void add(std::string name, NCPoly element);
  void append(const RelationSet& other);
};

}  // namespace jordanian
