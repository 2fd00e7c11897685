#include "jordanian/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "jordanian/error.hpp"

namespace jordanian {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(Symbol x, unsigned exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.emplace_back(x, exponent);
    m.degree_ = exponent;
  }
  return m;
}

unsigned Monomial::exponent(Symbol x) const noexcept {
  for (const auto& [sym, e] : factors_) {
    if (sym == x) return e;
  }
  return 0;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  auto it = other.factors_.begin();
  for (const auto& [sym, e] : factors_) {
    while (it != other.factors_.end() && it->first < sym) ++it;
    if (it == other.factors_.end() || it->first != sym || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q;
  auto mine = factors_.begin();
  for (const auto& [sym, e] : other.factors_) {
    unsigned sub = 0;
    if (mine != factors_.end() && mine->first == sym) {
      sub = mine->second;
      ++mine;
    }
    if (e > sub) q.factors_.emplace_back(sym, e - sub);
  }
  q.degree_ = other.degree_ - degree_;
  return q;
}

Monomial Monomial::without(Symbol x) const {
  Monomial m;
  for (const auto& f : factors_) {
    if (f.first != x) {
      m.factors_.push_back(f);
      m.degree_ += f.second;
    }
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first == j->first) {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    } else if (i->first < j->first) {
      m.factors_.push_back(*i++);
    } else {
      m.factors_.push_back(*j++);
    }
  }
  m.factors_.insert(m.factors_.end(), i, a.factors_.end());
  m.factors_.insert(m.factors_.end(), j, b.factors_.end());
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first != j->first) {
      // The monomial carrying the earlier symbol has the larger exponent there.
      return i->first < j->first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (i->second != j->second) return i->second <=> j->second;
    ++i;
    ++j;
  }
  if (i != a.factors_.end()) return std::strong_ordering::greater;
  if (j != b.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// -------------------------------------------------------------- Polynomial

std::strong_ordering compare_rational(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Polynomial::Polynomial(long constant) {
  if (constant != 0) terms_.push_back({Monomial{}, Rational(constant)});
}

Polynomial::Polynomial(const Rational& constant) {
  if (sgn(constant) != 0) terms_.push_back({Monomial{}, constant});
}

Polynomial::Polynomial(Symbol x) { terms_.push_back({Monomial::variable(x), Rational(1)}); }

Polynomial::Polynomial(Monomial m, const Rational& coeff) {
  if (sgn(coeff) != 0) terms_.push_back({std::move(m), coeff});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.monomial > y.monomial; });
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

bool Polynomial::is_one() const noexcept {
  return terms_.size() == 1 && terms_.front().monomial.is_one() && terms_.front().coeff == 1;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return Rational(0);
}

unsigned Polynomial::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

unsigned Polynomial::degree_in(Symbol x) const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(x));
  return d;
}

unsigned Polynomial::min_degree_in(std::span<const Symbol> symbols) const noexcept {
  unsigned best = ~0u;
  for (const auto& t : terms_) {
    unsigned d = 0;
    for (Symbol x : symbols) d += t.monomial.exponent(x);
    best = std::min(best, d);
  }
  return best;
}

std::vector<Symbol> Polynomial::symbols() const {
  std::vector<Symbol> out;
  for (const auto& t : terms_) {
    for (const auto& f : t.monomial.factors()) {
      if (std::find(out.begin(), out.end(), f.first) == out.end()) out.push_back(f.first);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Polynomial::contains(Symbol x) const noexcept {
  return std::any_of(terms_.begin(), terms_.end(),
                     [x](const Term& t) { return t.monomial.exponent(x) > 0; });
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

// Merge of two canonical term lists; sign = +1 or -1 applied to b.
std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a,
                                    const std::vector<Polynomial::Term>& b, int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    const auto c = i->monomial <=> j->monomial;
    if (c == 0) {
      Rational sum = sign > 0 ? Rational(i->coeff + j->coeff) : Rational(i->coeff - j->coeff);
      if (sgn(sum) != 0) out.push_back({i->monomial, std::move(sum)});
      ++i;
      ++j;
    } else if (c > 0) {
      out.push_back(*i++);
    } else {
      out.push_back({j->monomial, sign > 0 ? j->coeff : Rational(-j->coeff)});
      ++j;
    }
  }
  out.insert(out.end(), i, a.end());
  for (; j != b.end(); ++j) out.push_back({j->monomial, sign > 0 ? j->coeff : Rational(-j->coeff)});
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && a.terms_.front().monomial.is_one()) return b * a.terms_.front().coeff;
  if (b.terms_.size() == 1 && b.terms_.front().monomial.is_one()) return a * b.terms_.front().coeff;
  std::vector<Polynomial::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) terms.push_back({x.monomial * y.monomial, x.coeff * y.coeff});
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff == 1) return *this;
  Rational inv = 1 / terms_.front().coeff;
  return *this * inv;
}

Polynomial Polynomial::substitute(const std::map<Symbol, Polynomial>& bindings) const {
  Polynomial out;
  for (const auto& t : terms_) {
    Polynomial term(Monomial{}, t.coeff);
    Monomial kept;
    for (const auto& [sym, e] : t.monomial.factors()) {
      auto it = bindings.find(sym);
      if (it == bindings.end()) {
        kept = kept * Monomial::variable(sym, e);
      } else {
        term *= it->second.pow(e);
      }
    }
    out += term * Polynomial(kept, Rational(1));
  }
  return out;
}

Rational Polynomial::evaluate(const std::map<Symbol, Rational>& point) const {
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational value = t.coeff;
    for (const auto& [sym, e] : t.monomial.factors()) {
      auto it = point.find(sym);
      if (it == point.end()) throw Error("evaluate: unbound symbol " + sym.name());
      for (unsigned k = 0; k < e; ++k) value *= it->second;
    }
    total += value;
  }
  return total;
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (auto c = a.terms_[k].monomial <=> b.terms_[k].monomial; c != 0) return c;
    if (auto c = compare_rational(a.terms_[k].coeff, b.terms_[k].coeff); c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

// ---------------------------------------------------------------- division

namespace {

bool try_divide(const Polynomial& a, const Polynomial& b, Polynomial* quotient) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) {
    if (quotient) *quotient = Polynomial{};
    return true;
  }
  if (b.is_constant()) {
    if (quotient) *quotient = a * Rational(1 / b.leading_coeff());
    return true;
  }
  const auto& lead = b.leading_term();
  std::vector<Polynomial::Term> q;
  Polynomial rem = a;
  while (!rem.is_zero()) {
    const auto& top = rem.leading_term();
    if (!lead.monomial.divides(top.monomial)) return false;
    Polynomial::Term t{lead.monomial.quotient_of(top.monomial), top.coeff / lead.coeff};
    rem -= b * Polynomial(t.monomial, t.coeff);
    q.push_back(std::move(t));
  }
  if (quotient) *quotient = Polynomial::from_terms(std::move(q));
  return true;
}

using Univariate = std::vector<Polynomial>;  // index = degree in the main symbol

Univariate coefficients_in(const Polynomial& p, Symbol x) {
  Univariate c(p.degree_in(x) + 1);
  std::vector<std::vector<Polynomial::Term>> buckets(c.size());
  for (const auto& t : p.terms()) {
    buckets[t.monomial.exponent(x)].push_back({t.monomial.without(x), t.coeff});
  }
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = Polynomial::from_terms(std::move(buckets[k]));
  return c;
}

Polynomial from_coefficients(const Univariate& c, Symbol x) {
  Polynomial p;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!c[k].is_zero()) p += c[k] * Polynomial(Monomial::variable(x, static_cast<unsigned>(k)), 1);
  }
  return p;
}

void trim(Univariate& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Polynomial content_of(const Univariate& c) {
  Polynomial g;
  for (const auto& coeff : c) {
    g = gcd(g, coeff);
    if (g.is_one()) break;
  }
  return g;
}

Univariate divide_all(const Univariate& c, const Polynomial& d) {
  Univariate out;
  out.reserve(c.size());
  for (const auto& coeff : c) out.push_back(exact_quotient(coeff, d));
  return out;
}

// Scales c to integer coefficients with no common integer factor.
void make_integral(Univariate& c) {
  mpz_class num = 0, den = 1;
  for (const auto& coeff : c) {
    for (const auto& t : coeff.terms()) {
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
  }
  if (num == 0) return;
  const Rational scale(den, num);
  for (auto& coeff : c) coeff *= scale;
}

// Pseudo-remainder of a by b in the main symbol (a multiple of the classical one).
Univariate pseudo_remainder(Univariate a, const Univariate& b) {
  const std::size_t db = b.size() - 1;
  const Polynomial& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const Polynomial la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& coeff : a) coeff *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[j + shift] -= la * b[j];
    trim(a);
    make_integral(a);
  }
  return a;
}

// Images of the coefficients at a point in the remaining symbols.
std::vector<Rational> image_at(const Univariate& c, const std::map<Symbol, Rational>& point) {
  std::vector<Rational> out;
  out.reserve(c.size());
  for (const auto& coeff : c) out.push_back(coeff.evaluate(point));
  return out;
}

void trim(std::vector<Rational>& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

// Degree of the gcd of two univariate polynomials over Q.
std::size_t gcd_degree(std::vector<Rational> a, std::vector<Rational> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size()) {
      const Rational f = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= f * b[j];
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// True when the primitive parts are certainly coprime in x: their images at a
// point keeping both leading coefficients nonzero have a constant gcd, and
// the image of a common factor would divide both images with its degree.
bool coprime_by_image(const Univariate& a, const Univariate& b, const std::vector<Symbol>& others) {
  static const int kValues[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::map<Symbol, Rational> point;
    for (std::size_t i = 0; i < others.size(); ++i) {
      point.emplace(others[i], Rational(kValues[(i + 4 * attempt) % 13] * (attempt % 2 == 0 ? 1 : -1)));
    }
    const auto ia = image_at(a, point);
    const auto ib = image_at(b, point);
    if (sgn(ia.back()) == 0 || sgn(ib.back()) == 0) continue;
    return gcd_degree(ia, ib) == 0;
  }
  return false;
}

}  // namespace

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  Polynomial q;
  if (!try_divide(a, b, &q)) throw InexactDivision("polynomial division is not exact");
  return q;
}

bool divides(const Polynomial& b, const Polynomial& a) { return try_divide(a, b, nullptr); }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a == b) return a.monic();

  const auto va = a.symbols();
  const auto vb = b.symbols();
  for (Symbol x : va) {
    if (!b.contains(x)) return gcd(content_of(coefficients_in(a, x)), b);
  }
  for (Symbol x : vb) {
    if (!a.contains(x)) return gcd(a, content_of(coefficients_in(b, x)));
  }

  const Symbol x = va.back();
  Univariate ua = coefficients_in(a, x);
  Univariate ub = coefficients_in(b, x);
  const Polynomial ca = content_of(ua);
  const Polynomial cb = content_of(ub);
  const Polynomial content_gcd = gcd(ca, cb);
  ua = divide_all(ua, ca);
  ub = divide_all(ub, cb);
  make_integral(ua);
  make_integral(ub);
  if (ua.size() < ub.size()) std::swap(ua, ub);

  std::vector<Symbol> others;
  for (Symbol y : va) {
    if (y != x) others.push_back(y);
  }
  for (Symbol y : vb) {
    if (y != x && std::find(others.begin(), others.end(), y) == others.end()) others.push_back(y);
  }
  if (coprime_by_image(ua, ub, others)) return content_gcd.monic();

  // Primitive remainder sequence.
  while (true) {
    Univariate r = pseudo_remainder(ua, ub);
    if (r.empty()) break;
    if (r.size() == 1) {
      ub = Univariate{Polynomial(1)};
      break;
    }
    ua = std::move(ub);
    ub = divide_all(r, content_of(r));
  }
  ub = divide_all(ub, content_of(ub));
  return (content_gcd * from_coefficients(ub, x)).monic();
}

}  // namespace jordanian
