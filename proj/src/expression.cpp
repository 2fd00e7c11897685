#include "jordanian/expression.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "jordanian/error.hpp"

namespace jordanian {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const SymbolContext& context) : text_(text), context_(context) {}

  RationalFunction parse() {
    RationalFunction value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction value = term();
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  RationalFunction term() {
    RationalFunction value = unary();
    while (true) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        value /= d;
      } else {
        return value;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    skip_space();
    const std::size_t at = pos_;
    const std::string digits = integer_digits();
    if (digits.empty()) fail("expected integer exponent");
    if (digits.size() > 6) throw ParseError("exponent too large", at);
    const int e = std::stoi(digits);
    if (negative && base.is_zero()) throw ParseError("negative power of zero", at);
    return base.pow(negative ? -e : e);
  }

  std::string integer_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  RationalFunction primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction value = expr();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RationalFunction(Rational(mpz_class(integer_digits())));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (!context_.accepts(name)) throw ParseError("unknown symbol '" + name + "'", start);
      return RationalFunction(Symbol(name));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const SymbolContext& context_;
  std::size_t pos_ = 0;
};

// Display order inside a monomial: h, colour symbols, then s.
std::vector<Monomial::Factor> display_factors(const Monomial& m) {
  std::vector<Monomial::Factor> f(m.factors().begin(), m.factors().end());
  std::stable_partition(f.begin(), f.end(), [](const Monomial::Factor& x) { return x.first != sym_s(); });
  return f;
}

std::string rational_text(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_latex(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string monomial_text(const Monomial& m, ScalarStyle style) {
  std::string out;
  for (const auto& [sym, e] : display_factors(m)) {
    if (!out.empty()) out += style == ScalarStyle::plain ? "*" : " ";
    out += style == ScalarStyle::plain ? sym.name() : latex_symbol(sym.name());
    if (e > 1) {
      out += style == ScalarStyle::plain ? "^" + std::to_string(e) : "^{" + std::to_string(e) + "}";
    }
  }
  return out;
}

bool is_single_positive_monomial(const Polynomial& p) {
  return p.size() == 1 && p.leading_coeff() == 1;
}

}  // namespace

RationalFunction parse_scalar(std::string_view text, const SymbolContext& context) {
  return Parser(text, context).parse();
}

std::string latex_symbol(const std::string& name) {
  static constexpr std::array<std::string_view, 24> greek = {
      "alpha", "beta",  "gamma", "delta", "epsilon", "zeta", "eta",     "theta",
      "iota",  "kappa", "lambda", "mu",   "nu",      "xi",   "pi",      "rho",
      "sigma", "tau",   "upsilon", "phi", "chi",     "psi",  "omega",   "varepsilon"};
  if (std::find(greek.begin(), greek.end(), name) != greek.end()) return "\\" + name;
  return name;
}

std::string format_polynomial(const Polynomial& p, ScalarStyle style) {
  if (p.is_zero()) return "0";
  const bool plain = style == ScalarStyle::plain;
  std::string out;
  // Printed from low to high degree.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const bool negative = sgn(it->coeff) < 0;
    const Rational magnitude = abs(it->coeff);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += plain ? (negative ? " - " : " + ") : (negative ? "-" : "+");
    }
    const std::string mono = monomial_text(it->monomial, style);
    if (mono.empty()) {
      out += plain ? rational_text(magnitude) : rational_latex(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += plain ? rational_text(magnitude) + "*" + mono : rational_latex(magnitude) + " " + mono;
    }
  }
  return out;
}

std::string format_scalar(const RationalFunction& value, ScalarStyle style) {
  const std::string num = format_polynomial(value.numerator(), style);
  if (value.is_polynomial()) return num;
  const std::string den = format_polynomial(value.denominator(), style);
  if (style == ScalarStyle::latex) return "\\frac{" + num + "}{" + den + "}";
  const bool bare_num = is_single_positive_monomial(value.numerator()) || value.numerator().is_constant();
  const bool bare_den = is_single_positive_monomial(value.denominator()) &&
                        value.denominator().leading_term().monomial.factors().size() == 1;
  std::string out = bare_num ? num : "(" + num + ")";
  out += "/";
  out += bare_den ? den : "(" + den + ")";
  return out;
}

}  // namespace jordanian
