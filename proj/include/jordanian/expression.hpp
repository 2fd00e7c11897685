#pragma once

// Text form of scalars.
//
//   expr    = term , { ( "+" | "-" ) , term } ;
//   term    = unary , { ( "*" | "/" ) , unary } ;
//   unary   = ( "+" | "-" ) , unary | power ;
//   power   = primary , [ "^" , [ "-" ] , integer ] ;
//   primary = integer | identifier | "(" , expr , ")" ;
//   identifier = letter , { letter | digit | "_" } ;
//
// Whitespace is ignored between tokens.

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>

#include "jordanian/rational_function.hpp"

namespace jordanian {

// Symbols a parser accepts. The deformation parameters h and s are always
// declared; an open context accepts any identifier.
class SymbolContext {
 public:
  SymbolContext() = default;
  SymbolContext(std::initializer_list<std::string> colours) : colours_(colours) {}
  static SymbolContext open() {
    SymbolContext c;
    c.open_ = true;
    return c;
  }

  void declare(std::string name) { colours_.insert(std::move(name)); }
  bool accepts(const std::string& name) const {
    return open_ || name == "h" || name == "s" || colours_.contains(name);
  }

 private:
  std::set<std::string> colours_;
  bool open_ = false;
};

enum class ScalarStyle { plain, latex };

RationalFunction parse_scalar(std::string_view text, const SymbolContext& context = SymbolContext::open());

std::string format_scalar(const RationalFunction& value, ScalarStyle style = ScalarStyle::plain);
std::string format_polynomial(const Polynomial& p, ScalarStyle style = ScalarStyle::plain);

// LaTeX spelling of a symbol name ("lambda" -> "\lambda").
std::string latex_symbol(const std::string& name);

}  // namespace jordanian
