#pragma once

#include "jordanian/rational_function.hpp"

namespace jordanian {

// A colour label: a colour symbol such as lambda, or a rational constant.
using Colour = Scalar;

// Values of the deformation parameters; symbolic h and s by default.
struct Deformation {
  Scalar h{sym_h()};
  Scalar s{sym_s()};

  // h + colour*s and h - colour*s.
  Scalar plus(const Colour& c) const { return h + c * s; }
  Scalar minus(const Colour& c) const { return h - c * s; }
};

// f(x, y) = h^2 - x*y*s^2 - h*s*(x - y); the (1,4) entry of the coloured R-matrix.
inline Scalar colour_f(const Colour& x, const Colour& y, const Deformation& p = {}) {
  return p.h * p.h - x * y * p.s * p.s - p.h * p.s * (x - y);
}

inline Colour colour(const char* name) { return Colour(Symbol(name)); }

}  // namespace jordanian
