#pragma once

// Randomized properties of the scalar and matrix layers. Each returns the
// number of failing cases out of `cases`.

#include <functional>
#include <string>
#include <vector>

#include "jordanian/error.hpp"
#include "support.hpp"

namespace jordanian::test {

struct Property {
  std::string name;
  std::function<int(RandomScalars&, int)> run;
};

inline int ring_axioms(RandomScalars& g, int cases) {
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    const Scalar a = g.scalar(), b = g.scalar(), c = g.scalar();
    bool ok = (a + b) + c == a + (b + c) && a + b == b + a && a * b == b * a && (a * b) * c == a * (b * c) &&
              a * (b + c) == a * b + a * c && (a - a).is_zero() && a * Scalar(1) == a && a + Scalar() == a;
    if (!b.is_zero()) ok = ok && (a / b) * b == a;
    failures += ok ? 0 : 1;
  }
  return failures;
}

inline int gcd_properties(RandomScalars& g, int cases) {
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    const Polynomial p = g.polynomial(), q = g.polynomial(), r = g.polynomial(3, 1);
    const Polynomial pr = p * r, qr = q * r;
    const Polynomial d = gcd(pr, qr);
    bool ok = true;
    if (!pr.is_zero() || !qr.is_zero()) {
      ok = divides(d, pr) && divides(d, qr);
      if (!r.is_zero()) ok = ok && divides(r, d);
    }
    failures += ok ? 0 : 1;
  }
  return failures;
}

inline int substitution_homomorphism(RandomScalars& g, int cases) {
  int failures = 0;
  for (int i = 0; i < cases;) {
    const Scalar a = g.scalar(), b = g.scalar();
    const std::map<Symbol, Scalar> point{{sym_h(), Scalar(g.rational())}, {Symbol("lambda"), Scalar(g.rational())}};
    try {
      const bool ok = (a * b).substitute(point) == a.substitute(point) * b.substitute(point) &&
                      (a + b).substitute(point) == a.substitute(point) + b.substitute(point);
      failures += ok ? 0 : 1;
      ++i;
    } catch (const DivisionByZero&) {
      // A pole of a or b; draw again.
    }
  }
  return failures;
}

inline int parse_format_round_trip(RandomScalars& g, int cases) {
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    const Scalar a = g.scalar();
    const std::string text = format_scalar(a);
    failures += parse_scalar(text) == a && format_scalar(parse_scalar(text)) == text ? 0 : 1;
  }
  return failures;
}

inline int kron_mixed_product(RandomScalars& g, int cases) {
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    const ParamMatrix a = g.matrix(2, 2), b = g.matrix(2, 2), c = g.matrix(2, 2), d = g.matrix(2, 2);
    failures += kron(a, b) * kron(c, d) == kron(a * c, b * d) ? 0 : 1;
  }
  return failures;
}

inline int nilpotent_exp_inverse(RandomScalars& g, int cases) {
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    const ParamMatrix m = g.nilpotent(3);
    try {
      failures += nilpotent_exp(m) * nilpotent_exp(-m) == ParamMatrix::identity(3) ? 0 : 1;
    } catch (const Error&) {
      ++failures;
    }
  }
  return failures;
}

inline int inverse_two_sided(RandomScalars& g, int cases) {
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    ParamMatrix m = g.matrix(3, 3);
    for (std::size_t k = 0; k < 3; ++k) m(k, k) += Scalar(Symbol("mu"));
    try {
      const ParamMatrix inv = mat_inverse(m);
      failures += m * inv == ParamMatrix::identity(3) && inv * m == ParamMatrix::identity(3) ? 0 : 1;
    } catch (const SingularMatrix&) {
      ++failures;
    }
  }
  return failures;
}

inline const std::vector<Property>& properties() {
  static const std::vector<Property> all{
      {"ring axioms", ring_axioms},
      {"gcd divides and is maximal", gcd_properties},
      {"substitution is a homomorphism", substitution_homomorphism},
      {"parse/format round trip", parse_format_round_trip},
      {"kron mixed product", kron_mixed_product},
      {"nilpotent exp inverse", nilpotent_exp_inverse},
      {"inverse is two-sided", inverse_two_sided},
  };
  return all;
}

}  // namespace jordanian::test
