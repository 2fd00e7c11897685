#pragma once

#include <map>
#include <string>

#include "jordanian/param_matrix.hpp"
#include "jordanian/parameters.hpp"
#include "jordanian/report.hpp"

namespace jordanian {

// The 4x4 coloured Jordanian R-matrix R^(lambda,mu). Unit upper triangular
// with polynomial entries and f(lambda, mu) in the corner.
struct ColouredRMatrix {
  Colour lambda;
  Colour mu;
  ParamMatrix matrix;
};

// R-hat = P R.
struct BraidOperator {
  Colour lambda;
  Colour mu;
  ParamMatrix matrix;
};

ColouredRMatrix coloured_R(const Colour& lambda, const Colour& mu, const Deformation& p = {});
BraidOperator braid_operator(const Colour& lambda, const Colour& mu, const Deformation& p = {});

// Two-parameter Jordanian matrix in (z, z'):
// [[1, z', -z', z z'], [0, 1, 0, z], [0, 0, 1, -z], [0, 0, 0, 1]].
ParamMatrix two_parameter_R(const Scalar& z, const Scalar& zp);

VerificationReport verify_coloured_ybe(const Colour& lambda, const Colour& mu, const Colour& nu,
                                       const Deformation& p = {});
VerificationReport verify_coloured_unitarity(const Colour& lambda, const Colour& mu, const Deformation& p = {});
VerificationReport verify_braided_ybe(const Colour& lambda, const Colour& mu, const Colour& nu,
                                      const Deformation& p = {});

// Sample point at which (R-hat - 1)(R-hat + 1) and (R-hat - 1)^2 (R-hat + 1)
// must not vanish.
struct WitnessPoint {
  Rational h, s, lambda, mu;
};
inline const WitnessPoint kHeckeWitness{1, 1, 1, 2};

VerificationReport verify_characteristic_equation(const Colour& lambda, const Colour& mu,
                                                  const Deformation& p = {},
                                                  const WitnessPoint& witness = kHeckeWitness);

enum class Specialization {
  // lambda = mu = eta, then z' = h + eta s, z = h - eta s.
  two_parameter,
  // lambda = mu = 0.
  one_parameter,
};

// Entrywise substitution of colour bindings.
ColouredRMatrix specialize(const ColouredRMatrix& r, const std::map<Symbol, Scalar>& bindings);

// Applies a named preset. For two_parameter the result is expressed in the
// symbols z and zp (when h and s are symbolic), via h = (z + zp)/2 and
// eta*s = (zp - z)/2.
ColouredRMatrix specialize(const ColouredRMatrix& r, Specialization preset, const Colour& eta = colour("eta"));

// Always symbolic in h and s: the two-parameter limit is a change of variables.
VerificationReport verify_specializations();

}  // namespace jordanian
