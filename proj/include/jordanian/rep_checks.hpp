#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jordanian/hopf_structure.hpp"
#include "jordanian/report.hpp"

namespace jordanian {

// Images of J3, J+, J-, Z, E and the unit in some representation.
using GeneratorImages = std::map<Generator, ParamMatrix>;

// Residuals (lhs - rhs) of the commutation relations of U_{h,s}gl(2), one per
// relation, evaluated on the given images.
std::vector<std::pair<std::string, ParamMatrix>> relation_residuals(const GeneratorImages& x,
                                                                     const Deformation& p = {});

VerificationReport check_defining_relations(const Colour& eta, const Deformation& p = {});

// Coassociativity at (lambda, mu, nu); counit and antipode axioms at eta;
// coproduct homomorphism at (lambda, mu).
VerificationReport verify_hopf_axioms(const Colour& lambda, const Colour& mu, const Colour& nu,
                                      const Colour& eta, const Deformation& p = {});

// Syntactic check: the structure maps send {J3, J+, Z, E, Einv} into the
// span of words in those generators.
VerificationReport check_hopf_subalgebra(const Deformation& p = {});

// (pi_lambda (x) pi_mu) of exp{-J+ (x) (hJ3 + sZ)} exp{(hJ3 + sZ) (x) J+}.
ParamMatrix universal_R_rep(const Colour& lambda, const Colour& mu, const Deformation& p = {});

VerificationReport verify_quasitriangularity(const Colour& lambda, const Colour& mu, const Colour& nu,
                                             const Deformation& p = {});

// Classical r-matrix h J3^J+ + s Z^J+ in the undeformed representation, with
// a^b = a(x)b - b(x)a.
ParamMatrix classical_r(const Colour& lambda, const Colour& mu, const Deformation& p = {});

VerificationReport classical_structure(const Colour& lambda, const Colour& mu, const Colour& nu,
                                       const Deformation& p = {});

}  // namespace jordanian
