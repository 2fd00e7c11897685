#pragma once

#include "jordanian/relations.hpp"
#include "jordanian/report.hpp"
#include "jordanian/sector.hpp"

namespace jordanian {

// The RTT residual spans the same subspace of the mixed sector as the listed
// relations with their interchanges; ranks are re-checked at random points.
VerificationReport verify_rtt_span(const Colour& lambda, const Colour& mu, const Deformation& p = {},
                                   const EngineOptions& options = {});

// Antisymmetry consistency of the interchange rule, and the monochromatic
// limit containing the two-parameter relations for both sign conventions.
VerificationReport verify_rtt_invariants(const Colour& lambda, const Colour& mu, const Deformation& p = {},
                                         const EngineOptions& options = {});

// The two forms of D_lambda agree modulo the monochromatic relations.
VerificationReport verify_determinant_forms(const Colour& lambda, const Deformation& p = {},
                                            const EngineOptions& options = {});

// M1 T - D and T M2 - D vanish entrywise modulo the monochromatic relations,
// M1 and M2 being the matrices beside D^-1 in the left and right inverses.
VerificationReport verify_antipode_inverse(const Colour& lambda, const Deformation& p = {},
                                           const EngineOptions& options = {});

// D(T T') - D(T) D(T') for commuting copies T and T'.
VerificationReport verify_grouplike(const Colour& lambda, const Deformation& p = {},
                                    const EngineOptions& options = {});

// The four printed commutators [D_lambda, x_mu]; [D_lambda, a_mu] on its own;
// the four commutators at lambda = mu = 0; [D_lambda, D_mu] at degree 4.
// Printed formulas are reported with their verdict: a check passes when the
// verdict is produced (and, for a member, its certificate re-multiplies),
// except [D_lambda, c_mu] = 0, non-centrality and the vanishing-colour
// centrality, which must hold.
VerificationReport det_commutator_report(const Colour& lambda, const Colour& mu, const Deformation& p = {},
                                         const EngineOptions& options = {}, bool degree_four = true);

// Printed right-hand side of [D_lambda, x_mu]; x is a, b, c or d.
NCPoly printed_det_commutator(Letter x, const Colour& lambda, const Colour& mu, const Deformation& p = {});

// Relations governing products of lambda and mu letters: the listed ones,
// the interchanges, and both monochromatic sets.
RelationSet coloured_relations(const Colour& lambda, const Colour& mu, const Deformation& p = {});

}  // namespace jordanian
