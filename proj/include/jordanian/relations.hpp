#pragma once

#include <array>
#include <vector>

#include "jordanian/nc_poly.hpp"
#include "jordanian/param_matrix.hpp"

namespace jordanian {

NCGenerator generator(Letter l, const Colour& colour, int copy = 0);

// 2x2 matrix with entries in the free algebra.
using NCMatrix2 = std::array<std::array<NCPoly, 2>, 2>;

// T_colour = [[a, b], [c, d]].
NCMatrix2 t_matrix(const Colour& colour, int copy = 0);
NCMatrix2 operator*(const NCMatrix2& x, const NCMatrix2& y);

// Entries of R T1(lambda) T2(mu) - T2(mu) T1(lambda) R for a 4x4 scalar R,
// with (T1)_{ij,kl} = T_ik delta_jl and (T2)_{ij,kl} = delta_ik T_jl. Entry
// (row, col) sits at 4*row + col.
std::vector<NCPoly> rtt_residual(const ParamMatrix& r, const Colour& lambda, const Colour& mu);
// The same for the coloured R-matrix R^(lambda,mu).
std::vector<NCPoly> rtt_residual(const Colour& lambda, const Colour& mu, const Deformation& p = {});

// The ten listed commutation relations as (lhs - rhs), followed by the six
// mixed-letter ones with lambda and mu interchanged.
RelationSet paper_relations(const Colour& lambda, const Colour& mu, const Deformation& p = {});
// Only the ten listed relations.
RelationSet listed_relations(const Colour& lambda, const Colour& mu, const Deformation& p = {});
// The listed relations at mu = lambda, without elements that vanish.
RelationSet monochromatic_relations(const Colour& lambda, const Deformation& p = {});

enum class DeterminantForm {
  // a d - b c - (h + lambda s) a c
  first,
  // a d - c b + (h - lambda s) c d
  alternate,
};

NCPoly quantum_determinant(const Colour& lambda, DeterminantForm form = DeterminantForm::first,
                           const Deformation& p = {}, int copy = 0);
// The first form applied to the entries of an arbitrary 2x2 matrix.
NCPoly determinant_of(const NCMatrix2& m, const Colour& lambda, const Deformation& p = {});

}  // namespace jordanian
