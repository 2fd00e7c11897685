#include "jordanian/coloured_r.hpp"

#include <optional>

#include "jordanian/error.hpp"

namespace jordanian {
namespace {

// The single symbol a colour consists of, if any.
std::optional<Symbol> as_symbol(const Colour& c) {
  if (!c.is_polynomial() || c.numerator().size() != 1) return std::nullopt;
  const auto& t = c.numerator().leading_term();
  if (t.coeff != 1 || t.monomial.degree() != 1) return std::nullopt;
  return t.monomial.factors().front().first;
}

ParamMatrix at_point(const ParamMatrix& m, const WitnessPoint& w, const Colour& lambda, const Colour& mu) {
  std::map<Symbol, Scalar> bindings = {{sym_h(), Scalar(w.h)}, {sym_s(), Scalar(w.s)}};
  if (auto x = as_symbol(lambda)) bindings[*x] = Scalar(w.lambda);
  if (auto x = as_symbol(mu)) bindings[*x] = Scalar(w.mu);
  return m.substitute(bindings);
}

}  // namespace

ColouredRMatrix coloured_R(const Colour& lambda, const Colour& mu, const Deformation& p) {
  ParamMatrix m = ParamMatrix::identity(4);
  m(0, 1) = p.plus(lambda);
  m(0, 2) = -p.plus(mu);
  m(0, 3) = colour_f(lambda, mu, p);
  m(1, 3) = p.minus(mu);
  m(2, 3) = -p.minus(lambda);
  return {lambda, mu, std::move(m)};
}

BraidOperator braid_operator(const Colour& lambda, const Colour& mu, const Deformation& p) {
  return {lambda, mu, flip_matrix(2) * coloured_R(lambda, mu, p).matrix};
}

ParamMatrix two_parameter_R(const Scalar& z, const Scalar& zp) {
  return {{1, zp, -zp, z * zp}, {0, 1, 0, z}, {0, 0, 1, -z}, {0, 0, 0, 1}};
}

VerificationReport verify_coloured_ybe(const Colour& lambda, const Colour& mu, const Colour& nu,
                                       const Deformation& p) {
  const ParamMatrix r12 = leg_embed(coloured_R(lambda, mu, p).matrix, {1, 2}, 2);
  const ParamMatrix r13 = leg_embed(coloured_R(lambda, nu, p).matrix, {1, 3}, 2);
  const ParamMatrix r23 = leg_embed(coloured_R(mu, nu, p).matrix, {2, 3}, 2);
  VerificationReport report;
  report.add_residual("coloured YBE R12 R13 R23 = R23 R13 R12", r12 * r13 * r23 - r23 * r13 * r12);
  return report;
}

VerificationReport verify_coloured_unitarity(const Colour& lambda, const Colour& mu, const Deformation& p) {
  const ParamMatrix flip = flip_matrix(2);
  const ParamMatrix r = coloured_R(lambda, mu, p).matrix;
  const ParamMatrix r21 = flip * coloured_R(mu, lambda, p).matrix * flip;
  VerificationReport report;
  report.add_residual("coloured unitarity R(l,m) P R(m,l) P = 1", r * r21 - ParamMatrix::identity(4));
  report.add_residual("colour swap P R(m,l) P = R(l,m)^-1", r21 - mat_inverse(r));
  return report;
}

VerificationReport verify_braided_ybe(const Colour& lambda, const Colour& mu, const Colour& nu,
                                      const Deformation& p) {
  auto on12 = [](const ParamMatrix& m) { return kron(m, ParamMatrix::identity(2)); };
  auto on23 = [](const ParamMatrix& m) { return kron(ParamMatrix::identity(2), m); };
  const ParamMatrix lm = braid_operator(lambda, mu, p).matrix;
  const ParamMatrix ln = braid_operator(lambda, nu, p).matrix;
  const ParamMatrix mn = braid_operator(mu, nu, p).matrix;
  VerificationReport report;
  report.add_residual("braided YBE Rh23(l,m) Rh12(l,n) Rh23(m,n) = Rh12(m,n) Rh23(l,n) Rh12(l,m)",
                      on23(lm) * on12(ln) * on23(mn) - on12(mn) * on23(ln) * on12(lm));
  return report;
}

VerificationReport verify_characteristic_equation(const Colour& lambda, const Colour& mu, const Deformation& p,
                                                  const WitnessPoint& witness) {
  const ParamMatrix one = ParamMatrix::identity(4);
  const ParamMatrix b = braid_operator(lambda, mu, p).matrix;
  const ParamMatrix minus = b - one;
  const ParamMatrix plus = b + one;
  VerificationReport report;
  report.add_residual("(Rh-1)^3 (Rh+1) = 0", minus * minus * minus * plus);

  // Fourth order is minimal away from equal colours; one exact witness.
  const BraidOperator symbolic = braid_operator(colour("lambda"), colour("mu"));
  const ParamMatrix bw = at_point(symbolic.matrix, witness, symbolic.lambda, symbolic.mu);
  const ParamMatrix wm = bw - one;
  const ParamMatrix wp = bw + one;
  const std::string where = "at h=" + witness.h.get_str() + ", s=" + witness.s.get_str() +
                            ", lambda=" + witness.lambda.get_str() + ", mu=" + witness.mu.get_str();
  report.add("Hecke failure (Rh-1)(Rh+1) != 0 " + where, !(wm * wp).is_zero(), format_matrix(wm * wp, ScalarStyle::plain));
  report.add("(Rh-1)^2 (Rh+1) != 0 " + where, !(wm * wm * wp).is_zero(),
             format_matrix(wm * wm * wp, ScalarStyle::plain));

  const ParamMatrix equal = braid_operator(lambda, lambda, p).matrix;
  report.add_residual("equal colours Rh^2 = 1", equal * equal - one);
  return report;
}

ColouredRMatrix specialize(const ColouredRMatrix& r, const std::map<Symbol, Scalar>& bindings) {
  return {r.lambda.substitute(bindings), r.mu.substitute(bindings), r.matrix.substitute(bindings)};
}

ColouredRMatrix specialize(const ColouredRMatrix& r, Specialization preset, const Colour& eta) {
  std::map<Symbol, Scalar> colours;
  const Colour target = preset == Specialization::one_parameter ? Colour(0) : eta;
  for (const Colour* c : {&r.lambda, &r.mu}) {
    if (auto x = as_symbol(*c)) {
      colours[*x] = target;
    } else if (*c != target) {
      throw Error("specialize: colour " + format_scalar(*c) + " is not a symbol");
    }
  }
  ColouredRMatrix out = specialize(r, colours);
  if (preset == Specialization::one_parameter) return out;

  // h = (z + z')/2 and s = (z' - z)/(2 eta).
  const Scalar z(Symbol("z"));
  const Scalar zp(Symbol("zp"));
  if (eta.is_zero()) throw Error("two-parameter preset needs a nonzero eta");
  const std::map<Symbol, Scalar> rename = {{sym_h(), (z + zp) / Scalar(2)},
                                           {sym_s(), (zp - z) / (Scalar(2) * eta)}};
  return {out.lambda, out.mu, out.matrix.substitute(rename)};
}

VerificationReport verify_specializations() {
  const Deformation p;
  VerificationReport report;
  const Colour lambda = colour("lambda");
  const Colour mu = colour("mu");
  const ColouredRMatrix r = coloured_R(lambda, mu, p);

  const ColouredRMatrix two = specialize(r, Specialization::two_parameter);
  const Scalar z(Symbol("z"));
  const Scalar zp(Symbol("zp"));
  report.add_residual("two-parameter limit lambda=mu=eta, z'=h+eta s, z=h-eta s",
                      two.matrix - two_parameter_R(z, zp));
  report.add("two-parameter corner entry = z z'", two.matrix(0, 3) == z * zp, format_scalar(two.matrix(0, 3)));

  const ColouredRMatrix one = specialize(r, Specialization::one_parameter);
  const ParamMatrix expected = {{1, p.h, -p.h, p.h * p.h}, {0, 1, 0, p.h}, {0, 0, 1, -p.h}, {0, 0, 0, 1}};
  report.add_residual("one-parameter limit lambda=mu=0", one.matrix - expected);
  return report;
}

}  // namespace jordanian
