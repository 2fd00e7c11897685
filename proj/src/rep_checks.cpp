#include "jordanian/rep_checks.hpp"

#include <array>
#include <set>

namespace jordanian {
namespace {

using G = Generator;

constexpr std::array<G, 4> kAlgebraGenerators = {G::J3, G::Jplus, G::Jminus, G::Z};

Element cartan(const Deformation& p) { return p.h * Element(G::J3) + p.s * Element(G::Z); }

GeneratorImages coproduct_images(const Colour& lambda, const Colour& mu, const Deformation& p) {
  const std::array<Colour, 2> colours = {lambda, mu};
  GeneratorImages images;
  for (G g : {G::One, G::J3, G::Jplus, G::Jminus, G::Z, G::E, G::Einv}) {
    images.emplace(g, evaluate(coproduct(g, p), colours, p));
  }
  return images;
}

ParamMatrix wedge(const ParamMatrix& a, const ParamMatrix& b, const ParamMatrix& a2, const ParamMatrix& b2) {
  // a (x) b2 - b (x) a2, where a, b live on leg 1 and a2, b2 are the same
  // generators on leg 2.
  return kron(a, b2) - kron(b, a2);
}

}  // namespace

std::vector<std::pair<std::string, ParamMatrix>> relation_residuals(const GeneratorImages& x,
                                                                     const Deformation& p) {
  const ParamMatrix& one = x.at(G::One);
  const ParamMatrix& j3 = x.at(G::J3);
  const ParamMatrix& jp = x.at(G::Jplus);
  const ParamMatrix& jm = x.at(G::Jminus);
  const ParamMatrix& z = x.at(G::Z);
  const ParamMatrix& e = x.at(G::E);
  const Scalar inv_h = Scalar(1) / p.h;
  std::vector<std::pair<std::string, ParamMatrix>> out;
  out.emplace_back("[J3,J+] = (E-1)/h", commutator(j3, jp) - inv_h * (e - one));
  out.emplace_back("[J3,J-] = -2J- + h J3^2 + 2s Z J3 + (s^2/h) Z^2",
                   commutator(j3, jm) - (Scalar(-2) * jm + p.h * (j3 * j3) + Scalar(2) * p.s * (z * j3) +
                                         (p.s * p.s * inv_h) * (z * z)));
  out.emplace_back("[J+,J-] = J3 + (s/h) Z (1-E)", commutator(jp, jm) - (j3 + (p.s * inv_h) * (z * (one - e))));
  out.emplace_back("[Z,J3] = 0", commutator(z, j3));
  out.emplace_back("[Z,J+] = 0", commutator(z, jp));
  out.emplace_back("[Z,J-] = 0", commutator(z, jm));
  return out;
}

VerificationReport check_defining_relations(const Colour& eta, const Deformation& p) {
  VerificationReport report;
  for (auto& [name, residual] : relation_residuals(fundamental_rep(eta, p), p)) {
    report.add_residual("relation " + name, residual);
  }
  report.add_residual("pi(E) = exp(2h pi(J+))",
                      fundamental_image(G::E, eta, p) -
                          nilpotent_exp(Scalar(2) * p.h * fundamental_image(G::Jplus, eta, p)));
  report.add_residual("pi(E) pi(Einv) = 1",
                      fundamental_image(G::E, eta, p) * fundamental_image(G::Einv, eta, p) -
                          ParamMatrix::identity(2));
  return report;
}

VerificationReport verify_hopf_axioms(const Colour& lambda, const Colour& mu, const Colour& nu,
                                      const Colour& eta, const Deformation& p) {
  VerificationReport report;
  const std::array<Colour, 3> triple = {lambda, mu, nu};
  for (G g : kAlgebraGenerators) {
    const std::string x = generator_name(g);
    const TensorExpression delta = coproduct(g, p);
    report.add_residual("coassociativity " + x, evaluate(coproduct_on_leg(delta, 0, p), triple, p) -
                                                    evaluate(coproduct_on_leg(delta, 1, p), triple, p));

    const std::array<Colour, 1> single = {eta};
    const ParamMatrix image = fundamental_image(g, eta, p);
    report.add_residual("counit (eps x id)Delta " + x, evaluate(counit_on_leg(delta, 0), single, p) - image);
    report.add_residual("counit (id x eps)Delta " + x, evaluate(counit_on_leg(delta, 1), single, p) - image);

    const ParamMatrix unit = counit(g) * ParamMatrix::identity(2);
    report.add_residual("antipode m(gamma x id)Delta " + x, evaluate(antipode_multiply(delta, 0, p), eta, p) - unit);
    report.add_residual("antipode m(id x gamma)Delta " + x, evaluate(antipode_multiply(delta, 1, p), eta, p) - unit);
  }
  for (auto& [name, residual] : relation_residuals(coproduct_images(lambda, mu, p), p)) {
    report.add_residual("coproduct homomorphism " + name, residual);
  }
  return report;
}

VerificationReport check_hopf_subalgebra(const Deformation& p) {
  const std::set<G> allowed = {G::J3, G::Jplus, G::Z, G::E, G::Einv};
  auto closed = [&](const Word& w) {
    for (G g : w) {
      if (!allowed.contains(g)) return false;
    }
    return true;
  };
  VerificationReport report;
  for (G g : allowed) {
    bool ok = true;
    const TensorExpression delta = coproduct(g, p);
    for (const auto& [legs, c] : delta.terms()) {
      for (const auto& w : legs) ok = ok && closed(w);
    }
    const Element gamma = antipode(g, p);
    for (const auto& [w, c] : gamma.terms()) ok = ok && closed(w);
    report.add("Hopf subalgebra closure " + generator_name(g), ok);
  }
  return report;
}

ParamMatrix universal_R_rep(const Colour& lambda, const Colour& mu, const Deformation& p) {
  const ParamMatrix left = -kron(fundamental_image(G::Jplus, lambda, p), evaluate(cartan(p), mu, p));
  const ParamMatrix right = kron(evaluate(cartan(p), lambda, p), fundamental_image(G::Jplus, mu, p));
  return nilpotent_exp(left) * nilpotent_exp(right);
}

VerificationReport verify_quasitriangularity(const Colour& lambda, const Colour& mu, const Colour& nu,
                                             const Deformation& p) {
  VerificationReport report;
  const ParamMatrix flip = flip_matrix(2);
  const ParamMatrix r = universal_R_rep(lambda, mu, p);
  const ParamMatrix r_inv = mat_inverse(r);
  const std::array<Colour, 2> forward = {lambda, mu};
  const std::array<Colour, 2> swapped = {mu, lambda};
  for (G g : kAlgebraGenerators) {
    const TensorExpression delta = coproduct(g, p);
    report.add_residual("intertwining sigma(Delta " + generator_name(g) + ") = R Delta R^-1",
                        flip * evaluate(delta, swapped, p) * flip - r * evaluate(delta, forward, p) * r_inv);
  }

  const Element h_elem = cartan(p);
  const ParamMatrix jp_lambda = fundamental_image(G::Jplus, lambda, p);
  const ParamMatrix jp_nu = fundamental_image(G::Jplus, nu, p);
  const ParamMatrix h_lambda = evaluate(h_elem, lambda, p);
  const ParamMatrix h_nu = evaluate(h_elem, nu, p);
  const TensorExpression delta_jp = coproduct(G::Jplus, p);
  const TensorExpression delta_h = coproduct(h_elem, p);
  const std::array<Colour, 2> mu_nu = {mu, nu};

  const ParamMatrix r12 = leg_embed(r, {1, 2}, 2);
  const ParamMatrix r13 = leg_embed(universal_R_rep(lambda, nu, p), {1, 3}, 2);
  const ParamMatrix r23 = leg_embed(universal_R_rep(mu, nu, p), {2, 3}, 2);

  const ParamMatrix delta_first = nilpotent_exp(-kron(evaluate(delta_jp, forward, p), h_nu)) *
                                  nilpotent_exp(kron(evaluate(delta_h, forward, p), jp_nu));
  report.add_residual("fusion (Delta x id)R = R13 R23", delta_first - r13 * r23);

  const ParamMatrix delta_second = nilpotent_exp(-kron(jp_lambda, evaluate(delta_h, mu_nu, p))) *
                                   nilpotent_exp(kron(h_lambda, evaluate(delta_jp, mu_nu, p)));
  report.add_residual("fusion (id x Delta)R = R13 R12", delta_second - r13 * r12);
  return report;
}

ParamMatrix classical_r(const Colour& lambda, const Colour& mu, const Deformation& p) {
  const ParamMatrix j3a = classical_image(G::J3, lambda);
  const ParamMatrix jpa = classical_image(G::Jplus, lambda);
  const ParamMatrix za = classical_image(G::Z, lambda);
  const ParamMatrix j3b = classical_image(G::J3, mu);
  const ParamMatrix jpb = classical_image(G::Jplus, mu);
  const ParamMatrix zb = classical_image(G::Z, mu);
  return p.h * wedge(j3a, jpa, j3b, jpb) + p.s * wedge(za, jpa, zb, jpb);
}

VerificationReport classical_structure(const Colour& lambda, const Colour& mu, const Colour& nu,
                                       const Deformation& p) {
  VerificationReport report;

  // Undeformed gl(2) in the classical representation.
  {
    const ParamMatrix j3 = classical_image(G::J3, lambda);
    const ParamMatrix jp = classical_image(G::Jplus, lambda);
    const ParamMatrix jm = classical_image(G::Jminus, lambda);
    const ParamMatrix z = classical_image(G::Z, lambda);
    report.add_residual("gl(2) [J3,J+] = 2J+", commutator(j3, jp) - Scalar(2) * jp);
    report.add_residual("gl(2) [J3,J-] = -2J-", commutator(j3, jm) + Scalar(2) * jm);
    report.add_residual("gl(2) [J+,J-] = J3", commutator(jp, jm) - j3);
    report.add_residual("gl(2) [Z,.] = 0", commutator(z, j3) + commutator(z, jp) + commutator(z, jm));
  }

  const ParamMatrix r12 = leg_embed(classical_r(lambda, mu, p), {1, 2}, 2);
  const ParamMatrix r13 = leg_embed(classical_r(lambda, nu, p), {1, 3}, 2);
  const ParamMatrix r23 = leg_embed(classical_r(mu, nu, p), {2, 3}, 2);
  report.add_residual("CYBE [r12,r13] + [r12,r23] + [r13,r23] = 0",
                      commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23));

  const ParamMatrix r = classical_r(lambda, mu, p);
  const ParamMatrix i2 = ParamMatrix::identity(2);
  auto im = [&](G g, const Colour& c) { return classical_image(g, c); };
  auto delta = [&](G g) {
    return commutator(kron(im(g, lambda), i2) + kron(i2, im(g, mu)), r);
  };
  auto wedge_of = [&](G a, G b) { return kron(im(a, lambda), im(b, mu)) - kron(im(b, lambda), im(a, mu)); };
  report.add_residual("cocommutator delta(J+) = 0", delta(G::Jplus));
  report.add_residual("cocommutator delta(Z) = 0", delta(G::Z));
  report.add_residual("cocommutator delta(J3) = 2h J3^J+ + 2s Z^J+",
                      delta(G::J3) - (Scalar(2) * p.h * wedge_of(G::J3, G::Jplus) +
                                      Scalar(2) * p.s * wedge_of(G::Z, G::Jplus)));
  report.add_residual("cocommutator delta(J-) = 2h J-^J+ + s J3^Z",
                      delta(G::Jminus) - (Scalar(2) * p.h * wedge_of(G::Jminus, G::Jplus) +
                                          p.s * wedge_of(G::J3, G::Z)));

  // First-order agreement with the quantum R-matrix. A truncation in h and s
  // needs them formal, so numeric values are not substituted here.
  const Deformation formal;
  const ParamMatrix higher =
      universal_R_rep(lambda, mu, formal) - ParamMatrix::identity(4) - classical_r(lambda, mu, formal);
  bool quadratic = true;
  std::string offending;
  const std::array<Symbol, 2> params = {sym_h(), sym_s()};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const Scalar& e = higher(i, j);
      if (e.is_zero()) continue;
      if (!e.is_polynomial() || e.numerator().min_degree_in(params) < 2) {
        quadratic = false;
        offending = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + format_scalar(e);
      }
    }
  }
  report.add("first order R - 1 - r = O(h,s)^2", quadratic, offending);
  return report;
}

}  // namespace jordanian
