#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>

#include "jordanian/coloured_r.hpp"
#include "jordanian/hopf_structure.hpp"
#include "jordanian/rep_checks.hpp"
#include "support.hpp"

using namespace jordanian;
using jordanian::test::S;
using G = Generator;

namespace {
const Colour lambda = colour("lambda");
const Colour mu = colour("mu");
const Colour nu = colour("nu");
const Colour eta = colour("eta");
}  // namespace

TEST_CASE("fundamental representation") {
  const auto rep = fundamental_rep(eta);
  CHECK(rep.at(G::J3) == ParamMatrix{{1, 0}, {0, -1}});
  CHECK(rep.at(G::Jplus) == ParamMatrix{{0, 1}, {0, 0}});
  CHECK(rep.at(G::Z) == ParamMatrix{{eta, 0}, {0, eta}});
  CHECK(rep.at(G::Jminus) == test::oracle_matrix(test::oracle()["matrices"]["rep_jminus"]));
  CHECK(rep.at(G::Jminus)(0, 0) == S("(h + eta*s)^2/(2*h)"));
  CHECK(rep.at(G::E) == ParamMatrix{{1, S("2*h")}, {0, 1}});
  CHECK(rep.at(G::E) * rep.at(G::Einv) == ParamMatrix::identity(2));
  CHECK(rep.at(G::One) == ParamMatrix::identity(2));
}

TEST_CASE("structure maps on generators") {
  const std::array<Colour, 2> lm = {lambda, mu};
  const ParamMatrix i2 = ParamMatrix::identity(2);
  const ParamMatrix jp = fundamental_image(G::Jplus, lambda);
  CHECK(evaluate(coproduct(G::Jplus), lm) == kron(i2, fundamental_image(G::Jplus, mu)) + kron(jp, i2));
  CHECK(evaluate(coproduct(G::E), lm) == kron(fundamental_image(G::E, lambda), fundamental_image(G::E, mu)));
  CHECK(evaluate(coproduct(G::Z), lm) == ParamMatrix{{S("lambda + mu"), 0, 0, 0},
                                                     {0, S("lambda + mu"), 0, 0},
                                                     {0, 0, S("lambda + mu"), 0},
                                                     {0, 0, 0, S("lambda + mu")}});
  CHECK(counit(G::J3).is_zero());
  CHECK(counit(G::Jminus).is_zero());
  CHECK(counit(G::E) == Scalar(1));
  CHECK(counit(G::Einv) == Scalar(1));
  CHECK(antipode(G::E) == Element(G::Einv));
  CHECK(antipode(G::Z) == -Element(G::Z));
  CHECK(antipode(G::Jplus) == -Element(G::Jplus));
  CHECK(generator_name(G::Jplus) == "J+");
}

TEST_CASE("antipode is an anti-homomorphism on words") {
  const Word w{G::J3, G::Jplus};
  CHECK(antipode(w) == antipode(G::Jplus) * antipode(G::J3));
  CHECK(evaluate(antipode(w), eta) == evaluate(antipode(G::Jplus), eta) * evaluate(antipode(G::J3), eta));
}

TEST_CASE("defining relations hold in the fundamental representation") {
  const VerificationReport r = check_defining_relations(eta);
  // Three commutators, centrality of Z against J3, J+, J-, and the two E identities.
  CHECK(r.size() == 8);
  CHECK(r.all_pass());
}

TEST_CASE("a wrong representation fails without aborting the report") {
  GeneratorImages classical;
  for (G g : {G::One, G::J3, G::Jplus, G::Jminus, G::Z}) classical[g] = classical_image(g, eta);
  classical[G::E] = fundamental_image(G::E, eta);
  classical[G::Einv] = fundamental_image(G::Einv, eta);
  const auto residuals = relation_residuals(classical);
  CHECK(residuals.size() == 6);
  int nonzero = 0;
  for (const auto& [name, m] : residuals) nonzero += m.is_zero() ? 0 : 1;
  CHECK(nonzero > 0);
  CHECK(nonzero < 6);
}

TEST_CASE("Hopf axioms") {
  const VerificationReport r = verify_hopf_axioms(lambda, mu, nu, eta);
  CHECK(r.all_pass());
  CHECK(r.size() >= 4 + 8 + 8 + 4);
  CHECK(check_hopf_subalgebra().all_pass());
}

TEST_CASE("quasitriangularity and the universal R") {
  CHECK(universal_R_rep(lambda, mu) == coloured_R(lambda, mu).matrix);
  const VerificationReport r = verify_quasitriangularity(lambda, mu, nu);
  CHECK(r.all_pass());
  CHECK(r.size() == 6);
}

TEST_CASE("classical structure") {
  const VerificationReport r = classical_structure(lambda, mu, nu);
  CHECK(r.all_pass());
  const ParamMatrix cr = classical_r(lambda, mu);
  // h J3 ^ J+ + s Z ^ J+ is strictly upper triangular.
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j <= i; ++j) CHECK(cr(i, j).is_zero());
  }
}

TEST_CASE("report JSON") {
  VerificationReport r;
  r.add_residual("zero", ParamMatrix::zero(2, 2));
  r.add_residual("nonzero", ParamMatrix{{S("h"), 0}, {0, 0}});
  r.add("flag", true, "note");
  const nlohmann::json j = r.to_json();
  CHECK(j.size() == 3);
  CHECK(j[0]["status"] == "pass");
  CHECK(j[0]["residual"].is_null());
  CHECK(j[1]["status"] == "fail");
  CHECK(j[1]["residual"]["entries"][0][0] == "h");
  CHECK(j[2]["detail"] == "note");
  CHECK(r.failures() == 1);
  CHECK_FALSE(r.all_pass());
  CHECK(r.find("flag") != nullptr);
  CHECK(r.find("missing") == nullptr);
}
