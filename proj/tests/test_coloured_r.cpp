#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jordanian/coloured_r.hpp"
#include "support.hpp"

using namespace jordanian;
using jordanian::test::S;

namespace {
const Colour lambda = colour("lambda");
const Colour mu = colour("mu");
const Colour nu = colour("nu");
}  // namespace

TEST_CASE("coloured R-matrix entries") {
  const ParamMatrix r = coloured_R(lambda, mu).matrix;
  CHECK(r(0, 1) == S("h + lambda*s"));
  CHECK(r(0, 2) == S("-(h + mu*s)"));
  CHECK(r(0, 3) == colour_f(lambda, mu));
  CHECK(r(1, 3) == S("h - mu*s"));
  CHECK(r(2, 3) == S("-(h - lambda*s)"));
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(r(i, i) == Scalar(1));
    for (std::size_t j = 0; j < i; ++j) CHECK(r(i, j).is_zero());
  }
  CHECK(r(1, 2).is_zero());
}

TEST_CASE("vanishing colours give the one-parameter matrix") {
  const ParamMatrix r0 = coloured_R(Colour(0), Colour(0)).matrix;
  CHECK(r0 == test::oracle_matrix(test::oracle()["matrices"]["r_matrix_at_zero"]));
  CHECK(specialize(coloured_R(lambda, mu), Specialization::one_parameter).matrix == r0);
}

TEST_CASE("two-parameter identification") {
  const ParamMatrix r = specialize(coloured_R(lambda, mu), Specialization::two_parameter).matrix;
  const Scalar z(Symbol("z"));
  const Scalar zp(Symbol("zp"));
  CHECK(r == two_parameter_R(z, zp));
  CHECK(r(0, 3) == z * zp);
  CHECK(two_parameter_R(S("h"), S("h")) == coloured_R(Colour(0), Colour(0)).matrix);
}

TEST_CASE("specialization by bindings") {
  const ColouredRMatrix r = specialize(coloured_R(lambda, mu), {{Symbol("lambda"), Scalar(1)}});
  CHECK(r.lambda == Scalar(1));
  CHECK(r.matrix == coloured_R(Colour(1), mu).matrix);
}

TEST_CASE("braid operator") {
  const BraidOperator b = braid_operator(lambda, mu);
  CHECK(b.matrix == flip_matrix(2) * coloured_R(lambda, mu).matrix);
}

TEST_CASE("Yang-Baxter, unitarity, braid relation") {
  CHECK(verify_coloured_ybe(lambda, mu, nu).all_pass());
  CHECK(verify_coloured_unitarity(lambda, mu).all_pass());
  CHECK(verify_braided_ybe(lambda, mu, nu).all_pass());
  CHECK(verify_specializations().all_pass());
  CHECK(test::oracle()["matrices"]["ybe_zero"] == true);
  CHECK(test::oracle()["matrices"]["unitarity"] == true);
}

TEST_CASE("numeric colours") {
  Deformation p;
  p.h = Scalar(1);
  p.s = Scalar(2);
  CHECK(verify_coloured_ybe(Colour(3), Colour(5), Colour(7), p).all_pass());
  CHECK(coloured_R(Colour(3), Colour(5), p).matrix(0, 3) == Scalar(1 - 60 - 2 * (3 - 5)));
}

TEST_CASE("characteristic equation and Hecke failure") {
  const VerificationReport r = verify_characteristic_equation(lambda, mu);
  CHECK(r.all_pass());
  CHECK(r.size() == 4);
  const ParamMatrix i4 = ParamMatrix::identity(4);
  std::map<Symbol, Scalar> w{{sym_h(), Scalar(1)}, {sym_s(), Scalar(1)}, {Symbol("lambda"), Scalar(1)},
                             {Symbol("mu"), Scalar(2)}};
  const ParamMatrix b = braid_operator(lambda, mu).matrix;
  CHECK(((b - i4) * (b + i4)).substitute(w) == test::oracle_matrix(test::oracle()["matrices"]["hecke_witness"]));
  CHECK(((b - i4) * (b - i4) * (b + i4)).substitute(w) ==
        test::oracle_matrix(test::oracle()["matrices"]["quadratic_witness"]));
  CHECK(((b - i4).pow(3) * (b + i4)).is_zero());
  const ParamMatrix bb = braid_operator(lambda, lambda).matrix;
  CHECK(bb * bb == i4);
}
