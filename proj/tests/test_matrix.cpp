#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jordanian/coloured_r.hpp"
#include "jordanian/error.hpp"
#include "jordanian/param_matrix.hpp"
#include "support.hpp"

using namespace jordanian;
using jordanian::test::S;

TEST_CASE("kron follows the flat index convention") {
  const ParamMatrix a{{1, 2}, {3, 4}};
  const ParamMatrix b{{0, 1}, {1, 0}};
  const ParamMatrix k = kron(a, b);
  CHECK(k.rows() == 4);
  // (e_i (x) e_j) sits at 2i + j.
  CHECK(k(0, 1) == Scalar(1));
  CHECK(k(1, 0) == Scalar(1));
  CHECK(k(2, 1) == Scalar(3));
  CHECK(k(2, 3) == Scalar(4));
  CHECK(k(3, 2) == Scalar(4));
  CHECK(k(0, 3) == Scalar(2));
  CHECK(k(0, 0).is_zero());
}

TEST_CASE("kron dimensions") {
  const ParamMatrix a(2, 3);
  const ParamMatrix b(4, 1);
  const ParamMatrix k = kron(a, b);
  CHECK(k.rows() == 8);
  CHECK(k.cols() == 3);
}

TEST_CASE("flip matrix") {
  const ParamMatrix p = flip_matrix(2);
  CHECK(p * p == ParamMatrix::identity(4));
  const ParamMatrix a{{S("h"), 1}, {0, S("s")}};
  const ParamMatrix b{{1, S("lambda")}, {S("mu"), 2}};
  CHECK(p * kron(a, b) * p == kron(b, a));
}

TEST_CASE("leg embedding") {
  const ParamMatrix a{{S("h"), 1}, {0, S("s")}};
  const ParamMatrix b{{1, S("lambda")}, {S("mu"), 2}};
  const ParamMatrix ab = kron(a, b);
  const ParamMatrix i2 = ParamMatrix::identity(2);
  CHECK(leg_embed(ab, {1, 2}, 2) == kron(ab, i2));
  CHECK(leg_embed(ab, {2, 3}, 2) == kron(i2, ab));
  CHECK(leg_embed(ab, {1, 3}, 2) == kron(kron(a, i2), b));
  // The first factor sits on legs.first.
  CHECK(leg_embed(ab, {3, 1}, 2) == kron(kron(b, i2), a));
  const ParamMatrix q = kron(i2, flip_matrix(2));
  CHECK(leg_embed(ab, {1, 3}, 2) == q * kron(ab, i2) * q);
  CHECK_THROWS_AS(leg_embed(ab, {1, 1}, 2), DimensionMismatch);
}

TEST_CASE("nilpotent exponential") {
  ParamMatrix n(2, 2);
  n(0, 1) = S("2*h");
  const ParamMatrix e = nilpotent_exp(n);
  CHECK(e == ParamMatrix::identity(2) + n);
  CHECK(nilpotent_exp(ParamMatrix::zero(3, 3)) == ParamMatrix::identity(3));
  ParamMatrix j(3, 3);
  j(0, 1) = 1;
  j(1, 2) = 1;
  const ParamMatrix ej = nilpotent_exp(j);
  CHECK(ej(0, 2) == S("1/2"));
  CHECK(ej * nilpotent_exp(-j) == ParamMatrix::identity(3));
  CHECK_THROWS_AS(nilpotent_exp(ParamMatrix::identity(2)), NotNilpotent);
  CHECK_THROWS_AS(nilpotent_exp(j, 2), NotNilpotent);
}

TEST_CASE("the universal R argument squares to zero") {
  // -J+ (x) (h J3 + s Z) in the fundamental representation.
  ParamMatrix jp(2, 2);
  jp(0, 1) = 1;
  ParamMatrix cartan{{S("h + mu*s"), 0}, {0, S("-h + mu*s")}};
  const ParamMatrix x = -kron(jp, cartan);
  CHECK((x * x).is_zero());
  CHECK(nilpotent_exp(x) == ParamMatrix::identity(4) + x);
}

TEST_CASE("inverse") {
  const ParamMatrix r = coloured_R(colour("lambda"), colour("mu")).matrix;
  const ParamMatrix r_inv = mat_inverse(r);
  CHECK(r * r_inv == ParamMatrix::identity(4));
  CHECK(r_inv * r == ParamMatrix::identity(4));
  CHECK(r_inv == test::oracle_matrix(test::oracle()["matrices"]["r_inverse"]));
  CHECK(mat_inverse(ParamMatrix::identity(4)) == ParamMatrix::identity(4));
  const ParamMatrix a{{S("h"), S("s")}, {S("lambda"), S("mu")}};
  CHECK(mat_inverse(a) * a == ParamMatrix::identity(2));
  CHECK(mat_inverse(a)(0, 0) == S("mu/(h*mu - s*lambda)"));
  CHECK_THROWS_AS(mat_inverse(ParamMatrix{{S("h"), S("s")}, {S("2*h"), S("2*s")}}), SingularMatrix);
  CHECK_THROWS_AS(mat_inverse(ParamMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("dimension errors") {
  CHECK_THROWS_AS(ParamMatrix(2, 2) * ParamMatrix(3, 3), DimensionMismatch);
  CHECK_THROWS_AS(ParamMatrix(2, 2) + ParamMatrix(2, 3), DimensionMismatch);
}

TEST_CASE("matrix JSON round trip") {
  const ParamMatrix r = coloured_R(colour("lambda"), colour("mu")).matrix;
  const nlohmann::json j = to_json(r);
  CHECK(j["rows"] == 4);
  CHECK(j["cols"] == 4);
  CHECK(j["entries"][0][1] == "h + lambda*s");
  CHECK(j["entries"][0][3] == "h^2 + h*mu*s - h*lambda*s - lambda*mu*s^2");
  CHECK(matrix_from_json(j) == r);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"rows", 1}, {"cols", 2}, {"entries", {{"1"}}}}), Error);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"rows", 1}}), Error);
}

TEST_CASE("matrix formatting") {
  const ParamMatrix a{{S("h"), 0}, {S("lambda*s"), 1}};
  CHECK(format_matrix(a, ScalarStyle::plain) == "[h, 0]\n[lambda*s, 1]\n");
  CHECK(format_matrix(a, ScalarStyle::latex) ==
        "\\begin{pmatrix}\nh & 0 \\\\\n\\lambda s & 1\n\\end{pmatrix}\n");
}
