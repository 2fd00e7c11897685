#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jordanian/error.hpp"
#include "jordanian/relations.hpp"
#include "jordanian/sector.hpp"
#include "support.hpp"

using namespace jordanian;
using jordanian::test::S;

namespace {
const Colour lambda = colour("lambda");
const Colour mu = colour("mu");
NCPoly x(Letter l, const Colour& c = lambda, int copy = 0) { return NCPoly(generator(l, c, copy)); }
const NCPoly a = x(Letter::a);
const NCPoly b = x(Letter::b);
const NCPoly c = x(Letter::c);
const NCPoly d = x(Letter::d);
}  // namespace

TEST_CASE("free algebra arithmetic") {
  CHECK(a * b != b * a);
  CHECK(commutator(a, b) == a * b - b * a);
  CHECK((a * b).size() == 1);
  CHECK((a + a).coefficient({generator(Letter::a, lambda)}) == Scalar(2));
  CHECK((a - a).is_zero());
  CHECK((S("h") * a * b).coefficient({generator(Letter::a, lambda), generator(Letter::b, lambda)}) == S("h"));
  CHECK((a * (b + c)) == a * b + a * c);
  CHECK(((a * b) * c) == (a * (b * c)));
  CHECK(NCPoly(Scalar(0)).is_zero());
}

TEST_CASE("grading") {
  const NCPoly p = a * x(Letter::b, mu) - S("h") * x(Letter::c, mu) * d;
  CHECK(p.is_homogeneous());
  CHECK(p.length() == 2u);
  const Multidegree deg = *p.homogeneous_degree();
  CHECK(deg.at(Slot{lambda, 0}) == 1);
  CHECK(deg.at(Slot{mu, 0}) == 1);
  CHECK_FALSE((a * b + x(Letter::c, mu) * d).is_homogeneous());
  CHECK_FALSE((a * b + c).length().has_value());
}

TEST_CASE("word order: letter, colour, copy") {
  CHECK(generator(Letter::a, mu) < generator(Letter::b, lambda));
  CHECK(generator(Letter::a, lambda) != generator(Letter::a, mu));
  CHECK(generator(Letter::d, Colour(0)) < generator(Letter::d, Colour(1)));
  CHECK(generator(Letter::a, lambda, 0) < generator(Letter::a, lambda, 1));
}

TEST_CASE("formatting") {
  const NCPoly p = a * d - b * c - S("h + lambda*s") * a * c;
  CHECK(format_ncpoly(p) == "(-h - lambda*s)*a_lambda*c_lambda + a_lambda*d_lambda - b_lambda*c_lambda");
  CHECK(format_ncpoly(p, ScalarStyle::latex) ==
        "\\left(-h-\\lambda s\\right) a_{\\lambda} c_{\\lambda}+a_{\\lambda} d_{\\lambda}-b_{\\lambda} c_{\\lambda}");
  CHECK(format_ncpoly(NCPoly()) == "0");
  CHECK(format_generator(generator(Letter::a, Colour(0))) == "a_0");
  CHECK(format_generator(generator(Letter::b, S("1/2"))) == "b_(1/2)");
  CHECK(format_generator(generator(Letter::c, S("lambda + mu"))) == "c_(mu + lambda)");
  CHECK(format_generator(generator(Letter::d, lambda, 1)) == "d'_lambda");
  CHECK(format_ncpoly(S("-2") * a) == "-2*a_lambda");
  CHECK(format_ncpoly(NCPoly(S("h"))) == "h");
}

TEST_CASE("substitution and copies") {
  const NCPoly p = S("h") * a * x(Letter::b, mu);
  const NCPoly q = p.substitute({{sym_h(), Scalar(2)}, {Symbol("mu"), Scalar(3)}});
  CHECK(q == Scalar(2) * a * x(Letter::b, Colour(3)));
  const NCPoly mixed = x(Letter::a, lambda, 1) * b * x(Letter::c, lambda, 1);
  CHECK(mixed.copies_normal_ordered() == b * x(Letter::a, lambda, 1) * x(Letter::c, lambda, 1));
  CHECK((a * b).with_copy(1) == x(Letter::a, lambda, 1) * x(Letter::b, lambda, 1));
}

TEST_CASE("sector dimensions") {
  CHECK(Sector::dimension_of({{Slot{lambda, 0}, 1}, {Slot{mu, 0}, 1}}, false) == 32);
  CHECK(Sector::dimension_of({{Slot{lambda, 0}, 2}}, false) == 16);
  CHECK(Sector::dimension_of({{Slot{lambda, 0}, 2}, {Slot{mu, 0}, 1}}, false) == 192);
  CHECK(Sector::dimension_of({{Slot{lambda, 0}, 2}, {Slot{mu, 0}, 2}}, false) == 1536);
  CHECK(Sector::dimension_of({{Slot{lambda, 0}, 2}, {Slot{lambda, 1}, 2}}, true) == 256);
  const Sector s({{Slot{lambda, 0}, 1}, {Slot{mu, 0}, 1}}, false);
  CHECK(s.dimension() == 32);
  CHECK(std::is_sorted(s.basis().begin(), s.basis().end()));
  CHECK(s.index(s.basis()[7]) == 7u);
  CHECK_FALSE(s.index({generator(Letter::a, lambda)}).has_value());
  CHECK(s.contains(a * x(Letter::d, mu)));
  CHECK_FALSE(s.contains(a * d));
}

TEST_CASE("sector cap") {
  try {
    Sector({{Slot{lambda, 0}, 2}, {Slot{mu, 0}, 1}}, false, 100);
    FAIL("expected SectorTooLarge");
  } catch (const SectorTooLarge& e) {
    CHECK(e.required() == 192);
  }
  EngineOptions small;
  small.max_sector_dim = 10;
  RelationSet rels;
  rels.add("ab", commutator(a, b));
  CHECK_THROWS_AS(ideal_membership(commutator(a, b) * c, rels, 3, small), SectorTooLarge);
}

TEST_CASE("membership in a toy ideal") {
  RelationSet rels;
  rels.add("[a,b]", commutator(a, b));
  const Membership yes = ideal_membership(a * b * c - b * a * c + c * a * b - c * b * a, rels, 3);
  CHECK(yes.member);
  REQUIRE(yes.certificate);
  CHECK(yes.certificate_verified);
  CHECK(yes.certificate->combination.size() == 2);
  CHECK(yes.residual.is_zero());
  // All words of length 3 in a, b, c, d; [a,b] at two positions with one free letter.
  CHECK(yes.dimension == 64);
  CHECK(yes.generators == 8);
  CHECK(yes.relation_rank == 8);
  CHECK(yes.guard.ok);
  CHECK(yes.guard.detail == "no free parameters; exact rational ranks");

  const Membership no = ideal_membership(a * b * c - c * b * a, rels, 3);
  CHECK_FALSE(no.member);
  CHECK_FALSE(no.certificate);
  CHECK_FALSE(no.residual.is_zero());
  // The normal form differs from the target by an ideal element.
  CHECK(ideal_membership(a * b * c - c * b * a - no.residual, rels, 3).member);
}

TEST_CASE("membership with symbolic coefficients") {
  RelationSet rels;
  rels.add("ab", a * b - S("h") * b * a);
  const NCPoly target = a * a * b - S("h^2") * b * a * a;
  const Membership m = ideal_membership(target, rels, 3);
  CHECK(m.member);
  CHECK(m.certificate_verified);
  CHECK(m.guard.ok);
  CHECK(m.guard.detail == "3 random points agree");
  CHECK_FALSE(ideal_membership(a * a * b - S("h") * b * a * a, rels, 3).member);
  const nlohmann::json j = to_json(*m.certificate);
  CHECK(j.contains("target"));
  CHECK(j["combination"].size() == m.certificate->combination.size());
  CHECK(j["combination"][0].contains("coeff"));
}

TEST_CASE("membership input errors") {
  RelationSet rels;
  rels.add("ab", commutator(a, b));
  CHECK_THROWS_AS(ideal_membership(a * b + c, rels, 3), InhomogeneousInput);
  CHECK_THROWS_AS(ideal_membership(a * b * c, rels, 2), Error);
  RelationSet bad;
  bad.add("mixed", a * b + c);
  CHECK_THROWS_AS(ideal_membership(a * b * c, bad, 3), InhomogeneousInput);
  const Membership zero = ideal_membership(NCPoly(), rels, 3);
  CHECK(zero.member);
  CHECK(zero.certificate_verified);
}

TEST_CASE("span comparison") {
  const std::vector<NCPoly> one{commutator(a, b)};
  const std::vector<NCPoly> two{commutator(a, b), a * b + b * a};
  const std::vector<NCPoly> other{a * b};
  CHECK(span_compare(one, two).relation == SpanRelation::first_in_second);
  CHECK(span_compare(two, one).relation == SpanRelation::second_in_first);
  const std::vector<NCPoly> basis{a * b, b * a};
  CHECK(span_compare(two, basis).relation == SpanRelation::equal);
  CHECK(span_compare(one, other).relation == SpanRelation::incomparable);
  CHECK(to_string(SpanRelation::equal) == "equal");
  const Sector s = Sector::of(a * b);
  CHECK(span_rank(two, s) == 2);
}

TEST_CASE("commuting copies") {
  EngineOptions o;
  o.commuting_copies = true;
  const NCPoly a1 = x(Letter::a, lambda, 1);
  RelationSet rels;
  rels.add("ab", commutator(a, b));
  // a' b a - a' a b is the relation times a' moved to the front.
  const Membership m = ideal_membership(a1 * b * a - a * a1 * b, rels, 3, o);
  CHECK(m.member);
  CHECK(m.certificate_verified);
}
