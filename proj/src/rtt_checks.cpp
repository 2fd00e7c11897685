#include "jordanian/rtt_checks.hpp"

#include "jordanian/coloured_r.hpp"

namespace jordanian {
namespace {

std::string describe(const Membership& m) {
  std::string out = m.member ? "member" : "not a member";
  out += "; sector dimension " + std::to_string(m.dimension) + ", " + std::to_string(m.generators) +
         " generators of rank " + std::to_string(m.relation_rank);
  if (m.member && m.certificate) {
    out += "; certificate of " + std::to_string(m.certificate->combination.size()) + " terms " +
           (m.certificate_verified ? "re-multiplies exactly" : "does NOT re-multiply");
  } else if (!m.member) {
    out += "; residual " + format_ncpoly(m.residual);
  }
  return out + "; rank guard: " + m.guard.detail;
}

void require_member(VerificationReport& report, const std::string& identity, const Membership& m) {
  report.add(identity, m.member && m.certificate_verified && m.guard.ok, describe(m));
}

void require_non_member(VerificationReport& report, const std::string& identity, const Membership& m) {
  report.add(identity, !m.member && m.guard.ok, describe(m));
}

// Passes once a checked verdict exists; the verdict itself is in the name.
void record_verdict(VerificationReport& report, const std::string& identity, const Membership& m) {
  report.add(identity + (m.member ? ": member" : ": not a member"),
             m.guard.ok && (!m.member || m.certificate_verified), describe(m));
}

std::string name_of(Letter x, const Colour& c) { return format_generator(generator(x, c)); }

NCPoly letter(Letter x, const Colour& c) { return NCPoly(generator(x, c)); }

}  // namespace

RelationSet coloured_relations(const Colour& lambda, const Colour& mu, const Deformation& p) {
  RelationSet out = paper_relations(lambda, mu, p);
  out.append(monochromatic_relations(lambda, p));
  out.append(monochromatic_relations(mu, p));
  return out;
}

VerificationReport verify_rtt_span(const Colour& lambda, const Colour& mu, const Deformation& p,
                                   const EngineOptions& options) {
  VerificationReport report;
  const std::vector<NCPoly> rtt = rtt_residual(lambda, mu, p);
  const RelationSet listed = paper_relations(lambda, mu, p);

  bool graded = true;
  std::size_t nonzero = 0;
  const Multidegree mixed = {{Slot{lambda, 0}, 1}, {Slot{mu, 0}, 1}};
  for (const auto& e : rtt) {
    if (e.is_zero()) continue;
    ++nonzero;
    graded = graded && e.homogeneous_degree() == mixed;
  }
  report.add("RTT residual entries have one lambda and one mu letter", graded,
             std::to_string(nonzero) + " nonzero entries of 16");

  const Sector sector(mixed, false, options.max_sector_dim);
  const SpanComparison cmp = span_compare(rtt, listed.elements, sector, options);
  report.add("span(RTT residual) = span(listed relations and interchanges)", cmp.relation == SpanRelation::equal,
             to_string(cmp.relation) + "; ranks " + std::to_string(cmp.rank_first) + " and " +
                 std::to_string(cmp.rank_second) + ", union " + std::to_string(cmp.rank_union) +
                 ", sector dimension " + std::to_string(cmp.dimension));
  report.add("RTT span ranks agree at random rational points", cmp.guard.ok, cmp.guard.detail);
  return report;
}

VerificationReport verify_rtt_invariants(const Colour& lambda, const Colour& mu, const Deformation& p,
                                         const EngineOptions& options) {
  VerificationReport report;
  const RelationSet combined = paper_relations(lambda, mu, p);
  const RelationSet forward = listed_relations(lambda, mu, p);
  const RelationSet backward = listed_relations(mu, lambda, p);
  for (std::size_t i = 0; i < forward.size(); ++i) {
    const Membership m = ideal_membership(forward.elements[i] + backward.elements[i], combined, 2, options);
    require_member(report, "antisymmetry " + forward.names[i] + " + " + backward.names[i], m);
  }

  // Monochromatic limit against the two-parameter relations with z = h - lambda s
  // and z' = h + lambda s. The opposite convention (-z, -z') is reported only.
  const RelationSet mono = paper_relations(lambda, lambda, p);
  const Multidegree square = {{Slot{lambda, 0}, 2}};
  const Sector sector(square, false, options.max_sector_dim);
  const Scalar z = p.minus(lambda);
  const Scalar zp = p.plus(lambda);
  for (int sign : {1, -1}) {
    const std::vector<NCPoly> gl = rtt_residual(two_parameter_R(Scalar(sign) * z, Scalar(sign) * zp), lambda, lambda);
    const SpanComparison cmp = span_compare(gl, mono.elements, sector, options);
    const bool inside = cmp.relation == SpanRelation::equal || cmp.relation == SpanRelation::first_in_second;
    const std::string detail = to_string(cmp.relation) + "; ranks " + std::to_string(cmp.rank_first) + " and " +
                               std::to_string(cmp.rank_second) + ", union " + std::to_string(cmp.rank_union) +
                               "; rank guard: " + cmp.guard.detail;
    if (sign > 0) {
      report.add("monochromatic relations contain the two-parameter relations at (z, z')", inside && cmp.guard.ok,
                 detail);
    } else {
      report.add(std::string("two-parameter relations at (-z, -z') ") + (inside ? "contained" : "not contained") +
                     " in the monochromatic relations",
                 cmp.guard.ok, detail);
    }
  }
  return report;
}

VerificationReport verify_determinant_forms(const Colour& lambda, const Deformation& p, const EngineOptions& options) {
  VerificationReport report;
  const NCPoly diff = quantum_determinant(lambda, DeterminantForm::first, p) -
                      quantum_determinant(lambda, DeterminantForm::alternate, p);
  require_member(report, "two forms of D_" + format_scalar(lambda) + " agree",
                 ideal_membership(diff, monochromatic_relations(lambda, p), 2, options));
  return report;
}

VerificationReport verify_antipode_inverse(const Colour& lambda, const Deformation& p, const EngineOptions& options) {
  VerificationReport report;
  const RelationSet mono = monochromatic_relations(lambda, p);
  const NCMatrix2 t = t_matrix(lambda);
  const NCPoly& a = t[0][0];
  const NCPoly& b = t[0][1];
  const NCPoly& c = t[1][0];
  const NCPoly& d = t[1][1];
  auto adjugate = [&](const Scalar& z) {
    NCMatrix2 m;
    m[0][0] = d - z * c;
    m[0][1] = -b - z * (d - a) + (z * z) * c;
    m[1][0] = -c;
    m[1][1] = a + z * c;
    return m;
  };
  const NCPoly det = quantum_determinant(lambda, DeterminantForm::first, p);
  const NCMatrix2 left = adjugate(p.minus(lambda)) * t;
  const NCMatrix2 right = t * adjugate(p.plus(lambda));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const std::string entry = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      const NCPoly identity = i == j ? det : NCPoly();
      require_member(report, "left inverse M1 T = D, entry " + entry,
                     ideal_membership(left[i][j] - identity, mono, 2, options));
      require_member(report, "right inverse T M2 = D, entry " + entry,
                     ideal_membership(right[i][j] - identity, mono, 2, options));
    }
  }
  return report;
}

VerificationReport verify_grouplike(const Colour& lambda, const Deformation& p, const EngineOptions& options) {
  VerificationReport report;
  const NCMatrix2 t = t_matrix(lambda, 0);
  const NCMatrix2 tp = t_matrix(lambda, 1);
  const NCPoly target = determinant_of(t * tp, lambda, p) - quantum_determinant(lambda, DeterminantForm::first, p, 0) *
                                                                 quantum_determinant(lambda, DeterminantForm::first, p, 1);
  RelationSet rels;
  const RelationSet mono = monochromatic_relations(lambda, p);
  for (std::size_t i = 0; i < mono.size(); ++i) rels.add(mono.names[i], mono.elements[i]);
  for (std::size_t i = 0; i < mono.size(); ++i) rels.add(mono.names[i] + "'", mono.elements[i].with_copy(1));
  EngineOptions commuting = options;
  commuting.commuting_copies = true;
  require_member(report, "D(T T') = D(T) D(T') for commuting copies", ideal_membership(target, rels, 4, commuting));
  return report;
}

NCPoly printed_det_commutator(Letter x, const Colour& lambda, const Colour& mu, const Deformation& p) {
  const NCPoly al = letter(Letter::a, lambda), bl = letter(Letter::b, lambda), cl = letter(Letter::c, lambda),
               dl = letter(Letter::d, lambda);
  const NCPoly am = letter(Letter::a, mu), bm = letter(Letter::b, mu), cm = letter(Letter::c, mu),
               dm = letter(Letter::d, mu);
  const NCPoly det = quantum_determinant(lambda, DeterminantForm::first, p);
  const Scalar lp = p.plus(lambda), lm = p.minus(lambda), mp = p.plus(mu), mm = p.minus(mu);
  const Scalar f_lm = colour_f(lambda, mu, p), f_ml = colour_f(mu, lambda, p);
  const Scalar shift = p.s * (mu - lambda) * lp;
  const NCPoly tail = lp * cl - dl;
  switch (x) {
    case Letter::a:
      return lm * (det * cm) - (mp * (am * dl) - lp * (cm * bl) + f_ml * (cm * dl)) * cl +
             (lp * (al * cm) - mp * (cl * am) + f_lm * (cl * cm)) * tail;
    case Letter::b:
      return lp * (am * det) + lm * (det * dm) + shift * (cl * am * cl) +
             (lp * (al * dm) - mp * (cl * bm) + f_lm * (cl * dm)) * tail -
             al * (lm * (am * dl) - mm * (bm * cl) - f_lm * (am * cl)) -
             lp * ((mp * (am * dl) - lp * (cl * bm) + f_ml * (cm * dl)) * cl);
    case Letter::c: return NCPoly();
    case Letter::d:
      return lp * (det * cm) + shift * (al * cm * cl) + Scalar(2) * p.h * p.s * (lambda - mu) * (cm * al * cl) -
             al * (lm * (cm * dl) - mm * (dm * cl) - f_lm * (cm * cl)) -
             (mm * (al * dm) - lm * (cm * bl) + (mm * mm) * (cl * dm)) * cl;
  }
  return NCPoly();
}

VerificationReport det_commutator_report(const Colour& lambda, const Colour& mu, const Deformation& p,
                                         const EngineOptions& options, bool degree_four) {
  VerificationReport report;
  const RelationSet rels = coloured_relations(lambda, mu, p);
  const NCPoly det = quantum_determinant(lambda, DeterminantForm::first, p);
  const std::string d_name = "D_" + format_scalar(lambda);

  for (Letter x : {Letter::a, Letter::b, Letter::c, Letter::d}) {
    const NCPoly lhs = commutator(det, letter(x, mu));
    const NCPoly residual = lhs - printed_det_commutator(x, lambda, mu, p);
    const Membership m = ideal_membership(residual, rels, 3, options);
    const std::string identity = "[" + d_name + "," + name_of(x, mu) + "] printed formula";
    if (x == Letter::c) {
      require_member(report, "[" + d_name + "," + name_of(x, mu) + "] = 0", m);
    } else {
      record_verdict(report, identity, m);
    }
  }

  require_non_member(report, "[" + d_name + "," + name_of(Letter::a, mu) + "] != 0 (D is not central)",
                     ideal_membership(commutator(det, letter(Letter::a, mu)), rels, 3, options));

  // Vanishing colours: D_0 commutes with every generator.
  const Colour zero(0);
  const RelationSet rels0 = monochromatic_relations(zero, p);
  const NCPoly det0 = quantum_determinant(zero, DeterminantForm::first, p);
  for (Letter x : {Letter::a, Letter::b, Letter::c, Letter::d}) {
    require_member(report, "[D_0," + name_of(x, zero) + "] = 0 at lambda = mu = 0",
                   ideal_membership(commutator(det0, letter(x, zero)), rels0, 3, options));
  }

  if (degree_four) {
    const NCPoly det_mu = quantum_determinant(mu, DeterminantForm::first, p);
    record_verdict(report, "[" + d_name + ",D_" + format_scalar(mu) + "] at degree 4",
                   ideal_membership(commutator(det, det_mu), rels, 4, options));
  }
  return report;
}

}  // namespace jordanian
