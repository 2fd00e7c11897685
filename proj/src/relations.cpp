#include "jordanian/relations.hpp"

#include "jordanian/coloured_r.hpp"
#include "jordanian/error.hpp"

namespace jordanian {

NCGenerator generator(Letter l, const Colour& colour, int copy) { return NCGenerator{l, colour, copy}; }

NCMatrix2 t_matrix(const Colour& colour, int copy) {
  return {{{NCPoly(generator(Letter::a, colour, copy)), NCPoly(generator(Letter::b, colour, copy))},
           {NCPoly(generator(Letter::c, colour, copy)), NCPoly(generator(Letter::d, colour, copy))}}};
}

NCMatrix2 operator*(const NCMatrix2& x, const NCMatrix2& y) {
  NCMatrix2 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  }
  return out;
}

std::vector<NCPoly> rtt_residual(const ParamMatrix& r, const Colour& lambda, const Colour& mu) {
  if (r.rows() != 4 || r.cols() != 4) throw DimensionMismatch("rtt_residual needs a 4x4 R-matrix");
  const NCMatrix2 tl = t_matrix(lambda);
  const NCMatrix2 tm = t_matrix(mu);
  using Big = std::array<std::array<NCPoly, 4>, 4>;
  Big t1;
  Big t2;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          if (j == l) t1[2 * i + j][2 * k + l] = tl[i][k];
          if (i == k) t2[2 * i + j][2 * k + l] = tm[j][l];
        }
      }
    }
  }
  auto mul = [](const Big& x, const Big& y) {
    Big out;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) out[i][j] += x[i][k] * y[k][j];
      }
    }
    return out;
  };
  const Big left = mul(t1, t2);
  const Big right = mul(t2, t1);
  std::vector<NCPoly> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      NCPoly e;
      for (int k = 0; k < 4; ++k) {
        e += r(i, k) * left[k][j];
        e -= right[i][k] * r(k, j);
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<NCPoly> rtt_residual(const Colour& lambda, const Colour& mu, const Deformation& p) {
  return rtt_residual(coloured_R(lambda, mu, p).matrix, lambda, mu);
}

namespace {

struct Letters {
  NCPoly a, b, c, d;
  Letters(const Colour& x)  // NOLINT(google-explicit-constructor)
      : a(generator(Letter::a, x)), b(generator(Letter::b, x)), c(generator(Letter::c, x)), d(generator(Letter::d, x)) {}
};

std::string colour_name(const Colour& c) { return format_scalar(c); }

// The listed relations; mixed_only keeps the six mixed-letter families.
RelationSet relations_at(const Colour& lambda, const Colour& mu, const Deformation& p, bool mixed_only) {
  const Letters x(lambda);
  const Letters y(mu);
  const Scalar xp = p.plus(lambda);
  const Scalar xm = p.minus(lambda);
  const Scalar yp = p.plus(mu);
  const Scalar ym = p.minus(mu);
  const Scalar f = colour_f(lambda, mu, p);
  const std::string l = colour_name(lambda);
  const std::string m = colour_name(mu);
  auto name = [&](char u, char v) { return "[" + std::string(1, u) + "_" + l + "," + std::string(1, v) + "_" + m + "]"; };

  RelationSet out;
  out.add(name('a', 'c'), commutator(x.a, y.c) - (-ym * (y.c * x.c)));
  out.add(name('a', 'd'), commutator(x.a, y.d) - (xp * (y.c * x.a) - ym * (x.c * y.d)));
  out.add(name('c', 'd'), commutator(x.c, y.d) - xp * (y.c * x.c));
  out.add(name('b', 'c'), commutator(x.b, y.c) - (-yp * (y.c * x.a) - ym * (x.d * y.c)));
  out.add(name('a', 'b'),
          commutator(x.a, y.b) - (xp * (y.a * x.a) - xp * (x.a * y.d) + yp * (x.c * y.b) - f * (x.c * y.d)));
  out.add(name('d', 'b'),
          commutator(x.d, y.b) - (xm * (x.d * y.d) - xm * (y.a * x.d) + ym * (y.b * x.c) + f * (y.a * x.c)));
  if (mixed_only) return out;
  out.add(name('a', 'a'), commutator(x.a, y.a) - (-xp * (x.a * y.c) + yp * (x.c * y.a) - f * (y.c * x.c)));
  out.add(name('b', 'b'), commutator(x.b, y.b) - (-xm * (y.a * x.b) + ym * (y.b * x.a) - xp * (x.b * y.d) +
                                                  yp * (x.d * y.b) + f * (y.a * x.a - x.d * y.d)));
  out.add(name('c', 'c'), commutator(x.c, y.c));
  out.add(name('d', 'd'), commutator(x.d, y.d) - (-xm * (y.c * x.d) + ym * (y.d * x.c) + f * (y.c * x.c)));
  return out;
}

}  // namespace

RelationSet listed_relations(const Colour& lambda, const Colour& mu, const Deformation& p) {
  return relations_at(lambda, mu, p, false);
}

RelationSet paper_relations(const Colour& lambda, const Colour& mu, const Deformation& p) {
  RelationSet out = relations_at(lambda, mu, p, false);
  out.append(relations_at(mu, lambda, p, true));
  return out;
}

RelationSet monochromatic_relations(const Colour& lambda, const Deformation& p) {
  const RelationSet all = relations_at(lambda, lambda, p, false);
  RelationSet out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!all.elements[i].is_zero()) out.add(all.names[i], all.elements[i]);
  }
  return out;
}

NCPoly quantum_determinant(const Colour& lambda, DeterminantForm form, const Deformation& p, int copy) {
  const NCMatrix2 t = t_matrix(lambda, copy);
  if (form == DeterminantForm::first) return determinant_of(t, lambda, p);
  return t[0][0] * t[1][1] - t[1][0] * t[0][1] + p.minus(lambda) * (t[1][0] * t[1][1]);
}

NCPoly determinant_of(const NCMatrix2& m, const Colour& lambda, const Deformation& p) {
  return m[0][0] * m[1][1] - m[0][1] * m[1][0] - p.plus(lambda) * (m[0][0] * m[1][0]);
}

}  // namespace jordanian
