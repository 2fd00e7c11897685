#pragma once

#include <fstream>
#include <random>
#include <string>

#include "json.hpp"
#include "jordanian/expression.hpp"
#include "jordanian/param_matrix.hpp"

namespace jordanian::test {

inline Scalar S(const std::string& text) { return parse_scalar(text); }

// Values frozen from tools/oracle.py.
inline const nlohmann::json& oracle() {
  static const nlohmann::json j = [] {
    std::ifstream in(std::string(JORDANIAN_FIXTURES) + "/oracle.json");
    return nlohmann::json::parse(in);
  }();
  return j;
}

inline ParamMatrix oracle_matrix(const nlohmann::json& rows) {
  // sympy writes powers as "**".
  nlohmann::json m = {{"rows", rows.size()}, {"cols", rows[0].size()}, {"entries", nlohmann::json::array()}};
  for (const auto& row : rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : row) {
      std::string text = e.get<std::string>();
      for (auto at = text.find("**"); at != std::string::npos; at = text.find("**")) text.replace(at, 2, "^");
      out.push_back(text);
    }
    m["entries"].push_back(out);
  }
  return matrix_from_json(m);
}

// Random small rational functions in h, s, lambda, mu.
class RandomScalars {
 public:
  explicit RandomScalars(std::uint64_t seed) : rng_(seed) {}

  Rational rational() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    Rational q(num(rng_), den(rng_));
    q.canonicalize();
    return q;
  }

  Polynomial polynomial(int max_terms = 4, unsigned max_exp = 2) {
    static const Symbol vars[] = {sym_h(), sym_s(), Symbol("lambda"), Symbol("mu")};
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    Polynomial out;
    const int n = terms(rng_);
    for (int t = 0; t < n; ++t) {
      Monomial m;
      for (Symbol v : vars) {
        const unsigned e = exp(rng_);
        if (e > 0) m = m * Monomial::variable(v, e);
      }
      out += Polynomial(m, rational());
    }
    return out;
  }

  Scalar scalar() {
    Polynomial den = polynomial(2, 1);
    if (den.is_zero()) den = Polynomial(1);
    return Scalar(polynomial(), den);
  }

  ParamMatrix matrix(std::size_t rows, std::size_t cols) {
    ParamMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = polynomial(2, 1);
    }
    return m;
  }

  // Strictly upper triangular, so nilpotent.
  ParamMatrix nilpotent(std::size_t n) {
    ParamMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) m(i, j) = polynomial(2, 1);
    }
    // Conjugate by a random unit lower-triangular matrix to leave the triangular shape.
    ParamMatrix l = ParamMatrix::identity(n);
    ParamMatrix l_inv = ParamMatrix::identity(n);
    if (n > 1) {
      const Scalar c(rational());
      l(n - 1, 0) = c;
      l_inv(n - 1, 0) = -c;
    }
    return l * m * l_inv;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace jordanian::test
