#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "jordanian/expression.hpp"
#include "jordanian/rational_function.hpp"

namespace jordanian {

// Dense row-major matrix over the scalar ring.
class ParamMatrix {
 public:
  ParamMatrix() = default;
  ParamMatrix(std::size_t rows, std::size_t cols);
  ParamMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static ParamMatrix identity(std::size_t n);
  static ParamMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;

  ParamMatrix& operator+=(const ParamMatrix& b);
  ParamMatrix& operator-=(const ParamMatrix& b);
  ParamMatrix& operator*=(const Scalar& c);
  friend ParamMatrix operator+(ParamMatrix a, const ParamMatrix& b) { return a += b; }
  friend ParamMatrix operator-(ParamMatrix a, const ParamMatrix& b) { return a -= b; }
  friend ParamMatrix operator-(ParamMatrix a) { return a *= Scalar(-1); }
  friend ParamMatrix operator*(const ParamMatrix& a, const ParamMatrix& b);
  friend ParamMatrix operator*(ParamMatrix a, const Scalar& c) { return a *= c; }
  friend ParamMatrix operator*(const Scalar& c, ParamMatrix a) { return a *= c; }

  ParamMatrix pow(unsigned n) const;
  ParamMatrix substitute(const std::map<Symbol, Scalar>& bindings) const;

  friend bool operator==(const ParamMatrix&, const ParamMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

ParamMatrix commutator(const ParamMatrix& a, const ParamMatrix& b);

ParamMatrix kron(const ParamMatrix& a, const ParamMatrix& b);

// Embeds a on the ordered pair of tensor legs (1-based) of a product of
// n_legs copies of C^d. The first tensor factor of a acts on legs.first.
// Basis convention: e_i (x) e_j sits at flat index d*i + j (0-based).
ParamMatrix leg_embed(const ParamMatrix& a, std::pair<int, int> legs, std::size_t d, int n_legs = 3);

// Permutation matrix of C^d (x) C^d exchanging the two factors.
ParamMatrix flip_matrix(std::size_t d);

// exp(m) as the finite sum over powers below the nilpotency index. bound = 0
// means the matrix dimension. Throws NotNilpotent if m^bound != 0.
ParamMatrix nilpotent_exp(const ParamMatrix& m, std::size_t bound = 0);

// Exact two-sided inverse by fraction-free elimination. Throws SingularMatrix.
ParamMatrix mat_inverse(const ParamMatrix& a);

// JSON matrix format: { "rows": n, "cols": m, "entries": [[string, ...], ...] }.
nlohmann::json to_json(const ParamMatrix& m);
ParamMatrix matrix_from_json(const nlohmann::json& j, const SymbolContext& context = SymbolContext::open());

std::string format_matrix(const ParamMatrix& m, ScalarStyle style);

}  // namespace jordanian
