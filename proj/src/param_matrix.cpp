#include "jordanian/param_matrix.hpp"

#include <sstream>

#include "jordanian/error.hpp"

namespace jordanian {

ParamMatrix::ParamMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ParamMatrix::ParamMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ParamMatrix ParamMatrix::identity(std::size_t n) {
  ParamMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

bool ParamMatrix::is_zero() const noexcept {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool ParamMatrix::is_identity() const noexcept {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

ParamMatrix& ParamMatrix::operator+=(const ParamMatrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix addition");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += b.entries_[k];
  return *this;
}

ParamMatrix& ParamMatrix::operator-=(const ParamMatrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix subtraction");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= b.entries_[k];
  return *this;
}

ParamMatrix& ParamMatrix::operator*=(const Scalar& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

ParamMatrix operator*(const ParamMatrix& a, const ParamMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
  ParamMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  }
  return c;
}

ParamMatrix ParamMatrix::pow(unsigned n) const {
  if (!is_square()) throw DimensionMismatch("power of a non-square matrix");
  ParamMatrix result = identity(rows_);
  for (unsigned k = 0; k < n; ++k) result = result * *this;
  return result;
}

ParamMatrix ParamMatrix::substitute(const std::map<Symbol, Scalar>& bindings) const {
  ParamMatrix m = *this;
  for (auto& e : m.entries_) e = e.substitute(bindings);
  return m;
}

ParamMatrix commutator(const ParamMatrix& a, const ParamMatrix& b) { return a * b - b * a; }

ParamMatrix kron(const ParamMatrix& a, const ParamMatrix& b) {
  ParamMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& y = b(k, l);
          if (!y.is_zero()) c(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
      }
    }
  }
  return c;
}

ParamMatrix leg_embed(const ParamMatrix& a, std::pair<int, int> legs, std::size_t d, int n_legs) {
  const auto [p, q] = legs;
  if (a.rows() != d * d || a.cols() != d * d) throw DimensionMismatch("leg_embed: operand is not d^2 x d^2");
  if (p == q || p < 1 || q < 1 || p > n_legs || q > n_legs) {
    throw DimensionMismatch("leg_embed: legs must be distinct and in range");
  }
  std::size_t dim = 1;
  for (int k = 0; k < n_legs; ++k) dim *= d;
  auto digit = [&](std::size_t index, int leg) {
    for (int k = n_legs; k > leg; --k) index /= d;
    return index % d;
  };
  ParamMatrix out(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      bool spectators_match = true;
      for (int k = 1; k <= n_legs && spectators_match; ++k) {
        if (k != p && k != q && digit(r, k) != digit(c, k)) spectators_match = false;
      }
      if (!spectators_match) continue;
      const std::size_t ar = digit(r, p) * d + digit(r, q);
      const std::size_t ac = digit(c, p) * d + digit(c, q);
      out(r, c) = a(ar, ac);
    }
  }
  return out;
}

ParamMatrix flip_matrix(std::size_t d) {
  ParamMatrix p(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) p(i * d + j, j * d + i) = Scalar(1);
  }
  return p;
}

ParamMatrix nilpotent_exp(const ParamMatrix& m, std::size_t bound) {
  if (!m.is_square()) throw DimensionMismatch("exponential of a non-square matrix");
  if (bound == 0) bound = m.rows();
  ParamMatrix sum = ParamMatrix::identity(m.rows());
  ParamMatrix power = sum;
  Rational factorial = 1;
  for (std::size_t k = 1; k <= bound; ++k) {
    power = power * m;
    if (power.is_zero()) return sum;
    factorial *= static_cast<long>(k);
    sum += power * Scalar(Rational(1 / factorial));
  }
  throw NotNilpotent("matrix is not nilpotent within bound " + std::to_string(bound));
}

ParamMatrix mat_inverse(const ParamMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  ParamMatrix m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n + i) = Scalar(1);
  }
  // Bareiss forward elimination on [A | I].
  Scalar previous(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix is singular");
    if (pivot != k) {
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(m(k, j), m(pivot, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const Scalar factor = m(i, k);
      for (std::size_t j = k + 1; j < 2 * n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - factor * m(k, j)) / previous;
      }
      m(i, k) = Scalar();
    }
    previous = m(k, k);
  }
  // Back substitution with the final divisions.
  ParamMatrix inv(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      Scalar acc = m(ii, n + col);
      for (std::size_t j = ii + 1; j < n; ++j) {
        if (!m(ii, j).is_zero()) acc -= m(ii, j) * inv(j, col);
      }
      inv(ii, col) = acc / m(ii, ii);
    }
  }
  return inv;
}

nlohmann::json to_json(const ParamMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_scalar(m(i, j)));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ParamMatrix matrix_from_json(const nlohmann::json& j, const SymbolContext& context) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw Error("matrix JSON requires rows, cols and entries");
  }
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows) throw DimensionMismatch("matrix JSON row count");
  ParamMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols) throw DimensionMismatch("matrix JSON column count");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse_scalar(entries[i][k].get<std::string>(), context);
  }
  return m;
}

std::string format_matrix(const ParamMatrix& m, ScalarStyle style) {
  std::ostringstream out;
  if (style == ScalarStyle::latex) {
    out << "\\begin{pmatrix}\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        out << (j == 0 ? "" : " & ") << format_scalar(m(i, j), style);
      }
      out << (i + 1 < m.rows() ? " \\\\\n" : "\n");
    }
    out << "\\end{pmatrix}\n";
    return out.str();
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j == 0 ? "" : ", ") << format_scalar(m(i, j), style);
    out << "]\n";
  }
  return out.str();
}

}  // namespace jordanian
