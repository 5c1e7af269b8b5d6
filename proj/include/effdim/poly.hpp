#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace effdim {

using Integer = boost::multiprecision::cpp_int;
using VarIndex = std::uint32_t;

/// Product of variables with positive exponents, kept sorted by variable index.
class Monomial {
 public:
  using Factor = std::pair<VarIndex, std::uint32_t>;

  Monomial() = default;
  static Monomial variable(VarIndex v, std::uint32_t exponent = 1);
  /// Merges repeated variables and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  std::span<const Factor> factors() const { return factors_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<Factor> factors_;
  std::uint64_t degree_ = 0;
};

/// Graded lexicographic order, lower variable index most significant.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using VariableNamer = std::function<std::string(VarIndex)>;
std::string default_variable_name(VarIndex v);

/// Result of a homogeneity test: the zero polynomial is flagged separately.
struct Homogeneity {
  enum class Kind { zero, homogeneous, mixed };
  Kind kind = Kind::zero;
  std::uint64_t degree = 0;

  std::optional<std::uint64_t> value() const {
    if (kind == Kind::homogeneous) return degree;
    return std::nullopt;
  }
};

/// Sparse multivariate polynomial with exact integer coefficients.
/// No zero coefficient is ever stored, so equality is structural.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Integer, GradedLex>;

  MultiPoly() = default;
  explicit MultiPoly(Integer constant);
  static MultiPoly variable(VarIndex v);
  static MultiPoly term(Integer coeff, Monomial m);

  bool is_zero() const { return terms_.empty(); }
  std::optional<Integer> constant_value() const;
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Integer coefficient(const Monomial& m) const;
  /// Largest variable index occurring, or nullopt for constants.
  std::optional<VarIndex> max_variable() const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other) { return *this = *this * other; }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  Homogeneity homogeneity() const;

  /// Value modulo `modulus` (< 2^63) with variable v set to values[v].
  std::uint64_t evaluate_mod(std::span<const std::uint64_t> values, std::uint64_t modulus) const;

  /// Leading term first, e.g. "3*tau(a)^2*eta(b) - zeta(a)".
  std::string to_string(const VariableNamer& name = default_variable_name) const;

 private:
  void add_term(const Monomial& m, const Integer& c);
  Terms terms_;
};

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);
Homogeneity is_homogeneous(const MultiPoly& p);

/// Dense row-major matrix over a commutative ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count does not match shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
  const std::vector<T>& entries() const { return entries_; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!(e == T())) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix shapes " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " and " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                                " cannot be multiplied");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == T()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!(b(k, j) == T())) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

using PolyMatrix = Matrix<MultiPoly>;

PolyMatrix mat_mul(const PolyMatrix& m, const PolyMatrix& k);

}  // namespace effdim
