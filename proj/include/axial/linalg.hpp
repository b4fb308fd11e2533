#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "axial/scalar.hpp"

namespace axial {

using Vector = std::vector<Scalar>;

Vector zero_vector(Field f, std::size_t n);
Vector unit_vector(Field f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);
/// a + s*b
Vector axpy(const Vector& a, const Scalar& s, const Vector& b);
std::string to_string(const Vector& v);

struct VectorHash {
  std::size_t operator()(const Vector& v) const;
};

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  static Matrix from_columns(Field f, std::size_t rows, std::span<const Vector> cols);
  static Matrix from_rows(Field f, std::size_t cols, std::span<const Vector> rows);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);
  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  Field field_ = Field::rationals();
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form. Pivots are taken column by column from the first
/// row (in input order) holding a nonzero entry, so results are reproducible.
/// Over Q the forward pass is fraction-free (Bareiss) on integer-scaled rows.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {v : Mv = 0}, one vector per free column, with a 1 in that column.
std::vector<Vector> kernel(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Coefficients c with sum c_i basis_i = v, if v lies in the span. The basis
/// must be linearly independent.
std::optional<Vector> solve_in_basis(std::span<const Vector> basis, const Vector& v);

/// A subspace of F^n held in reduced echelon form.
class Subspace {
 public:
  Subspace(Field f, std::size_t ambient_dim);
  static Subspace span(Field f, std::size_t ambient_dim, std::span<const Vector> vectors);

  Field field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  /// Echelon basis (canonical for the subspace).
  const std::vector<Vector>& basis() const noexcept { return rows_; }

  /// v minus its echelon reduction; zero iff v lies in the subspace.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const { return is_zero(reduce(v)); }
  bool contains(const Subspace& other) const;
  /// Returns true if the dimension grew.
  bool insert(const Vector& v);

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Field field_;
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Polynomial with coefficients stored lowest degree first.
class Polynomial {
 public:
  explicit Polynomial(Field f) : field_(f) {}
  Polynomial(Field f, std::vector<Scalar> coeffs);
  /// t - root
  static Polynomial linear(const Scalar& root);

  Field field() const noexcept { return field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  Scalar leading() const { return coeffs_.back(); }
  Scalar eval(const Scalar& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Quotient and remainder.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  std::string to_string() const;

 private:
  void trim();
  Field field_;
  std::vector<Scalar> coeffs_;
};

Polynomial gcd(Polynomial a, Polynomial b);

/// Least-degree monic m with m(M) = 0, found by Krylov iteration on the powers
/// of M until the first linear dependence.
Polynomial minimal_polynomial(const Matrix& m);

}  // namespace axial
