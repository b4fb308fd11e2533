#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "axial/linalg.hpp"

namespace axial {

/// Finite-dimensional algebra given by structure constants: product(i, j) is
/// the coordinate vector of basis_i * basis_j. Nothing is assumed about
/// commutativity or associativity.
class Algebra {
 public:
  Algebra(Field f, std::vector<std::string> names, std::vector<std::vector<Vector>> table);

  Field field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const Vector& product(std::size_t i, std::size_t j) const { return table_[i][j]; }
  const std::vector<std::vector<Vector>>& table() const noexcept { return table_; }

  Vector multiply(const Vector& u, const Vector& v) const;
  bool is_commutative() const;
  /// Linear combination of basis names, e.g. "a + 2*b - y".
  std::string format(const Vector& v) const;

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<std::vector<Vector>> table_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

class Element {
 public:
  Element(AlgebraPtr alg, Vector coords);
  static Element zero(AlgebraPtr alg);
  static Element basis(AlgebraPtr alg, std::size_t i);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const Vector& coords() const noexcept { return coords_; }
  Field field() const { return alg_->field(); }
  bool is_zero() const { return axial::is_zero(coords_); }
  bool is_idempotent() const;

  friend Element operator*(const Element& u, const Element& v);
  friend Element operator+(const Element& u, const Element& v);
  friend Element operator-(const Element& u, const Element& v);
  friend Element operator*(const Scalar& s, const Element& u);
  Element operator-() const;
  friend bool operator==(const Element& u, const Element& v);

  std::string to_string() const { return alg_->format(coords_); }

 private:
  void require_same(const Element& o) const;
  AlgebraPtr alg_;
  Vector coords_;
};

std::ostream& operator<<(std::ostream& os, const Element& e);

enum class Side { Left, Right };

/// Column j holds a*basis_j (Left) or basis_j*a (Right).
Matrix mult_matrix(const Element& a, Side side);
Matrix mult_matrix(const Algebra& alg, const Vector& a, Side side);

/// Span of the subalgebra generated by the given vectors.
Subspace subalgebra_closure(const Algebra& alg, std::span<const Vector> generators);
Subspace subalgebra_closure(std::span<const Element> generators);

struct FlexViolation {
  std::size_t i, j, k;
  /// (xy)z + (zy)x - x(yz) - z(yx) for the triple; nonzero.
  Vector defect;
};

struct FlexReport {
  bool flexible = true;
  std::vector<FlexViolation> violations;
};

/// Checks the linearized flexible law on every basis triple (pairs are the
/// triples with i == k). Over fields of characteristic not 2 this is
/// equivalent to (xy)x = x(yx) for all x, y.
FlexReport check_flexible(const Algebra& alg);

/// {y : basis_i y = y basis_i = 0 for all i}
Subspace annihilator(const Algebra& alg);

struct Quotient {
  Subspace ideal;
  AlgebraPtr algebra;
  /// Ambient basis indices that give the quotient basis.
  std::vector<std::size_t> complement;
  /// dim(quotient) x dim(ambient) matrix of the canonical projection.
  Matrix projection;

  Vector project(const Vector& v) const { return projection.apply(v); }
};

/// Two-sided ideal generated by the seeds, and the quotient algebra on a
/// complement made of ambient basis vectors.
Quotient ideal_and_quotient(const AlgebraPtr& alg, std::span<const Vector> seeds);
Subspace generated_ideal(const Algebra& alg, std::span<const Vector> seeds);
bool is_ideal(const Algebra& alg, const Subspace& s);

struct Product {
  AlgebraPtr algebra;
  std::vector<std::size_t> offsets;
  Vector embed(std::size_t factor, const Vector& v) const;
};

/// Block-diagonal product; basis names are prefixed when they collide.
Product direct_product(std::span<const AlgebraPtr> factors);
AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b);

/// A subalgebra presented as an algebra in its own right, with the maps back
/// and forth to ambient coordinates.
struct Subalgebra {
  AlgebraPtr ambient;
  AlgebraPtr algebra;
  std::vector<Vector> basis;

  Vector to_ambient(const Vector& local) const;
  std::optional<Vector> to_local(const Vector& ambient_coords) const;
};

/// Throws BadParameter if the span is not closed under multiplication.
Subalgebra make_subalgebra(const AlgebraPtr& ambient, std::vector<Vector> basis,
                           std::vector<std::string> names = {});

std::optional<Vector> unit_element(const Algebra& alg);

}  // namespace axial
