#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axial/algebra.hpp"

namespace axial {

/// Third eigenvalues of L_a and R_a besides 0 and 1. Either may be absent
/// (that side only has eigenvalues in {0, 1}).
struct AxisType {
  std::optional<Scalar> lambda;
  std::optional<Scalar> delta;

  bool degenerate() const { return !lambda && !delta; }
  /// The value used for pairing: a missing side borrows the other side.
  std::optional<Scalar> effective_lambda() const { return lambda ? lambda : delta; }
  std::optional<Scalar> effective_delta() const { return delta ? delta : lambda; }
};

struct EigenData {
  Scalar eigenvalue;
  std::vector<Vector> basis;
};

struct JointEigenData {
  Scalar left;
  Scalar right;
  std::vector<Vector> basis;
};

struct AxisReport {
  explicit AxisReport(Element a) : idempotent(std::move(a)) {}

  Element idempotent;
  bool is_idempotent = false;
  AxisType type;
  /// false when a minimal polynomial leaves a nonlinear remainder or a
  /// repeated 0/1 factor after stripping t and t-1.
  bool eigenvalues_ok = false;
  std::optional<Polynomial> minpoly_left, minpoly_right;
  std::vector<EigenData> left_eigen, right_eigen;
  /// Spaces for (1,1), (0,0), (0,delta), (lambda,0), (lambda,delta), in that order.
  std::vector<JointEigenData> joint_eigen;
  bool semisimple_left = false;
  bool semisimple_right = false;
  bool primitive_left = false;
  bool primitive_right = false;
  bool lr_commute = false;
  bool jordan_condition = false;
  bool fusion_ok = false;
  bool commutative_type = false;
  std::string fusion_witness;

  /// Basis of A_0(a) = A_{0,0}(a) and of A_{lambda,delta}(a).
  std::vector<Vector> zero_space, odd_space;
  /// Inverse of the matrix with columns (a, zero_space, odd_space) when those
  /// span the algebra; used for exact eigen-projections.
  std::optional<Matrix> projector;

  bool is_axis() const;
  bool is_jordan_axis() const { return is_axis() && jordan_condition && fusion_ok; }
  const AlgebraPtr& algebra() const { return idempotent.algebra(); }
  /// lambda, or delta when only the right side carries a third eigenvalue.
  std::optional<Scalar> lambda() const { return type.effective_lambda(); }
  std::optional<Scalar> delta() const { return type.effective_delta(); }
  std::string type_string() const;
};

/// Throws NotIdempotent. Returns nullopt when the multiplication maps are not
/// of Jordan type over this field.
std::optional<AxisType> axis_eigenvalues(const Element& a);

AxisReport analyze_axis(const Element& a);

struct ElementDecomposition {
  Scalar alpha;
  Vector zero_part;
  Vector minus_part;
};

/// y = alpha a + y_0 + y_{lambda,delta}; throws DecompositionFailed if the
/// report is not a Jordan-condition axis or y falls outside the three parts.
ElementDecomposition decompose_wrt(const Vector& y, const AxisReport& report);
ElementDecomposition decompose_wrt(const Element& y, const AxisReport& report);

/// The projection coefficient alpha_y of y on a.
Scalar phi(const AxisReport& report, const Vector& y);

}  // namespace axial
