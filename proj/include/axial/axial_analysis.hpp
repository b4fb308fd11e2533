#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "axial/axis.hpp"

namespace axial {

/// Linear map (column convention) fixing Fa + A_0(a) and negating A_{lambda,delta}(a).
struct Involution {
  Matrix matrix;
  Element source_axis;

  Vector apply(const Vector& v) const { return matrix.apply(v); }
  Element apply(const Element& e) const { return Element(e.algebra(), matrix.apply(e.coords())); }
};

/// Checks m(uv) = m(u)m(v) on all basis pairs.
bool is_automorphism(const Algebra& alg, const Matrix& m);

/// Throws NotAnAxis unless the report is an axis with the Jordan condition and
/// the fusion rules; the result is verified involutive and automorphic.
Involution miyamoto(const AxisReport& report);

/// The involution of the transported axis rho(a), i.e. rho tau_a rho^-1.
/// Throws NotAutomorphism if rho is not an invertible algebra automorphism.
Involution conjugate_involution(const Involution& inv, const Matrix& rho);

struct ClosureOptions {
  std::size_t max_depth = 32;
  /// Soft cap on the orbit size, applied like max_depth.
  std::size_t max_axes = 256;
};

struct ClosureResult {
  std::vector<Element> axes;
  /// Index into the generating set of the axis each orbit element is conjugate to.
  std::vector<std::size_t> origin;
  Subspace span;
  bool truncated = false;
  std::size_t depth_reached = 0;
};

/// Breadth-first orbit of X under the group generated by the tau_x, x in X
/// (which is also the group generated by tau_y for y in the orbit). Stops when
/// no new axis appears, or when a cap is reached and the last level added
/// nothing to the span; the second case reports truncated = true.
ClosureResult closure(std::span<const AxisReport> generators, ClosureOptions opts = {});

/// True iff the span of Cl(X) is the whole algebra.
bool spanning_check(std::span<const AxisReport> generators, ClosureOptions opts = {});

struct AxialGraph {
  std::vector<Element> vertices;
  std::vector<std::string> labels;
  /// i < j with x_i x_j != 0 or x_j x_i != 0.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Pairs whose products differ in vanishing; should stay empty.
  std::vector<std::pair<std::size_t, std::size_t>> asymmetric;
  bool strong_computed = false;
  /// i < j with dim <<x_i, x_j>> = 3.
  std::vector<std::pair<std::size_t, std::size_t>> strong_edges;

  std::vector<std::vector<std::size_t>> components() const;
  std::vector<std::vector<std::size_t>> strong_components() const;
  /// Shortest path length, or nullopt when disconnected.
  std::optional<std::size_t> distance(std::size_t from, std::size_t to) const;
  std::string to_dot() const;
};

AxialGraph build_axial_graph(std::span<const Element> axes, bool with_strong = true,
                             std::vector<std::string> labels = {});

/// Type class of a connected component: every axis has type lambda or
/// 1 - lambda (commutative), or (lambda, delta) / (delta, lambda).
struct TypeClass {
  bool noncommutative = false;
  /// Both complementary types occur.
  bool mixed = false;
  /// Only axes with a degenerate type (no third eigenvalue).
  bool degenerate = false;
  std::optional<Scalar> lambda;
  std::optional<Scalar> delta;

  std::string to_string() const;
};

/// Throws MixedComponent when two axes have unrelated types.
TypeClass uniformity_check(std::span<const AxisReport> component);

struct ZData {
  std::vector<Vector> x_prime, x_second;
  Subspace z;
  bool is_ideal = false;
  bool square_zero = false;
  /// A/Z is the direct product of the images of <<X'>> and <<X''>>.
  bool quotient_splits = false;
  /// The component subalgebra has zero annihilator.
  bool annihilator_trivial = false;
};

struct ComponentReport {
  std::vector<std::size_t> axes;  // indices into DecompositionReport::closure.axes
  TypeClass type;
  Subspace subalgebra;
  std::optional<ZData> z;
};

struct DecompositionReport {
  ClosureResult closure;
  AxialGraph graph;
  Subspace generated;  // <<X>>
  bool spans_ambient = false;
  std::vector<ComponentReport> components;
  bool pairwise_products_zero = false;
  bool sum_is_generated = false;
  /// N_j = A_j intersected with the sum of the other A_i, one per component.
  std::vector<Subspace> intersections;
  bool intersections_annihilating = false;
  bool direct = false;
};

DecompositionReport axial_decomposition(std::span<const AxisReport> generators, ClosureOptions opts = {});

/// Neighbor-lemma regression: if b b^{tau_a} = 0 while b^{tau_a} != b, the
/// algebra <<a, b>> must have the unit 2(alpha_b a + b_0).
struct NeighborCheck {
  bool applies = false;
  bool holds = true;
  std::optional<Vector> unit;
};

NeighborCheck neighbor_lemma_check(const AxisReport& a, const AxisReport& b);

/// Sum of <<Y_j>> over the strong components Y_j of the axis set, compared
/// with <<X>>.
bool strong_components_span(std::span<const Element> axes);

}  // namespace axial
