#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "axial/two_generated.hpp"

namespace axial {

enum class FrobeniusCase {
  CaseI_lambda_delta,  // noncommutative type (lambda, delta)
  CaseII_lambda,       // a single commutative type
  CaseIII_split,       // commutative types lambda and 1 - lambda both occur
};

std::string_view to_string(FrobeniusCase c);

struct ComponentSelection {
  FrobeniusCase kind;
  std::vector<std::size_t> closure_axes;  // the whole component, as closure indices
  std::optional<Scalar> nu;               // Case III: the type kept
  std::vector<std::size_t> kept;          // closure indices that enter X'
};

/// A generator left out of X'. Under the type -1 / type 2 exception the
/// type-2 regeneration pair of <<a, x>> for a type-2 neighbor x stands in for a.
struct Exclusion {
  Element axis;
  bool exception = false;
  std::vector<Element> substitute;
};

struct XPrimeSelection {
  AlgebraPtr algebra;
  std::vector<ComponentSelection> components;
  std::vector<AxisReport> axes;  // X', in closure-discovery order
  std::vector<std::size_t> basis;  // indices into axes
  /// Every closure axis with its report, for neighbor searches.
  std::vector<AxisReport> closure_axes;
  std::vector<Exclusion> exclusions;
  bool truncated = false;
  std::vector<std::string> warnings;
};

struct XPrimeOptions {
  /// Case III components take the first listed value that is one of their two
  /// types (ignored when the types are -1 and 2).
  std::vector<Scalar> preferred_nu;
};

/// Throws BadParameter when the generators do not span the algebra.
XPrimeSelection choose_Xprime(const DecompositionReport& decomp, const XPrimeOptions& opts = {});
XPrimeSelection choose_Xprime(std::span<const AxisReport> generators, ClosureOptions closure_opts = {},
                              const XPrimeOptions& opts = {});

struct FrobeniusForm {
  XPrimeSelection selection;
  Matrix gram;    // on the basis B of X'
  Matrix matrix;  // in algebra coordinates: (u, v) = u^T matrix v
  std::vector<Vector> radical_basis;

  Scalar operator()(const Vector& u, const Vector& v) const;
  Scalar norm(const Vector& u) const { return (*this)(u, u); }
};

/// Gram matrix (a, b) = phi_a(b) on B, extended bilinearly. Throws
/// SymmetryFailure, AssociativityFailure, or TheoremViolation when
/// (a, u) = phi_a(u) or (a, a) = 1 fails for some a in X'.
FrobeniusForm build_form(XPrimeSelection selection);

/// Kernel of the form; throws TheoremViolation if it is not an ideal.
std::vector<Vector> radical(const FrobeniusForm& form);

/// Distinct eigenspaces of the axis are orthogonal, and for a
/// noncommutative type the (lambda, delta)-space is totally isotropic.
bool eigenspaces_orthogonal(const FrobeniusForm& form, const AxisReport& axis);

/// (u^psi, v^psi) = (u, v) for all u, v.
bool form_invariant(const FrobeniusForm& form, const Matrix& psi);

enum class A0Verdict { Closed, ExceptionalCase };

struct A0Report {
  A0Verdict verdict = A0Verdict::Closed;
  /// A_0(a)^2 inside A_0(a); may hold in the exceptional case too.
  bool a0_closed = true;
  Scalar norm;
  bool in_radical = false;
  std::optional<Element> type2_neighbor;
  std::string witness;
};

/// ExceptionalCase when a has type -1 != 1/2 and some closure axis of type 2
/// meets it; then (a, a) = 0 and a in the radical are required. Otherwise
/// A_0(a)^2 must lie in A_0(a). Throws TheoremViolation on any other outcome.
A0Report check_A0_closed(const AxisReport& a, const FrobeniusForm& form);

}  // namespace axial
