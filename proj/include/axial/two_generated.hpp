#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "axial/axial_analysis.hpp"

namespace axial {

enum class TwoGenCase {
  Orthogonal,  // ab = ba = 0, so <<a, b>> = Fa + Fb
  NoncommU2,
  NoncommExc3,
  CommDim2,
  CommDim3Gamma0,
  CommDim3GammaNonzero,
};

std::string_view to_string(TwoGenCase c);

/// In the gamma != 0 case with types {2, -1}: the type-2 generator x and its
/// conjugate under the other generator already generate <<a, b>>.
struct RegenerationNote {
  Element type2_axis;
  Element conjugate;
  bool spans = false;
};

/// Structure of <<a, b>> for two axes. Elements are in the coordinates of the
/// algebra a and b came from; the axis reports live in the subalgebra.
struct TwoGenReport {
  TwoGenCase kind;
  Subalgebra sub;
  Element a, b;
  AxisReport a_report, b_report;
  std::optional<Scalar> lambda, lambda_prime;
  Scalar alpha_b, beta_a;  // phi_a(b), phi_b(a)
  /// Commutative cases: sigma = ab - lambda' a - lambda b and
  /// gamma = alpha_b (1 - lambda) - lambda', with the same value recomputed
  /// from beta_a as gamma_check.
  std::optional<Element> sigma;
  std::optional<Scalar> gamma, gamma_check;
  std::optional<Element> unit;
  /// b = alpha_b a + b_zero + b_lambda with respect to a, and w_b = alpha_b a + b_zero.
  Element b_zero, b_lambda, w_b;
  /// gamma != 0 only: b_zero = alpha'_b (1 - a), mu_b = alpha'_b - alpha'_b^2,
  /// nu_b = alpha_b - alpha_b^2.
  std::optional<Scalar> alpha_b_prime, mu_b, nu_b;
  std::optional<RegenerationNote> regeneration;

  std::size_t dim() const { return sub.basis.size(); }
  Element ambient(const Vector& local) const;
};

/// Throws NotAPaj if a or b is not an axis with the Jordan condition and the
/// fusion rules inside <<a, b>>, BadParameter if a = b or either is not an
/// idempotent, and TheoremViolation if <<a, b>> has dimension above 3.
TwoGenReport classify_2gen(const Element& a, const Element& b);

/// e(t) = base + t linear + t^2 quadratic.
struct IdempotentCurve {
  std::string description;
  Vector base, linear, quadratic;

  Vector at(const Scalar& t) const;
};

/// alpha a + (1 - alpha)(1 - a) + rho b_lambda with rho^2 nu_b = alpha (1 - alpha).
struct SqrtFamily {
  Vector a, one, b_lambda;
  Scalar nu_b;

  /// Zero, one or two idempotents; the canonical square root comes first.
  std::vector<Vector> at(const Scalar& alpha) const;
};

struct IdempotentFamily {
  AlgebraPtr algebra;
  TwoGenCase source;
  /// The isolated idempotents, including 0 and the unit when it exists.
  std::vector<Element> members;
  std::vector<IdempotentCurve> curves;
  std::optional<SqrtFamily> sqrt_family;

  bool finite() const { return curves.empty() && !sqrt_family; }
  /// Members plus every curve and the square-root family evaluated at each parameter.
  std::vector<Element> sample(std::span<const Scalar> params) const;
  /// The full set without repetitions, in order of discovery. Throws TooLarge
  /// when the family is infinite.
  std::vector<Element> all() const;
};

IdempotentFamily enumerate_idempotents_2gen(const TwoGenReport& report);

/// Every e with e^2 = e, by exhaustive scan in lexicographic order of residues.
/// Throws TooLarge over Q or when p^dim exceeds 10^7.
std::vector<Element> brute_force_idempotents(const AlgebraPtr& alg);

/// a^{tau_e} from the closed form mu^2 a + (1 - mu^2)(1 - a) + 2 mu e_lambda,
/// mu = 2 alpha_e - 1, for axes of a 3-dimensional algebra with unit whose
/// axes have type 1/2. Throws CaseMismatch otherwise.
Element conjugate_axis(const AxisReport& a_report, const AxisReport& e_report);

struct TheoremAxesResult {
  bool holds = true;
  std::size_t checked = 0;
  std::vector<Element> counterexamples;
};

/// Every idempotent other than 0 and the unit must be a primitive axis with
/// the Jordan condition and the fusion rules.
TheoremAxesResult verify_theorem_axes(const AlgebraPtr& alg);

}  // namespace axial
