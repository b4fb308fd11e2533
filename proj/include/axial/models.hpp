#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axial/algebra.hpp"

namespace axial {

/// e_i e_i = e_i, e_i e_j = (1 - lambda) e_i + lambda e_j. n >= 1, lambda not in {0, 1}.
AlgebraPtr make_U(std::size_t n, const Scalar& lambda);
/// e_i e_i = e_i, e_i e_j = -e_i - e_j. n >= 2, characteristic not 3.
AlgebraPtr make_U_prime(std::size_t n, Field f);
/// Basis a, b, y: ab = ay = yb = lambda y, ba = ya = by = (1 - lambda) y, y^2 = 0.
/// lambda not in {0, 1, 1/2}.
AlgebraPtr make_exc3(const Scalar& lambda);
/// Basis a, b, sigma: commutative, ab = sigma + lambda(a + b), a sigma = gamma a,
/// b sigma = gamma b, sigma^2 = gamma sigma, gamma = (1 - lambda) phi - lambda.
AlgebraPtr make_B(const Scalar& lambda, const Scalar& phi);
/// Two orthogonal idempotents.
AlgebraPtr make_FxF(Field f);

Scalar B_gamma(const Scalar& lambda, const Scalar& phi);

enum class ModelKind { U, Uprime, Exc3, B, FxF };

std::string_view to_string(ModelKind k);
/// Accepts "U", "Uprime", "exc3", "B", "FxF".
ModelKind parse_model_kind(std::string_view text);

struct ModelSpec {
  ModelKind kind;
  Field field;
  std::size_t n = 2;
  std::optional<Scalar> lambda;
  std::optional<Scalar> phi;

  std::string to_string() const;
};

AlgebraPtr make_model(const ModelSpec& spec);

/// An axis the construction names, with its expected left/right eigenvalue.
/// A missing value means that side has no eigenvalue outside {0, 1}.
struct DesignatedAxis {
  std::string name;
  Vector coords;
  std::optional<Scalar> lambda;
  std::optional<Scalar> delta;
};

/// The generating axes of the model, plus 1 - a in B(lambda, phi) when gamma
/// is nonzero and 1 - a is again primitive.
std::vector<DesignatedAxis> designated_axes(const ModelSpec& spec, const Algebra& alg);

}  // namespace axial
