#include "axial/models.hpp"

namespace axial {

namespace {

std::vector<std::vector<Vector>> empty_table(Field f, std::size_t n) {
  return std::vector<std::vector<Vector>>(n, std::vector<Vector>(n, zero_vector(f, n)));
}

void require_lambda(const Scalar& lambda) {
  if (lambda.is_zero() || lambda.is_one()) {
    throw Error(ErrorKind::BadParameter, "lambda must avoid 0 and 1, got " + lambda.to_string());
  }
}

std::vector<std::string> indexed_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

}  // namespace

AlgebraPtr make_U(std::size_t n, const Scalar& lambda) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "U needs n >= 1");
  require_lambda(lambda);
  const Field f = lambda.field();
  const Scalar delta = Scalar::one(f) - lambda;
  auto t = empty_table(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        t[i][i][i] = Scalar::one(f);
      } else {
        t[i][j][i] = delta;
        t[i][j][j] = lambda;
      }
    }
  }
  return std::make_shared<Algebra>(f, indexed_names(n), std::move(t));
}

AlgebraPtr make_U_prime(std::size_t n, Field f) {
  if (n < 2) throw Error(ErrorKind::BadParameter, "U' needs n >= 2");
  if (f.characteristic() == 3) throw Error(ErrorKind::BadParameter, "U' needs characteristic other than 3");
  const Scalar minus = -Scalar::one(f);
  auto t = empty_table(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        t[i][i][i] = Scalar::one(f);
      } else {
        t[i][j][i] = minus;
        t[i][j][j] = minus;
      }
    }
  }
  return std::make_shared<Algebra>(f, indexed_names(n), std::move(t));
}

AlgebraPtr make_exc3(const Scalar& lambda) {
  require_lambda(lambda);
  const Field f = lambda.field();
  if (lambda + lambda == Scalar::one(f)) throw Error(ErrorKind::BadParameter, "exc3 needs lambda != 1/2");
  const Scalar delta = Scalar::one(f) - lambda;
  enum { A, B, Y };
  auto t = empty_table(f, 3);
  t[A][A][A] = Scalar::one(f);
  t[B][B][B] = Scalar::one(f);
  t[A][B][Y] = lambda;
  t[A][Y][Y] = lambda;
  t[Y][B][Y] = lambda;
  t[B][A][Y] = delta;
  t[Y][A][Y] = delta;
  t[B][Y][Y] = delta;
  return std::make_shared<Algebra>(f, std::vector<std::string>{"a", "b", "y"}, std::move(t));
}

Scalar B_gamma(const Scalar& lambda, const Scalar& phi) {
  return (Scalar::one(lambda.field()) - lambda) * phi - lambda;
}

AlgebraPtr make_B(const Scalar& lambda, const Scalar& phi) {
  require_lambda(lambda);
  const Field f = lambda.field();
  if (!(phi.field() == f)) throw Error(ErrorKind::FieldMismatch, "lambda and phi over different fields");
  const Scalar gamma = B_gamma(lambda, phi);
  enum { A, B, S };
  auto t = empty_table(f, 3);
  t[A][A][A] = Scalar::one(f);
  t[B][B][B] = Scalar::one(f);
  for (auto [i, j] : {std::pair{A, B}, std::pair{B, A}}) {
    t[i][j][A] = lambda;
    t[i][j][B] = lambda;
    t[i][j][S] = Scalar::one(f);
  }
  t[A][S][A] = gamma;
  t[S][A][A] = gamma;
  t[B][S][B] = gamma;
  t[S][B][B] = gamma;
  t[S][S][S] = gamma;
  return std::make_shared<Algebra>(f, std::vector<std::string>{"a", "b", "sigma"}, std::move(t));
}

AlgebraPtr make_FxF(Field f) {
  auto t = empty_table(f, 2);
  t[0][0][0] = Scalar::one(f);
  t[1][1][1] = Scalar::one(f);
  return std::make_shared<Algebra>(f, indexed_names(2), std::move(t));
}

std::string_view to_string(ModelKind k) {
  switch (k) {
    case ModelKind::U: return "U";
    case ModelKind::Uprime: return "Uprime";
    case ModelKind::Exc3: return "exc3";
    case ModelKind::B: return "B";
    case ModelKind::FxF: return "FxF";
  }
  return "?";
}

ModelKind parse_model_kind(std::string_view text) {
  for (auto k : {ModelKind::U, ModelKind::Uprime, ModelKind::Exc3, ModelKind::B, ModelKind::FxF}) {
    if (text == to_string(k)) return k;
  }
  throw Error(ErrorKind::BadParameter, "unknown model '" + std::string(text) + "'");
}

std::string ModelSpec::to_string() const {
  std::string s(axial::to_string(kind));
  if (kind == ModelKind::U || kind == ModelKind::Uprime) s += " n=" + std::to_string(n);
  if (lambda) s += " lambda=" + lambda->to_string();
  if (phi) s += " phi=" + phi->to_string();
  return s + " over " + field.to_string();
}

AlgebraPtr make_model(const ModelSpec& spec) {
  auto need = [&](const std::optional<Scalar>& v, const char* what) {
    if (!v) throw Error(ErrorKind::BadParameter, std::string(axial::to_string(spec.kind)) + " needs " + what);
    if (!(v->field() == spec.field)) throw Error(ErrorKind::FieldMismatch, std::string(what) + " over another field");
    return *v;
  };
  switch (spec.kind) {
    case ModelKind::U: return make_U(spec.n, need(spec.lambda, "lambda"));
    case ModelKind::Uprime: return make_U_prime(spec.n, spec.field);
    case ModelKind::Exc3: return make_exc3(need(spec.lambda, "lambda"));
    case ModelKind::B: return make_B(need(spec.lambda, "lambda"), need(spec.phi, "phi"));
    case ModelKind::FxF: return make_FxF(spec.field);
  }
  throw Error(ErrorKind::BadParameter, "unknown model");
}

std::vector<DesignatedAxis> designated_axes(const ModelSpec& spec, const Algebra& alg) {
  const Field f = alg.field();
  const std::size_t n = alg.dim();
  const Scalar one = Scalar::one(f);
  std::vector<DesignatedAxis> out;
  switch (spec.kind) {
    case ModelKind::U:
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back({alg.names()[i], unit_vector(f, n, i), *spec.lambda, one - *spec.lambda});
      }
      break;
    case ModelKind::Uprime:
      for (std::size_t i = 0; i < n; ++i) out.push_back({alg.names()[i], unit_vector(f, n, i), -one, -one});
      break;
    case ModelKind::Exc3:
      out.push_back({"a", unit_vector(f, n, 0), *spec.lambda, one - *spec.lambda});
      out.push_back({"b", unit_vector(f, n, 1), one - *spec.lambda, *spec.lambda});
      break;
    case ModelKind::B: {
      const Scalar lambda = *spec.lambda;
      out.push_back({"a", unit_vector(f, n, 0), lambda, lambda});
      out.push_back({"b", unit_vector(f, n, 1), lambda, lambda});
      const Scalar gamma = B_gamma(lambda, *spec.phi);
      if (!gamma.is_zero()) {
        // sigma / gamma is the unit.
        Vector v = scale(-one, unit_vector(f, n, 0));
        v[2] = gamma.inverse();
        out.push_back({"1-a", v, one - lambda, one - lambda});
      }
      break;
    }
    case ModelKind::FxF:
      out.push_back({"e1", unit_vector(f, n, 0), std::nullopt, std::nullopt});
      out.push_back({"e2", unit_vector(f, n, 1), std::nullopt, std::nullopt});
      break;
  }
  return out;
}

}  // namespace axial
