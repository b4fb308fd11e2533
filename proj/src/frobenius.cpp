#include <algorithm>

#include "axial/frobenius.hpp"

namespace axial {

namespace {

bool is_value(const std::optional<Scalar>& s, long v) {
  return s && *s == Scalar::from_int(v, s->field());
}

bool minus_one_is_half(Field f) { return Scalar::from_int(-2, f) == Scalar::one(f); }

bool types_minus1_and_2(const Scalar& l) {
  const Field f = l.field();
  const Scalar m = Scalar::one(f) - l;
  const Scalar two = Scalar::from_int(2, f), mone = -Scalar::one(f);
  return !(two == mone) && ((l == two && m == mone) || (l == mone && m == two));
}

Vector phi_row(const AxisReport& a, std::size_t n) {
  const Field f = a.idempotent.field();
  Vector out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(phi(a, unit_vector(f, n, k)));
  return out;
}

Scalar dot(const Vector& u, const Vector& v) {
  Scalar s = Scalar::zero(u.front().field());
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

}  // namespace

std::string_view to_string(FrobeniusCase c) {
  switch (c) {
    case FrobeniusCase::CaseI_lambda_delta: return "CaseI_lambda_delta";
    case FrobeniusCase::CaseII_lambda: return "CaseII_lambda";
    case FrobeniusCase::CaseIII_split: return "CaseIII_split";
  }
  return "?";
}

XPrimeSelection choose_Xprime(const DecompositionReport& decomp, const XPrimeOptions& opts) {
  if (!decomp.spans_ambient) {
    throw Error(ErrorKind::BadParameter, "the generators do not span the algebra; build the form on <<X>>");
  }
  const ClosureResult& cl = decomp.closure;
  XPrimeSelection sel;
  sel.algebra = cl.axes.front().algebra();
  sel.truncated = cl.truncated;
  if (cl.truncated) {
    sel.warnings.push_back("TruncatedClosure: orbit cut at depth " + std::to_string(cl.depth_reached) + " with " +
                           std::to_string(cl.axes.size()) + " axes");
  }
  for (const auto& x : cl.axes) sel.closure_axes.push_back(analyze_axis(x));

  std::vector<bool> in_xprime(cl.axes.size(), false);
  for (const auto& comp : decomp.components) {
    ComponentSelection cs{FrobeniusCase::CaseII_lambda, comp.axes, std::nullopt, {}};
    if (comp.type.noncommutative) {
      cs.kind = FrobeniusCase::CaseI_lambda_delta;
    } else if (comp.type.mixed) {
      cs.kind = FrobeniusCase::CaseIII_split;
      const Scalar l = *comp.type.lambda;
      const Scalar m = Scalar::one(l.field()) - l;
      if (types_minus1_and_2(l)) {
        cs.nu = Scalar::from_int(2, l.field());
      } else {
        for (const auto& p : opts.preferred_nu) {
          if (p == l || p == m) {
            cs.nu = p;
            break;
          }
        }
        if (!cs.nu) cs.nu = *sel.closure_axes[comp.axes.front()].lambda();
      }
    }
    for (auto i : comp.axes) {
      const auto& l = sel.closure_axes[i].lambda();
      if (cs.nu && !(l && *l == *cs.nu)) continue;
      cs.kept.push_back(i);
      in_xprime[i] = true;
    }
    sel.components.push_back(std::move(cs));
  }

  // Generators come first in the closure, so the first axis of each origin is the generator.
  std::vector<bool> origin_seen(cl.axes.size(), false);
  for (std::size_t g = 0; g < cl.axes.size(); ++g) {
    if (origin_seen[cl.origin[g]]) continue;
    origin_seen[cl.origin[g]] = true;
    if (in_xprime[g]) continue;
    const AxisReport& ra = sel.closure_axes[g];
    Exclusion ex{ra.idempotent, false, {}};
    const Field f = ra.idempotent.field();
    if (ra.commutative_type && is_value(ra.lambda(), -1) && !minus_one_is_half(f)) {
      for (std::size_t j = 0; j < cl.axes.size() && !ex.exception; ++j) {
        const AxisReport& rx = sel.closure_axes[j];
        if (!rx.commutative_type || !is_value(rx.lambda(), 2)) continue;
        if ((ra.idempotent * rx.idempotent).is_zero()) continue;
        ex.exception = true;
        const TwoGenReport tg = classify_2gen(ra.idempotent, rx.idempotent);
        if (tg.regeneration && tg.regeneration->spans) {
          ex.substitute = {tg.regeneration->type2_axis, tg.regeneration->conjugate};
        } else {
          sel.warnings.push_back("no type-2 regeneration pair for " + ra.idempotent.to_string());
        }
      }
    }
    for (const auto& s : ex.substitute) {
      auto it = std::find(cl.axes.begin(), cl.axes.end(), s);
      if (it != cl.axes.end()) {
        in_xprime[static_cast<std::size_t>(it - cl.axes.begin())] = true;
      } else {
        sel.warnings.push_back("regeneration axis " + s.to_string() + " lies outside the truncated closure");
      }
    }
    sel.exclusions.push_back(std::move(ex));
  }

  Subspace span(sel.algebra->field(), sel.algebra->dim());
  for (std::size_t i = 0; i < cl.axes.size(); ++i) {
    if (!in_xprime[i]) continue;
    if (span.insert(cl.axes[i].coords())) sel.basis.push_back(sel.axes.size());
    sel.axes.push_back(sel.closure_axes[i]);
  }
  if (span.dim() != sel.algebra->dim()) {
    throw Error(ErrorKind::BadParameter, "X' spans only " + std::to_string(span.dim()) + " dimensions");
  }
  return sel;
}

XPrimeSelection choose_Xprime(std::span<const AxisReport> generators, ClosureOptions closure_opts,
                              const XPrimeOptions& opts) {
  return choose_Xprime(axial_decomposition(generators, closure_opts), opts);
}

Scalar FrobeniusForm::operator()(const Vector& u, const Vector& v) const { return dot(u, matrix.apply(v)); }

FrobeniusForm build_form(XPrimeSelection sel) {
  const AlgebraPtr alg = sel.algebra;
  const Field f = alg->field();
  const std::size_t n = alg->dim();
  std::vector<Vector> cols;
  for (auto i : sel.basis) cols.push_back(sel.axes[i].idempotent.coords());
  const Matrix bmat = Matrix::from_columns(f, n, cols);
  const auto binv = inverse(bmat);
  if (!binv) throw Error(ErrorKind::BadParameter, "the chosen basis of X' is singular");

  Matrix gram(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = phi(sel.axes[sel.basis[i]], cols[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(gram(i, j) == gram(j, i))) {
        throw Error(ErrorKind::SymmetryFailure, "phi_a(b) = " + gram(i, j).to_string() + " but phi_b(a) = " +
                                                    gram(j, i).to_string() + " for a = " + alg->format(cols[i]) +
                                                    ", b = " + alg->format(cols[j]));
      }
    }
  }
  FrobeniusForm form{std::move(sel), gram, binv->transpose() * gram * *binv, {}};

  for (const auto& a : form.selection.axes) {
    const Vector& av = a.idempotent.coords();
    if (form.matrix.transpose().apply(av) != phi_row(a, n)) {
      throw Error(ErrorKind::TheoremViolation, "(a, u) differs from phi_a(u) for a = " + a.idempotent.to_string());
    }
    if (!form.norm(av).is_one()) {
      throw Error(ErrorKind::TheoremViolation, "(a, a) = " + form.norm(av).to_string() + " for a = " +
                                                   a.idempotent.to_string());
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = unit_vector(f, n, i);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar lhs = form(ei, alg->product(j, k));
        const Scalar rhs = form(alg->product(i, j), unit_vector(f, n, k));
        if (!(lhs == rhs)) {
          const auto& nm = alg->names();
          throw Error(ErrorKind::AssociativityFailure, "(" + nm[i] + ", " + nm[j] + nm[k] + ") = " + lhs.to_string() +
                                                           " but (" + nm[i] + nm[j] + ", " + nm[k] +
                                                           ") = " + rhs.to_string());
        }
      }
    }
  }
  form.radical_basis = radical(form);
  return form;
}

std::vector<Vector> radical(const FrobeniusForm& form) {
  const Algebra& alg = *form.selection.algebra;
  Subspace r(alg.field(), alg.dim());
  for (const auto& v : kernel(form.matrix)) r.insert(v);
  if (!is_ideal(alg, r)) throw Error(ErrorKind::TheoremViolation, "the radical of the form is not an ideal");
  return r.basis();
}

bool eigenspaces_orthogonal(const FrobeniusForm& form, const AxisReport& axis) {
  const std::vector<Vector> one{axis.idempotent.coords()};
  auto orthogonal = [&](const std::vector<Vector>& us, const std::vector<Vector>& vs) {
    for (const auto& u : us) {
      for (const auto& v : vs) {
        if (!form(u, v).is_zero()) return false;
      }
    }
    return true;
  };
  bool ok = orthogonal(one, axis.zero_space) && orthogonal(one, axis.odd_space) &&
            orthogonal(axis.zero_space, axis.odd_space);
  if (!axis.commutative_type) ok = ok && orthogonal(axis.odd_space, axis.odd_space);
  return ok;
}

bool form_invariant(const FrobeniusForm& form, const Matrix& psi) {
  return psi.transpose() * form.matrix * psi == form.matrix;
}

A0Report check_A0_closed(const AxisReport& a, const FrobeniusForm& form) {
  const Algebra& alg = *a.algebra();
  const Field f = alg.field();
  A0Report out{A0Verdict::Closed, true, form.norm(a.idempotent.coords()), false, std::nullopt, {}};
  Subspace a0(f, alg.dim());
  for (const auto& v : a.zero_space) a0.insert(v);
  for (const auto& x : a.zero_space) {
    for (const auto& y : a.zero_space) {
      const Vector xy = alg.multiply(x, y);
      if (out.a0_closed && !a0.contains(xy)) {
        out.a0_closed = false;
        out.witness = "(" + alg.format(x) + ")(" + alg.format(y) + ") = " + alg.format(xy) + " is not in A_0";
      }
    }
  }
  out.in_radical = is_zero(form.matrix.apply(a.idempotent.coords()));

  if (a.commutative_type && is_value(a.lambda(), -1) && !minus_one_is_half(f)) {
    for (const auto& rx : form.selection.closure_axes) {
      if (rx.commutative_type && is_value(rx.lambda(), 2) && !(a.idempotent * rx.idempotent).is_zero()) {
        out.type2_neighbor = rx.idempotent;
        break;
      }
    }
  }
  if (out.type2_neighbor) {
    out.verdict = A0Verdict::ExceptionalCase;
    if (!out.norm.is_zero() || !out.in_radical) {
      throw Error(ErrorKind::TheoremViolation, "type -1 axis " + a.idempotent.to_string() +
                                                   " next to a type-2 axis has norm " + out.norm.to_string() +
                                                   (out.in_radical ? "" : " and is outside the radical"));
    }
    return out;
  }
  if (!out.a0_closed) throw Error(ErrorKind::TheoremViolation, out.witness);
  return out;
}

}  // namespace axial
