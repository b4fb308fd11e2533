#include <unordered_set>

#include "axial/axial_analysis.hpp"

namespace axial {

bool is_automorphism(const Algebra& alg, const Matrix& m) {
  const std::size_t n = alg.dim();
  if (m.rows() != n || m.cols() != n) return false;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(m.column(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m.apply(alg.product(i, j)) != alg.multiply(images[i], images[j])) return false;
    }
  }
  return true;
}

Involution miyamoto(const AxisReport& report) {
  if (!report.is_jordan_axis() || !report.projector) {
    throw Error(ErrorKind::NotAnAxis, report.idempotent.to_string() +
                                          " is not an axis with the Jordan condition and fusion rules");
  }
  const Field f = report.idempotent.field();
  const std::size_t n = report.algebra()->dim();
  std::vector<Vector> cols{report.idempotent.coords()};
  cols.insert(cols.end(), report.zero_space.begin(), report.zero_space.end());
  for (const auto& v : report.odd_space) cols.push_back(scale(-Scalar::one(f), v));
  // P D P^-1 with P = (a, A_0, A_odd): negating the odd columns of P gives P D.
  Matrix m = Matrix::from_columns(f, n, cols) * *report.projector;
  if (!(m * m == Matrix::identity(f, n)) || !is_automorphism(*report.algebra(), m)) {
    throw Error(ErrorKind::NotAutomorphism, "Miyamoto map of " + report.idempotent.to_string() +
                                                " is not an involutive automorphism");
  }
  return Involution{std::move(m), report.idempotent};
}

Involution conjugate_involution(const Involution& inv, const Matrix& rho) {
  const Algebra& alg = *inv.source_axis.algebra();
  const auto rho_inv = inverse(rho);
  if (!rho_inv || !is_automorphism(alg, rho)) {
    throw Error(ErrorKind::NotAutomorphism, "conjugating map is not an automorphism");
  }
  return Involution{rho * inv.matrix * *rho_inv, Element(inv.source_axis.algebra(), rho.apply(inv.source_axis.coords()))};
}

ClosureResult closure(std::span<const AxisReport> generators, ClosureOptions opts) {
  if (generators.empty()) throw Error(ErrorKind::BadParameter, "closure of an empty set");
  const AlgebraPtr alg = generators.front().algebra();
  ClosureResult out{{}, {}, Subspace(alg->field(), alg->dim()), false, 0};
  std::vector<Involution> taus;
  for (const auto& g : generators) taus.push_back(miyamoto(g));

  std::unordered_set<Vector, VectorHash> seen;
  std::vector<std::size_t> frontier;
  bool span_grew = false;
  auto add = [&](const Vector& v, std::size_t origin) {
    if (!seen.insert(v).second) return false;
    out.axes.emplace_back(alg, v);
    out.origin.push_back(origin);
    span_grew |= out.span.insert(v);
    frontier.push_back(out.axes.size() - 1);
    return true;
  };
  for (std::size_t i = 0; i < generators.size(); ++i) add(generators[i].idempotent.coords(), i);

  while (!frontier.empty()) {
    const bool capped = out.depth_reached >= opts.max_depth || out.axes.size() >= opts.max_axes;
    if (capped && !span_grew) {
      out.truncated = true;
      break;
    }
    const std::vector<std::size_t> level = std::move(frontier);
    frontier.clear();
    span_grew = false;
    for (std::size_t i : level) {
      for (const auto& tau : taus) {
        const Vector w = tau.apply(out.axes[i].coords());
        add(w, out.origin[i]);
      }
    }
    ++out.depth_reached;
  }
  return out;
}

bool spanning_check(std::span<const AxisReport> generators, ClosureOptions opts) {
  const ClosureResult c = closure(generators, opts);
  return c.span.dim() == generators.front().algebra()->dim();
}

}  // namespace axial
