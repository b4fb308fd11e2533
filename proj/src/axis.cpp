#include "axial/axis.hpp"

namespace axial {

namespace {

struct SideSpectrum {
  bool ok = false;
  std::optional<Scalar> third;
  Polynomial minpoly;
  bool squarefree = false;
};

SideSpectrum spectrum(const Matrix& m) {
  const Field f = m.field();
  SideSpectrum s{false, std::nullopt, minimal_polynomial(m), false};
  s.squarefree = gcd(s.minpoly, s.minpoly.derivative()).degree() == 0;
  Polynomial rest = s.minpoly;
  for (long root : {0L, 1L}) {
    const Scalar r = Scalar::from_int(root, f);
    if (rest.eval(r).is_zero()) rest = rest.divmod(Polynomial::linear(r)).first;
  }
  if (rest.degree() == 0) {
    s.ok = true;
  } else if (rest.degree() == 1) {
    const Scalar root = -rest.coefficients()[0] / rest.coefficients()[1];
    if (!root.is_zero() && !root.is_one()) {
      s.ok = true;
      s.third = root;
    }
  }
  return s;
}

std::vector<Vector> eigenbasis(const Matrix& m, const Scalar& ev) {
  const std::size_t n = m.rows();
  return kernel(m - ev * Matrix::identity(m.field(), n));
}

}  // namespace

bool AxisReport::is_axis() const {
  return is_idempotent && eigenvalues_ok && lr_commute && semisimple_left && semisimple_right &&
         primitive_left && primitive_right;
}

std::string AxisReport::type_string() const {
  if (!type.lambda && !type.delta) return "degenerate";
  const std::string l = lambda()->to_string(), d = delta()->to_string();
  return commutative_type ? l : "(" + l + ", " + d + ")";
}

std::optional<AxisType> axis_eigenvalues(const Element& a) {
  if (!a.is_idempotent()) throw Error(ErrorKind::NotIdempotent, a.to_string() + " is not idempotent");
  const SideSpectrum l = spectrum(mult_matrix(a, Side::Left));
  const SideSpectrum r = spectrum(mult_matrix(a, Side::Right));
  if (!l.ok || !r.ok) return std::nullopt;
  return AxisType{l.third, r.third};
}

AxisReport analyze_axis(const Element& a) {
  AxisReport rep(a);
  rep.is_idempotent = a.is_idempotent();
  if (!rep.is_idempotent) return rep;
  const Algebra& alg = *a.algebra();
  const Field f = alg.field();
  const std::size_t n = alg.dim();
  const Matrix L = mult_matrix(a, Side::Left);
  const Matrix R = mult_matrix(a, Side::Right);
  rep.lr_commute = L * R == R * L;
  const SideSpectrum ls = spectrum(L), rs = spectrum(R);
  rep.minpoly_left = ls.minpoly;
  rep.minpoly_right = rs.minpoly;
  rep.eigenvalues_ok = ls.ok && rs.ok;
  if (!rep.eigenvalues_ok) return rep;
  rep.type = AxisType{ls.third, rs.third};

  const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
  auto side_spaces = [&](const Matrix& m, const std::optional<Scalar>& third) {
    std::vector<EigenData> out;
    std::vector<Scalar> evs{one, zero};
    if (third) evs.push_back(*third);
    for (const auto& ev : evs) {
      auto basis = eigenbasis(m, ev);
      if (!basis.empty()) out.push_back({ev, std::move(basis)});
    }
    return out;
  };
  rep.left_eigen = side_spaces(L, ls.third);
  rep.right_eigen = side_spaces(R, rs.third);
  auto total = [](const std::vector<EigenData>& e) {
    std::size_t d = 0;
    for (const auto& x : e) d += x.basis.size();
    return d;
  };
  rep.semisimple_left = ls.squarefree && total(rep.left_eigen) == n;
  rep.semisimple_right = rs.squarefree && total(rep.right_eigen) == n;
  rep.primitive_left = eigenbasis(L, one).size() == 1;
  rep.primitive_right = eigenbasis(R, one).size() == 1;
  rep.commutative_type = rep.type.degenerate() || *rep.lambda() == *rep.delta();

  // Joint spaces. With a degenerate type there is no third pair to form.
  auto joint = [&](const Scalar& mu, const Scalar& eta) {
    const auto lb = eigenbasis(L, mu), rb = eigenbasis(R, eta);
    const Subspace s = intersect(Subspace::span(f, n, lb), Subspace::span(f, n, rb));
    return JointEigenData{mu, eta, s.basis()};
  };
  rep.joint_eigen.push_back(joint(one, one));
  rep.joint_eigen.push_back(joint(zero, zero));
  if (!rep.type.degenerate()) {
    const Scalar lam = *rep.lambda(), del = *rep.delta();
    rep.joint_eigen.push_back(joint(zero, del));
    rep.joint_eigen.push_back(joint(lam, zero));
    rep.joint_eigen.push_back(joint(lam, del));
    rep.jordan_condition = rep.joint_eigen[2].basis.empty() && rep.joint_eigen[3].basis.empty();
    rep.odd_space = rep.joint_eigen[4].basis;
  } else {
    rep.jordan_condition = true;
  }
  rep.zero_space = rep.joint_eigen[1].basis;

  // Z2-grading on eigenbasis products: even = Fa + A_0, odd = A_{lambda,delta}.
  std::vector<Vector> even{a.coords()};
  even.insert(even.end(), rep.zero_space.begin(), rep.zero_space.end());
  const Subspace even_span = Subspace::span(f, n, even);
  const Subspace odd_span = Subspace::span(f, n, rep.odd_space);
  rep.fusion_ok = true;
  auto check = [&](const std::vector<Vector>& xs, const std::vector<Vector>& ys, const Subspace& target,
                   const char* label) {
    for (const auto& x : xs) {
      for (const auto& y : ys) {
        for (const Vector& p : {alg.multiply(x, y), alg.multiply(y, x)}) {
          if (!target.contains(p)) {
            rep.fusion_ok = false;
            if (rep.fusion_witness.empty()) {
              rep.fusion_witness = std::string(label) + ": (" + alg.format(x) + ")*(" + alg.format(y) +
                                   ") products give " + alg.format(p);
            }
          }
        }
      }
    }
  };
  check(even, even, even_span, "even*even not even");
  check(even, rep.odd_space, odd_span, "even*odd not odd");
  check(rep.odd_space, rep.odd_space, even_span, "odd*odd not even");

  if (even.size() + rep.odd_space.size() == n) {
    std::vector<Vector> cols(even);
    cols.insert(cols.end(), rep.odd_space.begin(), rep.odd_space.end());
    rep.projector = inverse(Matrix::from_columns(f, n, cols));
  }
  return rep;
}

ElementDecomposition decompose_wrt(const Vector& y, const AxisReport& report) {
  if (!report.is_axis() || !report.jordan_condition) {
    throw Error(ErrorKind::DecompositionFailed, report.idempotent.to_string() + " is not an axis satisfying the Jordan condition");
  }
  if (!report.projector) {
    throw Error(ErrorKind::DecompositionFailed,
                "Fa + A_0 + A_{lambda,delta} does not span; " + report.algebra()->format(y) + " cannot be split");
  }
  const Field f = report.idempotent.field();
  const std::size_t n = y.size();
  const Vector c = report.projector->apply(y);
  const std::size_t z = report.zero_space.size();
  Vector zero_part = zero_vector(f, n), minus_part = zero_vector(f, n);
  for (std::size_t i = 0; i < z; ++i) zero_part = axpy(zero_part, c[1 + i], report.zero_space[i]);
  for (std::size_t i = 0; i < report.odd_space.size(); ++i) {
    minus_part = axpy(minus_part, c[1 + z + i], report.odd_space[i]);
  }
  return ElementDecomposition{c[0], std::move(zero_part), std::move(minus_part)};
}

ElementDecomposition decompose_wrt(const Element& y, const AxisReport& report) {
  if (y.algebra() != report.algebra()) throw Error(ErrorKind::AlgebraMismatch, "element of another algebra");
  return decompose_wrt(y.coords(), report);
}

Scalar phi(const AxisReport& report, const Vector& y) { return decompose_wrt(y, report).alpha; }

}  // namespace axial
