#include <unordered_set>

#include "axial/two_generated.hpp"

namespace axial {

namespace {

bool is_half(const Scalar& s) { return s + s == Scalar::one(s.field()); }
bool is_minus_one(const Scalar& s) { return s == -Scalar::one(s.field()); }
bool is_two(const Scalar& s) { return s == Scalar::from_int(2, s.field()); }

// The coefficient c with v = c u, for nonzero u.
std::optional<Scalar> ratio(const Vector& v, const Vector& u) {
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k].is_zero()) continue;
    const Scalar c = v[k] / u[k];
    if (scale(c, u) == v) return c;
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(TwoGenCase c) {
  switch (c) {
    case TwoGenCase::Orthogonal: return "Orthogonal";
    case TwoGenCase::NoncommU2: return "NoncommU2";
    case TwoGenCase::NoncommExc3: return "NoncommExc3";
    case TwoGenCase::CommDim2: return "CommDim2";
    case TwoGenCase::CommDim3Gamma0: return "CommDim3Gamma0";
    case TwoGenCase::CommDim3GammaNonzero: return "CommDim3GammaNonzero";
  }
  return "?";
}

Element TwoGenReport::ambient(const Vector& local) const { return Element(sub.ambient, sub.to_ambient(local)); }

TwoGenReport classify_2gen(const Element& a, const Element& b) {
  if (a.algebra() != b.algebra()) throw Error(ErrorKind::AlgebraMismatch, "generators from different algebras");
  if (!a.is_idempotent() || !b.is_idempotent()) {
    throw Error(ErrorKind::BadParameter, "generators must be idempotents");
  }
  if (a == b) throw Error(ErrorKind::BadParameter, "the two generators coincide");
  const AlgebraPtr& alg = a.algebra();
  const Field f = alg->field();
  const Vector pair[] = {a.coords(), b.coords()};
  const Subspace generated = subalgebra_closure(*alg, pair);
  if (generated.dim() > 3) {
    throw Error(ErrorKind::TheoremViolation, "<<a, b>> has dimension " + std::to_string(generated.dim()));
  }
  Subalgebra subalg = make_subalgebra(alg, generated.basis());
  const AlgebraPtr loc = subalg.algebra;
  const Element la(loc, *subalg.to_local(a.coords()));
  const Element lb(loc, *subalg.to_local(b.coords()));
  AxisReport ra = analyze_axis(la);
  AxisReport rb = analyze_axis(lb);
  for (const AxisReport* r : {&ra, &rb}) {
    if (!r->is_jordan_axis()) {
      const Element e(alg, subalg.to_ambient(r->idempotent.coords()));
      throw Error(ErrorKind::NotAPaj, e.to_string() + " is not a primitive axis of Jordan type in <<a, b>>" +
                                          (r->fusion_witness.empty() ? "" : ": " + r->fusion_witness));
    }
  }
  auto amb = [&](const Vector& v) { return Element(alg, subalg.to_ambient(v)); };

  const ElementDecomposition d = decompose_wrt(lb, ra);
  const Scalar alpha_b = d.alpha;
  const Scalar beta_a = phi(rb, la.coords());
  const Element ab = la * lb, ba = lb * la;
  const std::size_t n = loc->dim();
  const std::optional<Scalar> lambda = ra.lambda(), lambda_prime = rb.lambda();

  TwoGenCase kind = TwoGenCase::CommDim2;
  std::optional<Element> sigma;
  std::optional<Scalar> gamma, gamma_check;
  if (ab.is_zero() && ba.is_zero()) {
    kind = TwoGenCase::Orthogonal;
  } else if (!loc->is_commutative()) {
    kind = n == 2 ? TwoGenCase::NoncommU2 : TwoGenCase::NoncommExc3;
  } else {
    if (!lambda || !lambda_prime) {
      throw Error(ErrorKind::TheoremViolation, "commutative generator without a third eigenvalue");
    }
    const Scalar one = Scalar::one(f);
    const Vector s = sub(sub(ab.coords(), scale(*lambda_prime, la.coords())), scale(*lambda, lb.coords()));
    sigma = amb(s);
    gamma = alpha_b * (one - *lambda) - *lambda_prime;
    gamma_check = beta_a * (one - *lambda_prime) - *lambda;
    if (n == 3) kind = gamma->is_zero() ? TwoGenCase::CommDim3Gamma0 : TwoGenCase::CommDim3GammaNonzero;
  }

  std::optional<Element> unit;
  if (auto u = unit_element(*loc)) unit = amb(*u);

  std::optional<Scalar> alpha_b_prime, mu_b, nu_b;
  std::optional<RegenerationNote> regeneration;
  if (kind == TwoGenCase::CommDim3GammaNonzero) {
    if (!unit) throw Error(ErrorKind::TheoremViolation, "gamma is nonzero but <<a, b>> has no unit");
    const Vector one_minus_a = sub(*subalg.to_local(unit->coords()), la.coords());
    alpha_b_prime = ratio(d.zero_part, one_minus_a);
    if (!alpha_b_prime) {
      throw Error(ErrorKind::TheoremViolation, "A_0(a) is not spanned by 1 - a");
    }
    mu_b = *alpha_b_prime - *alpha_b_prime * *alpha_b_prime;
    nu_b = alpha_b - alpha_b * alpha_b;

    const bool types_2_m1 = (is_two(*lambda) && is_minus_one(*lambda_prime)) ||
                            (is_minus_one(*lambda) && is_two(*lambda_prime));
    if (types_2_m1 && !is_two(-Scalar::one(f))) {
      const bool a_is_2 = is_two(*lambda);
      const AxisReport& x = a_is_2 ? ra : rb;
      const AxisReport& y = a_is_2 ? rb : ra;
      const Vector conj = miyamoto(y).apply(x.idempotent.coords());
      const Vector gens[] = {x.idempotent.coords(), conj};
      regeneration = RegenerationNote{amb(x.idempotent.coords()), amb(conj), subalgebra_closure(*loc, gens).dim() == n};
    }
  }

  Element b_zero = amb(d.zero_part), b_lambda = amb(d.minus_part);
  Element w_b = amb(add(scale(alpha_b, la.coords()), d.zero_part));
  return TwoGenReport{kind,
                      std::move(subalg),
                      a,
                      b,
                      std::move(ra),
                      std::move(rb),
                      lambda,
                      lambda_prime,
                      alpha_b,
                      beta_a,
                      std::move(sigma),
                      gamma,
                      gamma_check,
                      std::move(unit),
                      std::move(b_zero),
                      std::move(b_lambda),
                      std::move(w_b),
                      alpha_b_prime,
                      mu_b,
                      nu_b,
                      std::move(regeneration)};
}

Vector IdempotentCurve::at(const Scalar& t) const { return axpy(axpy(base, t, linear), t * t, quadratic); }

std::vector<Vector> SqrtFamily::at(const Scalar& alpha) const {
  const Scalar o = Scalar::one(alpha.field());
  const Vector w = axpy(scale(alpha, a), o - alpha, sub(one, a));
  const auto r = sqrt_in_field(alpha * (o - alpha) / nu_b);
  if (!r) return {};
  if (r->is_zero()) return {w};
  return {axpy(w, *r, b_lambda), axpy(w, -*r, b_lambda)};
}

std::vector<Element> IdempotentFamily::sample(std::span<const Scalar> params) const {
  std::vector<Element> out = members;
  for (const auto& t : params) {
    for (const auto& c : curves) out.emplace_back(algebra, c.at(t));
    if (sqrt_family) {
      for (auto& v : sqrt_family->at(t)) out.emplace_back(algebra, std::move(v));
    }
  }
  return out;
}

std::vector<Element> IdempotentFamily::all() const {
  const Field f = algebra->field();
  std::vector<Scalar> params;
  if (!finite()) {
    if (f.is_rational()) throw Error(ErrorKind::TooLarge, "infinite idempotent family over Q");
    for (std::uint64_t t = 0; t < f.characteristic(); ++t) params.push_back(Scalar::from_int(static_cast<long>(t), f));
  }
  std::vector<Element> out;
  std::unordered_set<Vector, VectorHash> seen;
  for (auto& e : sample(params)) {
    if (seen.insert(e.coords()).second) out.push_back(std::move(e));
  }
  return out;
}

IdempotentFamily enumerate_idempotents_2gen(const TwoGenReport& r) {
  const AlgebraPtr& alg = r.sub.ambient;
  const Field f = alg->field();
  const Scalar one = Scalar::one(f), two = Scalar::from_int(2, f);
  IdempotentFamily fam{alg, r.kind, {Element::zero(alg)}, {}, std::nullopt};
  if (r.unit) fam.members.push_back(*r.unit);
  const Vector& a = r.a.coords();
  const Vector& b = r.b.coords();
  const Vector zero = zero_vector(f, alg->dim());
  auto add_members = [&](std::initializer_list<Vector> vs) {
    for (const auto& v : vs) fam.members.emplace_back(alg, v);
  };
  auto unexpected = [&] {
    return Error(ErrorKind::TheoremViolation,
                 std::string(to_string(r.kind)) + " with type " + r.a_report.type_string() + " does not occur");
  };

  switch (r.kind) {
    case TwoGenCase::Orthogonal:
      add_members({a, b, add(a, b)});
      break;
    case TwoGenCase::NoncommU2:
    case TwoGenCase::NoncommExc3: {
      const Vector y = r.ambient(r.a_report.odd_space.at(0)).coords();
      fam.curves.push_back({"a + t z, z in A_{lambda,delta}(a)", a, y, zero});
      if (r.kind == TwoGenCase::NoncommExc3) fam.curves.push_back({"b + t y", b, y, zero});
      break;
    }
    case TwoGenCase::CommDim2:
      if (is_half(*r.lambda)) {
        fam.curves.push_back({"t a + (1 - t) b", b, sub(a, b), zero});
      } else if (is_minus_one(*r.lambda)) {
        add_members({a, b, sub(scale(-one, a), b)});
      } else {
        throw unexpected();
      }
      break;
    case TwoGenCase::CommDim3Gamma0: {
      const Vector& s = r.sigma->coords();
      if (is_half(*r.lambda)) {
        fam.curves.push_back({"t a + (1 - t) b + 2 t (1 - t) sigma", b, axpy(sub(a, b), two, s), scale(-two, s)});
      } else if (is_minus_one(*r.lambda)) {
        add_members({a, b, axpy(sub(scale(-one, a), b), two, s)});
      } else {
        throw unexpected();
      }
      break;
    }
    case TwoGenCase::CommDim3GammaNonzero: {
      const Vector& u = r.unit->coords();
      const Vector& bl = r.b_lambda.coords();
      if (!is_half(*r.lambda)) {
        const Vector bt = sub(r.w_b.coords(), bl);
        add_members({a, sub(u, a), b, sub(u, b), bt, sub(u, bt)});
      } else if (r.alpha_b.is_zero()) {
        fam.curves.push_back({"a + t b_lambda", a, bl, zero});
        fam.curves.push_back({"(1 - a) + t b_lambda", sub(u, a), bl, zero});
      } else {
        fam.sqrt_family = SqrtFamily{a, u, bl, *r.nu_b};
      }
      break;
    }
  }
  return fam;
}

std::vector<Element> brute_force_idempotents(const AlgebraPtr& alg) {
  const Field f = alg->field();
  if (f.is_rational()) throw Error(ErrorKind::TooLarge, "exhaustive search needs a finite field");
  const std::uint64_t p = f.characteristic();
  const std::size_t n = alg->dim();
  constexpr std::uint64_t limit = 10'000'000;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= p;
    if (total > limit) {
      throw Error(ErrorKind::TooLarge, std::to_string(p) + "^" + std::to_string(n) + " exceeds the search bound");
    }
  }
  struct Term {
    std::size_t i, j, k;
    std::uint64_t c;
  };
  std::vector<Term> terms;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& prod = alg->product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!prod[k].is_zero()) terms.push_back({i, j, k, prod[k].residue()});
      }
    }
  }
  std::vector<Element> out;
  std::vector<std::uint64_t> e(n, 0), sq(n);
  for (std::uint64_t step = 0; step < total; ++step) {
    std::fill(sq.begin(), sq.end(), 0);
    for (const auto& t : terms) {
      sq[t.k] = (sq[t.k] + (e[t.i] * e[t.j] % p) * t.c) % p;
    }
    if (sq == e) {
      Vector v;
      for (auto x : e) v.push_back(Scalar::from_int(static_cast<long>(x), f));
      out.emplace_back(alg, std::move(v));
    }
    for (std::size_t k = n; k-- > 0;) {
      if (++e[k] < p) break;
      e[k] = 0;
    }
  }
  return out;
}

Element conjugate_axis(const AxisReport& a_report, const AxisReport& e_report) {
  const AlgebraPtr& alg = a_report.algebra();
  if (e_report.algebra() != alg) throw Error(ErrorKind::AlgebraMismatch, "axes of different algebras");
  const Field f = alg->field();
  const Scalar one = Scalar::one(f);
  auto mismatch = [](const std::string& why) { return Error(ErrorKind::CaseMismatch, why); };
  if (alg->dim() != 3 || !alg->is_commutative()) throw mismatch("not a 3-dimensional commutative algebra");
  for (const AxisReport* r : {&a_report, &e_report}) {
    if (!r->is_jordan_axis() || !r->commutative_type || !r->lambda() || !is_half(*r->lambda())) {
      throw mismatch(r->idempotent.to_string() + " is not an axis of type 1/2");
    }
  }
  const auto u = unit_element(*alg);
  if (!u) throw mismatch("the algebra has no unit");
  const Vector& a = a_report.idempotent.coords();
  const ElementDecomposition d = decompose_wrt(e_report.idempotent, a_report);
  const Vector one_minus_a = sub(*u, a);
  if (d.zero_part != scale(one - d.alpha, one_minus_a)) {
    throw mismatch("the 0-part of " + e_report.idempotent.to_string() + " is not (1 - alpha_e)(1 - a)");
  }
  const Scalar mu = d.alpha + d.alpha - one;
  const Vector c = axpy(axpy(scale(mu * mu, a), one - mu * mu, one_minus_a), mu + mu, d.minus_part);
  return Element(alg, c);
}

TheoremAxesResult verify_theorem_axes(const AlgebraPtr& alg) {
  TheoremAxesResult out;
  const auto unit = unit_element(*alg);
  for (const auto& e : brute_force_idempotents(alg)) {
    if (e.is_zero() || (unit && e.coords() == *unit)) continue;
    ++out.checked;
    if (!analyze_axis(e).is_jordan_axis()) {
      out.holds = false;
      out.counterexamples.push_back(e);
    }
  }
  return out;
}

}  // namespace axial
