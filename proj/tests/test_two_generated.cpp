#include <doctest.h>

#include <algorithm>
#include <set>

#include "axial/error.hpp"
#include "axial/models.hpp"
#include "axial/two_generated.hpp"

using namespace axial;

namespace {

Scalar s(const char* text, Field f) { return Scalar::parse(text, f); }
Scalar si(long v, Field f) { return Scalar::from_int(v, f); }

struct Pair {
  std::string name;
  AlgebraPtr alg;
  Vector a, b;
  TwoGenCase expected;
};

Vector e(Field f, std::size_t n, std::size_t i) { return unit_vector(f, n, i); }

// 1 - x inside B(lambda, phi) with gamma != 0, where 1 = sigma / gamma.
Vector unit_minus(const Scalar& lambda, const Scalar& phi, const Vector& x) {
  const Field f = lambda.field();
  Vector one = zero_vector(f, 3);
  one[2] = B_gamma(lambda, phi).inverse();
  return sub(one, x);
}

// Generating pairs covering every case, with parameters valid over f.
std::vector<Pair> two_gen_zoo(Field f) {
  std::vector<Pair> out;
  const bool char3 = !f.is_rational() && f.characteristic() == 3;
  const Scalar lam = si(!f.is_rational() && f.characteristic() == 5 ? 2 : 3, f);
  const Scalar half = s("1/2", f);
  out.push_back({"U2(" + lam.to_string() + ")", make_U(2, lam), e(f, 2, 0), e(f, 2, 1), TwoGenCase::NoncommU2});
  out.push_back({"exc3(" + lam.to_string() + ")", make_exc3(lam), e(f, 3, 0), e(f, 3, 1), TwoGenCase::NoncommExc3});
  out.push_back({"U2(1/2)", make_U(2, half), e(f, 2, 0), e(f, 2, 1), TwoGenCase::CommDim2});
  out.push_back({"B(1/2,1)", make_B(half, si(1, f)), e(f, 3, 0), e(f, 3, 1), TwoGenCase::CommDim3Gamma0});
  out.push_back({"B(1/2,2)", make_B(half, si(2, f)), e(f, 3, 0), e(f, 3, 1), TwoGenCase::CommDim3GammaNonzero});
  out.push_back({"B(1/2,0)", make_B(half, si(0, f)), e(f, 3, 0), e(f, 3, 1), TwoGenCase::CommDim3GammaNonzero});
  out.push_back({"FxF", make_FxF(f), e(f, 2, 0), e(f, 2, 1), TwoGenCase::Orthogonal});
  if (!char3) {
    out.push_back({"U'2", make_U_prime(2, f), e(f, 2, 0), e(f, 2, 1), TwoGenCase::CommDim2});
    out.push_back({"B(-1,-1/2)", make_B(si(-1, f), s("-1/2", f)), e(f, 3, 0), e(f, 3, 1),
                   TwoGenCase::CommDim3Gamma0});
    const Scalar two = si(2, f), one = si(1, f);
    out.push_back({"B(2,1)", make_B(two, one), e(f, 3, 0), e(f, 3, 1), TwoGenCase::CommDim3GammaNonzero});
    out.push_back({"B(2,1) a, 1-b", make_B(two, one), e(f, 3, 0), unit_minus(two, one, e(f, 3, 1)),
                   TwoGenCase::CommDim3GammaNonzero});
    out.push_back({"B(2,1) 1-a, b", make_B(two, one), unit_minus(two, one, e(f, 3, 0)), e(f, 3, 1),
                   TwoGenCase::CommDim3GammaNonzero});
    const Scalar three = si(3, f);
    if (!(three == half) && !(three == si(-1, f))) {
      out.push_back({"B(3,3/2)", make_B(three, s("3/2", f)), e(f, 3, 0), e(f, 3, 1),
                     TwoGenCase::CommDim3GammaNonzero});
    }
  }
  return out;
}

TwoGenReport classify(const Pair& p) { return classify_2gen(Element(p.alg, p.a), Element(p.alg, p.b)); }

std::set<std::string> coord_set(const std::vector<Element>& es) {
  std::set<std::string> out;
  for (const auto& x : es) out.insert(to_string(x.coords()));
  return out;
}

std::vector<Field> test_fields() {
  return {Field::rationals(), Field::prime(5), Field::prime(7), Field::prime(11)};
}

}  // namespace

TEST_CASE("classification of generating pairs") {
  for (const Field f : test_fields()) {
    for (const auto& p : two_gen_zoo(f)) {
      CAPTURE(p.name);
      CAPTURE(f.to_string());
      const TwoGenReport r = classify(p);
      CHECK(r.kind == p.expected);
      CHECK(r.dim() == p.alg->dim());
      // b = alpha_b a + b_0 + b_lambda and w_b = alpha_b a + b_0
      CHECK(r.w_b + r.b_lambda == r.b);
      CHECK(r.w_b == r.alpha_b * r.a + r.b_zero);
      if (r.gamma) CHECK(*r.gamma == *r.gamma_check);
    }
  }
}

TEST_CASE("exceptional pair: b_0 = b - y is idempotent") {
  const Field f = Field::rationals();
  const AlgebraPtr alg = make_exc3(si(3, f));
  const TwoGenReport r = classify_2gen(Element::basis(alg, 0), Element::basis(alg, 1));
  CHECK(r.kind == TwoGenCase::NoncommExc3);
  const Element y = Element::basis(alg, 2);
  CHECK(r.b_zero == r.b - y);
  CHECK(r.b_zero * r.b_zero == r.b_zero);
  CHECK(r.alpha_b.is_zero());
}

TEST_CASE("non-axes are rejected") {
  const Field f = Field::rationals();
  const AlgebraPtr bad = make_B(si(2, f), s("3/2", f));
  CHECK_THROWS_AS(classify_2gen(Element::basis(bad, 0), Element::basis(bad, 1)), Error);
  try {
    classify_2gen(Element::basis(bad, 0), Element::basis(bad, 1));
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotAPaj);
  }
  const AlgebraPtr u = make_U(2, si(3, f));
  CHECK_THROWS_AS(classify_2gen(Element::basis(u, 0), Element::basis(u, 0)), Error);
}

TEST_CASE("gamma = 0: types, alpha_b = beta_a = lambda + 1/2 and b_lambda^2") {
  for (const Field f : test_fields()) {
    for (const auto& p : two_gen_zoo(f)) {
      if (p.expected != TwoGenCase::CommDim3Gamma0) continue;
      CAPTURE(p.name);
      const TwoGenReport r = classify(p);
      const Scalar l = *r.lambda;
      CHECK(l == *r.lambda_prime);
      CHECK((l == s("1/2", f) || l == si(-1, f)));
      CHECK(r.alpha_b == l + s("1/2", f));
      CHECK(r.beta_a == r.alpha_b);
      const Element expected = ((si(4, f) * l * l).inverse() - si(1, f)) * r.a - l.inverse() * *r.sigma;
      CHECK(r.b_lambda * r.b_lambda == expected);
      // annihilating elements exist exactly when gamma = 0
      CHECK(annihilator(*p.alg).dim() > 0);
      CHECK(!r.unit);
    }
  }
}

TEST_CASE("b_lambda closed form against the eigen-decomposition") {
  for (const Field f : test_fields()) {
    for (const auto& p : two_gen_zoo(f)) {
      if (p.expected != TwoGenCase::CommDim3Gamma0 && p.expected != TwoGenCase::CommDim3GammaNonzero) continue;
      CAPTURE(p.name);
      const TwoGenReport r = classify(p);
      const Scalar li = r.lambda->inverse();
      const Element closed = ((*r.lambda_prime - r.alpha_b) * li) * r.a + r.b + li * *r.sigma;
      CHECK(closed == r.b_lambda);
    }
  }
}

TEST_CASE("B(1/2, 1): b_lambda^2 = -2 sigma") {
  const Field f = Field::rationals();
  const AlgebraPtr alg = make_B(s("1/2", f), si(1, f));
  const TwoGenReport r = classify_2gen(Element::basis(alg, 0), Element::basis(alg, 1));
  CHECK(r.kind == TwoGenCase::CommDim3Gamma0);
  CHECK(r.b_lambda * r.b_lambda == si(-2, f) * *r.sigma);
}

TEST_CASE("gamma != 0: unit, alpha'_b, mu_b, nu_b and b_lambda^2") {
  for (const Field f : test_fields()) {
    for (const auto& p : two_gen_zoo(f)) {
      if (p.expected != TwoGenCase::CommDim3GammaNonzero) continue;
      CAPTURE(p.name);
      CAPTURE(f.to_string());
      const TwoGenReport r = classify(p);
      const Scalar one = si(1, f), two = si(2, f), four = si(4, f);
      const Scalar l = *r.lambda, lp = *r.lambda_prime;
      REQUIRE(r.unit);
      CHECK(*r.unit == r.gamma->inverse() * *r.sigma);
      CHECK(annihilator(*p.alg).dim() == 0);
      CHECK((lp == l || lp == one - l));
      const Element one_minus_a = *r.unit - r.a;
      CHECK(r.b_zero == *r.alpha_b_prime * one_minus_a);
      CHECK(*r.mu_b == *r.alpha_b_prime - *r.alpha_b_prime * *r.alpha_b_prime);
      CHECK(*r.nu_b == r.alpha_b - r.alpha_b * r.alpha_b);
      if (l == s("1/2", f)) {
        CHECK(lp == l);
        CHECK(r.alpha_b == r.beta_a);
        CHECK(*r.gamma == (r.alpha_b - one) / two);
        CHECK(r.b_lambda * r.b_lambda == *r.nu_b * *r.unit);
        continue;
      }
      if (lp == l) {
        CHECK(!(l == si(-1, f)));
        CHECK(r.alpha_b == l / two);
        CHECK(r.beta_a == l / two);
        CHECK(*r.gamma == -l * (l + one) / two);
        CHECK(*r.alpha_b_prime == (l + one) / two);
      } else {
        CHECK(r.alpha_b == one - l / two);
        CHECK(r.beta_a == one - lp / two);
        CHECK(*r.gamma == l * (l - one) / two);
        CHECK(*r.alpha_b_prime == (one - l) / two);
      }
      CHECK(*r.mu_b == (one - l * l) / four);
      CHECK(*r.nu_b == l * (two - l) / four);
      CHECK(r.b_lambda * r.b_lambda == ((one - l * l) / four) * *r.unit + ((two * l - one) / four) * r.a);
    }
  }
}

TEST_CASE("B(2, 1): alpha_b = lambda / 2 = 1") {
  const Field f = Field::rationals();
  const AlgebraPtr alg = make_B(si(2, f), si(1, f));
  const TwoGenReport r = classify_2gen(Element::basis(alg, 0), Element::basis(alg, 1));
  CHECK(r.kind == TwoGenCase::CommDim3GammaNonzero);
  CHECK(r.alpha_b == si(1, f));
  CHECK(!r.regeneration);
}

TEST_CASE("phi symmetry and its failure for mixed types") {
  for (const Field f : test_fields()) {
    for (const auto& p : two_gen_zoo(f)) {
      CAPTURE(p.name);
      const TwoGenReport r = classify(p);
      const bool mixed = r.lambda && r.lambda_prime && !(*r.lambda == *r.lambda_prime) &&
                         r.a_report.commutative_type && r.b_report.commutative_type;
      if (!mixed) CHECK(r.alpha_b == r.beta_a);
    }
  }
  // types 2 and -1: alpha_b = 0 while beta_a = 3/2
  const Field f = Field::rationals();
  const Pair p{"", make_B(si(2, f), si(1, f)), e(f, 3, 0), unit_minus(si(2, f), si(1, f), e(f, 3, 1)),
               TwoGenCase::CommDim3GammaNonzero};
  const TwoGenReport r = classify(p);
  CHECK(r.alpha_b == si(0, f));
  CHECK(r.beta_a == s("3/2", f));
}

TEST_CASE("type-2 regeneration note") {
  const Field f = Field::rationals();
  const Scalar two = si(2, f), one = si(1, f);
  const AlgebraPtr alg = make_B(two, one);
  const Element a = Element::basis(alg, 0);
  const Element c(alg, unit_minus(two, one, e(f, 3, 1)));
  for (const auto& [x, y] : {std::pair{a, c}, std::pair{c, a}}) {
    const TwoGenReport r = classify_2gen(x, y);
    REQUIRE(r.regeneration);
    CHECK(r.regeneration->type2_axis == a);
    CHECK(r.regeneration->spans);
    CHECK(*analyze_axis(r.regeneration->conjugate).lambda() == two);
    CHECK(r.regeneration->conjugate == miyamoto(analyze_axis(c)).apply(a));
  }
}

TEST_CASE("conjugates in the gamma != 0, lambda != 1/2 case") {
  for (const Field f : test_fields()) {
    for (const auto& p : two_gen_zoo(f)) {
      if (p.expected != TwoGenCase::CommDim3GammaNonzero) continue;
      const TwoGenReport r = classify(p);
      if (*r.lambda == s("1/2", f)) continue;
      CAPTURE(p.name);
      const Element a_tb = miyamoto(analyze_axis(r.b)).apply(r.a);
      const Element b_ta = miyamoto(analyze_axis(r.a)).apply(r.b);
      CHECK(b_ta == r.w_b - r.b_lambda);
      if (*r.lambda == *r.lambda_prime) {
        CHECK(a_tb == b_ta);
      } else {
        CHECK(a_tb == *r.unit - b_ta);
      }
    }
  }
}

TEST_CASE("conjugates in dimension 2 and for gamma = 0") {
  const Field f = Field::rationals();
  SUBCASE("type -1") {
    for (const AlgebraPtr& alg : {make_U_prime(2, f), make_B(si(-1, f), s("-1/2", f))}) {
      const TwoGenReport r = classify_2gen(Element::basis(alg, 0), Element::basis(alg, 1));
      Element c = -r.a - r.b;
      if (r.sigma) c = c + si(2, f) * *r.sigma;
      CHECK(miyamoto(analyze_axis(r.a)).apply(r.b) == c);
      CHECK(miyamoto(analyze_axis(r.b)).apply(r.a) == c);
    }
  }
  SUBCASE("U2(1/2): a^{tau_c} = 2c - a") {
    const AlgebraPtr alg = make_U(2, s("1/2", f));
    const Element a = Element::basis(alg, 0), b = Element::basis(alg, 1);
    for (const char* m : {"0", "2", "-1", "1/3"}) {
      const Scalar mu = s(m, f);
      const Element c = mu * a + (si(1, f) - mu) * b;
      CHECK(miyamoto(analyze_axis(c)).apply(a) == si(2, f) * c - a);
    }
  }
  SUBCASE("B(1/2, 1): a^{tau_c} = b for c = (a + b + sigma) / 2") {
    const AlgebraPtr alg = make_B(s("1/2", f), si(1, f));
    const TwoGenReport r = classify_2gen(Element::basis(alg, 0), Element::basis(alg, 1));
    const Element c = s("1/2", f) * (r.a + r.b + *r.sigma);
    CHECK(c.is_idempotent());
    CHECK(miyamoto(analyze_axis(c)).apply(r.a) == r.b);
  }
}

TEST_CASE("brute-force idempotents: small examples and guards") {
  const Field f5 = Field::prime(5), f7 = Field::prime(7);
  const auto fxf = brute_force_idempotents(make_FxF(f5));
  CHECK(coord_set(fxf) == std::set<std::string>{"(0, 0)", "(0, 1)", "(1, 0)", "(1, 1)"});
  CHECK(brute_force_idempotents(make_exc3(si(3, f7))).size() == 16);
  CHECK(brute_force_idempotents(make_U(2, si(3, f7))).size() == 8);
  CHECK_THROWS_AS(brute_force_idempotents(make_FxF(Field::rationals())), Error);
  CHECK_THROWS_AS(brute_force_idempotents(make_U(9, si(3, f7))), Error);
  for (const auto& x : brute_force_idempotents(make_B(si(3, f7), s("3/2", f7)))) CHECK(x.is_idempotent());
}

TEST_CASE("formula enumeration equals exhaustive search") {
  for (const Field f : {Field::prime(5), Field::prime(7), Field::prime(11)}) {
    std::set<TwoGenCase> seen;
    for (const auto& p : two_gen_zoo(f)) {
      CAPTURE(p.name);
      CAPTURE(f.to_string());
      const TwoGenReport r = classify(p);
      const IdempotentFamily fam = enumerate_idempotents_2gen(r);
      const auto listed = fam.all();
      for (const auto& x : listed) CHECK(x.is_idempotent());
      const auto brute = brute_force_idempotents(p.alg);
      CHECK(listed.size() == brute.size());
      CHECK(coord_set(listed) == coord_set(brute));
      seen.insert(r.kind);
    }
    CHECK(seen.size() == 6);
  }
}

TEST_CASE("idempotent counts") {
  const Field f7 = Field::prime(7);
  const AlgebraPtr b21 = make_B(si(2, f7), si(1, f7));
  const auto fam = enumerate_idempotents_2gen(classify_2gen(Element::basis(b21, 0), Element::basis(b21, 1)));
  CHECK(fam.finite());
  CHECK(fam.all().size() == 8);
  for (const Field f : {Field::prime(5), Field::prime(7), Field::prime(11), Field::prime(13)}) {
    const Scalar l = si(f.characteristic() == 5 ? 2 : 3, f);
    const AlgebraPtr x = make_exc3(l);
    const auto listed = enumerate_idempotents_2gen(classify_2gen(Element::basis(x, 0), Element::basis(x, 1))).all();
    CHECK(listed.size() == 2 * f.characteristic() + 2);
  }
}

TEST_CASE("families over Q are sampled idempotents") {
  const Field f = Field::rationals();
  std::vector<Scalar> params;
  for (const char* m : {"0", "1", "2", "-1", "1/2"}) params.push_back(s(m, f));
  for (const auto& p : two_gen_zoo(f)) {
    CAPTURE(p.name);
    const IdempotentFamily fam = enumerate_idempotents_2gen(classify(p));
    if (!fam.finite()) CHECK_THROWS_AS(fam.all(), Error);
    for (const auto& x : fam.sample(params)) {
      CHECK(x.is_idempotent());
      if (!x.is_zero() && !(fam.members.size() > 1 && x == fam.members[1] && classify(p).unit)) {
        CHECK(analyze_axis(x).is_jordan_axis());
      }
    }
  }
}

TEST_CASE("lambda = 1/2, gamma != 0, alpha_b = 0: alpha_e in {0, 1}, rho_e free") {
  const Field f = Field::rationals();
  const AlgebraPtr alg = make_B(s("1/2", f), si(0, f));
  const TwoGenReport r = classify_2gen(Element::basis(alg, 0), Element::basis(alg, 1));
  REQUIRE(r.alpha_b.is_zero());
  const AxisReport ra = analyze_axis(r.a);
  const IdempotentFamily fam = enumerate_idempotents_2gen(r);
  CHECK(fam.curves.size() == 2);
  for (const char* rho : {"0", "1", "-7/3", "100"}) {
    const Scalar t = s(rho, f);
    for (const auto& c : fam.curves) {
      const Element x(alg, c.at(t));
      CHECK(x.is_idempotent());
      const Scalar alpha_e = phi(ra, x.coords());
      CHECK((alpha_e.is_zero() || alpha_e == si(1, f)));
      CHECK(decompose_wrt(x, ra).minus_part == scale(t, r.b_lambda.coords()));
    }
  }
}

TEST_CASE("lambda = 1/2 square-root gate") {
  const Field f = Field::rationals();
  const AlgebraPtr alg = make_B(s("1/2", f), si(2, f));
  const TwoGenReport r = classify_2gen(Element::basis(alg, 0), Element::basis(alg, 1));
  const IdempotentFamily fam = enumerate_idempotents_2gen(r);
  REQUIRE(fam.sqrt_family);
  CHECK(*r.nu_b == si(-2, f));
  // alpha_e = 2: 2(1 - 2) / -2 = 1 is a square
  const auto two = fam.sqrt_family->at(si(2, f));
  REQUIRE(two.size() == 2);
  CHECK(!(two[0] == two[1]));
  const Vector w = sub(scale(si(2, f), r.a.coords()), sub(r.unit->coords(), r.a.coords()));
  CHECK(two[0] == add(w, r.b_lambda.coords()));
  // alpha_e = 3: 3(1 - 3) / -2 = 3 is not
  CHECK(fam.sqrt_family->at(si(3, f)).empty());
  // alpha_e in {0, 1} gives 1 - a and a
  CHECK(fam.sqrt_family->at(si(1, f)) == std::vector<Vector>{r.a.coords()});
  for (const auto& v : two) CHECK(Element(alg, v).is_idempotent());
}

TEST_CASE("conjugate_axis closed form against the Miyamoto matrix") {
  for (const Field f : {Field::prime(7), Field::prime(13)}) {
    for (long ph : {0, 2, 3, 4}) {
      const AlgebraPtr alg = make_B(s("1/2", f), si(ph, f));
      const AxisReport ra = analyze_axis(Element::basis(alg, 0));
      const auto unit = unit_element(*alg);
      for (const auto& x : brute_force_idempotents(alg)) {
        if (x.is_zero() || x.coords() == *unit) continue;
        const AxisReport rx = analyze_axis(x);
        CHECK(conjugate_axis(ra, rx) == miyamoto(rx).apply(ra.idempotent));
      }
    }
  }
}

TEST_CASE("conjugate_axis examples") {
  const Field f = Field::rationals();
  SUBCASE("e = a") {
    const AlgebraPtr alg = make_B(s("1/2", f), si(2, f));
    const AxisReport ra = analyze_axis(Element::basis(alg, 0));
    CHECK(conjugate_axis(ra, ra) == ra.idempotent);
  }
  SUBCASE("a^{tau_e} = b from a square root of alpha_b") {
    const AlgebraPtr alg = make_B(s("1/2", f), si(9, f));  // alpha_b = 9 = 3^2
    const TwoGenReport r = classify_2gen(Element::basis(alg, 0), Element::basis(alg, 1));
    const Scalar alpha_e = si(2, f);  // (2 alpha_e - 1)^2 = 9
    const Scalar rho = (si(2, f) * (si(2, f) * alpha_e - si(1, f))).inverse();
    const Element e_ = alpha_e * r.a + (si(1, f) - alpha_e) * (*r.unit - r.a) + rho * r.b_lambda;
    REQUIRE(e_.is_idempotent());
    const AxisReport re = analyze_axis(e_);
    CHECK(conjugate_axis(analyze_axis(r.a), re) == r.b);
    CHECK(miyamoto(re).apply(r.a) == r.b);
  }
  SUBCASE("alpha_b = 0: a^{tau_e} = a + 2 rho_e b_lambda") {
    const AlgebraPtr alg = make_B(s("1/2", f), si(0, f));
    const TwoGenReport r = classify_2gen(Element::basis(alg, 0), Element::basis(alg, 1));
    const AxisReport ra = analyze_axis(r.a);
    for (const char* rho : {"1", "-5/2"}) {
      const Scalar t = s(rho, f);
      // mu = 2 alpha_e - 1 is 1 on the line through a and -1 on the line through 1 - a
      for (const auto& [base, mu] : {std::pair{r.a, si(1, f)}, std::pair{*r.unit - r.a, si(-1, f)}}) {
        const Element e_ = base + t * r.b_lambda;
        CHECK(conjugate_axis(ra, analyze_axis(e_)) == r.a + (si(2, f) * mu * t) * r.b_lambda);
      }
    }
  }
  SUBCASE("wrong case") {
    const AlgebraPtr alg = make_U(2, si(3, f));
    const AxisReport ra = analyze_axis(Element::basis(alg, 0));
    try {
      conjugate_axis(ra, ra);
      FAIL("expected CaseMismatch");
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::CaseMismatch);
    }
  }
}

TEST_CASE("every nontrivial idempotent of a 2-generated algebra is a primitive axis") {
  const Field f7 = Field::prime(7);
  for (const auto& p : two_gen_zoo(f7)) {
    CAPTURE(p.name);
    const TheoremAxesResult res = verify_theorem_axes(p.alg);
    CHECK(res.holds);
    CHECK(res.counterexamples.empty());
    CHECK(res.checked > 0);
  }
  // negative control: B(2, 3/2) is not generated by axes of Jordan type
  const TheoremAxesResult bad = verify_theorem_axes(make_B(si(2, f7), s("3/2", f7)));
  CHECK(!bad.holds);
  CHECK(!bad.counterexamples.empty());
}
