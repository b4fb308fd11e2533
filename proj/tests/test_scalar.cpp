#include <doctest.h>

#include <random>

#include "axial/scalar.hpp"

using namespace axial;

namespace {

Scalar q(long num, long den = 1) { return Scalar::from_fraction(num, den, Field::rationals()); }

Scalar random_scalar(std::mt19937& rng, Field f) {
  std::uniform_int_distribution<long> d(-40, 40), den(1, 12);
  if (!f.is_rational()) return Scalar::from_int(d(rng), f);
  return Scalar::from_fraction(d(rng), den(rng), f);
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK((q(1, 2) + q(1, 3)).to_string() == "5/6");
  CHECK(q(6, 4).to_string() == "3/2");
  CHECK(q(-3, 6) == q(1, -2));
  CHECK_THROWS_AS(q(1) / q(0), Error);
}

TEST_CASE("prime field arithmetic") {
  const Field f7 = Field::prime(7);
  CHECK(Scalar::from_int(4, f7) * Scalar::from_int(4, f7) == Scalar::from_int(2, f7));
  CHECK(Scalar::from_int(-1, f7).residue() == 6);
  CHECK(Scalar::from_fraction(1, 2, f7).residue() == 4);
  CHECK(Scalar::parse("3/2", f7) == Scalar::from_int(5, f7));
  for (long x = 1; x < 7; ++x) {
    const Scalar s = Scalar::from_int(x, f7);
    CHECK((s * s.inverse()).is_one());
  }
  CHECK_THROWS_AS(Scalar::from_int(0, f7).inverse(), Error);
}

TEST_CASE("field descriptors") {
  CHECK_THROWS_AS(Field::prime(2), Error);
  CHECK_THROWS_AS(Field::prime(9), Error);
  CHECK_THROWS_AS(Field::prime(4294967311ULL), Error);
  CHECK(Field::parse("Fp:11") == Field::prime(11));
  CHECK(Field::parse("Q") == Field::rationals());
  CHECK_THROWS_AS(Field::parse("F7"), Error);
  CHECK_THROWS_AS(Scalar::parse("1/x", Field::rationals()), Error);
  try {
    (void)(q(1) + Scalar::one(Field::prime(5)));
    FAIL("mixing fields must throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldMismatch);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(20261016);
  for (Field f : {Field::rationals(), Field::prime(7), Field::prime(13), Field::prime(101)}) {
    for (int trial = 0; trial < 200; ++trial) {
      const Scalar x = random_scalar(rng, f), y = random_scalar(rng, f), z = random_scalar(rng, f);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + y == y + x);
      CHECK(x - x == Scalar::zero(f));
      if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
    }
  }
}

TEST_CASE("square roots") {
  const Field f7 = Field::prime(7);
  CHECK(sqrt_in_field(q(9, 4)) == q(3, 2));
  CHECK(!sqrt_in_field(q(2)).has_value());
  CHECK(!sqrt_in_field(q(-4)).has_value());
  CHECK(!sqrt_in_field(q(1, 2)).has_value());
  CHECK(!sqrt_in_field(Scalar::from_int(3, f7)).has_value());
  CHECK(sqrt_in_field(Scalar::from_int(2, f7))->residue() == 3);
  CHECK(sqrt_in_field(Scalar::from_int(0, f7))->is_zero());
}

TEST_CASE("quadratic residue counts") {
  // 65537 and 1000003 exercise Tonelli-Shanks.
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 101ULL, 65537ULL}) {
    const Field f = Field::prime(p);
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
      const Scalar s = Scalar::from_int(static_cast<long>(x), f);
      if (auto r = sqrt_in_field(s)) {
        CHECK(*r * *r == s);
        CHECK(r->residue() <= p - r->residue());
        ++count;
      }
    }
    CHECK(count == (p + 1) / 2);
  }
  const Field big = Field::prime(1000003);
  for (long x : {2L, 5L, 12345L, 999999L}) {
    const Scalar s = Scalar::from_int(x, big);
    if (auto r = sqrt_in_field(s)) CHECK(*r * *r == s);
  }
}
