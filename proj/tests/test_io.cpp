#include <doctest.h>

#include <filesystem>

#include "axial/error.hpp"
#include "axial/io.hpp"
#include "axial/models.hpp"

using namespace axial;

namespace {

bool same_algebra(const Algebra& x, const Algebra& y) {
  if (!(x.field() == y.field()) || x.names() != y.names()) return false;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    for (std::size_t j = 0; j < x.dim(); ++j) {
      if (x.product(i, j) != y.product(i, j)) return false;
    }
  }
  return true;
}

std::string parse_message(std::string_view text) {
  try {
    parse_algebra(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    return e.what();
  }
  FAIL("document parsed");
  return {};
}

const char* kSmall = R"({
  "field": {"kind":"Fp","p":3},
  "dim": 2,
  "basis": ["a","b"],
  "table": [
    [[[0,"1"]],[]],
    [[[1,"1"]],[[1,"1"]]]
  ]
}
)";

}  // namespace

TEST_CASE("io: round trip on models") {
  const Field q = Field::rationals(), f7 = Field::prime(7);
  const std::vector<AlgebraPtr> algs = {
      make_U(3, Scalar::parse("-3/4", q)), make_exc3(Scalar::from_int(3, f7)),
      make_B(Scalar::parse("1/2", q), Scalar::from_int(2, q)), make_FxF(f7),
      make_U_prime(2, q), direct_product(make_U(2, Scalar::from_int(2, f7)), make_exc3(Scalar::from_int(3, f7)))};
  for (const auto& alg : algs) {
    const std::string text = serialize_algebra(*alg);
    const AlgebraPtr back = parse_algebra(text);
    CHECK(same_algebra(*alg, *back));
    CHECK(serialize_algebra(*back) == text);
  }
}

TEST_CASE("io: canonical form is a fixed point") {
  CHECK(serialize_algebra(*parse_algebra(kSmall)) == kSmall);
  // Non-canonical input: zero terms, unsorted, fractions over F_p, compact layout.
  const char* loose = R"({"basis":["a","b"],"dim":2,"field":{"p":3,"kind":"Fp"},
    "table":[[[[0,"4"],[1,"0"]],[]],[[[1,"1/2"]],[[1,"-2"]]]]})";
  const AlgebraPtr a = parse_algebra(loose);
  CHECK(serialize_algebra(*a).find(R"([[[1,"2"]],[[1,"1"]]])") != std::string::npos);
  const std::string canon = serialize_algebra(*a);
  CHECK(serialize_algebra(*parse_algebra(canon)) == canon);
}

TEST_CASE("io: rejects unknown fields and bad structure") {
  CHECK(parse_message(R"({"field":{"kind":"Q"},"dim":1,"basis":["e"],"table":[[[[0,"1"]]]],"extra":1})")
            .find("unknown field \"extra\"") != std::string::npos);
  CHECK(parse_message(R"({"field":{"kind":"Q","modulus":2},"dim":1,"basis":["e"],"table":[[[]]]})")
            .find("field: unknown field \"modulus\"") != std::string::npos);
  CHECK(parse_message(R"({"field":{"kind":"Fp","p":9},"dim":1,"basis":["e"],"table":[[[]]]})")
            .find("field.p") != std::string::npos);
  CHECK(parse_message(R"({"field":{"kind":"Q"},"dim":2,"basis":["e","e"],"table":[[[],[]],[[],[]]]})")
            .find("basis[1]: duplicate") != std::string::npos);
  CHECK(parse_message(R"({"field":{"kind":"Q"},"dim":1,"basis":["e"],"table":[[[[1,"1"]]]]})")
            .find("table[0][0][0][0]: index 1 out of range") != std::string::npos);
  CHECK(parse_message(R"({"field":{"kind":"Q"},"dim":1,"basis":["e"],"table":[[[[0,1]]]]})")
            .find("table[0][0][0][1]: scalars are written as strings") != std::string::npos);
  CHECK(parse_message(R"({"field":{"kind":"Q"},"dim":1,"basis":["e"],"table":[[[[0,"x"]]]]})")
            .find("table[0][0][0][1]") != std::string::npos);
  CHECK(parse_message(R"({"field":{"kind":"Q"},"dim":1,"basis":["e"]})").find("missing field \"table\"") !=
        std::string::npos);
  CHECK(parse_message(R"({"field":{"kind":"Q"},"dim":2,"basis":["e"],"table":[]})").find("basis") !=
        std::string::npos);
}

TEST_CASE("io: syntax errors carry line and column") {
  // The column is that of the last character of the offending token.
  CHECK(parse_message("{\n  \"dim\": 2,\n  \"basis\": [\"a\" \"b\"]\n}").find("line 3, column 19") !=
        std::string::npos);
  CHECK(parse_message("").find("line 1, column 1") != std::string::npos);
}

TEST_CASE("io: files") {
  const auto dir = std::filesystem::temp_directory_path() / "axial_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "u2.json";
  const AlgebraPtr alg = make_U(2, Scalar::from_int(3, Field::prime(5)));
  save_algebra(path, *alg);
  CHECK(same_algebra(*alg, *load_algebra(path)));
  CHECK_THROWS_AS(load_algebra(dir / "missing.json"), Error);
  try {
    load_algebra(dir / "missing.json");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IOFailure);
  }
  std::filesystem::remove_all(dir);
}
