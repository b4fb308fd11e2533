#include "axial/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>

namespace axial {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::NotAnAxis: return "NotAnAxis";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::MixedComponent: return "MixedComponent";
    case ErrorKind::NotAPaj: return "NotAPaj";
    case ErrorKind::CaseMismatch: return "CaseMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SymmetryFailure: return "SymmetryFailure";
    case ErrorKind::AssociativityFailure: return "AssociativityFailure";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IOFailure: return "IOFailure";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p == 2) throw Error(ErrorKind::BadParameter, "characteristic 2 is not supported");
  if (p >= (std::uint64_t{1} << 32)) {
    throw Error(ErrorKind::BadParameter, "prime must be below 2^32");
  }
  if (!is_prime(p)) throw Error(ErrorKind::BadParameter, std::to_string(p) + " is not prime");
  return Field(FieldKind::PrimeField, p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) {
    std::uint64_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw Error(ErrorKind::BadParameter, "bad field '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw Error(ErrorKind::BadParameter, "bad field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

namespace {

std::uint64_t mod_of(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

}  // namespace

Scalar Scalar::from_int(long value, Field f) {
  if (f.is_rational()) return Scalar(f, mpq_class(value));
  return Scalar(f, mod_of(mpz_class(value), f.characteristic()));
}

Scalar Scalar::from_fraction(long num, long den, Field f) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  return from_int(num, f) / from_int(den, f);
}

Scalar Scalar::from_mpq(const mpq_class& q, Field f) {
  if (f.is_rational()) {
    mpq_class c(q);
    c.canonicalize();
    return Scalar(f, c);
  }
  const std::uint64_t p = f.characteristic();
  std::uint64_t den = mod_of(q.get_den(), p);
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes mod p");
  return Scalar(f, mod_of(q.get_num(), p) * inv_mod(den, p) % p);
}

Scalar Scalar::parse(std::string_view text, Field f) {
  std::string s(text);
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    mpz_class z;
    std::string digits = part;
    if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
    bool ok = !digits.empty() && digits != "-";
    for (std::size_t i = 0; ok && i < digits.size(); ++i) {
      ok = std::isdigit(static_cast<unsigned char>(digits[i])) || (i == 0 && digits[i] == '-');
    }
    if (!ok || z.set_str(digits, 10) != 0) {
      throw Error(ErrorKind::ParseError, "bad scalar '" + s + "'");
    }
    return z;
  };
  mpz_class num = parse_int(slash == std::string::npos ? s : s.substr(0, slash));
  mpz_class den = slash == std::string::npos ? mpz_class(1) : parse_int(s.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "bad scalar '" + s + "'");
  return from_mpq(mpq_class(num, den), f);
}

bool Scalar::is_zero() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw Error(ErrorKind::FieldMismatch, "not a rational scalar");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw Error(ErrorKind::FieldMismatch, "not a residue");
  return std::get<std::uint64_t>(value_);
}

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw Error(ErrorKind::FieldMismatch, field_.to_string() + " vs " + o.field_.to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (field_.is_rational()) return Scalar(field_, mpq_class(1) / rational());
  return Scalar(field_, inv_mod(residue(), field_.characteristic()));
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-rational()));
  const std::uint64_t r = residue();
  return Scalar(field_, r == 0 ? 0 : field_.characteristic() - r);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += o.rational();
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + o.residue()) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= o.rational();
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = r * o.residue() % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  return a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return rational().get_str();
  return std::to_string(residue());
}

std::size_t Scalar::hash() const {
  if (!field_.is_rational()) return std::hash<std::uint64_t>{}(residue());
  const mpq_class& q = rational();
  std::size_t h = static_cast<std::size_t>(sgn(q)) + 0x9e3779b9;
  for (const mpz_srcptr z : {q.get_num_mpz_t(), q.get_den_mpz_t()}) {
    for (std::size_t i = 0; i < mpz_size(z); ++i) {
      h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(z, i)) + 0x9e3779b9 + (h << 6) + (h >> 2);
    }
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace {

// Tonelli-Shanks; only used above the exhaustive-search bound.
std::optional<std::uint64_t> tonelli_shanks(std::uint64_t n, std::uint64_t p) {
  if (pow_mod(n, (p - 1) / 2, p) != 1) return std::nullopt;
  std::uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s, c = pow_mod(z, q, p), t = pow_mod(n, q, p), r = pow_mod(n, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    std::uint64_t b = pow_mod(c, std::uint64_t{1} << (m - i - 1), p);
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

}  // namespace

std::optional<Scalar> sqrt_in_field(const Scalar& x) {
  const Field f = x.field();
  if (f.is_rational()) {
    const mpq_class& q = x.rational();
    if (sgn(q) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
      return std::nullopt;
    }
    mpz_class num = sqrt(q.get_num());
    mpz_class den = sqrt(q.get_den());
    return Scalar::from_mpq(mpq_class(num, den), f);
  }
  const std::uint64_t p = f.characteristic();
  const std::uint64_t n = x.residue();
  if (n == 0) return x;
  std::optional<std::uint64_t> root;
  if (p < (std::uint64_t{1} << 16)) {
    for (std::uint64_t r = 1; r <= p / 2; ++r) {
      if (r * r % p == n) {
        root = r;
        break;
      }
    }
  } else {
    root = tonelli_shanks(n, p);
  }
  if (!root) return std::nullopt;
  return Scalar::from_int(static_cast<long>(std::min(*root, p - *root)), f);
}

}  // namespace axial
