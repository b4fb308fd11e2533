#include "axial/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace axial {

Vector zero_vector(Field f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(Field f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v[i] = Scalar::one(f);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(const Vector& a, const Vector& b) {
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& s, const Vector& v) {
  Vector r(v);
  for (auto& x : r) x *= s;
  return r;
}

Vector axpy(const Vector& a, const Scalar& s, const Vector& b) {
  Vector r(a);
  if (s.is_zero()) return r;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!b[i].is_zero()) r[i] += s * b[i];
  }
  return r;
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

std::size_t VectorHash::operator()(const Vector& v) const {
  std::size_t h = v.size();
  for (const auto& s : v) h ^= s.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, std::span<const Vector> cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, std::span<const Vector> rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  Vector r = zero_vector(field_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& m = (*this)(i, j);
      if (!m.is_zero()) r[i] += m * v[j];
    }
  }
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
      }
    }
  }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix r(a);
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix r(a);
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix r(m);
  for (auto& x : r.data_) x *= s;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

namespace {

Echelon reduce_rational(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const Field f = m.field();
  // Clear denominators row by row, then run the fraction-free forward pass.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = m(i, j).rational();
      a[i][j] = q.get_num() * (l / q.get_den());
    }
  }
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    // Rotate rather than swap so the remaining rows keep their input order.
    std::rotate(a.begin() + static_cast<std::ptrdiff_t>(r), a.begin() + static_cast<std::ptrdiff_t>(p),
                a.begin() + static_cast<std::ptrdiff_t>(p + 1));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<mpq_class>> q(r, std::vector<mpq_class>(cols));
  for (std::size_t i = 0; i < r; ++i) {
    const mpz_class piv = a[i][pivots[i]];
    for (std::size_t j = 0; j < cols; ++j) {
      q[i][j] = mpq_class(a[i][j], piv);
      q[i][j].canonicalize();
    }
  }
  for (std::size_t i = r; i-- > 0;) {
    for (std::size_t k = 0; k < i; ++k) {
      const mpq_class factor = q[k][pivots[i]];
      if (factor == 0) continue;
      for (std::size_t j = pivots[i]; j < cols; ++j) q[k][j] -= factor * q[i][j];
    }
  }
  Echelon e{Matrix(f, rows, cols), pivots};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < cols; ++j) e.reduced(i, j) = Scalar::from_mpq(q[i][j], f);
  }
  return e;
}

Echelon reduce_prime(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const Field f = m.field();
  const std::uint64_t p = f.characteristic();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).residue();
  }
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::rotate(a.begin() + static_cast<std::ptrdiff_t>(r), a.begin() + static_cast<std::ptrdiff_t>(piv),
                a.begin() + static_cast<std::ptrdiff_t>(piv + 1));
    const std::uint64_t s = inv(a[r][c]);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * s % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint64_t factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = (a[i][j] + (p - factor) * a[r][j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon e{Matrix(f, rows, cols), pivots};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < cols; ++j) e.reduced(i, j) = Scalar::from_int(static_cast<long>(a[i][j]), f);
  }
  return e;
}

}  // namespace

Echelon row_reduce(const Matrix& m) {
  return m.field().is_rational() ? reduce_rational(m) : reduce_prime(m);
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::vector<Vector> kernel(const Matrix& m) {
  const Echelon e = row_reduce(m);
  const Field f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(f, m.cols(), free);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) return std::nullopt;
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  const Echelon e = row_reduce(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  }
  return inv;
}

std::optional<Vector> solve_in_basis(std::span<const Vector> basis, const Vector& v) {
  const Field f = v.empty() ? Field::rationals() : v.front().field();
  const std::size_t k = basis.size();
  Matrix aug(f, v.size(), k + 1);
  for (std::size_t j = 0; j < k; ++j) aug.set_column(j, basis[j]);
  aug.set_column(k, v);
  const Echelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
  Vector c = zero_vector(f, k);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) c[e.pivots[i]] = e.reduced(i, k);
  return c;
}

Subspace::Subspace(Field f, std::size_t ambient_dim) : field_(f), n_(ambient_dim) {}

Subspace Subspace::span(Field f, std::size_t ambient_dim, std::span<const Vector> vectors) {
  Subspace s(f, ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Vector Subspace::reduce(const Vector& v) const {
  Vector r(v);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (!c.is_zero()) r = axpy(r, -c, rows_[i]);
  }
  return r;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const Vector& v) { return contains(v); });
}

bool Subspace::insert(const Vector& v) {
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < n_ && r[p].is_zero()) ++p;
  if (p == n_) return false;
  r = scale(r[p].inverse(), r);
  for (auto& row : rows_) {
    const Scalar c = row[p];
    if (!c.is_zero()) row = axpy(row, -c, r);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.n_ == b.n_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  // Solve sum x_i a_i = sum y_j b_j; the x-part of each kernel vector gives one
  // element of the intersection.
  const Field f = a.field();
  const std::size_t n = a.ambient_dim(), ka = a.dim(), kb = b.dim();
  Matrix m(f, n, ka + kb);
  for (std::size_t j = 0; j < ka; ++j) m.set_column(j, a.basis()[j]);
  for (std::size_t j = 0; j < kb; ++j) m.set_column(ka + j, scale(-Scalar::one(f), b.basis()[j]));
  Subspace out(f, n);
  for (const auto& k : kernel(m)) {
    Vector v = zero_vector(f, n);
    for (std::size_t j = 0; j < ka; ++j) v = axpy(v, k[j], a.basis()[j]);
    out.insert(v);
  }
  return out;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  Subspace out(a);
  for (const auto& v : b.basis()) out.insert(v);
  return out;
}

Polynomial::Polynomial(Field f, std::vector<Scalar> coeffs) : field_(f), coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::linear(const Scalar& root) {
  return Polynomial(root.field(), {-root, Scalar::one(root.field())});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Polynomial::eval(const Scalar& x) const {
  Scalar r = Scalar::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

Polynomial Polynomial::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d.push_back(Scalar::from_int(static_cast<long>(i), field_) * coeffs_[i]);
  }
  return Polynomial(field_, std::move(d));
}

Polynomial Polynomial::monic() const {
  if (coeffs_.empty()) return *this;
  const Scalar inv = leading().inverse();
  std::vector<Scalar> c(coeffs_);
  for (auto& x : c) x *= inv;
  return Polynomial(field_, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return Polynomial(a.field_);
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(a.field_, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return Polynomial(a.field_, std::move(c));
}

bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.coeffs_.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<Scalar> rem(coeffs_);
  const int dd = d.degree();
  std::vector<Scalar> quo(std::max(0, degree() - dd + 1), Scalar::zero(field_));
  const Scalar lead_inv = d.leading().inverse();
  for (int k = degree(); k >= dd; --k) {
    const Scalar c = rem[static_cast<std::size_t>(k)] * lead_inv;
    if (c.is_zero()) continue;
    quo[static_cast<std::size_t>(k - dd)] = c;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= c * d.coeffs_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(field_, std::move(quo)), Polynomial(field_, std::move(rem))};
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const bool unit = coeffs_[i].is_one();
    if (!unit || i == 0) out += coeffs_[i].to_string();
    if (i > 0) out += (unit ? "" : "*") + std::string("t") + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (b.degree() >= 0) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial minimal_polynomial(const Matrix& m) {
  const Field f = m.field();
  const std::size_t n = m.rows();
  auto flatten = [n](const Matrix& x) {
    Vector v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) v.push_back(x(i, j));
    }
    return v;
  };
  std::vector<Vector> powers;
  Matrix power = Matrix::identity(f, n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vector flat = flatten(power);
    if (auto c = solve_in_basis(powers, flat)) {
      std::vector<Scalar> coeffs;
      for (const auto& x : *c) coeffs.push_back(-x);
      coeffs.push_back(Scalar::one(f));
      return Polynomial(f, std::move(coeffs));
    }
    powers.push_back(std::move(flat));
    power = power * m;
  }
  throw Error(ErrorKind::TheoremViolation, "no minimal polynomial within degree n");
}

}  // namespace axial
