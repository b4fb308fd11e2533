#include "axial/algebra.hpp"

#include <set>

namespace axial {

Algebra::Algebra(Field f, std::vector<std::string> names, std::vector<std::vector<Vector>> table)
    : field_(f), names_(std::move(names)), table_(std::move(table)) {
  const std::size_t n = names_.size();
  if (n == 0) throw Error(ErrorKind::BadParameter, "algebra of dimension 0");
  if (table_.size() != n) throw Error(ErrorKind::BadParameter, "table has wrong number of rows");
  for (const auto& row : table_) {
    if (row.size() != n) throw Error(ErrorKind::BadParameter, "table row has wrong length");
    for (const auto& entry : row) {
      if (entry.size() != n) throw Error(ErrorKind::BadParameter, "table entry has wrong length");
      for (const auto& s : entry) {
        if (!(s.field() == f)) throw Error(ErrorKind::FieldMismatch, "table entry over another field");
      }
    }
  }
}

Vector Algebra::multiply(const Vector& u, const Vector& v) const {
  const std::size_t n = dim();
  Vector r = zero_vector(field_, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      const Scalar c = u[i] * v[j];
      const Vector& t = table_[i][j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!t[k].is_zero()) r[k] += c * t[k];
      }
    }
  }
  return r;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i + 1; j < dim(); ++j) {
      if (table_[i][j] != table_[j][i]) return false;
    }
  }
  return true;
}

std::string Algebra::format(const Vector& v) const {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].to_string();
    bool negative = c[0] == '-';
    if (negative) c.erase(0, 1);
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (c != "1") out += c + "*";
    out += names_[i];
  }
  return out.empty() ? "0" : out;
}

Element::Element(AlgebraPtr alg, Vector coords) : alg_(std::move(alg)), coords_(std::move(coords)) {
  if (coords_.size() != alg_->dim()) throw Error(ErrorKind::BadParameter, "coordinate length mismatch");
}

Element Element::zero(AlgebraPtr alg) {
  const auto n = alg->dim();
  const auto f = alg->field();
  return Element(std::move(alg), zero_vector(f, n));
}

Element Element::basis(AlgebraPtr alg, std::size_t i) {
  const auto n = alg->dim();
  const auto f = alg->field();
  return Element(std::move(alg), unit_vector(f, n, i));
}

void Element::require_same(const Element& o) const {
  if (alg_ != o.alg_) throw Error(ErrorKind::AlgebraMismatch, "elements of different algebras");
}

bool Element::is_idempotent() const { return alg_->multiply(coords_, coords_) == coords_; }

Element operator*(const Element& u, const Element& v) {
  u.require_same(v);
  return Element(u.alg_, u.alg_->multiply(u.coords_, v.coords_));
}

Element operator+(const Element& u, const Element& v) {
  u.require_same(v);
  return Element(u.alg_, add(u.coords_, v.coords_));
}

Element operator-(const Element& u, const Element& v) {
  u.require_same(v);
  return Element(u.alg_, sub(u.coords_, v.coords_));
}

Element operator*(const Scalar& s, const Element& u) { return Element(u.alg_, scale(s, u.coords_)); }

Element Element::operator-() const { return Element(alg_, scale(-Scalar::one(field()), coords_)); }

bool operator==(const Element& u, const Element& v) {
  u.require_same(v);
  return u.coords_ == v.coords_;
}

Matrix mult_matrix(const Algebra& alg, const Vector& a, Side side) {
  const std::size_t n = alg.dim();
  Matrix m(alg.field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector e = unit_vector(alg.field(), n, j);
    m.set_column(j, side == Side::Left ? alg.multiply(a, e) : alg.multiply(e, a));
  }
  return m;
}

Matrix mult_matrix(const Element& a, Side side) { return mult_matrix(*a.algebra(), a.coords(), side); }

Subspace subalgebra_closure(const Algebra& alg, std::span<const Vector> generators) {
  Subspace span = Subspace::span(alg.field(), alg.dim(), generators);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Vector> current = span.basis();
    for (const auto& u : current) {
      for (const auto& v : current) {
        grew |= span.insert(alg.multiply(u, v));
      }
    }
  }
  return span;
}

Subspace subalgebra_closure(std::span<const Element> generators) {
  if (generators.empty()) throw Error(ErrorKind::BadParameter, "empty generating set");
  std::vector<Vector> coords;
  for (const auto& g : generators) coords.push_back(g.coords());
  return subalgebra_closure(*generators.front().algebra(), coords);
}

FlexReport check_flexible(const Algebra& alg) {
  const std::size_t n = alg.dim();
  const Field f = alg.field();
  FlexReport report;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector x = unit_vector(f, n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector y = unit_vector(f, n, j);
      const Vector xy = alg.product(i, j), yx = alg.product(j, i);
      for (std::size_t k = i; k < n; ++k) {
        const Vector z = unit_vector(f, n, k);
        const Vector zy = alg.product(k, j), yz = alg.product(j, k);
        Vector d = add(alg.multiply(xy, z), alg.multiply(zy, x));
        d = sub(d, alg.multiply(x, yz));
        d = sub(d, alg.multiply(z, yx));
        if (!is_zero(d)) {
          report.flexible = false;
          report.violations.push_back({i, j, k, std::move(d)});
        }
      }
    }
  }
  return report;
}

Subspace annihilator(const Algebra& alg) {
  const std::size_t n = alg.dim();
  const Field f = alg.field();
  // Rows of the stacked system: (basis_i y)_k and (y basis_i)_k as linear forms in y.
  Matrix m(f, 2 * n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        m(i * n + k, j) = alg.product(i, j)[k];
        m(n * n + i * n + k, j) = alg.product(j, i)[k];
      }
    }
  }
  const auto ker = kernel(m);
  return Subspace::span(f, n, ker);
}

Subspace generated_ideal(const Algebra& alg, std::span<const Vector> seeds) {
  const std::size_t n = alg.dim();
  const Field f = alg.field();
  Subspace ideal = Subspace::span(f, n, seeds);
  std::vector<Vector> frontier = ideal.basis();
  while (!frontier.empty()) {
    std::vector<Vector> next;
    for (const auto& v : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        const Vector e = unit_vector(f, n, i);
        for (Vector w : {alg.multiply(e, v), alg.multiply(v, e)}) {
          if (ideal.insert(w)) next.push_back(std::move(w));
        }
      }
    }
    frontier = std::move(next);
  }
  return ideal;
}

bool is_ideal(const Algebra& alg, const Subspace& s) {
  const std::size_t n = alg.dim();
  for (const auto& v : s.basis()) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vector e = unit_vector(alg.field(), n, i);
      if (!s.contains(alg.multiply(e, v)) || !s.contains(alg.multiply(v, e))) return false;
    }
  }
  return true;
}

Quotient ideal_and_quotient(const AlgebraPtr& alg, std::span<const Vector> seeds) {
  const std::size_t n = alg->dim();
  const Field f = alg->field();
  Subspace ideal = generated_ideal(*alg, seeds);
  // Extend the ideal by ambient basis vectors, in order, to a full basis.
  Subspace grow(ideal);
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < n; ++i) {
    if (grow.insert(unit_vector(f, n, i))) complement.push_back(i);
  }
  const std::size_t q = complement.size();
  // Coordinates of v in the basis (complement vectors, ideal basis); the first
  // q entries are the image in the quotient.
  std::vector<Vector> full;
  for (auto i : complement) full.push_back(unit_vector(f, n, i));
  for (const auto& v : ideal.basis()) full.push_back(v);
  const Matrix change = *inverse(Matrix::from_columns(f, n, full));
  Matrix projection(f, q, n);
  for (std::size_t r = 0; r < q; ++r) {
    for (std::size_t c = 0; c < n; ++c) projection(r, c) = change(r, c);
  }
  std::vector<std::string> names;
  std::vector<std::vector<Vector>> table(q, std::vector<Vector>(q));
  for (std::size_t r = 0; r < q; ++r) {
    names.push_back(alg->names()[complement[r]] + "'");
    for (std::size_t c = 0; c < q; ++c) {
      table[r][c] = projection.apply(alg->product(complement[r], complement[c]));
    }
  }
  AlgebraPtr quotient;
  if (q > 0) quotient = std::make_shared<Algebra>(f, std::move(names), std::move(table));
  return Quotient{std::move(ideal), std::move(quotient), std::move(complement), std::move(projection)};
}

Vector Product::embed(std::size_t factor, const Vector& v) const {
  Vector r = zero_vector(algebra->field(), algebra->dim());
  for (std::size_t i = 0; i < v.size(); ++i) r[offsets[factor] + i] = v[i];
  return r;
}

Product direct_product(std::span<const AlgebraPtr> factors) {
  if (factors.empty()) throw Error(ErrorKind::BadParameter, "empty product");
  const Field f = factors.front()->field();
  std::size_t n = 0;
  std::vector<std::size_t> offsets;
  for (const auto& a : factors) {
    if (!(a->field() == f)) throw Error(ErrorKind::FieldMismatch, "factors over different fields");
    offsets.push_back(n);
    n += a->dim();
  }
  std::vector<std::string> raw;
  for (const auto& a : factors) raw.insert(raw.end(), a->names().begin(), a->names().end());
  const bool collide = std::set<std::string>(raw.begin(), raw.end()).size() != raw.size();
  std::vector<std::string> names;
  std::vector<std::vector<Vector>> table(n, std::vector<Vector>(n, zero_vector(f, n)));
  for (std::size_t t = 0; t < factors.size(); ++t) {
    const auto& a = *factors[t];
    const std::size_t off = offsets[t];
    for (std::size_t i = 0; i < a.dim(); ++i) {
      names.push_back(collide ? a.names()[i] + std::to_string(t + 1) : a.names()[i]);
      for (std::size_t j = 0; j < a.dim(); ++j) {
        for (std::size_t k = 0; k < a.dim(); ++k) table[off + i][off + j][off + k] = a.product(i, j)[k];
      }
    }
  }
  return Product{std::make_shared<Algebra>(f, std::move(names), std::move(table)), std::move(offsets)};
}

AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b) {
  const AlgebraPtr both[] = {a, b};
  return direct_product(both).algebra;
}

Vector Subalgebra::to_ambient(const Vector& local) const {
  Vector r = zero_vector(ambient->field(), ambient->dim());
  for (std::size_t i = 0; i < basis.size(); ++i) r = axpy(r, local[i], basis[i]);
  return r;
}

std::optional<Vector> Subalgebra::to_local(const Vector& ambient_coords) const {
  return solve_in_basis(basis, ambient_coords);
}

Subalgebra make_subalgebra(const AlgebraPtr& ambient, std::vector<Vector> basis, std::vector<std::string> names) {
  const std::size_t k = basis.size();
  if (k == 0) throw Error(ErrorKind::BadParameter, "empty subalgebra basis");
  if (names.empty()) {
    for (std::size_t i = 0; i < k; ++i) names.push_back("v" + std::to_string(i + 1));
  }
  Subalgebra sub{ambient, nullptr, std::move(basis)};
  if (Subspace::span(ambient->field(), ambient->dim(), sub.basis).dim() != k) {
    throw Error(ErrorKind::BadParameter, "subalgebra basis is linearly dependent");
  }
  std::vector<std::vector<Vector>> table(k, std::vector<Vector>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      auto local = sub.to_local(ambient->multiply(sub.basis[i], sub.basis[j]));
      if (!local) throw Error(ErrorKind::BadParameter, "span is not closed under multiplication");
      table[i][j] = std::move(*local);
    }
  }
  sub.algebra = std::make_shared<Algebra>(ambient->field(), std::move(names), std::move(table));
  return sub;
}

std::optional<Vector> unit_element(const Algebra& alg) {
  const std::size_t n = alg.dim();
  const Field f = alg.field();
  // u basis_j = basis_j and basis_j u = basis_j, linear in u.
  Matrix m(f, 2 * n * n, n);
  Vector rhs = zero_vector(f, 2 * n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        m(j * n + k, i) = alg.product(i, j)[k];
        m(n * n + j * n + k, i) = alg.product(j, i)[k];
      }
      if (j == k) {
        rhs[j * n + k] = Scalar::one(f);
        rhs[n * n + j * n + k] = Scalar::one(f);
      }
    }
  }
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(m.column(i));
  return solve_in_basis(cols, rhs);
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.to_string(); }

}  // namespace axial
