#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "axial/axial_analysis.hpp"

namespace axial {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

  // Groups in order of their smallest member.
  std::vector<std::vector<std::size_t>> groups() {
    std::map<std::size_t, std::size_t> slot;
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      auto [it, fresh] = slot.emplace(find(i), out.size());
      if (fresh) out.emplace_back();
      out[it->second].push_back(i);
    }
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

std::vector<std::vector<std::size_t>> group(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  DisjointSets ds(n);
  for (auto [i, j] : edges) ds.unite(i, j);
  return ds.groups();
}

std::vector<Vector> coords_of(const std::vector<Element>& xs, const std::vector<std::size_t>& idx) {
  std::vector<Vector> out;
  for (auto i : idx) out.push_back(xs[i].coords());
  return out;
}

bool products_vanish(const Algebra& alg, const std::vector<Vector>& us, const std::vector<Vector>& vs) {
  for (const auto& u : us) {
    for (const auto& v : vs) {
      if (!is_zero(alg.multiply(u, v)) || !is_zero(alg.multiply(v, u))) return false;
    }
  }
  return true;
}

bool products_inside(const Algebra& alg, const std::vector<Vector>& us, const std::vector<Vector>& vs,
                     const Subspace& target) {
  for (const auto& u : us) {
    for (const auto& v : vs) {
      if (!target.contains(alg.multiply(u, v)) || !target.contains(alg.multiply(v, u))) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::size_t>> AxialGraph::components() const { return group(vertices.size(), edges); }

std::vector<std::vector<std::size_t>> AxialGraph::strong_components() const {
  if (!strong_computed) throw Error(ErrorKind::BadParameter, "strong edges were not computed");
  return group(vertices.size(), strong_edges);
}

std::optional<std::size_t> AxialGraph::distance(std::size_t from, std::size_t to) const {
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (auto [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<std::size_t> dist(vertices.size(), SIZE_MAX);
  std::deque<std::size_t> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (v == to) return dist[v];
    for (auto w : adj[v]) {
      if (dist[w] == SIZE_MAX) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

std::string AxialGraph::to_dot() const {
  std::string out = "graph axial {\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out += "  v" + std::to_string(i) + " [label=\"" + labels[i] + "\"];\n";
  }
  for (auto e : edges) {
    const bool strong = std::find(strong_edges.begin(), strong_edges.end(), e) != strong_edges.end();
    out += "  v" + std::to_string(e.first) + " -- v" + std::to_string(e.second) +
           (strong ? " [style=bold];\n" : ";\n");
  }
  return out + "}\n";
}

AxialGraph build_axial_graph(std::span<const Element> axes, bool with_strong, std::vector<std::string> labels) {
  AxialGraph g;
  g.vertices.assign(axes.begin(), axes.end());
  if (labels.empty()) {
    for (const auto& x : axes) labels.push_back(x.to_string());
  }
  g.labels = std::move(labels);
  g.strong_computed = with_strong;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const Algebra& alg = *axes[i].algebra();
    for (std::size_t j = i + 1; j < axes.size(); ++j) {
      const bool ij = !is_zero(alg.multiply(axes[i].coords(), axes[j].coords()));
      const bool ji = !is_zero(alg.multiply(axes[j].coords(), axes[i].coords()));
      if (ij != ji) g.asymmetric.emplace_back(i, j);
      if (!ij && !ji) continue;
      g.edges.emplace_back(i, j);
      if (with_strong) {
        const Vector pair[] = {axes[i].coords(), axes[j].coords()};
        if (subalgebra_closure(alg, pair).dim() == 3) g.strong_edges.emplace_back(i, j);
      }
    }
  }
  return g;
}

std::string TypeClass::to_string() const {
  if (degenerate) return "degenerate";
  const std::string l = lambda->to_string(), d = delta->to_string();
  if (noncommutative) return "{(" + l + ", " + d + "), (" + d + ", " + l + ")}";
  return mixed ? "{" + l + ", " + d + "}" : "{" + l + "}";
}

TypeClass uniformity_check(std::span<const AxisReport> component) {
  TypeClass tc;
  const AxisReport* first = nullptr;
  for (const auto& r : component) {
    if (!r.type.degenerate()) {
      first = &r;
      break;
    }
  }
  if (!first) {
    tc.degenerate = true;
    return tc;
  }
  const Scalar l0 = *first->lambda(), d0 = *first->delta();
  const Scalar one = Scalar::one(l0.field());
  tc.noncommutative = !(l0 == d0);
  tc.lambda = l0;
  tc.delta = tc.noncommutative ? d0 : one - l0;
  for (const auto& r : component) {
    if (r.type.degenerate()) continue;
    const Scalar l = *r.lambda(), d = *r.delta();
    bool ok;
    if (tc.noncommutative) {
      ok = (l == l0 && d == d0) || (l == d0 && d == l0);
    } else {
      ok = l == d && (l == l0 || l == one - l0);
    }
    if (!ok) {
      throw Error(ErrorKind::MixedComponent, r.idempotent.to_string() + " of type " + r.type_string() +
                                                 " shares a component with type " + first->type_string());
    }
    if (!(l == l0)) tc.mixed = true;
  }
  return tc;
}

DecompositionReport axial_decomposition(std::span<const AxisReport> generators, ClosureOptions opts) {
  DecompositionReport rep{closure(generators, opts), {}, Subspace(Field::rationals(), 0), false, {}, false,
                          false, {}, false, false};
  const AlgebraPtr alg = generators.front().algebra();
  const Field f = alg->field();
  const std::size_t n = alg->dim();
  std::vector<Vector> gens;
  for (const auto& g : generators) gens.push_back(g.idempotent.coords());
  rep.generated = subalgebra_closure(*alg, gens);
  rep.spans_ambient = rep.generated.dim() == n;
  rep.graph = build_axial_graph(rep.closure.axes, false);

  for (const auto& idx : rep.graph.components()) {
    std::vector<AxisReport> origin_reports;
    for (auto i : idx) origin_reports.push_back(generators[rep.closure.origin[i]]);
    const std::vector<Vector> cs = coords_of(rep.closure.axes, idx);
    ComponentReport comp{idx, uniformity_check(origin_reports), subalgebra_closure(*alg, cs), std::nullopt};

    if (comp.type.noncommutative) {
      ZData z{{}, {}, Subspace(f, n)};
      for (std::size_t k = 0; k < idx.size(); ++k) {
        const bool prime = *origin_reports[k].lambda() == *comp.type.lambda;
        (prime ? z.x_prime : z.x_second).push_back(cs[k]);
      }
      for (const auto& u : z.x_prime) {
        for (const auto& v : z.x_second) z.z.insert(alg->multiply(u, v));
      }
      const auto& zb = z.z.basis();
      z.is_ideal = products_inside(*alg, zb, rep.generated.basis(), z.z);
      z.square_zero = products_vanish(*alg, zb, zb);
      const Subspace a1 = sum(subalgebra_closure(*alg, z.x_prime), z.z);
      const Subspace a2 = z.x_second.empty() ? z.z : sum(subalgebra_closure(*alg, z.x_second), z.z);
      z.quotient_splits = sum(a1, a2) == comp.subalgebra && intersect(a1, a2) == z.z &&
                          products_inside(*alg, a1.basis(), a2.basis(), z.z);
      const Subalgebra sub = make_subalgebra(alg, comp.subalgebra.basis());
      z.annihilator_trivial = annihilator(*sub.algebra).dim() == 0;
      comp.z = std::move(z);
    }
    rep.components.push_back(std::move(comp));
  }

  const std::size_t k = rep.components.size();
  rep.pairwise_products_zero = true;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      rep.pairwise_products_zero &= products_vanish(*alg, rep.components[i].subalgebra.basis(),
                                                    rep.components[j].subalgebra.basis());
    }
  }
  Subspace total(f, n);
  for (const auto& c : rep.components) total = sum(total, c.subalgebra);
  rep.sum_is_generated = total == rep.generated;
  rep.intersections_annihilating = true;
  rep.direct = true;
  for (std::size_t j = 0; j < k; ++j) {
    Subspace others(f, n);
    for (std::size_t i = 0; i < k; ++i) {
      if (i != j) others = sum(others, rep.components[i].subalgebra);
    }
    Subspace nj = intersect(rep.components[j].subalgebra, others);
    rep.intersections_annihilating &= products_vanish(*alg, nj.basis(), rep.generated.basis());
    rep.direct &= nj.dim() == 0;
    rep.intersections.push_back(std::move(nj));
  }
  return rep;
}

NeighborCheck neighbor_lemma_check(const AxisReport& a, const AxisReport& b) {
  NeighborCheck out;
  const Algebra& alg = *a.algebra();
  const Vector& bv = b.idempotent.coords();
  const Vector bt = miyamoto(a).apply(bv);
  if (bt == bv || !is_zero(alg.multiply(bv, bt))) return out;
  out.applies = true;
  const ElementDecomposition d = decompose_wrt(bv, a);
  const Scalar two = Scalar::from_int(2, alg.field());
  const Vector u = scale(two, add(scale(d.alpha, a.idempotent.coords()), d.zero_part));
  out.unit = u;
  const Vector pair[] = {a.idempotent.coords(), bv};
  const Subspace generated = subalgebra_closure(alg, pair);
  for (const auto& v : generated.basis()) {
    out.holds &= alg.multiply(u, v) == v && alg.multiply(v, u) == v;
  }
  return out;
}

bool strong_components_span(std::span<const Element> axes) {
  if (axes.empty()) return true;
  const Algebra& alg = *axes.front().algebra();
  const AxialGraph g = build_axial_graph(axes, true);
  std::vector<Vector> all;
  for (const auto& x : axes) all.push_back(x.coords());
  Subspace total(alg.field(), alg.dim());
  for (const auto& comp : g.strong_components()) total = sum(total, subalgebra_closure(alg, coords_of(g.vertices, comp)));
  return total == subalgebra_closure(alg, all);
}

}  // namespace axial
