// Command-line front end. Every verdict printed here comes from a library call;
// this file only chooses the generators, formats reports and maps outcomes to
// exit codes (0 verified, 1 violation with witness, 2 input error).

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "axial/error.hpp"
#include "axial/frobenius.hpp"
#include "axial/io.hpp"
#include "axial/models.hpp"

using namespace axial;
using json = nlohmann::ordered_json;

namespace {

struct Violation {
  std::string what;
};

struct InputError {
  std::string what;
};

/// Text lines and a JSON document built side by side.
struct Report {
  json doc = json::object();
  std::vector<std::string> lines;

  void line(std::string s) { lines.push_back(std::move(s)); }
};

struct Options {
  std::string file;
  std::string out;
  bool json_out = false;
  std::size_t max_depth = ClosureOptions{}.max_depth;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InputError{"cannot write " + o.out};
  f << text;
}

std::string render(const Options& o, const Report& r) {
  if (o.json_out) return r.doc.dump(2) + "\n";
  std::string s;
  for (const auto& l : r.lines) s += l + "\n";
  return s;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

json vec_json(const Algebra& alg, const Vector& v) { return alg.format(v); }

std::string why_not_axis(const AxisReport& r) {
  if (!r.is_idempotent) return "not idempotent";
  if (!r.eigenvalues_ok) return "multiplication maps have an eigenvalue pattern outside {0, 1, lambda}";
  if (!r.lr_commute) return "left and right multiplications do not commute";
  if (!r.semisimple_left || !r.semisimple_right) return "multiplication is not semisimple";
  if (!r.primitive_left || !r.primitive_right) return "not primitive";
  if (!r.jordan_condition) return "Jordan condition fails";
  if (!r.fusion_ok) return "fusion rules fail: " + r.fusion_witness;
  return "";
}

/// Idempotent basis vectors other than the unit, analyzed.
std::vector<AxisReport> basis_axes(const AlgebraPtr& alg) {
  const auto unit = unit_element(*alg);
  std::vector<AxisReport> out;
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    const Element e = Element::basis(alg, i);
    if (!e.is_idempotent() || (unit && e.coords() == *unit)) continue;
    out.push_back(analyze_axis(e));
  }
  return out;
}

void require_jordan_axes(const std::vector<AxisReport>& axes, Report& r) {
  json arr = json::array();
  for (const auto& a : axes) {
    json j;
    j["axis"] = a.idempotent.to_string();
    j["type"] = a.is_axis() ? a.type_string() : "none";
    j["jordan_axis"] = a.is_jordan_axis();
    arr.push_back(j);
  }
  r.doc["basis_axes"] = arr;
  std::vector<std::string> names;
  for (const auto& a : axes) names.push_back(a.idempotent.to_string() + " (type " + a.type_string() + ")");
  r.line("basis axes: " + (names.empty() ? std::string("none") : join(names, ", ")));
  for (const auto& a : axes) {
    if (!a.is_jordan_axis()) throw Violation{"basis idempotent " + a.idempotent.to_string() + ": " + why_not_axis(a)};
  }
}

void describe_algebra(const Algebra& alg, Report& r) {
  r.doc["field"] = alg.field().to_string();
  r.doc["dim"] = alg.dim();
  r.doc["basis"] = alg.names();
  r.line("algebra: dimension " + std::to_string(alg.dim()) + " over " + alg.field().to_string() + ", basis " +
         join(alg.names(), " "));
}

void report_flexible(const Algebra& alg, Report& r) {
  const FlexReport fr = check_flexible(alg);
  r.doc["flexible"] = fr.flexible;
  r.line(std::string("flexible: ") + (fr.flexible ? "yes" : "no"));
  if (!fr.flexible) {
    const auto& v = fr.violations.front();
    const auto& nm = alg.names();
    throw Violation{"flexible law fails on (" + nm[v.i] + ", " + nm[v.j] + ", " + nm[v.k] +
                    "): (xy)z + (zy)x - x(yz) - z(yx) = " + alg.format(v.defect)};
  }
}

DecompositionReport report_decomposition(const std::vector<AxisReport>& gens, const Options& o, Report& r) {
  DecompositionReport d = [&] {
    try {
      return axial_decomposition(gens, ClosureOptions{o.max_depth, ClosureOptions{}.max_axes});
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::MixedComponent) throw Violation{e.what()};
      throw;
    }
  }();
  const Algebra& alg = *gens.front().algebra();
  const auto& cl = d.closure;
  json c;
  c["axes"] = cl.axes.size();
  c["depth"] = cl.depth_reached;
  c["truncated"] = cl.truncated;
  c["span_dim"] = cl.span.dim();
  c["spans_algebra"] = d.spans_ambient;
  r.doc["closure"] = c;
  r.line("closure: " + std::to_string(cl.axes.size()) + " axes, depth " + std::to_string(cl.depth_reached) +
         (cl.truncated ? " (truncated)" : "") + ", span " + std::to_string(cl.span.dim()) + " of " +
         std::to_string(alg.dim()));
  json comps = json::array();
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const auto& comp = d.components[i];
    json j;
    j["type"] = comp.type.to_string();
    j["axes"] = comp.axes.size();
    j["subalgebra_dim"] = comp.subalgebra.dim();
    std::string zline;
    if (comp.z) {
      json z;
      z["dim"] = comp.z->z.dim();
      z["ideal"] = comp.z->is_ideal;
      z["square_zero"] = comp.z->square_zero;
      z["quotient_splits"] = comp.z->quotient_splits;
      z["annihilator_trivial"] = comp.z->annihilator_trivial;
      j["Z"] = z;
      zline = ", Z of dimension " + std::to_string(comp.z->z.dim());
      if (!comp.z->is_ideal || !comp.z->square_zero || !comp.z->quotient_splits || !comp.z->annihilator_trivial) {
        throw Violation{"component " + std::to_string(i) + ": Z fails (ideal " + std::to_string(comp.z->is_ideal) +
                        ", Z^2 = 0 " + std::to_string(comp.z->square_zero) + ", split " +
                        std::to_string(comp.z->quotient_splits) + ", annihilator trivial " +
                        std::to_string(comp.z->annihilator_trivial) + ")"};
      }
    }
    comps.push_back(j);
    r.line("component " + std::to_string(i) + ": type " + comp.type.to_string() + ", " +
           std::to_string(comp.axes.size()) + " axes, subalgebra dimension " +
           std::to_string(comp.subalgebra.dim()) + zline);
  }
  r.doc["components"] = comps;
  r.doc["direct"] = d.direct;
  r.line(std::string("direct sum of components: ") + (d.direct ? "yes" : "no"));
  if (!d.graph.asymmetric.empty()) {
    const auto [i, j] = d.graph.asymmetric.front();
    throw Violation{"axes " + cl.axes[i].to_string() + " and " + cl.axes[j].to_string() +
                    " have one product zero and the other nonzero"};
  }
  if (!d.pairwise_products_zero) throw Violation{"two components have a nonzero product"};
  if (!d.sum_is_generated) throw Violation{"the component subalgebras do not sum to <<X>>"};
  if (!d.intersections_annihilating) throw Violation{"a component meets the others outside the annihilator"};
  return d;
}

void report_frobenius(const DecompositionReport& d, const std::vector<AxisReport>& gens, Report& r) {
  FrobeniusForm form = [&] {
    try {
      return build_form(choose_Xprime(d));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SymmetryFailure || e.kind() == ErrorKind::AssociativityFailure ||
          e.kind() == ErrorKind::TheoremViolation) {
        throw Violation{e.what()};
      }
      throw;
    }
  }();
  const Algebra& alg = *form.selection.algebra;
  json fj;
  json cases = json::array();
  std::vector<std::string> cs;
  for (const auto& c : form.selection.components) {
    std::string s(to_string(c.kind));
    if (c.nu) s += " (nu = " + c.nu->to_string() + ")";
    cases.push_back(s);
    cs.push_back(s);
  }
  fj["cases"] = cases;
  json gram = json::array();
  for (std::size_t i = 0; i < form.gram.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < form.gram.cols(); ++j) row.push_back(form.gram(i, j).to_string());
    gram.push_back(row);
  }
  json xb = json::array();
  for (auto i : form.selection.basis) xb.push_back(form.selection.axes[i].idempotent.to_string());
  fj["basis"] = xb;
  fj["gram"] = gram;
  json rad = json::array();
  for (const auto& v : form.radical_basis) rad.push_back(vec_json(alg, v));
  fj["radical"] = rad;
  fj["warnings"] = form.selection.warnings;
  r.line("Frobenius form: " + join(cs, "; ") + ", radical dimension " + std::to_string(form.radical_basis.size()));
  for (const auto& w : form.selection.warnings) r.line("  warning: " + w);
  for (std::size_t i = 0; i < form.gram.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < form.gram.cols(); ++j) row.push_back(form.gram(i, j).to_string());
    r.line("  gram " + xb[i].get<std::string>() + ": " + join(row, " "));
  }
  if (!form.radical_basis.empty()) {
    std::vector<std::string> rs;
    for (const auto& v : form.radical_basis) rs.push_back(alg.format(v));
    r.line("  radical: " + join(rs, ", "));
  }

  json a0 = json::array();
  for (const auto& g : gens) {
    const A0Report rep = [&] {
      try {
        return check_A0_closed(g, form);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::TheoremViolation) throw Violation{e.what()};
        throw;
      }
    }();
    const bool exc = rep.verdict == A0Verdict::ExceptionalCase;
    json j;
    j["axis"] = g.idempotent.to_string();
    j["verdict"] = exc ? "ExceptionalCase" : "Closed";
    j["norm"] = rep.norm.to_string();
    j["in_radical"] = rep.in_radical;
    j["A0_closed"] = rep.a0_closed;
    a0.push_back(j);
    r.line("  A_0(" + g.idempotent.to_string() + "): " +
           (exc ? "exceptional (type -1 next to type 2; norm 0, in radical)" : std::string("closed")) +
           ", norm " + rep.norm.to_string());
  }
  fj["A0"] = a0;
  r.doc["frobenius"] = fj;
}

struct IdempotentResult {
  std::optional<std::vector<Element>> brute;
  std::optional<IdempotentFamily> family;
  std::string note;
};

IdempotentResult report_idempotents(const AlgebraPtr& alg, const std::vector<AxisReport>& gens, Report& r) {
  IdempotentResult res;
  json ij;
  if (gens.size() == 2) {
    const TwoGenReport tg = [&] {
      try {
        return classify_2gen(gens[0].idempotent, gens[1].idempotent);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotAPaj || e.kind() == ErrorKind::TheoremViolation) throw Violation{e.what()};
        throw;
      }
    }();
    if (tg.dim() == alg->dim()) {
      res.family = enumerate_idempotents_2gen(tg);
      ij["case"] = std::string(to_string(tg.kind));
      r.line("two-generated case: " + std::string(to_string(tg.kind)));
    }
  }
  if (!alg->field().is_rational()) {
    try {
      res.brute = brute_force_idempotents(alg);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooLarge) throw;
      res.note = "brute force skipped: field too large for dimension " + std::to_string(alg->dim());
    }
  }
  if (res.brute) {
    ij["count"] = res.brute->size();
    r.line("idempotents: " + std::to_string(res.brute->size()) + " (exhaustive search)");
    const TheoremAxesResult th = verify_theorem_axes(alg);
    ij["nontrivial_are_axes"] = th.holds;
    if (!th.holds) {
      throw Violation{"idempotent " + th.counterexamples.front().to_string() + " is not a primitive Jordan axis"};
    }
    r.line("  every idempotent other than 0 and the unit is a primitive axis");
  }
  if (res.family) {
    if (res.brute) {
      const auto formula = res.family->all();
      std::set<std::string> a, b;
      for (const auto& e : formula) a.insert(e.to_string());
      for (const auto& e : *res.brute) b.insert(e.to_string());
      ij["formula_matches_search"] = a == b;
      if (a != b) {
        throw Violation{"closed-form list has " + std::to_string(a.size()) + " idempotents, search found " +
                        std::to_string(b.size())};
      }
      r.line("  closed-form list agrees with the search");
    } else if (res.family->finite()) {
      ij["count"] = res.family->all().size();
      r.line("idempotents: " + std::to_string(res.family->all().size()) + " (closed form)");
    } else {
      json fam = json::array();
      for (const auto& c : res.family->curves) fam.push_back(c.description);
      if (res.family->sqrt_family) fam.push_back("alpha a + (1 - alpha)(1 - a) + rho b_lambda, rho^2 nu_b = alpha(1 - alpha)");
      ij["count"] = "infinite";
      ij["families"] = fam;
      r.line("idempotents: infinitely many (closed form); " + std::to_string(res.family->members.size()) +
             " isolated, " + std::to_string(fam.size()) + " one-parameter families");
    }
  }
  if (!res.note.empty()) {
    ij["note"] = res.note;
    r.line(res.note);
  }
  if (!res.brute && !res.family) {
    res.note = "no exhaustive search over Q and no closed form for this generating set";
    ij["note"] = res.note;
    r.line("idempotents: " + res.note);
  }
  r.doc["idempotents"] = ij;
  return res;
}

int run_make(const std::string& kind, const std::string& field, std::size_t n, const std::string& lambda,
             const std::string& phi, const Options& o) {
  ModelSpec spec{parse_model_kind(kind), Field::parse(field), n, std::nullopt, std::nullopt};
  if (!lambda.empty()) spec.lambda = Scalar::parse(lambda, spec.field);
  if (!phi.empty()) spec.phi = Scalar::parse(phi, spec.field);
  emit(o, serialize_algebra(*make_model(spec)));
  return 0;
}

int run_analyze(const Options& o, bool idempotents) {
  const AlgebraPtr alg = load_algebra(o.file);
  Report r;
  describe_algebra(*alg, r);
  std::string summary;
  try {
    report_flexible(*alg, r);
    const auto gens = basis_axes(alg);
    require_jordan_axes(gens, r);
    std::string frob = "Frobenius skipped (no axes)";
    if (!gens.empty()) {
      const auto d = report_decomposition(gens, o, r);
      if (d.spans_ambient) {
        report_frobenius(d, gens, r);
        frob = "Frobenius OK";
      } else {
        frob = "Frobenius skipped (axes do not span)";
        r.line("Frobenius form: skipped, the closure spans " + std::to_string(d.closure.span.dim()) + " of " +
               std::to_string(alg->dim()) + " dimensions");
      }
    }
    if (idempotents) report_idempotents(alg, gens, r);
    summary = (gens.empty() ? std::string("no basis axes") : "all " + std::to_string(gens.size()) +
                                                                  " basis axes verified") +
              "; flexible; " + frob;
  } catch (const Violation& v) {
    r.doc["violation"] = v.what;
    r.line("VIOLATION: " + v.what);
    emit(o, render(o, r));
    return 1;
  }
  r.doc["summary"] = summary;
  r.line(summary);
  emit(o, render(o, r));
  return 0;
}

int run_idempotents(const Options& o) {
  const AlgebraPtr alg = load_algebra(o.file);
  Report r;
  describe_algebra(*alg, r);
  try {
    const auto gens = basis_axes(alg);
    const auto res = report_idempotents(alg, gens, r);
    std::vector<Element> listed;
    if (res.brute) {
      listed = *res.brute;
    } else if (res.family && res.family->finite()) {
      listed = res.family->all();
    } else if (res.family) {
      listed = res.family->members;
      for (const auto& c : res.family->curves) r.line("  family: " + c.description);
      if (res.family->sqrt_family) r.line("  family: alpha a + (1 - alpha)(1 - a) + rho b_lambda, rho^2 nu_b = alpha(1 - alpha)");
    }
    json arr = json::array();
    for (const auto& e : listed) {
      arr.push_back(e.to_string());
      r.line("  " + e.to_string());
    }
    r.doc["idempotents"]["list"] = arr;
  } catch (const Violation& v) {
    r.doc["violation"] = v.what;
    r.line("VIOLATION: " + v.what);
    emit(o, render(o, r));
    return 1;
  }
  emit(o, render(o, r));
  return 0;
}

template <typename F>
int with_axes(const Options& o, F&& body) {
  const AlgebraPtr alg = load_algebra(o.file);
  Report r;
  describe_algebra(*alg, r);
  try {
    const auto gens = basis_axes(alg);
    require_jordan_axes(gens, r);
    if (gens.empty()) throw InputError{"the basis contains no axes to generate from"};
    body(alg, gens, r);
  } catch (const Violation& v) {
    r.doc["violation"] = v.what;
    r.line("VIOLATION: " + v.what);
    emit(o, render(o, r));
    return 1;
  }
  emit(o, render(o, r));
  return 0;
}

bool is_input_error(ErrorKind k) {
  return k == ErrorKind::ParseError || k == ErrorKind::IOFailure || k == ErrorKind::BadParameter ||
         k == ErrorKind::FieldMismatch || k == ErrorKind::DivisionByZero || k == ErrorKind::TooLarge;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in axial algebras of Jordan type"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub, bool file) {
    if (file) sub->add_option("file", o.file, "algebra file (JSON)")->required();
    sub->add_option("--out", o.out, "write output to this file");
  };

  std::string kind, field = "Q", lambda, phi;
  std::size_t n = 2;
  auto* make = app.add_subcommand("make", "write a model algebra as JSON");
  make->add_option("kind", kind, "U, Uprime, exc3, B or FxF")->required();
  make->add_option("--field", field, "Q or Fp:<p>");
  make->add_option("--n", n, "number of axes for U and Uprime");
  make->add_option("--lambda", lambda, "type parameter");
  make->add_option("--phi", phi, "second parameter of B");
  add_common(make, false);

  bool idem = false;
  auto* analyze = app.add_subcommand("analyze", "check the axes, flexibility, decomposition and form");
  add_common(analyze, true);
  analyze->add_flag("--idempotents", idem, "also enumerate idempotents");
  analyze->add_flag("--json", o.json_out, "JSON output");
  analyze->add_option("--max-depth", o.max_depth, "closure depth cap");

  auto* idempotents = app.add_subcommand("idempotents", "list the idempotents");
  add_common(idempotents, true);
  idempotents->add_flag("--json", o.json_out, "JSON output");

  auto* decompose = app.add_subcommand("decompose", "components of the axis closure");
  add_common(decompose, true);
  decompose->add_flag("--json", o.json_out, "JSON output");
  decompose->add_option("--max-depth", o.max_depth, "closure depth cap");

  auto* frobenius = app.add_subcommand("frobenius", "Frobenius form, radical and A_0 verdicts");
  add_common(frobenius, true);
  frobenius->add_flag("--json", o.json_out, "JSON output");
  frobenius->add_option("--max-depth", o.max_depth, "closure depth cap");

  auto* graph = app.add_subcommand("graph", "axial graph of the closure in DOT");
  add_common(graph, true);
  graph->add_option("--max-depth", o.max_depth, "closure depth cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*make) return run_make(kind, field, n, lambda, phi, o);
    if (*analyze) return run_analyze(o, idem);
    if (*idempotents) return run_idempotents(o);
    if (*decompose) {
      return with_axes(o, [&](const AlgebraPtr&, const std::vector<AxisReport>& gens, Report& r) {
        report_decomposition(gens, o, r);
      });
    }
    if (*frobenius) {
      return with_axes(o, [&](const AlgebraPtr& alg, const std::vector<AxisReport>& gens, Report& r) {
        const auto d = report_decomposition(gens, o, r);
        if (!d.spans_ambient) {
          throw InputError{"the basis axes span " + std::to_string(d.closure.span.dim()) + " of " +
                           std::to_string(alg->dim()) + " dimensions; no form on the whole algebra"};
        }
        report_frobenius(d, gens, r);
      });
    }
    if (*graph) {
      return with_axes(o, [&](const AlgebraPtr&, const std::vector<AxisReport>& gens, Report& r) {
        const auto d = axial_decomposition(gens, ClosureOptions{o.max_depth, ClosureOptions{}.max_axes});
        r.lines = {d.graph.to_dot()};
        r.lines.back().pop_back();
      });
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.kind()) ? 2 : 1;
  }
  return 2;
}
