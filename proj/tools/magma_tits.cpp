// magma-tits: build the algebras of the Tits construction, run the
// verification suites and export structure constants as JSON.

#include <array>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tits/composition.hpp"
#include "tits/decompose.hpp"
#include "tits/iso.hpp"
#include "tits/jordan.hpp"
#include "tits/registry.hpp"
#include "tits/s4.hpp"
#include "tits/structurable.hpp"
#include "tits/tits.hpp"

using nlohmann::json;
using namespace tits;

namespace {

struct Options {
  std::string left = "cayley";
  std::string right;
  std::string jordan;
  std::string action = "left";
  std::string format = "text";
  std::string input;
  std::string output;
  std::string lie;
  std::string triple;
  unsigned seed = 0;
  unsigned parallel = 0;
};

// Reports of one suite plus informational values.
struct Outcome {
  std::vector<Report> reports;
  json info = json::object();

  bool passed() const {
    for (const auto& r : reports)
      if (!r.passed) return false;
    return true;
  }
  void add(Report r) { reports.push_back(std::move(r)); }
  void append(const Outcome& o) {
    reports.insert(reports.end(), o.reports.begin(), o.reports.end());
    for (auto it = o.info.begin(); it != o.info.end(); ++it) info[it.key()] = it.value();
  }
};

Report expect(const std::string& name, bool ok, const std::string& detail) {
  Report r(name);
  r.checked = 1;
  if (!ok) r.fail({{}, detail});
  return r;
}

std::string dims(const SuperAlgebra& a) {
  return "(" + std::to_string(a.even_dim()) + "|" + std::to_string(a.odd_dim()) + ")";
}

// Runs f, turning a VerificationError into its report.
Report guarded(const std::string& name, const std::function<Report()>& f) {
  try {
    return f();
  } catch (const VerificationError& e) {
    return e.report();
  } catch (const std::exception& e) {
    return expect(name, false, e.what());
  }
}

const std::vector<std::string>& compositions() {
  static const std::vector<std::string> names = {"ground", "binarion", "quaternion", "cayley"};
  return names;
}

// ---- suites ---------------------------------------------------------------

Outcome suite_csplit(const Options& o) {
  Outcome out;
  CompositionAlgebra c = split_cayley();
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw std::runtime_error("cannot read " + o.input);
    SuperAlgebra table = SuperAlgebra::from_json(json::parse(in));
    if (table.labels() != c.algebra.labels()) throw std::runtime_error(o.input + ": basis must be e1 e2 u0 u1 u2 v0 v1 v2");
    Report fidelity("table fidelity");
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        ++fidelity.checked;
        Vec got = table.basis_product(i, j), want = c.algebra.basis_product(i, j);
        if (got != want)
          fidelity.fail({{i, j}, c.algebra.label(i) + " " + c.algebra.label(j) + " = " + format_vector(table, got) +
                                     ", expected " + format_vector(table, want)});
      }
    }
    out.add(fidelity);
    c.algebra = table;
  }
  out.add(composition_report(c, 100, o.seed));
  out.add(derivation_identities_report(c));
  GroupAction s4 = s4_on_cayley();
  out.add(s4.verify(c.algebra));
  Report klein = grading_report(c.algebra, klein_grading_cayley());
  klein.check = "Z2xZ2 grading";
  out.add(klein);
  Report z3 = grading_report(c.algebra, z3_grading_cayley());
  z3.check = "Z3 grading";
  out.add(z3);
  // On a corrupted table the derivations need not close into a Lie algebra.
  try {
    MapAlgebra der = derivation_algebra(c);
    out.add(expect("dim der C = 14", der.dim() == 14, "dim der C = " + std::to_string(der.dim())));
    KleinGrading kg = klein_grading(conjugation_action(der, s4));
    out.add(expect("dim (der C)_(1,0) = 4", kg.dim({1, 0}) == 4,
                   "dim (der C)_(1,0) = " + std::to_string(kg.dim({1, 0}))));
    out.info["der_dim"] = der.dim();
    out.info["der_10_dim"] = kg.dim({1, 0});
  } catch (const std::exception& e) {
    out.add(expect("derivation algebra", false, e.what()));
  }
  return out;
}

Outcome tits_suite(const std::string& left, const std::string& jordan, const Options& o) {
  Outcome out;
  CompositionAlgebra c = composition_by_name(left);
  JordanAlgebra j = jordan_by_name(jordan);
  TitsAlgebra t = tits_algebra(c, j);
  const std::string key = "tits:" + left + ":" + jordan;
  out.add(verify_lie_conditions(c, j));
  out.add(check_super_jacobi(t.algebra, o.parallel));
  if (c.name == "cayley") {
    GroupAction act = s4_on_tits_left(t);
    out.add(act.verify(t.algebra));
    out.add(klein_grading_report(t.algebra, act, klein_grading(act, t.algebra.parities())));
  }
  if (j.kind == JordanKind::H3) {
    GroupAction act = s4_on_tits_right(t);
    out.add(act.verify(t.algebra));
    out.add(klein_grading_report(t.algebra, act, klein_grading(act, t.algebra.parities())));
  }
  out.info[key] = {{"dim", dims(t.algebra)},
                   {"der", t.der_dim()},
                   {"tensor", t.c0_dim() * t.j0_dim()},
                   {"inner", t.inner_dim()}};
  return out;
}

Outcome suite_tits(const Options& o) {
  if (!o.jordan.empty()) return tits_suite(o.left, o.jordan, o);
  Outcome out;
  for (const char* jn : {"h3:ground", "h3:binarion", "h3:quaternion", "h3:cayley", "jvtheta", "d2"})
    out.append(tits_suite(o.left, jn, o));
  return out;
}

Outcome thm41_one(const std::string& jordan) {
  Outcome out;
  JordanAlgebra j = jordan_by_name(jordan);
  out.add(guarded("T10 -> A(J) for " + jordan, [&] { return phi_theorem41(j).verify(); }));
  AlgebraWithInvolution a = a_of_j(j);
  out.add(involution_report(a));
  out.add(check_structurable(a));
  out.info["A(" + jordan + ")"] = dims(a.algebra);
  return out;
}

Outcome suite_thm41(const Options& o) {
  if (!o.jordan.empty()) return thm41_one(o.jordan);
  Outcome out;
  for (const char* jn : {"field", "h3:ground", "h3:binarion", "h3:quaternion", "h3:cayley", "jvtheta", "d2"})
    out.append(thm41_one(jn));
  return out;
}

Outcome suite_thm61(const Options& o) {
  Outcome out;
  std::vector<std::string> lefts = compositions(), rights = compositions();
  if (!o.right.empty()) rights = {o.right};
  if (!o.right.empty() || o.left != "cayley") lefts = {o.left};
  for (const auto& l : lefts) {
    for (const auto& r : rights) {
      out.add(guarded("T10 -> " + l + " (x) " + r, [&] {
        return phi_theorem61(composition_by_name(l), composition_by_name(r)).verify();
      }));
    }
  }
  return out;
}

Outcome suite_super(const Options& o) {
  Outcome out;
  CompositionAlgebra c = split_cayley();
  const std::map<std::string, std::string> expected = {{"jvtheta", "(17|14)"}, {"d2", "(24|16)"}};
  for (const auto& [name, want] : expected) {
    JordanAlgebra j = jordan_by_name(name);
    TitsAlgebra t = tits_algebra(c, j);
    out.add(expect("dim T(cayley, " + name + ") = " + want, dims(t.algebra) == want, "got " + dims(t.algebra)));
    out.add(check_super_jacobi(t.algebra, o.parallel));
    out.add(verify_lie_conditions(c, j));
    out.append(thm41_one(name));
    out.info["tits:cayley:" + name] = dims(t.algebra);
  }
  out.add(guarded("A(K) -> A(J(V,theta))", [] { return ak_to_ajv().verify(); }));
  AlgebraWithInvolution ak = a_of_cubic(kaplansky());
  out.add(kaplansky().check(100, o.seed));
  out.add(check_structurable(ak));
  return out;
}

// Decomposition checks for one example; `expected` holds (adjoint, h, trivial).
Outcome thm71_one(const std::string& name, const SuperAlgebra& g, const std::array<Vec, 3>& triple,
                  const std::array<std::size_t, 3>* expected) {
  Outcome out;
  DecompositionReport r = decompose(g, triple);
  Report checks = r.checks;
  checks.check = name + ": " + checks.check;
  out.add(checks);
  out.add(expect(name + ": spans", r.spans, "residual dimension " + std::to_string(r.residual_dim)));
  out.info[name] = {{"dim", g.dim()}, {"multiplicities", {r.m_adjoint, r.m_h, r.m_trivial}}, {"eigenvalues", r.eigenvalues}};
  if (expected) {
    std::array<std::size_t, 3> got = {r.m_adjoint, r.m_h, r.m_trivial};
    out.add(expect(name + ": multiplicities", got == *expected,
                   "got (" + std::to_string(got[0]) + "," + std::to_string(got[1]) + "," + std::to_string(got[2]) + ")"));
  }
  if (!r.spans || !r.checks.passed) return out;
  GroupAction act = synthesize_s4(g, r);
  Report av = act.verify(g);
  av.check = name + ": synthesized " + av.check;
  out.add(av);
  CoordinateAlgebra ca = coordinate_algebra(g, act);
  out.add(expect(name + ": coordinate algebra unital", find_unit(ca.algebra.algebra).has_value(), "no unit"));
  B1Data b = extract_b1(g, r);
  Report inv = b.invariants();
  inv.check = name + ": " + inv.check;
  out.add(inv);
  SuperAlgebra assembled = assemble_b1(b);
  out.add(expect(name + ": round trip", g.change_basis(r.adapted, assembled.labels()) == assembled,
                 "assembled bracket differs from the original in the adapted basis"));
  return out;
}

Outcome suite_thm71(const Options&) {
  Outcome out;
  out.add(s4_on_w().relations_report());
  out.add(invariant_maps_report());
  out.add(check_super_jacobi(gl_w()));
  const std::array<std::size_t, 3> glw = {1, 1, 1}, sp6 = {1, 3, 3};
  SuperAlgebra g = gl_w();
  out.append(thm71_one("gl(W)", g, {Vec::unit(9, 0), Vec::unit(9, 1), Vec::unit(9, 2)}, &glw));
  for (std::size_t u : {0, 1, 2}) {
    for (auto kind : {ClassicalKind::Orthogonal, ClassicalKind::Special}) {
      ClassicalExample e = classical_example(kind, u);
      out.append(thm71_one(e.name, e.g, e.triple, nullptr));
    }
  }
  for (std::size_t u : {0, 2}) {
    ClassicalExample e = classical_example(ClassicalKind::Symplectic, u);
    out.append(thm71_one(e.name, e.g, e.triple, u == 0 ? &sp6 : nullptr));
  }
  TitsAlgebra t = tits_algebra(split_cayley(), h3(ground()));
  out.append(thm71_one("T(cayley, h3:ground)", t.algebra, left_so3_triple(t), nullptr));
  ClassicalExample gh = gl_of_h_example();
  DecompositionReport r = decompose(gh.g, gh.triple);
  out.add(expect("gl(h): Casimir leaves a residual", !r.spans && r.residual_dim > 0, "unexpectedly decomposed"));
  Report eig("Casimir eigenvalues in {0, -2, -6}");
  for (const auto& [name, data] : out.info.items()) {
    for (long e : data.at("eigenvalues")) {
      ++eig.checked;
      if (e != 0 && e != -2 && e != -6) eig.fail({{}, name + ": eigenvalue " + std::to_string(e)});
    }
  }
  out.add(eig);
  return out;
}

Outcome suite_tqj(const Options& o) {
  Outcome out;
  const std::string jn = o.jordan.empty() ? "h3:quaternion" : o.jordan;
  JordanAlgebra j = jordan_by_name(jn);
  try {
    TqjMaps m = tqj_maps(j);
    Report a = m.jordan_to_s.verify(false);
    a.check = "T(Q," + jn + ")_(1,0) ~ " + jn + ": " + a.check;
    out.add(a);
    Report b = m.lie.verify();
    b.check = "T(Q," + jn + ") ~ variant: " + b.check;
    out.add(b);
    out.info["tits:quaternion:" + jn] = dims(m.lie.source);
  } catch (const VerificationError& e) {
    out.add(e.report());
  }
  return out;
}

Outcome suite_all(const Options& o) {
  Options base = o;
  base.input.clear();
  Outcome out = suite_csplit(base);
  Options t = base;
  t.left = "cayley";
  t.jordan.clear();
  out.append(suite_tits(t));
  out.append(suite_thm41(t));
  Options p = base;
  p.left = "cayley";
  p.right.clear();
  out.append(suite_thm61(p));
  out.append(suite_super(base));
  out.append(suite_thm71(base));
  Options q = base;
  q.jordan.clear();
  out.append(suite_tqj(q));
  return out;
}

// ---- output ---------------------------------------------------------------

int emit(const std::string& suite, const Outcome& out, const Options& o) {
  json failing = json::array();
  for (const auto& r : out.reports)
    if (!r.passed) failing.push_back(r.to_json());
  if (o.format == "json") {
    json reports = json::array();
    for (const auto& r : out.reports) reports.push_back(r.to_json());
    json doc = {{"suite", suite}, {"passed", out.passed()}, {"reports", reports}, {"info", out.info}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::size_t width = 0;
    for (const auto& r : out.reports) width = std::max(width, r.check.size());
    for (const auto& r : out.reports)
      std::cout << std::left << std::setw(static_cast<int>(width)) << r.check << "  " << (r.passed ? "pass" : "FAIL")
                << "  " << std::right << std::setw(10) << r.checked << "\n";
    for (auto it = out.info.begin(); it != out.info.end(); ++it) std::cout << it.key() << ": " << it.value().dump() << "\n";
    std::cout << suite << ": " << (out.passed() ? "PASS" : "FAIL") << "\n";
    if (!failing.empty()) std::cout << json{{"failures", failing}}.dump(2) << "\n";
  }
  return out.passed() ? 0 : 1;
}

int cmd_magic_square(const Options& o) {
  json rows = json::array();
  bool ok = true;
  std::vector<std::vector<std::string>> cells;
  for (const auto& l : compositions()) {
    json row = json::object();
    std::vector<std::string> line;
    for (const auto& r : compositions()) {
      TitsAlgebra t = tits_algebra(composition_by_name(l), h3(composition_by_name(r)));
      Report jac = check_super_jacobi(t.algebra, o.parallel);
      ok = ok && jac.passed;
      row[r] = {{"dim", t.dim()}, {"jacobi", jac.to_json()}};
      line.push_back(std::to_string(t.dim()) + (jac.passed ? "" : "!"));
    }
    rows.push_back({{"left", l}, {"entries", row}});
    cells.push_back(line);
  }
  if (o.format == "json") {
    std::cout << json{{"rows", rows}, {"passed", ok}}.dump(2) << "\n";
  } else {
    std::cout << std::left << std::setw(12) << "C \\ H3(.)";
    for (const auto& r : compositions()) std::cout << std::right << std::setw(12) << r;
    std::cout << "\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::cout << std::left << std::setw(12) << compositions()[i];
      for (const auto& c : cells[i]) std::cout << std::right << std::setw(12) << c;
      std::cout << "\n";
    }
    std::cout << "Jacobi: " << (ok ? "pass on all 16" : "FAIL (marked !)") << "\n";
    if (!ok) std::cout << rows.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_export(const std::string& name, const Options& o) {
  std::string text = algebra_by_name(name).to_json().dump(2) + "\n";
  if (o.output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(o.output);
  if (!f || !(f << text)) throw std::runtime_error("cannot write " + o.output);
  return 0;
}

std::string matrix_rows(const Mat& m) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += "  ";
    for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? " " : "") + m(r, c).str();
    s += "\n";
  }
  return s;
}

int cmd_coordinate_algebra(const Options& o) {
  std::string cn = o.left, jn = o.jordan.empty() ? "h3:ground" : o.jordan;
  if (!o.lie.empty()) {
    // tits:<comp>:<jordan>
    const std::string prefix = "tits:";
    const auto cut = o.lie.find(':', prefix.size());
    if (o.lie.rfind(prefix, 0) != 0 || cut == std::string::npos)
      throw std::invalid_argument("--lie must name a Tits algebra tits:<comp>:<jordan>");
    cn = o.lie.substr(prefix.size(), cut - prefix.size());
    jn = o.lie.substr(cut + 1);
  }
  TitsAlgebra t = tits_algebra(composition_by_name(cn), jordan_by_name(jn));
  GroupAction act;
  if (o.action == "left")
    act = s4_on_tits_left(t);
  else if (o.action == "right")
    act = s4_on_tits_right(t);
  else
    throw std::invalid_argument("--action must be left or right");
  CoordinateAlgebra ca = coordinate_algebra(t.algebra, act);
  const AlgebraWithInvolution& a = ca.algebra;
  Report inv = involution_report(a);
  if (o.format == "json") {
    json invol = json::array();
    for (std::size_t r = 0; r < a.involution.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < a.involution.cols(); ++c) row.push_back(a.involution(r, c).str());
      invol.push_back(row);
    }
    json doc = {{"tits", t.name},
                {"action", o.action},
                {"algebra", a.algebra.to_json()},
                {"unit", format_vector(a.algebra, a.unit)},
                {"involution", invol},
                {"involution_report", inv.to_json()}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "T = " << t.name << " " << dims(t.algebra) << ", " << o.action << " action\n";
    std::cout << "T_(1,0): dim " << dims(a.algebra) << ", unit " << format_vector(a.algebra, a.unit) << "\n";
    std::cout << "basis:\n";
    for (std::size_t i = 0; i < a.dim(); ++i) std::cout << "  [" << i << "] " << a.algebra.label(i) << "\n";
    if (a.dim() <= 16) {
      std::cout << "products:\n";
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
          Vec p = a.algebra.basis_product(i, j);
          if (!p.is_zero()) std::cout << "  [" << i << "][" << j << "] = " << format_vector(a.algebra, p) << "\n";
        }
      std::cout << "involution:\n" << matrix_rows(a.involution);
    }
    std::cout << inv.summary() << "\n";
  }
  return inv.passed ? 0 : 1;
}

int cmd_decompose(const Options& o) {
  if (o.lie.empty()) throw std::invalid_argument("--lie is required");
  SuperAlgebra g;
  std::optional<std::array<Vec, 3>> triple;
  std::ifstream in(o.lie);
  if (in) {
    g = SuperAlgebra::from_json(json::parse(in));
  } else if (o.lie == "glw") {
    g = gl_w();
    triple = std::array<Vec, 3>{Vec::unit(9, 0), Vec::unit(9, 1), Vec::unit(9, 2)};
  } else if (o.lie == "gl-h") {
    ClassicalExample e = gl_of_h_example();
    g = e.g;
    triple = e.triple;
  } else if (o.lie.size() > 3 && (o.lie.rfind("so:", 0) == 0 || o.lie.rfind("sl:", 0) == 0 || o.lie.rfind("sp:", 0) == 0)) {
    ClassicalKind kind = o.lie[1] == 'o' ? ClassicalKind::Orthogonal
                         : o.lie[1] == 'l' ? ClassicalKind::Special
                                           : ClassicalKind::Symplectic;
    ClassicalExample e = classical_example(kind, std::stoul(o.lie.substr(3)));
    g = e.g;
    triple = e.triple;
  } else if (o.lie.rfind("tits:cayley:", 0) == 0) {
    TitsAlgebra t = tits_algebra(split_cayley(), jordan_by_name(o.lie.substr(12)));
    g = t.algebra;
    triple = left_so3_triple(t);
  } else {
    g = algebra_by_name(o.lie);
  }
  if (!o.triple.empty()) {
    std::array<Vec, 3> tr;
    std::stringstream ss(o.triple);
    std::string item;
    std::size_t k = 0;
    while (std::getline(ss, item, ',')) {
      if (k == 3) throw std::invalid_argument("--triple takes three basis indices");
      std::size_t idx = std::stoul(item);
      if (idx >= g.dim()) throw std::invalid_argument("--triple index out of range");
      tr[k++] = g.basis_vector(idx);
    }
    if (k != 3) throw std::invalid_argument("--triple takes three basis indices");
    triple = tr;
  }
  if (!triple) throw std::invalid_argument("no default so3 triple for '" + o.lie + "'; pass --triple i,j,k");
  DecompositionReport r = decompose(g, *triple);
  bool ok = r.checks.passed && r.spans;
  if (o.format == "json") {
    std::cout << r.to_json().dump(2) << "\n";
  } else {
    std::cout << o.lie << ": dim " << r.dim << "\n";
    std::cout << "Casimir eigenvalues:";
    for (long e : r.eigenvalues) std::cout << " " << e;
    std::cout << "\nresidual dimension: " << r.residual_dim << "\n";
    std::cout << "multiplicities (so3, h, trivial): (" << r.m_adjoint << ", " << r.m_h << ", " << r.m_trivial << ")\n";
    std::cout << r.checks.summary() << "\n";
    if (ok) {
      GroupAction act = synthesize_s4(g, r);
      Report av = act.verify(g);
      CoordinateAlgebra ca = coordinate_algebra(g, act);
      std::cout << av.summary() << "\n";
      std::cout << "coordinate algebra: dim " << ca.algebra.dim() << ", unit "
                << (find_unit(ca.algebra.algebra) ? "yes" : "no") << "\n";
      ok = av.passed;
    }
  }
  return ok ? 0 : 1;
}

int cmd_tits(const Options& o) {
  const std::string jn = o.jordan.empty() ? "h3:cayley" : o.jordan;
  TitsAlgebra t = tits_algebra(composition_by_name(o.left), jordan_by_name(jn));
  Report jac = check_super_jacobi(t.algebra, o.parallel);
  if (o.format == "json") {
    json doc = {{"name", t.name},           {"dim", dims(t.algebra)},   {"der", t.der_dim()},
                {"tensor", t.c0_dim() * t.j0_dim()}, {"inner", t.inner_dim()}, {"jacobi", jac.to_json()}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << t.name << "\n";
    std::cout << "  der C           " << t.der_dim() << "\n";
    std::cout << "  C0 (x) J0       " << t.c0_dim() << " x " << t.j0_dim() << " = " << t.c0_dim() * t.j0_dim() << "\n";
    std::cout << "  d_{J,J}         " << t.inner_dim() << "\n";
    std::cout << "  total           " << dims(t.algebra) << "\n";
    std::cout << "  " << jac.summary() << "\n";
  }
  return jac.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tits construction of Lie (super)algebras: build, verify, decompose and export."};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_parallel = [&](CLI::App* c) {
    c->add_option("--parallel", o.parallel, "Worker threads for Jacobi checks (default: MAGMA_TITS_THREADS or all cores)");
  };

  auto* magic = app.add_subcommand("magic-square", "Build T(C, H3(Chat)) for all 16 pairs, check Jacobi and print dimensions");
  add_format(magic);
  add_parallel(magic);

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 1 with JSON witnesses on failure");
  verify->add_option("suite", suite, "csplit | tits | thm41 | thm61 | super | thm71 | tqj | all")
      ->required()
      ->check(CLI::IsMember({"csplit", "tits", "thm41", "thm61", "super", "thm71", "tqj", "all"}));
  verify->add_option("--left", o.left, "Composition algebra C (tits, thm61)");
  verify->add_option("--right", o.right, "Composition algebra Chat (thm61)");
  verify->add_option("--jordan", o.jordan, "Jordan (super)algebra J (tits, thm41, tqj)");
  verify->add_option("--input", o.input, "Cayley table JSON to check instead of the built-in one (csplit)");
  verify->add_option("--seed", o.seed, "Seed for sampled property checks");
  add_format(verify);
  add_parallel(verify);

  std::string export_name;
  auto* exp = app.add_subcommand("export", "Write the structure constants of a named algebra as JSON");
  exp->add_option("name", export_name, "Algebra name, e.g. cayley, h3:cayley, tits:cayley:h3:cayley")->required();
  exp->add_option("--output,-o", o.output, "Output file (default: stdout)");

  auto* coord = app.add_subcommand("coordinate-algebra", "Coordinate algebra T_(1,0) of T(C,J) under an S4 action");
  coord->add_option("--left", o.left, "Composition algebra C (cayley for the left action)");
  coord->add_option("--jordan", o.jordan, "Jordan algebra J (h3:<comp> for the right action)");
  coord->add_option("--lie", o.lie, "tits:<comp>:<jordan>, instead of --left and --jordan");
  coord->add_option("--action", o.action, "left | right")->check(CLI::IsMember({"left", "right"}));
  add_format(coord);

  auto* dec = app.add_subcommand("decompose", "Isotypic decomposition under an so3 triple and the resulting S4 action");
  dec->add_option("--lie", o.lie, "Registry name or JSON file of a Lie algebra")->required();
  dec->add_option("--triple", o.triple, "Basis indices i,j,k of the so3 triple");
  add_format(dec);

  auto* tits_cmd = app.add_subcommand("tits", "Build T(C,J) and report its dimensions and Jacobi check");
  tits_cmd->add_option("--left", o.left, "Composition algebra C");
  tits_cmd->add_option("--jordan", o.jordan, "Jordan (super)algebra J");
  add_format(tits_cmd);
  add_parallel(tits_cmd);

  app.footer("Algebra names: " + [] {
    std::string s;
    for (const auto& n : registry_examples()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());

  CLI11_PARSE(app, argc, argv);

  try {
    if (*magic) return cmd_magic_square(o);
    if (*exp) return cmd_export(export_name, o);
    if (*coord) return cmd_coordinate_algebra(o);
    if (*dec) return cmd_decompose(o);
    if (*tits_cmd) return cmd_tits(o);
    if (*verify) {
      static const std::map<std::string, std::function<Outcome(const Options&)>> suites = {
          {"csplit", suite_csplit}, {"tits", suite_tits},   {"thm41", suite_thm41}, {"thm61", suite_thm61},
          {"super", suite_super},   {"thm71", suite_thm71}, {"tqj", suite_tqj},     {"all", suite_all}};
      return emit(suite, suites.at(suite)(o), o);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
