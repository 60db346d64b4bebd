// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tits/composition.hpp"
#include "tits/decompose.hpp"
#include "tits/iso.hpp"
#include "tits/jordan.hpp"
#include "tits/s4.hpp"
#include "tits/structurable.hpp"
#include "tits/tits.hpp"

using namespace tits;

namespace {

// Collects failures for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void report(const Report& r) {
    if (r.passed) return;
    std::string w = r.check;
    if (!r.witnesses.empty()) w += " [" + r.witnesses.front().detail + "]";
    failures.push_back(w);
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Check&, std::vector<std::string>&)> body;
};

const char* kComp[4] = {"ground", "binarion", "quaternion", "cayley"};

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

void table_fidelity(Check& c, std::vector<std::string>& notes) {
  CompositionAlgebra cay = split_cayley();
  std::size_t bad = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      int e = oracle::kCayley[i][j];
      Vec want(8);
      if (e) want[std::abs(e) - 1] = e > 0 ? 1 : -1;
      if (cay.algebra.basis_product(i, j) != want) ++bad;
    }
  c.expect(bad == 0, std::to_string(bad) + " of 64 basis products differ from the reference table");
  Report r = composition_report(cay, 100, 0);
  c.report(r);
  notes.push_back(std::to_string(r.checked) + " checks");
}

void derivations(Check& c, std::vector<std::string>& notes) {
  CompositionAlgebra cay = split_cayley();
  c.report(derivation_identities_report(cay));
  MapAlgebra der = derivation_algebra(cay);
  c.expect(der.dim() == static_cast<std::size_t>(oracle::der_composition_dim(8)),
           "dim der C = " + std::to_string(der.dim()));
  KleinGrading g = klein_grading(conjugation_action(der, s4_on_cayley()));
  c.expect(g.dim({1, 0}) == 4, "dim (der C)_(1,0) = " + std::to_string(g.dim({1, 0})));
  notes.push_back("dim der C = " + std::to_string(der.dim()) + ", (1,0) part " + std::to_string(g.dim({1, 0})));
}

void magic_square(Check& c, std::vector<std::string>& notes) {
  for (int k = 0; k < 4; ++k) {
    auto start = std::chrono::steady_clock::now();
    TitsAlgebra t = tits_algebra(split_cayley(), h3(composition_by_name(kComp[k])));
    c.expect(t.dim() == static_cast<std::size_t>(oracle::kMagicSquare[3][k]),
             std::string(kComp[k]) + ": dim " + std::to_string(t.dim()));
    Report r = check_super_jacobi(t.algebra);
    c.report(r);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream o;
    o.precision(2);
    o << std::fixed << t.dim() << " (" << s << "s)";
    notes.push_back(o.str());
  }
}

JordanAlgebra perturbed_h3() {
  JordanAlgebra j = h3(ground());
  SuperAlgebra::Builder b(j.algebra.labels());
  for (std::size_t p = 0; p < j.dim(); ++p)
    for (std::size_t q = 0; q < j.dim(); ++q) b.add_product(p, q, j.algebra.basis_product(p, q));
  b.add(3, 4, 5, 1).add(4, 3, 5, 1);
  return make_jordan("h3:ground-perturbed", std::move(b).build(), j.unit, j.trace);
}

void lie_conditions(Check& c, std::vector<std::string>& notes) {
  CompositionAlgebra cay = split_cayley();
  for (const char* n : {"h3:ground", "h3:binarion", "h3:quaternion", "h3:cayley", "jvtheta", "d2"}) {
    Report r = verify_lie_conditions(cay, jordan_by_name(n));
    c.report(r);
  }
  Report bad = verify_lie_conditions(cay, perturbed_h3());
  c.expect(!bad.passed && !bad.witnesses.empty(), "perturbed H3 was not rejected");
  if (!bad.witnesses.empty()) notes.push_back("negative control witness: " + bad.witnesses.front().detail);
}

// The eighteen products of the left coordinate algebra, J = H3(quaternion).
void left_coordinate_iso(Check& c, std::vector<std::string>& notes) {
  for (int k = 0; k < 4; ++k) {
    InvolutionHomomorphism phi = phi_theorem41(h3(composition_by_name(kComp[k])));
    c.report(phi.report);
  }
  CompositionAlgebra cay = split_cayley();
  JordanAlgebra j = h3(split_quaternion());
  TitsAlgebra t = tits_algebra(cay, j);
  CoordinateAlgebra ca = left_coordinate_algebra(t);
  auto b = [&](const char* l) { return cay.basis(l); };
  auto D = [&](const char* x, const char* y) { return t.from_der(inner_derivation(cay, b(x), b(y))); };
  auto u0 = [&](const Vec& x) { return t.from_tensor(b("u0"), x); };
  auto v0 = [&](const Vec& x) { return t.from_tensor(b("v0"), x); };
  auto mul = [&](const Vec& x, const Vec& y) { return ca.product(x, y); };
  const Vec zero(t.dim());
  const Scalar three(3), two(2), minus(-1);
  int cases = 0, failed = 0;
  auto expect_case = [&](bool ok) {
    ++cases;
    if (!ok) c.expect(false, "case " + std::to_string(cases));
    failed += !ok;
  };
  expect_case(mul(D("v1", "u2"), D("v1", "u2")) == three * D("v1", "u2"));
  expect_case(mul(D("v1", "u2"), D("u1", "v2")) == zero);
  expect_case(mul(D("v1", "u2"), D("e1", "u0")) == three * D("e1", "u0"));
  expect_case(mul(D("v1", "u2"), D("e2", "v0")) == zero);
  const auto& X = j.trace_zero.basis();
  auto all_x = [&](const std::function<bool(const Vec&)>& f) {
    for (const auto& x : X)
      if (!f(x)) return false;
    return true;
  };
  auto all_xy = [&](const std::function<bool(const Vec&, const Vec&)>& f) {
    for (const auto& x : X)
      for (const auto& y : X)
        if (!f(x, y)) return false;
    return true;
  };
  expect_case(all_x([&](const Vec& x) { return mul(D("v1", "u2"), u0(x)) == three * u0(x); }));
  expect_case(all_x([&](const Vec& x) { return mul(D("v1", "u2"), v0(x)) == zero; }));
  expect_case(mul(D("e1", "u0"), D("v1", "u2")) == zero);
  expect_case(mul(D("e1", "u0"), D("u1", "v2")) == three * D("e1", "u0"));
  expect_case(mul(D("e1", "u0"), D("e1", "u0")) == two * D("e2", "v0"));
  expect_case(mul(D("e1", "u0"), D("e2", "v0")) == D("v1", "u2"));
  expect_case(all_x([&](const Vec& x) { return mul(D("e1", "u0"), u0(x)) == minus * v0(x); }));
  expect_case(all_x([&](const Vec& x) { return mul(D("e1", "u0"), v0(x)) == zero; }));
  expect_case(all_x([&](const Vec& x) { return mul(u0(x), D("v1", "u2")) == zero; }));
  expect_case(all_x([&](const Vec& x) { return mul(u0(x), D("u1", "v2")) == three * u0(x); }));
  expect_case(all_x([&](const Vec& x) { return mul(u0(x), D("e1", "u0")) == minus * v0(x); }));
  expect_case(all_x([&](const Vec& x) { return mul(u0(x), D("e2", "v0")) == zero; }));
  expect_case(all_xy([&](const Vec& x, const Vec& y) {
    return mul(u0(x), u0(y)) == minus * j.t(j.mul(x, y)) * D("e2", "v0") + two * v0(star(j, x, y));
  }));
  expect_case(all_xy([&](const Vec& x, const Vec& y) { return mul(u0(x), v0(y)) == j.t(j.mul(x, y)) * D("v1", "u2"); }));
  notes.push_back(std::to_string(cases - failed) + "/" + std::to_string(cases) + " product cases");
}

void structurable(Check& c, std::vector<std::string>& notes) {
  for (const auto& a : {a_of_j(h3(split_cayley())), a_of_j(jordan_super_jvtheta()), a_of_j(jordan_super_dt(Scalar(2)))}) {
    Report r = check_structurable(a);
    c.report(r);
    notes.push_back(a.name + " " + std::to_string(r.checked));
  }
}

void superalgebras(Check& c, std::vector<std::string>& notes) {
  struct Want {
    const char* name;
    std::size_t even, odd;
  };
  for (const Want& w : {Want{"jvtheta", 17, 14}, Want{"d2", 24, 16}}) {
    JordanAlgebra j = jordan_by_name(w.name);
    TitsAlgebra t = tits_algebra(split_cayley(), j);
    const std::size_t e = t.algebra.even_dim(), o = t.algebra.odd_dim();
    c.expect(e == w.even && o == w.odd, std::string(w.name) + ": dimension (" + std::to_string(e) + "|" +
                                            std::to_string(o) + ")");
    c.report(check_super_jacobi(t.algebra));
    c.report(phi_theorem41(j).report);
    notes.push_back(std::string(w.name) + " (" + std::to_string(e) + "|" + std::to_string(o) + ")");
  }
  c.report(ak_to_ajv().report);
}

void right_coordinate_iso(Check& c, std::vector<std::string>& notes) {
  int pairs = 0;
  for (const char* l : kComp)
    for (const char* r : kComp) {
      InvolutionHomomorphism phi = phi_theorem61(composition_by_name(l), composition_by_name(r));
      c.report(phi.report);
      ++pairs;
    }
  CompositionAlgebra cay = split_cayley();
  JordanAlgebra j = h3(split_cayley());
  const CompositionAlgebra& hat = *j.hat;
  TitsAlgebra t = tits_algebra(cay, j);
  CoordinateAlgebra ca = right_coordinate_algebra(t);
  auto d0 = [&](const Vec& x) { return t.from_inner(d_iota(j, 0, x)); };
  auto ax = [&](const Vec& a, const Vec& x) { return t.from_tensor(a, j.iota(0, x)); };
  const Scalar h = Scalar::fraction(-1, 2);
  bool ok[4] = {true, true, true, true};
  for (std::size_t p = 0; p < 8; ++p)
    for (std::size_t q = 0; q < 8; ++q) {
      Vec x = hat.algebra.basis_vector(p), y = hat.algebra.basis_vector(q), xy = hat.mul(x, y);
      ok[0] = ok[0] && ca.product(d0(x), d0(y)) == h * d0(xy);
      for (const auto& a : cay.trace_zero.basis()) {
        ok[1] = ok[1] && ca.product(d0(x), ax(a, y)) == h * ax(a, xy);
        ok[2] = ok[2] && ca.product(ax(a, x), d0(y)) == h * ax(a, xy);
        for (const auto& bb : cay.trace_zero.basis()) {
          Vec want = h * ax(cay.commutator(a, bb), xy) - cay.t(cay.mul(a, bb)) * d0(xy);
          ok[3] = ok[3] && ca.product(ax(a, x), ax(bb, y)) == want;
        }
      }
    }
  for (int k = 0; k < 4; ++k) c.expect(ok[k], "product case " + std::to_string(k + 1));
  notes.push_back(std::to_string(pairs) + " pairs, 4 product cases");
}

void tqj(Check& c, std::vector<std::string>& notes) {
  TqjMaps m = tqj_maps(h3(split_quaternion()));
  c.report(m.jordan_to_s.report);
  c.report(m.lie.report);
  notes.push_back("Lie map " + std::to_string(m.lie.source.dim()) + " -> " + std::to_string(m.lie.target.dim()));
}

void decomposition(Check& c, std::vector<std::string>& notes) {
  using Mult = std::array<std::size_t, 3>;
  std::set<long> eigen;
  auto one = [&](const std::string& name, const SuperAlgebra& g, const std::array<Vec, 3>& triple, const Mult* want,
                 bool round_trip) {
    DecompositionReport r = decompose(g, triple);
    c.report(r.checks);
    c.expect(r.spans, name + ": isotypic components do not span");
    for (long e : r.eigenvalues) eigen.insert(e);
    Mult got = {r.m_adjoint, r.m_h, r.m_trivial};
    if (want) c.expect(got == *want, name + ": multiplicities differ");
    notes.push_back(name + " (" + std::to_string(got[0]) + "," + std::to_string(got[1]) + "," +
                    std::to_string(got[2]) + ")");
    if (!r.spans) return;
    GroupAction act = synthesize_s4(g, r);
    c.report(act.verify(g));
    CoordinateAlgebra ca = coordinate_algebra(g, act);
    c.expect(find_unit(ca.algebra.algebra).has_value(), name + ": coordinate algebra has no unit");
    if (round_trip) {
      SuperAlgebra assembled = assemble_b1(extract_b1(g, r));
      c.expect(g.change_basis(r.adapted, assembled.labels()) == assembled, name + ": round trip differs");
    }
  };
  const Mult glw = {1, 1, 1}, sp6 = {1, 3, 3};
  one("gl(W)", gl_w(), {Vec::unit(9, 0), Vec::unit(9, 1), Vec::unit(9, 2)}, &glw, true);
  ClassicalExample sp = classical_example(ClassicalKind::Symplectic, 0);
  one("sp6", sp.g, sp.triple, &sp6, true);
  TitsAlgebra t = tits_algebra(split_cayley(), h3(ground()));
  one("T(cayley,h3:ground)", t.algebra, left_so3_triple(t), nullptr, true);
  c.expect(eigen == std::set<long>{0, -2, -6}, "Casimir eigenvalues differ from {0, -2, -6}");
}

// The grid: +-{1/4, 1/3, 1/2, 2/3, 3/4, 1, 3/2, 2, 5/2, 3}.
void trace_solver(Check& c, std::vector<std::string>& notes) {
  const long grid[10][2] = {{1, 4}, {1, 3}, {1, 2}, {2, 3}, {3, 4}, {1, 1}, {3, 2}, {2, 1}, {5, 2}, {3, 1}};
  std::vector<std::string> with_trace, lie;
  for (const auto& g : grid)
    for (long s : {1, -1}) {
      Scalar t = Scalar::fraction(s * g[0], g[1]);
      if (find_normalized_traces(dt_superalgebra(t), Vec{1, 1, 0, 0})) {
        with_trace.push_back(t.str());
        if (verify_lie_conditions(split_cayley(), jordan_super_dt(t)).passed) lie.push_back(t.str());
      }
    }
  const bool exact = with_trace == std::vector<std::string>{"1/2", "2"} || with_trace == std::vector<std::string>{"2", "1/2"};
  c.expect(exact, "a normalized trace exists for " + std::to_string(with_trace.size()) +
                      " of 20 values (all but t = -1), not only t in {2, 1/2}");
  notes.push_back("T(C,D_t) satisfies the Lie conditions only for t in {" + join(lie, ", ") + "}");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "split Cayley table, norm and degree-2 identity", 1, table_fidelity},
      {2, "derivation identities and dim der C", 5, derivations},
      {3, "magic square dimensions and Jacobi", 600, magic_square},
      {4, "Lie conditions and negative control", 0, lie_conditions},
      {5, "T_(1,0) isomorphic to A(J), product cases", 0, left_coordinate_iso},
      {6, "structurable A(H3(Cayley)), A(J(V,theta)), A(D2)", 0, structurable},
      {7, "superalgebras (17|14), (24|16)", 0, superalgebras},
      {8, "T_(1,0) isomorphic to C (x) Chat, 16 pairs", 0, right_coordinate_iso},
      {9, "T(Q,J)_(1,0) and the Lie isomorphism", 0, tqj},
      {10, "so3 decomposition, S4 synthesis, round trip", 0, decomposition},
      {11, "normalized traces of D_t", 0, trace_solver},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    std::vector<std::string> notes;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.body(c, notes);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0 && s >= cr.limit_seconds) c.expect(false, "exceeded the time limit");
    const bool pass = c.failures.empty();
    failed += !pass;
    std::printf("%s criterion %2d: %s (%.2fs)", pass ? "PASS" : "FAIL", cr.id, cr.title.c_str(), s);
    if (!notes.empty()) std::printf(" -- %s", join(notes, "; ").c_str());
    if (!pass) std::printf(" -- failures: %s", join(c.failures, "; ").c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
