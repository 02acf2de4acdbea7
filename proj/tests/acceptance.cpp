// Acceptance criteria 1-9.  Usage: acceptance [criterion ...]; no argument
// runs all.  One PASS/FAIL line per criterion on stdout, details of failures
// indented below it.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nichols/disjoint.hpp"
#include "nichols/integrals.hpp"
#include "nichols/reduction.hpp"

using namespace nichols;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back(what);
    }
  }
  void report(const IdentityReport& r, const std::string& where) {
    if (r.pass) return;
    pass = false;
    std::string failed;
    for (const auto& it : r.items)
      if (!it.pass) failed += (failed.empty() ? "" : ", ") + it.name;
    details.push_back(where + " " + r.name + " failed: " + failed + " " + r.counterexample.dump());
  }
  bool has_item(const IdentityReport& r, const std::string& name) {
    for (const auto& it : r.items)
      if (it.name == name && it.checked > 0) return true;
    details.push_back(r.name + ": item \"" + name + "\" not exercised");
    pass = false;
    return false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

RootSystem typeA(int n) { return RootSystem(CartanData::of(Family::A, n)); }

std::vector<int> dims_of(Algebra<Rational>& a) {
  a.build();
  std::vector<int> d;
  for (int n = 0; n <= a.top_degree(); ++n) d.push_back(a.dim(n));
  return d;
}

std::set<std::string> names(const RootSystem& rs, const std::vector<int>& b) {
  std::set<std::string> s;
  for (int r : b) s.insert(rs.root_name(r));
  return s;
}

const std::uint64_t kSeed = 20240601;

Outcome c1() {
  Outcome o;
  auto t = Clock::now();
  auto rs = typeA(5);
  auto id = GroupElement::identity(rs);
  auto w1 = GroupElement::from_perm(rs, {2, 4, 1, 6, 3, 5}), w2 = GroupElement::from_perm(rs, {3, 1, 5, 2, 6, 4});
  auto c = classify(rs, {id, w1, w2});
  o.require(c.valid(), "classify rejected {1, 241635, 315264}");
  if (!c.valid()) return o;
  const auto& d = *c.system;
  o.require(d.normalized && d.complete && d.order() == 3, "not a normalized complete system of order three");
  o.require(names(rs, d.blocks[0]) == std::set<std::string>{"(12)", "(23)", "(34)", "(45)", "(56)"}, "block of 1");
  o.require(names(rs, d.blocks[1]) == std::set<std::string>{"(24)", "(14)", "(16)", "(36)", "(35)"}, "block of 241635");
  o.require(names(rs, d.blocks[2]) == std::set<std::string>{"(13)", "(15)", "(25)", "(26)", "(46)"}, "block of 315264");
  o.require(w1.inverse() == w2, "w1^-1 != w2");
  bool found = false;
  for (const auto& s : search_complete(rs)) found = found || s.elements == std::vector<GroupElement>{id, w1, w2};
  o.require(found, "search_complete(S6) misses the system");
  o.require(seconds_since(t) < 1.0, "runtime over 1 s");
  return o;
}

Outcome c2() {
  Outcome o;
  {
    Algebra<Rational> a(typeA(1));
    o.require(dims_of(a) == std::vector<int>{1, 1}, "A1 dims");
  }
  auto t = Clock::now();
  {
    Algebra<Rational> a(typeA(2));
    o.require(dims_of(a) == std::vector<int>{1, 3, 4, 3, 1}, "S3 dims");
    o.report(check_dual_paths(a, CheckOptions{0, 1, 4, true}), "S3");
  }
  o.require(seconds_since(t) < 5.0, "S3 over 5 s");
  t = Clock::now();
  {
    Algebra<Rational> a(typeA(3));
    auto d = dims_of(a);
    long long total = 0;
    for (int x : d) total += x;
    o.require(total == 576, "S4 total " + std::to_string(total));
    o.require(a.top_degree() == 12, "S4 top degree");
    bool pal = true;
    for (std::size_t n = 0; n < d.size(); ++n) pal = pal && d[n] == d[d.size() - 1 - n];
    o.require(pal, "S4 dims not palindromic");
    o.report(check_dual_paths(a, CheckOptions{0, 1, 4, true}), "S4");
  }
  o.require(seconds_since(t) < 300.0, "S4 over 5 min");
  return o;
}

Outcome c3() {
  Outcome o;
  for (int r : {2, 3}) {
    Algebra<Rational> a(typeA(r));
    NilCoxeter<Rational> nc(a);
    auto rep = check_orthonormality(nc);
    o.report(rep, "A" + std::to_string(r));
    o.require(rep.trials == (r == 2 ? 36 : 576), "pair count");
  }
  return o;
}

Outcome c4() {
  Outcome o;
  for (int r : {2, 3}) {
    Algebra<Rational> a(typeA(r));
    NilCoxeter<Rational> nc(a);
    const std::string where = "A" + std::to_string(r);
    CheckOptions opt{500, kSeed, -1, true};
    o.report(check_rhoD(a, opt), where);
    CheckOptions nz = opt;
    if (r == 3) nz.max_degree = 6;
    auto rep = check_nz_antipode(a, nz);
    o.report(rep, where);
    o.require(rep.parameters["exponent"].get<long long>() * 2 == (r == 2 ? 12 : 24), where + " power of S");
    o.has_item(rep, "power_2e");
    o.report(check_gen_leibniz_suite(nc, opt), where);
    o.report(check_skew_suite(nc, opt), where);
    o.report(check_basic_rev(nc, opt), where);
  }
  return o;
}

Outcome c5() {
  Outcome o;
  for (int r : {2, 3}) {
    Algebra<Rational> a(typeA(r));
    NilCoxeter<Rational> nc(a);
    const std::string where = "A" + std::to_string(r);
    auto cert = top_integral(a);
    auto rep = certificate_checks(a, cert);
    o.report(rep, where);
    for (const char* item : {"top one-dimensional", "parity", "x ~ gx", "eps_rho = eps_Sbar", "eps_S = (-1)^m",
                             "wx = (-1)^l(w) x"})
      o.has_item(rep, item);
    for (int l : cert.lambda) o.require(l == 1 || l == -1, where + " lambda not +-1");
    std::vector<std::vector<GroupElement>> two;
    for (const auto& d : search_complete(a.roots()))
      if (d.order() == 2) two.push_back(d.elements);
    auto inv = invariance_suite(nc, cert, two, CheckOptions{500, kSeed, -1, true});
    o.report(inv, where);
    for (const char* item : {"inv1", "inv2", "inv3", "inv4"}) o.has_item(inv, item);
    if (r == 3) o.has_item(inv, "inv5 first");
  }
  return o;
}

Outcome c6() {
  Outcome o;
  auto t = Clock::now();
  for (int r : {2, 3}) {
    Algebra<Rational> a(typeA(r));
    NilCoxeter<Rational> nc(a);
    auto sub = subalgebra_build(a, nonsimple_roots(a.roots()));
    auto rep = hypothetical_checks(nc, sub);
    o.report(rep, "A" + std::to_string(r));
    for (const char* item : {"subalgebra top one-dimensional", "main-hypo right", "main-hypo left",
                             "hypo-II P = (x)<-D_{w_o}", "<P,P> != 0", "one-dimensional left ideals",
                             "one-dimensional right ideals"})
      o.has_item(rep, item);
  }
  o.require(seconds_since(t) < 600.0, "runtime over 10 min");
  return o;
}

Outcome c7() {
  Outcome o;
  Algebra<Rational> a(typeA(3));
  auto rep = check_reduction(a, CheckOptions{200, kSeed, 6, true});
  o.report(rep, "A3");
  o.require(rep.trials == 200, "monomial count");
  o.require(rep.parameters["poincare"] == json::array({1, 3, 5, 6, 5, 3, 1, 0, 0, 0, 0, 0, 0}), "Poincare vector");
  return o;
}

Outcome c8() {
  Outcome o;
  Algebra<Rational> a(typeA(3));
  NilCoxeter<Rational> nc(a);
  auto found = search_complete(a.roots());
  o.require(!found.empty(), "no complete system in S4");
  if (found.empty()) return o;
  const auto& d = found.front();
  MotivValues v;
  auto rep = motiv_check(nc, d, {0, 1}, &v);
  o.require(v.product_integral && v.all_orderings && v.skew_commute, "motiv items not all true: " + rep.to_json().dump());
  o.require(rep.parameters["sign"] == 1, "sign (-1)^l(w_o) should be +1");
  auto y1 = nc.y_element(d.elements[0]), y2 = nc.y_element(d.elements[1]);
  o.require(a.multiply(y1, y2) == a.multiply(y2, y1), "y1 y2 != y2 y1");
  o.report(check_motiv_suite(nc, found, 20, kSeed), "A3");
  auto br = check_bracket_suite(nc);
  o.report(br, "A3");
  o.has_item(br, "r = 1");
  o.has_item(br, "r = 2");
  return o;
}

Outcome c9() {
  Outcome o;
  AlgebraConfig cfg;
  cfg.degree_cap = 6;
  Algebra<ModP> a(typeA(4), cfg);
  a.build();
  o.require(a.constructed() == 6, "S5 mod p did not reach degree 6");
  o.report(check_dual_paths(a, CheckOptions{0, 1, 3, true}), "A4 mod p");
  std::ostringstream s;
  for (int n = 0; n <= a.constructed(); ++n) s << (n ? "," : "") << n << ":" << a.dim(n);
  std::cerr << "    S5 mod-p dims to degree 6: " << s.str() << "\n";
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion> kCriteria = {
    {1, "S6 golden disjoint system", c1},
    {2, "dimension tables and dual construction paths", c2},
    {3, "nilCoxeter orthonormality", c3},
    {4, "identity suite", c4},
    {5, "integrals suite", c5},
    {6, "hypothetical-element theorems", c6},
    {7, "reduction cross-validation", c7},
    {8, "integrality equivalences at A3", c8},
    {9, "S5 prime-field exploratory run (non-blocking)", c9},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> want;
  for (int i = 1; i < argc; ++i) want.insert(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& c : kCriteria) {
    if (!want.empty() && !want.count(c.id)) continue;
    const auto t = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.details.push_back(std::string("exception: ") + e.what());
    }
    std::printf("[%s] criterion %d: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, seconds_since(t));
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
