#include <doctest.h>

#include "nichols/integrals.hpp"

using namespace nichols;

namespace {

RootSystem typeA(int n) { return RootSystem(CartanData::of(Family::A, n)); }

void require_pass(const IdentityReport& r) {
  INFO(r.to_json().dump(1));
  CHECK(r.pass);
}

}  // namespace

TEST_CASE("A1 integral") {
  Algebra<Rational> a(typeA(1));
  auto c = top_integral(a);
  CHECK(c.degree == 1);
  CHECK(c.x == a.generator(0));
  CHECK(c.lambda == std::vector<int>{-1});
  CHECK(c.eps_S == -1);
  require_pass(certificate_checks(a, c));
}

TEST_CASE("is_integral") {
  Algebra<Rational> a(typeA(2));
  const auto& rs = a.roots();
  CHECK(is_integral(a, Element<Rational>{}));
  CHECK_FALSE(is_integral(a, a.one()));
  NilCoxeter<Rational> nc(a);
  int theta = nonsimple_roots(rs).at(0);
  auto z = a.multiply(a.generator(theta), nc.embed(nc.longest()));
  CHECK_FALSE(z.is_zero());
  CHECK(is_integral(a, z));
  CHECK_FALSE(is_integral(a, nc.embed(nc.longest())));
}

TEST_CASE("truncated algebras have no certificate") {
  Algebra<ModP> a(RootSystem(CartanData::of(Family::A, 4)), AlgebraConfig{3});
  CHECK_THROWS_AS(top_integral(a), NotFinite);
}

TEST_CASE("S3 and S4 certificates and invariance") {
  for (int r : {2, 3}) {
    Algebra<Rational> a(typeA(r));
    NilCoxeter<Rational> nc(a);
    auto c = top_integral(a);
    CHECK(c.degree == (r == 2 ? 4 : 12));
    require_pass(certificate_checks(a, c));
    std::vector<std::vector<GroupElement>> two;
    if (r == 3) two.push_back({GroupElement::identity(a.roots()), GroupElement::from_perm(a.roots(), {2, 4, 1, 3})});
    CheckOptions opt;
    opt.trials = 20;
    auto rep = invariance_suite(nc, c, two, opt);
    require_pass(rep);
    for (const char* item : {"inv1", "inv2", "inv3", "inv4", "hypo-bracket", "prep-inv"}) CHECK(rep.item(item).checked > 0);
    if (r == 3) CHECK(rep.item("inv5 second").checked == 2);
  }
}

TEST_CASE("monomial lifts") {
  Algebra<Rational> a(typeA(2));
  a.build();
  auto l = lift_monomial_to_integral(a, a.generator(0));
  CHECK(l.left.size() == 3);
  CHECK(l.right.size() == 3);
  auto c = top_integral(a);
  auto t = lift_monomial_to_integral(a, c.x);
  CHECK(t.left.empty());
  CHECK(t.right.empty());
  auto one = lift_monomial_to_integral(a, a.one());
  CHECK(is_integral(a, a.from_word(one.left)));
  CHECK_FALSE(a.from_word(one.left).is_zero());
}

TEST_CASE("subalgebras") {
  Algebra<Rational> a(typeA(2));
  auto s0 = subalgebra_build(a, {});
  CHECK(s0.top == 0);
  auto s = subalgebra_build(a, nonsimple_roots(a.roots()));
  CHECK(s.top == 1);
  CHECK(s.top_space().size() == 1);
}

TEST_CASE("hypothetical elements") {
  for (int r : {1, 2, 3}) {
    Algebra<Rational> a(typeA(r));
    NilCoxeter<Rational> nc(a);
    auto s = subalgebra_build(a, nonsimple_roots(a.roots()));
    require_pass(hypothetical_checks(nc, s));
  }
}
