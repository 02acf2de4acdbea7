#include <doctest.h>

#include "nichols/calculus.hpp"

using namespace nichols;

namespace {

RootSystem typeA(int n) { return RootSystem(CartanData::of(Family::A, n)); }

void require_pass(const IdentityReport& r) {
  INFO(r.to_json().dump(1));
  CHECK(r.pass);
  for (const auto& it : r.items) CHECK(it.checked > 0);
}

}  // namespace

TEST_CASE("kernels and intersections") {
  Algebra<Rational> a(typeA(2));
  a.build();
  // degree 1 kernel of <-D_T is spanned by generators outside T
  auto K = derivative_kernel(a, 1, {0});
  CHECK(K.size() == 2);
  CHECK(derivative_kernel(a, 0, {0, 1}).size() == 1);
  std::vector<SVec<Rational>> u{unit<Rational>(0), unit<Rational>(1)}, v{unit<Rational>(1), unit<Rational>(2)};
  auto i = intersect(u, v, 3);
  REQUIRE(i.size() == 1);
  CHECK(proportional(i[0], unit<Rational>(1)).has_value());
  CHECK_FALSE(proportional(unit<Rational>(0), unit<Rational>(1)).has_value());
}

TEST_CASE("S3 identities, exhaustive") {
  Algebra<Rational> a(typeA(2));
  NilCoxeter<Rational> nc(a);
  CheckOptions opt;
  opt.trials = 40;
  require_pass(check_pairing_contracts(a, opt));
  require_pass(check_rho_realization(a, opt));
  require_pass(check_equivariance(a, opt));
  require_pass(check_rhoD(a, opt));
  require_pass(check_nz_antipode(a, opt));
  require_pass(check_basic_rev(nc, opt));
  require_pass(check_gen_leibniz_suite(nc, opt));
  auto sk = check_skew_suite(nc, opt);
  INFO(sk.to_json().dump(1));
  CHECK(sk.pass);
}

TEST_CASE("a wrong Leibniz orientation is caught") {
  Algebra<Rational> a(typeA(2));
  NilCoxeter<Rational> nc(a);
  const auto& rs = a.roots();
  auto e = GroupElement::identity(rs);
  CheckOptions opt;
  // w' = 1, v = 1, w = w_o is a genuine instance
  require_pass(check_gen_leibniz(nc, e, nc.longest(), e, opt));
  // ofbskew with overlapping T sets is not an instance and must fail
  auto r = check_ofbskew(nc, e, e, opt);
  CHECK_FALSE(r.pass);
  CHECK(r.counterexample.contains("lhs"));
}

TEST_CASE("S4 sampled identities") {
  Algebra<Rational> a(typeA(3));
  NilCoxeter<Rational> nc(a);
  CheckOptions opt;
  opt.trials = 20;
  opt.max_degree = 4;
  opt.exhaustive = false;
  require_pass(check_rhoD(a, opt));
  require_pass(check_nz_antipode(a, opt));
  require_pass(check_equivariance(a, opt));
  opt.max_degree = -1;
  require_pass(check_gen_leibniz_suite(nc, opt));
}

TEST_CASE("bracket signs for S4 centralizer pair") {
  Algebra<Rational> a(typeA(3));
  NilCoxeter<Rational> nc(a);
  const auto& rs = a.roots();
  auto w = GroupElement::from_perm(rs, {2, 4, 1, 3});
  auto b = bracket_matrix(nc, {GroupElement::identity(rs), w});
  CHECK(b.perms.size() == 2);
  CHECK(b.match);
  CHECK(b.engine[0][0] == Rational(1));
  CHECK(b.engine[0][1] == Rational(1));
  // overlapping T sets: y_w y_{w^-1} vanishes, so the closed form does not apply
  CHECK_FALSE(bracket_matrix(nc, {w, w.inverse()}).match);
}

TEST_CASE("commuting cofactors in S3") {
  Algebra<Rational> a(typeA(2));
  a.build();
  const auto& rs = a.roots();
  int x1 = rs.simple(0), x2 = rs.simple(1);
  auto wit = find_commuting_cofactors(a, Word{x1}, Word{x2}, {x1}, {x2}, 4);
  REQUIRE(wit.has_value());
  CHECK(wit->y.size() + wit->ybar.size() <= 2);
  auto l = a.project(Word{wit->y[0], x1, x2});
  auto r = a.project(Word{wit->ybar[0], x2, x1});
  CHECK(scaled(r, wit->lambda) == l);
  CHECK_FALSE(l.empty());
}
