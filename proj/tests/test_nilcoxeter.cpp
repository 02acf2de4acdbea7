#include <doctest.h>

#include "nichols/nilcoxeter.hpp"

using namespace nichols;

namespace {

RootSystem typeA(int n) { return RootSystem(CartanData::of(Family::A, n)); }

bool centralizes_wo(const RootSystem& rs, const GroupElement& w) {
  auto wo = GroupElement::longest(rs);
  return w * wo == wo * w;
}

}  // namespace

TEST_CASE("nilCoxeter products") {
  auto rs = typeA(2);
  auto s1 = GroupElement::simple_reflection(rs, 0), s2 = GroupElement::simple_reflection(rs, 1);
  using N = NilCoxeterElement<Rational>;
  CHECK(nc_product(N::basis(s1), N::basis(s1)).terms.empty());
  CHECK(nc_product(N::basis(GroupElement::identity(rs)), N::basis(s2)).terms == N::basis(s2).terms);
  auto p = nc_product(N::basis(s1), N::basis(s2 * s1));
  REQUIRE(p.terms.size() == 1);
  CHECK(p.terms.begin()->first == GroupElement::longest(rs));
  // associativity over all triples in S3
  for (const auto& a : enumerate_group(rs))
    for (const auto& b : enumerate_group(rs))
      for (const auto& c : enumerate_group(rs)) {
        auto l = nc_product(nc_product(N::basis(a), N::basis(b)), N::basis(c));
        auto r = nc_product(N::basis(a), nc_product(N::basis(b), N::basis(c)));
        CHECK(l.terms == r.terms);
      }
}

TEST_CASE("embedding does not depend on the reduced word") {
  Algebra<Rational> a(typeA(2));
  NilCoxeter<Rational> nc(a);
  CHECK(nc.embed(GroupElement::identity(a.roots())) == a.one());
  CHECK(nc.embed_word({0, 1, 0}) == nc.embed_word({1, 0, 1}));
  CHECK(nc.embed_word({0, 1, 0}) == nc.embed(nc.longest()));
  CHECK(nc.embed_word({0, 0}).is_zero());

  Algebra<Rational> b(typeA(3));
  NilCoxeter<Rational> nb(b);
  CHECK(nb.embed_word({0, 2, 1, 0, 2}) == nb.embed_word({2, 0, 1, 2, 0}));
  CHECK(nb.embed_word({0, 1, 0, 2, 1, 0}) == nb.embed_word({2, 1, 2, 0, 1, 2}));
}

TEST_CASE("orthonormality <x_u, x_v> = delta(u, v^-1) and injectivity") {
  for (int r : {2, 3}) {
    Algebra<Rational> a(typeA(r));
    NilCoxeter<Rational> nc(a);
    const auto& g = nc.group();
    for (const auto& u : g)
      for (const auto& v : g) CHECK(a.pairing(nc.embed(u), nc.embed(v)) == Rational(u == v.inverse() ? 1 : 0));
    int total = 0;
    for (int l = 0; l <= nc.longest().length(); ++l) {
      std::vector<SVec<Rational>> vs;
      for (const auto& w : nc.of_length(l)) vs.push_back(nc.embed(w).component(l));
      SparseMatrix<Rational> m(static_cast<int>(vs.size()), a.dim(l));
      m.row = vs;
      total += rank(m);
    }
    CHECK(total == static_cast<int>(g.size()));
  }
}

TEST_CASE("w_o action and reversal on x_v") {
  Algebra<Rational> a(typeA(3));
  NilCoxeter<Rational> nc(a);
  const auto& wo = nc.longest();
  for (const auto& v : nc.group()) {
    Rational sign(v.length() % 2 ? -1 : 1);
    CHECK(a.act(wo, nc.embed(v)) == nc.embed(wo * v * wo) * sign);
    CHECK(a.rho(nc.embed(v)) == nc.embed(v.inverse()));
  }
}

TEST_CASE("skew elements") {
  for (int r : {2, 3}) {
    Algebra<Rational> a(typeA(r));
    NilCoxeter<Rational> nc(a);
    const auto& rs = a.roots();
    const auto& g = nc.group();
    for (const auto& w : g) {
      CHECK(nc.skew(w, w) == a.one());
      CHECK(nc.skew(w, GroupElement::identity(rs)) == nc.embed(w));
      for (const auto& v : g)
        if (!bruhat_leq(rs, v, w)) CHECK(nc.skew(w, v).is_zero());
    }
    // x_{w_o/v} = S-bar(x_{v w_o}) and w x_{w_o/v} starts with T_w for v != w_o
    const auto& wo = nc.longest();
    for (const auto& v : g) CHECK(nc.skew(wo, v) == a.s_bar(nc.embed(v * wo)));
    for (const auto& w : g) {
      auto T = t_set(rs, w);
      for (const auto& v : g) {
        if (v == wo) continue;
        auto z = a.act(w, nc.skew(wo, v));
        CHECK(a.starts_with_any(z, T));
      }
    }
  }
}

TEST_CASE("y elements") {
  for (int r : {1, 2, 3}) {
    Algebra<Rational> a(typeA(r));
    NilCoxeter<Rational> nc(a);
    const auto& rs = a.roots();
    const auto& wo = nc.longest();
    const int m = wo.length();
    CHECK(nc.y_element(GroupElement::identity(rs)) == nc.embed(wo));
    for (const auto& w : nc.group()) {
      if (!centralizes_wo(rs, w)) continue;
      auto y = nc.y_element(w);
      REQUIRE_FALSE(y.is_zero());
      CHECK(y.comp.begin()->first == m);
      CHECK(a.w_degree_of(y) == a.wdeg_id(w * wo * w.inverse()));
      CHECK(a.act(wo, y) == y * Rational(m % 2 ? -1 : 1));
      CHECK(a.rho(y) == y);
      CHECK(a.pairing(y, y) == Rational(1));
      auto T = t_set(rs, w);
      for (int g : T) {
        CHECK(a.starts_with(y, g));
        CHECK(a.ends_with(y, g));
      }
      CHECK(a.involves_only(y, T));
      // z y = 0 when z ends with T_w; y z = 0 when z starts with T_w
      for (int g : T)
        for (int b = 0; b < a.dim(1); ++b) {
          auto z = a.multiply(a.generator(b), a.generator(g));
          CHECK(a.multiply(z, y).is_zero());
          CHECK(a.multiply(y, a.multiply(a.generator(g), a.generator(b))).is_zero());
        }
    }
  }
}

TEST_CASE("S4 y element for 2413") {
  Algebra<Rational> a(typeA(3));
  NilCoxeter<Rational> nc(a);
  auto w = GroupElement::from_perm(a.roots(), {2, 4, 1, 3});
  REQUIRE(centralizes_wo(a.roots(), w));
  auto y = nc.y_element(w);
  CHECK_FALSE(y.is_zero());
  CHECK(y.comp.size() == 1);
  CHECK(y.comp.begin()->first == 6);
}
