#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nichols/coxeter.hpp"

using namespace nichols;

namespace {

RootSystem typeA(int n) { return RootSystem(CartanData::of(Family::A, n)); }

std::set<std::string> names(const RootSystem& rs, const std::vector<int>& roots) {
  std::set<std::string> s;
  for (int i : roots) s.insert(rs.root_name(i));
  return s;
}

}  // namespace

TEST_CASE("positive roots of small systems") {
  auto a1 = typeA(1);
  CHECK(a1.num_positive() == 1);
  auto a2 = typeA(2);
  REQUIRE(a2.num_positive() == 3);
  CHECK(a2.root(0) == Root{1, 0});
  CHECK(a2.root(1) == Root{0, 1});
  CHECK(a2.root(2) == Root{1, 1});
  CHECK(typeA(5).num_positive() == 15);
  CHECK(RootSystem(CartanData::of(Family::D, 4)).num_positive() == 12);
  CHECK(RootSystem(CartanData::of(Family::E, 6)).num_positive() == 36);
  CHECK(RootSystem(CartanData::of(Family::E, 8)).num_positive() == 120);
}

TEST_CASE("invalid diagrams are rejected") {
  CartanData c = CartanData::of(Family::A, 3);
  c.adjacency[0][2] = c.adjacency[2][0] = true;  // triangle
  CHECK_THROWS(RootSystem(c));
  CHECK_THROWS(CartanData::parse("B", 3));
  CHECK_THROWS(CartanData::of(Family::D, 3));
}

TEST_CASE("reflections") {
  auto a2 = typeA(2);
  CHECK(a2.reflect(0, pos_root(1)) == pos_root(2));
  CHECK(a2.reflect(0, pos_root(0)) == -pos_root(0));
  CHECK(a2.reflect(2, pos_root(0)) == -pos_root(1));
  auto a4 = typeA(4);
  for (int t = 0; t < a4.num_positive(); ++t)
    for (int i = 0; i < a4.num_positive(); ++i) {
      CHECK(a4.reflect(t, a4.reflect(t, pos_root(i))) == pos_root(i));
      int ip = a4.inner(i, t);
      CHECK((ip >= -1 && ip <= 2));
      CHECK(a4.height(i) >= 1);
    }
}

TEST_CASE("lengths, longest element and one-line notation") {
  auto a2 = typeA(2);
  auto wo = GroupElement::longest(a2);
  CHECK(wo.length() == 3);
  auto a3 = typeA(3);
  CHECK(GroupElement::longest(a3).to_perm(a3) == std::vector<int>{4, 3, 2, 1});
  CHECK(GroupElement::longest(a3).length() == a3.num_positive());
  auto g = GroupElement::from_perm(a3, {2, 4, 1, 3});
  CHECK(g.to_perm(a3) == std::vector<int>{2, 4, 1, 3});
  CHECK(g.length() == 3);
  CHECK(g.inverse().length() == 3);
  CHECK((g * g.inverse()).is_identity());
}

TEST_CASE("reduced words reproduce random elements") {
  auto a5 = typeA(5);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> k(0, 4), len(0, 20);
  for (int t = 0; t < 1000; ++t) {
    std::vector<int> w;
    for (int i = len(rng); i > 0; --i) w.push_back(k(rng));
    auto g = GroupElement::from_word(a5, w);
    auto rw = g.reduced_word(a5);
    CHECK(static_cast<int>(rw.size()) == g.length());
    CHECK(GroupElement::from_word(a5, rw) == g);
    CHECK(GroupElement::from_perm(a5, g.to_perm(a5)) == g);
  }
}

TEST_CASE("descents match negative images") {
  auto a3 = typeA(3);
  for (const auto& w : enumerate_group(a3))
    for (int i = 0; i < a3.num_positive(); ++i) {
      auto ws = w * GroupElement::reflection(a3, i);
      CHECK((ws.length() < w.length()) == (w.act(pos_root(i)) < 0));
    }
}

TEST_CASE("centraliser of w_o in S6 and the mirror criterion") {
  auto a5 = typeA(5);
  auto wo = GroupElement::longest(a5);
  auto w1 = GroupElement::from_perm(a5, {2, 4, 1, 6, 3, 5});
  auto w2 = GroupElement::from_perm(a5, {3, 1, 5, 2, 6, 4});
  CHECK(w1 * wo == wo * w1);
  CHECK(w2 * wo == wo * w2);
  CHECK(w1.inverse() == w2);
  for (const auto& w : enumerate_group(typeA(3))) {
    auto rs = typeA(3);
    auto p = w.to_perm(rs);
    bool mirror = true;
    for (int i = 0; i < 4; ++i) mirror = mirror && p[i] + p[3 - i] == 5;
    auto w0 = GroupElement::longest(rs);
    CHECK(mirror == (w * w0 == w0 * w));
  }
}

TEST_CASE("T sets") {
  auto a5 = typeA(5);
  CHECK(t_set(a5, GroupElement::identity(a5)) == std::vector<int>{0, 1, 2, 3, 4});
  auto w1 = GroupElement::from_perm(a5, {2, 4, 1, 6, 3, 5});
  CHECK(names(a5, t_set(a5, w1)) == std::set<std::string>{"(24)", "(14)", "(16)", "(36)", "(35)"});
  auto w2 = GroupElement::from_perm(a5, {3, 1, 5, 2, 6, 4});
  CHECK(names(a5, t_set(a5, w2)) == std::set<std::string>{"(13)", "(15)", "(25)", "(26)", "(46)"});
  auto wo = GroupElement::longest(a5);
  for (const auto& w : {w1, w2}) {
    CHECK(t_set(a5, w * wo) == t_set(a5, w));
    CHECK(t_set(a5, wo * w) == t_set(a5, w));
  }
}

TEST_CASE("Bruhat order") {
  auto a2 = typeA(2);
  auto all = enumerate_group(a2);
  auto e = GroupElement::identity(a2);
  auto wo = GroupElement::longest(a2);
  for (const auto& u : all) {
    CHECK(bruhat_leq(a2, e, u));
    CHECK(bruhat_leq(a2, u, wo));
    CHECK(bruhat_leq(a2, u, u));
  }
  auto s1 = GroupElement::simple_reflection(a2, 0), s2 = GroupElement::simple_reflection(a2, 1);
  CHECK_FALSE(bruhat_leq(a2, s1, s2));
  CHECK(bruhat_leq(a2, s1, s2 * s1));
  // antisymmetry and transitivity over S4
  auto a3 = typeA(3);
  auto g = enumerate_group(a3);
  int comparable = 0;
  for (const auto& u : g)
    for (const auto& v : g) {
      bool uv = bruhat_leq(a3, u, v), vu = bruhat_leq(a3, v, u);
      if (uv && vu) CHECK(u == v);
      comparable += uv;
    }
  CHECK(comparable > 24);
}

TEST_CASE("exponents") {
  CHECK(exponent(typeA(1)) == 2);
  CHECK(exponent(typeA(2)) == 6);
  CHECK(exponent(typeA(3)) == 12);
  CHECK(enumerate_group(typeA(4)).size() == 120);
}
