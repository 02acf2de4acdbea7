#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nichols/disjoint.hpp"

using namespace nichols;

namespace {

RootSystem typeA(int n) { return RootSystem(CartanData::of(Family::A, n)); }

GroupElement perm(const RootSystem& rs, std::vector<int> p) { return GroupElement::from_perm(rs, p); }

std::set<std::string> block_names(const RootSystem& rs, const std::vector<int>& b) {
  std::set<std::string> s;
  for (int r : b) s.insert(rs.root_name(r));
  return s;
}

}  // namespace

TEST_CASE("centralizer of w_o") {
  for (int r = 1; r <= 5; ++r) {
    auto rs = typeA(r);
    auto cen = centralizer_of_longest(rs);
    const auto wo = GroupElement::longest(rs);
    std::vector<GroupElement> brute;
    for (const auto& w : enumerate_group(rs))
      if (w * wo == wo * w) brute.push_back(w);
    CHECK(cen == brute);
    CHECK(cen.front().is_identity());
  }
  auto s4 = typeA(3);
  auto c4 = centralizer_of_longest(s4);
  CHECK(std::count(c4.begin(), c4.end(), perm(s4, {2, 4, 1, 3})) == 1);
  CHECK(c4.size() == 8);
  auto s6 = typeA(5);
  auto c6 = centralizer_of_longest(s6);
  CHECK(c6.size() == 48);
  CHECK(std::count(c6.begin(), c6.end(), perm(s6, {2, 4, 1, 6, 3, 5})) == 1);
  CHECK(std::count(c6.begin(), c6.end(), perm(s6, {3, 1, 5, 2, 6, 4})) == 1);
  RootSystem d4(CartanData::of(Family::D, 4));
  CHECK(centralizer_of_longest(d4).size() == 192);
}

TEST_CASE("classify") {
  auto s6 = typeA(5);
  auto e = classify(s6, {});
  REQUIRE(e.valid());
  CHECK(e.system->order() == 0);

  auto w1 = perm(s6, {2, 4, 1, 6, 3, 5}), w2 = perm(s6, {3, 1, 5, 2, 6, 4});
  auto c = classify(s6, {GroupElement::identity(s6), w1, w2});
  REQUIRE(c.valid());
  const auto& d = *c.system;
  CHECK(d.order() == 3);
  CHECK(d.normalized);
  CHECK(d.complete);
  CHECK(w1.inverse() == w2);
  CHECK(block_names(s6, d.blocks[1]) == std::set<std::string>{"(24)", "(14)", "(16)", "(36)", "(35)"});
  CHECK(block_names(s6, d.blocks[2]) == std::set<std::string>{"(13)", "(15)", "(25)", "(26)", "(46)"});
  CHECK(block_names(s6, d.blocks[0]) == std::set<std::string>{"(12)", "(23)", "(34)", "(45)", "(56)"});
  // conjugation by w1 permutes the three blocks
  for (const auto& g : {w1, w2}) {
    std::set<std::vector<int>> before(d.blocks.begin(), d.blocks.end()), after;
    for (const auto& b : d.blocks) {
      std::vector<int> img;
      for (int t : b) img.push_back(root_index(g.act(pos_root(t))));
      std::sort(img.begin(), img.end());
      after.insert(img);
    }
    CHECK(before == after);
  }

  auto s3 = typeA(2);
  auto bad = classify(s3, {GroupElement::identity(s3), GroupElement::simple_reflection(s3, 0)});
  REQUIRE_FALSE(bad.valid());
  CHECK(bad.violation->kind == DisjointViolation::Kind::not_centralizing);
  auto wo = GroupElement::longest(s3);
  auto ov = classify(s3, {GroupElement::identity(s3), wo});
  REQUIRE_FALSE(ov.valid());
  CHECK(ov.violation->kind == DisjointViolation::Kind::overlap);
  CHECK(ov.to_json(s3)["witness"]["shared_root"] == "(12)");
}

TEST_CASE("translation and normalization") {
  auto s6 = typeA(5);
  auto w1 = perm(s6, {2, 4, 1, 6, 3, 5}), w2 = perm(s6, {3, 1, 5, 2, 6, 4});
  auto d = *classify(s6, {GroupElement::identity(s6), w1, w2}).system;
  auto t = translate(s6, d, w1);
  CHECK(t.order() == 3);
  CHECK(t.complete);
  auto n = normalize(s6, t);
  CHECK(n.normalized);
  CHECK_THROWS(translate(s6, d, GroupElement::simple_reflection(s6, 0)));
}

TEST_CASE("complete systems") {
  CHECK(search_complete(typeA(2)).empty());
  CHECK(search_complete(typeA(4)).empty());
  auto s2 = search_complete(typeA(1));
  REQUIRE(s2.size() == 1);
  CHECK(s2[0].order() == 1);

  auto s4rs = typeA(3);
  auto s4 = search_complete(s4rs);
  REQUIRE_FALSE(s4.empty());
  for (const auto& d : s4) {
    CHECK(d.order() == 2);
    CHECK(d.complete);
    CHECK(d.normalized);
  }
  bool has = false;
  for (const auto& d : s4) has = has || d.elements[1] == perm(s4rs, {2, 4, 1, 3});
  CHECK(has);

  auto s6rs = typeA(5);
  auto s6 = search_complete(s6rs);
  REQUIRE_FALSE(s6.empty());
  std::vector<GroupElement> golden{GroupElement::identity(s6rs), perm(s6rs, {2, 4, 1, 6, 3, 5}),
                                   perm(s6rs, {3, 1, 5, 2, 6, 4})};
  bool found = false;
  for (const auto& d : s6) found = found || d.elements == golden;
  CHECK(found);
  CHECK(search_complete(s6rs).size() == s6.size());
  CHECK(check_translation_closure(s4rs, s4).pass);
  CHECK(check_translation_closure(s6rs, s6).pass);
}

TEST_CASE("T sets") {
  for (int r = 2; r <= 5; ++r) CHECK(check_fact_t(typeA(r)).pass);
  for (int r : {3, 4}) {
    auto rep = check_remark_t(typeA(r));
    CHECK(rep.pass);
    CHECK(rep.trials * 2 == static_cast<long long>(enumerate_group(typeA(r)).size()));
  }
}

TEST_CASE("integrality equivalences") {
  {
    Algebra<Rational> a(typeA(1));
    NilCoxeter<Rational> nc(a);
    auto d = search_complete(a.roots()).front();
    MotivValues v;
    auto rep = motiv_check(nc, d, {0}, &v);
    CHECK(rep.pass);
    CHECK(v.product_integral);
    CHECK(v.all_orderings);
    CHECK(v.skew_commute);
  }
  Algebra<Rational> a(typeA(3));
  NilCoxeter<Rational> nc(a);
  auto systems = search_complete(a.roots());
  std::mt19937_64 rng(5);
  for (const auto& d : systems) {
    for (int t = 0; t < 20; ++t) {
      std::vector<int> ord{0, 1};
      std::shuffle(ord.begin(), ord.end(), rng);
      MotivValues v;
      auto rep = motiv_check(nc, d, ord, &v);
      CHECK(rep.pass);
      CHECK(v.consistent());
      CHECK(v.product_integral);
      CHECK(v.skew_commute);
    }
  }
  auto y = a.multiply(nc.y_element(systems[0].elements[0]), nc.y_element(systems[0].elements[1]));
  CHECK(y.comp.begin()->first == 12);
}
