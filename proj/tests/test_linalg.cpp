#include <doctest.h>

#include <random>

#include "nichols/linalg.hpp"

using namespace nichols;

namespace {

template <class F>
SparseMatrix<F> from_rows(const std::vector<std::vector<long>>& rows) {
  SparseMatrix<F> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(static_cast<int>(i), static_cast<int>(j), F(rows[i][j]));
  return m;
}

template <class F>
SparseMatrix<F> random_matrix(std::mt19937_64& rng, int r, int c, int bound) {
  SparseMatrix<F> m(r, c);
  std::uniform_int_distribution<int> d(-bound, bound);
  std::bernoulli_distribution keep(0.4);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (keep(rng)) m.set(i, j, F(d(rng)));
  return m;
}

}  // namespace

TEST_CASE("kernel of the zero and identity matrices") {
  auto z = from_rows<Rational>({{0, 0}, {0, 0}});
  CHECK(kernel_basis(z).size() == 2);
  auto id = from_rows<Rational>({{1, 0}, {0, 1}});
  CHECK(kernel_basis(id).empty());
}

TEST_CASE("rank one 2x2 kernel is proportional to (-2,1)") {
  auto m = from_rows<Rational>({{1, 2}, {2, 4}});
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  auto d = to_dense(k[0], 2);
  CHECK(d[0] == Rational(-2) * d[1]);
  CHECK(rank(m) == 1);
}

TEST_CASE("rank of identity and zero") {
  SparseMatrix<Rational> id(5, 5);
  for (int i = 0; i < 5; ++i) id.set(i, i, Rational(1));
  CHECK(rank(id) == 5);
  CHECK(rank(SparseMatrix<Rational>(4, 3)) == 0);
}

TEST_CASE("in_span examples") {
  std::vector<SVec<Rational>> basis{{{0, Rational(1)}}, {{1, Rational(1)}}};
  auto w = in_span(SVec<Rational>{{0, Rational(1)}}, basis, 3);
  REQUIRE(w);
  CHECK(to_dense(*w, 2) == std::vector<Rational>{Rational(1), Rational(0)});
  auto z = in_span(SVec<Rational>{}, basis, 3);
  REQUIRE(z);
  CHECK(z->empty());
  CHECK_FALSE(in_span(SVec<Rational>{{2, Rational(1)}}, basis, 3));
  CHECK_THROWS_AS(in_span(SVec<Rational>{{5, Rational(1)}}, basis, 3), std::invalid_argument);
}

TEST_CASE("random matrices: kernels vanish, rank is transpose invariant, nullity adds up") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(1, 8);
  for (int t = 0; t < 500; ++t) {
    int r = dim(rng), c = dim(rng);
    auto m = random_matrix<Rational>(rng, r, c, 4);
    auto ker = kernel_basis(m);
    for (const auto& k : ker) CHECK(m.apply(k).empty());
    int rk = rank(m);
    CHECK(rk == rank(m.transpose()));
    CHECK(rk + static_cast<int>(ker.size()) == c);
    CHECK(rank(SparseMatrix<Rational>{}) == 0);
  }
}

TEST_CASE("rational rank bounds prime rank") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    auto mq = random_matrix<Rational>(rng, 50, 50, 3);
    SparseMatrix<ModP> mp(50, 50);
    for (int i = 0; i < 50; ++i)
      for (const auto& [j, x] : mq.row[i]) mp.set(i, j, ModP(x.get_num().get_si()));
    CHECK(rank(mq) >= rank(mp));
  }
}

TEST_CASE("witness reproduces the vector") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    auto m = random_matrix<Rational>(rng, 4, 6, 3);
    SVec<Rational> v;
    v = axpy(v, Rational(2), m.row[0]);
    v = axpy(v, Rational(-1, 3), m.row[3]);
    auto w = in_span(v, m.row, 6);
    REQUIRE(w);
    SVec<Rational> back;
    for (const auto& [i, c] : *w) back = axpy(back, c, m.row[i]);
    CHECK(back == v);
  }
}

TEST_CASE("mod p arithmetic and inverse") {
  ModP a(5), b(-3);
  CHECK((a + b).value() == 2);
  CHECK((a * a.inverse()).value() == 1);
  CHECK(parse_scalar<ModP>("1/2") * ModP(2) == ModP(1));
  std::vector<std::vector<Rational>> m{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
  auto inv = inverse(m);
  CHECK(inv[0][0] == Rational(1));
  CHECK(inv[0][1] == Rational(-1));
  CHECK(inv[1][1] == Rational(2));
}
