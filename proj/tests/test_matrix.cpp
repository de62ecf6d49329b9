#include "doctest.h"

#include <random>

#include "ccg/matrix.hpp"

using namespace ccg;

namespace {

Matrix random_invertible(const FieldPtr& F, int n, std::mt19937& rng) {
  while (true) {
    Matrix m(n, n, F);
    for (auto& v : m.a) v = rng() % F->size();
    if (det(m)) return m;
  }
}

}  // namespace

TEST_CASE("elementary divisor examples") {
  auto F2 = Field::make(2, 1), F3 = Field::make(3, 1);
  CHECK(elementary_divisors(Matrix::identity(3, F2)) == EDList{{{1, 1}, 1, 3}});
  Matrix j = direct_sum({unipotent_jordan(2, F3), unipotent_jordan(2, F3)});
  CHECK(elementary_divisors(j) == EDList{{{2, 1}, 2, 2}});
  CHECK(elementary_divisors(companion({1, 0, 1}, F3)) == EDList{{{1, 0, 1}, 1, 1}});
  CHECK_THROWS_AS(elementary_divisors(Matrix(2, 2, F3)), Error);
}

TEST_CASE("Jordan form of a companion matrix") {
  auto F2 = Field::make(2, 1);
  auto jd = jordan_form(companion({1, 0, 1}, F2));
  Matrix expect(2, 2, F2);
  expect.a = {1, 1, 0, 1};
  CHECK(jd.J == expect);
}

TEST_CASE("Jordan form is a similarity invariant") {
  std::mt19937 rng(11);
  for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    auto F = Field::make(p, k);
    for (int t = 0; t < 40; ++t) {
      int n = 1 + rng() % 5;
      Matrix x = random_invertible(F, n, rng);
      if (t % 3 == 0) x = direct_sum({unipotent_jordan(2, F), Matrix::identity(n, F)}) ;
      Matrix g = random_invertible(F, x.r, rng);
      auto a = jordan_form(x), b = jordan_form(conj(x, g));
      CHECK(a.P * x * inverse(a.P) == a.J);
      CHECK(a.J == b.J);
      auto z = gl_conjugator(x, conj(x, g));
      REQUIRE(z);
      CHECK(conj(x, *z) == conj(x, g));
    }
  }
}

TEST_CASE("GL conjugator rejects different divisors") {
  auto F3 = Field::make(3, 1);
  CHECK_FALSE(gl_conjugator(unipotent_jordan(2, F3), Matrix::identity(2, F3)));
  CHECK(gl_conjugator(unipotent_jordan(2, F3), unipotent_jordan(2, F3))->is_identity());
}

TEST_CASE("GL conjugator decision matches exhaustive pairing on GL(2,2) and GL(2,3)") {
  for (int p : {2, 3}) {
    auto F = Field::make(p, 1);
    std::vector<Matrix> all;
    int q = p, N = q * q * q * q;
    for (int code = 0; code < N; ++code) {
      Matrix m(2, 2, F);
      int v = code;
      for (auto& e : m.a) {
        e = v % q;
        v /= q;
      }
      if (det(m)) all.push_back(m);
    }
    std::mt19937 rng(2);
    for (int t = 0; t < 200; ++t) {
      const Matrix& x = all[rng() % all.size()];
      const Matrix& y = all[rng() % all.size()];
      bool brute = false;
      for (auto& g : all)
        if (g * y == x * g) {
          brute = true;
          break;
        }
      auto z = gl_conjugator(x, y);
      CHECK(brute == z.has_value());
      if (z) CHECK(conj(x, *z) == y);
    }
  }
}

TEST_CASE("Jordan decomposition") {
  std::mt19937 rng(5);
  for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    auto F = Field::make(p, k);
    for (int t = 0; t < 30; ++t) {
      Matrix x = random_invertible(F, 1 + rng() % 4, rng);
      auto [s, u] = jordan_decomposition(x);
      CHECK(s * u == x);
      CHECK(u * s == x);
      Matrix nu = u - Matrix::identity(x.r, F);
      CHECK(power(nu, x.r).is_zero());
      // s is semisimple: its minimal polynomial is squarefree, so s^(q^N) = s
      CHECK(semisimple_part(s) == s);
    }
  }
}

TEST_CASE("Jordan decomposition of a block over a companion matrix") {
  auto F = Field::make(2, 1);
  Matrix x = jordan_block({1, 1, 1}, 2, F);
  auto [s, u] = jordan_decomposition(x);
  Matrix C = companion({1, 1, 1}, F);
  CHECK(s == direct_sum({C, C}));
  Matrix expect = Matrix::identity(4, F);
  set_block(expect, 0, 2, inverse(C));
  CHECK(u == expect);
}

TEST_CASE("extension embedding") {
  auto F2 = Field::make(2, 1);
  Poly f{1, 1, 1};
  auto E = Field::extension(F2, f);
  Matrix lam(1, 1, E);
  lam(0, 0) = 2;
  CHECK(embed_ext(lam, f) == companion(f, F2));
  CHECK(embed_ext(Matrix::identity(2, E), f).is_identity());
  std::mt19937 rng(9);
  for (int t = 0; t < 30; ++t) {
    Matrix a = random_invertible(E, 2, rng), b = random_invertible(E, 2, rng);
    CHECK(embed_ext(a * b, f) == embed_ext(a, f) * embed_ext(b, f));
    CHECK(*unembed(embed_ext(a, f), f, E) == a);
    Elt n = det(embed_ext(a, f));
    Elt da = det(a);
    CHECK(n == E->pow(da, 3));
  }
  Matrix bad = Matrix::identity(2, F2);
  bad(0, 1) = 1;
  CHECK_FALSE(unembed(bad, f, E));
}
