#include "doctest.h"

#include <random>

#include "ccg/field.hpp"

using namespace ccg;

TEST_CASE("bar on F_4 sends the generator to its square") {
  auto F = Field::make(2, 2, true);
  CHECK(F->bar(0) == 0);
  CHECK(F->bar(1) == 1);
  Elt w = 2;
  CHECK(F->bar(w) == F->mul(w, w));
  CHECK(F->bar(w) == F->add(w, 1));
}

TEST_CASE("bar is an involutive automorphism") {
  for (auto [p, k] : {std::pair{2, 2}, {3, 2}, {2, 4}, {5, 2}}) {
    auto F = Field::make(p, k, true);
    std::mt19937 rng(1);
    for (int t = 0; t < 200; ++t) {
      Elt a = rng() % F->size(), b = rng() % F->size();
      CHECK(F->bar(F->bar(a)) == a);
      CHECK(F->bar(F->add(a, b)) == F->add(F->bar(a), F->bar(b)));
      CHECK(F->bar(F->mul(a, b)) == F->mul(F->bar(a), F->bar(b)));
    }
    int fixed = 0;
    for (Elt a = 0; a < F->size(); ++a) fixed += F->bar(a) == a;
    CHECK(fixed == F->fixed_size());
  }
}

TEST_CASE("field axioms on small fields") {
  for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {2, 3}, {3, 2}, {7, 1}, {2, 4}}) {
    auto F = Field::make(p, k);
    for (Elt a = 1; a < F->size(); ++a) CHECK(F->mul(a, F->inv(a)) == 1);
    for (Elt a = 0; a < F->size(); ++a) CHECK(F->add(a, F->neg(a)) == 0);
    CHECK(F->pow(F->primitive(), F->size() - 1) == 1);
  }
}

TEST_CASE("norm equation") {
  auto F = Field::make(3, 2, true);
  CHECK(solve_norm_equation(1, *F) == 1);
  Elt a = solve_norm_equation(2, *F);
  CHECK(F->mul(a, F->bar(a)) == 2);
  CHECK_THROWS_AS(solve_norm_equation(0, *F), Error);
  // exhaustive agreement: every nonzero element of F_3 is a norm
  for (Elt c = 1; c < 3; ++c) {
    bool found = false;
    for (Elt x = 1; x < 9; ++x) found |= F->mul(x, F->bar(x)) == c;
    CHECK(found);
  }
}

TEST_CASE("dual polynomial examples and laws") {
  auto F3 = Field::make(3, 1);
  CHECK(dual_polynomial({2, 1}, *F3) == Poly{2, 1});
  CHECK(dual_polynomial({2, 1, 1}, *F3) == Poly{2, 2, 1});
  CHECK(dual_polynomial({1, 0, 1}, *F3) == Poly{1, 0, 1});
  CHECK_THROWS_AS(dual_polynomial({0, 1}, *F3), Error);
  auto F = Field::make(2, 2, true);
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    Poly f{static_cast<Elt>(1 + rng() % 3), static_cast<Elt>(rng() % 4), 1};
    Poly g{static_cast<Elt>(1 + rng() % 3), 1};
    CHECK(dual_polynomial(dual_polynomial(f, *F), *F) == f);
    CHECK(dual_polynomial(poly::mul(*F, f, g), *F) == poly::mul(*F, dual_polynomial(f, *F), dual_polynomial(g, *F)));
  }
}

TEST_CASE("dual roots are inverse conjugates") {
  auto F = Field::make(3, 2, true);
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    Poly f{static_cast<Elt>(1 + rng() % 8), static_cast<Elt>(rng() % 9), 1};
    Poly g = dual_polynomial(f, *F);
    for (Elt x = 1; x < 9; ++x)
      if (poly::eval(*F, f, x) == 0) CHECK(poly::eval(*F, g, F->inv(F->bar(x))) == 0);
  }
}

TEST_CASE("phi classification") {
  auto F3 = Field::make(3, 1), F5 = Field::make(5, 1);
  CHECK(phi_classify({2, 1}, *F3).tag == PhiTag::Phi1);
  CHECK(phi_classify({1, 0, 1}, *F3).tag == PhiTag::Phi3);
  auto c = phi_classify({1, 0, 1}, *F5);
  CHECK(c.tag == PhiTag::Phi2);
  std::vector<Poly> pair{c.g, c.g_dual};
  std::sort(pair.begin(), pair.end());
  CHECK(pair == std::vector<Poly>{{2, 1}, {3, 1}});
  CHECK(phi_classify({1, 1}, *F3).tag == PhiTag::Phi1);
  CHECK(phi_classify({2, 1, 1}, *F3).tag == PhiTag::None);
}

TEST_CASE("factorization examples") {
  auto F5 = Field::make(5, 1), F2 = Field::make(2, 1);
  auto f = factorize({1, 0, 1}, *F5);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == std::pair<Poly, int>{{2, 1}, 1});
  CHECK(f[1] == std::pair<Poly, int>{{3, 1}, 1});
  CHECK(factorize({0, 0, 1}, *F2) == std::vector<std::pair<Poly, int>>{{{0, 1}, 2}});
  CHECK(factorize({1, 1, 1}, *F2) == std::vector<std::pair<Poly, int>>{{{1, 1, 1}, 1}});
}

TEST_CASE("factorization reproduces the polynomial") {
  for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    auto F = Field::make(p, k);
    std::mt19937 rng(7);
    for (int t = 0; t < 40; ++t) {
      int d = 1 + rng() % 7;
      Poly f(d + 1);
      for (auto& c : f) c = rng() % F->size();
      f[d] = 1;
      auto fac = factorize(f, *F);
      Poly prod{1};
      for (auto& [g, m] : fac) {
        CHECK(poly::is_irreducible(*F, g));
        prod = poly::mul(*F, prod, poly::power(*F, g, m));
      }
      CHECK(prod == f);
      for (size_t i = 1; i < fac.size(); ++i) CHECK(poly::less(fac[i - 1].first, fac[i].first));
    }
  }
}

TEST_CASE("irreducible counts match the necklace formula") {
  auto F2 = Field::make(2, 1), F3 = Field::make(3, 1), F4 = Field::make(2, 2);
  CHECK(poly::monic_irreducibles(*F2, 4).size() == 3);
  CHECK(poly::monic_irreducibles(*F3, 3).size() == 8);
  CHECK(poly::monic_irreducibles(*F4, 2).size() == 6);
}
