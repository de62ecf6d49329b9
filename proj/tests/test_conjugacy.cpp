#include "doctest.h"

#include <random>

#include "ccg/centralizers.hpp"
#include "ccg/conjugacy.hpp"
#include "ccg/oracle.hpp"

using namespace ccg;

TEST_CASE("conjugator witnesses are sound") {
  std::mt19937 rng(3);
  for (auto [name, n, q] : {std::tuple{"SL", 2, 5}, {"Omega", 3, 3}, {"Sp", 4, 2}, {"SU", 3, 2}, {"Omega+", 4, 3},
                            {"SO-", 4, 3}, {"GL", 3, 3}}) {
    auto spec = make_group(name, n, q);
    ClassTable t(spec);
    auto G = enumerate_group(spec);
    for (int i = 0; i < 25; ++i) {
      Matrix x = G.element(rng() % G.size()), z = G.element(rng() % G.size());
      Matrix y = inverse(z) * x * z;
      auto c = conjugator(x, y, t, i);
      CAPTURE(spec.name());
      REQUIRE(c.conjugate);
      REQUIRE(c.witness);
      CHECK(contains(spec, *c.witness));
      CHECK(inverse(*c.witness) * x * *c.witness == y);
    }
  }
}

TEST_CASE("representatives of distinct classes are not conjugate") {
  for (auto [name, n, q] : {std::tuple{"SL", 2, 5}, {"Omega-", 4, 2}, {"Sp", 2, 3}, {"SO+", 4, 3}}) {
    auto spec = make_group(name, n, q);
    ClassTable t(spec);
    auto G = enumerate_group(spec);
    const auto& cls = t.classes();
    for (size_t i = 0; i < cls.size(); ++i)
      for (size_t j = 0; j < cls.size(); ++j) {
        auto c = conjugator(cls[i].rep, cls[j].rep, t);
        CHECK(c.conjugate == (i == j));
        if (i != j) CHECK(c.reason.find("labels differ") == 0);
        if (i != j && (i + j) % 5 == 0) CHECK_FALSE(brute_conjugator(G, cls[i].rep, cls[j].rep));
      }
  }
}

TEST_CASE("is_conjugate agrees with labels and is equivariant") {
  std::mt19937 rng(11);
  auto spec = make_group("SU", 3, 2);
  ClassTable t(spec);
  auto G = enumerate_group(spec);
  for (int i = 0; i < 40; ++i) {
    Matrix x = G.element(rng() % G.size()), y = G.element(rng() % G.size()), g = G.element(rng() % G.size());
    bool c = is_conjugate(x, y, t).conjugate;
    CHECK(c == (class_invariant(x, t) == class_invariant(y, t)));
    CHECK(c == is_conjugate(inverse(g) * x * g, inverse(g) * y * g, t).conjugate);
    CHECK(c == brute_conjugator(G, x, y).has_value());
  }
}

TEST_CASE("unipotent conjugator") {
  auto spec = make_group("Sp", 2, 3);
  ClassTable t(spec);
  Matrix u = unipotent_jordan(2, spec.F);
  auto same = unipotent_conjugator(u, u, t);
  CHECK(same.conjugate);
  Matrix v = Matrix::from_rows({{1, 2}, {0, 1}}, spec.F);
  CHECK_FALSE(unipotent_conjugator(u, v, t).conjugate);
  Matrix g = Matrix::from_rows({{1, 0}, {1, 1}}, spec.F);
  auto c = unipotent_conjugator(u, inverse(g) * u * g, t);
  REQUIRE(c.conjugate);
  CHECK(inverse(*c.witness) * u * *c.witness == inverse(g) * u * g);
  CHECK_THROWS_AS(unipotent_conjugator(Matrix::scalar(2, 2, spec.F), u, t), Error);
}

TEST_CASE("conjugator rejects non-members") {
  auto spec = make_group("SL", 2, 3);
  Matrix x = Matrix::from_rows({{1, 0}, {0, 2}}, spec.F);
  CHECK_THROWS_AS(conjugator(x, x, spec), Error);
}

TEST_CASE("ambient conjugator in the isometry group") {
  auto spec = make_group("Omega+", 4, 3);
  auto G = enumerate_group(make_group("O+", 4, 3));
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    Matrix x = G.element(rng() % G.size()), z = G.element(rng() % G.size());
    Matrix y = inverse(z) * x * z;
    auto w = ambient_conjugator(x, y, spec);
    REQUIRE(w);
    CHECK(is_isometry(*w, spec.form));
    CHECK(x * *w == *w * y);
  }
}
