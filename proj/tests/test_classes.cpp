#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "ccg/centralizers.hpp"
#include "ccg/classes.hpp"
#include "ccg/oracle.hpp"

using namespace ccg;

namespace {

BigInt size_sum(const ClassTable& t) {
  BigInt s = 0;
  for (auto& c : t.classes()) s += c.size;
  return s;
}

size_t count_with_partition(const ClassTable& t, const std::string& parts) {
  size_t k = 0;
  for (auto& c : t.classes())
    if (is_unipotent(c.rep) && to_string(c.label.atoms[0].uni.parts) == parts) ++k;
  return k;
}

}  // namespace

TEST_CASE("class counts agree with brute force") {
  for (auto [name, n, q] : {std::tuple{"GL", 2, 3}, {"SL", 2, 3}, {"Sp", 2, 3}, {"O", 3, 3}, {"Omega-", 4, 2},
                            {"SU", 3, 2}, {"SO+", 4, 3}, {"U", 2, 2}}) {
    auto spec = make_group(name, n, q);
    ClassTable t(spec);
    auto G = enumerate_group(spec);
    CAPTURE(spec.name());
    CHECK(t.classes().size() == brute_classes(G).size());
    CHECK(size_sum(t) == G.size());
  }
}

TEST_CASE("documented class counts") {
  CHECK(list_classes(make_group("GL", 2, 3)).size() == 8);
  CHECK(list_classes(make_group("Sp", 2, 3)).size() == 7);
  CHECK(list_classes(make_group("SL", 2, 3)).size() == 7);
  CHECK(list_classes(make_group("GL", 2, 2)).size() == 3);
  CHECK(list_classes(make_group("Omega+", 2, 3)).size() == 1);
}

TEST_CASE("representatives are members and pairwise non-conjugate") {
  auto spec = make_group("Sp", 4, 2);
  ClassTable t(spec);
  auto G = enumerate_group(spec);
  std::set<size_t> seen;
  for (auto& c : t.classes()) {
    CHECK(contains(spec, c.rep));
    auto idx = G.index(c.rep);
    REQUIRE(idx);
    for (auto& cl : brute_classes(G))
      if (std::binary_search(cl.begin(), cl.end(), *idx)) CHECK(seen.insert(cl[0]).second);
  }
}

TEST_CASE("labels are conjugation invariant") {
  std::mt19937 rng(7);
  for (auto [name, n, q] : {std::tuple{"SL", 2, 5}, {"Omega", 3, 3}, {"SU", 3, 2}, {"O-", 4, 2}}) {
    auto spec = make_group(name, n, q);
    ClassTable t(spec);
    auto G = enumerate_group(spec);
    for (int i = 0; i < 30; ++i) {
      Matrix x = G.element(rng() % G.size()), g = G.element(rng() % G.size());
      CHECK(class_invariant(x, t) == class_invariant(inverse(g) * x * g, t));
    }
  }
}

TEST_CASE("unipotent classes split in the special groups") {
  auto sl = ClassTable(make_group("SL", 2, 5));
  CHECK(count_with_partition(sl, "2") == 2);
  auto su = ClassTable(make_group("SU", 3, 2));
  CHECK(count_with_partition(su, "3") == 3);
  auto sp = ClassTable(make_group("Sp", 2, 3));
  size_t regular = 0;
  for (auto& c : sp.classes())
    if (is_unipotent(c.rep) && to_string(c.label.atoms[0].uni.parts) == "2") ++regular;
  CHECK(regular == 2);
}

TEST_CASE("filters select unipotent and semisimple classes") {
  auto spec = make_group("Sp", 4, 2);
  auto all = list_classes(spec), uni = unipotent_classes(spec), ss = semisimple_classes(spec);
  auto G = enumerate_group(spec);
  size_t brute_uni = 0, brute_ss = 0;
  for (auto& cl : brute_classes(G)) {
    Matrix x = G.element(cl[0]);
    Matrix d = x - Matrix::identity(4, spec.F);
    if (power(d, 4).is_zero()) ++brute_uni;
    if (power(x, 3 * 5) == Matrix::identity(4, spec.F)) ++brute_ss;
  }
  CHECK(uni.size() == brute_uni);
  CHECK(ss.size() == brute_ss);
  CHECK(uni.size() + ss.size() <= all.size() + 1);
}

TEST_CASE("class_of rejects non-members") {
  auto spec = make_group("Sp", 2, 3);
  ClassTable t(spec);
  Matrix x = Matrix::from_rows({{1, 0}, {0, 2}}, spec.F);
  CHECK_THROWS_AS(class_invariant(x, t), Error);
}
