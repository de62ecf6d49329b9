#include "doctest.h"

#include "ccg/oracle.hpp"

using namespace ccg;

TEST_CASE("oracle enumeration matches group orders") {
  struct Case {
    const char* name;
    int n, q;
  };
  for (auto c : {Case{"GL", 2, 3}, {"SL", 2, 3}, {"Sp", 4, 2}, {"U", 2, 2}, {"SU", 3, 2}, {"O", 3, 3}, {"SO", 3, 3},
                 {"Omega", 3, 3}, {"O+", 4, 2}, {"Omega+", 4, 2}, {"Omega-", 4, 2}, {"O-", 4, 3}, {"Omega+", 4, 3},
                 {"Omega-", 2, 3}, {"GL", 3, 2}}) {
    auto g = make_group(c.name, c.n, c.q);
    auto e = enumerate_group(g);
    CHECK_MESSAGE(BigInt(e.size()) == group_order(g), g.name());
    for (size_t i = 0; i < e.size(); i += 1 + e.size() / 50) CHECK(contains(g, e.element(i)));
  }
}

TEST_CASE("oracle class counts") {
  CHECK(brute_classes(enumerate_group(make_group("SL", 2, 3))).size() == 7);
  CHECK(brute_classes(enumerate_group(make_group("GL", 2, 2))).size() == 3);
  CHECK(brute_classes(enumerate_group(make_group("GL", 2, 3))).size() == 8);
  CHECK(brute_classes(enumerate_group(make_group("Sp", 2, 3))).size() == 7);
  auto om = enumerate_group(make_group("Omega+", 2, 5));
  CHECK(brute_classes(om).size() == om.size());
}

TEST_CASE("oracle centralizers satisfy orbit-stabilizer") {
  auto g = enumerate_group(make_group("Sp", 2, 3));
  auto cls = brute_classes(g);
  size_t total = 0;
  for (auto& c : cls) {
    Matrix x = g.element(c.front());
    CHECK(brute_centralizer(g, x).size() * c.size() == g.size());
    total += c.size();
    Matrix y = g.element(c.back());
    auto z = brute_conjugator(g, x, y);
    REQUIRE(z);
    CHECK(conj(x, *z) == y);
  }
  CHECK(total == g.size());
  CHECK(brute_centralizer(g, Matrix::identity(2, g.spec().F)).size() == g.size());
  CHECK_FALSE(brute_conjugator(g, Matrix::identity(2, g.spec().F), unipotent_jordan(2, g.spec().F)));
}

TEST_CASE("oracle generator sets generate") {
  auto g = enumerate_group(make_group("SO-", 4, 3));
  std::vector<Matrix> gens;
  for (auto i : g.generators()) gens.push_back(g.element(i));
  CHECK(closure_order(gens, 4, g.spec().F, 1'000'000) == g.size());
}
