#include "doctest.h"

#include "ccg/centralizers.hpp"
#include "ccg/classes.hpp"
#include "ccg/oracle.hpp"

using namespace ccg;

namespace {

const ClassRep& by_label(const ClassTable& t, const std::string& name) {
  auto k = t.find(name);
  REQUIRE(k);
  return t.classes()[*k];
}

}  // namespace

TEST_CASE("spot centralizer orders") {
  auto gl = make_group("GL", 4, 2);
  Matrix j = direct_sum({unipotent_jordan(2, gl.F), unipotent_jordan(2, gl.F)});
  CHECK(centralizer(j, gl).order == 96);
  CHECK(gl_unipotent_centralizer(j).order == 96);

  auto sp = make_group("Sp", 2, 3);
  CHECK(centralizer(unipotent_jordan(2, sp.F), sp).order == 6);

  auto om = make_group("O-", 2, 3);
  ClassTable t(om);
  const auto& c = by_label(t, "t^2+1:[1]");
  CHECK(elementary_divisors(c.rep) == elementary_divisors(companion({1, 0, 1}, om.F)));
  CHECK(centralizer(c.rep, t).order == 4);

  auto sp5 = make_group("Sp", 2, 5);
  Matrix d = Matrix::from_rows({{2, 0}, {0, 3}}, sp5.F);
  REQUIRE(contains(sp5, d));
  CHECK(centralizer(d, sp5).order == 4);
}

TEST_CASE("centralizer orders and generators agree with brute force") {
  for (auto [name, n, q] : {std::tuple{"SL", 3, 2}, {"Sp", 4, 2}, {"SU", 2, 3}, {"Omega", 3, 3}, {"O+", 4, 3},
                            {"Omega-", 4, 2}}) {
    auto spec = make_group(name, n, q);
    ClassTable t(spec);
    auto G = enumerate_group(spec);
    for (auto& c : t.classes()) {
      CAPTURE(spec.name());
      CAPTURE(c.name);
      auto d = centralizer(c.rep, t);
      auto brute = brute_centralizer(G, c.rep).size();
      CHECK(d.order == brute);
      CHECK(d.verified);
      for (auto& g : d.generators) {
        CHECK(contains(spec, g));
        CHECK(g * c.rep == c.rep * g);
      }
      auto closure = closure_order(d.generators, n, spec.F, G.size());
      REQUIRE(closure);
      CHECK(*closure == brute);
      CHECK(generated_order(d.generators, kClosureCap) == brute);
    }
  }
}

TEST_CASE("orbit-stabilizer holds for the formula") {
  auto spec = make_group("U", 3, 2);
  ClassTable t(spec);
  for (auto& c : t.classes()) CHECK(c.size * c.centralizer_order == t.order());
}

TEST_CASE("structure of a unipotent centralizer") {
  auto sp = make_group("Sp", 2, 3);
  auto d = unipotent_centralizer(unipotent_jordan(2, sp.F), sp);
  CHECK(d.radical_order == 3);
  BigInt reductive = 1;
  for (auto& f : d.factors) reductive *= f.order;
  CHECK(d.radical_order * reductive == d.ambient_order);
  CHECK_THROWS_AS(unipotent_centralizer(Matrix::scalar(2, 2, sp.F), sp), Error);
}

TEST_CASE("special linear centralizer") {
  auto sl = make_group("SL", 2, 5);
  auto d = sl_centralizer(unipotent_jordan(2, sl.F));
  CHECK(d.order == 10);
  CHECK(d.ambient_order == 20);
}
