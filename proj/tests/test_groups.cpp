#include "doctest.h"

#include "ccg/groups.hpp"
#include "ccg/search.hpp"

using namespace ccg;

TEST_CASE("group orders") {
  CHECK(group_order(make_group("GL", 2, 3)) == 48);
  CHECK(group_order(make_group("Sp", 4, 3)) == 51840);
  CHECK(group_order(make_group("U", 2, 2)) == 18);
  CHECK(group_order(make_group("SL", 2, 3)) == 24);
  CHECK(group_order(make_group("O", 3, 3)) == 48);
  CHECK(group_order(make_group("O+", 4, 2)) == 72);
  CHECK(group_order(make_group("Omega-", 4, 2)) == 60);
  CHECK(group_order(make_group("SU", 3, 2)) == 216);
}

TEST_CASE("group names and validation") {
  CHECK(make_group("Omega+", 4, 3).name() == "Omega+(4,3)");
  CHECK_THROWS_AS(make_group("Sp", 3, 3), Error);
  CHECK_THROWS_AS(make_group("O+", 3, 3), Error);
  CHECK_THROWS_AS(make_group("GL", 2, 6), Error);
  CHECK_THROWS_AS(make_group("XY", 2, 3), Error);
}

TEST_CASE("membership of simple elements") {
  for (auto name : {"GL", "SL", "Sp", "U", "SU", "O+", "SO-", "Omega+"}) {
    auto g = make_group(name, 2, 3);
    CHECK(contains(g, Matrix::identity(2, g.F)));
  }
  auto sp = make_group("Sp", 2, 3);
  CHECK(contains(sp, unipotent_jordan(2, sp.F)));
  CHECK(contains(sp, Matrix::scalar(2, 2, sp.F)));
  auto o3 = make_group("O", 3, 3);
  Matrix m = Matrix::scalar(3, 2, o3.F);
  CHECK(contains(o3, m));
  CHECK_FALSE(contains(make_group("SO", 3, 3), m));
}

TEST_CASE("membership rule examples") {
  auto F3 = Field::make(3, 1);
  auto r = gl_class_admissible({{{1, 0, 1}, 1, 1}}, Family::O, *F3);
  CHECK(r.admissible);
  CHECK(r.allowed_types == std::vector<FormType>{FormType::Minus});
  CHECK_FALSE(gl_class_admissible({{{2, 1}, 2, 1}}, Family::O, *F3).admissible);
  CHECK_FALSE(gl_class_admissible({{{2, 1}, 1, 1}}, Family::Sp, *F3).admissible);
  CHECK(gl_class_admissible({{{2, 1}, 1, 2}}, Family::Sp, *F3).admissible);
  auto F2 = Field::make(2, 1);
  auto r6 = gl_class_admissible({{{1, 0, 0, 1, 0, 0, 1}, 1, 1}}, Family::O, *F2);
  CHECK(r6.admissible);
  CHECK(r6.allowed_types == std::vector<FormType>{FormType::Minus});
}

TEST_CASE("standard semisimple blocks") {
  auto F3 = Field::make(3, 1);
  auto b = standard_semisimple_block(phi_classify({1, 0, 1}, *F3), FormKind::Quadratic, F3);
  CHECK(b.x == companion({1, 0, 1}, F3));
  CHECK(b.form.gram == Matrix::identity(2, F3));
  CHECK(b.form.type == FormType::Minus);
  auto F5 = Field::make(5, 1);
  auto p = standard_semisimple_block(phi_classify({1, 0, 1}, *F5), FormKind::Alternating, F5);
  CHECK(is_isometry(p.x, p.form));
  CHECK(elementary_divisors(p.x).size() == 2);
  auto F4 = Field::make(2, 2, true);
  for (auto& f : poly::monic_irreducibles(*F4, 1)) {
    if (f[0] == 0) continue;
    auto c = phi_classify(f, *F4);
    if (c.tag == PhiTag::None) continue;
    auto blk = standard_semisimple_block(c, FormKind::Hermitian, F4);
    CHECK(is_isometry(blk.x, blk.form));
  }
}

TEST_CASE("search finds isometries in lexicographic order") {
  auto F3 = Field::make(3, 1);
  Form f = standard_form(FormKind::Alternating, 2, FormType::None, F3);
  SearchProblem p{f, f, AffineSpace::all(2, 2, F3)};
  int count = 0;
  Matrix prev;
  search_each(p, [&](const Matrix& z) {
    CHECK(is_isometry(z, f));
    if (count) CHECK(prev.a < z.a);
    prev = z;
    ++count;
    return true;
  });
  CHECK(count == 24);
  std::mt19937 rng(1);
  auto z = search_first(p, &rng);
  REQUIRE(z);
  CHECK(is_isometry(*z, f));
  p.node_limit = 3;
  CHECK_THROWS_AS(search_each(p, [](const Matrix&) { return true; }), Error);
}

TEST_CASE("search over quadratic forms and intertwiners") {
  auto F2 = Field::make(2, 1);
  Form q = standard_form(FormKind::Quadratic, 4, FormType::Minus, F2);
  SearchProblem p{q, q, AffineSpace::all(4, 4, F2)};
  int count = 0;
  search_each(p, [&](const Matrix&) {
    ++count;
    return true;
  });
  CHECK(count == 120);
  Matrix j = unipotent_jordan(3, F2);
  auto basis = commutant_basis(j);
  CHECK(basis.size() == 3);
  for (auto& y : basis) CHECK(j * y == y * j);
  auto F3 = Field::make(3, 1);
  auto tw = intertwiners(unipotent_jordan(2, F3), unipotent_jordan(3, F3));
  CHECK(tw.size() == 2);
}
