#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ccg/centralizers.hpp"
#include "ccg/classes.hpp"
#include "ccg/conjugacy.hpp"
#include "ccg/oracle.hpp"
#include "ccg/verify.hpp"

using namespace ccg;

namespace {

// Every comparison below is exact; these are the only pinned numbers.
constexpr uint64_t kAllowedMismatches = 0;
constexpr double kRuntimeBudgetSeconds = 300.0;
constexpr uint64_t kOracleCap = 10'000'000;
constexpr int kConjugatorPairs = 200;
constexpr int kSpinorPairs = 100;
constexpr uint32_t kSeed = 20240601;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  uint64_t checks = 0, mismatches = 0;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++mismatches;
      if (notes.size() < 8) notes.push_back(what);
    }
  }
  bool pass() const { return mismatches <= kAllowedMismatches && checks > 0; }
};

std::vector<GroupSpec> criterion_one_specs() {
  std::vector<GroupSpec> s;
  for (auto g : {"GL", "SL"})
    for (int n = 1; n <= 3; ++n)
      for (int q : {2, 3, 4}) s.push_back(make_group(g, n, q));
  for (int q : {2, 3, 4, 5, 7}) s.push_back(make_group("Sp", 2, q));
  for (int q : {2, 3}) s.push_back(make_group("Sp", 4, q));
  for (auto g : {"U", "SU"}) {
    for (int q : {2, 3}) s.push_back(make_group(g, 2, q));
    s.push_back(make_group(g, 3, 2));
  }
  for (std::string g : {"O", "SO", "Omega"}) {
    for (int q : {2, 3})
      for (auto t : {"+", "-"})
        for (int n : {2, 4}) s.push_back(make_group(g + t, n, q));
    for (int n : {1, 3}) s.push_back(make_group(g, n, 3));
  }
  return s;
}

void report(int k, const std::string& title, const Outcome& o, double secs) {
  std::printf("criterion %d %s: %s (%llu checks, %llu mismatches, %.1f s)\n", k, o.pass() ? "PASS" : "FAIL",
              title.c_str(), static_cast<unsigned long long>(o.checks), static_cast<unsigned long long>(o.mismatches),
              secs);
  for (auto& n : o.notes) std::printf("  %s\n", n.c_str());
}

// Criteria 1 and 2 share the oracle comparison.
std::pair<Outcome, Outcome> classes_and_centralizers(const std::vector<GroupSpec>& specs) {
  Outcome c1, c2;
  for (auto& spec : specs) {
    auto r = verify_against_oracle(spec, kOracleCap, kSeed);
    c1.expect(r.class_equation, spec.name() + ": class equation");
    c1.expect(r.bijection, spec.name() + ": label bijection");
    c1.expect(r.sizes, spec.name() + ": class sizes");
    c2.expect(r.centralizer_orders, spec.name() + ": centralizer orders");
    c2.expect(r.generators, spec.name() + ": generated closure");
    for (auto& f : r.failures) c1.notes.push_back(spec.name() + ": " + f);
  }
  return {c1, c2};
}

size_t unipotent_classes_of_shape(const ClassTable& t, const std::string& parts) {
  size_t k = 0;
  for (auto& c : t.classes())
    if (is_unipotent(c.rep) && to_string(c.label.atoms[0].uni.parts) == parts) ++k;
  return k;
}

// Unipotent oracle classes whose Jordan type has the given rank of x - 1.
size_t oracle_unipotent_classes(const EnumeratedGroup& G, int rank_of_nilpotent) {
  size_t k = 0;
  for (auto& cl : brute_classes(G)) {
    Matrix x = G.element(cl[0]);
    Matrix d = x - Matrix::identity(x.r, x.F);
    if (is_unipotent(x) && rank(d) == rank_of_nilpotent) ++k;
  }
  return k;
}

Outcome splitting() {
  Outcome o;
  {
    auto spec = make_group("SL", 2, 5);
    ClassTable t(spec);
    auto G = enumerate_group(spec);
    o.expect(unipotent_classes_of_shape(t, "2") == 2, "SL(2,5): J2 splits into 2");
    o.expect(oracle_unipotent_classes(G, 1) == 2, "SL(2,5): oracle J2 classes");
  }
  {
    auto spec = make_group("SU", 3, 2);
    ClassTable t(spec);
    auto G = enumerate_group(spec);
    o.expect(unipotent_classes_of_shape(t, "3") == 3, "SU(3,2): J3 splits into 3");
    o.expect(oracle_unipotent_classes(G, 2) == 3, "SU(3,2): oracle J3 classes");
  }
  {
    auto spec = make_group("Sp", 2, 3);
    ClassTable t(spec);
    auto G = enumerate_group(spec);
    o.expect(unipotent_classes_of_shape(t, "2") == 2, "Sp(2,3): two regular unipotent classes");
    o.expect(oracle_unipotent_classes(G, 1) == 2, "Sp(2,3): oracle regular unipotent classes");
  }
  // For each class of O, the number of Omega classes inside it.
  for (auto [o_name, w_name, q] : {std::tuple{"O+", "Omega+", 3}, {"O+", "Omega+", 2}, {"O-", "Omega-", 2}}) {
    auto ospec = make_group(o_name, 4, q), wspec = make_group(w_name, 4, q);
    auto GO = enumerate_group(ospec), GW = enumerate_group(wspec);
    std::vector<int> oclass(GO.size());
    auto ocls = brute_classes(GO);
    for (size_t i = 0; i < ocls.size(); ++i)
      for (size_t e : ocls[i]) oclass[e] = static_cast<int>(i);
    std::map<int, int> oracle_split;
    auto wcls = brute_classes(GW);
    for (auto& cl : wcls) ++oracle_split[oclass[*GO.index(GW.element(cl[0]))]];
    ClassTable t(wspec);
    for (auto& c : t.classes()) {
      int oc = oclass[*GO.index(c.rep)];
      o.expect(c.label.split == oracle_split[oc], wspec.name() + ": split count of " + c.name);
      // q even: a unipotent class splits exactly when it is a sum of W(m) with every m even.
      if (q == 2 && is_unipotent(c.rep)) {
        const auto& u = c.label.atoms[0].uni;
        bool only_even_w = u.V.empty() && u.Va.empty() && u.Wa.empty();
        for (auto [m, a] : u.W) only_even_w = only_even_w && m % 2 == 0;
        o.expect((oracle_split[oc] > 1) == only_even_w, wspec.name() + ": unipotent splitting rule for " + c.name);
      }
    }
    o.expect(t.classes().size() == wcls.size(), wspec.name() + ": class count");
  }
  return o;
}

std::set<std::string> oracle_divisor_types(const GroupSpec& spec) {
  std::set<std::string> out;
  auto G = enumerate_group(spec, kOracleCap);
  for (auto& cl : brute_classes(G)) out.insert(to_string(elementary_divisors(G.element(cl[0]))));
  return out;
}

Outcome membership() {
  Outcome o;
  for (int n = 1; n <= 4; ++n)
    for (int q : {2, 3}) {
      struct Target {
        Family family;
        std::vector<std::pair<FormType, std::string>> groups;
      };
      std::vector<Target> targets;
      if (n % 2 == 0) {
        targets.push_back({Family::Sp, {{FormType::None, "Sp"}}});
        targets.push_back({Family::O, {{FormType::Plus, "O+"}, {FormType::Minus, "O-"}}});
      } else if (q % 2) {
        targets.push_back({Family::O, {{FormType::Circle, "O"}}});
      }
      // U(4,3) exceeds the oracle cap.
      if (!(n == 4 && q == 3)) targets.push_back({Family::U, {{FormType::None, "U"}}});
      for (auto& tg : targets) {
        int gl_q = tg.family == Family::U ? q * q : q;
        ClassTable gl(make_group("GL", n, gl_q));
        std::map<FormType, std::set<std::string>> present;
        FieldPtr F;
        for (auto& [type, name] : tg.groups) {
          auto spec = make_group(name, n, q);
          F = spec.F;
          present[type] = oracle_divisor_types(spec);
        }
        for (auto& c : gl.classes()) {
          Matrix x = c.rep;
          // GL(n,q^2) and U(n,q) share the element encoding of F_{q^2}.
          if (tg.family == Family::U) x.F = F;
          auto eds = elementary_divisors(x);
          std::string key = to_string(eds);
          auto r = gl_class_admissible(eds, tg.family, *F);
          bool any = false;
          for (auto& [type, set] : present) {
            bool in = set.count(key) > 0;
            any = any || in;
            if (tg.family == Family::O && tg.groups.size() == 2) {
              bool allowed = std::find(r.allowed_types.begin(), r.allowed_types.end(), type) != r.allowed_types.end();
              o.expect(allowed == in, "type rule for " + key + " over F_" + std::to_string(q));
            }
          }
          o.expect(r.admissible == any, "admissibility of " + key + " for family " + std::to_string(int(tg.family)) +
                                            " n=" + std::to_string(n) + " q=" + std::to_string(q));
        }
      }
    }
  // The Phi3 type rule on two irreducible self-dual polynomials.
  for (auto [poly, q, n] : {std::tuple{Poly{1, 0, 1}, 3, 2}, {Poly{1, 0, 0, 1, 0, 0, 1}, 2, 6}}) {
    auto plus = make_group("O+", n, q), minus = make_group("O-", n, q);
    Matrix c = companion(poly, plus.F);
    auto eds = elementary_divisors(c);
    auto r = gl_class_admissible(eds, Family::O, *plus.F);
    o.expect(r.allowed_types == std::vector<FormType>{FormType::Minus}, "Phi3 rule gives minus type");
    auto inv = least_invariant_form(c, FormKind::Quadratic);
    o.expect(inv && form_type(*inv) == FormType::Minus, "invariant quadratic form has minus type");
    o.expect(oracle_divisor_types(minus).count(to_string(eds)) == 1, "oracle finds the class in the minus group");
    o.expect(oracle_divisor_types(plus).count(to_string(eds)) == 0, "oracle finds no such class in the plus group");
  }
  return o;
}

Outcome conjugators(const std::vector<GroupSpec>& specs) {
  Outcome o;
  for (auto& spec : specs) {
    ClassTable t(spec);
    auto G = enumerate_group(spec, kOracleCap);
    std::mt19937_64 rng(kSeed);
    bool sound = true;
    for (int i = 0; i < kConjugatorPairs; ++i) {
      Matrix x = G.element(rng() % G.size()), z = G.element(rng() % G.size());
      Matrix y = inverse(z) * x * z;
      auto c = conjugator(x, y, t, static_cast<uint32_t>(i));
      if (!c.conjugate || !c.witness || !contains(spec, *c.witness) || inverse(*c.witness) * x * *c.witness != y)
        sound = false;
    }
    o.expect(sound, spec.name() + ": witness for every random pair");
    bool complete = true;
    for (size_t i = 0; i < t.classes().size(); ++i)
      for (size_t j = 0; j < t.classes().size(); ++j)
        if (i != j && conjugator(t.classes()[i].rep, t.classes()[j].rep, t).conjugate) complete = false;
    o.expect(complete, spec.name() + ": cross-class pairs are not conjugate");
  }
  return o;
}

// Reflection in a non-singular vector v of a quadratic form, as a matrix acting on rows.
Matrix reflection_matrix(const Form& f, const Vec& v) {
  const Field& F = *f.gram.F;
  Matrix P = polar(f);
  Elt qv = qvalue(f, v);
  Matrix r = Matrix::identity(f.n(), f.gram.F);
  for (int i = 0; i < f.n(); ++i) {
    Elt c = 0;
    for (int j = 0; j < f.n(); ++j) c = F.add(c, F.mul(P(i, j), v[j]));
    c = F.div(c, qv);
    for (int j = 0; j < f.n(); ++j) r(i, j) = F.sub(r(i, j), F.mul(c, v[j]));
  }
  return r;
}

Outcome spinor() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  for (auto name : {"SO", "SO+", "SO-"}) {
    auto spec = make_group(name, std::string(name) == "SO" ? 3 : 4, 3);
    auto G = enumerate_group(spec);
    bool hom = true;
    for (int i = 0; i < kSpinorPairs; ++i) {
      Matrix x = G.element(rng() % G.size()), y = G.element(rng() % G.size());
      if (spinor_norm(x * y, spec.form) != (spinor_norm(x, spec.form) + spinor_norm(y, spec.form)) % 2) hom = false;
    }
    o.expect(hom, spec.name() + ": spinor norm is a homomorphism");
    uint64_t kernel = 0;
    for (size_t i = 0; i < G.size(); ++i)
      if (spinor_norm(G.element(i), spec.form) == 0) ++kernel;
    o.expect(2 * kernel == G.size(), spec.name() + ": kernel has index 2");
  }
  for (auto [o_name, w_name] : {std::pair{"O+", "Omega+"}, {"O-", "Omega-"}}) {
    auto ospec = make_group(o_name, 4, 2);
    auto G = enumerate_group(ospec);
    uint64_t even = 0;
    for (size_t i = 0; i < G.size(); ++i)
      if (rank(G.element(i) + Matrix::identity(4, ospec.F)) % 2 == 0) ++even;
    BigInt expected = group_order(make_group(w_name, 4, 2));
    o.expect(BigInt(even) == expected, std::string(w_name) + "(4,2): rank parity kernel order");
    std::vector<Vec> vecs;
    for (int c = 1; c < 16; ++c) {
      Vec v(4);
      for (int j = 0; j < 4; ++j) v[j] = (c >> j) & 1;
      vecs.push_back(v);
    }
    if (ospec.type == FormType::Minus) {
      // Reflections generate O-(4,2); Omega is the subgroup of products of two.
      std::vector<Matrix> refl, gens;
      for (auto& v : vecs)
        if (qvalue(ospec.form, v)) refl.push_back(reflection_matrix(ospec.form, v));
      for (auto& a : refl)
        for (auto& b : refl) gens.push_back(a * b);
      auto closure = closure_order(gens, 4, ospec.F, kOracleCap);
      o.expect(closure && BigInt(*closure) == expected, std::string(w_name) + "(4,2): reflection products");
    } else {
      // Reflections do not generate O+(4,2); use the two families of maximal
      // totally singular subspaces instead: Omega preserves each family.
      Matrix U(2, 4, ospec.F);
      bool found = false;
      for (auto& v : vecs)
        for (auto& w : vecs)
          if (!found && v < w && !qvalue(ospec.form, v) && !qvalue(ospec.form, w) && !beta(ospec.form, v, w)) {
            U.set_row(0, v);
            U.set_row(1, w);
            found = rank(U) == 2;
          }
      uint64_t same_family = 0;
      for (size_t i = 0; i < G.size(); ++i) {
        Matrix image = U * G.element(i);
        Matrix both(4, 4, ospec.F);
        set_block(both, 0, 0, U);
        set_block(both, 2, 0, image);
        if ((4 - rank(both)) % 2 == 0) ++same_family;
      }
      o.expect(found && BigInt(same_family) == expected, std::string(w_name) + "(4,2): maximal singular subspaces");
    }
  }
  return o;
}

Outcome spot_values() {
  Outcome o;
  auto gl = make_group("GL", 4, 2);
  Matrix j = direct_sum({unipotent_jordan(2, gl.F), unipotent_jordan(2, gl.F)});
  auto Ggl = enumerate_group(gl);
  o.expect(centralizer(j, gl).order == 96, "GL(4,2) J2+J2 formula");
  o.expect(brute_centralizer(Ggl, j).size() == 96, "GL(4,2) J2+J2 oracle");

  auto sp = make_group("Sp", 2, 3);
  Matrix u = unipotent_jordan(2, sp.F);
  o.expect(centralizer(u, sp).order == 6, "Sp(2,3) J2 formula");
  o.expect(brute_centralizer(enumerate_group(sp), u).size() == 6, "Sp(2,3) J2 oracle");

  auto om = make_group("O-", 2, 3);
  ClassTable t(om);
  auto k = t.find("t^2+1:[1]");
  o.expect(k.has_value(), "O-(2,3) has the class of companion(t^2+1)");
  if (k) {
    const Matrix& c = t.classes()[*k].rep;
    o.expect(elementary_divisors(c) == elementary_divisors(companion({1, 0, 1}, om.F)), "O-(2,3) representative");
    o.expect(centralizer(c, t).order == 4, "O-(2,3) companion(t^2+1) formula");
    o.expect(brute_centralizer(enumerate_group(om), c).size() == 4, "O-(2,3) companion(t^2+1) oracle");
  }
  return o;
}

}  // namespace

int main() {
  auto start = Clock::now();
  auto specs = criterion_one_specs();
  bool all = true;
  auto run = [&](int k, const std::string& title, const std::function<Outcome()>& f) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    report(k, title, o, seconds_since(t0));
    all = all && o.pass();
  };

  auto t0 = Clock::now();
  std::pair<Outcome, Outcome> cc;
  try {
    cc = classes_and_centralizers(specs);
  } catch (const std::exception& e) {
    cc.first.expect(false, std::string("exception: ") + e.what());
    cc.second.expect(false, std::string("exception: ") + e.what());
  }
  double t12 = seconds_since(t0);
  cc.first.expect(t12 < kRuntimeBudgetSeconds, "runtime budget");
  report(1, "class equation exactness over " + std::to_string(specs.size()) + " groups", cc.first, t12);
  report(2, "centralizer formula and generators against the oracle", cc.second, t12);
  all = all && cc.first.pass() && cc.second.pass();

  run(3, "splitting counts", splitting);
  run(4, "membership rule", membership);
  run(5, "conjugator soundness and completeness", [&] { return conjugators(specs); });
  run(6, "spinor norm", spinor);
  run(7, "spot centralizer values", spot_values);

  std::printf("total %.1f s: %s\n", seconds_since(start), all ? "ALL PASS" : "FAILURES");
  return all ? 0 : 1;
}
