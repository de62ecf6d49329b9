#include "ccg/conjugacy.hpp"

#include <map>
#include <random>

#include "ccg/centralizers.hpp"
#include "ccg/frame.hpp"
#include "ccg/search.hpp"

namespace ccg {

std::optional<Matrix> ambient_conjugator(const Matrix& x, const Matrix& y, const GroupSpec& spec) {
  GroupSpec amb = spec.isometry_group();
  if (amb.linear()) return gl_conjugator(x, y);
  if (charpoly(x) != charpoly(y)) return std::nullopt;
  Frame fx = make_frame(x, amb), fy = make_frame(y, amb);
  if (fx.J != fy.J) return std::nullopt;
  const FieldPtr& F = x.F;
  Matrix W = Matrix::identity(x.r, F);
  for (size_t i = 0; i < fx.atoms.size(); ++i) {
    int k = static_cast<int>(i);
    const auto& a = fx.atoms[i];
    Form bx = atom_form(fx, k), by = atom_form(fy, k);
    Matrix w;
    if (a.tag == PhiTag::Phi2) {
      int h = a.dim / 2;
      Matrix Ax = block(bx.gram, 0, h, h, h), Ay = block(by.gram, 0, h, h, h);
      w = direct_sum({Matrix::identity(h, F), star(inverse(Ay) * Ax)});
    } else {
      Matrix Ja = atom_part(fx, k, fx.J);
      SearchProblem p{by, bx, AffineSpace::make(Matrix(a.dim, a.dim, F), commutant_basis(Ja)), {}};
      auto z = search_first(p);
      if (!z) return std::nullopt;
      w = *z;
    }
    set_block(W, a.start, a.start, w);
  }
  Matrix Z = fx.Pinv * W * fy.P;
  if (x * Z != Z * y || !is_isometry(Z, amb.form)) throw Error("Internal", "ambient conjugator check failed");
  return Z;
}

namespace {

// c in the ambient centralizer of x with phi(c) = target, sampled per atom.
std::optional<Matrix> centralizer_element_with_phi(const Matrix& x, const std::vector<int>& target, size_t hsize,
                                                   const GroupSpec& spec, uint32_t seed) {
  AbelianGroup A{phi_moduli(spec)};
  std::map<std::vector<int>, Matrix> reached;
  reached.emplace(std::vector<int>(A.moduli.size(), 0), Matrix::identity(x.r, x.F));
  if (reached.count(target)) return reached.at(target);
  GroupSpec amb = spec.isometry_group();
  Frame fr = make_frame(x, amb);
  std::mt19937 rng(seed);
  for (int round = 0; round < 200 && reached.size() < hsize; ++round) {
    for (size_t i = 0; i < fr.atoms.size(); ++i) {
      Matrix g = to_original(fr, embed_atom(fr, static_cast<int>(i), random_atom_element(fr, static_cast<int>(i), rng)));
      auto a = phi(spec, g);
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<std::pair<std::vector<int>, Matrix>> add;
        for (auto& [h, e] : reached) {
          auto h2 = A.add(h, a);
          if (!reached.count(h2)) add.push_back({h2, e * g});
        }
        for (auto& [h, e] : add)
          if (reached.emplace(h, e).second) grew = true;
      }
      if (reached.count(target)) return reached.at(target);
    }
  }
  return std::nullopt;
}

std::string class_name(const Matrix& x, const ClassTable& t) { return t.classes()[t.class_of(x)].name; }

}  // namespace

ConjugacyCertificate conjugator(const Matrix& x, const Matrix& y, const ClassTable& table, uint32_t seed) {
  const GroupSpec& spec = table.spec();
  if (!contains(spec, x) || !contains(spec, y)) throw Error("NotInGroup", "element is not in " + spec.name());
  ConjugacyCertificate c;
  if (x == y) {
    c.conjugate = true;
    c.witness = Matrix::identity(x.r, x.F);
    return c;
  }
  auto Z = ambient_conjugator(x, y, spec);
  if (!Z) {
    c.reason = "labels differ: " + class_name(x, table) + " vs " + class_name(y, table);
    return c;
  }
  if (table.quotient().moduli.empty()) {
    c.conjugate = true;
    c.witness = *Z;
    return c;
  }
  const auto& ac = table.ambient()[table.locate(x).ambient];
  AbelianGroup A = table.quotient();
  auto a = phi(spec, *Z);
  if (A.coset_index(ac.H, a) != 0) {
    c.reason = "labels differ: " + class_name(x, table) + " vs " + class_name(y, table);
    return c;
  }
  auto d = centralizer_element_with_phi(x, A.neg(a), ac.H.size(), spec, seed);
  if (!d) throw Error("Internal", "no centralizer element with the required image");
  Matrix w = *d * *Z;
  if (!contains(spec, w) || x * w != w * y) throw Error("Internal", "corrected conjugator check failed");
  c.conjugate = true;
  c.witness = w;
  return c;
}

ConjugacyCertificate conjugator(const Matrix& x, const Matrix& y, const GroupSpec& spec, uint32_t seed) {
  if (!contains(spec, x) || !contains(spec, y)) throw Error("NotInGroup", "element is not in " + spec.name());
  if (phi_moduli(spec).empty() || x == y) {
    ConjugacyCertificate c;
    if (x == y) {
      c.conjugate = true;
      c.witness = Matrix::identity(x.r, x.F);
      return c;
    }
    auto z = ambient_conjugator(x, y, spec);
    c.conjugate = z.has_value();
    c.witness = z;
    if (!z) {
      ClassTable t(spec);
      c.reason = "labels differ: " + class_name(x, t) + " vs " + class_name(y, t);
    }
    return c;
  }
  return conjugator(x, y, ClassTable(spec), seed);
}

ConjugacyCertificate is_conjugate(const Matrix& x, const Matrix& y, const ClassTable& table) {
  const GroupSpec& spec = table.spec();
  if (!contains(spec, x) || !contains(spec, y)) throw Error("NotInGroup", "element is not in " + spec.name());
  ConjugacyCertificate c;
  size_t a = table.class_of(x), b = table.class_of(y);
  c.conjugate = a == b;
  if (!c.conjugate) c.reason = "labels differ: " + table.classes()[a].name + " vs " + table.classes()[b].name;
  return c;
}

ConjugacyCertificate is_conjugate(const Matrix& x, const Matrix& y, const GroupSpec& spec) {
  return is_conjugate(x, y, ClassTable(spec));
}

ConjugacyCertificate unipotent_conjugator(const Matrix& x, const Matrix& y, const ClassTable& table) {
  if (!is_unipotent(x) || !is_unipotent(y)) throw Error("NotUnipotent", "element is not unipotent");
  return conjugator(x, y, table);
}

}  // namespace ccg
