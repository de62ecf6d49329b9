#include "ccg/frame.hpp"

#include <algorithm>

#include "ccg/search.hpp"

namespace ccg {

namespace {

Matrix random_invertible_in(const std::vector<Matrix>& basis, int n, const FieldPtr& F, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, F->size() - 1);
  for (int tries = 0; tries < 10000; ++tries) {
    Matrix m(n, n, F);
    for (auto& b : basis) {
      Elt c = d(rng);
      if (c) m = m + scale(b, c);
    }
    if (det(m) != 0) return m;
  }
  throw Error("Internal", "no invertible element found in the commutant");
}

}  // namespace

Frame make_frame(const Matrix& x, const GroupSpec& spec) {
  const Field& F = *x.F;
  auto fac = factorize(charpoly(x), F);
  std::vector<Poly> present;
  for (auto& p : fac) present.push_back(p.first);
  std::sort(present.begin(), present.end(), poly::less);
  bool linear = spec.linear();
  struct Pending {
    PhiTag tag;
    Poly f, fd;
  };
  std::vector<Pending> groups;
  for (auto& f : present) {
    if (linear) {
      groups.push_back({PhiTag::None, f, {}});
      continue;
    }
    Poly fd = dual_polynomial(f, F);
    if (fd == f) {
      groups.push_back({poly::deg(f) == 1 ? PhiTag::Phi1 : PhiTag::Phi3, f, {}});
    } else {
      if (std::find(present.begin(), present.end(), fd) == present.end())
        throw Error("NotIsometry", "characteristic polynomial is not self-dual");
      if (poly::less(f, fd)) groups.push_back({PhiTag::Phi2, f, fd});
    }
  }
  Poly tm1 = poly::linear(F, 1);
  auto unit = [](const Pending& g) { return poly::deg(g.f) * (g.tag == PhiTag::Phi2 ? 2 : 1); };
  std::stable_sort(groups.begin(), groups.end(), [&](const Pending& a, const Pending& b) {
    if (unit(a) != unit(b)) return unit(a) < unit(b);
    bool a1 = a.f == tm1, b1 = b.f == tm1;
    if (a1 != b1) return a1;
    return poly::less(a.f, b.f);
  });
  std::vector<Poly> order;
  for (auto& g : groups) {
    order.push_back(g.f);
    if (g.tag == PhiTag::Phi2) order.push_back(g.fd);
  }
  auto jd = jordan_form(x, order);
  Frame fr;
  fr.x = x;
  fr.J = jd.J;
  fr.P = jd.P;
  fr.Pinv = inverse(jd.P);
  fr.blocks = jd.blocks;
  for (auto& g : groups) {
    AtomRange a;
    a.tag = g.tag;
    a.f = g.f;
    a.f_dual = g.fd;
    a.start = -1;
    for (auto& b : jd.blocks) {
      if (b.f != g.f && !(g.tag == PhiTag::Phi2 && b.f == g.fd)) continue;
      if (a.start < 0) a.start = b.start;
      a.dim += b.size * poly::deg(b.f);
      if (b.f != g.f) continue;
      if (!a.parts.empty() && a.parts.back().first == b.size)
        ++a.parts.back().second;
      else
        a.parts.push_back({b.size, 1});
    }
    fr.atoms.push_back(a);
  }
  if (spec.has_form()) fr.form = transform_form(spec.form, fr.P);
  return fr;
}

Matrix atom_part(const Frame& fr, int i, const Matrix& m) {
  const auto& a = fr.atoms[i];
  return block(m, a.start, a.start, a.dim, a.dim);
}

Form atom_form(const Frame& fr, int i) {
  Form f = *fr.form;
  f.gram = atom_part(fr, i, f.gram);
  if (f.kind == FormKind::Quadratic) f.type = f.n() % 2 ? FormType::Circle : form_type(f);
  return f;
}

Matrix embed_atom(const Frame& fr, int i, const Matrix& w) {
  Matrix out = Matrix::identity(fr.J.r, fr.J.F);
  set_block(out, fr.atoms[i].start, fr.atoms[i].start, w);
  return out;
}

Matrix to_original(const Frame& fr, const Matrix& w) { return fr.Pinv * w * fr.P; }

std::vector<Matrix> gl_block_generators(const Poly& f, const Partition& parts, const FieldPtr& F) {
  FieldPtr E = Field::extension(F, f);
  int m = partition_size(parts);
  std::vector<int> starts;
  std::vector<int> sizes;
  int off = 0;
  std::vector<std::pair<int, int>> groups;  // index of first block, count
  for (auto [s, a] : parts) {
    groups.push_back({static_cast<int>(starts.size()), a});
    for (int c = 0; c < a; ++c) {
      starts.push_back(off);
      sizes.push_back(s);
      off += s;
    }
  }
  int e = 0;
  for (int Q = E->size(); Q > 1; Q /= E->p()) ++e;
  Elt w = E->primitive();
  std::vector<Elt> fp_basis;
  for (int k = 0; k < e; ++k) fp_basis.push_back(E->pow(w, k));
  std::vector<Matrix> gens;
  auto I = Matrix::identity(m, E);
  for (auto [first, count] : groups) {
    int s = sizes[first];
    Matrix d = I;
    for (int r = 0; r < s; ++r) d(starts[first] + r, starts[first] + r) = w;
    gens.push_back(d);
    if (count >= 2) {
      Matrix t = I;
      for (int r = 0; r < s; ++r) t(starts[first] + r, starts[first + 1] + r) = 1;
      gens.push_back(t);
      Matrix cyc(m, m, E);
      for (int b = 0; b < static_cast<int>(starts.size()); ++b) {
        int target = b;
        if (b >= first && b < first + count) target = first + (b - first + 1) % count;
        for (int r = 0; r < sizes[b]; ++r) cyc(starts[b] + r, starts[target] + r) = 1;
      }
      gens.push_back(cyc);
    }
    for (int j = 1; j < s; ++j)
      for (Elt a : fp_basis) {
        Matrix u = I;
        for (int r = 0; r + j < s; ++r) u(starts[first] + r, starts[first] + r + j) = a;
        gens.push_back(u);
      }
  }
  for (auto [fi, ci] : groups)
    for (auto [fj, cj] : groups) {
      if (fi == fj) continue;
      auto tw = intertwiners(unipotent_jordan(sizes[fi], E), unipotent_jordan(sizes[fj], E));
      for (auto& y : tw)
        for (Elt a : fp_basis) {
          Matrix u = I;
          for (int r = 0; r < y.r; ++r)
            for (int c = 0; c < y.c; ++c)
              if (y(r, c)) u(starts[fi] + r, starts[fj] + c) = E->mul(a, y(r, c));
          gens.push_back(u);
        }
    }
  std::vector<Matrix> out;
  for (auto& g : gens) out.push_back(embed_ext(g, f));
  return out;
}

Matrix random_atom_element(const Frame& fr, int i, std::mt19937& rng) {
  const auto& a = fr.atoms[i];
  const FieldPtr& F = fr.J.F;
  Matrix Ja = atom_part(fr, i, fr.J);
  if (a.tag == PhiTag::None) return random_invertible_in(commutant_basis(Ja), a.dim, F, rng);
  Form fa = atom_form(fr, i);
  if (a.tag == PhiTag::Phi2) {
    int h = a.dim / 2;
    Matrix Jf = block(Ja, 0, 0, h, h);
    Matrix z = random_invertible_in(commutant_basis(Jf), h, F, rng);
    Matrix A = block(fa.gram, 0, h, h, h);
    Matrix m = star(inverse(A) * inverse(z) * A);
    Matrix w = direct_sum({z, m});
    if (!is_isometry(w, fa)) throw Error("Internal", "paired centralizer element is not an isometry");
    return w;
  }
  SearchProblem p{fa, fa, AffineSpace::make(Matrix(a.dim, a.dim, F), commutant_basis(Ja))};
  auto z = search_first(p, &rng);
  if (!z) throw Error("Internal", "no isometry in the commutant");
  return *z;
}

}  // namespace ccg
