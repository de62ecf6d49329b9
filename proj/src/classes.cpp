#include "ccg/classes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "ccg/centralizers.hpp"
#include "ccg/conjugacy.hpp"
#include "ccg/frame.hpp"
#include "ccg/search.hpp"

namespace ccg {

namespace {

Matrix paired_unipotent(int m, const FieldPtr& F) {
  Matrix j = unipotent_jordan(m, F);
  return direct_sum({j, inverse(star(j))});
}

// [[0,I],[eps I,0]] for bilinear kinds, [[0,I],[0,0]] for quadratic forms.
Form paired_form(FormKind kind, int h, const FieldPtr& F) {
  Form f{kind, Matrix(2 * h, 2 * h, F)};
  for (int i = 0; i < h; ++i) {
    f.gram(i, h + i) = 1;
    if (kind == FormKind::Alternating) f.gram(h + i, i) = F->neg(1);
    if (kind == FormKind::Symmetric || kind == FormKind::Hermitian) f.gram(h + i, i) = 1;
  }
  if (kind == FormKind::Quadratic) f.type = FormType::Plus;
  return f;
}

Matrix least_in(const Form& f, const AffineSpace& space, const std::function<bool(const Matrix&)>& accept) {
  SearchProblem p{f, f, space, accept};
  auto z = search_first(p);
  if (!z) throw Error("Internal", "no block with the requested Jordan type");
  return *z;
}

bool unipotent_of_rank(const Matrix& x, int nil_index, int r) {
  Matrix n = x - Matrix::identity(x.r, x.F);
  return rank(n) == r && power(n, nil_index).is_zero();
}

Form scaled(Form f, Elt c) {
  f.gram = scale(f.gram, c);
  return f;
}

Form as_alternating(const Form& q) {
  Form f{FormKind::Alternating, polar(q)};
  return f;
}

Matrix reflection(const Form& f, const Vec& v) {
  const Field& F = *f.gram.F;
  int n = f.n();
  Elt qv = qvalue(f, v);
  Matrix r = Matrix::identity(n, f.gram.F);
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    Elt c = F.div(beta(f, e, v), qv);
    for (int j = 0; j < n; ++j) r(i, j) = F.sub(r(i, j), F.mul(c, v[j]));
  }
  return r;
}

bool symplectic_like(const GroupSpec& s) { return s.symplectic(); }

}  // namespace

BuiltBlock build_block(BlockKind kind, int size, const GroupSpec& spec) {
  const FieldPtr& F = spec.F;
  bool even = F->char_two();
  bool sp = symplectic_like(spec);
  if (!sp && !spec.orthogonal()) throw Error("InvalidParams", "unipotent blocks are defined for symplectic and orthogonal groups");
  if (size < 1) throw Error("InvalidParams", "block size must be positive");
  BuiltBlock b;
  if (!even) {
    Elt alpha = least_nonsquare(*F);
    switch (kind) {
      case BlockKind::V:
      case BlockKind::Valpha: {
        if (sp && size % 2) throw Error("InvalidParams", "symplectic V-blocks have even size");
        if (!sp && size % 2 == 0) throw Error("InvalidParams", "orthogonal V-blocks have odd size");
        Form f;
        if (sp) {
          f = standard_form(FormKind::Alternating, size, FormType::None, F);
        } else {
          int k = size / 2;
          f = Form{FormKind::Quadratic, Matrix(size, size, F), FormType::Circle};
          for (int i = 0; i < k; ++i) f.gram(i, size - 1 - i) = 1;
          f.gram(k, k) = 1;
        }
        b.x = least_in(f, AffineSpace::upper_unitriangular(size, F),
                       [&](const Matrix& x) { return unipotent_of_rank(x, size, size - 1); });
        b.form = kind == BlockKind::Valpha ? scaled(f, alpha) : f;
        return b;
      }
      case BlockKind::W: {
        if (sp ? size % 2 == 0 : size % 2 == 1) throw Error("InvalidParams", "W-block size has the wrong parity for q odd");
        b.x = paired_unipotent(size, F);
        b.form = paired_form(sp ? FormKind::Alternating : FormKind::Quadratic, size, F);
        return b;
      }
      default:
        throw Error("InvalidParams", "block kind needs q even");
    }
  }
  switch (kind) {
    case BlockKind::V:
    case BlockKind::Valpha: {
      if (size % 2) throw Error("InvalidParams", "V-blocks have even size");
      Form f = standard_form(FormKind::Quadratic, size, kind == BlockKind::V ? FormType::Plus : FormType::Minus, F);
      b.x = least_in(f, AffineSpace::all(size, size, F), [&](const Matrix& x) { return unipotent_of_rank(x, size, size - 1); });
      b.form = f;
      break;
    }
    case BlockKind::W:
    case BlockKind::Wprime: {
      b.x = paired_unipotent(size, F);
      b.form = paired_form(FormKind::Quadratic, size, F);
      if (kind == BlockKind::Wprime) {
        if (size % 2) throw Error("InvalidParams", "W' needs even size");
        Vec v(2 * size, 0);
        v[size - 1] = 1;
        v[2 * size - 1] = 1;
        Matrix r = reflection(b.form, v);
        b.x = r * b.x * r;
      }
      break;
    }
    case BlockKind::Walpha: {
      if (size % 2 == 0) throw Error("InvalidParams", "W_alpha needs odd size");
      Form f = standard_form(FormKind::Quadratic, 2 * size, FormType::Minus, F);
      b.x = least_in(f, AffineSpace::all(2 * size, 2 * size, F),
                     [&](const Matrix& x) { return unipotent_of_rank(x, size, 2 * size - 2); });
      b.form = f;
      break;
    }
  }
  if (sp) b.form = as_alternating(b.form);
  return b;
}

namespace {

struct Piece {
  Matrix x;
  Form form;
};

BuiltBlock assemble(const std::vector<Piece>& ps, FormKind kind) {
  std::vector<Matrix> xs;
  std::vector<Form> fs;
  for (auto& p : ps) {
    xs.push_back(p.x);
    fs.push_back(p.form);
  }
  BuiltBlock b;
  b.x = direct_sum(xs);
  if (!fs.empty() && fs[0].gram.r) {
    b.form = direct_sum(fs);
    b.form.kind = kind;
    if (kind == FormKind::Quadratic) b.form.type = b.form.n() % 2 ? FormType::Circle : form_type(b.form);
  }
  return b;
}

}  // namespace

BuiltBlock build_atom(const Atom& a, const GroupSpec& spec) {
  const FieldPtr& F = spec.F;
  FormKind kind = spec.form.kind;
  std::vector<Piece> ps;
  const auto& parts = a.uni.parts;
  switch (a.tag) {
    case PhiTag::None:
      for (auto [l, m] : parts)
        for (int c = 0; c < m; ++c) ps.push_back({jordan_block(a.f, l, F), Form{}});
      return assemble(ps, kind);
    case PhiTag::Phi2: {
      std::vector<Matrix> rs;
      for (auto [l, m] : parts)
        for (int c = 0; c < m; ++c) rs.push_back(jordan_block(a.f, l, F));
      Matrix r = direct_sum(rs);
      BuiltBlock b;
      b.x = direct_sum({r, inverse(star(r))});
      b.form = paired_form(kind, r.r, F);
      return b;
    }
    case PhiTag::Phi3:
      for (auto [l, m] : parts) {
        Matrix j = jordan_block(a.f, l, F);
        auto f = least_invariant_form(j, kind);
        if (!f) throw Error("Internal", "no invariant form on a self-dual block");
        for (int c = 0; c < m; ++c) ps.push_back({j, *f});
      }
      return assemble(ps, kind);
    case PhiTag::Phi1:
      break;
  }
  Elt lam = F->neg(a.f[0]);
  if (spec.unitary()) {
    for (auto [l, m] : parts) {
      Matrix j = unipotent_jordan(l, F);
      auto f = least_invariant_form(j, FormKind::Hermitian);
      if (!f) throw Error("Internal", "no hermitian form for a unipotent block");
      for (int c = 0; c < m; ++c) ps.push_back({scale(j, lam), *f});
    }
    return assemble(ps, kind);
  }
  auto add = [&](BlockKind k, int size, int copies) {
    if (copies <= 0) return;
    BuiltBlock b = build_block(k, size, spec);
    for (int c = 0; c < copies; ++c) ps.push_back({scale(b.x, lam), b.form});
  };
  if (!F->char_two()) {
    bool sp = spec.symplectic();
    size_t bi = 0;
    for (auto [s, m] : parts) {
      bool vtype = sp ? s % 2 == 0 : s % 2 == 1;
      if (vtype) {
        bool alpha = a.uni.b.at(bi++) != 0;
        add(alpha ? BlockKind::Valpha : BlockKind::V, s, 1);
        add(BlockKind::V, s, m - 1);
      } else {
        if (m % 2) throw Error("InvalidParams", "paired Jordan blocks need even multiplicity");
        add(BlockKind::W, s, m / 2);
      }
    }
  } else {
    for (auto [m, c] : a.uni.W) add(BlockKind::W, m, c);
    for (auto [k, c] : a.uni.V) add(BlockKind::V, 2 * k, c);
    for (int m : a.uni.Wa) add(BlockKind::Walpha, m, 1);
    for (int k : a.uni.Va) add(BlockKind::Valpha, 2 * k, 1);
  }
  return assemble(ps, kind);
}

namespace {

std::vector<UniLabel> even_labels(bool sp, int h) {
  // items: W(m) any multiplicity, V(2k) with c <= 2, W_alpha(m') and V_alpha(2k') at most once
  struct Item {
    int kind, size, weight, maxc;
  };
  std::vector<Item> items;
  for (int m = h; m >= 1; --m) items.push_back({0, m, m, h / m});
  for (int k = h; k >= 1; --k) items.push_back({1, k, k, 2});
  for (int m = h; m >= 1; --m)
    if (m % 2) items.push_back({2, m, m, 1});
  for (int k = h; k >= 1; --k) items.push_back({3, k, k, 1});
  std::vector<UniLabel> out;
  UniLabel cur;
  std::function<void(size_t, int)> rec = [&](size_t i, int left) {
    if (left == 0) {
      const auto& u = cur;
      std::set<int> ks, kps;
      for (auto [k, c] : u.V) ks.insert(k);
      for (int k : u.Va) kps.insert(k);
      for (auto [k, c] : u.V)
        if (c > 2 || (c > 1 && kps.count(k))) return;
      for (int kp : kps) {
        if (ks.count(kp - 1) || kps.count(kp - 1)) return;
        if (sp && kp < 2) return;
      }
      for (int mp : u.Wa) {
        if (ks.count((mp - 1) / 2) || ks.count((mp + 1) / 2)) return;
        if (kps.count((mp - 1) / 2) || kps.count((mp + 1) / 2)) return;
        if (sp && mp < 3) return;
      }
      UniLabel l = u;
      std::map<int, int, std::greater<int>> sizes;
      for (auto [m, c] : l.W) sizes[m] += 2 * c;
      for (auto [k, c] : l.V) sizes[2 * k] += c;
      for (int m : l.Wa) sizes[m] += 2;
      for (int k : l.Va) sizes[2 * k] += 1;
      for (auto [s, c] : sizes) l.parts.push_back({s, c});
      out.push_back(l);
      return;
    }
    if (i == items.size()) return;
    const Item& it = items[i];
    for (int c = std::min(it.maxc, left / it.weight); c >= 0; --c) {
      if (c) {
        if (it.kind == 0) cur.W.push_back({it.size, c});
        if (it.kind == 1) cur.V.push_back({it.size, c});
        if (it.kind == 2) cur.Wa.push_back(it.size);
        if (it.kind == 3) cur.Va.push_back(it.size);
      }
      rec(i + 1, left - c * it.weight);
      if (c) {
        if (it.kind == 0) cur.W.pop_back();
        if (it.kind == 1) cur.V.pop_back();
        if (it.kind == 2) cur.Wa.pop_back();
        if (it.kind == 3) cur.Va.pop_back();
      }
    }
  };
  rec(0, h);
  return out;
}

}  // namespace

std::vector<UniLabel> unipotent_labels(const GroupSpec& spec, int m) {
  std::vector<UniLabel> out;
  auto parts = partitions(m);
  if (spec.linear() || spec.unitary()) {
    for (auto& p : parts) out.push_back(UniLabel{p});
    return out;
  }
  bool sp = spec.symplectic();
  if (spec.F->char_two()) {
    if (m % 2) return out;
    auto labels = even_labels(sp, m / 2);
    for (auto& p : parts)
      for (auto& l : labels)
        if (l.parts == p) out.push_back(l);
    return out;
  }
  for (auto& p : parts) {
    int r = 0;
    bool ok = true;
    for (auto [s, a] : p) {
      bool vtype = sp ? s % 2 == 0 : s % 2 == 1;
      if (vtype) ++r;
      else if (a % 2) ok = false;
    }
    if (!ok) continue;
    for (int mask = 0; mask < (1 << r); ++mask) {
      UniLabel u{p};
      for (int i = 0; i < r; ++i) u.b.push_back((mask >> (r - 1 - i)) & 1);
      out.push_back(u);
    }
  }
  return out;
}

std::vector<std::vector<int>> centralizer_phi_image(const std::vector<Atom>& atoms, const GroupSpec& spec) {
  AbelianGroup A{phi_moduli(spec)};
  if (A.moduli.empty()) return {{}};
  std::vector<std::vector<int>> gens;
  auto sizes_gcd = [&]() {
    int g = 0;
    for (auto& a : atoms)
      for (auto [s, m] : a.uni.parts) g = std::gcd(g, s);
    return g;
  };
  const Field& F = *spec.F;
  switch (spec.family) {
    case Family::SL:
      gens.push_back({sizes_gcd() % (spec.q - 1)});
      break;
    case Family::SU:
      gens.push_back({sizes_gcd() % (spec.q + 1)});
      break;
    case Family::SO:
    case Family::Omega: {
      if (F.char_two()) {
        for (auto& a : atoms) {
          if (a.tag != PhiTag::Phi1) continue;
          bool only_even_w = a.uni.V.empty() && a.uni.Va.empty() && a.uni.Wa.empty();
          for (auto [m, c] : a.uni.W)
            if (m % 2) only_even_w = false;
          if (!only_even_w) gens.push_back({1});
        }
        break;
      }
      bool with_theta = A.moduli.size() == 2;
      for (auto& a : atoms) {
        if (a.tag == PhiTag::Phi1) {
          size_t bi = 0;
          for (auto [s, m] : a.uni.parts) {
            if (s % 2 == 0) continue;
            bool alpha = a.uni.b.at(bi++) != 0;
            if (!with_theta) {
              gens.push_back({1});
              continue;
            }
            if (m >= 2) {
              gens.push_back({1, 0});
              gens.push_back({1, 1});
            } else {
              BuiltBlock b = build_block(alpha ? BlockKind::Valpha : BlockKind::V, s, spec);
              Matrix minus = Matrix::scalar(s, F.neg(1), spec.F);
              gens.push_back({1, spinor_norm(minus, b.form)});
            }
          }
        } else if (with_theta) {
          for (auto [s, m] : a.uni.parts)
            if (s % 2) gens.push_back({0, 1});
        }
      }
      break;
    }
    default:
      break;
  }
  return A.span(gens);
}

namespace {

struct Divisor {
  PhiTag tag;
  Poly f, fd;
  int unit;  // dimension per unit of multiplicity
};

std::vector<Divisor> divisors(const GroupSpec& spec) {
  const Field& F = *spec.F;
  std::vector<Divisor> out;
  for (int d = 1; d <= spec.n; ++d)
    for (auto& f : poly::monic_irreducibles(F, d)) {
      if (d == 1 && f[0] == 0) continue;
      if (spec.linear()) {
        out.push_back({PhiTag::None, f, {}, d});
        continue;
      }
      Poly fd = dual_polynomial(f, F);
      if (fd == f) {
        out.push_back({d == 1 ? PhiTag::Phi1 : PhiTag::Phi3, f, {}, d});
      } else if (poly::less(f, fd) && 2 * d <= spec.n) {
        out.push_back({PhiTag::Phi2, f, fd, 2 * d});
      }
    }
  Poly tm1 = poly::linear(F, 1);
  std::stable_sort(out.begin(), out.end(), [&](const Divisor& a, const Divisor& b) {
    if (a.unit != b.unit) return a.unit < b.unit;
    bool a1 = a.f == tm1, b1 = b.f == tm1;
    if (a1 != b1) return a1;
    return poly::less(a.f, b.f);
  });
  return out;
}

std::string atom_key(const Atom& a, const GroupSpec& spec) { return to_string(a, spec); }

bool skeleton_equal(const std::vector<Atom>& atoms, const std::vector<AtomRange>& ranges) {
  if (atoms.size() != ranges.size()) return false;
  for (size_t i = 0; i < atoms.size(); ++i)
    if (atoms[i].tag != ranges[i].tag || atoms[i].f != ranges[i].f || atoms[i].f_dual != ranges[i].f_dual ||
        atoms[i].uni.parts != ranges[i].parts)
      return false;
  return true;
}

}  // namespace

ClassTable::ClassTable(GroupSpec spec, ClassFilter filter) : spec_(std::move(spec)) {
  order_ = group_order(spec_);
  quotient_.moduli = phi_moduli(spec_);
  GroupSpec amb = spec_.isometry_group();
  const FieldPtr& F = spec_.F;
  int n = spec_.n;

  // elements of the ambient group realizing every value of phi
  {
    std::vector<std::pair<std::vector<int>, Matrix>> gens;
    if (spec_.family == Family::SL) {
      Matrix z = Matrix::identity(n, F);
      z(0, 0) = F->primitive();
      gens.push_back({phi(spec_, z), z});
    } else if (spec_.family == Family::SU) {
      Matrix z = Matrix::identity(n, F);
      Elt w = F->primitive();
      if (n == 1) {
        z(0, 0) = F->pow(w, spec_.q - 1);
      } else {
        z(0, 0) = F->inv(w);
        z(n - 1, n - 1) = F->bar(w);
      }
      gens.push_back({phi(spec_, z), z});
    } else if (!quotient_.moduli.empty()) {
      std::set<std::vector<int>> have;
      long long total = 1;
      for (int i = 0; i < n; ++i) total *= F->size();
      for (long long code = 1; code < total && have.size() < 4; ++code) {
        Vec v(n);
        long long c = code;
        for (int i = 0; i < n; ++i) {
          v[i] = static_cast<Elt>(c % F->size());
          c /= F->size();
        }
        if (qvalue(spec_.form, v) == 0) continue;
        Matrix r = reflection(spec_.form, v);
        auto a = phi(spec_, r);
        if (have.insert(a).second) gens.push_back({a, r});
      }
    }
    transversal_.emplace(std::vector<int>(quotient_.moduli.size(), 0), Matrix::identity(n, F));
    std::vector<std::vector<int>> todo{std::vector<int>(quotient_.moduli.size(), 0)};
    while (!todo.empty()) {
      auto a = todo.front();
      todo.erase(todo.begin());
      for (auto& [g, z] : gens) {
        auto b = quotient_.add(a, g);
        if (transversal_.count(b)) continue;
        transversal_.emplace(b, transversal_.at(a) * z);
        todo.push_back(b);
      }
    }
    if (transversal_.size() != quotient_.elements().size()) throw Error("Internal", "quotient transversal incomplete");
  }

  auto divs = divisors(spec_);
  std::map<std::string, BuiltBlock> cache;
  auto built = [&](const Atom& a) -> const BuiltBlock& {
    auto key = atom_key(a, spec_);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_atom(a, amb)).first;
    return it->second;
  };
  Poly tm1 = poly::linear(*F, 1);

  std::vector<Atom> chosen;
  std::function<void(size_t, int)> rec = [&](size_t i, int left) {
    if (left == 0) {
      AmbientClass ac;
      ac.atoms = chosen;
      std::vector<Matrix> xs;
      std::vector<Form> fs;
      for (auto& a : chosen) {
        const auto& b = built(a);
        xs.push_back(b.x);
        if (amb.has_form()) fs.push_back(b.form);
      }
      Matrix x = direct_sum(xs);
      if (amb.has_form()) {
        Form B = direct_sum(fs);
        B.kind = amb.form.kind;
        auto t = congruence_transform(B, amb.form);
        if (!t) return;
        x = *t * x * inverse(*t);
        if (!is_isometry(x, amb.form)) throw Error("Internal", "assembled representative is not an isometry");
      }
      for (int v : phi(spec_, x))
        if (v) return;
      ac.rep = x;
      ac.centralizer_order = ambient_centralizer_order(chosen, amb);
      ac.H = centralizer_phi_image(chosen, spec_);
      ac.cosets = quotient_.coset_reps(ac.H);
      ambient_.push_back(std::move(ac));
      return;
    }
    if (i == divs.size()) return;
    const Divisor& d = divs[i];
    bool allowed = true;
    if (filter == ClassFilter::Unipotent) allowed = d.f == tm1;
    if (allowed) {
      for (int m = left / d.unit; m >= 1; --m) {
        std::vector<UniLabel> labels;
        if (d.tag == PhiTag::Phi1) {
          labels = unipotent_labels(amb, m);
        } else {
          for (auto& p : partitions(m)) labels.push_back(UniLabel{p});
        }
        for (auto& u : labels) {
          if (filter == ClassFilter::Semisimple && (u.parts.size() != 1 || u.parts[0].first != 1)) continue;
          chosen.push_back(Atom{d.tag, d.f, d.fd, u});
          rec(i + 1, left - m * d.unit);
          chosen.pop_back();
        }
      }
    }
    rec(i + 1, left);
  };
  rec(0, n);

  for (size_t k = 0; k < ambient_.size(); ++k) {
    const auto& ac = ambient_[k];
    int split = static_cast<int>(ac.cosets.size());
    for (int c = 0; c < split; ++c) {
      ClassRep r;
      r.label = ClassLabel{ac.atoms, c, split};
      r.name = to_string(r.label, spec_);
      const Matrix& z = transversal_.at(ac.cosets[c]);
      r.rep = inverse(z) * ac.rep * z;
      r.centralizer_order = ac.centralizer_order / static_cast<int>(ac.H.size());
      r.size = order_ / r.centralizer_order;
      r.ambient = static_cast<int>(k);
      classes_.push_back(std::move(r));
    }
  }
}

std::optional<size_t> ClassTable::find(const std::string& name) const {
  for (size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].name == name) return i;
  return std::nullopt;
}

ClassTable::Location ClassTable::locate(const Matrix& x) const {
  GroupSpec amb = spec_.isometry_group();
  Frame fr = make_frame(x, amb);
  for (size_t k = 0; k < ambient_.size(); ++k) {
    if (!skeleton_equal(ambient_[k].atoms, fr.atoms)) continue;
    auto z = ambient_conjugator(ambient_[k].rep, x, amb);
    if (z) return Location{static_cast<int>(k), *z};
  }
  throw Error("NotInGroup", "element matches no class of " + spec_.name());
}

size_t ClassTable::class_of(const Matrix& x) const {
  auto loc = locate(x);
  const auto& ac = ambient_[loc.ambient];
  int c = 0;
  if (ac.cosets.size() > 1) c = quotient_.coset_index(ac.H, phi(spec_, loc.z));
  for (size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].ambient == loc.ambient && classes_[i].label.coset == c) return i;
  throw Error("Internal", "class of element not in the table");
}

std::vector<ClassRep> list_classes(const GroupSpec& spec) { return ClassTable(spec).classes(); }

std::vector<ClassRep> unipotent_classes(const GroupSpec& spec) {
  return ClassTable(spec, ClassFilter::Unipotent).classes();
}

std::vector<ClassRep> semisimple_classes(const GroupSpec& spec) {
  return ClassTable(spec, ClassFilter::Semisimple).classes();
}

ClassLabel class_invariant(const Matrix& x, const ClassTable& table) {
  if (!contains(table.spec(), x)) throw Error("NotInGroup", "element is not in " + table.spec().name());
  return table.classes()[table.class_of(x)].label;
}

ClassLabel class_invariant(const Matrix& x, const GroupSpec& spec) { return class_invariant(x, ClassTable(spec)); }

}  // namespace ccg
