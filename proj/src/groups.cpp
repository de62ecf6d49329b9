#include "ccg/groups.hpp"

#include <map>

namespace ccg {

namespace {

std::pair<int, int> prime_power(int q) {
  if (q < 2) throw Error("InvalidSpec", "q must be a prime power");
  int p = 2;
  while (q % p) ++p;
  int k = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw Error("InvalidSpec", "q must be a prime power");
  return {p, k};
}

std::string sign(FormType t) {
  if (t == FormType::Plus) return "+";
  if (t == FormType::Minus) return "-";
  return "";
}

}  // namespace

std::string GroupSpec::name() const {
  std::string base;
  switch (family) {
    case Family::GL: base = "GL"; break;
    case Family::SL: base = "SL"; break;
    case Family::Sp: base = "Sp"; break;
    case Family::U: base = "U"; break;
    case Family::SU: base = "SU"; break;
    case Family::O: base = "O" + sign(type); break;
    case Family::SO: base = "SO" + sign(type); break;
    case Family::Omega: base = "Omega" + sign(type); break;
  }
  return base + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
}

Family GroupSpec::isometry_family() const {
  switch (family) {
    case Family::SL: return Family::GL;
    case Family::SU: return Family::U;
    case Family::SO:
    case Family::Omega: return Family::O;
    default: return family;
  }
}

GroupSpec GroupSpec::isometry_group() const {
  GroupSpec g = *this;
  g.family = isometry_family();
  return g;
}

GroupSpec make_group(Family family, int n, int q, FormType type) {
  auto [p, k] = prime_power(q);
  if (n < 1) throw Error("InvalidSpec", "dimension must be positive");
  GroupSpec g;
  g.family = family;
  g.n = n;
  g.q = q;
  bool unitary = family == Family::U || family == Family::SU;
  g.F = Field::make(p, unitary ? 2 * k : k, unitary);
  switch (family) {
    case Family::GL:
    case Family::SL:
      g.type = FormType::None;
      break;
    case Family::Sp:
      if (n % 2) throw Error("InvalidSpec", "symplectic groups need even dimension");
      g.form = standard_form(FormKind::Alternating, n, FormType::None, g.F);
      break;
    case Family::U:
    case Family::SU:
      g.form = standard_form(FormKind::Hermitian, n, FormType::None, g.F);
      break;
    case Family::O:
    case Family::SO:
    case Family::Omega:
      if (n % 2) {
        if (p == 2) throw Error("Unsupported", "odd-dimensional orthogonal groups need odd q");
        type = FormType::Circle;
      } else if (type != FormType::Plus && type != FormType::Minus) {
        throw Error("InvalidSpec", "even-dimensional orthogonal groups need a type");
      }
      g.type = type;
      g.form = standard_form(FormKind::Quadratic, n, type, g.F);
      break;
  }
  return g;
}

GroupSpec make_group(const std::string& name, int n, int q) {
  static const std::map<std::string, std::pair<Family, FormType>> names = {
      {"GL", {Family::GL, FormType::None}},        {"SL", {Family::SL, FormType::None}},
      {"Sp", {Family::Sp, FormType::None}},        {"U", {Family::U, FormType::None}},
      {"SU", {Family::SU, FormType::None}},        {"O+", {Family::O, FormType::Plus}},
      {"O-", {Family::O, FormType::Minus}},        {"O", {Family::O, FormType::Circle}},
      {"SO+", {Family::SO, FormType::Plus}},       {"SO-", {Family::SO, FormType::Minus}},
      {"SO", {Family::SO, FormType::Circle}},      {"Omega+", {Family::Omega, FormType::Plus}},
      {"Omega-", {Family::Omega, FormType::Minus}}, {"Omega", {Family::Omega, FormType::Circle}},
  };
  auto it = names.find(name);
  if (it == names.end()) throw Error("Usage", "unknown group " + name);
  auto [fam, t] = it->second;
  if (t == FormType::Circle && n % 2 == 0) throw Error("InvalidSpec", name + " needs odd dimension; use " + name + "+ or " + name + "-");
  if ((t == FormType::Plus || t == FormType::Minus) && n % 2) throw Error("InvalidSpec", name + " needs even dimension");
  return make_group(fam, n, q, t);
}

GroupSpec with_user_form(const GroupSpec& spec, const Form& user) {
  if (!spec.has_form()) throw Error("InvalidForm", "linear groups carry no form");
  if (user.n() != spec.n || !same_field(user.gram.F, spec.F)) throw Error("InvalidForm", "form dimension or field mismatch");
  Form u = user;
  if (spec.orthogonal() && u.kind == FormKind::Symmetric) {
    if (spec.F->char_two()) throw Error("InvalidForm", "symmetric forms need odd q");
    Matrix a(u.n(), u.n(), spec.F);
    for (int i = 0; i < u.n(); ++i) {
      a(i, i) = spec.F->div(u.gram(i, i), spec.F->from_int(2));
      for (int j = i + 1; j < u.n(); ++j) a(i, j) = u.gram(i, j);
    }
    u = Form{FormKind::Quadratic, a};
  }
  if (u.kind != spec.form.kind) throw Error("InvalidForm", "form kind does not match the group");
  auto t = congruence_transform(u, spec.form);
  if (!t) throw Error("InvalidForm", "form is not congruent to the standard form of " + spec.name());
  GroupSpec g = spec;
  g.user_to_std = *t;
  return g;
}

Matrix to_standard(const GroupSpec& spec, const Matrix& x) {
  if (!spec.user_to_std) return x;
  return *spec.user_to_std * x * inverse(*spec.user_to_std);
}

Matrix from_standard(const GroupSpec& spec, const Matrix& x) {
  if (!spec.user_to_std) return x;
  return inverse(*spec.user_to_std) * x * *spec.user_to_std;
}

BigInt big_pow(const BigInt& b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

BigInt gl_order(int n, const BigInt& Q) {
  BigInt r = 1, qn = big_pow(Q, n);
  for (int i = 0; i < n; ++i) r *= qn - big_pow(Q, i);
  return r;
}

BigInt u_order(int n, const BigInt& Q) {
  BigInt r = big_pow(Q, n * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) r *= big_pow(Q, i) - (i % 2 ? -1 : 1);
  return r;
}

BigInt sp_order(int n, const BigInt& Q) {
  int m = n / 2;
  BigInt r = big_pow(Q, m * m);
  for (int i = 1; i <= m; ++i) r *= big_pow(Q, 2 * i) - 1;
  return r;
}

BigInt o_order(FormType t, int n, const BigInt& Q) {
  if (n == 0) return 1;
  int m = n / 2;
  if (n % 2) return 2 * sp_order(2 * m, Q);
  BigInt r = 2 * big_pow(Q, m * (m - 1)) * (big_pow(Q, m) + (t == FormType::Minus ? 1 : -1));
  for (int i = 1; i < m; ++i) r *= big_pow(Q, 2 * i) - 1;
  return r;
}

BigInt group_order(const GroupSpec& s) {
  BigInt Q = s.q;
  switch (s.family) {
    case Family::GL: return gl_order(s.n, Q);
    case Family::SL: return gl_order(s.n, Q) / (Q - 1);
    case Family::Sp: return sp_order(s.n, Q);
    case Family::U: return u_order(s.n, Q);
    case Family::SU: return u_order(s.n, Q) / (Q + 1);
    case Family::O: return o_order(s.type, s.n, Q);
    case Family::SO: return o_order(s.type, s.n, Q) / (s.q % 2 ? 2 : 1);
    case Family::Omega: {
      BigInt so = o_order(s.type, s.n, Q) / (s.q % 2 ? 2 : 1);
      if (s.n == 1) return so;
      return so / 2;
    }
  }
  return 0;
}

bool contains(const GroupSpec& s, const Matrix& x) {
  if (x.r != s.n || x.c != s.n || !same_field(x.F, s.F)) return false;
  Elt d = det(x);
  if (d == 0) return false;
  if (s.has_form() && !is_isometry(x, s.form)) return false;
  for (int v : phi(s, x))
    if (v) return false;
  return true;
}

std::vector<int> phi_moduli(const GroupSpec& s) {
  switch (s.family) {
    case Family::SL: return {s.q - 1};
    case Family::SU: return {s.q + 1};
    case Family::SO: return s.q % 2 ? std::vector<int>{2} : std::vector<int>{};
    case Family::Omega:
      if (s.n == 1) return s.q % 2 ? std::vector<int>{2} : std::vector<int>{};
      return s.q % 2 ? std::vector<int>{2, 2} : std::vector<int>{2};
    default: return {};
  }
}

std::vector<int> phi(const GroupSpec& s, const Matrix& x) {
  const Field& F = *s.F;
  switch (s.family) {
    case Family::SL: return {F.log(det(x)) % (s.q - 1)};
    case Family::SU: {
      int l = F.log(det(x));
      if (l % (s.q - 1)) throw Error("NotIsometry", "determinant is not a norm-one element");
      return {(l / (s.q - 1)) % (s.q + 1)};
    }
    case Family::SO:
      if (s.q % 2 == 0) return {};
      return {det(x) == 1 ? 0 : 1};
    case Family::Omega:
      if (s.n == 1) return s.q % 2 ? std::vector<int>{det(x) == 1 ? 0 : 1} : std::vector<int>{};
      if (s.q % 2) return {det(x) == 1 ? 0 : 1, spinor_norm(x, s.form)};
      return {spinor_norm(x, s.form)};
    default: return {};
  }
}

MembershipReport gl_class_admissible(const EDList& eds, Family family, const Field& F) {
  MembershipReport r;
  if (family == Family::GL || family == Family::SL) {
    r.admissible = true;
    return r;
  }
  int n = 0;
  for (auto& d : eds) n += poly::deg(d.f) * d.e * d.mult;
  for (auto& d : eds) {
    Poly fs = dual_polynomial(d.f, F);
    bool found = false;
    for (auto& o : eds)
      if (o.f == fs && o.e == d.e && o.mult == d.mult) found = true;
    if (!found) return r;
  }
  bool unitary = family == Family::U || family == Family::SU;
  if (unitary) {
    r.admissible = true;
    return r;
  }
  auto is_pm1 = [&](const Poly& f) {
    return poly::deg(f) == 1 && (f[0] == F.neg(1) || f[0] == 1);
  };
  bool sp = family == Family::Sp;
  bool has_odd_pm1 = false, has_pm1 = false;
  int phi3 = 0;
  for (auto& d : eds) {
    if (is_pm1(d.f)) {
      has_pm1 = true;
      if (d.e % 2) has_odd_pm1 = true;
      bool need_even = (sp || F.char_two()) ? d.e % 2 == 1 : d.e % 2 == 0;
      if (need_even && d.mult % 2) return r;
    } else if (poly::deg(d.f) > 1 && dual_polynomial(d.f, F) == d.f) {
      phi3 += d.e * d.mult;
    }
  }
  r.admissible = true;
  if (sp) return r;
  if (n % 2) {
    if (F.char_two()) {
      r.admissible = false;
      return r;
    }
    r.allowed_types = {FormType::Circle};
    return r;
  }
  bool both = F.char_two() ? has_pm1 : has_odd_pm1;
  if (both)
    r.allowed_types = {FormType::Plus, FormType::Minus};
  else
    r.allowed_types = {phi3 % 2 ? FormType::Minus : FormType::Plus};
  return r;
}

namespace {

bool form_ok(const Form& f) {
  if (f.kind == FormKind::Quadratic) {
    if (f.gram.F->char_two() && f.n() % 2) return false;
  }
  if (f.kind == FormKind::Hermitian && star(f.gram) != f.gram) return false;
  return det(polar(f)) != 0;
}

}  // namespace

std::optional<Form> least_invariant_form(const Matrix& x, FormKind kind) {
  const FieldPtr& F = x.F;
  int n = x.r;
  if (kind == FormKind::Symmetric && F->char_two()) return std::nullopt;
  bool quad = kind == FormKind::Quadratic;
  std::vector<std::pair<int, int>> unknowns;
  for (int i = 0; i < n; ++i)
    for (int j = quad ? i : 0; j < n; ++j) unknowns.push_back({i, j});
  Matrix xs = quad ? transpose(x) : star(x);
  std::vector<Vec> rows;
  for (auto [i, j] : unknowns) {
    Matrix b(n, n, F);
    b(i, j) = 1;
    Matrix m = x * b * xs - b;
    Vec eq;
    if (quad) {
      for (int a = 0; a < n; ++a) {
        eq.push_back(m(a, a));
        for (int c = a + 1; c < n; ++c) eq.push_back(F->add(m(a, c), m(c, a)));
      }
    } else {
      eq = m.a;
      for (int a = 0; a < n; ++a)
        for (int c = a; c < n; ++c) {
          if (kind == FormKind::Alternating) {
            eq.push_back(c == a ? b(a, a) : F->add(b(a, c), b(c, a)));
          } else if (kind == FormKind::Symmetric && c > a) {
            eq.push_back(F->sub(b(a, c), b(c, a)));
          }
        }
    }
    rows.push_back(eq);
  }
  Matrix K = left_kernel(Matrix::from_rows(rows, F));
  int dim = K.r;
  long long total = 1;
  for (int i = 0; i < dim; ++i) {
    total *= F->size();
    if (total > (1LL << 22)) throw Error("Internal", "invariant form space too large to scan");
  }
  std::optional<Form> best;
  for (long long code = 1; code < total; ++code) {
    Vec coef(dim);
    long long c = code;
    for (int i = 0; i < dim; ++i) {
      coef[i] = static_cast<Elt>(c % F->size());
      c /= F->size();
    }
    Vec v = vec_mul(coef, K);
    Form f{kind, Matrix(n, n, F)};
    for (size_t u = 0; u < unknowns.size(); ++u) f.gram(unknowns[u].first, unknowns[u].second) = v[u];
    if (!form_ok(f)) continue;
    if (!best || f.gram.a < best->gram.a) best = f;
  }
  if (best && kind == FormKind::Quadratic) best->type = form_type(*best);
  return best;
}

SemisimpleBlock standard_semisimple_block(const PhiClass& c, FormKind kind, const FieldPtr& F) {
  SemisimpleBlock b;
  switch (c.tag) {
    case PhiTag::Phi1: {
      Elt lam = F->neg(c.g[0]);
      if (kind == FormKind::Alternating) {
        b.x = Matrix::scalar(2, lam, F);
        b.form = standard_form(kind, 2, FormType::None, F);
      } else {
        b.x = Matrix::scalar(1, lam, F);
        b.form = Form{kind, Matrix::identity(1, F), kind == FormKind::Quadratic ? FormType::Circle : FormType::None};
      }
      break;
    }
    case PhiTag::Phi2: {
      Matrix r = companion(c.g, F);
      b.x = direct_sum({r, inverse(star(r))});
      int d = r.r;
      Form f{kind, Matrix(2 * d, 2 * d, F)};
      for (int i = 0; i < d; ++i) {
        f.gram(i, d + i) = 1;
        if (kind == FormKind::Alternating) f.gram(d + i, i) = F->neg(1);
        if (kind == FormKind::Symmetric || kind == FormKind::Hermitian) f.gram(d + i, i) = 1;
      }
      if (kind == FormKind::Quadratic) f.type = FormType::Plus;
      b.form = f;
      break;
    }
    case PhiTag::Phi3: {
      b.x = companion(c.g, F);
      auto f = least_invariant_form(b.x, kind);
      if (!f) throw Error("Internal", "no invariant form for " + poly::to_string(c.g));
      b.form = *f;
      break;
    }
    case PhiTag::None:
      throw Error("NotInPhi", "polynomial is not in the admissible set");
  }
  if (!is_isometry(b.x, b.form)) throw Error("Internal", "semisimple block is not an isometry");
  return b;
}

}  // namespace ccg
