#include "ccg/forms.hpp"

#include <functional>

namespace ccg {

std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::Alternating: return "alternating";
    case FormKind::Symmetric: return "symmetric";
    case FormKind::Hermitian: return "hermitian";
    case FormKind::Quadratic: return "quadratic";
  }
  return "";
}

std::string to_string(FormType t) {
  switch (t) {
    case FormType::Plus: return "+";
    case FormType::Minus: return "-";
    case FormType::Circle: return "o";
    case FormType::None: return "n/a";
  }
  return "";
}

FormKind parse_form_kind(const std::string& s) {
  if (s == "alternating") return FormKind::Alternating;
  if (s == "symmetric") return FormKind::Symmetric;
  if (s == "hermitian") return FormKind::Hermitian;
  if (s == "quadratic") return FormKind::Quadratic;
  throw Error("Usage", "unknown form kind " + s);
}

FormType parse_form_type(const std::string& s) {
  if (s == "+" || s == "plus") return FormType::Plus;
  if (s == "-" || s == "minus") return FormType::Minus;
  if (s == "o" || s == "circle") return FormType::Circle;
  if (s == "n/a" || s == "none") return FormType::None;
  throw Error("Usage", "unknown form type " + s);
}

Matrix polar(const Form& f) {
  if (f.kind == FormKind::Quadratic) return f.gram + transpose(f.gram);
  return f.gram;
}

Matrix normalize_quadratic(const Matrix& a) {
  Matrix u(a.r, a.c, a.F);
  for (int i = 0; i < a.r; ++i) {
    u(i, i) = a(i, i);
    for (int j = i + 1; j < a.c; ++j) u(i, j) = a.F->add(a(i, j), a(j, i));
  }
  return u;
}

Form transform_form(const Form& f, const Matrix& t) {
  Form g = f;
  if (f.kind == FormKind::Quadratic)
    g.gram = normalize_quadratic(t * f.gram * transpose(t));
  else
    g.gram = t * f.gram * star(t);
  return g;
}

Form direct_sum(const std::vector<Form>& forms) {
  Form out;
  out.kind = forms.front().kind;
  std::vector<Matrix> gs;
  for (auto& f : forms) gs.push_back(f.gram);
  out.gram = direct_sum(gs);
  out.type = FormType::None;
  return out;
}

bool same_form(const Form& a, const Form& b) {
  if (a.kind != b.kind || a.n() != b.n()) return false;
  if (a.kind == FormKind::Quadratic) return normalize_quadratic(a.gram) == normalize_quadratic(b.gram);
  return a.gram == b.gram;
}

Elt beta(const Form& f, const Vec& u, const Vec& v) {
  Matrix b = polar(f);
  Vec ub = vec_mul(u, b);
  const Field& F = *b.F;
  Elt s = 0;
  for (size_t i = 0; i < v.size(); ++i) s = F.add(s, F.mul(ub[i], F.bar(v[i])));
  return s;
}

Elt qvalue(const Form& f, const Vec& v) {
  const Field& F = *f.gram.F;
  if (f.kind == FormKind::Quadratic) return dot(F, vec_mul(v, f.gram), v);
  Elt b = beta(f, v, v);
  if (f.kind == FormKind::Symmetric) return F.div(b, F.from_int(2));
  return b;
}

bool is_isometry(const Matrix& x, const Form& f) {
  if (x.r != f.n()) return false;
  if (f.kind == FormKind::Quadratic) {
    Matrix m = x * f.gram * transpose(x) - f.gram;
    for (int i = 0; i < m.r; ++i) {
      if (m(i, i)) return false;
      for (int j = i + 1; j < m.c; ++j)
        if (m.F->add(m(i, j), m(j, i))) return false;
    }
    return true;
  }
  return x * f.gram * star(x) == f.gram;
}

FormType form_type(const Form& f) {
  if (f.kind == FormKind::Alternating || f.kind == FormKind::Hermitian) return FormType::None;
  const Field& F = *f.gram.F;
  Matrix b = polar(f);
  int n = f.n();
  if (n % 2) {
    if (F.char_two()) throw Error("Unsupported", "odd-dimensional quadratic forms need odd q");
    if (det(b) == 0) throw Error("Degenerate", "degenerate form");
    return FormType::Circle;
  }
  if (det(b) == 0) throw Error("Degenerate", "degenerate form");
  if (!F.char_two()) {
    Elt d = det(b);
    if ((n / 2) % 2) d = F.neg(d);
    return F.is_square(d) ? FormType::Plus : FormType::Minus;
  }
  auto [t, std] = standardize(f);
  (void)t;
  return std.type;
}

Elt least_nonsquare(const Field& F) {
  for (Elt a = 1; a < F.size(); ++a)
    if (!F.is_square(a)) return a;
  throw Error("Internal", "no nonsquare in a field of even characteristic");
}

Elt minus_parameter(const Field& F) {
  for (Elt b = 0; b < F.size(); ++b)
    if (poly::is_irreducible(F, {b, 1, 1})) return b;
  throw Error("Internal", "no irreducible t^2+t+b");
}

Form standard_form(FormKind kind, int n, FormType type, const FieldPtr& F) {
  Form f;
  f.kind = kind;
  f.gram = Matrix(n, n, F);
  f.type = FormType::None;
  int k = n / 2;
  switch (kind) {
    case FormKind::Alternating:
      if (n % 2) throw Error("InvalidSpec", "alternating forms need even dimension");
      for (int i = 0; i < n; ++i) f.gram(i, n - 1 - i) = i < k ? 1 : F->neg(1);
      return f;
    case FormKind::Hermitian:
      f.gram = antidiag(n, F);
      return f;
    case FormKind::Symmetric: {
      Form q = standard_form(FormKind::Quadratic, n, type, F);
      f.gram = polar(q);
      f.type = q.type;
      return f;
    }
    case FormKind::Quadratic:
      break;
  }
  for (int i = 0; i < k; ++i) f.gram(i, n - 1 - i) = 1;
  if (n % 2) {
    if (F->char_two()) throw Error("Unsupported", "odd-dimensional quadratic forms need odd q");
    for (Elt c = 1; c < F->size(); ++c) {
      f.gram(k, k) = c;
      if (F->is_square(det(polar(f)))) break;
    }
    f.type = FormType::Circle;
    return f;
  }
  if (type == FormType::Minus) {
    f.gram(k - 1, k - 1) = minus_parameter(*F);
    f.gram(k, k) = 1;
  }
  f.type = type == FormType::Minus ? FormType::Minus : FormType::Plus;
  return f;
}

namespace {

using Pred = std::function<bool(const Vec&)>;

// nonzero vector in the span of the first few rows satisfying pred, by exhaustive scan
std::optional<Vec> scan_span(const std::vector<Vec>& rows, int use, const Field& F, const Pred& pred) {
  use = std::min<int>(use, static_cast<int>(rows.size()));
  if (use == 0) return std::nullopt;
  long long total = 1;
  for (int i = 0; i < use; ++i) total *= F.size();
  int dim = static_cast<int>(rows[0].size());
  for (long long code = 1; code < total; ++code) {
    Vec v(dim, 0);
    long long c = code;
    for (int i = 0; i < use; ++i) {
      Elt a = static_cast<Elt>(c % F.size());
      c /= F.size();
      if (!a) continue;
      for (int j = 0; j < dim; ++j) v[j] = F.add(v[j], F.mul(a, rows[i][j]));
    }
    if (pred(v)) return v;
  }
  return std::nullopt;
}

Vec axpy(const Field& F, Vec v, Elt a, const Vec& w) {
  for (size_t i = 0; i < v.size(); ++i) v[i] = F.add(v[i], F.mul(a, w[i]));
  return v;
}

Vec scaled(const Field& F, Vec v, Elt a) {
  for (auto& e : v) e = F.mul(e, a);
  return v;
}

}  // namespace

std::pair<Matrix, Form> standardize(const Form& form) {
  const FieldPtr& Fp = form.gram.F;
  const Field& F = *Fp;
  int n = form.n();
  if (det(polar(form)) == 0) {
    if (!(form.kind == FormKind::Quadratic && n % 2 && F.char_two()))
      throw Error("Degenerate", "degenerate form");
    throw Error("Unsupported", "odd-dimensional quadratic forms need odd q");
  }
  bool quad = form.kind == FormKind::Quadratic || form.kind == FormKind::Symmetric;
  auto B = [&](const Vec& u, const Vec& v) { return beta(form, u, v); };
  auto Q = [&](const Vec& v) { return qvalue(form, v); };
  auto isotropic = [&](const Vec& v) { return quad ? Q(v) == 0 : B(v, v) == 0; };

  std::vector<Vec> W;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    W.push_back(e);
  }
  std::vector<Vec> es, fs, mid;
  FormType type = FormType::None;
  while (!W.empty()) {
    int use = form.kind == FormKind::Alternating ? 1 : (quad ? 3 : 2);
    auto e = (static_cast<int>(W.size()) >= 2 || form.kind == FormKind::Alternating)
                 ? scan_span(W, use, F, isotropic)
                 : std::nullopt;
    if (!e) break;
    Vec f;
    for (auto& w : W)
      if (B(*e, w)) {
        f = w;
        break;
      }
    if (f.empty()) throw Error("Degenerate", "degenerate form");
    f = scaled(F, f, F.inv(F.bar(B(*e, f))));
    if (quad) {
      f = axpy(F, f, F.neg(Q(f)), *e);
    } else if (form.kind == FormKind::Hermitian) {
      Elt target = F.neg(B(f, f));
      for (Elt l = 0; l < F.size(); ++l)
        if (F.add(l, F.bar(l)) == target) {
          f = axpy(F, f, l, *e);
          break;
        }
    }
    es.push_back(*e);
    fs.push_back(f);
    RowSpace rs(n, Fp);
    for (auto& w : W) {
      Vec p = axpy(F, w, F.neg(F.div(B(w, f), B(*e, f))), *e);
      p = axpy(F, p, F.neg(F.div(B(p, *e), B(f, *e))), f);
      rs.insert(p);
    }
    W = rs.rows();
  }
  int rest = static_cast<int>(W.size());
  Form std;
  if (form.kind == FormKind::Alternating) {
    if (rest) throw Error("Degenerate", "degenerate form");
    std = standard_form(form.kind, n, FormType::None, Fp);
  } else if (form.kind == FormKind::Hermitian) {
    if (rest == 1) {
      Elt c = B(W[0], W[0]);
      mid.push_back(scaled(F, W[0], solve_norm_equation(F.inv(c), F)));
    } else if (rest) {
      throw Error("Internal", "anisotropic hermitian space of dimension > 1");
    }
    std = standard_form(form.kind, n, FormType::None, Fp);
  } else {
    if (rest == 2) {
      type = FormType::Minus;
      Elt b = minus_parameter(F);
      auto f = scan_span(W, 2, F, [&](const Vec& v) { return Q(v) == 1; });
      if (!f) throw Error("Internal", "anisotropic plane misses 1");
      auto e = scan_span(W, 2, F, [&](const Vec& v) { return Q(v) == b && B(v, *f) == 1; });
      if (!e) throw Error("Internal", "anisotropic plane has no standard basis");
      mid = {*e, *f};
    } else if (rest == 1) {
      type = FormType::Circle;
      Form target = standard_form(FormKind::Quadratic, n, FormType::Circle, Fp);
      Elt c = target.gram(n / 2, n / 2), cg = Q(W[0]);
      Elt ratio = F.div(c, cg);
      if (F.is_square(ratio)) {
        mid.push_back(scaled(F, W[0], F.sqrt(ratio)));
      } else {
        // nonsquare discriminant: keep the square class of Q(g) in the centre
        Elt best = cg;
        for (Elt a = 1; a < F.size(); ++a)
          if (F.is_square(F.div(a, cg))) {
            best = a;
            break;
          }
        mid.push_back(scaled(F, W[0], F.sqrt(F.div(best, cg))));
        c = best;
      }
      std = standard_form(FormKind::Quadratic, n, FormType::Circle, Fp);
      std.gram(n / 2, n / 2) = c;
    } else if (rest) {
      throw Error("Internal", "anisotropic quadratic space of dimension > 2");
    } else {
      type = FormType::Plus;
    }
    if (rest != 1) std = standard_form(FormKind::Quadratic, n, type, Fp);
    if (form.kind == FormKind::Symmetric) {
      std.gram = polar(std);
      std.kind = FormKind::Symmetric;
    }
  }
  std::vector<Vec> rows = es;
  for (auto& m : mid) rows.push_back(m);
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) rows.push_back(*it);
  Matrix T = Matrix::from_rows(rows, Fp, n);
  if (!same_form(transform_form(form, T), std)) throw Error("Internal", "standardization failed");
  return {T, std};
}

std::optional<Matrix> congruence_transform(const Form& b1, const Form& b2) {
  if (b1.kind != b2.kind || b1.n() != b2.n()) return std::nullopt;
  auto [t1, s1] = standardize(b1);
  auto [t2, s2] = standardize(b2);
  if (!same_form(s1, s2)) return std::nullopt;
  Matrix t = inverse(t2) * t1;
  if (!same_form(transform_form(b1, t), b2)) throw Error("Internal", "congruence transform failed");
  return t;
}

WallFormData wall_form(const Matrix& x, const Form& f) {
  if (!is_isometry(x, f)) throw Error("NotIsometry", "element does not preserve the form");
  const FieldPtr& F = x.F;
  int n = x.r;
  Matrix m = Matrix::identity(n, F) - x;
  RowSpace rs(n, F);
  std::vector<Vec> us, ws;
  for (int i = 0; i < n; ++i) {
    Vec u = m.row(i);
    if (rs.insert(u)) {
      Vec w(n, 0);
      w[i] = 1;
      us.push_back(u);
      ws.push_back(w);
    }
  }
  WallFormData out;
  out.basis = Matrix::from_rows(us, F, n);
  out.gram = Matrix(static_cast<int>(us.size()), static_cast<int>(us.size()), F);
  for (size_t i = 0; i < us.size(); ++i)
    for (size_t j = 0; j < us.size(); ++j) out.gram(static_cast<int>(i), static_cast<int>(j)) = beta(f, ws[i], us[j]);
  return out;
}

int spinor_norm(const Matrix& x, const Form& f) {
  const Field& F = *x.F;
  if (F.char_two()) {
    if (!is_isometry(x, f)) throw Error("NotIsometry", "element does not preserve the form");
    return rank(x + Matrix::identity(x.r, x.F)) % 2;
  }
  auto w = wall_form(x, f);
  if (w.gram.r == 0) return 0;
  return F.is_square(det(w.gram)) ? 0 : 1;
}

}  // namespace ccg
