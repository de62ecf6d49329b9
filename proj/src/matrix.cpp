#include "ccg/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ccg {

Matrix Matrix::identity(int n, const FieldPtr& f) { return scalar(n, 1, f); }

Matrix Matrix::scalar(int n, Elt s, const FieldPtr& f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, const FieldPtr& f, int cols) {
  int c = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  Matrix m(static_cast<int>(rows.size()), c, f);
  for (int i = 0; i < m.r; ++i) m.set_row(i, rows[i]);
  return m;
}

bool Matrix::is_identity() const {
  if (r != c) return false;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](Elt v) { return v == 0; });
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.c != y.r) throw Error("DimensionMismatch", "matrix product dimensions");
  const Field& F = *x.F;
  Matrix z(x.r, y.c, x.F);
  for (int i = 0; i < x.r; ++i)
    for (int k = 0; k < x.c; ++k) {
      Elt v = x(i, k);
      if (!v) continue;
      for (int j = 0; j < y.c; ++j) {
        Elt w = y(k, j);
        if (w) z(i, j) = F.add(z(i, j), F.mul(v, w));
      }
    }
  return z;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  Matrix z(x);
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.F->add(x.a[i], y.a[i]);
  return z;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  Matrix z(x);
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.F->sub(x.a[i], y.a[i]);
  return z;
}

Matrix scale(const Matrix& x, Elt s) {
  Matrix z(x);
  for (auto& v : z.a) v = x.F->mul(v, s);
  return z;
}

Matrix transpose(const Matrix& x) {
  Matrix z(x.c, x.r, x.F);
  for (int i = 0; i < x.r; ++i)
    for (int j = 0; j < x.c; ++j) z(j, i) = x(i, j);
  return z;
}

Matrix bar_entries(const Matrix& x) {
  Matrix z(x);
  if (x.F->has_bar())
    for (auto& v : z.a) v = x.F->bar(v);
  return z;
}

Matrix star(const Matrix& x) { return transpose(bar_entries(x)); }

std::optional<Matrix> try_inverse(const Matrix& x) {
  const Field& F = *x.F;
  int n = x.r;
  Matrix a(x), inv = Matrix::identity(n, x.F);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    Elt s = F.inv(a(col, col));
    for (int j = 0; j < n; ++j) {
      a(col, j) = F.mul(a(col, j), s);
      inv(col, j) = F.mul(inv(col, j), s);
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || !a(i, col)) continue;
      Elt m = a(i, col);
      for (int j = 0; j < n; ++j) {
        a(i, j) = F.sub(a(i, j), F.mul(m, a(col, j)));
        inv(i, j) = F.sub(inv(i, j), F.mul(m, inv(col, j)));
      }
    }
  }
  return inv;
}

Matrix inverse(const Matrix& x) {
  auto r = try_inverse(x);
  if (!r) throw Error("SingularElement", "matrix is singular");
  return *r;
}

Matrix power(const Matrix& x, long long e) {
  Matrix base = e < 0 ? inverse(x) : x;
  if (e < 0) e = -e;
  Matrix r = Matrix::identity(x.r, x.F);
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Matrix conj(const Matrix& x, const Matrix& z) { return inverse(z) * x * z; }

Elt det(const Matrix& x) {
  const Field& F = *x.F;
  int n = x.r;
  Matrix a(x);
  Elt d = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      d = F.neg(d);
    }
    d = F.mul(d, a(col, col));
    Elt s = F.inv(a(col, col));
    for (int i = col + 1; i < n; ++i) {
      if (!a(i, col)) continue;
      Elt m = F.mul(a(i, col), s);
      for (int j = col; j < n; ++j) a(i, j) = F.sub(a(i, j), F.mul(m, a(col, j)));
    }
  }
  return d;
}

Vec RowSpace::reduce(Vec v) const {
  const Field& F = *F_;
  for (size_t k = 0; k < rows_.size(); ++k) {
    Elt c = v[piv_[k]];
    if (!c) continue;
    const Vec& r = rows_[k];
    for (int j = 0; j < dim_; ++j)
      if (r[j]) v[j] = F.sub(v[j], F.mul(c, r[j]));
  }
  return v;
}

bool RowSpace::contains(const Vec& v) const {
  Vec w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](Elt e) { return e == 0; });
}

bool RowSpace::insert(const Vec& v) {
  const Field& F = *F_;
  Vec w = reduce(v);
  int p = -1;
  for (int j = 0; j < dim_; ++j)
    if (w[j]) {
      p = j;
      break;
    }
  if (p < 0) return false;
  Elt s = F.inv(w[p]);
  for (auto& e : w) e = F.mul(e, s);
  for (auto& r : rows_) {
    Elt c = r[p];
    if (!c) continue;
    for (int j = 0; j < dim_; ++j)
      if (w[j]) r[j] = F.sub(r[j], F.mul(c, w[j]));
  }
  auto pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
  rows_.insert(rows_.begin() + pos, w);
  piv_.insert(piv_.begin() + pos, p);
  return true;
}

Matrix RowSpace::basis() const { return Matrix::from_rows(rows_, F_, dim_); }

int rank(const Matrix& x) {
  RowSpace rs(x.c, x.F);
  for (int i = 0; i < x.r; ++i) rs.insert(x.row(i));
  return rs.rank();
}

Matrix row_basis(const Matrix& x) {
  RowSpace rs(x.c, x.F);
  for (int i = 0; i < x.r; ++i) rs.insert(x.row(i));
  return rs.basis();
}

Matrix left_kernel(const Matrix& x) {
  // v x = 0  <=>  x^t v^t = 0: row-reduce x^t and read off the nullspace
  const Field& F = *x.F;
  Matrix a = transpose(x);
  int rows = a.r, cols = a.c;
  std::vector<int> pivcol;
  int rk = 0;
  for (int col = 0; col < cols && rk < rows; ++col) {
    int piv = -1;
    for (int i = rk; i < rows; ++i)
      if (a(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(a(piv, j), a(rk, j));
    Elt s = F.inv(a(rk, col));
    for (int j = 0; j < cols; ++j) a(rk, j) = F.mul(a(rk, j), s);
    for (int i = 0; i < rows; ++i) {
      if (i == rk || !a(i, col)) continue;
      Elt m = a(i, col);
      for (int j = 0; j < cols; ++j) a(i, j) = F.sub(a(i, j), F.mul(m, a(rk, j)));
    }
    pivcol.push_back(col);
    ++rk;
  }
  std::vector<bool> is_piv(cols, false);
  for (int p : pivcol) is_piv[p] = true;
  std::vector<Vec> out;
  for (int free = 0; free < cols; ++free) {
    if (is_piv[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (int k = 0; k < rk; ++k) v[pivcol[k]] = F.neg(a(k, free));
    out.push_back(v);
  }
  return Matrix::from_rows(out, x.F, cols);
}

Matrix poly_eval(const Poly& f, const Matrix& x) {
  Matrix r(x.r, x.c, x.F);
  for (int i = poly::deg(f); i >= 0; --i) {
    r = r * x;
    for (int j = 0; j < x.r; ++j) r(j, j) = x.F->add(r(j, j), f[i]);
  }
  return r;
}

Poly charpoly(const Matrix& x) {
  const Field& F = *x.F;
  int n = x.r;
  Matrix h(x);
  // similarity reduction to upper Hessenberg form
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (h(i, j)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (int k = 0; k < n; ++k) std::swap(h(piv, k), h(j + 1, k));
      for (int k = 0; k < n; ++k) std::swap(h(k, piv), h(k, j + 1));
    }
    Elt s = F.inv(h(j + 1, j));
    for (int i = j + 2; i < n; ++i) {
      Elt m = F.mul(h(i, j), s);
      if (!m) continue;
      for (int k = 0; k < n; ++k) h(i, k) = F.sub(h(i, k), F.mul(m, h(j + 1, k)));
      for (int k = 0; k < n; ++k) h(k, j + 1) = F.add(h(k, j + 1), F.mul(m, h(k, i)));
    }
  }
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (int m = 1; m <= n; ++m) {
    p[m] = poly::mul(F, {F.neg(h(m - 1, m - 1)), 1}, p[m - 1]);
    Elt prod = 1;
    for (int i = m - 1; i >= 1; --i) {
      prod = F.mul(prod, h(i, i - 1));
      Elt c = F.mul(h(i - 1, m - 1), prod);
      if (c) p[m] = poly::sub(F, p[m], poly::scale(F, p[i - 1], c));
    }
  }
  return p[n];
}

Matrix direct_sum(const std::vector<Matrix>& blocks) {
  int n = 0;
  FieldPtr F;
  for (auto& b : blocks) {
    n += b.r;
    if (!F) F = b.F;
  }
  Matrix m(n, n, F);
  int off = 0;
  for (auto& b : blocks) {
    set_block(m, off, off, b);
    off += b.r;
  }
  return m;
}

Matrix block(const Matrix& x, int r0, int c0, int nr, int nc) {
  Matrix m(nr, nc, x.F);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) m(i, j) = x(r0 + i, c0 + j);
  return m;
}

void set_block(Matrix& x, int r0, int c0, const Matrix& b) {
  for (int i = 0; i < b.r; ++i)
    for (int j = 0; j < b.c; ++j) x(r0 + i, c0 + j) = b(i, j);
}

Matrix companion(const Poly& f0, const FieldPtr& F) {
  Poly f = poly::monic(*F, f0);
  int d = poly::deg(f);
  Matrix m(d, d, F);
  for (int i = 0; i + 1 < d; ++i) m(i, i + 1) = 1;
  for (int j = 0; j < d; ++j) m(d - 1, j) = F->neg(f[j]);
  return m;
}

Matrix jordan_block(const Poly& f, int size, const FieldPtr& F) {
  Matrix C = companion(f, F);
  int d = C.r;
  Matrix m(d * size, d * size, F);
  for (int a = 0; a < size; ++a) {
    set_block(m, a * d, a * d, C);
    if (a + 1 < size)
      for (int r = 0; r < d; ++r) m(a * d + r, (a + 1) * d + r) = 1;
  }
  return m;
}

Matrix unipotent_jordan(int size, const FieldPtr& F) { return jordan_block({F->neg(1), 1}, size, F); }

Matrix antidiag(int n, const FieldPtr& F) {
  Matrix m(n, n, F);
  for (int i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
  return m;
}

Matrix elementary(int n, int i, int j, Elt v, const FieldPtr& F) {
  Matrix m = Matrix::identity(n, F);
  m(i, j) = F->add(m(i, j), v);
  return m;
}

std::string to_string(const Matrix& x) {
  std::ostringstream os;
  for (int i = 0; i < x.r; ++i) {
    for (int j = 0; j < x.c; ++j) os << (j ? " " : "") << x(i, j);
    os << "\n";
  }
  return os.str();
}

Vec vec_mul(const Vec& v, const Matrix& x) {
  const Field& F = *x.F;
  Vec out(x.c, 0);
  for (int i = 0; i < x.r; ++i) {
    if (!v[i]) continue;
    for (int j = 0; j < x.c; ++j)
      if (x(i, j)) out[j] = F.add(out[j], F.mul(v[i], x(i, j)));
  }
  return out;
}

Elt dot(const Field& F, const Vec& u, const Vec& v) {
  Elt s = 0;
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] && v[i]) s = F.add(s, F.mul(u[i], v[i]));
  return s;
}

EDList elementary_divisors(const Matrix& x) {
  if (det(x) == 0) throw Error("SingularElement", "elementary divisors of a singular matrix");
  const Field& F = *x.F;
  EDList out;
  for (auto& [f, m] : factorize(charpoly(x), F)) {
    int d = poly::deg(f);
    Matrix fx = poly_eval(f, x), cur = Matrix::identity(x.r, x.F);
    std::vector<int> rk{x.r};
    while (static_cast<int>(rk.size()) <= m) {
      cur = cur * fx;
      rk.push_back(rank(cur));
    }
    // number of blocks of size >= e is (rk[e-1] - rk[e]) / d
    std::vector<int> atleast(m + 2, 0);
    for (int e = 1; e <= m; ++e) atleast[e] = (rk[e - 1] - rk[e]) / d;
    for (int e = 1; e <= m; ++e) {
      int cnt = atleast[e] - atleast[e + 1];
      if (cnt > 0) out.push_back({f, e, cnt});
    }
  }
  std::sort(out.begin(), out.end(), [](const ElementaryDivisor& a, const ElementaryDivisor& b) {
    if (a.f != b.f) return poly::less(a.f, b.f);
    return a.e < b.e;
  });
  return out;
}

std::string to_string(const EDList& eds) {
  std::ostringstream os;
  for (size_t i = 0; i < eds.size(); ++i)
    os << (i ? "; " : "") << "[" << poly::to_string(eds[i].f) << "]^" << eds[i].e << " x" << eds[i].mult;
  return os.str();
}

Matrix semisimple_part(const Matrix& x) {
  const Field& F = *x.F;
  long long l = 1;
  for (auto& [f, m] : factorize(charpoly(x), F)) l = std::lcm(l, static_cast<long long>(poly::deg(f)));
  long long N = l, qN = 1;
  for (long long i = 0; i < N; ++i) qN = std::min<long long>(qN * F.size(), 1LL << 40);
  while (qN < x.r) {
    N += l;
    for (long long i = 0; i < l; ++i) qN = std::min<long long>(qN * F.size(), 1LL << 40);
  }
  Matrix s = x;
  for (long long i = 0; i < N; ++i) s = power(s, F.size());
  return s;
}

std::pair<Matrix, Matrix> jordan_decomposition(const Matrix& x) {
  Matrix s = semisimple_part(x);
  return {s, inverse(s) * x};
}

namespace {

Matrix rows_times(const Matrix& basis, const Matrix& m) { return basis * m; }

// basis of {v in span(basis) : v n = 0}
Matrix kernel_within(const Matrix& basis, const Matrix& n) {
  if (basis.r == 0) return basis;
  Matrix coeffs = left_kernel(rows_times(basis, n));
  if (coeffs.r == 0) return Matrix(0, basis.c, basis.F);
  return coeffs * basis;
}

}  // namespace

JordanData jordan_form(const Matrix& x, const std::vector<Poly>& factor_order) {
  if (det(x) == 0) throw Error("SingularElement", "Jordan form of a singular matrix");
  const Field& F = *x.F;
  int n = x.r;
  auto fac = factorize(charpoly(x), F);
  std::vector<Poly> order = factor_order;
  if (order.empty())
    for (auto& p : fac) order.push_back(p.first);
  Matrix s = semisimple_part(x);
  Matrix nil = x - s;
  std::vector<Vec> prow;
  JordanData out;
  for (auto& f : order) {
    int m = 0;
    for (auto& p : fac)
      if (p.first == f) m = p.second;
    if (m == 0) continue;
    int d = poly::deg(f);
    Matrix Vf = row_basis(left_kernel(power(poly_eval(f, x), m)));
    std::vector<Matrix> K{Matrix(0, n, x.F)};
    Matrix npow = Matrix::identity(n, x.F);
    while (K.back().r < Vf.r) {
      npow = npow * nil;
      K.push_back(row_basis(kernel_within(Vf, npow)));
    }
    int top = static_cast<int>(K.size()) - 1;
    std::vector<std::pair<Vec, int>> gens;
    for (int lam = top; lam >= 1; --lam) {
      RowSpace U(n, x.F);
      for (int i = 0; i < K[lam - 1].r; ++i) U.insert(K[lam - 1].row(i));
      if (lam < top) {
        Matrix img = K[lam + 1] * nil;
        for (int i = 0; i < img.r; ++i) U.insert(img.row(i));
      }
      for (int i = 0; i < K[lam].r; ++i) {
        Vec b = K[lam].row(i);
        if (U.contains(b)) continue;
        gens.push_back({b, lam});
        Vec w = b;
        for (int r = 0; r < d; ++r) {
          U.insert(w);
          w = vec_mul(w, s);
        }
      }
    }
    for (auto& [v, lam] : gens) {
      out.blocks.push_back({f, lam, static_cast<int>(prow.size())});
      Vec va = v;
      for (int a = 0; a < lam; ++a) {
        Vec w = va;
        for (int r = 0; r < d; ++r) {
          prow.push_back(w);
          w = vec_mul(w, s);
        }
        va = vec_mul(va, nil);
      }
    }
  }
  out.P = Matrix::from_rows(prow, x.F, n);
  if (out.P.r != n) throw Error("Internal", "Jordan basis has wrong size");
  out.J = out.P * x * inverse(out.P);
  return out;
}

std::optional<Matrix> gl_conjugator(const Matrix& x, const Matrix& y) {
  if (elementary_divisors(x) != elementary_divisors(y)) return std::nullopt;
  auto jx = jordan_form(x), jy = jordan_form(y);
  if (jx.J != jy.J) return std::nullopt;
  return inverse(jx.P) * jy.P;
}

Matrix embed_scalar(Elt lambda, const Poly& f, const FieldPtr& F) {
  int d = poly::deg(f);
  Matrix C = companion(f, F);
  Matrix out(d, d, F), Cp = Matrix::identity(d, F);
  int Q = F->size();
  for (int i = 0; i < d; ++i) {
    Elt c = lambda % Q;
    lambda /= Q;
    if (c) out = out + scale(Cp, c);
    Cp = Cp * C;
  }
  return out;
}

Matrix embed_ext(const Matrix& y, const Poly& f) {
  const FieldPtr& F = y.F->base();
  if (!F) throw Error("InvalidField", "embedding needs an extension field");
  int d = poly::deg(f);
  Matrix out(y.r * d, y.c * d, F);
  for (int i = 0; i < y.r; ++i)
    for (int j = 0; j < y.c; ++j)
      if (y(i, j)) set_block(out, i * d, j * d, embed_scalar(y(i, j), f, F));
  return out;
}

std::optional<Matrix> unembed(const Matrix& m, const Poly& f, const FieldPtr& E) {
  int d = poly::deg(f);
  if (m.r % d || m.c % d) return std::nullopt;
  int Q = m.F->size();
  Matrix out(m.r / d, m.c / d, E);
  for (int i = 0; i < out.r; ++i)
    for (int j = 0; j < out.c; ++j) {
      Matrix b = block(m, i * d, j * d, d, d);
      Elt code = 0, mult = 1;
      for (int k = 0; k < d; ++k) {
        code += b(0, k) * mult;
        mult *= Q;
      }
      if (embed_scalar(code, f, m.F) != b) return std::nullopt;
      out(i, j) = code;
    }
  return out;
}

}  // namespace ccg
