#include "ccg/search.hpp"

#include <algorithm>
#include <numeric>

namespace ccg {

AffineSpace AffineSpace::make(const Matrix& base, const std::vector<Matrix>& spanning) {
  int dim = base.r * base.c;
  RowSpace rs(dim, base.F);
  for (auto& m : spanning) rs.insert(m.a);
  AffineSpace s;
  s.base = base;
  s.base.a = rs.reduce(base.a);
  for (size_t k = 0; k < rs.rows().size(); ++k) {
    Matrix d(base.r, base.c, base.F);
    d.a = rs.rows()[k];
    s.dirs.push_back(d);
    s.pivots.push_back(rs.pivots()[k]);
  }
  return s;
}

AffineSpace AffineSpace::all(int r, int c, const FieldPtr& F) {
  std::vector<Matrix> span;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      Matrix e(r, c, F);
      e(i, j) = 1;
      span.push_back(e);
    }
  return make(Matrix(r, c, F), span);
}

AffineSpace AffineSpace::upper_unitriangular(int n, const FieldPtr& F) {
  std::vector<Matrix> span;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) span.push_back(elementary(n, i, j, 1, F) - Matrix::identity(n, F));
  return make(Matrix::identity(n, F), span);
}

std::vector<Matrix> intertwiners(const Matrix& a, const Matrix& b) {
  const FieldPtr& F = a.F;
  int ra = a.r, cb = b.c;
  int N = ra * cb;
  Matrix K(N, N, F);
  // coordinate (i,j) of Y contributes a(k,i) to (aY)(k,j) and -b(j,l) to (Yb)(i,l)
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < cb; ++j) {
      int row = i * cb + j;
      for (int k = 0; k < ra; ++k)
        if (a(k, i)) K(row, k * cb + j) = F->add(K(row, k * cb + j), a(k, i));
      for (int l = 0; l < cb; ++l)
        if (b(j, l)) K(row, i * cb + l) = F->sub(K(row, i * cb + l), b(j, l));
    }
  Matrix ker = left_kernel(K);
  std::vector<Matrix> out;
  for (int r = 0; r < ker.r; ++r) {
    Matrix y(ra, cb, F);
    y.a = ker.row(r);
    out.push_back(y);
  }
  return out;
}

std::vector<Matrix> commutant_basis(const Matrix& x) { return intertwiners(x, x); }

namespace {

struct Searcher {
  const SearchProblem& p;
  const std::function<bool(const Matrix&)>& visit;
  std::mt19937* rng;
  const Field& F;
  int n, c, q;
  bool quad;
  Matrix srcB, tgtPolar;
  std::vector<std::vector<int>> row_dirs;
  std::vector<Vec> ub, zb;
  long long nodes = 0;
  bool stop = false;

  Searcher(const SearchProblem& prob, const std::function<bool(const Matrix&)>& v, std::mt19937* r)
      : p(prob), visit(v), rng(r), F(*prob.space.base.F), n(prob.space.base.r), c(prob.space.base.c),
        q(F.size()), quad(prob.src.kind == FormKind::Quadratic) {
    srcB = quad ? polar(p.src) : p.src.gram;
    tgtPolar = polar(p.tgt);
    row_dirs.assign(n, {});
    for (size_t k = 0; k < p.space.dirs.size(); ++k) row_dirs[p.space.pivots[k] / c].push_back(static_cast<int>(k));
    ub.assign(n, Vec());
    zb.assign(n, Vec());
  }

  bool row_ok(const Matrix& z, int i) {
    Vec zi = z.row(i);
    ub[i] = vec_mul(zi, srcB);
    zb[i] = zi;
    if (!quad)
      for (auto& e : zb[i]) e = F.bar(e);
    if (quad) {
      if (dot(F, vec_mul(zi, p.src.gram), zi) != p.tgt.gram(i, i)) return false;
      for (int j = 0; j < i; ++j)
        if (dot(F, ub[j], zi) != tgtPolar(j, i)) return false;
      return true;
    }
    for (int j = 0; j <= i; ++j) {
      if (dot(F, ub[i], zb[j]) != p.tgt.gram(i, j)) return false;
      if (j < i && dot(F, ub[j], zb[i]) != p.tgt.gram(j, i)) return false;
    }
    return true;
  }

  void run(const Matrix& z, int i) {
    if (stop) return;
    if (++nodes > p.node_limit) throw Error("SearchLimit", "search exceeded its node budget");
    if (i == n) {
      if (!p.accept || p.accept(z)) {
        if (!visit(z)) stop = true;
      }
      return;
    }
    const auto& ds = row_dirs[i];
    int k = static_cast<int>(ds.size());
    long long total = 1;
    for (int t = 0; t < k; ++t) total *= q;
    std::vector<long long> order;
    long long start = 0, step = 1;
    if (rng && total > 1) {
      if (total <= (1 << 16)) {
        order.resize(total);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), *rng);
      } else {
        start = std::uniform_int_distribution<long long>(0, total - 1)(*rng);
        do step = std::uniform_int_distribution<long long>(1, total - 1)(*rng);
        while (std::gcd(step, total) != 1);
      }
    }
    for (long long idx = 0; idx < total && !stop; ++idx) {
      long long code = order.empty() ? (start + idx * step) % total : order[idx];
      Matrix zc = z;
      long long cc = code;
      for (int t = k - 1; t >= 0; --t) {
        Elt v = static_cast<Elt>(cc % q);
        cc /= q;
        if (!v) continue;
        const Matrix& d = p.space.dirs[ds[t]];
        for (size_t e = static_cast<size_t>(i) * c; e < d.a.size(); ++e)
          if (d.a[e]) zc.a[e] = F.add(zc.a[e], F.mul(v, d.a[e]));
      }
      if (row_ok(zc, i)) run(zc, i + 1);
    }
  }
};

}  // namespace

void search_each(const SearchProblem& p, const std::function<bool(const Matrix&)>& visit, std::mt19937* rng) {
  if (p.src.n() != p.space.base.c || p.tgt.n() != p.space.base.r) throw Error("DimensionMismatch", "search forms and space differ in size");
  Searcher s(p, visit, rng);
  s.run(p.space.base, 0);
}

std::optional<Matrix> search_first(const SearchProblem& p, std::mt19937* rng) {
  std::optional<Matrix> out;
  search_each(p, [&](const Matrix& z) {
    out = z;
    return false;
  }, rng);
  return out;
}

}  // namespace ccg
