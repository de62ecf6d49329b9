#include "ccg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>
#include <unordered_set>

namespace ccg {

namespace {

using Raw = std::vector<Elt>;

struct RawOps {
  int n;
  const Field& F;
  uint64_t q;

  Raw decode(uint64_t key) const {
    Raw a(static_cast<size_t>(n) * n);
    for (auto& e : a) {
      e = static_cast<Elt>(key % q);
      key /= q;
    }
    return a;
  }
  uint64_t encode(const Raw& a) const {
    uint64_t k = 0;
    for (size_t i = a.size(); i-- > 0;) k = k * q + static_cast<uint64_t>(a[i]);
    return k;
  }
  void mul(const Raw& a, const Raw& b, Raw& out) const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Elt s = 0;
        for (int k = 0; k < n; ++k) {
          Elt x = a[i * n + k], y = b[k * n + j];
          if (x && y) s = F.add(s, F.mul(x, y));
        }
        out[i * n + j] = s;
      }
  }
  Raw from(const Matrix& m) const { return m.a; }
};

void check_key_range(int n, int q) {
  long double bits = static_cast<long double>(n) * n * std::log2(static_cast<long double>(q));
  if (bits > 64) throw Error("CapExceeded", "matrices too large for the oracle key");
}

// Row-by-row enumeration of all matrices whose rows satisfy the form equations
// (or are merely independent for linear groups).
class RowEnumerator {
 public:
  explicit RowEnumerator(const GroupSpec& s) : s_(s), F_(*s.F), n_(s.n), q_(F_.size()) {
    long long total = 1;
    for (int i = 0; i < n_; ++i) total *= q_;
    for (long long c = 1; c < total; ++c) {
      Vec v(n_);
      long long r = c;
      for (int i = 0; i < n_; ++i) {
        v[i] = static_cast<Elt>(r % q_);
        r /= q_;
      }
      vecs_.push_back(v);
    }
    if (s.has_form()) {
      kind_ = s.form.kind;
      gram_ = s.form.gram;
      polar_ = polar(s.form);
    }
  }

  std::vector<uint64_t> run() {
    rows_.assign(n_, Vec());
    dfs(0, RowSpace(n_, s_.F));
    return out_;
  }

 private:
  Elt sesq(const Vec& u, const Vec& v, const Matrix& b) const {
    Elt s = 0;
    for (int i = 0; i < n_; ++i) {
      if (!u[i]) continue;
      for (int j = 0; j < n_; ++j)
        if (b(i, j) && v[j]) s = F_.add(s, F_.mul(F_.mul(u[i], b(i, j)), F_.bar(v[j])));
    }
    return s;
  }
  Elt qform(const Vec& v) const {
    Elt s = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j)
        if (gram_(i, j) && v[i] && v[j]) s = F_.add(s, F_.mul(gram_(i, j), F_.mul(v[i], v[j])));
    return s;
  }
  bool ok(const Vec& v, int i) const {
    if (!s_.has_form()) return true;
    if (kind_ == FormKind::Quadratic) {
      if (qform(v) != gram_(i, i)) return false;
      for (int j = 0; j < i; ++j)
        if (sesq(rows_[j], v, polar_) != polar_(j, i)) return false;
      return true;
    }
    if (sesq(v, v, gram_) != gram_(i, i)) return false;
    for (int j = 0; j < i; ++j) {
      if (sesq(v, rows_[j], gram_) != gram_(i, j)) return false;
      if (sesq(rows_[j], v, gram_) != gram_(j, i)) return false;
    }
    return true;
  }
  void dfs(int i, const RowSpace& span) {
    if (i == n_) {
      Matrix m = Matrix::from_rows(rows_, s_.F);
      out_.push_back(matrix_key(m));
      return;
    }
    for (auto& v : vecs_) {
      if (!ok(v, i)) continue;
      if (span.contains(v)) continue;
      rows_[i] = v;
      RowSpace next = span;
      next.insert(v);
      dfs(i + 1, next);
    }
  }

  const GroupSpec& s_;
  const Field& F_;
  int n_, q_;
  FormKind kind_ = FormKind::Alternating;
  Matrix gram_, polar_;
  std::vector<Vec> vecs_;
  std::vector<Vec> rows_;
  std::vector<uint64_t> out_;
};

std::vector<uint64_t> closure_keys(const std::vector<Matrix>& gens, int n, const FieldPtr& F, uint64_t cap) {
  RawOps ops{n, *F, static_cast<uint64_t>(F->size())};
  std::vector<Raw> g;
  for (auto& m : gens) g.push_back(ops.from(m));
  Raw id = Matrix::identity(n, F).a;
  std::unordered_set<uint64_t> seen{ops.encode(id)};
  std::deque<Raw> todo{id};
  Raw prod(id.size());
  while (!todo.empty()) {
    Raw cur = std::move(todo.front());
    todo.pop_front();
    for (auto& s : g) {
      ops.mul(cur, s, prod);
      uint64_t k = ops.encode(prod);
      if (seen.insert(k).second) {
        if (seen.size() > cap) throw Error("CapExceeded", "closure exceeded the oracle cap");
        todo.push_back(prod);
      }
    }
  }
  std::vector<uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

Matrix reflection(const Form& f, const Vec& v) {
  const Field& F = *f.gram.F;
  int n = f.n();
  Matrix r = Matrix::identity(n, f.gram.F);
  Elt qv = qvalue(f, v);
  Matrix b = polar(f);
  for (int i = 0; i < n; ++i) {
    Elt c = F.div(dot(F, b.row(i), v), qv);
    for (int j = 0; j < n; ++j) r(i, j) = F.sub(r(i, j), F.mul(c, v[j]));
  }
  return r;
}

}  // namespace

uint64_t matrix_key(const Matrix& x) {
  uint64_t q = static_cast<uint64_t>(x.F->size()), k = 0;
  for (size_t i = x.a.size(); i-- > 0;) k = k * q + static_cast<uint64_t>(x.a[i]);
  return k;
}

Matrix key_matrix(uint64_t key, int n, const FieldPtr& F) {
  Matrix m(n, n, F);
  uint64_t q = static_cast<uint64_t>(F->size());
  for (auto& e : m.a) {
    e = static_cast<Elt>(key % q);
    key /= q;
  }
  return m;
}

EnumeratedGroup::EnumeratedGroup(GroupSpec spec, std::vector<uint64_t> keys) : spec_(std::move(spec)), keys_(std::move(keys)) {
  std::sort(keys_.begin(), keys_.end());
}

Matrix EnumeratedGroup::element(size_t i) const { return key_matrix(keys_[i], spec_.n, spec_.F); }

std::optional<size_t> EnumeratedGroup::index_of_key(uint64_t k) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
  if (it == keys_.end() || *it != k) return std::nullopt;
  return static_cast<size_t>(it - keys_.begin());
}

std::optional<size_t> EnumeratedGroup::index(const Matrix& x) const {
  if (x.r != spec_.n || x.c != spec_.n || !same_field(x.F, spec_.F)) return std::nullopt;
  return index_of_key(matrix_key(x));
}

const std::vector<size_t>& EnumeratedGroup::generators() const {
  if (!gens_.empty() || keys_.size() <= 1) return gens_;
  std::vector<size_t> order(keys_.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937 rng(0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Matrix> mats;
  std::vector<uint64_t> cl{matrix_key(Matrix::identity(spec_.n, spec_.F))};
  for (size_t idx : order) {
    if (std::binary_search(cl.begin(), cl.end(), keys_[idx])) continue;
    gens_.push_back(idx);
    mats.push_back(element(idx));
    cl = closure_keys(mats, spec_.n, spec_.F, keys_.size());
    if (cl.size() == keys_.size()) break;
  }
  return gens_;
}

EnumeratedGroup enumerate_group(const GroupSpec& spec, uint64_t cap) {
  if (group_order(spec) > cap) throw Error("CapExceeded", "group order exceeds the oracle cap");
  check_key_range(spec.n, spec.F->size());
  const Field& F = *spec.F;
  std::vector<uint64_t> keys;
  if (spec.family == Family::Omega && !F.char_two()) {
    // products of two reflections whose norms differ by a square
    Form f = spec.form;
    std::vector<std::pair<Matrix, Elt>> refl;
    long long total = 1;
    for (int i = 0; i < spec.n; ++i) total *= F.size();
    for (long long c = 1; c < total; ++c) {
      Vec v(spec.n);
      long long r = c;
      for (auto& e : v) {
        e = static_cast<Elt>(r % F.size());
        r /= F.size();
      }
      Elt lead = 0;
      for (auto e : v)
        if (e) {
          lead = e;
          break;
        }
      if (lead != 1) continue;
      Elt qv = qvalue(f, v);
      if (qv) refl.push_back({reflection(f, v), qv});
    }
    std::vector<Matrix> gens;
    for (auto& [ru, qu] : refl)
      for (auto& [rv, qv] : refl)
        if (F.is_square(F.mul(qu, qv))) gens.push_back(ru * rv);
    keys = closure_keys(gens, spec.n, spec.F, cap);
  } else {
    GroupSpec ambient = spec.isometry_group();
    keys = RowEnumerator(ambient).run();
    if (spec.family != ambient.family) {
      std::vector<uint64_t> kept;
      for (uint64_t k : keys) {
        Matrix m = key_matrix(k, spec.n, spec.F);
        bool in = true;
        Elt d = det(m);
        if (spec.family == Family::SL || spec.family == Family::SU || (spec.family != Family::Omega && !F.char_two()))
          in = d == 1;
        if (spec.family == Family::Omega) {
          Matrix p = m + Matrix::identity(spec.n, spec.F);
          in = rank(p) % 2 == 0;
        }
        if (in) kept.push_back(k);
      }
      keys = std::move(kept);
    }
  }
  return EnumeratedGroup(spec, std::move(keys));
}

std::vector<std::vector<size_t>> brute_classes(const EnumeratedGroup& g) {
  const GroupSpec& s = g.spec();
  RawOps ops{s.n, *s.F, static_cast<uint64_t>(s.F->size())};
  std::vector<Raw> gens, invs;
  for (size_t i : g.generators()) {
    Matrix m = g.element(i);
    gens.push_back(m.a);
    invs.push_back(inverse(m).a);
  }
  std::vector<int> cls(g.size(), -1);
  std::vector<std::vector<size_t>> out;
  Raw t1(static_cast<size_t>(s.n) * s.n), t2(t1.size());
  for (size_t start = 0; start < g.size(); ++start) {
    if (cls[start] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.push_back({start});
    cls[start] = id;
    std::deque<size_t> todo{start};
    while (!todo.empty()) {
      size_t cur = todo.front();
      todo.pop_front();
      Raw y = ops.decode(g.key(cur));
      for (size_t k = 0; k < gens.size(); ++k) {
        ops.mul(invs[k], y, t1);
        ops.mul(t1, gens[k], t2);
        auto idx = g.index_of_key(ops.encode(t2));
        if (!idx) throw Error("Internal", "oracle group is not closed under conjugation");
        if (cls[*idx] < 0) {
          cls[*idx] = id;
          out[id].push_back(*idx);
          todo.push_back(*idx);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::vector<Matrix> brute_centralizer(const EnumeratedGroup& g, const Matrix& x) {
  const GroupSpec& s = g.spec();
  RawOps ops{s.n, *s.F, static_cast<uint64_t>(s.F->size())};
  Raw xr = x.a, a(xr.size()), b(xr.size());
  std::vector<Matrix> out;
  for (size_t i = 0; i < g.size(); ++i) {
    Raw e = ops.decode(g.key(i));
    ops.mul(xr, e, a);
    ops.mul(e, xr, b);
    if (a == b) out.push_back(g.element(i));
  }
  return out;
}

std::optional<Matrix> brute_conjugator(const EnumeratedGroup& g, const Matrix& x, const Matrix& y) {
  const GroupSpec& s = g.spec();
  RawOps ops{s.n, *s.F, static_cast<uint64_t>(s.F->size())};
  Raw xr = x.a, yr = y.a, a(xr.size()), b(xr.size());
  for (size_t i = 0; i < g.size(); ++i) {
    Raw e = ops.decode(g.key(i));
    ops.mul(xr, e, a);
    ops.mul(e, yr, b);
    if (a == b) return g.element(i);
  }
  return std::nullopt;
}

std::optional<uint64_t> closure_order(const std::vector<Matrix>& gens, int n, const FieldPtr& F, uint64_t cap) {
  try {
    return closure_keys(gens, n, F, cap).size();
  } catch (const Error& e) {
    if (e.code == "CapExceeded") return std::nullopt;
    throw;
  }
}

}  // namespace ccg
