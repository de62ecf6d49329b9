#include "ccg/field.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ccg {

namespace {

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<int> digits(int v, int base, int len) {
  std::vector<int> d(len);
  for (int i = 0; i < len; ++i) {
    d[i] = v % base;
    v /= base;
  }
  return d;
}

int undigits(const std::vector<int>& d, int base) {
  int v = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * base + d[i];
  return v;
}

}  // namespace

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Elt Field::slow_mul(Elt a, Elt b) const {
  if (!base_) {
    // coefficients over F_p, reduce modulo the stored monic modulus
    auto x = digits(a, p_, k_), y = digits(b, p_, k_);
    std::vector<int> r(2 * k_, 0);
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p_;
    for (int i = 2 * k_ - 1; i >= k_; --i) {
      int c = r[i];
      if (!c) continue;
      for (int j = 0; j <= k_; ++j)
        r[i - k_ + j] = ((r[i - k_ + j] - c * modulus_[j]) % p_ + p_) % p_;
    }
    r.resize(k_);
    return undigits(r, p_);
  }
  const Field& B = *base_;
  int d = ext_degree(), Q = B.size();
  auto x = digits(a, Q, d), y = digits(b, Q, d);
  std::vector<int> r(2 * d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) r[i + j] = B.add(r[i + j], B.mul(x[i], y[j]));
  for (int i = 2 * d - 1; i >= d; --i) {
    int c = r[i];
    if (!c) continue;
    for (int j = 0; j <= d; ++j) r[i - d + j] = B.sub(r[i - d + j], B.mul(c, modulus_[j]));
  }
  r.resize(d);
  return undigits(r, Q);
}

void Field::build_tables() {
  neg_table_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    auto d = digits(a, p_, k_);
    for (auto& c : d) c = (p_ - c) % p_;
    neg_table_[a] = undigits(d, p_);
  }
  if (q_ <= 1024) {
    add_table_.resize(static_cast<size_t>(q_) * q_);
    for (int a = 0; a < q_; ++a) {
      auto x = digits(a, p_, k_);
      for (int b = 0; b < q_; ++b) {
        auto y = digits(b, p_, k_);
        for (int i = 0; i < k_; ++i) y[i] = (y[i] + x[i]) % p_;
        add_table_[static_cast<size_t>(a) * q_ + b] = undigits(y, p_);
      }
    }
  }
  auto slow_pow = [&](Elt a, long long e) {
    Elt r = 1;
    while (e > 0) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  long long order = q_ - 1;
  auto ps = prime_factors(order);
  Elt g = 1;
  for (Elt c = 1; c < q_; ++c) {
    if (slow_pow(c, order) != 1) continue;
    bool prim = true;
    for (auto r : ps)
      if (slow_pow(c, order / r) == 1) prim = false;
    if (prim) {
      g = c;
      break;
    }
  }
  exp_.assign(q_ - 1, 1);
  log_.assign(q_, -1);
  Elt cur = 1;
  for (int i = 0; i < q_ - 1; ++i) {
    exp_[i] = cur;
    log_[cur] = i;
    cur = slow_mul(cur, g);
  }
}

FieldPtr Field::make(int p, int k, bool has_bar) {
  if (p < 2 || k < 1) throw Error("InvalidField", "bad field parameters");
  if (has_bar && k % 2) throw Error("InvalidField", "a field with bar needs even degree");
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->k_ = k;
  f->q_ = ipow(p, k);
  f->has_bar_ = has_bar;
  f->sub_q_ = has_bar ? ipow(p, k / 2) : 0;
  if (k == 1) {
    f->modulus_ = {0, 1};
  } else {
    auto Fp = make(p, 1);
    f->modulus_ = poly::monic_irreducibles(*Fp, k).front();
  }
  f->build_tables();
  return f;
}

FieldPtr Field::extension(const FieldPtr& base, const Poly& modulus) {
  Poly m = poly::trim(modulus);
  if (poly::deg(m) < 1 || m.back() != 1) throw Error("InvalidField", "extension modulus must be monic");
  if (!poly::is_irreducible(*base, m)) throw Error("InvalidField", "extension modulus must be irreducible");
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = base->p_;
  f->k_ = base->k_ * poly::deg(m);
  f->q_ = ipow(base->q_, poly::deg(m));
  f->base_ = base;
  f->modulus_ = m;
  f->build_tables();
  return f;
}

Elt Field::add(Elt a, Elt b) const {
  if (!add_table_.empty()) return add_table_[static_cast<size_t>(a) * q_ + b];
  int r = 0, m = 1;
  for (int i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * m;
    a /= p_;
    b /= p_;
    m *= p_;
  }
  return r;
}

Elt Field::neg(Elt a) const { return neg_table_[a]; }

Elt Field::inv(Elt a) const {
  if (a == 0) throw Error("DivisionByZero", "inverse of zero");
  int l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

Elt Field::pow(Elt a, long long e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  long long m = q_ - 1;
  long long r = (static_cast<long long>(log_[a]) * (((e % m) + m) % m)) % m;
  return exp_[r];
}

Elt Field::primitive() const { return q_ == 2 ? 1 : exp_[1]; }

int Field::log(Elt a) const {
  if (a == 0) throw Error("DivisionByZero", "log of zero");
  return log_[a];
}

Elt Field::exp(long long e) const {
  long long m = q_ - 1;
  return exp_[((e % m) + m) % m];
}

Elt Field::from_int(long long v) const { return static_cast<Elt>(((v % p_) + p_) % p_); }

Elt Field::bar(Elt a) const { return has_bar_ ? pow(a, sub_q_) : a; }

bool Field::is_square(Elt a) const {
  if (a == 0 || p_ == 2) return true;
  return log_[a] % 2 == 0;
}

Elt Field::sqrt(Elt a) const {
  if (a == 0) return 0;
  if (p_ == 2) return pow(a, q_ / 2);
  if (log_[a] % 2) throw Error("NotSquare", "element is not a square");
  return exp_[log_[a] / 2];
}

bool Field::same(const Field& o) const {
  if (this == &o) return true;
  if (p_ != o.p_ || k_ != o.k_ || has_bar_ != o.has_bar_ || modulus_ != o.modulus_) return false;
  if (!base_ && !o.base_) return true;
  if (!base_ || !o.base_) return false;
  return base_->same(*o.base_);
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (base_) os << " over " << base_->describe() << " mod [" << poly::to_string(modulus_) << "]";
  return os.str();
}

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || (a && b && a->same(*b)); }

namespace poly {

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    Elt x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = F.add(x, y);
  }
  return trim(r);
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    Elt x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = F.sub(x, y);
  }
  return trim(r);
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return trim(r);
}

Poly scale(const Field& F, const Poly& a, Elt c) {
  Poly r(a);
  for (auto& x : r) x = F.mul(x, c);
  return trim(r);
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
  Poly bb = trim(b);
  if (bb.empty()) throw Error("DivisionByZero", "polynomial division by zero");
  Poly r = trim(a);
  if (r.size() < bb.size()) return {{}, r};
  Poly qt(r.size() - bb.size() + 1, 0);
  Elt li = F.inv(bb.back());
  for (int i = deg(r); i >= deg(bb); --i) {
    Elt c = F.mul(r[i], li);
    if (!c) continue;
    int s = i - deg(bb);
    qt[s] = c;
    for (size_t j = 0; j < bb.size(); ++j) r[s + j] = F.sub(r[s + j], F.mul(c, bb[j]));
  }
  return {trim(qt), trim(r)};
}

Poly mod(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly monic(const Field& F, const Poly& a) {
  Poly t = trim(a);
  if (t.empty()) return t;
  return scale(F, t, F.inv(t.back()));
}

Poly gcd(const Field& F, Poly a, Poly b) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Poly powmod(const Field& F, Poly base, long long e, const Poly& m) {
  Poly r{1};
  base = mod(F, base, m);
  while (e > 0) {
    if (e & 1) r = mod(F, mul(F, r, base), m);
    base = mod(F, mul(F, base, base), m);
    e >>= 1;
  }
  return mod(F, r, m);
}

Poly derivative(const Field& F, const Poly& f) {
  if (f.size() <= 1) return {};
  Poly r(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) r[i - 1] = F.mul(F.from_int(static_cast<long long>(i)), f[i]);
  return trim(r);
}

Poly power(const Field& F, const Poly& f, int e) {
  Poly r{1};
  for (int i = 0; i < e; ++i) r = mul(F, r, f);
  return r;
}

Elt eval(const Field& F, const Poly& f, Elt x) {
  Elt r = 0;
  for (int i = deg(f); i >= 0; --i) r = F.add(F.mul(r, x), f[i]);
  return r;
}

Poly x() { return {0, 1}; }

Poly linear(const Field& F, Elt root) { return {F.neg(root), 1}; }

bool less(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (int i = deg(a); i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool is_irreducible(const Field& F, const Poly& f0) {
  Poly f = monic(F, f0);
  int n = deg(f);
  if (n < 1) return false;
  if (n == 1) return true;
  if (f[0] == 0) return false;
  Poly h = x(), X = x();
  std::vector<Poly> hs{h};
  for (int i = 1; i <= n; ++i) {
    h = powmod(F, h, F.size(), f);
    hs.push_back(h);
  }
  if (!sub(F, hs[n], mod(F, X, f)).empty()) return false;
  for (auto r : prime_factors(n)) {
    Poly g = gcd(F, f, sub(F, hs[n / r], X));
    if (deg(g) > 0) return false;
  }
  return true;
}

std::vector<Poly> monic_irreducibles(const Field& F, int d) {
  std::vector<Poly> out;
  int q = F.size();
  long long total = 1;
  for (int i = 0; i < d; ++i) total *= q;
  for (long long idx = 0; idx < total; ++idx) {
    Poly f(d + 1, 0);
    long long v = idx;
    for (int i = 0; i < d; ++i) {
      f[i] = static_cast<Elt>(v % q);
      v /= q;
    }
    f[d] = 1;
    if (is_irreducible(F, f)) out.push_back(f);
  }
  return out;
}

std::string to_string(const Poly& f) {
  std::ostringstream os;
  for (size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
  return os.str();
}

Poly parse(const std::string& s) {
  std::istringstream is(s);
  Poly f;
  int v;
  while (is >> v) f.push_back(v);
  return trim(f);
}

}  // namespace poly

Elt bar(Elt a, const Field& F) { return F.bar(a); }

Elt solve_norm_equation(Elt c, const Field& F) {
  if (c == 0) throw Error("DegenerateTarget", "norm equation with zero target");
  if (!F.has_bar()) return c;
  int s = F.fixed_size() + 1;
  int l = F.log(c);
  if (l % s) throw Error("NotInSubfield", "target is not in the fixed field");
  return F.exp(l / s);
}

Poly bar_poly(const Field& F, const Poly& f) {
  Poly r(f);
  for (auto& c : r) c = F.bar(c);
  return r;
}

Poly dual_polynomial(const Poly& f0, const Field& F) {
  Poly f = poly::trim(f0);
  if (f.empty() || f[0] == 0) throw Error("ZeroConstantTerm", "dual polynomial needs a nonzero constant term");
  int d = poly::deg(f);
  Elt c = F.inv(F.bar(f[0]));
  Poly r(d + 1);
  for (int i = 0; i <= d; ++i) r[d - i] = F.mul(c, F.bar(f[i]));
  return r;
}

PhiClass phi_classify(const Poly& f0, const Field& F) {
  Poly f = poly::trim(f0);
  if (f.empty() || f[0] == 0) throw Error("ZeroConstantTerm", "classification needs a nonzero constant term");
  PhiClass out;
  auto fac = factorize(f, F);
  if (fac.size() == 1 && fac[0].second == 1) {
    if (dual_polynomial(f, F) == poly::monic(F, f)) {
      out.tag = poly::deg(f) == 1 ? PhiTag::Phi1 : PhiTag::Phi3;
      out.g = poly::monic(F, f);
    }
    return out;
  }
  if (fac.size() == 2 && fac[0].second == 1 && fac[1].second == 1) {
    const Poly& g = fac[0].first;
    const Poly& h = fac[1].first;
    if (dual_polynomial(g, F) == h) {
      out.tag = PhiTag::Phi2;
      out.g = g;
      out.g_dual = h;
    }
  }
  return out;
}

namespace {

using FacList = std::vector<std::pair<Poly, int>>;

Poly pth_root(const Field& F, const Poly& c) {
  int p = F.p();
  Poly r;
  for (size_t i = 0; i < c.size(); i += p) r.push_back(F.pow(c[i], F.size() / p));
  return poly::trim(r);
}

void squarefree(const Field& F, const Poly& f, int mult, FacList& out) {
  using namespace poly;
  if (deg(f) < 1) return;
  Poly c = gcd(F, f, derivative(F, f));
  Poly w = divmod(F, f, c).first;
  int i = 1;
  while (deg(w) > 0) {
    Poly y = gcd(F, w, c);
    Poly fac = divmod(F, w, y).first;
    if (deg(fac) > 0) out.push_back({monic(F, fac), i * mult});
    w = y;
    c = divmod(F, c, y).first;
    ++i;
  }
  if (deg(c) > 0) squarefree(F, pth_root(F, monic(F, c)), mult * F.p(), out);
}

void equal_degree(const Field& F, const Poly& h, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  using namespace poly;
  int n = deg(h);
  if (n == d) {
    out.push_back(monic(F, h));
    return;
  }
  std::uniform_int_distribution<int> pick(0, F.size() - 1);
  long long qd = 1;
  for (int i = 0; i < d; ++i) qd *= F.size();
  while (true) {
    Poly a(n);
    for (auto& c : a) c = pick(rng);
    a = trim(a);
    if (deg(a) < 1) continue;
    Poly b;
    if (F.p() == 2) {
      Poly t = a, s = a;
      for (int i = 1; i < F.k() * d; ++i) {
        t = mod(F, mul(F, t, t), h);
        s = add(F, s, t);
      }
      b = s;
    } else {
      b = sub(F, powmod(F, a, (qd - 1) / 2, h), Poly{1});
    }
    Poly g = gcd(F, h, b);
    if (deg(g) > 0 && deg(g) < n) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, divmod(F, h, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, int>> factorize(const Poly& f0, const Field& F) {
  using namespace poly;
  Poly f = monic(F, f0);
  if (f.empty()) throw Error("ZeroPolynomial", "cannot factor the zero polynomial");
  FacList sf;
  squarefree(F, f, 1, sf);
  std::mt19937_64 rng(0x5eed);
  FacList out;
  for (auto& [g0, m] : sf) {
    Poly g = g0;
    Poly hx = x();
    int i = 1;
    while (deg(g) >= 2 * i) {
      hx = powmod(F, hx, F.size(), g);
      Poly d = gcd(F, g, sub(F, hx, x()));
      if (deg(d) > 0) {
        std::vector<Poly> parts;
        equal_degree(F, d, i, rng, parts);
        for (auto& p : parts) out.push_back({p, m});
        g = divmod(F, g, d).first;
        hx = mod(F, hx, g);
      }
      ++i;
    }
    if (deg(g) > 0) out.push_back({monic(F, g), m});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return less(a.first, b.first); });
  FacList merged;
  for (auto& e : out) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(e);
  }
  return merged;
}

}  // namespace ccg
