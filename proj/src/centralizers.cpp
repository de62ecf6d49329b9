#include "ccg/centralizers.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "ccg/classes.hpp"
#include "ccg/frame.hpp"

namespace ccg {

BigInt AtomStructure::order() const {
  BigInt r = radical;
  for (auto& f : factors) r *= f.order;
  return r;
}

namespace {

std::string qname(const BigInt& Q) { return Q.str(); }

// sum over pairs i<j of min(n_i,n_j) r_i r_j, and sum (n_i-1) r_i^2
std::pair<long long, long long> pair_sums(const Partition& parts) {
  long long cross = 0, diag = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    auto [ni, ri] = parts[i];
    diag += static_cast<long long>(ni - 1) * ri * ri;
    for (size_t j = i + 1; j < parts.size(); ++j) {
      auto [nj, rj] = parts[j];
      cross += static_cast<long long>(std::min(ni, nj)) * ri * rj;
    }
  }
  return {cross, diag};
}

AtomStructure gl_structure(const Partition& parts, const BigInt& Q) {
  auto [cross, diag] = pair_sums(parts);
  AtomStructure s;
  s.radical = big_pow(Q, static_cast<int>(2 * cross + diag));
  for (auto [l, a] : parts) s.factors.push_back({"GL(" + std::to_string(a) + "," + qname(Q) + ")", gl_order(a, Q)});
  return s;
}

AtomStructure unitary_structure(const Partition& parts, const BigInt& Q) {
  auto [cross, diag] = pair_sums(parts);
  AtomStructure s;
  // |U| = (Q^2)^gamma with 2 gamma = 2 cross + diag
  s.radical = big_pow(Q, static_cast<int>(2 * cross + diag));
  for (auto [l, a] : parts) s.factors.push_back({"U(" + std::to_string(a) + "," + qname(Q) + ")", u_order(a, Q)});
  return s;
}

AtomStructure odd_unipotent_structure(const UniLabel& u, const GroupSpec& spec) {
  const Field& F = *spec.F;
  int q = F.size();
  bool sp = spec.symplectic();
  int delta = sp ? 1 : -1;
  auto [cross, diag] = pair_sums(u.parts);
  long long twice = 2 * cross + diag;
  for (auto [n, r] : u.parts)
    if (n % 2 == 0) twice += delta * r;
  if (twice % 2) throw Error("Internal", "non-integral unipotent radical exponent");
  AtomStructure s;
  s.radical = big_pow(BigInt(q), static_cast<int>(twice / 2));
  Elt alpha = least_nonsquare(F);
  size_t bi = 0;
  for (auto [n, a] : u.parts) {
    bool vtype = sp ? n % 2 == 0 : n % 2 == 1;
    if (vtype) {
      Elt b = u.b.at(bi++) ? alpha : 1;
      if (a % 2) {
        s.factors.push_back({"O(" + std::to_string(a) + "," + std::to_string(q) + ")", o_order(FormType::Circle, a, q)});
      } else {
        Elt d = (a / 2) % 2 ? F.neg(b) : b;
        FormType t = F.is_square(d) ? FormType::Plus : FormType::Minus;
        s.factors.push_back({"O" + to_string(t) + "(" + std::to_string(a) + "," + std::to_string(q) + ")", o_order(t, a, q)});
      }
    } else {
      s.factors.push_back({"Sp(" + std::to_string(a) + "," + std::to_string(q) + ")", sp_order(a, q)});
    }
  }
  return s;
}

AtomStructure even_unipotent_structure(const UniLabel& u, const GroupSpec& spec) {
  int q = spec.F->size();
  bool sp = spec.symplectic();
  int sigma = sp ? -1 : 1;
  std::map<int, std::pair<int, bool>> W;  // m -> (a, has W_alpha)
  for (auto [m, a] : u.W) W[m].first += a;
  for (int m : u.Wa) {
    W[m].first += 1;
    W[m].second = true;
  }
  std::map<int, int, std::greater<int>> V;  // k -> b, decreasing
  for (auto [k, c] : u.V) V[k] += c;
  for (int k : u.Va) V[k] += 1;
  auto has_k = [&](int k) { return V.count(k) > 0; };
  std::vector<int> L;
  for (auto& [m, w] : W)
    for (int i = 0; i < 2 * w.first; ++i) L.push_back(m);
  for (auto& [k, b] : V)
    for (int i = 0; i < b; ++i) L.push_back(2 * k);
  std::sort(L.rbegin(), L.rend());
  long long twice = 0;
  for (size_t nu = 0; nu < L.size(); ++nu) twice += 2LL * static_cast<long long>(nu + 1) * L[nu];
  for (auto& [m, w] : W) {
    long long chi2 = m % 2 ? m + sigma : (has_k(m / 2) ? m + sigma + 1 : m + sigma - 1);
    twice -= 2LL * w.first * chi2;
  }
  for (auto& [k, b] : V) twice -= static_cast<long long>(b) * (sp ? 2 * k : 2 * k + 2);
  AtomStructure s;
  for (auto& [m, w] : W) {
    int a = w.first;
    twice -= 4LL * a * a;
    bool inS = m % 2 == 0 || has_k((m - 1) / 2) || has_k((m + 1) / 2) || (m == 1 && sp);
    twice += 2LL * (inS ? -a : a);
    if (inS) {
      s.factors.push_back({"Sp(" + std::to_string(2 * a) + "," + std::to_string(q) + ")", sp_order(2 * a, q)});
    } else {
      FormType t = w.second ? FormType::Minus : FormType::Plus;
      s.factors.push_back({"O" + to_string(t) + "(" + std::to_string(2 * a) + "," + std::to_string(q) + ")", o_order(t, 2 * a, q)});
    }
  }
  if (twice % 2) throw Error("Internal", "non-integral unipotent radical exponent");
  s.radical = big_pow(BigInt(q), static_cast<int>(twice / 2));
  std::vector<int> ks;
  for (auto& [k, b] : V) ks.push_back(k);
  int t = 0;
  for (size_t j = 0; j + 1 < ks.size(); ++j)
    if (ks[j] - ks[j + 1] >= 2) ++t;
  int delta = (ks.empty() || (sp && ks.back() == 1)) ? 0 : 1;
  if (t + delta) s.factors.push_back({"Z2^" + std::to_string(t + delta), big_pow(BigInt(2), t + delta)});
  return s;
}

}  // namespace

AtomStructure atom_structure(const Atom& a, const GroupSpec& spec) {
  BigInt Fq = spec.F->size();
  int d = poly::deg(a.f);
  switch (a.tag) {
    case PhiTag::None:
    case PhiTag::Phi2:
      return gl_structure(a.uni.parts, big_pow(Fq, d));
    case PhiTag::Phi3: {
      // fixed field of the involution on F[t]/f has |F|^{d/2} elements
      BigInt Q = 1;
      int e = spec.F->k() * d / 2;
      Q = big_pow(BigInt(spec.F->p()), e);
      return unitary_structure(a.uni.parts, Q);
    }
    case PhiTag::Phi1:
      if (spec.unitary()) return unitary_structure(a.uni.parts, spec.q);
      if (spec.F->char_two()) return even_unipotent_structure(a.uni, spec);
      return odd_unipotent_structure(a.uni, spec);
  }
  throw Error("Internal", "unknown atom kind");
}

BigInt ambient_centralizer_order(const std::vector<Atom>& atoms, const GroupSpec& spec) {
  BigInt r = 1;
  for (auto& a : atoms) r *= atom_structure(a, spec).order();
  return r;
}

bool is_unipotent(const Matrix& x) {
  Matrix n = x - Matrix::identity(x.r, x.F);
  return power(n, x.r).is_zero();
}

namespace {

struct KeyHash {
  size_t operator()(const std::vector<Elt>& v) const {
    size_t h = 1469598103934665603ULL;
    for (Elt e : v) h = (h ^ static_cast<size_t>(e)) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

uint64_t generated_order(const std::vector<Matrix>& gens, uint64_t cap) {
  if (gens.empty()) return 1;
  int n = gens[0].r;
  Matrix I = Matrix::identity(n, gens[0].F);
  std::unordered_set<std::vector<Elt>, KeyHash> seen{I.a};
  std::vector<Matrix> todo{I};
  while (!todo.empty()) {
    Matrix e = todo.back();
    todo.pop_back();
    for (auto& g : gens) {
      Matrix f = e * g;
      if (seen.insert(f.a).second) {
        if (seen.size() > cap) return 0;
        todo.push_back(f);
      }
    }
  }
  return seen.size();
}

namespace {

bool fits(const BigInt& order, uint64_t cap) { return order <= BigInt(cap); }

// Generators of the centralizer of one atom of the frame in the ambient group,
// in Jordan coordinates of the atom.
std::vector<Matrix> atom_generators(const Frame& fr, int i, const BigInt& order, std::mt19937& rng, bool& verified) {
  const auto& a = fr.atoms[i];
  const FieldPtr& F = fr.J.F;
  std::vector<Matrix> gens;
  if (a.tag == PhiTag::None || a.tag == PhiTag::Phi2) {
    auto g = gl_block_generators(a.f, a.parts, F);
    if (a.tag == PhiTag::None) {
      gens = g;
    } else {
      Form fa = atom_form(fr, i);
      int h = a.dim / 2;
      Matrix A = block(fa.gram, 0, h, h, h);
      Matrix Ai = inverse(A);
      for (auto& z : g) gens.push_back(direct_sum({z, star(Ai * inverse(z) * A)}));
    }
    if (fits(order, kClosureCap)) verified = BigInt(generated_order(gens, kClosureCap)) == order;
    return gens;
  }
  if (order == 1) return gens;
  if (!fits(order, kClosureCap)) {
    verified = false;
    for (int k = 0; k < 8; ++k) gens.push_back(random_atom_element(fr, i, rng));
    return gens;
  }
  uint64_t cur = 1;
  for (int tries = 0; tries < 64 && BigInt(cur) != order; ++tries) {
    Matrix z = random_atom_element(fr, i, rng);
    gens.push_back(z);
    uint64_t next = generated_order(gens, kClosureCap);
    if (next == cur) gens.pop_back();
    else cur = next;
  }
  verified = verified && BigInt(cur) == order;
  return gens;
}

CentralizerDescription describe(const Matrix& x, const GroupSpec& spec, const std::vector<Atom>& atoms,
                                const std::vector<std::vector<int>>& H, bool want_gens, uint32_t seed) {
  CentralizerDescription d;
  GroupSpec amb = spec.isometry_group();
  d.ambient_order = 1;
  std::vector<AtomStructure> parts;
  for (auto& a : atoms) {
    parts.push_back(atom_structure(a, amb));
    d.radical_order *= parts.back().radical;
    for (auto& f : parts.back().factors) d.factors.push_back(f);
    d.ambient_order *= parts.back().order();
  }
  d.order = d.ambient_order / static_cast<int>(H.size());
  if (!want_gens) return d;
  Frame fr = make_frame(x, spec);
  if (fr.atoms.size() != atoms.size()) throw Error("Internal", "frame and label disagree");
  std::mt19937 rng(seed);
  bool verified = true;
  std::vector<Matrix> cgens;
  for (size_t i = 0; i < atoms.size(); ++i) {
    for (auto& w : atom_generators(fr, static_cast<int>(i), parts[i].order(), rng, verified)) {
      Matrix g = to_original(fr, embed_atom(fr, static_cast<int>(i), w));
      if (g * x != x * g) throw Error("Internal", "centralizer generator does not commute");
      cgens.push_back(g);
    }
  }
  if (phi_moduli(spec).empty()) {
    d.generators = cgens;
    d.verified = verified;
    return d;
  }
  // Schreier generators of the kernel of phi on the generated group
  AbelianGroup A{phi_moduli(spec)};
  std::map<std::vector<int>, Matrix> trans;
  trans.emplace(std::vector<int>(A.moduli.size(), 0), Matrix::identity(x.r, x.F));
  std::vector<std::vector<int>> images;
  for (auto& g : cgens) images.push_back(phi(spec, g));
  std::vector<std::vector<int>> todo{std::vector<int>(A.moduli.size(), 0)};
  while (!todo.empty()) {
    auto h = todo.back();
    todo.pop_back();
    for (size_t k = 0; k < cgens.size(); ++k) {
      auto h2 = A.add(h, images[k]);
      if (!trans.count(h2)) {
        trans.emplace(h2, trans.at(h) * cgens[k]);
        todo.push_back(h2);
      }
    }
  }
  if (trans.size() != H.size()) verified = false;
  std::set<std::vector<Elt>> seen;
  for (auto& [h, t] : trans)
    for (size_t k = 0; k < cgens.size(); ++k) {
      Matrix s = t * cgens[k] * inverse(trans.at(A.add(h, images[k])));
      if (s.is_identity() || !seen.insert(s.a).second) continue;
      d.generators.push_back(s);
    }
  d.verified = verified;
  return d;
}

std::vector<Atom> linear_atoms(const Frame& fr) {
  std::vector<Atom> atoms;
  for (auto& r : fr.atoms) {
    Atom a;
    a.tag = PhiTag::None;
    a.f = r.f;
    a.uni.parts = r.parts;
    atoms.push_back(a);
  }
  return atoms;
}

GroupSpec linear_spec(const Matrix& x, Family fam) {
  GroupSpec s = make_group(fam, x.r, x.F->size());
  if (!same_field(s.F, x.F)) throw Error("InvalidField", "matrix field is not a standard field");
  return s;
}

}  // namespace

CentralizerDescription centralizer(const Matrix& x, const ClassTable& table, bool generators, uint32_t seed) {
  const GroupSpec& spec = table.spec();
  if (!contains(spec, x)) throw Error("NotInGroup", "element is not in " + spec.name());
  auto loc = table.locate(x);
  const auto& amb = table.ambient()[loc.ambient];
  return describe(x, spec, amb.atoms, amb.H, generators, seed);
}

CentralizerDescription centralizer(const Matrix& x, const GroupSpec& spec, bool generators, uint32_t seed) {
  if (spec.linear() || spec.unitary()) {
    if (!contains(spec, x)) throw Error("NotInGroup", "element is not in " + spec.name());
    Frame fr = make_frame(x, spec);
    std::vector<Atom> atoms;
    for (auto& r : fr.atoms) {
      Atom a;
      a.tag = r.tag;
      a.f = r.f;
      a.f_dual = r.f_dual;
      a.uni.parts = r.parts;
      atoms.push_back(a);
    }
    return describe(x, spec, atoms, centralizer_phi_image(atoms, spec), generators, seed);
  }
  ClassTable t(spec);
  return centralizer(x, t, generators, seed);
}

CentralizerDescription gl_centralizer(const Matrix& x, bool generators) {
  GroupSpec s = linear_spec(x, Family::GL);
  if (det(x) == 0) throw Error("SingularElement", "element is not invertible");
  Frame fr = make_frame(x, s);
  return describe(x, s, linear_atoms(fr), {{}}, generators, 0);
}

CentralizerDescription gl_unipotent_centralizer(const Matrix& x) {
  if (!is_unipotent(x)) throw Error("NotUnipotent", "element is not unipotent");
  return gl_centralizer(x);
}

CentralizerDescription sl_centralizer(const Matrix& x) {
  GroupSpec s = linear_spec(x, Family::SL);
  return centralizer(x, s);
}

CentralizerDescription unipotent_centralizer(const Matrix& x, const GroupSpec& spec) {
  if (!is_unipotent(x)) throw Error("NotUnipotent", "element is not unipotent");
  return centralizer(x, spec);
}

}  // namespace ccg
