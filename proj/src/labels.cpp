#include "ccg/labels.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ccg {

int Atom::multiplicity() const {
  int m = 0;
  for (auto [s, a] : uni.parts) m += s * a;
  return m;
}

int partition_size(const Partition& p) {
  int m = 0;
  for (auto [s, a] : p) m += s * a;
  return m;
}

namespace {

void partitions_rec(int left, int maxpart, Partition& cur, std::vector<Partition>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (int s = std::min(left, maxpart); s >= 1; --s)
    for (int a = left / s; a >= 1; --a) {
      cur.push_back({s, a});
      partitions_rec(left - s * a, s - 1, cur, out);
      cur.pop_back();
    }
}

std::string poly_name(const Poly& f) {
  std::ostringstream os;
  bool first = true;
  for (int i = poly::deg(f); i >= 0; --i) {
    if (!f[i]) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || f[i] != 1) os << f[i];
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace

std::vector<Partition> partitions(int m) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(m, m, cur, out);
  return out;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  for (size_t i = 0; i < p.size(); ++i) {
    os << (i ? "," : "") << p[i].first;
    if (p[i].second > 1) os << "^" << p[i].second;
  }
  return os.str();
}

std::string to_string(const Atom& a, const GroupSpec& spec) {
  std::ostringstream os;
  os << poly_name(a.f);
  if (a.tag == PhiTag::Phi2) os << "|" << poly_name(a.f_dual);
  os << ":[";
  const UniLabel& u = a.uni;
  bool even_q = spec.F->char_two();
  if (a.tag == PhiTag::Phi1 && !spec.unitary() && even_q && !spec.linear()) {
    std::vector<std::string> items;
    for (auto [m, c] : u.W) items.push_back("W" + std::to_string(m) + (c > 1 ? "^" + std::to_string(c) : ""));
    for (auto [k, c] : u.V) items.push_back("V" + std::to_string(2 * k) + (c > 1 ? "^" + std::to_string(c) : ""));
    for (int m : u.Wa) items.push_back("Wa" + std::to_string(m));
    for (int k : u.Va) items.push_back("Va" + std::to_string(2 * k));
    for (size_t i = 0; i < items.size(); ++i) os << (i ? "," : "") << items[i];
  } else {
    size_t bi = 0;
    for (size_t i = 0; i < u.parts.size(); ++i) {
      auto [s, m] = u.parts[i];
      os << (i ? "," : "") << s;
      bool carries = a.tag == PhiTag::Phi1 && ((spec.symplectic() && s % 2 == 0) || (spec.orthogonal() && s % 2 == 1));
      if (carries && bi < u.b.size() && u.b[bi++]) os << "*";
      if (m > 1) os << "^" << m;
    }
  }
  os << "]";
  return os.str();
}

std::string to_string(const ClassLabel& l, const GroupSpec& spec) {
  std::ostringstream os;
  for (size_t i = 0; i < l.atoms.size(); ++i) os << (i ? " ; " : "") << to_string(l.atoms[i], spec);
  if (l.split > 1) os << " #" << l.coset;
  return os.str();
}

std::vector<std::vector<int>> AbelianGroup::elements() const {
  std::vector<std::vector<int>> out{std::vector<int>(moduli.size(), 0)};
  for (size_t i = 0; i < moduli.size(); ++i) {
    std::vector<std::vector<int>> next;
    for (auto& e : out)
      for (int v = 0; v < moduli[i]; ++v) {
        auto f = e;
        f[i] = v;
        next.push_back(f);
      }
    out = next;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> AbelianGroup::add(const std::vector<int>& a, const std::vector<int>& b) const {
  std::vector<int> c(moduli.size());
  for (size_t i = 0; i < moduli.size(); ++i) c[i] = (a[i] + b[i]) % moduli[i];
  return c;
}

std::vector<int> AbelianGroup::neg(const std::vector<int>& a) const {
  std::vector<int> c(moduli.size());
  for (size_t i = 0; i < moduli.size(); ++i) c[i] = (moduli[i] - a[i]) % moduli[i];
  return c;
}

std::vector<std::vector<int>> AbelianGroup::span(const std::vector<std::vector<int>>& gens) const {
  std::set<std::vector<int>> seen{std::vector<int>(moduli.size(), 0)};
  std::vector<std::vector<int>> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    auto e = todo.back();
    todo.pop_back();
    for (auto& g : gens) {
      auto f = add(e, g);
      if (seen.insert(f).second) todo.push_back(f);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> AbelianGroup::coset_reps(const std::vector<std::vector<int>>& H) const {
  std::set<std::vector<int>> covered;
  std::vector<std::vector<int>> reps;
  for (auto& a : elements()) {
    if (covered.count(a)) continue;
    reps.push_back(a);
    for (auto& h : H) covered.insert(add(a, h));
  }
  return reps;
}

int AbelianGroup::coset_index(const std::vector<std::vector<int>>& H, const std::vector<int>& a) const {
  auto reps = coset_reps(H);
  std::set<std::vector<int>> hs(H.begin(), H.end());
  for (size_t i = 0; i < reps.size(); ++i)
    if (hs.count(add(a, neg(reps[i])))) return static_cast<int>(i);
  throw Error("Internal", "element outside every coset");
}

}  // namespace ccg
