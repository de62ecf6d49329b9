#include "ccg/verify.hpp"

#include <sstream>

#include "ccg/centralizers.hpp"
#include "ccg/classes.hpp"
#include "ccg/oracle.hpp"

namespace ccg {

VerifyReport verify_against_oracle(const GroupSpec& spec, uint64_t cap, uint32_t seed) {
  VerifyReport r;
  r.group = spec.name();
  ClassTable table(spec);
  auto G = enumerate_group(spec, cap);
  auto cls = brute_classes(G);
  r.order = G.size();
  r.classes = table.classes().size();
  r.oracle_classes = cls.size();

  BigInt sum = 0;
  for (auto& c : table.classes()) sum += c.size;
  r.class_equation = sum == table.order() && table.order() == r.order;
  if (!r.class_equation) r.failures.push_back("class sizes sum to " + sum.str());

  std::vector<int> hits(table.classes().size(), 0);
  r.sizes = true;
  for (auto& c : cls) {
    size_t k = table.class_of(G.element(c[0]));
    ++hits[k];
    if (table.classes()[k].size != c.size()) {
      r.sizes = false;
      r.failures.push_back("size of " + table.classes()[k].name + " is " + table.classes()[k].size.str() + ", oracle " +
                           std::to_string(c.size()));
    }
  }
  r.bijection = cls.size() == table.classes().size();
  for (size_t k = 0; k < hits.size(); ++k)
    if (hits[k] != 1) {
      r.bijection = false;
      r.failures.push_back(table.classes()[k].name + " matched " + std::to_string(hits[k]) + " oracle classes");
    }

  r.centralizer_orders = r.generators = true;
  for (auto& c : table.classes()) {
    auto d = centralizer(c.rep, table, true, seed);
    auto brute = brute_centralizer(G, c.rep).size();
    if (d.order != brute || c.centralizer_order != brute) {
      r.centralizer_orders = false;
      r.failures.push_back("centralizer of " + c.name + " has formula order " + d.order.str() + ", oracle " +
                           std::to_string(brute));
    }
    bool gens_ok = true;
    for (auto& g : d.generators)
      if (!contains(spec, g) || g * c.rep != c.rep * g) gens_ok = false;
    auto closure = closure_order(d.generators, spec.n, spec.F, cap);
    if (!gens_ok || !closure || *closure != brute) {
      r.generators = false;
      r.failures.push_back("generators of the centralizer of " + c.name + " generate order " +
                           (closure ? std::to_string(*closure) : std::string("beyond the cap")));
    }
  }
  return r;
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream os;
  auto line = [&](const char* what, bool ok) { os << (ok ? "PASS " : "FAIL ") << what << "\n"; };
  os << r.group << " order " << r.order << " classes " << r.classes << " oracle classes " << r.oracle_classes << "\n";
  line("class equation", r.class_equation);
  line("class bijection", r.bijection);
  line("class sizes", r.sizes);
  line("centralizer orders", r.centralizer_orders);
  line("centralizer generators", r.generators);
  for (auto& f : r.failures) os << "  " << f << "\n";
  return os.str();
}

}  // namespace ccg
