#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ccg {

struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& what) : std::runtime_error(what), code(std::move(c)) {}
};

using Elt = int;
using Poly = std::vector<Elt>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Elements are integers in [0,q) encoding coefficient vectors in base p,
// little-endian. An extension field over a base field stores coefficients
// over the base as base-|base| digits, so the encoding stays base-p.
class Field {
 public:
  static FieldPtr make(int p, int k, bool has_bar = false);
  static FieldPtr extension(const FieldPtr& base, const Poly& modulus);

  int p() const { return p_; }
  int k() const { return k_; }
  int size() const { return q_; }
  bool has_bar() const { return has_bar_; }
  const FieldPtr& base() const { return base_; }
  const Poly& modulus() const { return modulus_; }
  int ext_degree() const { return static_cast<int>(modulus_.size()) - 1; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    int s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, long long e) const;
  Elt primitive() const;
  int log(Elt a) const;
  Elt exp(long long e) const;
  Elt from_int(long long v) const;
  Elt bar(Elt a) const;
  int fixed_size() const { return has_bar_ ? sub_q_ : q_; }
  bool is_square(Elt a) const;
  Elt sqrt(Elt a) const;
  bool char_two() const { return p_ == 2; }
  bool same(const Field& o) const;
  std::string describe() const;

 private:
  Field() = default;
  void build_tables();
  Elt slow_mul(Elt a, Elt b) const;

  int p_ = 2, k_ = 1, q_ = 2, sub_q_ = 0;
  bool has_bar_ = false;
  FieldPtr base_;
  Poly modulus_;
  std::vector<int> log_, exp_;
  std::vector<int> add_table_, neg_table_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

namespace poly {

Poly trim(Poly f);
int deg(const Poly& f);
Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly scale(const Field& F, const Poly& a, Elt c);
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
Poly mod(const Field& F, const Poly& a, const Poly& b);
Poly gcd(const Field& F, Poly a, Poly b);
Poly monic(const Field& F, const Poly& a);
Poly powmod(const Field& F, Poly base, long long e, const Poly& m);
Poly derivative(const Field& F, const Poly& f);
Poly power(const Field& F, const Poly& f, int e);
Elt eval(const Field& F, const Poly& f, Elt x);
Poly x();
Poly linear(const Field& F, Elt root);
bool less(const Poly& a, const Poly& b);
bool is_irreducible(const Field& F, const Poly& f);
std::vector<Poly> monic_irreducibles(const Field& F, int d);
std::string to_string(const Poly& f);
Poly parse(const std::string& s);

}  // namespace poly

enum class PhiTag { Phi1, Phi2, Phi3, None };

// For Phi1 and Phi3, g is the monic polynomial itself; for Phi2, f = g g*.
struct PhiClass {
  PhiTag tag = PhiTag::None;
  Poly g;
  Poly g_dual;
};

Elt bar(Elt a, const Field& F);
Elt solve_norm_equation(Elt c, const Field& F);
Poly bar_poly(const Field& F, const Poly& f);
Poly dual_polynomial(const Poly& f, const Field& F);
PhiClass phi_classify(const Poly& f, const Field& F);
std::vector<std::pair<Poly, int>> factorize(const Poly& f, const Field& F);
std::vector<long long> prime_factors(long long n);

}  // namespace ccg
