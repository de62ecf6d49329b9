#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ccg/groups.hpp"

namespace ccg {

using Partition = std::vector<std::pair<int, int>>;  // (block size, multiplicity), sizes descending

// Parameters of a unipotent class on one eigenspace.
struct UniLabel {
  Partition parts;
  // q odd, symplectic or orthogonal: one flag per distinct size that carries a
  // form parameter (even sizes for Sp, odd sizes for O), in the order of parts;
  // 1 means the parameter is the fixed non-square.
  std::vector<int> b = {};
  // q even, symplectic or orthogonal: W(m)^a, V(2k)^c, W_alpha(m'), V_alpha(2k').
  std::vector<std::pair<int, int>> W = {};  // (m, a)
  std::vector<std::pair<int, int>> V = {};  // (k, c)
  std::vector<int> Wa = {};  // m'
  std::vector<int> Va = {};  // k'

  bool operator==(const UniLabel& o) const {
    return parts == o.parts && b == o.b && W == o.W && V == o.V && Wa == o.Wa && Va == o.Va;
  }
};

// One generalized elementary divisor class of an element: the Phi-polynomial
// together with the unipotent data of the element restricted to it.
struct Atom {
  PhiTag tag = PhiTag::None;  // None for blocks of linear groups
  Poly f;                     // the irreducible factor (g for Phi2)
  Poly f_dual;                // g* for Phi2
  UniLabel uni;

  int degree() const { return poly::deg(f) * (tag == PhiTag::Phi2 ? 2 : 1); }
  int multiplicity() const;
  int dim() const { return degree() * multiplicity(); }
  bool operator==(const Atom& o) const { return tag == o.tag && f == o.f && f_dual == o.f_dual && uni == o.uni; }
};

struct ClassLabel {
  std::vector<Atom> atoms;
  int coset = 0;  // which of the classes the ambient class splits into
  int split = 1;  // how many classes the ambient class splits into
  bool operator==(const ClassLabel& o) const { return atoms == o.atoms && coset == o.coset && split == o.split; }
};

std::string to_string(const Partition& p);
std::string to_string(const Atom& a, const GroupSpec& spec);
std::string to_string(const ClassLabel& l, const GroupSpec& spec);

std::vector<Partition> partitions(int m);
int partition_size(const Partition& p);

// Finite abelian group Z_m1 x ... x Z_mk used for the quotient of the ambient
// group by the subgroup.
struct AbelianGroup {
  std::vector<int> moduli;

  std::vector<std::vector<int>> elements() const;
  std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) const;
  std::vector<int> neg(const std::vector<int>& a) const;
  std::vector<std::vector<int>> span(const std::vector<std::vector<int>>& gens) const;
  // least element of each coset of H, in increasing order
  std::vector<std::vector<int>> coset_reps(const std::vector<std::vector<int>>& H) const;
  int coset_index(const std::vector<std::vector<int>>& H, const std::vector<int>& a) const;
};

}  // namespace ccg
