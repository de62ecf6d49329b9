#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccg/labels.hpp"

namespace ccg {

enum class BlockKind { V, W, Wprime, Valpha, Walpha };

struct BuiltBlock {
  Matrix x;
  Form form;
};

// Unipotent building blocks. V and Valpha take the Jordan block size (2k, or
// 2k+1 for orthogonal groups with q odd); W, Wprime and Walpha take m for
// Jordan type J_m + J_m. For q odd, Valpha is V_b with b the least non-square.
BuiltBlock build_block(BlockKind kind, int size, const GroupSpec& spec);

// The element of an atom's class together with the form it preserves.
BuiltBlock build_atom(const Atom& a, const GroupSpec& spec);

// Image in C/G of the centralizer in the ambient group C of an element with
// the given atoms, as the list of all its elements.
std::vector<std::vector<int>> centralizer_phi_image(const std::vector<Atom>& atoms, const GroupSpec& spec);

// Unipotent parameters on an eigenspace of dimension m.
std::vector<UniLabel> unipotent_labels(const GroupSpec& spec, int m);

struct AmbientClass {
  std::vector<Atom> atoms;
  Matrix rep;                       // standard basis
  BigInt centralizer_order;         // in the ambient group
  std::vector<std::vector<int>> H;  // phi of the ambient centralizer
  std::vector<std::vector<int>> cosets;
};

struct ClassRep {
  ClassLabel label;
  std::string name;
  Matrix rep;
  BigInt size;
  BigInt centralizer_order;
  int ambient = 0;
};

enum class ClassFilter { All, Unipotent, Semisimple };

class ClassTable {
 public:
  explicit ClassTable(GroupSpec spec, ClassFilter filter = ClassFilter::All);

  const GroupSpec& spec() const { return spec_; }
  const BigInt& order() const { return order_; }
  const std::vector<ClassRep>& classes() const { return classes_; }
  const std::vector<AmbientClass>& ambient() const { return ambient_; }
  const AbelianGroup& quotient() const { return quotient_; }
  // An element of the ambient group with the given phi image.
  const Matrix& coset_element(const std::vector<int>& a) const { return transversal_.at(a); }
  std::optional<size_t> find(const std::string& name) const;

  struct Location {
    int ambient = -1;
    Matrix z;  // rep^z = x, z in the ambient group
  };
  // Ambient class of x (which must lie in the ambient group) with a conjugator.
  Location locate(const Matrix& x) const;
  size_t class_of(const Matrix& x) const;

 private:
  GroupSpec spec_;
  BigInt order_;
  AbelianGroup quotient_;
  std::map<std::vector<int>, Matrix> transversal_;
  std::vector<AmbientClass> ambient_;
  std::vector<ClassRep> classes_;
};

std::vector<ClassRep> list_classes(const GroupSpec& spec);
std::vector<ClassRep> unipotent_classes(const GroupSpec& spec);
std::vector<ClassRep> semisimple_classes(const GroupSpec& spec);

ClassLabel class_invariant(const Matrix& x, const ClassTable& table);
ClassLabel class_invariant(const Matrix& x, const GroupSpec& spec);

}  // namespace ccg
