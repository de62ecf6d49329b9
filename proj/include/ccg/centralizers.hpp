#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccg/labels.hpp"

namespace ccg {

class ClassTable;

struct Factor {
  std::string name;
  BigInt order;
};

// Centralizer of one atom in the ambient group: |U| and the reductive factors.
struct AtomStructure {
  BigInt radical = 1;
  std::vector<Factor> factors;
  BigInt order() const;
};

AtomStructure atom_structure(const Atom& a, const GroupSpec& spec);
BigInt ambient_centralizer_order(const std::vector<Atom>& atoms, const GroupSpec& spec);

struct CentralizerDescription {
  BigInt order;           // in the group itself
  BigInt ambient_order;   // in GL, Sp, U or O
  BigInt radical_order = 1;
  std::vector<Factor> factors;
  std::vector<Matrix> generators;
  bool verified = false;  // the generators were checked to reach the formula order
};

constexpr uint64_t kClosureCap = 300'000;

// x in the standard basis of the table's group.
CentralizerDescription centralizer(const Matrix& x, const ClassTable& table, bool generators = true, uint32_t seed = 0);
CentralizerDescription centralizer(const Matrix& x, const GroupSpec& spec, bool generators = true, uint32_t seed = 0);

CentralizerDescription gl_centralizer(const Matrix& x, bool generators = true);
CentralizerDescription gl_unipotent_centralizer(const Matrix& x);
CentralizerDescription sl_centralizer(const Matrix& x);
CentralizerDescription unipotent_centralizer(const Matrix& x, const GroupSpec& spec);

bool is_unipotent(const Matrix& x);

// Order of the matrix group generated by gens, or 0 once it exceeds cap.
uint64_t generated_order(const std::vector<Matrix>& gens, uint64_t cap);

}  // namespace ccg
