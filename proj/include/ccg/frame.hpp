#pragma once

#include <optional>
#include <random>
#include <vector>

#include "ccg/labels.hpp"

namespace ccg {

// Contiguous range of the Jordan basis carrying one generalized elementary
// divisor class: the blocks of f, followed by those of f* for a Phi2 pair.
struct AtomRange {
  PhiTag tag = PhiTag::None;
  Poly f, f_dual;
  int start = 0, dim = 0;
  Partition parts;
};

// P x P^-1 = J, with the form carried to the Jordan basis.
struct Frame {
  Matrix x, J, P, Pinv;
  std::vector<JordanBlock> blocks;
  std::vector<AtomRange> atoms;
  std::optional<Form> form;
};

// Uses the ambient family of spec: linear groups get one range per
// irreducible factor, isometry groups one per Phi-class.
Frame make_frame(const Matrix& x, const GroupSpec& spec);

Matrix atom_part(const Frame& fr, int i, const Matrix& m);
Form atom_form(const Frame& fr, int i);
// Identity outside atom i, w on it; in Jordan coordinates.
Matrix embed_atom(const Frame& fr, int i, const Matrix& w);
Matrix to_original(const Frame& fr, const Matrix& w);

// Generators of the centralizer of a block of E-unipotent Jordan blocks
// J_f^{sizes} in GL, with E = F[t]/f; returned in Jordan coordinates.
std::vector<Matrix> gl_block_generators(const Poly& f, const Partition& parts, const FieldPtr& F);

// A random element of the centralizer of J restricted to atom i that
// preserves the restricted form (or is merely invertible for linear groups).
Matrix random_atom_element(const Frame& fr, int i, std::mt19937& rng);

}  // namespace ccg
