#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ccg/classes.hpp"

namespace ccg {

struct ConjugacyCertificate {
  bool conjugate = false;
  std::optional<Matrix> witness;  // z with z^-1 x z = y
  std::string reason;
};

// Conjugator in the ambient group GL, Sp, U or O of spec (spec's own family is
// ignored beyond selecting that group); elements in the standard basis.
std::optional<Matrix> ambient_conjugator(const Matrix& x, const Matrix& y, const GroupSpec& spec);

ConjugacyCertificate conjugator(const Matrix& x, const Matrix& y, const ClassTable& table, uint32_t seed = 0);
ConjugacyCertificate conjugator(const Matrix& x, const Matrix& y, const GroupSpec& spec, uint32_t seed = 0);
ConjugacyCertificate is_conjugate(const Matrix& x, const Matrix& y, const ClassTable& table);
ConjugacyCertificate is_conjugate(const Matrix& x, const Matrix& y, const GroupSpec& spec);
ConjugacyCertificate unipotent_conjugator(const Matrix& x, const Matrix& y, const ClassTable& table);

}  // namespace ccg
