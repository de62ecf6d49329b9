#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ccg/forms.hpp"

namespace ccg {

using BigInt = boost::multiprecision::cpp_int;

enum class Family { GL, SL, Sp, U, SU, O, SO, Omega };

// A classical group in its standard basis. For unitary groups q is the size of
// the fixed field and the matrices live over F_{q^2}.
struct GroupSpec {
  Family family = Family::GL;
  int n = 1;
  int q = 2;
  FieldPtr F;
  Form form;
  FormType type = FormType::None;
  std::optional<Matrix> user_to_std;  // T with T B_user T* = B_std

  std::string name() const;
  bool has_form() const { return family != Family::GL && family != Family::SL; }
  bool orthogonal() const { return family == Family::O || family == Family::SO || family == Family::Omega; }
  bool unitary() const { return family == Family::U || family == Family::SU; }
  bool symplectic() const { return family == Family::Sp; }
  bool linear() const { return family == Family::GL || family == Family::SL; }
  Family isometry_family() const;
  GroupSpec isometry_group() const;
};

GroupSpec make_group(Family family, int n, int q, FormType type = FormType::None);
GroupSpec make_group(const std::string& name, int n, int q);
GroupSpec with_user_form(const GroupSpec& spec, const Form& user);
Matrix to_standard(const GroupSpec& spec, const Matrix& x);
Matrix from_standard(const GroupSpec& spec, const Matrix& x);

BigInt big_pow(const BigInt& b, int e);
BigInt gl_order(int n, const BigInt& Q);
BigInt u_order(int n, const BigInt& Q);
BigInt sp_order(int n, const BigInt& Q);
BigInt o_order(FormType t, int n, const BigInt& Q);
BigInt group_order(const GroupSpec& spec);

bool contains(const GroupSpec& spec, const Matrix& x);

// The ambient isometry (or general linear) group C maps onto the finite abelian
// group C/G; phi records the image, coordinate-wise modulo phi_moduli.
std::vector<int> phi_moduli(const GroupSpec& spec);
std::vector<int> phi(const GroupSpec& spec, const Matrix& x);

struct MembershipReport {
  bool admissible = false;
  std::vector<FormType> allowed_types;
};

MembershipReport gl_class_admissible(const EDList& eds, Family family, const Field& F);

struct SemisimpleBlock {
  Matrix x;
  Form form;
};

// Standard isometry block for a single Phi-class: t-lambda, a dual pair g g*, or
// a self-dual irreducible f.
SemisimpleBlock standard_semisimple_block(const PhiClass& c, FormKind kind, const FieldPtr& F);
// Least nondegenerate form of the given kind preserved by x, if any.
std::optional<Form> least_invariant_form(const Matrix& x, FormKind kind);

}  // namespace ccg
