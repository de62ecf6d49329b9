#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccg/matrix.hpp"

namespace ccg {

enum class FormKind { Alternating, Symmetric, Hermitian, Quadratic };
enum class FormType { Plus, Minus, Circle, None };

struct Form {
  FormKind kind = FormKind::Alternating;
  Matrix gram;
  FormType type = FormType::None;
  int n() const { return gram.r; }
};

std::string to_string(FormKind k);
std::string to_string(FormType t);
FormKind parse_form_kind(const std::string& s);
FormType parse_form_type(const std::string& s);

Matrix polar(const Form& f);
Matrix normalize_quadratic(const Matrix& a);
Form transform_form(const Form& f, const Matrix& t);
Form direct_sum(const std::vector<Form>& forms);
bool same_form(const Form& a, const Form& b);
Elt beta(const Form& f, const Vec& u, const Vec& v);
Elt qvalue(const Form& f, const Vec& v);

bool is_isometry(const Matrix& x, const Form& f);
FormType form_type(const Form& f);

Elt least_nonsquare(const Field& F);
Elt minus_parameter(const Field& F);
Form standard_form(FormKind kind, int n, FormType type, const FieldPtr& F);

// T with T gram T* equal to the returned standard form.
std::pair<Matrix, Form> standardize(const Form& f);
std::optional<Matrix> congruence_transform(const Form& b1, const Form& b2);

struct WallFormData {
  Matrix basis;
  Matrix gram;
};

WallFormData wall_form(const Matrix& x, const Form& f);
int spinor_norm(const Matrix& x, const Form& f);

}  // namespace ccg
