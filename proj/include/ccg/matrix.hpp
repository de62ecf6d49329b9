#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccg/field.hpp"

namespace ccg {

using Vec = std::vector<Elt>;

struct Matrix {
  int r = 0, c = 0;
  FieldPtr F;
  std::vector<Elt> a;

  Matrix() = default;
  Matrix(int rows, int cols, FieldPtr f) : r(rows), c(cols), F(std::move(f)), a(static_cast<size_t>(rows) * cols, 0) {}
  static Matrix identity(int n, const FieldPtr& f);
  static Matrix scalar(int n, Elt s, const FieldPtr& f);
  static Matrix from_rows(const std::vector<Vec>& rows, const FieldPtr& f, int cols = -1);

  Elt& operator()(int i, int j) { return a[static_cast<size_t>(i) * c + j]; }
  Elt operator()(int i, int j) const { return a[static_cast<size_t>(i) * c + j]; }
  Vec row(int i) const { return Vec(a.begin() + static_cast<long>(i) * c, a.begin() + static_cast<long>(i + 1) * c); }
  void set_row(int i, const Vec& v) { std::copy(v.begin(), v.end(), a.begin() + static_cast<long>(i) * c); }
  int n() const { return r; }
  const Field& field() const { return *F; }
  bool operator==(const Matrix& o) const { return r == o.r && c == o.c && a == o.a; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_identity() const;
  bool is_zero() const;
};

Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix scale(const Matrix& x, Elt s);
Matrix transpose(const Matrix& x);
Matrix bar_entries(const Matrix& x);
Matrix star(const Matrix& x);
Matrix inverse(const Matrix& x);
std::optional<Matrix> try_inverse(const Matrix& x);
Matrix power(const Matrix& x, long long e);
Matrix conj(const Matrix& x, const Matrix& z);
Elt det(const Matrix& x);
int rank(const Matrix& x);
Matrix left_kernel(const Matrix& x);
Matrix row_basis(const Matrix& x);
Matrix poly_eval(const Poly& f, const Matrix& x);
Poly charpoly(const Matrix& x);
Matrix direct_sum(const std::vector<Matrix>& blocks);
Matrix block(const Matrix& x, int r0, int c0, int nr, int nc);
void set_block(Matrix& x, int r0, int c0, const Matrix& b);
Matrix companion(const Poly& f, const FieldPtr& F);
Matrix jordan_block(const Poly& f, int size, const FieldPtr& F);
Matrix unipotent_jordan(int size, const FieldPtr& F);
Matrix antidiag(int n, const FieldPtr& F);
Matrix elementary(int n, int i, int j, Elt v, const FieldPtr& F);
std::string to_string(const Matrix& x);

Vec vec_mul(const Vec& v, const Matrix& x);
Elt dot(const Field& F, const Vec& u, const Vec& v);

// Incrementally maintained reduced echelon basis of a subspace of F^dim.
class RowSpace {
 public:
  RowSpace(int dim, FieldPtr F) : dim_(dim), F_(std::move(F)) {}
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool insert(const Vec& v);
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return piv_; }
  Matrix basis() const;

 private:
  int dim_;
  FieldPtr F_;
  std::vector<Vec> rows_;
  std::vector<int> piv_;
};

struct ElementaryDivisor {
  Poly f;
  int e = 1;
  int mult = 1;
  bool operator==(const ElementaryDivisor& o) const { return f == o.f && e == o.e && mult == o.mult; }
};
using EDList = std::vector<ElementaryDivisor>;

EDList elementary_divisors(const Matrix& x);
std::string to_string(const EDList& eds);

struct JordanBlock {
  Poly f;
  int size = 0;
  int start = 0;
};

struct JordanData {
  Matrix J, P;
  std::vector<JordanBlock> blocks;
};

// P X P^-1 = J with blocks J_size(C_f); factors in the given order (sorted when empty),
// sizes descending within a factor.
JordanData jordan_form(const Matrix& x, const std::vector<Poly>& factor_order = {});
Matrix semisimple_part(const Matrix& x);
std::pair<Matrix, Matrix> jordan_decomposition(const Matrix& x);
std::optional<Matrix> gl_conjugator(const Matrix& x, const Matrix& y);

Matrix embed_ext(const Matrix& y, const Poly& f);
std::optional<Matrix> unembed(const Matrix& m, const Poly& f, const FieldPtr& E);
Matrix embed_scalar(Elt lambda, const Poly& f, const FieldPtr& F);

}  // namespace ccg
