#pragma once

#include <vector>

#include "n6tri/scalar.hpp"

namespace n6tri {

using Vec = std::vector<Scalar>;

Vec basis_vec(int dim, int k, Backend b = Backend::exact);
Vec zero_vec(int dim, Backend b = Backend::exact);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& s, const Vec& a);
bool vec_eq(const Vec& a, const Vec& b);
bool vec_is_zero(const Vec& a);
Vec vec_conj(const Vec& a);
double vec_dist_inf(const Vec& a, const Vec& b);

/// Dense row-major complex matrix; all entries share one backend.
class MatC {
public:
  MatC() : rows_(0), cols_(0) {}
  MatC(int rows, int cols, Backend b = Backend::exact);

  static MatC identity(int n, Backend b = Backend::exact);
  static MatC diag(const Vec& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Backend backend() const { return backend_; }

  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  MatC operator*(const MatC& o) const;
  MatC operator+(const MatC& o) const;
  MatC operator-(const MatC& o) const;
  MatC operator-() const;
  MatC scaled(const Scalar& s) const;
  MatC transpose() const;
  MatC conj() const;
  MatC conj_transpose() const;
  MatC inverse() const;  // Gauss-Jordan, throws on singular
  Vec apply(const Vec& x) const;

  bool operator==(const MatC& o) const;
  bool is_zero() const;
  double dist_inf(const MatC& o) const;  // max |entry difference|
  MatC to_float() const;

  Vec flatten() const { return a_; }

private:
  int rows_, cols_;
  Backend backend_ = Backend::exact;
  std::vector<Scalar> a_;
};

/// Anti-linear map x -> mat * conj(x): inputs are conjugated entrywise first,
/// then the linear matrix acts.
struct AntiLinMat {
  MatC mat;
  Vec apply(const Vec& x) const { return mat.apply(vec_conj(x)); }
  bool is_involution() const;  // mat * conj(mat) == I
};

MatC make_S(int n, int p);       // diag(I_p, -I_{n-p})
MatC make_J(int two_n);          // ((0, I),(-I, 0)), J^2 = -I
MatC make_H(int two_n, int p);   // diag(S^n_p, S^n_p)

Scalar determinant(const MatC& m);

bool is_symplectic(const MatC& m, double tol = 0.0);
bool is_hermitian(const MatC& m, double tol = 0.0);
bool is_antihermitian(const MatC& m, double tol = 0.0);

MatC vec_to_mat(const Vec& v, int rows, int cols);
Vec mat_to_vec(const MatC& m);

}  // namespace n6tri
