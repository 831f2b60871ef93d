#include "n6tri/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace n6tri {

Vec basis_vec(int dim, int k, Backend b) {
  Vec v = zero_vec(dim, b);
  v[k] = b == Backend::exact ? Scalar::one() : Scalar::of_double(1.0);
  return v;
}

Vec zero_vec(int dim, Backend b) {
  Scalar z = b == Backend::exact ? Scalar::zero() : Scalar::of_complex({0, 0});
  return Vec(dim, z);
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

Vec vec_scale(const Scalar& s, const Vec& a) {
  Vec r(a);
  for (auto& x : r) x = s * x;
  return r;
}

bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return false;
  return true;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_conj(const Vec& a) {
  Vec r(a);
  for (auto& x : r) x = x.conj();
  return r;
}

double vec_dist_inf(const Vec& a, const Vec& b) {
  double d = 0.0;
  for (size_t k = 0; k < a.size(); ++k)
    d = std::max(d, std::abs(a[k].to_complex() - b[k].to_complex()));
  return d;
}

MatC::MatC(int rows, int cols, Backend b)
    : rows_(rows), cols_(cols), backend_(b) {
  Scalar z = b == Backend::exact ? Scalar::zero() : Scalar::of_complex({0, 0});
  a_.assign(static_cast<size_t>(rows) * cols, z);
}

MatC MatC::identity(int n, Backend b) {
  MatC m(n, n, b);
  Scalar one = b == Backend::exact ? Scalar::one() : Scalar::of_double(1.0);
  for (int i = 0; i < n; ++i) m.at(i, i) = one;
  return m;
}

MatC MatC::diag(const Vec& d) {
  MatC m(static_cast<int>(d.size()), static_cast<int>(d.size()),
         d.empty() ? Backend::exact : d[0].backend());
  for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

MatC MatC::operator*(const MatC& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  MatC r(rows_, o.cols_, backend_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

MatC MatC::operator+(const MatC& o) const {
  MatC r(*this);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

MatC MatC::operator-(const MatC& o) const {
  MatC r(*this);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

MatC MatC::operator-() const {
  MatC r(*this);
  for (auto& x : r.a_) x = -x;
  return r;
}

MatC MatC::scaled(const Scalar& s) const {
  MatC r(*this);
  for (auto& x : r.a_) x = s * x;
  return r;
}

MatC MatC::transpose() const {
  MatC r(cols_, rows_, backend_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

MatC MatC::conj() const {
  MatC r(*this);
  for (auto& x : r.a_) x = x.conj();
  return r;
}

MatC MatC::conj_transpose() const { return conj().transpose(); }

MatC MatC::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("not square");
  int n = rows_;
  MatC work(*this);
  MatC inv = MatC::identity(n, backend_);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    if (backend_ == Backend::exact) {
      for (int r = col; r < n; ++r)
        if (!work.at(r, col).is_zero()) {
          pivot = r;
          break;
        }
    } else {
      double best = 0.0;
      for (int r = col; r < n; ++r) {
        double m = work.at(r, col).abs();
        if (m > best) {
          best = m;
          pivot = r;
        }
      }
      if (best < 1e-13) pivot = -1;
    }
    if (pivot < 0) throw std::domain_error("singular matrix");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Scalar d = work.at(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      work.at(col, j) = d * work.at(col, j);
      inv.at(col, j) = d * inv.at(col, j);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work.at(r, col).is_zero()) continue;
      Scalar f = work.at(r, col);
      for (int j = 0; j < n; ++j) {
        work.at(r, j) = work.at(r, j) - f * work.at(col, j);
        inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Vec MatC::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw std::invalid_argument("vector length mismatch");
  Vec r = zero_vec(rows_, backend_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || x[j].is_zero()) continue;
      r[i] += at(i, j) * x[j];
    }
  return r;
}

bool MatC::operator==(const MatC& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && vec_eq(a_, o.a_);
}

bool MatC::is_zero() const { return vec_is_zero(a_); }

double MatC::dist_inf(const MatC& o) const {
  double d = 0.0;
  for (size_t k = 0; k < a_.size(); ++k)
    d = std::max(d, std::abs(a_[k].to_complex() - o.a_[k].to_complex()));
  return d;
}

MatC MatC::to_float() const {
  MatC r(rows_, cols_, Backend::floating);
  for (size_t k = 0; k < a_.size(); ++k)
    r.a_[k] = Scalar::of_complex(a_[k].to_complex());
  return r;
}

bool AntiLinMat::is_involution() const {
  return (mat * mat.conj()) == MatC::identity(mat.rows(), mat.backend());
}

MatC make_S(int n, int p) {
  if (p < 0 || p > n) throw std::invalid_argument("signature index out of range");
  MatC s(n, n);
  for (int k = 0; k < n; ++k)
    s.at(k, k) = k < p ? Scalar::one() : -Scalar::one();
  return s;
}

MatC make_J(int two_n) {
  if (two_n <= 0 || two_n % 2 != 0)
    throw std::invalid_argument("size must be positive even");
  int n = two_n / 2;
  MatC j(two_n, two_n);
  for (int k = 0; k < n; ++k) {
    j.at(k, n + k) = Scalar::one();
    j.at(n + k, k) = -Scalar::one();
  }
  return j;
}

MatC make_H(int two_n, int p) {
  if (two_n <= 0 || two_n % 2 != 0)
    throw std::invalid_argument("size must be positive even");
  int n = two_n / 2;
  MatC s = make_S(n, p);
  MatC h(two_n, two_n);
  for (int k = 0; k < n; ++k) {
    h.at(k, k) = s.at(k, k);
    h.at(n + k, n + k) = s.at(k, k);
  }
  return h;
}

Scalar determinant(const MatC& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("not square");
  int n = m.rows();
  MatC w(m);
  Scalar det = n == 0 ? Scalar::one()
                      : (m.backend() == Backend::exact
                             ? Scalar::one()
                             : Scalar::of_double(1.0));
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    if (m.backend() == Backend::exact) {
      for (int r = col; r < n; ++r)
        if (!w.at(r, col).is_zero()) {
          pivot = r;
          break;
        }
    } else {
      double best = 0.0;
      for (int r = col; r < n; ++r)
        if (w.at(r, col).abs() > best) {
          best = w.at(r, col).abs();
          pivot = r;
        }
      if (best == 0.0) pivot = -1;
    }
    if (pivot < 0)
      return m.backend() == Backend::exact ? Scalar::zero()
                                           : Scalar::of_double(0.0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(w.at(pivot, j), w.at(col, j));
      det = -det;
    }
    det = det * w.at(col, col);
    Scalar inv = w.at(col, col).inverse();
    for (int r = col + 1; r < n; ++r) {
      if (w.at(r, col).is_zero()) continue;
      Scalar f = w.at(r, col) * inv;
      for (int j = col; j < n; ++j) w.at(r, j) = w.at(r, j) - f * w.at(col, j);
    }
  }
  return det;
}

bool is_symplectic(const MatC& m, double tol) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0)
    throw std::invalid_argument("symplectic test needs even square matrix");
  MatC j = m.backend() == Backend::exact ? make_J(m.rows())
                                         : make_J(m.rows()).to_float();
  MatC lhs = m.transpose() * j * m;
  if (m.backend() == Backend::exact) return lhs == j;
  return lhs.dist_inf(j) <= tol;
}

bool is_hermitian(const MatC& m, double tol) {
  if (m.rows() != m.cols()) return false;
  MatC d = m - m.conj_transpose();
  if (m.backend() == Backend::exact) return d.is_zero();
  return d.dist_inf(MatC(m.rows(), m.cols(), Backend::floating)) <= tol;
}

bool is_antihermitian(const MatC& m, double tol) {
  if (m.rows() != m.cols()) return false;
  MatC d = m + m.conj_transpose();
  if (m.backend() == Backend::exact) return d.is_zero();
  return d.dist_inf(MatC(m.rows(), m.cols(), Backend::floating)) <= tol;
}

MatC vec_to_mat(const Vec& v, int rows, int cols) {
  if (static_cast<int>(v.size()) != rows * cols)
    throw std::invalid_argument("vector length mismatch");
  MatC m(rows, cols, v.empty() ? Backend::exact : v[0].backend());
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = v[static_cast<size_t>(i) * cols + j];
  return m;
}

Vec mat_to_vec(const MatC& m) { return m.flatten(); }

}  // namespace n6tri
