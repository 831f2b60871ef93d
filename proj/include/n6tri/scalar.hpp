#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace n6tri {

enum class Backend { exact, floating };

/// Complex scalar with two backends: exact Gaussian rationals (default) and
/// complex double. Exact arithmetic never demotes to float; mixing backends
/// in one operation throws.
class Scalar {
public:
  Scalar() : backend_(Backend::exact) {}

  static Scalar rational(long num, long den = 1);
  static Scalar gaussian(const mpq_class& re, const mpq_class& im);
  static Scalar gaussian(long re_num, long re_den, long im_num, long im_den);
  static Scalar i(long k = 1);  // k*i, exact
  static Scalar one() { return rational(1); }
  static Scalar zero() { return Scalar(); }
  static Scalar of_complex(std::complex<double> z);
  static Scalar of_double(double x) { return of_complex({x, 0.0}); }

  Backend backend() const { return backend_; }
  bool is_exact() const { return backend_ == Backend::exact; }

  const mpq_class& exact_re() const;
  const mpq_class& exact_im() const;
  std::complex<double> to_complex() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar conj() const;
  Scalar inverse() const;
  Scalar re() const;
  Scalar im() const;
  Scalar norm2() const;  // |z|^2, stays in the backend

  bool is_zero() const;
  bool is_one() const;
  bool is_real() const;
  bool is_imaginary() const;  // purely imaginary (zero real part)
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  double abs() const;
  std::string str() const;

private:
  void require_exact() const;
  static void require_same(const Scalar& a, const Scalar& b);

  Backend backend_;
  mpq_class re_{0}, im_{0};
  std::complex<double> f_{0.0, 0.0};
};

/// Parses "a/b+c/di" style exact scalars, or decimal/scientific floats.
/// Examples: "2", "-1", "i", "-2i", "3/5+4/5i", "1-2i", "0.25", "1e-3+2.5i".
Scalar parse_scalar(const std::string& text);

/// Rational square root if the value is a perfect square; throws otherwise.
mpq_class exact_sqrt(const mpq_class& q);
bool has_exact_sqrt(const mpq_class& q);

}  // namespace n6tri
