#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "n6tri/matrix.hpp"

namespace n6tri {

/// Sparse multivariate polynomial over Scalar in a fixed variable roster.
/// Zero coefficients are never stored; exponents are nonnegative.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<std::string> roster) : roster_(std::move(roster)) {}
  static Poly constant(std::vector<std::string> roster, const Scalar& c);
  static Poly variable(std::vector<std::string> roster, int var);
  static Poly monomial(std::vector<std::string> roster, std::vector<int> exps,
                       const Scalar& c);

  const std::vector<std::string>& roster() const { return roster_; }
  int nvars() const { return static_cast<int>(roster_.size()); }
  const std::map<std::vector<int>, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  Scalar coeff(const std::vector<int>& exps) const;
  Scalar constant_term() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Scalar& s) const;
  Poly conj() const;                    // conjugates coefficients
  Poly derivative(int var) const;
  Poly euler(const std::vector<int>& vars) const;  // sum x_i d/dx_i over vars
  Poly drop_constant() const;           // representative in A / C 1

  bool operator==(const Poly& o) const;

  void add_term(const std::vector<int>& exps, const Scalar& c);

private:
  std::vector<std::string> roster_;
  std::map<std::vector<int>, Scalar> terms_;
};

/// Invertible linear change of variables x_a -> sum_b P[a][b] x_b acting on
/// polynomials by substitution.
class LinearChange {
public:
  explicit LinearChange(MatC p);
  static LinearChange identity(int nvars);

  const MatC& matrix() const { return p_; }
  Poly apply(const Poly& f) const;
  LinearChange conjugated() const { return LinearChange(p_.conj()); }
  LinearChange composed(const LinearChange& inner) const;
  bool is_involution() const;
  Scalar det() const;

private:
  MatC p_;
};

/// Pair of one-variable polynomials, componentwise arithmetic.
struct PairPoly {
  Poly first, second;

  PairPoly operator+(const PairPoly& o) const {
    return {first + o.first, second + o.second};
  }
  PairPoly operator-(const PairPoly& o) const {
    return {first - o.first, second - o.second};
  }
  PairPoly scaled(const Scalar& s) const {
    return {first.scaled(s), second.scaled(s)};
  }
  bool operator==(const PairPoly& o) const {
    return first == o.first && second == o.second;
  }
  bool is_zero() const { return first.is_zero() && second.is_zero(); }
};

/// Seeded Gaussian-rational polynomial sampler with capped degree.
class PolySampler {
public:
  PolySampler(std::vector<std::string> roster, int max_degree, uint64_t seed);
  Poly next();
  Scalar next_coeff();

private:
  std::vector<std::string> roster_;
  std::vector<std::vector<int>> monomials_;
  std::mt19937_64 rng_;
};

}  // namespace n6tri
