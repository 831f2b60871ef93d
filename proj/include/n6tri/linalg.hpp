#pragma once

#include <optional>
#include <vector>

#include "n6tri/matrix.hpp"

namespace n6tri {

/// Incrementally maintained reduced row space over exact complex scalars.
class RowSpace {
public:
  explicit RowSpace(int dim) : dim_(dim) {}

  /// Reduces v against the current rows; inserts the remainder if nonzero.
  /// Returns true when the rank grew.
  bool insert(Vec v);
  bool contains(Vec v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }

  /// Coordinates of v in the span of the originally inserted generators is
  /// not tracked here; see SpanSolver for that.
private:
  int dim_;
  std::vector<Vec> rows_;
  std::vector<int> lead_;
};

/// Expresses vectors in a fixed generating family (exact complex arithmetic).
/// Generators are reduced once; solve() returns coordinates w.r.t. the
/// independent subset actually kept, or nullopt when outside the span.
class SpanSolver {
public:
  explicit SpanSolver(int dim) : dim_(dim) {}

  /// Returns the index of the kept generator, or -1 if dependent.
  int add_generator(const Vec& g);
  int rank() const { return static_cast<int>(basis_.size()); }
  std::optional<Vec> solve(const Vec& v) const;  // coords over kept basis

private:
  int dim_;
  std::vector<Vec> basis_;           // kept generators, in insertion order
  std::vector<Vec> echelon_;         // reduced rows
  std::vector<Vec> expr_;            // echelon row = expr over basis_
  std::vector<int> lead_;
};

/// Dense matrix of exact rationals, for realified linear systems.
class QMat {
public:
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpq_class& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const mpq_class& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  int rank() const;
  /// Basis of the right kernel {x : Ax = 0}.
  std::vector<std::vector<mpq_class>> kernel() const;

private:
  int rows_, cols_;
  std::vector<mpq_class> a_;
};

/// Realifies a complex exact vector into (re, im) interleaved rationals.
std::vector<mpq_class> realify(const Vec& v);

}  // namespace n6tri
