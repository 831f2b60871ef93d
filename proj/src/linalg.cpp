#include "n6tri/linalg.hpp"

#include <algorithm>

namespace n6tri {

namespace {

int leading_index(const Vec& v) {
  for (size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) return static_cast<int>(k);
  return -1;
}

}  // namespace

bool RowSpace::insert(Vec v) {
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (v[lead_[r]].is_zero()) continue;
    Scalar f = v[lead_[r]];
    for (int k = 0; k < dim_; ++k) v[k] -= f * rows_[r][k];
  }
  int lead = leading_index(v);
  if (lead < 0) return false;
  Scalar inv = v[lead].inverse();
  for (auto& x : v) x = inv * x;
  // back-reduce existing rows so the basis stays reduced
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r][lead].is_zero()) continue;
    Scalar f = rows_[r][lead];
    for (int k = 0; k < dim_; ++k) rows_[r][k] -= f * v[k];
  }
  rows_.push_back(std::move(v));
  lead_.push_back(lead);
  return true;
}

bool RowSpace::contains(Vec v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (v[lead_[r]].is_zero()) continue;
    Scalar f = v[lead_[r]];
    for (int k = 0; k < dim_; ++k) v[k] -= f * rows_[r][k];
  }
  return vec_is_zero(v);
}

int SpanSolver::add_generator(const Vec& g) {
  Vec v = g;
  Vec coords = zero_vec(static_cast<int>(basis_.size()) + 1);
  coords.back() = Scalar::one();
  // coords expresses v over (kept basis ..., g); reduce v tracking coords
  for (size_t r = 0; r < echelon_.size(); ++r) {
    if (v[lead_[r]].is_zero()) continue;
    Scalar f = v[lead_[r]];
    for (int k = 0; k < dim_; ++k) v[k] -= f * echelon_[r][k];
    for (size_t k = 0; k < expr_[r].size(); ++k)
      coords[k] -= f * expr_[r][k];
  }
  int lead = leading_index(v);
  if (lead < 0) return -1;
  Scalar inv = v[lead].inverse();
  for (auto& x : v) x = inv * x;
  for (auto& x : coords) x = inv * x;
  basis_.push_back(g);
  echelon_.push_back(std::move(v));
  expr_.push_back(std::move(coords));
  lead_.push_back(lead);
  return static_cast<int>(basis_.size()) - 1;
}

std::optional<Vec> SpanSolver::solve(const Vec& v0) const {
  // v0 = sum_r f_r * echelon_[r] + remainder; each echelon row carries its
  // expression over the kept generators, so coords accumulate as f * expr.
  Vec v = v0;
  Vec coords = zero_vec(static_cast<int>(basis_.size()));
  for (size_t r = 0; r < echelon_.size(); ++r) {
    if (v[lead_[r]].is_zero()) continue;
    Scalar f = v[lead_[r]];
    for (int k = 0; k < dim_; ++k) v[k] -= f * echelon_[r][k];
    for (size_t k = 0; k < expr_[r].size(); ++k) coords[k] += f * expr_[r][k];
  }
  if (!vec_is_zero(v)) return std::nullopt;
  return coords;
}

int QMat::rank() const {
  QMat w(*this);
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (w.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < cols_; ++j) std::swap(w.at(pivot, j), w.at(rank, j));
    mpq_class d = w.at(rank, col);
    for (int j = 0; j < cols_; ++j) w.at(rank, j) /= d;
    for (int r = 0; r < rows_; ++r) {
      if (r == rank || w.at(r, col) == 0) continue;
      mpq_class f = w.at(r, col);
      for (int j = 0; j < cols_; ++j) w.at(r, j) -= f * w.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<mpq_class>> QMat::kernel() const {
  QMat w(*this);
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (w.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < cols_; ++j) std::swap(w.at(pivot, j), w.at(rank, j));
    mpq_class d = w.at(rank, col);
    for (int j = 0; j < cols_; ++j) w.at(rank, j) /= d;
    for (int r = 0; r < rows_; ++r) {
      if (r == rank || w.at(r, col) == 0) continue;
      mpq_class f = w.at(r, col);
      for (int j = 0; j < cols_; ++j) w.at(r, j) -= f * w.at(rank, j);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> x(cols_, 0);
    x[free] = 1;
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = -w.at(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<mpq_class> realify(const Vec& v) {
  std::vector<mpq_class> r;
  r.reserve(v.size() * 2);
  for (const auto& x : v) {
    r.push_back(x.exact_re());
    r.push_back(x.exact_im());
  }
  return r;
}

}  // namespace n6tri
