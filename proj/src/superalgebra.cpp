#include "n6tri/superalgebra.hpp"

#include <sstream>

namespace n6tri {

Vec GradedLieSuper::bracket(const Vec& x, const Vec& y) const {
  Vec acc = zero_vec(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      const Vec& t = table[i][j];
      Scalar c = x[i] * y[j];
      for (int k = 0; k < dim; ++k)
        if (!t[k].is_zero()) acc[k] += c * t[k];
    }
  }
  return acc;
}

std::vector<int> GradedLieSuper::degree_indices(int deg) const {
  std::vector<int> idx;
  for (int i = 0; i < dim; ++i)
    if (degree[i] == deg) idx.push_back(i);
  return idx;
}

int GradedLieSuper::degree_dim(int deg) const {
  return static_cast<int>(degree_indices(deg).size());
}

ConjVerdict check_graded_conjugation(const GradedLieSuper& g,
                                     const ConjMap& sigma) {
  ConjVerdict v;
  int d = g.dim;

  v.grading_reversed = true;
  for (int i = 0; i < d && v.grading_reversed; ++i) {
    Vec img = sigma.apply(basis_vec(d, i));
    for (int k = 0; k < d; ++k)
      if (!img[k].is_zero() && g.degree[k] != -g.degree[i]) {
        v.grading_reversed = false;
        break;
      }
  }

  v.automorphism = true;
  for (int i = 0; i < d && v.automorphism; ++i)
    for (int j = 0; j < d; ++j) {
      Vec lhs = sigma.apply(g.bracket_basis(i, j));
      Vec rhs = g.bracket(sigma.apply(basis_vec(d, i)),
                          sigma.apply(basis_vec(d, j)));
      if (!vec_eq(lhs, rhs)) {
        v.automorphism = false;
        Counterexample ce;
        ce.identity = "bracket automorphism";
        ce.inputs = {basis_vec(d, i), basis_vec(d, j)};
        ce.lhs = lhs;
        ce.rhs = rhs;
        v.counterexample = ce;
        break;
      }
    }
  if (v.automorphism && d > 0) {
    // one i-scaled probe pins (anti-)linearity against the stored kind
    Vec x = vec_scale(Scalar::i(), basis_vec(d, 0));
    Vec lhs = sigma.apply(g.bracket(x, basis_vec(d, d - 1)));
    Vec rhs = g.bracket(sigma.apply(x), sigma.apply(basis_vec(d, d - 1)));
    if (!vec_eq(lhs, rhs)) v.automorphism = false;
  }

  v.signed_involution = true;
  for (int i = 0; i < d; ++i) {
    Vec twice = sigma.apply(sigma.apply(basis_vec(d, i)));
    Vec want = vec_scale(Scalar::rational(g.degree[i] % 2 == 0 ? 1 : -1),
                         basis_vec(d, i));
    if (!vec_eq(twice, want)) {
      v.signed_involution = false;
      break;
    }
  }
  return v;
}

bool check_super_structure(const GradedLieSuper& g, std::string* why) {
  int d = g.dim;
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (int i = 0; i < d; ++i)
    if (((g.degree[i] % 2) + 2) % 2 != g.parity[i])
      return fail("grading is not consistent with parity");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Vec& b = g.table[i][j];
      for (int k = 0; k < d; ++k)
        if (!b[k].is_zero() && g.degree[k] != g.degree[i] + g.degree[j])
          return fail("bracket leaves the grading");
      int sign = g.parity[i] * g.parity[j] % 2 == 1 ? 1 : -1;
      Vec rhs = vec_scale(Scalar::rational(sign), g.table[j][i]);
      if (!vec_eq(b, rhs)) return fail("super anti-commutativity fails");
    }
  // super Jacobi: [x,[y,z]] = [[x,y],z] + (-1)^{p(x)p(y)} [y,[x,z]]
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        Vec lhs = g.bracket(basis_vec(d, x), g.table[y][z]);
        Vec r1 = g.bracket(g.table[x][y], basis_vec(d, z));
        Vec r2 = g.bracket(basis_vec(d, y), g.table[x][z]);
        if (g.parity[x] * g.parity[y] % 2 == 1)
          r2 = vec_scale(-Scalar::one(), r2);
        if (!vec_eq(lhs, vec_add(r1, r2))) return fail("super Jacobi fails");
      }
  return true;
}

Vec SuperRealization::coordinates(const MatC& x) const {
  SpanSolver span(block_rows * block_rows);
  for (const auto& b : basis)
    if (span.add_generator(mat_to_vec(b)) < 0)
      throw std::logic_error("realization basis is dependent");
  if (mod_identity &&
      span.add_generator(mat_to_vec(MatC::identity(block_rows))) < 0)
    throw std::logic_error("identity lies in the basis span");
  auto coords = span.solve(mat_to_vec(x));
  if (!coords) throw std::invalid_argument("matrix outside the realized span");
  return Vec(coords->begin(), coords->begin() + basis.size());
}

GradedLieSuper SuperRealization::to_algebra(const std::string& label) const {
  GradedLieSuper g;
  g.dim = static_cast<int>(basis.size());
  g.parity = parity;
  g.degree = degree;
  g.label = label;
  g.table.assign(g.dim, std::vector<Vec>(g.dim));
  // precompute the span solver once
  int cells = block_rows * block_rows;
  SpanSolver span(cells);
  for (const auto& b : basis) span.add_generator(mat_to_vec(b));
  if (mod_identity) span.add_generator(mat_to_vec(MatC::identity(block_rows)));
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) {
      MatC xy = basis[i] * basis[j];
      MatC yx = basis[j] * basis[i];
      MatC br = (parity[i] * parity[j]) % 2 == 1 ? xy + yx : xy - yx;
      auto coords = span.solve(mat_to_vec(br));
      if (!coords)
        throw std::logic_error("bracket escapes the realized algebra");
      g.table[i][j] = Vec(coords->begin(), coords->begin() + g.dim);
    }
  return g;
}

namespace {

MatC unit_matrix(int n, int r, int c) {
  MatC e(n, n);
  e.at(r, c) = Scalar::one();
  return e;
}

}  // namespace

SuperRealization realize_psl(int m, int n) {
  if (m < 1 || n < 1 || m + n < 2)
    throw std::invalid_argument("need m, n >= 1 and m + n >= 2");
  int nn = m + n;
  SuperRealization real;
  real.block_rows = nn;
  real.mod_identity = (m == n);
  auto push = [&](const MatC& b, int par, int deg) {
    real.basis.push_back(b);
    real.parity.push_back(par);
    real.degree.push_back(deg);
  };
  // degree -1: lower-left block
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) push(unit_matrix(nn, m + i, j), 1, -1);
  // degree 0: off-diagonal pieces of both diagonal blocks, then the
  // supertraceless diagonal
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) push(unit_matrix(nn, i, j), 0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) push(unit_matrix(nn, m + i, m + j), 0, 0);
  for (int i = 1; i < m; ++i)
    push(unit_matrix(nn, i, i) - unit_matrix(nn, 0, 0), 0, 0);
  for (int j = 1; j < n; ++j)
    push(unit_matrix(nn, m + j, m + j) - unit_matrix(nn, m, m), 0, 0);
  // the trace-linking generator; in psl(n,n) it is redundant modulo identity
  // only when combined with the others, so keep it unless m == n == 1
  push(unit_matrix(nn, 0, 0) + unit_matrix(nn, m, m), 0, 0);
  // degree +1: upper-right block
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) push(unit_matrix(nn, i, m + j), 1, +1);
  if (m == n) {
    // drop the trace-linking generator: modulo C I it is spanned by the rest
    int drop = -1;
    for (size_t k = 0; k < real.basis.size(); ++k) {
      if (real.degree[k] == 0 &&
          real.basis[k] == unit_matrix(nn, 0, 0) + unit_matrix(nn, m, m))
        drop = static_cast<int>(k);
    }
    real.basis.erase(real.basis.begin() + drop);
    real.parity.erase(real.parity.begin() + drop);
    real.degree.erase(real.degree.begin() + drop);
  }
  return real;
}

GradedLieSuper build_psl(int m, int n) {
  std::ostringstream label;
  label << (m == n ? "psl" : "sl") << "(" << m << "," << n << ")";
  return realize_psl(m, n).to_algebra(label.str());
}

SuperRealization realize_osp_2_2n(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  int nn = 2 + 2 * n;
  SuperRealization real;
  real.block_rows = nn;
  MatC j2n = make_J(2 * n);
  // F couples the odd blocks: C = -J B^t F
  MatC f(2, 2);
  f.at(0, 1) = -Scalar::one();
  f.at(1, 0) = -Scalar::one();
  auto embed_odd = [&](const MatC& b) {
    MatC x(nn, nn);
    MatC c = (-j2n) * b.transpose() * f;
    for (int r = 0; r < 2; ++r)
      for (int col = 0; col < 2 * n; ++col) x.at(r, 2 + col) = b.at(r, col);
    for (int r = 0; r < 2 * n; ++r)
      for (int col = 0; col < 2; ++col) x.at(2 + r, col) = c.at(r, col);
    return x;
  };
  auto push = [&](const MatC& b, int par, int deg) {
    real.basis.push_back(b);
    real.parity.push_back(par);
    real.degree.push_back(deg);
  };
  // degree -1: B with only the second row, running over unit vectors
  for (int v = 0; v < 2 * n; ++v) {
    MatC b(2, 2 * n);
    b.at(1, v) = Scalar::one();
    push(embed_odd(b), 1, -1);
  }
  // degree 0: the 2x2 part diag(1,-1) and sp(2n) = J * (symmetric)
  {
    MatC x(nn, nn);
    x.at(0, 0) = Scalar::one();
    x.at(1, 1) = -Scalar::one();
    push(x, 0, 0);
  }
  for (int r = 0; r < 2 * n; ++r)
    for (int c = r; c < 2 * n; ++c) {
      MatC s(2 * n, 2 * n);
      s.at(r, c) = s.at(r, c) + Scalar::one();
      s.at(c, r) = s.at(c, r) + Scalar::one();
      MatC d = j2n * s;
      MatC x(nn, nn);
      for (int rr = 0; rr < 2 * n; ++rr)
        for (int cc = 0; cc < 2 * n; ++cc) x.at(2 + rr, 2 + cc) = d.at(rr, cc);
      push(x, 0, 0);
    }
  // degree +1: B with only the first row
  for (int v = 0; v < 2 * n; ++v) {
    MatC b(2, 2 * n);
    b.at(0, v) = Scalar::one();
    push(embed_odd(b), 1, +1);
  }
  return real;
}

GradedLieSuper build_osp_2_2n(int n) {
  std::ostringstream label;
  label << "osp(2," << 2 * n << ")";
  return realize_osp_2_2n(n).to_algebra(label.str());
}

namespace {

// matrix-level anti-linear map on the realization, transported to coordinates
ConjMap transport_antilinear(const SuperRealization& real,
                             const std::function<MatC(const MatC&)>& map) {
  int d = static_cast<int>(real.basis.size());
  MatC m(d, d);
  for (int i = 0; i < d; ++i) {
    // basis matrices are real, so conj of coordinates matches conj of the
    // realized matrix and the map needs only its linear part here
    Vec img = real.coordinates(map(real.basis[i]));
    for (int k = 0; k < d; ++k) m.at(k, i) = img[k];
  }
  return ConjMap{true, m};
}

MatC block_map_sigma1(const MatC& x, int m) {
  int nn = x.rows();
  int n2 = nn - m;
  MatC a(m, m), b(m, n2), c(n2, m), dd(n2, n2);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a.at(i, j) = x.at(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n2; ++j) b.at(i, j) = x.at(i, m + j);
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < m; ++j) c.at(i, j) = x.at(m + i, j);
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j) dd.at(i, j) = x.at(m + i, m + j);
  MatC at = a.conj_transpose(), bt = b.conj_transpose(),
       ct = c.conj_transpose(), dt = dd.conj_transpose();
  MatC out(nn, nn);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.at(i, j) = -at.at(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n2; ++j) out.at(i, m + j) = ct.at(i, j);
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < m; ++j) out.at(m + i, j) = -bt.at(i, j);
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j) out.at(m + i, m + j) = -dt.at(i, j);
  return out;
}

}  // namespace

ConjMap sigma_tilde1(const SuperRealization& real, int m, int n) {
  (void)n;
  return transport_antilinear(
      real, [m](const MatC& x) { return block_map_sigma1(x, m); });
}

ConjMap tau_pm(const SuperRealization& real, int n, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  Scalar si = Scalar::i(sign);
  return transport_antilinear(real, [n, si](const MatC& x) {
    MatC out(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Scalar a = x.at(i, j).conj(), b = x.at(i, n + j).conj(),
               c = x.at(n + i, j).conj(), d = x.at(n + i, n + j).conj();
        out.at(i, j) = d;
        out.at(i, n + j) = si * c;
        out.at(n + i, j) = -si * b;
        out.at(n + i, n + j) = a;
      }
    return out;
  });
}

GradedConj build_conj_psl(int m, int n, int p, int q) {
  if (p < 0 || p > m || q < 0 || q > n)
    throw std::invalid_argument("signature indices out of range");
  SuperRealization real = realize_psl(m, n);
  MatC d(m + n, m + n);
  MatC sp = make_S(m, p), sq = make_S(n, q);
  for (int i = 0; i < m; ++i) d.at(i, i) = sp.at(i, i);
  for (int j = 0; j < n; ++j) d.at(m + j, m + j) = sq.at(j, j);
  MatC dinv = d;  // diagonal of +-1 is its own inverse
  ConjMap map = transport_antilinear(real, [m, d, dinv](const MatC& x) {
    return d * block_map_sigma1(x, m) * dinv;
  });
  std::ostringstream label;
  label << "Ad(S^" << m << "_" << p << ",S^" << n << "_" << q
        << ") o sigma1~ on psl(" << m << "," << n << ")";
  return GradedConj{map, label.str()};
}

GradedConj build_conj_osp_explicit(int n, const MatC& a2, const MatC& h,
                                   int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  if (a2.rows() != 2 || a2.cols() != 2 || h.rows() != 2 * n ||
      h.cols() != 2 * n)
    throw std::invalid_argument("block dimension mismatch");
  if (!is_symplectic(h))
    throw std::invalid_argument("H must be symplectic");
  if (!is_hermitian(h) && !is_antihermitian(h))
    throw std::invalid_argument("H must be hermitian or anti-hermitian");
  SuperRealization real = realize_osp_2_2n(n);
  int nn = 2 + 2 * n;
  MatC d(nn, nn);
  Scalar s = Scalar::rational(sign);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) d.at(i, j) = s * a2.at(i, j);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) d.at(2 + i, 2 + j) = h.at(i, j);
  MatC dinv = d.inverse();
  ConjMap map = transport_antilinear(real, [d, dinv](const MatC& x) {
    return d * block_map_sigma1(x, 2) * dinv;
  });
  std::ostringstream label;
  label << "Ad(diag) o sigma1~ on osp(2," << 2 * n << ")";
  return GradedConj{map, label.str()};
}

GradedConj build_conj_osp(int n, OspConjVariant variant, int sign, int p) {
  if (variant == OspConjVariant::hermitian) {
    if (p < 0 || p > n)
      throw std::invalid_argument("signature index out of range");
    return build_conj_osp_explicit(n, MatC::identity(2), make_H(2 * n, p),
                                   sign);
  }
  MatC a2(2, 2);
  a2.at(0, 0) = Scalar::i();
  a2.at(1, 1) = Scalar::i(-1);
  return build_conj_osp_explicit(n, a2, make_S(2 * n, n).scaled(Scalar::i()),
                                 sign);
}

}  // namespace n6tri
