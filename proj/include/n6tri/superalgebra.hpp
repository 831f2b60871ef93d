#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "n6tri/linalg.hpp"
#include "n6tri/trisystem.hpp"

namespace n6tri {

/// Finite-dimensional Lie superalgebra with a short consistent Z-grading,
/// presented by structure constants over exact scalars.
struct GradedLieSuper {
  int dim = 0;
  std::vector<int> parity;  // 0 even, 1 odd
  std::vector<int> degree;  // -1, 0, 1
  std::vector<std::vector<Vec>> table;  // [i][j] -> coordinates of [b_i, b_j]
  std::string label;

  Vec bracket_basis(int i, int j) const { return table[i][j]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  std::vector<int> degree_indices(int deg) const;
  int degree_dim(int deg) const;
};

/// Linear or anti-linear coordinate map; anti-linear maps conjugate the
/// coordinates first (bases here are real matrices, so this matches
/// conjugating the realized matrix).
struct ConjMap {
  bool antilinear = true;
  MatC mat;
  Vec apply(const Vec& x) const { return mat.apply(antilinear ? vec_conj(x) : x); }
};

struct GradedConj {
  ConjMap map;
  std::string label;
};

struct ConjVerdict {
  bool grading_reversed = false;
  bool automorphism = false;
  bool signed_involution = false;
  std::optional<Counterexample> counterexample;
  bool pass() const {
    return grading_reversed && automorphism && signed_involution;
  }
};

/// Verifies: degree reversal sigma(g_j) = g_{-j}, bracket automorphism on all
/// basis pairs (with an i-scaled probe), and sigma^2 = (-1)^k on g_k.
ConjVerdict check_graded_conjugation(const GradedLieSuper& g,
                                     const ConjMap& sigma);

/// Exhaustive structural invariants: super anti-commutativity, super Jacobi,
/// grading compatibility, parity consistency with degree.
bool check_super_structure(const GradedLieSuper& g, std::string* why = nullptr);

/// sl(m,n) for m != n and psl(n,n) for m = n, graded by the block split:
/// lower-left block degree -1, upper-right +1, diagonal 0.
GradedLieSuper build_psl(int m, int n);

/// osp(2,2n) inside gl(2+2n) with its short consistent grading; dims
/// (2n | 1 + n(2n+1) | 2n).
GradedLieSuper build_osp_2_2n(int n);

/// The matrix realization behind the builders, needed to transport
/// matrix-level maps into coordinates.
struct SuperRealization {
  int block_rows = 0;  // realized matrices are block_rows x block_rows
  std::vector<MatC> basis;
  std::vector<int> parity, degree;
  bool mod_identity = false;  // psl(n,n): coordinates taken mod C I
  Vec coordinates(const MatC& x) const;
  GradedLieSuper to_algebra(const std::string& label) const;
};

SuperRealization realize_psl(int m, int n);
SuperRealization realize_osp_2_2n(int n);

/// Coordinate form of the anti-linear map
/// ((a,b),(c,d)) -> ((-conj(a)^t, conj(c)^t), (-conj(b)^t, -conj(d)^t)).
ConjMap sigma_tilde1(const SuperRealization& real, int m, int n);

/// tau_{+-} on psl(n,n): ((a,b),(c,d)) -> ((conj(d), +-i conj(c)),
/// (-+i conj(b), conj(a))).
ConjMap tau_pm(const SuperRealization& real, int n, int sign);

/// Ad diag(S^m_p, S^n_q) composed with sigma_tilde1 on psl(m,n).
GradedConj build_conj_psl(int m, int n, int p, int q);

enum class OspConjVariant { hermitian, antihermitian };

/// Ad diag(+-A, H) composed with sigma_tilde1 on osp(2,2n); A = I_2 with
/// H = H^{2n}_p, or A = diag(i,-i) with H = i S^{2n}_n. The explicit-H
/// overload validates symplectic/hermitian structure and rejects others.
GradedConj build_conj_osp(int n, OspConjVariant variant, int sign, int p = -1);
GradedConj build_conj_osp_explicit(int n, const MatC& a2, const MatC& h,
                                   int sign);

}  // namespace n6tri
