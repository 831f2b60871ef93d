#pragma once

#include <optional>
#include <string>

#include "n6tri/trisystem.hpp"

namespace n6tri {

// Matrix 3-algebras on M_{m,n}(C) and M_{1,2n}(C).
//
// Coordinates flatten matrices row-major; the bracket oracles reconstruct the
// matrices, multiply, and flatten back.

/// Algebraic bracket a b^t c - c b^t a on M_{m,n}.
TriSystem build_a3t(int m, int n);

/// Physical variant with the anti-linear involution
/// C_{p,q}(u) = S^m_q conj(u) S^n_p (0 <= q <= m, 0 <= p <= n).
TriSystem build_a3t_ph(int m, int n, int p, int q);
AntiLinMat involution_cpq(int m, int n, int p, int q);

/// +-i (a conj(b) c - c conj(b) a) on M_{n,n}; sign +1 or -1.
TriSystem build_a3n(int n, int sign);

/// a b^{st} c - c b^{st} a with b^{st} = J_n b^t J_m^{-1}; m, n even.
TriSystem build_a3st(int m, int n);
/// Physicalization of the st-bracket by entrywise conjugation.
TriSystem build_a3st_ph(int m, int n);

/// Algebraic C-type bracket on row vectors M_{1,2n}:
///   [a,b,c] = -a b^t c + c b^t a - c psi(a) psi(b)^t.
TriSystem build_c3(int two_n);

/// psi(X Y) = (Y -X)^t; equals J_{2n} a^t.
MatC psi_map(const MatC& row);

/// Generalized physical C-type bracket
///   [a,b,c] = -alpha a H conj(b)^t c + alpha c H conj(b)^t a
///             - alpha^{-1} c psi(a) psi(conj(b) H^t)^t,
/// with H symplectic and (H hermitian, alpha real) or (H anti-hermitian,
/// alpha imaginary).
TriSystem build_c3_H_alpha(int two_n, const MatC& h, const Scalar& alpha);

/// Delegates to build_c3_H_alpha(two_n, H^{2n}_p, sign).
TriSystem build_c3_ph_Cp(int two_n, int p, int sign);

struct FamilySpec {
  std::string name;  // a3t, a3t-ph, a3n-plus, a3n-minus, a3st, a3st-ph,
                     // c3, c3-ph, c3-h-alpha
  int m = 0, n = 0, p = 0, q = 0;
  int two_n = 0;
  int sign = +1;
  std::optional<MatC> h;
  std::optional<Scalar> alpha;
};

TriSystem build_family(const FamilySpec& spec);

}  // namespace n6tri
