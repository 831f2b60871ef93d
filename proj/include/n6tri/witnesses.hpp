#pragma once

#include <string>

#include "n6tri/trisystem.hpp"

namespace n6tri {

/// A verified linear bijection intertwining two 3-brackets, with the largest
/// deviation observed over all basis triples (0 for exact arithmetic).
struct IsoWitness {
  std::string source, target;
  MatC map;  // u -> map-encoded action on flattened coordinates
  double residual = 0.0;
  std::string branch;
};

/// A' hermitian invertible = h S^n_p conj(h)^t with p = number of positive
/// eigenvalues. Exact diagonal inputs with perfect-square magnitudes stay
/// exact; everything else goes through the float eigensolver.
struct CongruenceResult {
  MatC h;
  int positives = 0;
  double residual = 0.0;
};
CongruenceResult hermitian_congruence(const MatC& a, double tol = 1e-9);

/// Symplectic hermitian H = V H^{2n}_p conj(V)^t with V symplectic and
/// 2p = number of positive eigenvalues.
struct SymplecticFactor {
  MatC v;
  int p = 0;
  double residual_congruence = 0.0;
  double residual_symplectic = 0.0;
};
SymplecticFactor symplectic_hermitian_factor(const MatC& h, double tol = 1e-9);

/// Symplectic anti-hermitian H = i V S^{2n}_n conj(V)^t with V symplectic.
SymplecticFactor symplectic_antihermitian_factor(const MatC& h,
                                                 double tol = 1e-9);

/// Star-bracket a b* c - c b* a with b* = A conj(b)^t B^{-1}, A = lambda
/// conj(A)^t, B = lambda conj(B)^t, |lambda| = 1: witness onto the
/// signature-conjugation bracket with (p, q) read off lambda^{-1/2} A and
/// lambda^{-1/2} B.
IsoWitness iso_a3_star(const MatC& a_form, const MatC& b_form,
                       const Scalar& lambda, double tol = 1e-8);

/// i(a psi_A(b) c - c psi_A(b) a) with psi_A(u) = A conj(u) conj(A):
/// witness onto the plain conjugation bracket via f(u) = u A.
IsoWitness iso_a3n(const MatC& a_form);

/// C-type bracket for (H, alpha) onto its signature normal form, via the
/// symplectic factorizations; float verification.
IsoWitness iso_c3(const MatC& h, const Scalar& alpha, double tol = 1e-8);

}  // namespace n6tri
