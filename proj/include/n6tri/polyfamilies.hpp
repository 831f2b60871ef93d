#pragma once

#include <optional>

#include "n6tri/poly.hpp"

namespace n6tri {

// Polynomial models of the five infinite-dimensional families. Every bracket
// maps polynomials to polynomials, so the axiom checks run in exact
// arithmetic with no truncation.

/// Variable roster for the Poisson-type family: (p_1..p_k, q_1..q_k) for even
/// m = 2k, prefixed with t for odd m = 2k+1.
std::vector<std::string> poisson_roster(int m);

/// {f,g} = (2-E)(f) dg/dt - df/dt (2-E)(g) + sum_i (df/dp_i dg/dq_i -
/// df/dq_i dg/dp_i); the t-terms vanish for even m. E ranges over p, q only.
Poly poisson(const Poly& f, const Poly& g, int m);

enum class PolyFamilyKind { p3, w3, w3beta, s3 };

/// Family-specific validity of a change of variables:
///  - p3: involutive and sends the contact/symplectic 1-form to its negative;
///  - w3, w3beta, s3: conj(P) P = I, with the (det, alpha) pairing for s3
///    checked at bracket construction.
bool validate_change(const LinearChange& phi, PolyFamilyKind family, int m = 0);

/// Triple bracket of the Poisson-type family:
/// [f,g,h] = {f,G}h + {f,h}G + f{G,h} + D(f)Gh - fGD(h), G = -+conj(g) o phi,
/// D = 2 d/dt (zero for even m).
Poly p3_bracket(const Poly& f, const Poly& g, const Poly& h, int m,
                const LinearChange& phi, int sign);

/// 3x3 determinant bracket on C[x1,x2] with rows (value, D1, D2) of
/// (f, conj(phi(g)), h), times the sign.
Poly w3_bracket(const Poly& f, const Poly& g, const Poly& h,
                const LinearChange& phi, int sign);

/// Variant with first row ((2-E)f, (2 beta - E)conj(phi(g)), (2-E)h);
/// requires |beta| = 1 exactly and beta not real.
Poly w3beta_bracket(const Poly& f, const Poly& g, const Poly& h,
                    const Scalar& beta, const LinearChange& phi, int sign);
void require_w3beta_params(const Scalar& beta, const LinearChange& phi);

/// alpha * det of the Jacobian-style rows D_i(f), D_i(conj(phi(g))), D_i(h)
/// on C[x1,x2,x3], reduced modulo constants. (det phi, alpha) must pair as
/// (1, +-1) or (-1, +-i).
Poly s3_bracket(const Poly& f, const Poly& g, const Poly& h,
                const LinearChange& phi, const Scalar& alpha);
void require_s3_params(const LinearChange& phi, const Scalar& alpha);

/// Bracket of the pair-of-series family. The 2x2 matrix a needs det a = 1 and
/// conj(a) a = +-I with lambda in {+-1} resp. {+-i}; exp2t = exp(2t) and
/// expmt = exp(-t) are supplied as scalars so that t in {0, i pi} stays exact.
PairPoly sw3_bracket(const PairPoly& f, const PairPoly& g, const PairPoly& h,
                     const MatC& a, const Scalar& lambda, const Scalar& exp2t,
                     const Scalar& expmt);
void require_sw3_params(const MatC& a, const Scalar& lambda);

/// Algebraic ancestors used by the identification tests.
Poly w3_algebraic_bracket(const Poly& f, const Poly& g, const Poly& h,
                          const LinearChange& phi);
Poly s3_algebraic_bracket(const Poly& f, const Poly& g, const Poly& h,
                          const LinearChange& phi);
Poly p3_algebraic_bracket(const Poly& f, const Poly& g, const Poly& h, int m,
                          const LinearChange& phi);

/// Desk-scale surrogate for simplicity: the only g with degree <= cap such
/// that [a, g, c] = 0 for all monomials a, c of degree <= probe_cap is g = 0.
/// The bracket argument receives (a, g-basis element or i times it, c).
bool no_central_poly(
    const std::function<Poly(const Poly&, const Poly&, const Poly&)>& bracket,
    const std::vector<std::string>& roster, int cap, int probe_cap,
    bool drop_constants = false);

}  // namespace n6tri
