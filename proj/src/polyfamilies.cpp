#include "n6tri/polyfamilies.hpp"

#include "n6tri/linalg.hpp"

namespace n6tri {

namespace {

bool odd_m(int m) { return m % 2 != 0; }

std::vector<int> pq_indices(int m) {
  int k = m / 2;
  std::vector<int> idx;
  int off = odd_m(m) ? 1 : 0;
  for (int v = 0; v < 2 * k; ++v) idx.push_back(off + v);
  return idx;
}

Poly two_minus_e(const Poly& f, const std::vector<int>& pq) {
  return f.scaled(Scalar::rational(2)) - f.euler(pq);
}

Poly det3x3(const Poly m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

std::vector<std::string> poisson_roster(int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  int k = m / 2;
  std::vector<std::string> roster;
  if (odd_m(m)) roster.push_back("t");
  for (int i = 1; i <= k; ++i) roster.push_back("p" + std::to_string(i));
  for (int i = 1; i <= k; ++i) roster.push_back("q" + std::to_string(i));
  return roster;
}

Poly poisson(const Poly& f, const Poly& g, int m) {
  if (f.roster() != poisson_roster(m) || g.roster() != f.roster())
    throw std::invalid_argument("roster mismatch");
  int k = m / 2;
  int off = odd_m(m) ? 1 : 0;
  std::vector<int> pq = pq_indices(m);
  Poly r(f.roster());
  if (odd_m(m)) {
    r = r + two_minus_e(f, pq) * g.derivative(0) -
        f.derivative(0) * two_minus_e(g, pq);
  }
  for (int i = 0; i < k; ++i) {
    int pi = off + i, qi = off + k + i;
    r = r + f.derivative(pi) * g.derivative(qi) -
        f.derivative(qi) * g.derivative(pi);
  }
  return r;
}

bool validate_change(const LinearChange& phi, PolyFamilyKind family, int m) {
  const MatC& p = phi.matrix();
  int n = p.rows();
  if (family == PolyFamilyKind::p3) {
    if (!phi.is_involution()) return false;
    int k = m / 2;
    if (n != 2 * k + (odd_m(m) ? 1 : 0)) return false;
    // Omega carries the p dq - q dp coefficients; the t row and column stay
    // zero, and for odd m the constant dt part forces phi(t) = -t.
    MatC omega(n, n);
    int off = odd_m(m) ? 1 : 0;
    for (int i = 0; i < k; ++i) {
      omega.at(off + i, off + k + i) = Scalar::one();
      omega.at(off + k + i, off + i) = -Scalar::one();
    }
    if (!(p.transpose() * omega * p == omega.scaled(-Scalar::one())))
      return false;
    if (odd_m(m)) {
      for (int b = 0; b < n; ++b) {
        Scalar want = b == 0 ? -Scalar::one() : Scalar::zero();
        if (p.at(0, b) != want) return false;
      }
    }
    return true;
  }
  // w3 / w3beta / s3: conj(P) P = I
  return p.conj() * p == MatC::identity(n, p.backend());
}

Poly p3_bracket(const Poly& f, const Poly& g, const Poly& h, int m,
                const LinearChange& phi, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  if (!validate_change(phi, PolyFamilyKind::p3, m))
    throw std::invalid_argument("invalid change of variables for this family");
  // G = sign * (-conj(f) o phi) evaluated at g
  Poly G = phi.apply(g.conj()).scaled(Scalar::rational(-sign));
  Poly r = poisson(f, G, m) * h + poisson(f, h, m) * G + f * poisson(G, h, m);
  if (odd_m(m)) {
    Scalar two = Scalar::rational(2);
    Poly df = f.derivative(0).scaled(two);   // D(f)
    Poly dh = h.derivative(0).scaled(two);
    r = r + df * G * h - f * G * dh;
  }
  return r;
}

Poly p3_algebraic_bracket(const Poly& f, const Poly& g, const Poly& h, int m,
                          const LinearChange& phi) {
  if (!validate_change(phi, PolyFamilyKind::p3, m))
    throw std::invalid_argument("invalid change of variables for this family");
  Poly G = phi.apply(g).scaled(-Scalar::one());
  Poly r = poisson(f, G, m) * h + poisson(f, h, m) * G + f * poisson(G, h, m);
  if (odd_m(m)) {
    Scalar two = Scalar::rational(2);
    r = r + f.derivative(0).scaled(two) * G * h -
        f * G * h.derivative(0).scaled(two);
  }
  return r;
}

Poly w3_bracket(const Poly& f, const Poly& g, const Poly& h,
                const LinearChange& phi, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  if (!validate_change(phi, PolyFamilyKind::w3))
    throw std::invalid_argument("change of variables needs conj(phi) phi = 1");
  Poly G = phi.apply(g).conj();
  Poly m[3][3] = {{f, G, h},
                  {f.derivative(0), G.derivative(0), h.derivative(0)},
                  {f.derivative(1), G.derivative(1), h.derivative(1)}};
  return det3x3(m).scaled(Scalar::rational(sign));
}

Poly w3_algebraic_bracket(const Poly& f, const Poly& g, const Poly& h,
                          const LinearChange& phi) {
  Poly G = phi.apply(g);
  Poly m[3][3] = {{f, G, h},
                  {f.derivative(0), G.derivative(0), h.derivative(0)},
                  {f.derivative(1), G.derivative(1), h.derivative(1)}};
  return det3x3(m);
}

void require_w3beta_params(const Scalar& beta, const LinearChange& phi) {
  if (!beta.is_exact())
    throw std::invalid_argument("beta must be exact for certification");
  if (beta.norm2() != Scalar::one())
    throw std::invalid_argument("beta must have modulus 1");
  if (beta.is_real())
    throw std::invalid_argument("beta must not be real");
  if (!validate_change(phi, PolyFamilyKind::w3beta))
    throw std::invalid_argument("change of variables needs conj(phi) phi = 1");
}

Poly w3beta_bracket(const Poly& f, const Poly& g, const Poly& h,
                    const Scalar& beta, const LinearChange& phi, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  require_w3beta_params(beta, phi);
  std::vector<int> vars{0, 1};
  Poly G = phi.apply(g).conj();
  Poly top_g = G.scaled(beta * Scalar::rational(2)) - G.euler(vars);
  Poly m[3][3] = {{two_minus_e(f, vars), top_g, two_minus_e(h, vars)},
                  {f.derivative(0), G.derivative(0), h.derivative(0)},
                  {f.derivative(1), G.derivative(1), h.derivative(1)}};
  return det3x3(m).scaled(Scalar::rational(sign));
}

void require_s3_params(const LinearChange& phi, const Scalar& alpha) {
  if (!validate_change(phi, PolyFamilyKind::s3))
    throw std::invalid_argument("change of variables needs conj(phi) phi = 1");
  Scalar d = phi.det();
  bool det_one = d == Scalar::one() || d == Scalar::of_double(1.0);
  bool det_minus = d == -Scalar::one();
  Scalar a2 = alpha * alpha;
  if (det_one) {
    if (a2 != Scalar::one())
      throw std::invalid_argument("det phi = 1 needs alpha = +-1");
  } else if (det_minus) {
    if (a2 != -Scalar::one())
      throw std::invalid_argument("det phi = -1 needs alpha = +-i");
  } else {
    throw std::invalid_argument("det phi must be +-1");
  }
}

Poly s3_bracket(const Poly& f, const Poly& g, const Poly& h,
                const LinearChange& phi, const Scalar& alpha) {
  require_s3_params(phi, alpha);
  Poly G = phi.apply(g).conj();
  Poly m[3][3] = {
      {f.derivative(0), G.derivative(0), h.derivative(0)},
      {f.derivative(1), G.derivative(1), h.derivative(1)},
      {f.derivative(2), G.derivative(2), h.derivative(2)}};
  return det3x3(m).scaled(alpha).drop_constant();
}

Poly s3_algebraic_bracket(const Poly& f, const Poly& g, const Poly& h,
                          const LinearChange& phi) {
  Poly G = phi.apply(g);
  Poly m[3][3] = {
      {f.derivative(0), G.derivative(0), h.derivative(0)},
      {f.derivative(1), G.derivative(1), h.derivative(1)},
      {f.derivative(2), G.derivative(2), h.derivative(2)}};
  return det3x3(m).drop_constant();
}

void require_sw3_params(const MatC& a, const Scalar& lambda) {
  if (a.rows() != 2 || a.cols() != 2)
    throw std::invalid_argument("a must be 2x2");
  if (determinant(a) != Scalar::one())
    throw std::invalid_argument("a must have determinant 1");
  MatC prod = a.conj() * a;
  bool plus = prod == MatC::identity(2, a.backend());
  bool minus = prod == MatC::identity(2, a.backend()).scaled(-Scalar::one());
  if (plus) {
    if (lambda * lambda != Scalar::one())
      throw std::invalid_argument("conj(a) a = I needs lambda = +-1");
  } else if (minus) {
    if (lambda * lambda != -Scalar::one())
      throw std::invalid_argument("conj(a) a = -I needs lambda = +-i");
  } else {
    throw std::invalid_argument("conj(a) a must be +-I");
  }
}

namespace {

// g(phi_t(x)) followed by coefficient conjugation; phi_t(x) = exp2t * x and
// |exp2t| = 1, so conj(exp2t^i) = exp2t^{-i} is handled by conjugating the
// scalar power directly.
Poly conj_scaled(const Poly& g, const Scalar& exp2t) {
  Poly r(g.roster());
  for (const auto& [e, c] : g.terms()) {
    Scalar scale = Scalar::one();
    if (exp2t.backend() == Backend::floating) scale = Scalar::of_double(1.0);
    for (int k = 0; k < e[0]; ++k) scale = scale * exp2t;
    r.add_term(e, (c * scale).conj());
  }
  return r;
}

}  // namespace

PairPoly sw3_bracket(const PairPoly& f, const PairPoly& g, const PairPoly& h,
                     const MatC& a, const Scalar& lambda, const Scalar& exp2t,
                     const Scalar& expmt) {
  require_sw3_params(a, lambda);
  const auto roster = f.first.roster();
  Poly zero(roster);
  Scalar front = lambda * expmt;
  auto comp = [&](const PairPoly& p, int i) -> const Poly& {
    return i == 0 ? p.first : p.second;
  };
  auto abar = [&](int r, int c) { return a.at(r, c).conj(); };
  Poly acc[2] = {zero, zero};

  // traversal over pure-component triples; additivity extends the rules
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const Poly& ff = comp(f, i);
        const Poly& gg = comp(g, j);
        const Poly& hh = comp(h, k);
        if (ff.is_zero() || gg.is_zero() || hh.is_zero()) continue;
        Poly gbar = conj_scaled(gg, exp2t);
        Scalar par = i == 0 ? -Scalar::one() : Scalar::one();  // (-1)^{i+1}
        if (i == k) {
          // coefficient conj(a)_{j, other(i)}
          Scalar co = abar(j, 1 - i);
          Poly w = (ff * hh.derivative(0) - ff.derivative(0) * hh) * gbar;
          acc[i] = acc[i] + w.scaled(front * par * co);
        } else {
          Poly dgbar = gbar.derivative(0);
          Scalar flip = i == 0 ? Scalar::one() : -Scalar::one();
          const Poly& lo = i == 0 ? ff : hh;   // component-1 outer entry
          const Poly& hi = i == 0 ? hh : ff;   // component-2 outer entry
          Poly w1 = (lo * dgbar - lo.derivative(0) * gbar) * hi;
          Poly w2 = lo * (hi * dgbar - hi.derivative(0) * gbar);
          acc[0] = acc[0] + w1.scaled(front * flip * abar(j, 0));
          acc[1] = acc[1] + w2.scaled(front * flip * abar(j, 1));
        }
      }
  return {acc[0], acc[1]};
}

bool no_central_poly(
    const std::function<Poly(const Poly&, const Poly&, const Poly&)>& bracket,
    const std::vector<std::string>& roster, int cap, int probe_cap,
    bool drop_constants) {
  // collect monomial bases
  auto monomials = [&](int degree_cap, bool drop_const) {
    std::vector<std::vector<int>> out;
    int n = static_cast<int>(roster.size());
    std::vector<int> e(n, 0);
    while (true) {
      int total = 0;
      for (int v : e) total += v;
      if (total <= degree_cap && !(drop_const && total == 0)) out.push_back(e);
      int pos = 0;
      while (pos < n) {
        ++e[pos];
        int t = 0;
        for (int v : e) t += v;
        if (t <= degree_cap) break;
        e[pos] = 0;
        ++pos;
      }
      if (pos == n) break;
    }
    return out;
  };
  auto unknowns = monomials(cap, drop_constants);
  auto probes = monomials(probe_cap, drop_constants);
  auto result_basis = monomials(2 * (cap + probe_cap) + 4, false);
  std::map<std::vector<int>, int> result_index;
  for (size_t r = 0; r < result_basis.size(); ++r)
    result_index[result_basis[r]] = static_cast<int>(r);

  int cols = 2 * static_cast<int>(unknowns.size());

  // one block of constraints per probe pair (a, c); real-linear in g
  std::vector<std::vector<mpq_class>> sys;
  for (const auto& ea : probes)
    for (const auto& ec : probes) {
      Poly a = Poly::monomial(roster, ea, Scalar::one());
      Poly c = Poly::monomial(roster, ec, Scalar::one());
      // columns: real and i-scaled copies of each unknown monomial
      std::vector<Poly> images;
      images.reserve(cols);
      for (const auto& eg : unknowns) {
        images.push_back(bracket(a, Poly::monomial(roster, eg, Scalar::one()), c));
        images.push_back(bracket(a, Poly::monomial(roster, eg, Scalar::i()), c));
      }
      // rows indexed by (result monomial, re/im)
      std::map<int, std::vector<mpq_class>> block;
      for (int col = 0; col < cols; ++col) {
        for (const auto& [e, coef] : images[col].terms()) {
          int r = result_index.at(e);
          for (int part = 0; part < 2; ++part) {
            auto& row = block[2 * r + part];
            if (row.empty()) row.assign(cols, 0);
            row[col] = part == 0 ? coef.exact_re() : coef.exact_im();
          }
        }
      }
      for (auto& [r, row] : block) sys.push_back(std::move(row));
    }
  QMat q(static_cast<int>(sys.size()), cols);
  for (size_t r = 0; r < sys.size(); ++r)
    for (int c = 0; c < cols; ++c) q.at(static_cast<int>(r), c) = sys[r][c];
  return q.kernel().empty();
}

}  // namespace n6tri
