#include "n6tri/trisystem.hpp"

#include <random>

#include "n6tri/linalg.hpp"

namespace n6tri {

namespace {

Scalar unit(Backend b) {
  return b == Backend::exact ? Scalar::one() : Scalar::of_double(1.0);
}

Scalar imag_unit(Backend b) {
  return b == Backend::exact ? Scalar::i() : Scalar::of_complex({0.0, 1.0});
}

Vec scaled_basis(int dim, int k, int scale, Backend b) {
  Vec v = zero_vec(dim, b);
  v[k] = scale ? imag_unit(b) : unit(b);
  return v;
}

bool vec_close(const Vec& a, const Vec& b, Backend backend, double tol) {
  if (backend == Backend::exact) return vec_eq(a, b);
  return vec_dist_inf(a, b) <= tol;
}

}  // namespace

BasisBracketCache::BasisBracketCache(const TriSystem& t) : dim_(t.dim) {
  table_.resize(static_cast<size_t>(8) * dim_ * dim_ * dim_);
  for (int s1 = 0; s1 < 2; ++s1)
    for (int i = 0; i < dim_; ++i)
      for (int s2 = 0; s2 < 2; ++s2)
        for (int j = 0; j < dim_; ++j)
          for (int s3 = 0; s3 < 2; ++s3)
            for (int k = 0; k < dim_; ++k)
              table_[idx(s1, i, s2, j, s3, k)] =
                  t.bracket(scaled_basis(dim_, i, s1, t.backend),
                            scaled_basis(dim_, j, s2, t.backend),
                            scaled_basis(dim_, k, s3, t.backend));
}

size_t BasisBracketCache::idx(int s1, int i, int s2, int j, int s3,
                              int k) const {
  return ((((static_cast<size_t>(s1) * dim_ + i) * 2 + s2) * dim_ + j) * 2 +
          s3) *
             dim_ +
         k;
}

const Vec& BasisBracketCache::tri(int s1, int i, int s2, int j, int s3,
                                  int k) const {
  return table_[idx(s1, i, s2, j, s3, k)];
}

namespace {

void accumulate(Vec& acc, const Scalar& coeff, const Vec& v) {
  if (coeff.is_zero()) return;
  for (size_t k = 0; k < acc.size(); ++k) {
    if (v[k].is_zero()) continue;
    acc[k] += coeff * v[k];
  }
}

}  // namespace

Vec BasisBracketCache::expand_slot1(const Vec& w, int s2, int j, int s3,
                                    int k) const {
  Vec acc = zero_vec(dim_, w.empty() ? Backend::exact : w[0].backend());
  for (int r = 0; r < dim_; ++r) {
    accumulate(acc, w[r].re(), tri(0, r, s2, j, s3, k));
    accumulate(acc, w[r].im(), tri(1, r, s2, j, s3, k));
  }
  return acc;
}

Vec BasisBracketCache::expand_slot2(int s1, int i, const Vec& w, int s3,
                                    int k) const {
  Vec acc = zero_vec(dim_, w.empty() ? Backend::exact : w[0].backend());
  for (int r = 0; r < dim_; ++r) {
    accumulate(acc, w[r].re(), tri(s1, i, 0, r, s3, k));
    accumulate(acc, w[r].im(), tri(s1, i, 1, r, s3, k));
  }
  return acc;
}

Vec BasisBracketCache::expand_slot3(int s1, int i, int s2, int j,
                                    const Vec& w) const {
  Vec acc = zero_vec(dim_, w.empty() ? Backend::exact : w[0].backend());
  for (int r = 0; r < dim_; ++r) {
    accumulate(acc, w[r].re(), tri(s1, i, s2, j, 0, r));
    accumulate(acc, w[r].im(), tri(s1, i, s2, j, 1, r));
  }
  return acc;
}

TriChecker::TriChecker(const TriSystem& t) : t_(t), cache_(t) {}

void TriChecker::check_anticommutativity(AxiomReport& rep) const {
  int d = t_.dim;
  for (int i = 0; i < d; ++i)
    for (int s = 0; s < 2; ++s)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          const Vec& lhs = cache_.tri(0, i, s, j, 0, k);
          Vec rhs = vec_scale(-unit(t_.backend), cache_.tri(0, k, s, j, 0, i));
          if (!vec_eq(lhs, rhs)) {
            rep.antisym = false;
            Counterexample ce;
            ce.identity = "anticommutativity";
            ce.inputs = {scaled_basis(d, i, 0, t_.backend),
                         scaled_basis(d, j, s, t_.backend),
                         scaled_basis(d, k, 0, t_.backend)};
            ce.lhs = lhs;
            ce.rhs = rhs;
            rep.counterexample = ce;
            return;
          }
        }
  rep.antisym = true;
}

bool TriChecker::fi_instance(int i1, int s2, int i2, int i3, int s4, int i4,
                             int i5, Counterexample* ce) const {
  const auto& c = cache_;
  // [a,b,[x,y,z]] = [[a,b,x],y,z] - [x,[b,a,y],z] + [x,y,[a,b,z]]
  Vec lhs = c.expand_slot3(0, i1, s2, i2, c.tri(0, i3, s4, i4, 0, i5));
  Vec r1 = c.expand_slot1(c.tri(0, i1, s2, i2, 0, i3), s4, i4, 0, i5);
  Vec r2 = c.expand_slot2(0, i3, c.tri(s2, i2, 0, i1, s4, i4), 0, i5);
  Vec r3 = c.expand_slot3(0, i3, s4, i4, c.tri(0, i1, s2, i2, 0, i5));
  Vec rhs = vec_add(vec_sub(r1, r2), r3);
  if (vec_eq(lhs, rhs)) return true;
  if (ce) {
    ce->identity = "fundamental identity";
    ce->inputs = {scaled_basis(t_.dim, i1, 0, t_.backend),
                  scaled_basis(t_.dim, i2, s2, t_.backend),
                  scaled_basis(t_.dim, i3, 0, t_.backend),
                  scaled_basis(t_.dim, i4, s4, t_.backend),
                  scaled_basis(t_.dim, i5, 0, t_.backend)};
    ce->lhs = lhs;
    ce->rhs = rhs;
  }
  return false;
}

void TriChecker::check_fundamental_identity(AxiomReport& rep,
                                            const FiOptions& opt) const {
  int d = t_.dim;
  rep.fi_exhaustive = opt.exhaustive;
  rep.seed = opt.seed;
  long long count = 0;
  if (opt.exhaustive) {
    long long quintuples = 1;
    for (int k = 0; k < 5; ++k) quintuples *= d;
    if (quintuples > opt.budget)
      throw std::invalid_argument(
          "exhaustive sweep exceeds the quintuple budget; use sampled mode");
    for (int i1 = 0; i1 < d; ++i1)
      for (int i2 = 0; i2 < d; ++i2)
        for (int i3 = 0; i3 < d; ++i3)
          for (int i4 = 0; i4 < d; ++i4)
            for (int i5 = 0; i5 < d; ++i5)
              for (int s2 = 0; s2 < 2; ++s2)
                for (int s4 = 0; s4 < 2; ++s4) {
                  ++count;
                  Counterexample ce;
                  if (!fi_instance(i1, s2, i2, i3, s4, i4, i5, &ce)) {
                    rep.fi = false;
                    rep.fi_instances = count;
                    rep.counterexample = ce;
                    return;
                  }
                }
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> pick(0, d - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (long n = 0; n < opt.samples; ++n) {
      ++count;
      Counterexample ce;
      if (!fi_instance(pick(rng), coin(rng), pick(rng), pick(rng), coin(rng),
                       pick(rng), pick(rng), &ce)) {
        rep.fi = false;
        rep.fi_instances = count;
        rep.counterexample = ce;
        return;
      }
    }
  }
  rep.fi = true;
  rep.fi_instances = count;
}

void TriChecker::check_slot2_linearity(AxiomReport& rep) const {
  int d = t_.dim;
  rep.slot2_kind = t_.slot2;
  std::vector<Scalar> lambdas;
  if (t_.backend == Backend::exact)
    lambdas = {Scalar::i(), Scalar::gaussian(1, 1, 2, 1)};
  else
    lambdas = {Scalar::of_complex({0, 1}), Scalar::of_complex({1, 2})};
  for (const Scalar& lam : lambdas) {
    Scalar expect = t_.slot2 == Slot2::antilinear ? lam.conj() : lam;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          Vec b = zero_vec(d, t_.backend);
          b[j] = lam;
          Vec lhs = t_.bracket(scaled_basis(d, i, 0, t_.backend), b,
                               scaled_basis(d, k, 0, t_.backend));
          Vec rhs = vec_scale(expect, cache_.tri(0, i, 0, j, 0, k));
          if (!vec_eq(lhs, rhs)) {
            rep.slot2_ok = false;
            Counterexample ce;
            ce.identity = "slot-2 homogeneity";
            ce.inputs = {scaled_basis(d, i, 0, t_.backend), b,
                         scaled_basis(d, k, 0, t_.backend)};
            ce.lhs = lhs;
            ce.rhs = rhs;
            rep.counterexample = ce;
            return;
          }
        }
  }
  rep.slot2_ok = true;
}

AxiomReport TriChecker::run_axiom_suite(const FiOptions& opt,
                                        bool with_center_and_simple) const {
  AxiomReport rep;
  rep.family = t_.label;
  check_anticommutativity(rep);
  if (rep.antisym) check_fundamental_identity(rep, opt);
  if (rep.antisym && rep.fi) check_slot2_linearity(rep);
  if (with_center_and_simple) {
    rep.center_dim_real = static_cast<int>(center().size());
    rep.simple = is_simple();
  }
  return rep;
}

std::vector<Vec> TriChecker::center() const {
  if (t_.backend != Backend::exact)
    throw std::logic_error("center requires the exact backend");
  int d = t_.dim;
  // Unknown b = sum_j (x_j + i y_j) e_j; centrality [e_i, b, e_k] = 0 is
  // real-linear in (x, y) because slot 2 may be anti-linear.
  QMat sys(2 * d * d * d, 2 * d);
  int row = 0;
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      for (int l = 0; l < d; ++l) {
        for (int j = 0; j < d; ++j) {
          const Scalar& c0 = cache_.tri(0, i, 0, j, 0, k)[l];
          const Scalar& c1 = cache_.tri(0, i, 1, j, 0, k)[l];
          sys.at(row, 2 * j) = c0.exact_re();
          sys.at(row, 2 * j + 1) = c1.exact_re();
          sys.at(row + 1, 2 * j) = c0.exact_im();
          sys.at(row + 1, 2 * j + 1) = c1.exact_im();
        }
        row += 2;
      }
    }
  auto null_basis = sys.kernel();
  std::vector<Vec> result;
  for (const auto& x : null_basis) {
    Vec b = zero_vec(d);
    for (int j = 0; j < d; ++j)
      b[j] = Scalar::gaussian(x[2 * j], x[2 * j + 1]);
    result.push_back(std::move(b));
  }
  return result;
}

bool TriChecker::is_simple() const {
  if (t_.backend != Backend::exact)
    throw std::logic_error("is_simple requires the exact backend");
  int d = t_.dim;
  bool any_nonzero = false;
  std::vector<MatC> ops;
  ops.reserve(2 * d * d);
  for (int i = 0; i < d; ++i)
    for (int s = 0; s < 2; ++s)
      for (int j = 0; j < d; ++j) {
        MatC m(d, d);
        for (int k = 0; k < d; ++k) {
          const Vec& col = cache_.tri(0, i, s, j, 0, k);
          for (int l = 0; l < d; ++l) m.at(l, k) = col[l];
        }
        if (!m.is_zero()) any_nonzero = true;
        ops.push_back(std::move(m));
      }
  if (!any_nonzero) return false;
  for (int r = 0; r < d; ++r) {
    RowSpace closure(d);
    std::vector<Vec> work{basis_vec(d, r)};
    closure.insert(work[0]);
    while (!work.empty() && closure.rank() < d) {
      Vec v = std::move(work.back());
      work.pop_back();
      for (const MatC& op : ops) {
        Vec w = op.apply(v);
        if (!vec_is_zero(w) && closure.insert(w)) work.push_back(std::move(w));
      }
    }
    if (closure.rank() < d) return false;
  }
  return true;
}

std::vector<Vec> center(const TriSystem& t) { return TriChecker(t).center(); }
bool is_simple(const TriSystem& t) { return TriChecker(t).is_simple(); }

TriSystem physicalize(const TriSystem& t, const AntiLinMat& c,
                      const std::string& label) {
  if (t.slot2 != Slot2::linear)
    throw std::invalid_argument("physicalize expects an algebraic system");
  if (c.mat.rows() != t.dim || c.mat.cols() != t.dim)
    throw std::invalid_argument("involution dimension mismatch");
  if (!c.is_involution())
    throw std::invalid_argument("map is not an anti-linear involution");
  int d = t.dim;
  // Bracket compatibility [C a, C b, C c] = C [a, b, c]; both sides are
  // conjugate-multilinear, so basis triples decide it.
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Vec lhs = t.bracket(c.apply(basis_vec(d, i, t.backend)),
                            c.apply(basis_vec(d, j, t.backend)),
                            c.apply(basis_vec(d, k, t.backend)));
        Vec rhs = c.apply(t.bracket(basis_vec(d, i, t.backend),
                                    basis_vec(d, j, t.backend),
                                    basis_vec(d, k, t.backend)));
        if (!vec_eq(lhs, rhs))
          throw std::invalid_argument(
              "map is not an involution of the 3-bracket");
      }
  TriSystem ph;
  ph.dim = t.dim;
  ph.slot2 = Slot2::antilinear;
  ph.backend = t.backend;
  ph.label = label.empty() ? t.label + "_ph" : label;
  auto base = t.bracket;
  ph.bracket = [base, c](const Vec& a, const Vec& b, const Vec& cc) {
    return base(a, c.apply(b), cc);
  };
  return ph;
}

bool scaled_bracket_iso_check(const TriSystem& t, const Scalar& lambda) {
  if (!lambda.is_real())
    throw std::invalid_argument("scale must be real");
  Scalar alpha;
  if (t.backend == Backend::exact) {
    if (lambda.exact_re() <= 0)
      throw std::invalid_argument("scale must be positive");
    if (!has_exact_sqrt(lambda.exact_re()))
      throw std::invalid_argument(
          "exact backend needs a perfect-square scale");
    alpha = Scalar::gaussian(1 / exact_sqrt(lambda.exact_re()), 0);
  } else {
    double l = lambda.to_complex().real();
    if (l <= 0) throw std::invalid_argument("scale must be positive");
    alpha = Scalar::of_double(1.0 / std::sqrt(l));
  }
  int d = t.dim;
  for (int i = 0; i < d; ++i)
    for (int s = 0; s < 2; ++s)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          Vec a = basis_vec(d, i, t.backend);
          Vec b = scaled_basis(d, j, s, t.backend);
          Vec c = basis_vec(d, k, t.backend);
          Vec lhs = vec_scale(alpha, t.bracket(a, b, c));
          Vec rhs = vec_scale(lambda, t.bracket(vec_scale(alpha, a),
                                                vec_scale(alpha, b),
                                                vec_scale(alpha, c)));
          if (!vec_close(lhs, rhs, t.backend, 1e-9)) return false;
        }
  return true;
}

JordanReport check_jordan_axioms(
    int dim, const std::vector<int>& parity,
    const std::function<Vec(const Vec&, const Vec&, const Vec&)>& bracket,
    long long budget) {
  JordanReport rep;
  auto sgn = [](int e) { return e % 2 == 0 ? 1 : -1; };
  std::vector<std::vector<std::vector<Vec>>> c(
      dim, std::vector<std::vector<Vec>>(dim, std::vector<Vec>(dim)));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        c[i][j][k] =
            bracket(basis_vec(dim, i), basis_vec(dim, j), basis_vec(dim, k));

  rep.symmetry = true;
  for (int i = 0; i < dim && rep.symmetry; ++i)
    for (int j = 0; j < dim && rep.symmetry; ++j)
      for (int k = 0; k < dim; ++k) {
        int s = sgn(parity[i] * parity[j] + parity[i] * parity[k] +
                    parity[j] * parity[k]);
        Vec rhs = vec_scale(Scalar::rational(s), c[k][j][i]);
        if (!vec_eq(c[i][j][k], rhs)) {
          rep.symmetry = false;
          Counterexample ce;
          ce.identity = "jordan symmetry";
          ce.inputs = {basis_vec(dim, i), basis_vec(dim, j), basis_vec(dim, k)};
          ce.lhs = c[i][j][k];
          ce.rhs = rhs;
          rep.counterexample = ce;
          break;
        }
      }
  if (!rep.symmetry) return rep;

  long long quintuples = 1;
  for (int k = 0; k < 5; ++k) quintuples *= dim;
  if (quintuples > budget)
    throw std::invalid_argument("jordan sweep exceeds the quintuple budget");

  auto expand = [&](int slot, const Vec& w, int a, int b) {
    // linear expansion of [.,.,.] with vector w in the given slot
    Vec acc = zero_vec(dim);
    for (int r = 0; r < dim; ++r) {
      if (w[r].is_zero()) continue;
      const Vec& base = slot == 0 ? c[r][a][b] : slot == 1 ? c[a][r][b]
                                                           : c[a][b][r];
      for (int l = 0; l < dim; ++l) acc[l] += w[r] * base[l];
    }
    return acc;
  };

  rep.identity = true;
  for (int a = 0; a < dim && rep.identity; ++a)
    for (int b = 0; b < dim && rep.identity; ++b)
      for (int x = 0; x < dim && rep.identity; ++x)
        for (int y = 0; y < dim && rep.identity; ++y)
          for (int z = 0; z < dim; ++z) {
            int s2 = sgn(parity[x] * (parity[a] + parity[b]) +
                         parity[a] * parity[b] + parity[a]);
            int s3 = sgn((parity[x] + parity[y]) * (parity[a] + parity[b]));
            Vec lhs = expand(2, c[x][y][z], a, b);
            Vec r1 = expand(0, c[a][b][x], y, z);
            Vec r2 = vec_scale(Scalar::rational(s2), expand(1, c[b][a][y], x, z));
            Vec r3 = vec_scale(Scalar::rational(s3), expand(2, c[a][b][z], x, y));
            Vec rhs = vec_add(vec_sub(r1, r2), r3);
            if (!vec_eq(lhs, rhs)) {
              rep.identity = false;
              Counterexample ce;
              ce.identity = "jordan derivation identity";
              ce.inputs = {basis_vec(dim, a), basis_vec(dim, b),
                           basis_vec(dim, x), basis_vec(dim, y),
                           basis_vec(dim, z)};
              ce.lhs = lhs;
              ce.rhs = rhs;
              rep.counterexample = ce;
              break;
            }
          }
  return rep;
}

}  // namespace n6tri
