#include "n6tri/poly.hpp"

#include <algorithm>

namespace n6tri {

Poly Poly::constant(std::vector<std::string> roster, const Scalar& c) {
  Poly p(std::move(roster));
  p.add_term(std::vector<int>(p.nvars(), 0), c);
  return p;
}

Poly Poly::variable(std::vector<std::string> roster, int var) {
  Poly p(std::move(roster));
  std::vector<int> e(p.nvars(), 0);
  e.at(var) = 1;
  p.add_term(e, Scalar::one());
  return p;
}

Poly Poly::monomial(std::vector<std::string> roster, std::vector<int> exps,
                    const Scalar& c) {
  Poly p(std::move(roster));
  p.add_term(exps, c);
  return p;
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int total = 0;
    for (int k : e) total += k;
    d = std::max(d, total);
  }
  return d;
}

Scalar Poly::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Scalar::zero() : it->second;
}

Scalar Poly::constant_term() const {
  return coeff(std::vector<int>(nvars(), 0));
}

void Poly::add_term(const std::vector<int>& exps, const Scalar& c) {
  if (static_cast<int>(exps.size()) != nvars())
    throw std::invalid_argument("exponent arity mismatch");
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("negative exponent");
  if (c.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(roster_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly Poly::scaled(const Scalar& s) const {
  Poly r(roster_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, s * c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(roster_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e(e1);
      for (size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
      r.add_term(e, c1 * c2);
    }
  return r;
}

Poly Poly::conj() const {
  Poly r(roster_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r(roster_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    std::vector<int> d(e);
    d[var] -= 1;
    r.add_term(d, c * Scalar::rational(e[var]));
  }
  return r;
}

Poly Poly::euler(const std::vector<int>& vars) const {
  Poly r(roster_);
  for (const auto& [e, c] : terms_) {
    long weight = 0;
    for (int v : vars) weight += e[v];
    if (weight != 0) r.add_term(e, c * Scalar::rational(weight));
  }
  return r;
}

Poly Poly::drop_constant() const {
  Poly r(*this);
  std::vector<int> zero(nvars(), 0);
  r.terms_.erase(zero);
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return roster_ == o.roster_ && terms_ == o.terms_;
}

LinearChange::LinearChange(MatC p) : p_(std::move(p)) {
  if (p_.rows() != p_.cols()) throw std::invalid_argument("not square");
  p_.inverse();  // throws when the change is singular
}

LinearChange LinearChange::identity(int nvars) {
  return LinearChange(MatC::identity(nvars));
}

Poly LinearChange::apply(const Poly& f) const {
  int n = f.nvars();
  if (p_.rows() != n) throw std::invalid_argument("roster size mismatch");
  // images of the variables
  std::vector<Poly> image(n, Poly(f.roster()));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!p_.at(a, b).is_zero())
        image[a] = image[a] + Poly::variable(f.roster(), b).scaled(p_.at(a, b));
  // memoized powers
  std::vector<std::vector<Poly>> powers(n);
  auto power = [&](int var, int e) -> const Poly& {
    auto& tab = powers[var];
    if (tab.empty()) tab.push_back(Poly::constant(f.roster(), Scalar::one()));
    while (static_cast<int>(tab.size()) <= e)
      tab.push_back(tab.back() * image[var]);
    return tab[e];
  };
  Poly r(f.roster());
  for (const auto& [e, c] : f.terms()) {
    Poly term = Poly::constant(f.roster(), c);
    for (int v = 0; v < n; ++v)
      if (e[v] > 0) term = term * power(v, e[v]);
    r = r + term;
  }
  return r;
}

LinearChange LinearChange::composed(const LinearChange& inner) const {
  return LinearChange(p_ * inner.p_);
}

bool LinearChange::is_involution() const {
  return p_ * p_ == MatC::identity(p_.rows(), p_.backend());
}

Scalar LinearChange::det() const { return determinant(p_); }

PolySampler::PolySampler(std::vector<std::string> roster, int max_degree,
                         uint64_t seed)
    : roster_(std::move(roster)), rng_(seed) {
  int n = static_cast<int>(roster_.size());
  std::vector<int> e(n, 0);
  // enumerate exponent vectors with total degree <= max_degree
  while (true) {
    int total = 0;
    for (int k : e) total += k;
    if (total <= max_degree) monomials_.push_back(e);
    int pos = 0;
    while (pos < n) {
      ++e[pos];
      int t = 0;
      for (int k : e) t += k;
      if (t <= max_degree) break;
      e[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
}

Scalar PolySampler::next_coeff() {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  return Scalar::gaussian(num(rng_), den(rng_), num(rng_), den(rng_));
}

Poly PolySampler::next() {
  Poly p(roster_);
  std::uniform_int_distribution<int> coin(0, 2);
  bool any = false;
  for (const auto& e : monomials_) {
    if (coin(rng_) != 0) continue;  // keep the samples sparse
    Scalar c = next_coeff();
    if (c.is_zero()) continue;
    p.add_term(e, c);
    any = true;
  }
  if (!any && !monomials_.empty()) p.add_term(monomials_.front(), next_coeff());
  return p;
}

}  // namespace n6tri
