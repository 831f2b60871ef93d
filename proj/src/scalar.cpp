#include "n6tri/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace n6tri {

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Scalar s;
  s.re_ = mpq_class(num, den);
  s.re_.canonicalize();
  return s;
}

Scalar Scalar::gaussian(const mpq_class& re, const mpq_class& im) {
  Scalar s;
  s.re_ = re;
  s.im_ = im;
  return s;
}

Scalar Scalar::gaussian(long re_num, long re_den, long im_num, long im_den) {
  if (re_den == 0 || im_den == 0) throw std::invalid_argument("zero denominator");
  mpq_class re(re_num, re_den), im(im_num, im_den);
  re.canonicalize();
  im.canonicalize();
  return gaussian(re, im);
}

Scalar Scalar::i(long k) { return gaussian(0, 1, k, 1); }

Scalar Scalar::of_complex(std::complex<double> z) {
  Scalar s;
  s.backend_ = Backend::floating;
  s.f_ = z;
  return s;
}

void Scalar::require_exact() const {
  if (backend_ != Backend::exact) throw std::logic_error("scalar is not exact");
}

void Scalar::require_same(const Scalar& a, const Scalar& b) {
  if (a.backend_ != b.backend_)
    throw std::invalid_argument("mixed scalar backends");
}

const mpq_class& Scalar::exact_re() const {
  require_exact();
  return re_;
}

const mpq_class& Scalar::exact_im() const {
  require_exact();
  return im_;
}

std::complex<double> Scalar::to_complex() const {
  if (backend_ == Backend::floating) return f_;
  return {re_.get_d(), im_.get_d()};
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(*this, o);
  if (backend_ == Backend::floating) return of_complex(f_ + o.f_);
  return gaussian(re_ + o.re_, im_ + o.im_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same(*this, o);
  if (backend_ == Backend::floating) return of_complex(f_ - o.f_);
  return gaussian(re_ - o.re_, im_ - o.im_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(*this, o);
  if (backend_ == Backend::floating) return of_complex(f_ * o.f_);
  return gaussian(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (backend_ == Backend::floating) return of_complex(-f_);
  return gaussian(-re_, -im_);
}

Scalar Scalar::conj() const {
  if (backend_ == Backend::floating) return of_complex(std::conj(f_));
  return gaussian(re_, -im_);
}

Scalar Scalar::inverse() const {
  if (backend_ == Backend::floating) {
    if (f_ == std::complex<double>(0.0, 0.0))
      throw std::domain_error("division by zero");
    return of_complex(1.0 / f_);
  }
  mpq_class n2 = re_ * re_ + im_ * im_;
  if (n2 == 0) throw std::domain_error("division by zero");
  return gaussian(re_ / n2, -im_ / n2);
}

Scalar Scalar::re() const {
  if (backend_ == Backend::floating) return of_complex({f_.real(), 0.0});
  return gaussian(re_, 0);
}

Scalar Scalar::im() const {
  if (backend_ == Backend::floating) return of_complex({f_.imag(), 0.0});
  return gaussian(im_, 0);
}

Scalar Scalar::norm2() const {
  if (backend_ == Backend::floating) return of_complex({std::norm(f_), 0.0});
  return gaussian(re_ * re_ + im_ * im_, 0);
}

bool Scalar::is_zero() const {
  if (backend_ == Backend::floating) return f_ == std::complex<double>(0.0, 0.0);
  return re_ == 0 && im_ == 0;
}

bool Scalar::is_one() const {
  if (backend_ == Backend::floating) return f_ == std::complex<double>(1.0, 0.0);
  return re_ == 1 && im_ == 0;
}

bool Scalar::is_real() const {
  if (backend_ == Backend::floating) return f_.imag() == 0.0;
  return im_ == 0;
}

bool Scalar::is_imaginary() const {
  if (backend_ == Backend::floating) return f_.real() == 0.0;
  return re_ == 0;
}

bool Scalar::operator==(const Scalar& o) const {
  require_same(*this, o);
  if (backend_ == Backend::floating) return f_ == o.f_;
  return re_ == o.re_ && im_ == o.im_;
}

double Scalar::abs() const { return std::abs(to_complex()); }

std::string Scalar::str() const {
  std::ostringstream out;
  if (backend_ == Backend::floating) {
    out << f_.real();
    if (f_.imag() != 0.0) out << (f_.imag() > 0 ? "+" : "") << f_.imag() << "i";
    return out.str();
  }
  if (im_ == 0) return re_.get_str();
  if (re_ == 0) return im_.get_str() + "i";
  out << re_.get_str() << (im_ > 0 ? "+" : "") << im_.get_str() << "i";
  return out.str();
}

bool has_exact_sqrt(const mpq_class& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(q.get_den().get_mpz_t());
}

mpq_class exact_sqrt(const mpq_class& q) {
  if (!has_exact_sqrt(q)) throw std::domain_error("not a rational perfect square");
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
  return mpq_class(n, d);
}

namespace {

// One signed term of an exact scalar literal: [sign] digits [/ digits] [i],
// or a bare [sign] i.
struct Term {
  mpq_class value;
  bool imaginary = false;
};

Term parse_term(const std::string& s, size_t& pos) {
  Term t;
  int sign = 1;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') sign = -1;
    ++pos;
  }
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  std::string num = s.substr(start, pos - start);
  std::string den = "1";
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t dstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    den = s.substr(dstart, pos - dstart);
    if (den.empty()) throw std::invalid_argument("bad scalar literal");
  }
  if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'I')) {
    t.imaginary = true;
    ++pos;
    if (num.empty()) num = "1";
  }
  if (num.empty()) throw std::invalid_argument("bad scalar literal");
  t.value = mpq_class(mpz_class(num), mpz_class(den));
  t.value.canonicalize();
  if (sign < 0) t.value = -t.value;
  return t;
}

Scalar parse_float_literal(const std::string& s) {
  // re [+-] im i, both decimal
  size_t split = std::string::npos;
  for (size_t k = 1; k < s.size(); ++k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E')
      split = k;
  }
  auto to_d = [](const std::string& x) {
    size_t used = 0;
    double v = std::stod(x, &used);
    if (used != x.size()) throw std::invalid_argument("bad float literal");
    return v;
  };
  if (!s.empty() && (s.back() == 'i' || s.back() == 'I')) {
    if (split == std::string::npos)
      return Scalar::of_complex({0.0, to_d(s.substr(0, s.size() - 1))});
    return Scalar::of_complex({to_d(s.substr(0, split)),
                               to_d(s.substr(split, s.size() - split - 1) == "+"   ? "1"
                                    : s.substr(split, s.size() - split - 1) == "-" ? "-1"
                                        : s.substr(split, s.size() - split - 1))});
  }
  return Scalar::of_complex({to_d(s), 0.0});
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos)
    return parse_float_literal(s);

  size_t pos = 0;
  Term first = parse_term(s, pos);
  mpq_class re = 0, im = 0;
  (first.imaginary ? im : re) = first.value;
  if (pos < s.size()) {
    Term second = parse_term(s, pos);
    if (pos != s.size() || second.imaginary == first.imaginary)
      throw std::invalid_argument("bad scalar literal: " + text);
    (second.imaginary ? im : re) = second.value;
  }
  return Scalar::gaussian(re, im);
}

}  // namespace n6tri
