#include "doctest.h"
#include "n6tri/scalar.hpp"

using namespace n6tri;

TEST_CASE("exact field axioms hold bit-exactly") {
  Scalar a = Scalar::gaussian(1, 3, -2, 7);
  Scalar b = Scalar::gaussian(5, 2, 1, 4);
  Scalar c = Scalar::gaussian(-3, 11, 2, 9);
  CHECK((a + b) + c == a + (b + c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a * a.inverse() == Scalar::one());
  CHECK((a / b) * b == a);
}

TEST_CASE("conjugation is an involution") {
  Scalar a = Scalar::gaussian(2, 5, 7, 3);
  CHECK(a.conj().conj() == a);
  CHECK((a * a.conj()).is_real());
  Scalar z = Scalar::of_complex({1.5, -2.25});
  CHECK(z.conj().conj() == z);
}

TEST_CASE("backends never mix silently") {
  Scalar a = Scalar::rational(1);
  Scalar z = Scalar::of_double(1.0);
  CHECK_THROWS_AS((void)(a + z), std::invalid_argument);
  CHECK(a.is_exact());
  CHECK((a * a).is_exact());
}

TEST_CASE("normalization keeps denominators canonical") {
  Scalar a = Scalar::gaussian(2, 4, 0, 1);
  CHECK(a.exact_re().get_num() == 1);
  CHECK(a.exact_re().get_den() == 2);
  Scalar b = Scalar::gaussian(mpq_class(3, -6), mpq_class(0));
  CHECK(b.exact_re().get_den() > 0);
}

TEST_CASE("scalar literals parse") {
  CHECK(parse_scalar("3/5+4/5i") == Scalar::gaussian(3, 5, 4, 5));
  CHECK(parse_scalar("2") == Scalar::rational(2));
  CHECK(parse_scalar("-1") == Scalar::rational(-1));
  CHECK(parse_scalar("i") == Scalar::i());
  CHECK(parse_scalar("-2i") == Scalar::i(-2));
  CHECK(parse_scalar("1-2i") == Scalar::gaussian(1, 1, -2, 1));
  CHECK(parse_scalar("0.5").backend() == Backend::floating);
  CHECK(parse_scalar("0.5").to_complex().real() == doctest::Approx(0.5));
  CHECK(parse_scalar("1e-3+2.5i").to_complex().imag() == doctest::Approx(2.5));
  CHECK_THROWS(parse_scalar("abc"));
}

TEST_CASE("rational square roots") {
  CHECK(exact_sqrt(mpq_class(9, 4)) == mpq_class(3, 2));
  CHECK(has_exact_sqrt(mpq_class(1, 4)));
  CHECK_FALSE(has_exact_sqrt(mpq_class(2)));
  CHECK_FALSE(has_exact_sqrt(mpq_class(-4)));
}

TEST_CASE("unit modulus witness") {
  Scalar beta = Scalar::gaussian(3, 5, 4, 5);
  CHECK(beta.norm2() == Scalar::one());
  CHECK_FALSE(beta.is_real());
}
