#include "doctest.h"
#include "n6tri/linalg.hpp"
#include "n6tri/matrix.hpp"

using namespace n6tri;

TEST_CASE("signature matrices") {
  CHECK(make_S(2, 2) == MatC::identity(2));
  MatC s21 = make_S(2, 1);
  CHECK(s21.at(0, 0) == Scalar::one());
  CHECK(s21.at(1, 1) == -Scalar::one());
  CHECK(make_S(3, 0) == (-MatC::identity(3)));
  CHECK_THROWS(make_S(2, 3));
}

TEST_CASE("J block matrix") {
  MatC j2 = make_J(2);
  CHECK(j2.at(0, 1) == Scalar::one());
  CHECK(j2.at(1, 0) == -Scalar::one());
  MatC j4 = make_J(4);
  CHECK(j4 * j4 == (-MatC::identity(4)));
  CHECK(j2.transpose() == -j2);
  CHECK_THROWS(make_J(3));
}

TEST_CASE("H block-diagonal signature") {
  CHECK(make_H(2, 1) == MatC::identity(2));
  MatC h41 = make_H(4, 1);
  Vec want = {Scalar::one(), -Scalar::one(), Scalar::one(), -Scalar::one()};
  for (int k = 0; k < 4; ++k) CHECK(h41.at(k, k) == want[k]);
  CHECK(make_H(4, 0) == (-MatC::identity(4)));
}

TEST_CASE("symplectic predicate") {
  CHECK(is_symplectic(MatC::identity(4)));
  CHECK(is_symplectic(make_J(4)));
  MatC d = MatC::identity(4);
  d.at(0, 0) = Scalar::rational(2);
  CHECK_FALSE(is_symplectic(d));
  CHECK_THROWS(is_symplectic(MatC::identity(3)));
  for (int p = 0; p <= 2; ++p) CHECK(is_symplectic(make_H(4, p)));
  CHECK(is_symplectic(make_S(4, 2).scaled(Scalar::i())));
}

TEST_CASE("exact inverse") {
  MatC a(2, 2);
  a.at(0, 0) = Scalar::rational(2);
  a.at(0, 1) = Scalar::i();
  a.at(1, 0) = Scalar::zero();
  a.at(1, 1) = Scalar::rational(1, 2);
  CHECK(a * a.inverse() == MatC::identity(2));
  MatC sing(2, 2);
  sing.at(0, 0) = Scalar::one();
  CHECK_THROWS_AS(sing.inverse(), std::domain_error);
}

TEST_CASE("anti-linear maps conjugate first") {
  AntiLinMat c{MatC::identity(2).scaled(Scalar::i())};
  Vec x = {Scalar::gaussian(1, 1, 2, 1), Scalar::zero()};
  Vec y = c.apply(x);
  CHECK(y[0] == Scalar::i() * Scalar::gaussian(1, 1, -2, 1));
  // apply(lambda x) = conj(lambda) apply(x)
  for (Scalar lam : {Scalar::i(), Scalar::gaussian(1, 1, 2, 1)}) {
    Vec lhs = c.apply(vec_scale(lam, x));
    Vec rhs = vec_scale(lam.conj(), c.apply(x));
    CHECK(vec_eq(lhs, rhs));
  }
  CHECK_FALSE(c.is_involution());
  AntiLinMat conj_only{MatC::identity(2)};
  CHECK(conj_only.is_involution());
}

TEST_CASE("row space ranks") {
  RowSpace rs(3);
  CHECK(rs.insert({Scalar::one(), Scalar::zero(), Scalar::i()}));
  CHECK(rs.insert({Scalar::zero(), Scalar::one(), Scalar::zero()}));
  CHECK_FALSE(rs.insert({Scalar::i(), Scalar::zero(), -Scalar::one()}));
  CHECK(rs.rank() == 2);
  CHECK(rs.contains({Scalar::one(), Scalar::i(), Scalar::i()}));
  CHECK_FALSE(rs.contains({Scalar::zero(), Scalar::zero(), Scalar::one()}));
}

TEST_CASE("span solver expresses vectors") {
  SpanSolver span(2);
  CHECK(span.add_generator({Scalar::one(), Scalar::one()}) == 0);
  CHECK(span.add_generator({Scalar::rational(2), Scalar::rational(2)}) == -1);
  CHECK(span.add_generator({Scalar::zero(), Scalar::i()}) == 1);
  auto coords = span.solve({Scalar::rational(3), Scalar::gaussian(3, 1, 2, 1)});
  REQUIRE(coords.has_value());
  CHECK((*coords)[0] == Scalar::rational(3));
  CHECK((*coords)[1] == Scalar::rational(2));
  SpanSolver small(2);
  small.add_generator({Scalar::one(), Scalar::zero()});
  CHECK_FALSE(small.solve({Scalar::zero(), Scalar::one()}).has_value());
}

TEST_CASE("rational kernels") {
  QMat m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(1, 2) = 1;
  auto null_basis = m.kernel();
  REQUIRE(null_basis.size() == 1);
  CHECK(null_basis[0][0] == -null_basis[0][1]);
  CHECK(null_basis[0][2] == 0);
  CHECK(m.rank() == 2);
}
