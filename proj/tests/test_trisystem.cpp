#include "doctest.h"
#include "n6tri/families.hpp"
#include "n6tri/trisystem.hpp"

using namespace n6tri;

namespace {

// Mutant with the slot-1/3 exchange sign removed: fails anticommutativity.
TriSystem broken_anticomm() {
  TriSystem t = build_a3n(2, +1);
  t.bracket = [](const Vec& a, const Vec& b, const Vec& c) {
    MatC A = vec_to_mat(a, 2, 2), B = vec_to_mat(b, 2, 2),
         C = vec_to_mat(c, 2, 2);
    MatC Bc = B.conj();
    return mat_to_vec((A * Bc * C + C * Bc * A).scaled(Scalar::i()));
  };
  return t;
}

// Eq with i replaced by 1: anti-linearity of slot 2 breaks the identity set.
TriSystem a3n_without_i() {
  TriSystem t = build_a3n(2, +1);
  t.bracket = [](const Vec& a, const Vec& b, const Vec& c) {
    MatC A = vec_to_mat(a, 2, 2), B = vec_to_mat(b, 2, 2),
         C = vec_to_mat(c, 2, 2);
    MatC Bc = B.conj();
    return mat_to_vec(A * Bc * C - C * Bc * A);
  };
  return t;
}

}  // namespace

TEST_CASE("anticommutativity sweeps") {
  AxiomReport rep;
  TriChecker(build_a3t(1, 1)).check_anticommutativity(rep);
  CHECK(rep.antisym);

  AxiomReport rep2;
  TriChecker(build_a3n(2, +1)).check_anticommutativity(rep2);
  CHECK(rep2.antisym);

  AxiomReport rep3;
  TriChecker mutant(broken_anticomm());
  mutant.check_anticommutativity(rep3);
  CHECK_FALSE(rep3.antisym);
  REQUIRE(rep3.counterexample.has_value());
  // the counterexample re-evaluates to unequal sides
  const auto& ce = *rep3.counterexample;
  Vec lhs = mutant.system().bracket(ce.inputs[0], ce.inputs[1], ce.inputs[2]);
  Vec rhs = vec_scale(-Scalar::one(), mutant.system().bracket(
                                          ce.inputs[2], ce.inputs[1],
                                          ce.inputs[0]));
  CHECK_FALSE(vec_eq(lhs, rhs));
}

TEST_CASE("fundamental identity sweeps") {
  AxiomReport rep;
  TriChecker(build_a3t(1, 1)).check_fundamental_identity(rep, {});
  CHECK(rep.fi);

  AxiomReport rep2;
  TriChecker(build_a3t_ph(2, 2, 1, 1)).check_fundamental_identity(rep2, {});
  CHECK(rep2.fi);
  CHECK(rep2.fi_instances == 4096);  // 4^5 quintuples, 4 scaling combos each

  AxiomReport rep3;
  TriChecker(a3n_without_i()).check_fundamental_identity(rep3, {});
  CHECK_FALSE(rep3.fi);
  CHECK(rep3.counterexample.has_value());

  FiOptions tiny;
  tiny.budget = 10;
  AxiomReport rep4;
  CHECK_THROWS_AS(TriChecker(build_a3t(2, 2)).check_fundamental_identity(
                      rep4, tiny),
                  std::invalid_argument);

  FiOptions sampled;
  sampled.exhaustive = false;
  sampled.samples = 500;
  sampled.seed = 7;
  AxiomReport rep5;
  TriChecker(build_a3n(2, -1)).check_fundamental_identity(rep5, sampled);
  CHECK(rep5.fi);
  CHECK(rep5.seed == 7);
  CHECK_FALSE(rep5.fi_exhaustive);
}

TEST_CASE("slot-2 scaling behavior") {
  AxiomReport rep;
  TriChecker(build_a3t(2, 3)).check_slot2_linearity(rep);
  CHECK(rep.slot2_ok);
  CHECK(rep.slot2_kind == Slot2::linear);

  AxiomReport rep2;
  TriChecker(build_a3t_ph(2, 2, 1, 2)).check_slot2_linearity(rep2);
  CHECK(rep2.slot2_ok);
  CHECK(rep2.slot2_kind == Slot2::antilinear);

  AxiomReport rep3;
  TriChecker(build_a3n(2, -1)).check_slot2_linearity(rep3);
  CHECK(rep3.slot2_ok);

  // a physical system mislabeled as algebraic fails the homogeneity check
  TriSystem mislabeled = build_a3n(2, +1);
  mislabeled.slot2 = Slot2::linear;
  AxiomReport rep4;
  TriChecker(mislabeled).check_slot2_linearity(rep4);
  CHECK_FALSE(rep4.slot2_ok);
}

TEST_CASE("anti-linearity restated exactly: [a, i b, c] + i [a,b,c] = 0") {
  TriSystem t = build_a3t_ph(2, 2, 0, 0);
  TriChecker chk(t);
  int d = t.dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Vec sum = vec_add(chk.cache().tri(0, i, 1, j, 0, k),
                          vec_scale(Scalar::i(), chk.cache().tri(0, i, 0, j, 0, k)));
        CHECK(vec_is_zero(sum));
      }
}

TEST_CASE("center computations") {
  auto full = TriChecker(build_a3t(1, 1)).center();
  CHECK(full.size() == 2);  // the whole realified line

  CHECK(TriChecker(build_a3t_ph(2, 2, 0, 0)).center().empty());
  CHECK(TriChecker(build_c3_ph_Cp(2, 1, +1)).center().empty());
}

TEST_CASE("simplicity verdicts") {
  CHECK_FALSE(is_simple(build_a3t(1, 1)));
  CHECK(is_simple(build_a3t_ph(2, 3, 2, 1)));

  // direct sum of two copies: each summand is invariant
  TriSystem one = build_a3n(2, +1);
  TriSystem sum;
  sum.dim = 2 * one.dim;
  sum.slot2 = one.slot2;
  sum.label = "a3n_plus(2) ++ a3n_plus(2)";
  int d = one.dim;
  auto base = one.bracket;
  sum.bracket = [base, d](const Vec& a, const Vec& b, const Vec& c) {
    auto half = [d](const Vec& v, int part) {
      return Vec(v.begin() + part * d, v.begin() + (part + 1) * d);
    };
    Vec out;
    for (int part = 0; part < 2; ++part) {
      Vec r = base(half(a, part), half(b, part), half(c, part));
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  };
  CHECK_FALSE(is_simple(sum));
}

TEST_CASE("physicalization") {
  TriSystem alg = build_a3t(2, 2);
  TriSystem ph = physicalize(alg, involution_cpq(2, 2, 1, 1));
  TriSystem direct = build_a3t_ph(2, 2, 1, 1);
  TriChecker a(ph), b(direct);
  for (int i = 0; i < 4; ++i)
    for (int s = 0; s < 2; ++s)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          CHECK(vec_eq(a.cache().tri(0, i, s, j, 0, k),
                       b.cache().tri(0, i, s, j, 0, k)));

  // i * conjugation is involutive but not bracket-compatible for the t-bracket
  AntiLinMat bad{MatC::identity(4).scaled(Scalar::i())};
  CHECK_THROWS_AS(physicalize(alg, bad), std::invalid_argument);
  // a non-involutive map is rejected before the bracket test
  AntiLinMat twice{MatC::identity(4).scaled(Scalar::rational(2))};
  CHECK_THROWS_AS(physicalize(alg, twice), std::invalid_argument);
  // physicalizing a physical system is rejected
  CHECK_THROWS_AS(physicalize(direct, involution_cpq(2, 2, 0, 0)),
                  std::invalid_argument);
}

TEST_CASE("bracket scaling isomorphism") {
  CHECK(scaled_bracket_iso_check(build_a3n(2, +1), Scalar::rational(4)));
  CHECK(scaled_bracket_iso_check(build_a3t_ph(1, 2, 1, 1), Scalar::one()));
  CHECK_THROWS_AS(
      scaled_bracket_iso_check(build_a3n(2, +1), Scalar::rational(-1)),
      std::invalid_argument);
  CHECK_THROWS_AS(scaled_bracket_iso_check(build_a3n(2, +1), Scalar::i()),
                  std::invalid_argument);
  CHECK(scaled_bracket_iso_check(build_a3n(2, -1), Scalar::rational(9, 4)));
}

TEST_CASE("jordan 3-superalgebra axioms") {
  // 1x1 matrices with abc + cba: the basic Jordan triple
  auto jordan1 = [](const Vec& a, const Vec& b, const Vec& c) {
    Vec r = zero_vec(1);
    r[0] = a[0] * b[0] * c[0] + c[0] * b[0] * a[0];
    return r;
  };
  auto rep = check_jordan_axioms(1, {0}, jordan1);
  CHECK(rep.pass());

  // purely odd system from the 2x2 t-bracket passes with reversed parity
  TriSystem t = build_a3t(2, 2);
  auto rep2 = check_jordan_axioms(4, {1, 1, 1, 1}, t.bracket);
  CHECK(rep2.pass());
  // and the same system read as an even Jordan triple fails the symmetry
  auto rep3 = check_jordan_axioms(4, {0, 0, 0, 0}, t.bracket);
  CHECK_FALSE(rep3.pass());

  // mixed-parity assignment on the same bracket fails with a counterexample
  auto rep4 = check_jordan_axioms(4, {0, 1, 0, 1}, t.bracket);
  CHECK_FALSE(rep4.pass());
  CHECK(rep4.counterexample.has_value());
}
