#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "n6tri/matrix.hpp"

namespace n6tri {

enum class Slot2 { linear, antilinear };

/// Finite-dimensional 3-algebra presented by a bracket oracle on coordinate
/// vectors. The bracket is complex-linear in slots 1 and 3; slot 2 is either
/// complex-linear (algebraic) or anti-linear (physical), per the tag.
struct TriSystem {
  int dim = 0;
  Slot2 slot2 = Slot2::linear;
  Backend backend = Backend::exact;
  std::string label;
  std::function<Vec(const Vec&, const Vec&, const Vec&)> bracket;
};

struct Counterexample {
  std::string identity;
  std::vector<Vec> inputs;
  Vec lhs, rhs;
};

struct AxiomReport {
  std::string family;
  bool antisym = false;
  bool fi = false;
  bool slot2_ok = false;
  Slot2 slot2_kind = Slot2::linear;
  long long fi_instances = 0;
  bool fi_exhaustive = true;
  uint64_t seed = 0;
  std::optional<Counterexample> counterexample;
  std::optional<int> center_dim_real;
  std::optional<bool> simple;

  bool pass() const { return antisym && fi && slot2_ok; }
};

struct FiOptions {
  bool exhaustive = true;
  long samples = 2000;
  uint64_t seed = 12345;
  long long budget = 1000000;  // quintuple cap for exhaustive sweeps
};

/// All brackets of (possibly i-scaled) basis vectors: the table behind every
/// exhaustive sweep. Index scale 0 means the plain basis vector, 1 means the
/// vector multiplied by i; slot-2 homogeneity is deliberately not assumed.
class BasisBracketCache {
public:
  explicit BasisBracketCache(const TriSystem& t);

  const Vec& tri(int s1, int i, int s2, int j, int s3, int k) const;

  // Real-additive expansions: one slot carries an arbitrary vector, the other
  // two carry (scaled) basis vectors. Only additivity over re/im parts is
  // used, never slot homogeneity.
  Vec expand_slot1(const Vec& w, int s2, int j, int s3, int k) const;
  Vec expand_slot2(int s1, int i, const Vec& w, int s3, int k) const;
  Vec expand_slot3(int s1, int i, int s2, int j, const Vec& w) const;

  int dim() const { return dim_; }

private:
  size_t idx(int s1, int i, int s2, int j, int s3, int k) const;
  int dim_;
  std::vector<Vec> table_;
};

/// Shared context: one cache serving all checks of a system.
class TriChecker {
public:
  explicit TriChecker(const TriSystem& t);

  const TriSystem& system() const { return t_; }
  const BasisBracketCache& cache() const { return cache_; }

  void check_anticommutativity(AxiomReport& rep) const;
  void check_fundamental_identity(AxiomReport& rep, const FiOptions& opt) const;
  void check_slot2_linearity(AxiomReport& rep) const;
  AxiomReport run_axiom_suite(const FiOptions& opt = {},
                              bool with_center_and_simple = false) const;

  /// Real basis of the realified space of central elements b with
  /// [a, b, c] = 0 for all a, c.
  std::vector<Vec> center() const;

  /// Invariant-subspace closure criterion: every basis vector generates the
  /// whole space under all L_{e_i, e_j} and L_{e_i, i e_j}, and the bracket
  /// is not identically zero.
  bool is_simple() const;

private:
  bool fi_instance(int i1, int s2, int i2, int i3, int s4, int i4, int i5,
                   Counterexample* ce) const;
  TriSystem t_;
  BasisBracketCache cache_;
};

std::vector<Vec> center(const TriSystem& t);
bool is_simple(const TriSystem& t);

/// Converts an algebraic system into a physical one via an anti-linear
/// involution C of the bracket: [a,b,c] -> [a, C(b), c]. Throws when C is not
/// involutive or not bracket-compatible.
TriSystem physicalize(const TriSystem& t, const AntiLinMat& c,
                      const std::string& label = "");

/// For lambda real > 0 verifies that f(x) = lambda^{-1/2} x intertwines the
/// bracket with its lambda-scaled variant: f([a,b,c]) = lambda [fa, fb, fc].
/// Exact backend requires lambda to be a rational perfect square.
bool scaled_bracket_iso_check(const TriSystem& t, const Scalar& lambda);

struct JordanReport {
  bool symmetry = false;
  bool identity = false;
  std::optional<Counterexample> counterexample;
  bool pass() const { return symmetry && identity; }
};

/// Jordan 3-superalgebra axioms over a per-basis parity assignment; the
/// bracket must be complex-linear in all three slots.
JordanReport check_jordan_axioms(
    int dim, const std::vector<int>& parity,
    const std::function<Vec(const Vec&, const Vec&, const Vec&)>& bracket,
    long long budget = 1000000);

}  // namespace n6tri
