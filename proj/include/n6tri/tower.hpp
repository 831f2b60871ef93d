#pragma once

#include "n6tri/superalgebra.hpp"
#include "n6tri/trisystem.hpp"

namespace n6tri {

/// A 3-algebra together with its graded envelope: lie = g_{-1} + g_0 + g_1,
/// sigma the anti-linear graded conjugation, and the bookkeeping linking
/// g_{-1} back to the source coordinates.
struct Tower {
  GradedLieSuper lie;
  GradedConj sigma;
  std::string origin;
  int t_dim = 0;                 // g_{-1} occupies indices [0, t_dim)
  int mid_dim = 0;               // g_0 occupies [t_dim, t_dim + mid_dim)
  // provenance of each g_0 basis operator: L_{e_i, s e_j}, s in {1, i}
  std::vector<std::array<int, 3>> mid_ops;
};

/// Physical 3-bracket [u,v,w] = [[u, sigma(v)], w] on the degree -1 part of a
/// short consistently graded superalgebra with an anti-linear graded
/// conjugation. Preconditions are re-verified.
TriSystem tel(const GradedLieSuper& g, const GradedConj& sigma,
              const std::string& label = "");

/// The graded envelope of a physical 3-algebra with zero center:
/// g_{-1} = T, g_0 spanned by the operators L_{x,y} z = [x,y,z],
/// g_1 by the maps phi_x, with sigma: z -> -phi_z, phi_z -> z,
/// L_{x,y} -> -L_{y,x}.
Tower lie_of(const TriSystem& t);

/// tel(lie_of(T)) reproduces T's bracket on all basis triples, including
/// i-scaled slot-2 inputs, exactly.
bool roundtrip_check(const TriSystem& t);

struct TowerVerdict {
  bool super_structure = false;
  bool short_consistent = false;
  bool mid_generated = false;  // [g_{-1}, g_1] spans g_0
  bool conjugation = false;
  bool top_abelian = false;    // [g_1, g_1] = 0
  bool pass() const {
    return super_structure && short_consistent && mid_generated &&
           conjugation && top_abelian;
  }
};

TowerVerdict check_tower_axioms(const Tower& tw);

/// Simplicity of the envelope: no proper nonzero ideal reachable by
/// invariant-subspace closure from any basis vector.
bool lie_is_simple(const GradedLieSuper& g);

}  // namespace n6tri
