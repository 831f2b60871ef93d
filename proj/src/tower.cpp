#include "n6tri/tower.hpp"

namespace n6tri {

namespace {

Vec embed(const Vec& x, int offset, int total) {
  Vec out = zero_vec(total);
  for (size_t k = 0; k < x.size(); ++k) out[offset + k] = x[k];
  return out;
}

Vec restrict_to(const Vec& x, int offset, int len) {
  return Vec(x.begin() + offset, x.begin() + offset + len);
}

}  // namespace

TriSystem tel(const GradedLieSuper& g, const GradedConj& sigma,
              const std::string& label) {
  for (int i = 0; i < g.dim; ++i)
    if (g.degree[i] < -1 || g.degree[i] > 1)
      throw std::invalid_argument("grading is not short");
  if (!check_graded_conjugation(g, sigma.map).pass())
    throw std::invalid_argument("map is not an anti-linear graded conjugation");
  if (!sigma.map.antilinear)
    throw std::invalid_argument("conjugation must be anti-linear");
  auto low = g.degree_indices(-1);
  TriSystem t;
  t.dim = static_cast<int>(low.size());
  t.slot2 = Slot2::antilinear;
  t.label = label.empty() ? "tel(" + g.label + ")" : label;
  GradedLieSuper lie = g;
  ConjMap s = sigma.map;
  std::vector<int> idx = low;
  t.bracket = [lie, s, idx](const Vec& u, const Vec& v, const Vec& w) {
    int total = lie.dim;
    Vec uu = zero_vec(total), vv = zero_vec(total), ww = zero_vec(total);
    for (size_t k = 0; k < idx.size(); ++k) {
      uu[idx[k]] = u[k];
      vv[idx[k]] = v[k];
      ww[idx[k]] = w[k];
    }
    Vec mid = lie.bracket(uu, s.apply(vv));
    Vec out = lie.bracket(mid, ww);
    Vec r = zero_vec(static_cast<int>(idx.size()));
    for (size_t k = 0; k < idx.size(); ++k) r[k] = out[idx[k]];
    // everything outside g_{-1} must vanish
    for (int k = 0; k < total; ++k)
      if (!out[k].is_zero() && lie.degree[k] != -1)
        throw std::logic_error("tel bracket escaped the degree -1 part");
    return r;
  };
  return t;
}

Tower lie_of(const TriSystem& t) {
  if (t.backend != Backend::exact)
    throw std::invalid_argument("tower construction needs the exact backend");
  TriChecker chk(t);
  if (!chk.center().empty())
    throw std::invalid_argument("center must be zero to build the envelope");
  const auto& cache = chk.cache();
  int d = t.dim;

  // operators L_{s1 e_i, s2 e_j} as flattened d x d matrices
  auto op_vec = [&](int s1, int i, int s2, int j) {
    Vec flat = zero_vec(d * d);
    for (int k = 0; k < d; ++k) {
      const Vec& col = cache.tri(s1, i, s2, j, 0, k);
      for (int l = 0; l < d; ++l) flat[l * d + k] = col[l];
    }
    return flat;
  };

  SpanSolver op_span(d * d);
  std::vector<std::array<int, 3>> provenance;
  RowSpace real_span(2 * d * d);
  auto realified = [&](const Vec& v) {
    Vec r = zero_vec(2 * d * d);
    for (int k = 0; k < d * d; ++k) {
      r[2 * k] = v[k].re();
      r[2 * k + 1] = v[k].im();
    }
    return r;
  };
  for (int i = 0; i < d; ++i)
    for (int s = 0; s < 2; ++s)
      for (int j = 0; j < d; ++j) {
        Vec flat = op_vec(0, i, s, j);
        real_span.insert(realified(flat));
        if (op_span.add_generator(flat) >= 0)
          provenance.push_back({i, j, s});
      }
  int r = op_span.rank();
  // the operator space must be a complex subspace: the scaling relations
  // L_{a x, y} = a L_{x,y} = L_{x, conj(a) y} make the real and complex
  // spans agree; assert rather than assume
  if (real_span.rank() != 2 * r)
    throw std::logic_error("operator span is not closed under i");

  int total = 2 * d + r;
  Tower tw;
  tw.origin = t.label;
  tw.t_dim = d;
  tw.mid_dim = r;
  tw.mid_ops = provenance;
  GradedLieSuper& g = tw.lie;
  g.dim = total;
  g.label = "Lie(" + t.label + ")";
  g.parity.assign(total, 0);
  g.degree.assign(total, 0);
  for (int k = 0; k < d; ++k) {
    g.parity[k] = 1;
    g.degree[k] = -1;
    g.parity[d + r + k] = 1;
    g.degree[d + r + k] = +1;
  }
  g.table.assign(total, std::vector<Vec>(total, zero_vec(total)));

  auto mid_coords = [&](const Vec& flat) {
    auto c = op_span.solve(flat);
    if (!c) throw std::logic_error("operator escaped the collected span");
    return *c;
  };
  auto op_matrix_col = [&](int a, int j) {
    // column j of the a-th kept operator
    auto [i, jj, s] = provenance[a];
    return cache.tri(0, i, s, jj, 0, j);
  };

  // [K_a, z_j] = K_a e_j ; [z_j, K_a] = -that
  for (int a = 0; a < r; ++a)
    for (int j = 0; j < d; ++j) {
      Vec img = op_matrix_col(a, j);
      g.table[d + a][j] = embed(img, 0, total);
      g.table[j][d + a] = vec_scale(-Scalar::one(), g.table[d + a][j]);
    }

  // [phi_i, z_j] = -L_{z_j, e_i}; odd-odd brackets are symmetric
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec coords = mid_coords(op_vec(0, j, 0, i));
      Vec entry = embed(vec_scale(-Scalar::one(), coords), d, total);
      g.table[d + r + i][j] = entry;
      g.table[j][d + r + i] = entry;
    }

  // [K_a, K_b] = operator commutator
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      // commutator columns: K_a K_b e_j - K_b K_a e_j
      Vec flat = zero_vec(d * d);
      for (int j = 0; j < d; ++j) {
        Vec col1 = cache.expand_slot3(0, provenance[a][0], provenance[a][2],
                                      provenance[a][1], op_matrix_col(b, j));
        Vec col2 = cache.expand_slot3(0, provenance[b][0], provenance[b][2],
                                      provenance[b][1], op_matrix_col(a, j));
        Vec col = vec_sub(col1, col2);
        for (int l = 0; l < d; ++l) flat[l * d + j] = col[l];
      }
      g.table[d + a][d + b] = embed(mid_coords(flat), d, total);
    }

  // [K_a, phi_z] = -phi_{[y, x, z]} for K_a = L_{x,y}
  for (int a = 0; a < r; ++a)
    for (int j = 0; j < d; ++j) {
      auto [i, jj, s] = provenance[a];
      Vec w = cache.tri(s, jj, 0, i, 0, j);  // [y, x, e_j]
      // phi is anti-linear in its label: phi_w = sum conj(w_k) phi_k
      Vec entry = zero_vec(total);
      for (int k = 0; k < d; ++k) entry[d + r + k] = -w[k].conj();
      g.table[d + a][d + r + j] = entry;
      g.table[d + r + j][d + a] = vec_scale(-Scalar::one(), entry);
    }

  // sigma: z_i -> -phi_i, phi_i -> z_i, L_{x,y} -> -L_{y,x}
  MatC sig(total, total);
  for (int i = 0; i < d; ++i) {
    sig.at(d + r + i, i) = -Scalar::one();
    sig.at(i, d + r + i) = Scalar::one();
  }
  for (int a = 0; a < r; ++a) {
    // K_a = L_{x,y} with x = e_i, y = s e_j maps to -L_{y,x} = -L_{s e_j, e_i}
    auto [i, j, s] = provenance[a];
    Vec coords = mid_coords(op_vec(s, j, 0, i));
    for (int b = 0; b < r; ++b) sig.at(d + b, d + a) = -coords[b];
  }
  tw.sigma = GradedConj{ConjMap{true, sig}, "sigma(" + t.label + ")"};
  return tw;
}

bool roundtrip_check(const TriSystem& t) {
  Tower tw = lie_of(t);
  TriSystem back = tel(tw.lie, tw.sigma);
  if (back.dim != t.dim) return false;
  int d = t.dim;
  for (int i = 0; i < d; ++i)
    for (int s = 0; s < 2; ++s)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          Vec b = zero_vec(d);
          b[j] = s ? Scalar::i() : Scalar::one();
          Vec lhs = back.bracket(basis_vec(d, i), b, basis_vec(d, k));
          Vec rhs = t.bracket(basis_vec(d, i), b, basis_vec(d, k));
          if (!vec_eq(lhs, rhs)) return false;
        }
  return true;
}

TowerVerdict check_tower_axioms(const Tower& tw) {
  TowerVerdict v;
  std::string why;
  v.super_structure = check_super_structure(tw.lie, &why);

  v.short_consistent = true;
  for (int i = 0; i < tw.lie.dim; ++i) {
    int deg = tw.lie.degree[i];
    if (deg < -1 || deg > 1 || ((deg % 2) + 2) % 2 != tw.lie.parity[i])
      v.short_consistent = false;
  }

  // [g_{-1}, g_1] spans g_0
  auto low = tw.lie.degree_indices(-1);
  auto top = tw.lie.degree_indices(+1);
  auto mid = tw.lie.degree_indices(0);
  RowSpace span(tw.lie.dim);
  for (int i : low)
    for (int j : top) span.insert(tw.lie.bracket_basis(i, j));
  v.mid_generated = span.rank() == static_cast<int>(mid.size());

  v.conjugation = check_graded_conjugation(tw.lie, tw.sigma.map).pass();

  v.top_abelian = true;
  for (int i : top)
    for (int j : top)
      if (!vec_is_zero(tw.lie.bracket_basis(i, j))) v.top_abelian = false;
  return v;
}

bool lie_is_simple(const GradedLieSuper& g) {
  int d = g.dim;
  bool any = false;
  for (int i = 0; i < d && !any; ++i)
    for (int j = 0; j < d; ++j)
      if (!vec_is_zero(g.table[i][j])) {
        any = true;
        break;
      }
  if (!any) return false;
  for (int r = 0; r < d; ++r) {
    RowSpace closure(d);
    std::vector<Vec> work{basis_vec(d, r)};
    closure.insert(work[0]);
    while (!work.empty() && closure.rank() < d) {
      Vec v = std::move(work.back());
      work.pop_back();
      for (int i = 0; i < d; ++i) {
        Vec w = g.bracket(basis_vec(d, i), v);
        if (!vec_is_zero(w) && closure.insert(w)) work.push_back(std::move(w));
      }
    }
    if (closure.rank() < d) return false;
  }
  return true;
}

}  // namespace n6tri
