#include "zcohom/resolution.hpp"

#include <algorithm>
#include <sstream>

namespace zcohom {

namespace {

bool equal_mod(const PresentedAbelianGroup& target, const IntMatrix& a, const IntMatrix& b) {
  return in_column_span(target.relations, a - b);
}

// D(a_0, a_{n+1}) : D_mid -> D_{a_0 · mid · a_{n+1}} for a bar generator
IntMatrix outer_action(const MonoidWithZero& m, const NaturalSystem& d, ElementId first,
                       ElementId mid_product, ElementId last) {
  return d.left_map(first, m.mul(mid_product, last)) * d.right_map(mid_product, last);
}

NerveTuple middle(const NerveTuple& gen) { return NerveTuple(gen.begin() + 1, gen.end() - 1); }

NerveTuple distinguished_generator(const MonoidWithZero& m, const NerveTuple& t) {
  NerveTuple gen;
  gen.reserve(t.size() + 2);
  gen.push_back(m.identity);
  gen.insert(gen.end(), t.begin(), t.end());
  gen.push_back(m.identity);
  return gen;
}

}  // namespace

const IntMatrix& NatTransformation::at(ElementId a) const {
  auto it = component.find(a);
  if (it == component.end())
    throw MissingMap(a, a, "transformation has no component at object id " + std::to_string(a));
  return it->second;
}

NatTransformation identity_transformation(const NaturalSystem& d) {
  NatTransformation t{d, d, {}};
  for (const auto& [a, g] : d.value) t.component.emplace(a, IntMatrix::identity(g.rank));
  return t;
}

std::vector<std::string> check_naturality(const MonoidWithZero& m, const NatTransformation& t) {
  std::vector<std::string> out;
  for (ElementId a : m.nonzero_elements()) {
    const IntMatrix& comp = t.at(a);
    if (comp.rows() != t.target.at(a).rank || comp.cols() != t.source.at(a).rank) {
      out.push_back("component at \"" + m.name_of(a) + "\" has the wrong shape");
      continue;
    }
  }
  if (!out.empty()) return out;
  for (ElementId a : m.nonzero_elements())
    for (const FacMorphism& f : morphisms_from(m, a)) {
      if (f.alpha == m.identity && f.beta == m.identity) continue;
      const IntMatrix lhs = t.target.morphism_matrix(m, f.alpha, f.a, f.beta) * t.at(f.a);
      const IntMatrix rhs = t.at(f.target) * t.source.morphism_matrix(m, f.alpha, f.a, f.beta);
      if (!equal_mod(t.target.at(f.target), lhs, rhs))
        out.push_back("naturality fails on (" + m.name_of(f.alpha) + ", " + m.name_of(f.a) + ", " +
                      m.name_of(f.beta) + ")");
    }
  return out;
}

NatTransformation bar_boundary(const MonoidWithZero& m, std::size_t degree) {
  if (degree < 1) throw Error("bar_boundary: degree must be at least 1");
  NatTransformation t{bar_system(m, degree), bar_system(m, degree - 1), {}};
  auto gens = bar_generators(m, degree);
  auto gens_prev = bar_generators(m, degree - 1);
  for (ElementId a : m.nonzero_elements()) {
    std::map<NerveTuple, std::size_t> prev_index;
    for (std::size_t i = 0; i < gens_prev[a].size(); ++i) prev_index.emplace(gens_prev[a][i], i);
    IntMatrix mat(gens_prev[a].size(), gens[a].size());
    for (std::size_t j = 0; j < gens[a].size(); ++j) {
      const NerveTuple& g = gens[a][j];
      for (std::size_t i = 0; i <= degree; ++i) {
        NerveTuple contracted;
        contracted.reserve(g.size() - 1);
        for (std::size_t p = 0; p + 1 < g.size(); ++p)
          contracted.push_back(p == i ? m.mul(g[p], g[p + 1]) : (p < i ? g[p] : g[p + 1]));
        mat(prev_index.at(contracted), j) += (i % 2 == 0) ? 1 : -1;
      }
    }
    t.component.emplace(a, std::move(mat));
  }
  return t;
}

NatTransformation augmentation(const MonoidWithZero& m) {
  NatTransformation t{bar_system(m, 0), trivial_Z(m), {}};
  auto gens = bar_generators(m, 0);
  for (ElementId a : m.nonzero_elements()) {
    IntMatrix mat(1, gens[a].size());
    for (std::size_t j = 0; j < gens[a].size(); ++j) mat(0, j) = 1;
    t.component.emplace(a, std::move(mat));
  }
  return t;
}

std::optional<ExactnessFailure> check_resolution_exact(
    const MonoidWithZero& m, const NatTransformation& eps,
    const std::vector<NatTransformation>& boundaries) {
  const std::size_t n_max = boundaries.size();
  if (n_max < 1) throw Error("check_resolution_exact: need at least the degree-1 boundary");
  for (ElementId a : m.nonzero_elements()) {
    const PresentedAbelianGroup& z_a = eps.target.at(a);
    // surjectivity of the augmentation at a
    AbelianInvariants coker =
        cokernel_invariants(z_a.rank, IntMatrix::hstack(eps.at(a), z_a.relations));
    if (!coker.trivial()) return ExactnessFailure{a, -1, coker};
    // position 0: ker ε = im ∂_1
    GroupHom eps_a{eps.source.at(a), z_a, eps.at(a)};
    GroupHom d1_a{boundaries[0].source.at(a), boundaries[0].target.at(a), boundaries[0].at(a)};
    AbelianInvariants h0 = homology(eps_a, d1_a);
    if (!h0.trivial()) return ExactnessFailure{a, 0, h0};
    // positions 1 .. n_max-1
    for (std::size_t k = 1; k <= n_max - 1; ++k) {
      GroupHom dk{boundaries[k - 1].source.at(a), boundaries[k - 1].target.at(a),
                  boundaries[k - 1].at(a)};
      GroupHom dk1{boundaries[k].source.at(a), boundaries[k].target.at(a), boundaries[k].at(a)};
      AbelianInvariants h = homology(dk, dk1);
      if (!h.trivial()) return ExactnessFailure{a, static_cast<int>(k), h};
    }
  }
  return std::nullopt;
}

std::optional<ExactnessFailure> check_resolution_exact(const MonoidWithZero& m,
                                                       std::size_t n_max) {
  if (n_max < 1) throw Error("check_resolution_exact: n_max must be at least 1");
  NatTransformation eps = augmentation(m);
  std::vector<NatTransformation> boundaries;
  for (std::size_t n = 1; n <= n_max; ++n) boundaries.push_back(bar_boundary(m, n));
  return check_resolution_exact(m, eps, boundaries);
}

HomLevel hom_level(const MonoidWithZero& m, const NaturalSystem& d, std::size_t degree) {
  require_functorial(m, d);
  HomLevel level;
  level.degree = degree;
  auto gens = bar_generators(m, degree);

  std::size_t ambient_rank = 0;
  std::vector<IntMatrix> ambient_relation_blocks;
  for (ElementId a : m.nonzero_elements())
    for (const NerveTuple& g : gens[a]) {
      const std::size_t rank = d.at(a).rank;
      level.block_position.emplace(std::make_pair(a, g), level.blocks.size());
      level.blocks.push_back({a, g, ambient_rank, rank});
      ambient_rank += rank;
      ambient_relation_blocks.push_back(d.at(a).relations);
    }
  level.ambient = PresentedAbelianGroup{ambient_rank, block_diag(ambient_relation_blocks)};

  // one naturality equation per (non-identity morphism, bar generator)
  std::size_t rows = 0;
  std::vector<IntMatrix> constraint_relation_blocks;
  for (ElementId a : m.nonzero_elements())
    for (const FacMorphism& f : morphisms_from(m, a)) {
      if (f.alpha == m.identity && f.beta == m.identity) continue;
      for (std::size_t j = 0; j < gens[a].size(); ++j) {
        rows += d.at(f.target).rank;
        constraint_relation_blocks.push_back(d.at(f.target).relations);
      }
    }
  IntMatrix constraints(rows, ambient_rank);
  std::size_t row = 0;
  for (ElementId a : m.nonzero_elements())
    for (const FacMorphism& f : morphisms_from(m, a)) {
      if (f.alpha == m.identity && f.beta == m.identity) continue;
      const IntMatrix action = d.morphism_matrix(m, f.alpha, f.a, f.beta);
      for (const NerveTuple& g : gens[a]) {
        NerveTuple image = g;
        image.front() = m.mul(f.alpha, image.front());
        image.back() = m.mul(image.back(), f.beta);
        const HomLevel::Block& target_block =
            level.blocks[level.block_position.at({f.target, image})];
        const HomLevel::Block& source_block = level.blocks[level.block_position.at({a, g})];
        constraints.add_block(row, target_block.offset, IntMatrix::identity(target_block.rank));
        constraints.add_scaled_block(row, source_block.offset, Int(-1), action);
        row += d.at(f.target).rank;
      }
    }
  level.constraints = std::move(constraints);
  level.constraint_relations = block_diag(constraint_relation_blocks);

  IntMatrix big = IntMatrix::hstack(level.constraints, level.constraint_relations);
  level.solution_gens = kernel_basis(big).top_rows(ambient_rank);
  auto relation_coords = solve_linear(level.solution_gens, level.ambient.relations);
  if (!relation_coords)
    throw Error("hom_level: ambient relations escape the solution lattice (internal)");
  IntMatrix syzygies = kernel_basis(level.solution_gens);
  level.group = PresentedAbelianGroup{level.solution_gens.cols(),
                                      IntMatrix::hstack(*relation_coords, syzygies)};
  return level;
}

IntMatrix hom_precompose_matrix(const MonoidWithZero& m, const HomLevel& level,
                                const HomLevel& next) {
  if (next.degree != level.degree + 1) throw Error("hom_precompose_matrix: degree mismatch");
  IntMatrix out(next.ambient.rank, level.ambient.rank);
  for (const HomLevel::Block& block : next.blocks) {
    const NerveTuple& g = block.tuple;
    for (std::size_t i = 0; i <= level.degree + 1; ++i) {
      NerveTuple contracted;
      contracted.reserve(g.size() - 1);
      for (std::size_t p = 0; p + 1 < g.size(); ++p)
        contracted.push_back(p == i ? m.mul(g[p], g[p + 1]) : (p < i ? g[p] : g[p + 1]));
      const HomLevel::Block& src = level.blocks[level.block_position.at({block.object, contracted})];
      out.add_scaled_block(block.offset, src.offset, (i % 2 == 0) ? Int(1) : Int(-1),
                           IntMatrix::identity(block.rank));
    }
  }
  return out;
}

GroupHom hom_differential(const MonoidWithZero& m, const HomLevel& level,
                          const HomLevel& next) {
  IntMatrix ambient = hom_precompose_matrix(m, level, next);
  auto coords = solve_linear(next.solution_gens, ambient * level.solution_gens);
  if (!coords) throw Error("hom_differential: image is not natural (internal)");
  return GroupHom{level.group, next.group, *coords};
}

HomComplexPiece hom_complex(const MonoidWithZero& m, const NaturalSystem& d, std::size_t degree) {
  HomComplexPiece piece;
  piece.level = hom_level(m, d, degree);
  piece.next = hom_level(m, d, degree + 1);
  piece.differential = hom_differential(m, piece.level, piece.next);
  return piece;
}

NatTransformation hom_element(const MonoidWithZero& m, const NaturalSystem& d,
                              const HomLevel& level, const IntMatrix& column) {
  if (column.rows() != level.ambient.rank || column.cols() != 1)
    throw Error("hom_element: bad coordinate column");
  NatTransformation t{bar_system(m, level.degree), d, {}};
  auto gens = bar_generators(m, level.degree);
  std::map<ElementId, std::size_t> next_col;
  for (ElementId a : m.nonzero_elements()) {
    t.component.emplace(a, IntMatrix(d.at(a).rank, gens[a].size()));
    next_col[a] = 0;
  }
  for (const HomLevel::Block& block : level.blocks) {
    IntMatrix& comp = t.component.at(block.object);
    const std::size_t col = next_col[block.object]++;
    for (std::size_t r = 0; r < block.rank; ++r) comp(r, col) = column(block.offset + r, 0);
  }
  return t;
}

IntMatrix hom_coordinates(const HomLevel& level, const NatTransformation& t) {
  IntMatrix out(level.ambient.rank, 1);
  std::map<ElementId, std::size_t> next_col;
  for (const HomLevel::Block& block : level.blocks) {
    const std::size_t col = next_col[block.object]++;
    const IntMatrix& comp = t.at(block.object);
    for (std::size_t r = 0; r < block.rank; ++r) out(block.offset + r, 0) = comp(r, col);
  }
  return out;
}

IntMatrix psi(const MonoidWithZero& m, const NaturalSystem& d, std::size_t degree,
              const NatTransformation& tau) {
  CochainLevel clevel = cochain_level(m, d, degree);
  auto gens = bar_generators(m, degree);
  IntMatrix out(clevel.total.rank, 1);
  for (std::size_t i = 0; i < clevel.index.size(); ++i) {
    const ElementId obj = clevel.block_object[i];
    const NerveTuple gen = distinguished_generator(m, clevel.index[i]);
    const auto& object_gens = gens.at(obj);
    const std::size_t gen_index =
        std::find(object_gens.begin(), object_gens.end(), gen) - object_gens.begin();
    if (gen_index == object_gens.size()) throw Error("psi: distinguished generator missing");
    const IntMatrix& comp = tau.at(obj);
    for (std::size_t r = 0; r < clevel.block_rank(i); ++r)
      out(clevel.offset[i] + r, 0) = comp(r, gen_index);
  }
  return out;
}

NatTransformation psi_inverse(const MonoidWithZero& m, const NaturalSystem& d, std::size_t degree,
                              const IntMatrix& cochain) {
  CochainLevel clevel = cochain_level(m, d, degree);
  if (cochain.rows() != clevel.total.rank || cochain.cols() != 1)
    throw Error("psi_inverse: cochain has the wrong shape");
  std::map<NerveTuple, std::size_t> position;
  for (std::size_t i = 0; i < clevel.index.size(); ++i) position.emplace(clevel.index[i], i);

  NatTransformation t{bar_system(m, degree), d, {}};
  auto gens = bar_generators(m, degree);
  for (ElementId a : m.nonzero_elements()) {
    IntMatrix mat(d.at(a).rank, gens[a].size());
    for (std::size_t j = 0; j < gens[a].size(); ++j) {
      const NerveTuple& g = gens[a][j];
      const NerveTuple mid = middle(g);
      const std::size_t pos = position.at(mid);
      IntMatrix value(clevel.block_rank(pos), 1);
      for (std::size_t r = 0; r < value.rows(); ++r) value(r, 0) = cochain(clevel.offset[pos] + r, 0);
      IntMatrix moved = outer_action(m, d, g.front(), m.product(mid), g.back()) * value;
      for (std::size_t r = 0; r < moved.rows(); ++r) mat(r, j) = moved(r, 0);
    }
    t.component.emplace(a, std::move(mat));
  }
  return t;
}

IntMatrix psi_matrix(const MonoidWithZero& m, const HomLevel& level,
                     const CochainLevel& clevel) {
  IntMatrix out(clevel.total.rank, level.ambient.rank);
  for (std::size_t i = 0; i < clevel.index.size(); ++i) {
    const NerveTuple gen = distinguished_generator(m, clevel.index[i]);
    const HomLevel::Block& block =
        level.blocks[level.block_position.at({clevel.block_object[i], gen})];
    out.add_block(clevel.offset[i], block.offset, IntMatrix::identity(block.rank));
  }
  return out;
}

IntMatrix psi_inverse_matrix(const MonoidWithZero& m, const NaturalSystem& d,
                             const CochainLevel& clevel, const HomLevel& level) {
  std::map<NerveTuple, std::size_t> position;
  for (std::size_t i = 0; i < clevel.index.size(); ++i) position.emplace(clevel.index[i], i);
  IntMatrix out(level.ambient.rank, clevel.total.rank);
  for (const HomLevel::Block& block : level.blocks) {
    const NerveTuple mid = middle(block.tuple);
    const std::size_t pos = position.at(mid);
    out.add_block(block.offset, clevel.offset[pos],
                  outer_action(m, d, block.tuple.front(), m.product(mid), block.tuple.back()));
  }
  return out;
}

NatTransformation lift_through_epi(const MonoidWithZero& m, std::size_t degree,
                                   const NatTransformation& mu, const NatTransformation& nu) {
  const NaturalSystem& d = mu.source;
  const NaturalSystem& e = mu.target;
  for (ElementId a : m.nonzero_elements())
    if (!nu.target.at(a).same_presentation(e.at(a)))
      throw Error("lift_through_epi: nu does not land in the target of mu");
  for (ElementId a : m.nonzero_elements()) {
    const PresentedAbelianGroup& ea = e.at(a);
    if (!cokernel_invariants(ea.rank, IntMatrix::hstack(mu.at(a), ea.relations)).trivial())
      throw NotEpi(a, "mu_" + m.name_of(a) + " misses part of the target");
  }

  auto gens = bar_generators(m, degree);
  // one preimage per middle tuple, chosen by the deterministic Smith solver
  std::map<NerveTuple, IntMatrix> preimage;
  for (const NerveTuple& mid : nerve(m, degree)) {
    const ElementId obj = m.product(mid);
    const NerveTuple gen = distinguished_generator(m, mid);
    const auto& object_gens = gens.at(obj);
    const std::size_t gen_index =
        std::find(object_gens.begin(), object_gens.end(), gen) - object_gens.begin();
    IntMatrix rhs = nu.at(obj).column(gen_index);
    auto solution = solve_linear(IntMatrix::hstack(mu.at(obj), e.at(obj).relations), rhs);
    if (!solution) throw NoPreimage(obj);
    preimage.emplace(mid, solution->top_rows(d.at(obj).rank));
  }

  NatTransformation tau{bar_system(m, degree), d, {}};
  for (ElementId a : m.nonzero_elements()) {
    IntMatrix mat(d.at(a).rank, gens[a].size());
    for (std::size_t j = 0; j < gens[a].size(); ++j) {
      const NerveTuple& g = gens[a][j];
      const NerveTuple mid = middle(g);
      IntMatrix moved =
          outer_action(m, d, g.front(), m.product(mid), g.back()) * preimage.at(mid);
      for (std::size_t r = 0; r < moved.rows(); ++r) mat(r, j) = moved(r, 0);
    }
    tau.component.emplace(a, std::move(mat));
  }
  return tau;
}

PsiCheckResult psi_check(const MonoidWithZero& m, const NaturalSystem& d, std::size_t n_max) {
  PsiCheckResult result;
  auto fail = [&](std::size_t degree, const std::string& what) {
    result.ok = false;
    result.failures.push_back("degree " + std::to_string(degree) + ": " + what);
  };

  std::vector<CochainLevel> clevels;
  std::vector<CoboundaryMap> deltas;
  std::vector<HomLevel> hlevels;
  std::vector<GroupHom> hom_diffs;
  for (std::size_t n = 0; n <= n_max + 1; ++n) {
    clevels.push_back(cochain_level(m, d, n));
    hlevels.push_back(hom_level(m, d, n));
  }
  for (std::size_t n = 0; n <= n_max; ++n) {
    deltas.push_back(coboundary(m, d, n));
    hom_diffs.push_back(hom_differential(m, hlevels[n], hlevels[n + 1]));
  }

  for (std::size_t n = 0; n <= n_max; ++n) {
    PsiDegreeInfo info;
    info.degree = n;
    info.hom_group = group_invariants(hlevels[n].group);
    info.cochain_group = group_invariants(clevels[n].total);
    if (!(info.hom_group == info.cochain_group))
      fail(n, "Hom_NatS(B_n, D) = " + info.hom_group.to_string() + " but C^n = " +
                  info.cochain_group.to_string());

    const IntMatrix p = psi_matrix(m, hlevels[n], clevels[n]);
    const IntMatrix q = psi_inverse_matrix(m, d, clevels[n], hlevels[n]);

    // surjectivity: Ψ ∘ Ψ^{-1} is the identity on the nose
    if (!(p * q).is_identity()) fail(n, "Ψ ∘ Ψ^{-1} is not the identity cochain map");
    // Ψ^{-1} lands in natural transformations
    if (!in_column_span(hlevels[n].constraint_relations, hlevels[n].constraints * q))
      fail(n, "Ψ^{-1} of a cochain violates naturality");
    // injectivity: Ψ^{-1} ∘ Ψ fixes the solution lattice modulo relations
    const IntMatrix& sol = hlevels[n].solution_gens;
    if (!in_column_span(hlevels[n].ambient.relations, q * (p * sol) - sol))
      fail(n, "Ψ^{-1} ∘ Ψ moves a natural transformation");
    // chain map: Ψ^{n+1} ∘ Hom(∂, D) = δ^n ∘ Ψ^n on the solution lattice
    const IntMatrix hd = hom_precompose_matrix(m, hlevels[n], hlevels[n + 1]);
    const IntMatrix lhs = psi_matrix(m, hlevels[n + 1], clevels[n + 1]) * (hd * sol);
    const IntMatrix rhs = deltas[n].hom.matrix * (p * sol);
    if (!in_column_span(clevels[n + 1].total.relations, lhs - rhs))
      fail(n, "the Ψ chain-map square does not commute");

    info.cochain_cohomology =
        homology(deltas[n].hom, n == 0 ? GroupHom::zero(PresentedAbelianGroup::free_group(0),
                                                        deltas[0].source.total)
                                       : deltas[n - 1].hom);
    info.hom_cohomology =
        homology(hom_diffs[n], n == 0 ? GroupHom::zero(PresentedAbelianGroup::free_group(0),
                                                       hlevels[0].group)
                                      : hom_diffs[n - 1]);
    if (!(info.cochain_cohomology == info.hom_cohomology))
      fail(n, "Ext-side cohomology " + info.hom_cohomology.to_string() +
                  " differs from cochain cohomology " + info.cochain_cohomology.to_string());
    result.degrees.push_back(std::move(info));
  }
  return result;
}

ResolutionCheckResult resolution_check(const MonoidWithZero& m, std::size_t n_max) {
  if (n_max < 1) throw Error("resolution_check: n_max must be at least 1");
  ResolutionCheckResult result;
  auto fail = [&](const std::string& what) {
    result.ok = false;
    result.failures.push_back(what);
  };

  NatTransformation eps = augmentation(m);
  std::vector<NatTransformation> boundaries;
  for (std::size_t n = 1; n <= n_max; ++n) boundaries.push_back(bar_boundary(m, n));

  for (const std::string& v : check_naturality(m, eps)) fail("ε: " + v);
  for (std::size_t n = 1; n <= n_max; ++n)
    for (const std::string& v : check_naturality(m, boundaries[n - 1]))
      fail("∂_" + std::to_string(n) + ": " + v);

  for (ElementId a : m.nonzero_elements()) {
    if (!(eps.at(a) * boundaries[0].at(a)).is_zero())
      fail("ε ∘ ∂_1 != 0 at object " + m.name_of(a));
    for (std::size_t n = 1; n + 1 <= n_max; ++n)
      if (!(boundaries[n - 1].at(a) * boundaries[n].at(a)).is_zero())
        fail("∂_" + std::to_string(n) + " ∘ ∂_" + std::to_string(n + 1) + " != 0 at object " +
             m.name_of(a));
  }

  if (auto failure = check_resolution_exact(m, eps, boundaries)) {
    std::ostringstream os;
    os << "augmented complex not exact at object " << m.name_of(failure->object) << ", ";
    if (failure->position < 0)
      os << "augmentation not surjective";
    else
      os << "position " << failure->position << " (homology " << failure->homology.to_string()
         << ")";
    fail(os.str());
  }
  result.objects_checked = m.nonzero_elements().size();
  result.positions_checked = n_max;  // positions -1 (surjectivity) and 0..n_max-1 per object
  return result;
}

}  // namespace zcohom
