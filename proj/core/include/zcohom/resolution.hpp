#pragma once

#include "zcohom/cohomology.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zcohom {

/// Natural transformation between two natural systems: one group
/// homomorphism per nonzero object. Naturality is a checkable property.
struct NatTransformation {
  NaturalSystem source, target;
  std::map<ElementId, IntMatrix> component;

  const IntMatrix& at(ElementId a) const;
};

NatTransformation identity_transformation(const NaturalSystem& d);

/// Violation descriptions for every failed naturality square; empty iff natural.
std::vector<std::string> check_naturality(const MonoidWithZero& m, const NatTransformation& t);

/// Boundary of the bar complex, ∂_n : B_n -> B_{n-1}, n >= 1: the alternating
/// sum of the n+1 inner contractions of each generator tuple.
NatTransformation bar_boundary(const MonoidWithZero& m, std::size_t degree);

/// Augmentation ε : B_0 -> Z sending every generator [a_0, a_1] to [a].
NatTransformation augmentation(const MonoidWithZero& m);

struct ExactnessFailure {
  ElementId object;
  int position;  // -1: ε not surjective; k >= 0: homology at B_k nonzero
  AbelianInvariants homology;
};

/// Exactness of B_{n_max}(a) -> ... -> B_0(a) -> Z_a -> 0 at every nonzero
/// object, positions 0 .. n_max-1, plus surjectivity of the augmentation.
std::optional<ExactnessFailure> check_resolution_exact(const MonoidWithZero& m, std::size_t n_max);

/// Overload for prebuilt (possibly corrupted) data; boundaries[k] = ∂_{k+1}.
std::optional<ExactnessFailure> check_resolution_exact(
    const MonoidWithZero& m, const NatTransformation& eps,
    const std::vector<NatTransformation>& boundaries);

/// Hom_NatS(B_n, D) computed by honest constraint solving: an element is one
/// value in D_a per bar generator of B_n(a), subject to every naturality
/// equation. The solution lattice is presented on its own generating set.
struct HomLevel {
  std::size_t degree = 0;
  struct Block {
    ElementId object;
    NerveTuple tuple;  // length degree + 2
    std::size_t offset;
    std::size_t rank;
  };
  std::vector<Block> blocks;
  std::map<std::pair<ElementId, NerveTuple>, std::size_t> block_position;
  PresentedAbelianGroup ambient;  // free coordinates per generator, block relations
  IntMatrix constraints;          // naturality equations on ambient coordinates
  IntMatrix constraint_relations;
  IntMatrix solution_gens;        // ambient.rank x s, generating the solution lattice
  PresentedAbelianGroup group;    // the Hom group itself, on those s generators
};

HomLevel hom_level(const MonoidWithZero& m, const NaturalSystem& d, std::size_t degree);

/// Ambient matrix of τ -> τ ∘ ∂_{n+1} between the coordinate spaces.
IntMatrix hom_precompose_matrix(const MonoidWithZero& m, const HomLevel& level,
                                const HomLevel& next);

/// The differential Hom(B_n, D) -> Hom(B_{n+1}, D) on the solution groups.
GroupHom hom_differential(const MonoidWithZero& m, const HomLevel& level,
                          const HomLevel& next);

struct HomComplexPiece {
  HomLevel level;
  HomLevel next;
  GroupHom differential;
};

HomComplexPiece hom_complex(const MonoidWithZero& m, const NaturalSystem& d, std::size_t degree);

/// conversions between ambient coordinate columns and transformations B_n -> D
NatTransformation hom_element(const MonoidWithZero& m, const NaturalSystem& d,
                              const HomLevel& level, const IntMatrix& column);
IntMatrix hom_coordinates(const HomLevel& level, const NatTransformation& t);

/// Ψ: read τ off on the distinguished generators [1, a_1, ..., a_n, 1].
/// Returns the coordinate column of the cochain in cochain_level(m, d, n).
IntMatrix psi(const MonoidWithZero& m, const NaturalSystem& d, std::size_t degree,
              const NatTransformation& tau);

/// Ψ^{-1}: extend a cochain f to the transformation
/// φ_a[a_0, ..., a_{n+1}] = D(a_0, a_{n+1}) f(a_1, ..., a_n).
NatTransformation psi_inverse(const MonoidWithZero& m, const NaturalSystem& d, std::size_t degree,
                              const IntMatrix& cochain);

IntMatrix psi_matrix(const MonoidWithZero& m, const HomLevel& level,
                     const CochainLevel& clevel);
IntMatrix psi_inverse_matrix(const MonoidWithZero& m, const NaturalSystem& d,
                             const CochainLevel& clevel, const HomLevel& level);

/// Constructive projectivity of B_n: given an objectwise surjective
/// μ : D -> E and any ν : B_n -> E, produce τ : B_n -> D with μ ∘ τ = ν.
/// Preimages are the deterministic Smith-form solutions, so τ is reproducible.
NatTransformation lift_through_epi(const MonoidWithZero& m, std::size_t degree,
                                   const NatTransformation& mu, const NatTransformation& nu);

/// Bundled comparison-isomorphism checks used by the CLI and the acceptance suite.
struct PsiDegreeInfo {
  std::size_t degree = 0;
  AbelianInvariants hom_group, cochain_group;
  AbelianInvariants hom_cohomology, cochain_cohomology;
};

struct PsiCheckResult {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<PsiDegreeInfo> degrees;
};

/// For n = 0..n_max: Ψ injective + surjective + chain map, Hom group equals
/// C^n as abelian groups, and the two complexes have equal cohomology.
PsiCheckResult psi_check(const MonoidWithZero& m, const NaturalSystem& d, std::size_t n_max);

struct ResolutionCheckResult {
  bool ok = true;
  std::vector<std::string> failures;
  std::size_t objects_checked = 0;
  std::size_t positions_checked = 0;
};

/// Naturality of ε and every ∂, ∂∂ = 0, ε∂_1 = 0, and objectwise exactness.
ResolutionCheckResult resolution_check(const MonoidWithZero& m, std::size_t n_max);

}  // namespace zcohom
