#pragma once

#include "zcohom/errors.hpp"
#include "zcohom/int_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zcohom {

/// U * A * V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithResult {
  IntMatrix u, d, v;
};

/// Smith normal form by exact elimination. Pivot selection always takes the
/// smallest nonzero magnitude in the trailing submatrix, which keeps entry
/// growth tame at desk scale. Total on all shapes, including empty ones.
SmithResult smith_normal_form(const IntMatrix& a);

/// Basis of the kernel lattice {x : A x = 0}, as matrix columns.
/// The returned lattice is saturated (kernels always are).
IntMatrix kernel_basis(const IntMatrix& a);

/// Determinant by fraction-free (Bareiss) elimination. Square input.
Int determinant(const IntMatrix& a);

/// One integer solution X of A X = B, if any. Deterministic: the particular
/// solution produced by the Smith form of A.
std::optional<IntMatrix> solve_linear(const IntMatrix& a, const IntMatrix& b);

/// Whether every column of b lies in the lattice spanned by the columns of a.
bool in_column_span(const IntMatrix& a, const IntMatrix& b);

/// blocks laid out along the diagonal; off-diagonal zero
IntMatrix block_diag(const std::vector<IntMatrix>& blocks);

/// Finitely generated abelian group presented as coker(relations): rank many
/// generators, one relator per column of the relations matrix.
struct PresentedAbelianGroup {
  std::size_t rank = 0;
  IntMatrix relations;  // rank rows, one relator per column

  static PresentedAbelianGroup free_group(std::size_t rank);
  static PresentedAbelianGroup cyclic(const Int& order);
  static PresentedAbelianGroup from_invariants(std::size_t free_rank,
                                               const std::vector<Int>& torsion);

  bool operator==(const PresentedAbelianGroup& other) const = default;

  bool same_presentation(const PresentedAbelianGroup& other) const {
    return rank == other.rank && relations == other.relations;
  }
};

/// Homomorphism of presented groups, as an integer matrix on generators.
struct GroupHom {
  PresentedAbelianGroup source, target;
  IntMatrix matrix;  // target.rank x source.rank

  static GroupHom identity(const PresentedAbelianGroup& g);
  static GroupHom zero(const PresentedAbelianGroup& source, const PresentedAbelianGroup& target);

  /// matrix carries source relators into the target relation lattice
  bool well_defined() const;

  /// this ∘ inner
  GroupHom after(const GroupHom& inner) const;

  /// equal as homomorphisms, i.e. entrywise modulo target relations
  bool equal_mod_relations(const GroupHom& other) const;
};

/// x == y in g, i.e. x - y lies in the relation lattice. Columns compared in bulk.
bool elements_equal(const PresentedAbelianGroup& g, const IntMatrix& x, const IntMatrix& y);

/// Canonical shape of a finitely generated abelian group:
/// Z^free_rank  +  Z/d_1 + ... + Z/d_k  with d_1 | d_2 | ... , every d_i >= 2.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const AbelianInvariants& other) const = default;

  /// order of the group when finite
  std::optional<Int> order() const;

  /// "0", "Z", "Z^2 + Z/2 + Z/4", ...
  std::string to_string() const;
};

/// Invariants of Z^rank / colspan(relations). Unit factors are stripped.
AbelianInvariants cokernel_invariants(std::size_t rank, const IntMatrix& relations);

AbelianInvariants group_invariants(const PresentedAbelianGroup& g);

/// Invariants of ker(d_out) / im(d_in) for a two-step complex of presented
/// groups. The kernel is the preimage lattice of the target relation span;
/// the subgroup divided out is colspan(d_in.matrix) + colspan(source relations).
/// Throws CompositionNotZero when d_out ∘ d_in is nonzero in the target.
AbelianInvariants homology(const GroupHom& d_out, const GroupHom& d_in);

}  // namespace zcohom
