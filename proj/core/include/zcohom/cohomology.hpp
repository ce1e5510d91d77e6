#pragma once

#include "zcohom/natsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zcohom {

/// C^n(S, D) as a direct sum of D_{a_1···a_n} over the degree-n nerve, with
/// block offsets into one presented group.
struct CochainLevel {
  std::size_t degree = 0;
  std::vector<NerveTuple> index;         // nerve order
  std::vector<ElementId> block_object;   // product of each tuple
  std::vector<std::size_t> offset;       // index.size() + 1 entries
  PresentedAbelianGroup total;

  std::size_t block_rank(std::size_t i) const { return offset[i + 1] - offset[i]; }
  std::size_t position_of(const NerveTuple& t) const;
};

CochainLevel cochain_level(const MonoidWithZero& m, const NaturalSystem& d, std::size_t degree);

/// delta^n : C^n -> C^{n+1}. Assembled blockwise: the leading term applies
/// (a_1)_*, the trailing term applies (a_{n+1})^*, and each inner contraction
/// transfers a block through the identity, since contraction preserves the
/// tuple product.
struct CoboundaryMap {
  CochainLevel source, target;
  GroupHom hom;
};

CoboundaryMap coboundary(const MonoidWithZero& m, const NaturalSystem& d, std::size_t degree);

AbelianInvariants cohomology_group(const MonoidWithZero& m, const NaturalSystem& d,
                                   std::size_t degree);

struct DDViolation {
  std::size_t degree;   // delta^{degree+1} ∘ delta^{degree} is nonzero
  std::string detail;
};

std::optional<DDViolation> check_dd_zero(const MonoidWithZero& m, const NaturalSystem& d,
                                         std::size_t n_max);

/// Overload for prebuilt (possibly corrupted) coboundaries; maps[i] must be
/// delta^i for i = 0..n_max.
std::optional<DDViolation> check_dd_zero(const std::vector<CoboundaryMap>& maps);

struct CdEntry {
  std::string coefficient;
  std::size_t degree;
  AbelianInvariants group;
};

struct CdReport {
  std::size_t max_degree = 0;
  std::vector<CdEntry> entries;                 // every (coefficient, degree >= 2, group)
  bool any_nonzero = false;
  std::size_t top_nonvanishing_degree = 0;      // meaningful when any_nonzero
  std::optional<CdEntry> first_witness;
  std::string verdict;   // always flags itself as evidence, never proof
};

/// H^n(M, D) for every battery member and 2 <= n <= n_max. Evidence only:
/// the battery is finite while c.d. quantifies over all natural systems.
CdReport cd_probe(const MonoidWithZero& m, const std::vector<NaturalSystem>& battery,
                  std::size_t n_max);

/// trivial Z, every Z/2 and Z/3 zero-module, and the bar systems B_0, B_1
std::vector<NaturalSystem> default_battery(const MonoidWithZero& m);

}  // namespace zcohom
