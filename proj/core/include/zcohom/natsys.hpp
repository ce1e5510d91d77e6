#pragma once

#include "zcohom/exactalg.hpp"
#include "zcohom/facnerve.hpp"
#include "zcohom/monoid.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zcohom {

/// Natural system on a monoid with zero: a group D_a per nonzero element a
/// together with left maps (alpha)_* : D_a -> D_{alpha a} and right maps
/// (beta)^* : D_a -> D_{a beta}, stored for every index pair with nonzero
/// product. The functor laws are a checkable property, not a construction
/// invariant; see check_functoriality.
struct NaturalSystem {
  std::string label;
  std::map<ElementId, PresentedAbelianGroup> value;
  std::map<std::pair<ElementId, ElementId>, IntMatrix> left;   // key (alpha, a)
  std::map<std::pair<ElementId, ElementId>, IntMatrix> right;  // key (a, beta)

  const PresentedAbelianGroup& at(ElementId a) const;
  const IntMatrix& left_map(ElementId alpha, ElementId a) const;   // throws MissingMap
  const IntMatrix& right_map(ElementId a, ElementId beta) const;   // throws MissingMap

  /// Value on the morphism (alpha, a, beta): alpha_* beta^* as one matrix
  /// D_a -> D_{alpha a beta}. Requires alpha·a·beta != 0.
  IntMatrix morphism_matrix(const MonoidWithZero& m, ElementId alpha, ElementId a,
                            ElementId beta) const;
};

struct FunctorViolation {
  std::string law;     // "value-hom", "left-identity", "left-composition", ...
  std::string detail;  // names the witness elements
};

/// Empty list iff every functor law holds. Missing maps throw MissingMap.
std::vector<FunctorViolation> check_functoriality(const MonoidWithZero& m, const NaturalSystem& d);

void require_functorial(const MonoidWithZero& m, const NaturalSystem& d);

/// D_a = Z for every a, all structure maps the 1x1 identity.
NaturalSystem trivial_Z(const MonoidWithZero& m);

/// Abelian group with a partial action of S \ 0: action(1) = id and
/// action(s)action(t) = action(st) whenever st != 0.
struct ZeroModule {
  std::string label;
  PresentedAbelianGroup group;
  std::map<ElementId, IntMatrix> action;  // every nonzero s
};

/// Throws BadAction (with the witness pair) when the 0-module laws fail.
void validate_zero_module(const MonoidWithZero& m, const ZeroModule& z);

/// Constant natural system of a 0-module: D_a = A, left = action, right = id.
NaturalSystem from_zero_module(const MonoidWithZero& m, const ZeroModule& z);

struct ZeroModuleEnumOptions {
  /// bound |c| <= free_image_bound for images of free generators; without it
  /// End(A) is infinite for free rank > 0 and enumeration throws TooLarge
  std::optional<long> free_image_bound;
  std::size_t candidate_cap = 200000;  // per-element endomorphism candidates
};

/// Every action of m on a (up to exact equality of action matrices), in a
/// deterministic order. The group may be given in any presentation; actions
/// are enumerated on the canonical form and transported back.
std::vector<ZeroModule> enumerate_zero_modules(const MonoidWithZero& m,
                                               const PresentedAbelianGroup& a,
                                               const ZeroModuleEnumOptions& options = {});

/// Generators of B_n(a): the (n+2)-tuples with product a, in lex order,
/// bucketed by product. Shared by bar_system and the resolution machinery.
std::map<ElementId, std::vector<NerveTuple>> bar_generators(const MonoidWithZero& m,
                                                            std::size_t degree);

/// Bar natural system B_n: free on the (n+2)-tuples multiplying to a, with
/// (alpha, beta) acting by [a_0,...,a_{n+1}] -> [alpha a_0, ..., a_{n+1} beta].
NaturalSystem bar_system(const MonoidWithZero& m, std::size_t degree);

}  // namespace zcohom
