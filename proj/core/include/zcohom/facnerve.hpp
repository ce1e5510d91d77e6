#pragma once

#include "zcohom/monoid.hpp"

#include <vector>

namespace zcohom {

/// Morphism a -> alpha·a·beta of the category of factorizations. Distinct
/// triples are distinct morphisms even when they induce the same product.
struct FacMorphism {
  ElementId alpha, a, beta, target;
  bool operator==(const FacMorphism&) const = default;
};

/// All (alpha, beta) with alpha·a·beta = b, ordered lexicographically by ids.
std::vector<FacMorphism> morphisms(const MonoidWithZero& m, ElementId a, ElementId b);

/// All morphisms out of a, i.e. pairs with alpha·a·beta != 0, lex order.
std::vector<FacMorphism> morphisms_from(const MonoidWithZero& m, ElementId a);

/// second ∘ first, defined when first.target == second.a.
FacMorphism compose(const MonoidWithZero& m, const FacMorphism& second, const FacMorphism& first);

/// Tuple of elements with nonzero product; degree = length, Ner_0 = { () }.
using NerveTuple = std::vector<ElementId>;

/// All degree-n tuples with nonzero product, in lexicographic id order.
std::vector<NerveTuple> nerve(const MonoidWithZero& m, std::size_t degree);

}  // namespace zcohom
