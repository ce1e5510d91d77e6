#include "zcohom/facnerve.hpp"

namespace zcohom {

std::vector<FacMorphism> morphisms(const MonoidWithZero& m, ElementId a, ElementId b) {
  if (m.is_zero(a)) throw ZeroObject(a);
  if (m.is_zero(b)) throw ZeroObject(b);
  std::vector<FacMorphism> out;
  for (ElementId alpha = 0; alpha < m.size(); ++alpha)
    for (ElementId beta = 0; beta < m.size(); ++beta)
      if (m.mul(m.mul(alpha, a), beta) == b) out.push_back({alpha, a, beta, b});
  return out;
}

std::vector<FacMorphism> morphisms_from(const MonoidWithZero& m, ElementId a) {
  if (m.is_zero(a)) throw ZeroObject(a);
  std::vector<FacMorphism> out;
  for (ElementId alpha = 0; alpha < m.size(); ++alpha)
    for (ElementId beta = 0; beta < m.size(); ++beta) {
      ElementId b = m.mul(m.mul(alpha, a), beta);
      if (!m.is_zero(b)) out.push_back({alpha, a, beta, b});
    }
  return out;
}

FacMorphism compose(const MonoidWithZero& m, const FacMorphism& second, const FacMorphism& first) {
  if (first.target != second.a)
    throw NotComposable("compose: first morphism ends at \"" + m.name_of(first.target) +
                        "\" but second starts at \"" + m.name_of(second.a) + "\"");
  FacMorphism out{m.mul(second.alpha, first.alpha), first.a, m.mul(first.beta, second.beta),
                  second.target};
  // α'(αaβ)β' = target by associativity
  return out;
}

namespace {

void extend(const MonoidWithZero& m, std::size_t degree, NerveTuple& prefix, ElementId prefix_product,
            std::vector<NerveTuple>& out) {
  if (prefix.size() == degree) {
    out.push_back(prefix);
    return;
  }
  for (ElementId e = 0; e < m.size(); ++e) {
    ElementId p = m.mul(prefix_product, e);
    if (m.is_zero(p)) continue;
    prefix.push_back(e);
    extend(m, degree, prefix, p, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<NerveTuple> nerve(const MonoidWithZero& m, std::size_t degree) {
  std::vector<NerveTuple> out;
  NerveTuple prefix;
  extend(m, degree, prefix, m.identity, out);
  return out;
}

}  // namespace zcohom
