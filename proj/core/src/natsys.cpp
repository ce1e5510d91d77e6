#include "zcohom/natsys.hpp"

#include <algorithm>
#include <sstream>

namespace zcohom {

namespace {

std::string pair_text(const MonoidWithZero& m, ElementId x, ElementId y) {
  return "(" + m.name_of(x) + ", " + m.name_of(y) + ")";
}

bool equal_mod(const PresentedAbelianGroup& target, const IntMatrix& a, const IntMatrix& b) {
  return in_column_span(target.relations, a - b);
}

}  // namespace

const PresentedAbelianGroup& NaturalSystem::at(ElementId a) const {
  auto it = value.find(a);
  if (it == value.end()) throw MissingMap(a, a, "no value group at object id " + std::to_string(a));
  return it->second;
}

const IntMatrix& NaturalSystem::left_map(ElementId alpha, ElementId a) const {
  auto it = left.find({alpha, a});
  if (it == left.end())
    throw MissingMap(alpha, a,
                     "left map (" + std::to_string(alpha) + ")_* at object id " + std::to_string(a));
  return it->second;
}

const IntMatrix& NaturalSystem::right_map(ElementId a, ElementId beta) const {
  auto it = right.find({a, beta});
  if (it == right.end())
    throw MissingMap(a, beta,
                     "right map (" + std::to_string(beta) + ")^* at object id " + std::to_string(a));
  return it->second;
}

IntMatrix NaturalSystem::morphism_matrix(const MonoidWithZero& m, ElementId alpha, ElementId a,
                                         ElementId beta) const {
  ElementId ab = m.mul(a, beta);
  if (m.is_zero(m.mul(alpha, ab))) throw Error("morphism_matrix: alpha·a·beta = 0");
  return left_map(alpha, ab) * right_map(a, beta);
}

std::vector<FunctorViolation> check_functoriality(const MonoidWithZero& m,
                                                  const NaturalSystem& d) {
  std::vector<FunctorViolation> out;
  const auto objects = m.nonzero_elements();

  // presence of every required datum first; absent pieces are errors, not violations
  for (ElementId a : objects) d.at(a);
  for (ElementId alpha : objects)
    for (ElementId a : objects)
      if (!m.is_zero(m.mul(alpha, a))) d.left_map(alpha, a);
  for (ElementId a : objects)
    for (ElementId beta : objects)
      if (!m.is_zero(m.mul(a, beta))) d.right_map(a, beta);

  // every structure map must be a homomorphism of the presented groups
  for (ElementId alpha : objects)
    for (ElementId a : objects) {
      ElementId b = m.mul(alpha, a);
      if (m.is_zero(b)) continue;
      GroupHom h{d.at(a), d.at(b), d.left_map(alpha, a)};
      if (!h.well_defined())
        out.push_back({"value-hom", "left map " + pair_text(m, alpha, a) +
                                        " is not a homomorphism into D_" + m.name_of(b)});
    }
  for (ElementId a : objects)
    for (ElementId beta : objects) {
      ElementId b = m.mul(a, beta);
      if (m.is_zero(b)) continue;
      GroupHom h{d.at(a), d.at(b), d.right_map(a, beta)};
      if (!h.well_defined())
        out.push_back({"value-hom", "right map " + pair_text(m, a, beta) +
                                        " is not a homomorphism into D_" + m.name_of(b)});
    }

  for (ElementId a : objects) {
    if (!equal_mod(d.at(a), d.left_map(m.identity, a), IntMatrix::identity(d.at(a).rank)))
      out.push_back({"left-identity", "left(1, " + m.name_of(a) + ") != id"});
    if (!equal_mod(d.at(a), d.right_map(a, m.identity), IntMatrix::identity(d.at(a).rank)))
      out.push_back({"right-identity", "right(" + m.name_of(a) + ", 1) != id"});
  }

  for (ElementId a2 : objects)  // alpha'
    for (ElementId a1 : objects)
      for (ElementId a : objects) {
        if (m.is_zero(m.mul(m.mul(a2, a1), a))) continue;
        ElementId a1a = m.mul(a1, a);
        const IntMatrix composite = d.left_map(a2, a1a) * d.left_map(a1, a);
        if (!equal_mod(d.at(m.mul(a2, a1a)), composite, d.left_map(m.mul(a2, a1), a)))
          out.push_back({"left-composition",
                         "left(" + m.name_of(a2) + ", " + m.name_of(a1a) + ") ∘ left" +
                             pair_text(m, a1, a) + " != left(" + m.name_of(m.mul(a2, a1)) + ", " +
                             m.name_of(a) + ")"});
      }

  for (ElementId a : objects)
    for (ElementId b1 : objects)  // beta
      for (ElementId b2 : objects) {
        if (m.is_zero(m.mul(a, m.mul(b1, b2)))) continue;
        ElementId ab1 = m.mul(a, b1);
        const IntMatrix composite = d.right_map(ab1, b2) * d.right_map(a, b1);
        if (!equal_mod(d.at(m.mul(ab1, b2)), composite, d.right_map(a, m.mul(b1, b2))))
          out.push_back({"right-composition",
                         "right(" + m.name_of(ab1) + ", " + m.name_of(b2) + ") ∘ right" +
                             pair_text(m, a, b1) + " != right(" + m.name_of(a) + ", " +
                             m.name_of(m.mul(b1, b2)) + ")"});
      }

  // left and right actions commute: the two factorizations of (alpha, beta) agree
  for (ElementId alpha : objects)
    for (ElementId a : objects)
      for (ElementId beta : objects) {
        if (m.is_zero(m.mul(m.mul(alpha, a), beta))) continue;
        ElementId ab = m.mul(a, beta);
        ElementId aa = m.mul(alpha, a);
        const IntMatrix via_right_first = d.left_map(alpha, ab) * d.right_map(a, beta);
        const IntMatrix via_left_first = d.right_map(aa, beta) * d.left_map(alpha, a);
        if (!equal_mod(d.at(m.mul(aa, beta)), via_right_first, via_left_first))
          out.push_back({"commutation", "left/right actions disagree on (" + m.name_of(alpha) +
                                            ", " + m.name_of(a) + ", " + m.name_of(beta) + ")"});
      }

  return out;
}

void require_functorial(const MonoidWithZero& m, const NaturalSystem& d) {
  auto violations = check_functoriality(m, d);
  if (!violations.empty())
    throw Error("coefficient system \"" + d.label + "\" is not a functor: " +
                violations.front().law + ", " + violations.front().detail);
}

NaturalSystem trivial_Z(const MonoidWithZero& m) {
  NaturalSystem d;
  d.label = "trivial-Z";
  const auto z = PresentedAbelianGroup::free_group(1);
  const auto one = IntMatrix::identity(1);
  for (ElementId a : m.nonzero_elements()) d.value.emplace(a, z);
  for (ElementId alpha : m.nonzero_elements())
    for (ElementId a : m.nonzero_elements()) {
      if (!m.is_zero(m.mul(alpha, a))) d.left.emplace(std::make_pair(alpha, a), one);
      if (!m.is_zero(m.mul(a, alpha))) d.right.emplace(std::make_pair(a, alpha), one);
    }
  return d;
}

void validate_zero_module(const MonoidWithZero& m, const ZeroModule& z) {
  for (ElementId s : m.nonzero_elements()) {
    auto it = z.action.find(s);
    if (it == z.action.end())
      throw BadAction(s, s, "no action matrix for \"" + m.name_of(s) + "\"");
    GroupHom h{z.group, z.group, it->second};
    if (!h.well_defined())
      throw BadAction(s, s, "action of \"" + m.name_of(s) + "\" does not respect the relations");
  }
  if (!equal_mod(z.group, z.action.at(m.identity), IntMatrix::identity(z.group.rank)))
    throw BadAction(m.identity, m.identity, "action of the identity is not the identity map");
  for (ElementId s : m.nonzero_elements())
    for (ElementId t : m.nonzero_elements()) {
      ElementId st = m.mul(s, t);
      if (m.is_zero(st)) continue;
      if (!equal_mod(z.group, z.action.at(s) * z.action.at(t), z.action.at(st)))
        throw BadAction(s, t, "action(" + m.name_of(s) + ")∘action(" + m.name_of(t) +
                                  ") != action(" + m.name_of(st) + ")");
    }
}

NaturalSystem from_zero_module(const MonoidWithZero& m, const ZeroModule& z) {
  validate_zero_module(m, z);
  NaturalSystem d;
  d.label = z.label.empty() ? "zero-module" : z.label;
  const auto id = IntMatrix::identity(z.group.rank);
  for (ElementId a : m.nonzero_elements()) d.value.emplace(a, z.group);
  for (ElementId alpha : m.nonzero_elements())
    for (ElementId a : m.nonzero_elements()) {
      if (!m.is_zero(m.mul(alpha, a))) d.left.emplace(std::make_pair(alpha, a), z.action.at(alpha));
      if (!m.is_zero(m.mul(a, alpha))) d.right.emplace(std::make_pair(a, alpha), id);
    }
  return d;
}

namespace {

// orders of the canonical generators: 0 encodes infinite order
struct CanonicalForm {
  std::vector<Int> orders;        // per kept generator
  std::vector<std::size_t> kept;  // indices into the original generator list
  IntMatrix u;                    // original -> diagonalized coordinates
  IntMatrix u_inverse;
  bool is_original = false;  // transport is the identity
};

CanonicalForm canonicalize(const PresentedAbelianGroup& g) {
  CanonicalForm c;
  SmithResult s = smith_normal_form(g.relations);
  const std::size_t lim = std::min(g.relations.rows(), g.relations.cols());
  std::vector<Int> order_of(g.rank, Int(0));
  for (std::size_t i = 0; i < lim; ++i) order_of[i] = s.d(i, i);
  for (std::size_t i = 0; i < g.rank; ++i)
    if (order_of[i] != 1) {
      c.kept.push_back(i);
      c.orders.push_back(order_of[i]);
    }
  c.u = s.u;
  auto inv = solve_linear(s.u, IntMatrix::identity(g.rank));
  if (!inv) throw Error("canonicalize: unimodular matrix failed to invert");
  c.u_inverse = *inv;
  c.is_original = c.u.is_identity() && c.kept.size() == g.rank;
  return c;
}

// value sets per endomorphism matrix entry, derived from generator orders
std::vector<std::vector<Int>> entry_choices(const std::vector<Int>& orders,
                                            const ZeroModuleEnumOptions& options) {
  const std::size_t k = orders.size();
  std::vector<std::vector<Int>> choices(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Int>& vals = choices[i * k + j];
      const Int& oi = orders[i];  // target generator order
      const Int& oj = orders[j];  // source generator order
      if (oj != 0) {
        if (oi != 0) {
          Int step = oi / boost::multiprecision::gcd(oi, oj);
          for (Int v = 0; v < oi; v += step) vals.push_back(v);
        } else {
          vals.push_back(0);  // torsion cannot map to a free generator
        }
      } else {
        if (oi != 0) {
          for (Int v = 0; v < oi; ++v) vals.push_back(v);
        } else {
          if (!options.free_image_bound)
            throw TooLarge("End(A) is infinite for free rank > 0; give a free-image bound");
          for (long v = -*options.free_image_bound; v <= *options.free_image_bound; ++v)
            vals.push_back(v);
        }
      }
    }
  return choices;
}

std::vector<IntMatrix> endomorphism_candidates(const std::vector<Int>& orders,
                                               const ZeroModuleEnumOptions& options) {
  const std::size_t k = orders.size();
  auto choices = entry_choices(orders, options);
  std::size_t count = 1;
  for (const auto& vals : choices) {
    count *= vals.size();
    if (count > options.candidate_cap)
      throw TooLarge("endomorphism candidate count exceeds the enumeration cap");
  }
  std::vector<IntMatrix> out;
  out.reserve(count);
  IntMatrix current(k, k);
  // odometer over entries in row-major order: lexicographic and deterministic
  std::vector<std::size_t> pos(k * k, 0);
  for (;;) {
    for (std::size_t e = 0; e < k * k; ++e) current(e / k, e % k) = choices[e][pos[e]];
    out.push_back(current);
    std::size_t e = k * k;
    while (e > 0) {
      --e;
      if (++pos[e] < choices[e].size()) break;
      pos[e] = 0;
      if (e == 0) return out;
    }
    if (k == 0) return out;  // single empty matrix
  }
}

bool action_laws_hold(const MonoidWithZero& m, const PresentedAbelianGroup& group,
                      const std::map<ElementId, IntMatrix>& assigned) {
  for (const auto& [s, ms] : assigned)
    for (const auto& [t, mt] : assigned) {
      ElementId st = m.mul(s, t);
      if (m.is_zero(st)) continue;
      auto it = assigned.find(st);
      if (it == assigned.end()) continue;  // constraint becomes checkable later
      if (!equal_mod(group, ms * mt, it->second)) return false;
    }
  return true;
}

std::string short_group_name(const AbelianInvariants& inv) {
  if (inv.trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (inv.free_rank > 0) {
    os << "z";
    if (inv.free_rank > 1) os << "^" << inv.free_rank;
    first = false;
  }
  for (const Int& d : inv.torsion) {
    if (!first) os << "x";
    os << "z" << d;
    first = false;
  }
  return os.str();
}

}  // namespace

std::vector<ZeroModule> enumerate_zero_modules(const MonoidWithZero& m,
                                               const PresentedAbelianGroup& a,
                                               const ZeroModuleEnumOptions& options) {
  CanonicalForm canon = canonicalize(a);
  const std::size_t k = canon.kept.size();
  auto candidates = endomorphism_candidates(canon.orders, options);
  const PresentedAbelianGroup canon_group = [&] {
    std::size_t torsion_count = 0;
    for (const Int& o : canon.orders)
      if (o != 0) ++torsion_count;
    IntMatrix rel(k, torsion_count);
    std::size_t col = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (canon.orders[i] != 0) rel(i, col++) = canon.orders[i];
    return PresentedAbelianGroup{k, rel};
  }();

  std::vector<ElementId> to_assign;
  for (ElementId s : m.nonzero_elements())
    if (s != m.identity) to_assign.push_back(s);

  std::vector<std::map<ElementId, IntMatrix>> solutions;
  std::map<ElementId, IntMatrix> assigned;
  assigned[m.identity] = IntMatrix::identity(k);

  // depth-first over candidate assignments with incremental law checking
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == to_assign.size()) {
      solutions.push_back(assigned);
      return;
    }
    ElementId s = to_assign[depth];
    for (const IntMatrix& cand : candidates) {
      assigned[s] = cand;
      if (action_laws_hold(m, canon_group, assigned)) self(self, depth + 1);
      assigned.erase(s);
    }
  };
  search(search, 0);

  // transport the canonical actions back to the original presentation
  const auto expand = [&](const IntMatrix& canon_matrix) {
    IntMatrix full(a.rank, a.rank);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) full(canon.kept[i], canon.kept[j]) = canon_matrix(i, j);
    return canon.u_inverse * full * canon.u;
  };

  std::vector<ZeroModule> out;
  std::size_t index = 0;
  for (const auto& solution : solutions) {
    ZeroModule z;
    z.group = a;
    bool all_identity = true, all_zero = true;
    for (ElementId s : m.nonzero_elements()) {
      const IntMatrix& cm = solution.at(s);
      z.action[s] = canon.is_original ? cm : expand(cm);
      if (s == m.identity) continue;
      if (!equal_mod(canon_group, cm, IntMatrix::identity(k))) all_identity = false;
      if (!equal_mod(canon_group, cm, IntMatrix(k, k))) all_zero = false;
    }
    const std::string group_name = short_group_name(group_invariants(a));
    std::string action_name = all_identity ? "identity"
                              : all_zero   ? "zero"
                                           : "#" + std::to_string(index);
    z.label = "zero-module:" + group_name + ":" + action_name;
    validate_zero_module(m, z);
    out.push_back(std::move(z));
    ++index;
  }
  return out;
}

std::map<ElementId, std::vector<NerveTuple>> bar_generators(const MonoidWithZero& m,
                                                            std::size_t degree) {
  std::map<ElementId, std::vector<NerveTuple>> out;
  for (ElementId a : m.nonzero_elements()) out[a];  // every object, possibly empty
  for (NerveTuple& t : nerve(m, degree + 2)) out[m.product(t)].push_back(std::move(t));
  return out;
}

NaturalSystem bar_system(const MonoidWithZero& m, std::size_t degree) {
  NaturalSystem d;
  d.label = "bar:" + std::to_string(degree);
  auto gens = bar_generators(m, degree);

  std::map<ElementId, std::map<NerveTuple, std::size_t>> index;
  for (const auto& [a, tuples] : gens) {
    d.value.emplace(a, PresentedAbelianGroup::free_group(tuples.size()));
    auto& ix = index[a];
    for (std::size_t i = 0; i < tuples.size(); ++i) ix.emplace(tuples[i], i);
  }

  for (ElementId alpha : m.nonzero_elements())
    for (ElementId a : m.nonzero_elements()) {
      ElementId b = m.mul(alpha, a);
      if (!m.is_zero(b)) {
        IntMatrix mat(gens[b].size(), gens[a].size());
        for (std::size_t j = 0; j < gens[a].size(); ++j) {
          NerveTuple t = gens[a][j];
          t.front() = m.mul(alpha, t.front());
          mat(index[b].at(t), j) += 1;
        }
        d.left.emplace(std::make_pair(alpha, a), std::move(mat));
      }
      ElementId c = m.mul(a, alpha);
      if (!m.is_zero(c)) {
        IntMatrix mat(gens[c].size(), gens[a].size());
        for (std::size_t j = 0; j < gens[a].size(); ++j) {
          NerveTuple t = gens[a][j];
          t.back() = m.mul(t.back(), alpha);
          mat(index[c].at(t), j) += 1;
        }
        d.right.emplace(std::make_pair(a, alpha), std::move(mat));
      }
    }
  return d;
}

}  // namespace zcohom
