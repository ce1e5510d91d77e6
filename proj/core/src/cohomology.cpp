#include "zcohom/cohomology.hpp"

#include <map>
#include <sstream>

namespace zcohom {

std::size_t CochainLevel::position_of(const NerveTuple& t) const {
  for (std::size_t i = 0; i < index.size(); ++i)
    if (index[i] == t) return i;
  throw Error("cochain level: tuple not in the nerve");
}

CochainLevel cochain_level(const MonoidWithZero& m, const NaturalSystem& d, std::size_t degree) {
  require_functorial(m, d);
  CochainLevel level;
  level.degree = degree;
  level.index = nerve(m, degree);
  level.offset.push_back(0);
  std::vector<IntMatrix> relation_blocks;
  std::size_t rank = 0;
  for (const NerveTuple& t : level.index) {
    ElementId obj = m.product(t);
    const PresentedAbelianGroup& g = d.at(obj);
    level.block_object.push_back(obj);
    rank += g.rank;
    level.offset.push_back(rank);
    relation_blocks.push_back(g.relations);
  }
  level.total = PresentedAbelianGroup{rank, block_diag(relation_blocks)};
  return level;
}

CoboundaryMap coboundary(const MonoidWithZero& m, const NaturalSystem& d, std::size_t degree) {
  CoboundaryMap map;
  map.source = cochain_level(m, d, degree);
  map.target = cochain_level(m, d, degree + 1);

  std::map<NerveTuple, std::size_t> source_position;
  for (std::size_t i = 0; i < map.source.index.size(); ++i)
    source_position.emplace(map.source.index[i], i);

  IntMatrix mat(map.target.total.rank, map.source.total.rank);
  for (std::size_t bt = 0; bt < map.target.index.size(); ++bt) {
    const NerveTuple& b = map.target.index[bt];
    const std::size_t row = map.target.offset[bt];

    // (a_1)_* f(a_2, ..., a_{n+1})
    NerveTuple tail(b.begin() + 1, b.end());
    mat.add_block(row, map.source.offset[source_position.at(tail)],
                  d.left_map(b.front(), m.product(tail)));

    // inner contractions carry a block through the identity
    for (std::size_t i = 1; i <= degree; ++i) {
      NerveTuple contracted;
      contracted.reserve(degree);
      for (std::size_t j = 0; j + 1 < b.size(); ++j)
        contracted.push_back(j == i - 1 ? m.mul(b[j], b[j + 1]) : (j < i - 1 ? b[j] : b[j + 1]));
      const std::size_t pos = source_position.at(contracted);
      const Int sign = (i % 2 == 0) ? 1 : -1;
      mat.add_scaled_block(row, map.source.offset[pos], sign,
                           IntMatrix::identity(map.source.block_rank(pos)));
    }

    // (-1)^{n+1} (a_{n+1})^* f(a_1, ..., a_n)
    NerveTuple head(b.begin(), b.end() - 1);
    const Int sign = (degree + 1) % 2 == 0 ? 1 : -1;
    mat.add_scaled_block(row, map.source.offset[source_position.at(head)], sign,
                         d.right_map(m.product(head), b.back()));
  }
  map.hom = GroupHom{map.source.total, map.target.total, std::move(mat)};
  return map;
}

AbelianInvariants cohomology_group(const MonoidWithZero& m, const NaturalSystem& d,
                                   std::size_t degree) {
  CoboundaryMap d_out = coboundary(m, d, degree);
  GroupHom d_in = degree == 0
                      ? GroupHom::zero(PresentedAbelianGroup::free_group(0), d_out.source.total)
                      : coboundary(m, d, degree - 1).hom;
  return homology(d_out.hom, d_in);
}

std::optional<DDViolation> check_dd_zero(const std::vector<CoboundaryMap>& maps) {
  for (std::size_t n = 0; n + 1 < maps.size(); ++n) {
    const CoboundaryMap& inner = maps[n];
    const CoboundaryMap& outer = maps[n + 1];
    IntMatrix composite = outer.hom.matrix * inner.hom.matrix;
    if (in_column_span(outer.target.total.relations, composite)) continue;
    // locate the offending source block for the report
    for (std::size_t j = 0; j < inner.source.index.size(); ++j) {
      IntMatrix cols = composite.columns(inner.source.offset[j], inner.source.block_rank(j));
      if (!in_column_span(outer.target.total.relations, cols)) {
        std::ostringstream os;
        os << "delta^" << (n + 1) << " ∘ delta^" << n << " is nonzero on source block " << j;
        return DDViolation{n, os.str()};
      }
    }
    return DDViolation{n, "composite nonzero"};
  }
  return std::nullopt;
}

std::optional<DDViolation> check_dd_zero(const MonoidWithZero& m, const NaturalSystem& d,
                                         std::size_t n_max) {
  if (n_max < 1) throw Error("check_dd_zero: n_max must be at least 1");
  std::vector<CoboundaryMap> maps;
  for (std::size_t n = 0; n <= n_max; ++n) maps.push_back(coboundary(m, d, n));
  return check_dd_zero(maps);
}

CdReport cd_probe(const MonoidWithZero& m, const std::vector<NaturalSystem>& battery,
                  std::size_t n_max) {
  if (battery.empty()) throw Error("cd_probe: battery must be nonempty");
  CdReport report;
  report.max_degree = n_max;
  for (const NaturalSystem& d : battery)
    for (std::size_t n = 2; n <= n_max; ++n) {
      CdEntry entry{d.label, n, cohomology_group(m, d, n)};
      if (!entry.group.trivial()) {
        report.any_nonzero = true;
        if (!report.first_witness) report.first_witness = entry;
        if (n > report.top_nonvanishing_degree) report.top_nonvanishing_degree = n;
      }
      report.entries.push_back(std::move(entry));
    }

  std::ostringstream os;
  if (!report.any_nonzero) {
    os << "no nonvanishing H^n for 2 <= n <= " << n_max
       << " across battery; consistent with c.d. <= 1.";
  } else {
    os << "H^" << report.first_witness->degree << " nonzero for coefficient "
       << report.first_witness->coefficient << "; c.d. >= " << report.top_nonvanishing_degree
       << ".";
  }
  os << " Evidence only: the battery is finite, c.d. quantifies over all natural systems.";
  report.verdict = os.str();
  return report;
}

std::vector<NaturalSystem> default_battery(const MonoidWithZero& m) {
  std::vector<NaturalSystem> battery;
  battery.push_back(trivial_Z(m));
  for (const ZeroModule& z : enumerate_zero_modules(m, PresentedAbelianGroup::cyclic(2)))
    battery.push_back(from_zero_module(m, z));
  for (const ZeroModule& z : enumerate_zero_modules(m, PresentedAbelianGroup::cyclic(3)))
    battery.push_back(from_zero_module(m, z));
  battery.push_back(bar_system(m, 0));
  battery.push_back(bar_system(m, 1));
  return battery;
}

}  // namespace zcohom
