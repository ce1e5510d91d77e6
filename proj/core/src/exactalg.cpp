#include "zcohom/exactalg.hpp"

#include <algorithm>
#include <sstream>

namespace zcohom {

namespace {

Int abs_val(const Int& x) { return x < 0 ? Int(-x) : x; }

// g = gcd(a, b) > 0 together with x, y satisfying x*a + y*b = g
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int old_r = a, r = b;
  Int old_x = 1, cur_x = 0;
  Int old_y = 0, cur_y = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_x - q * cur_x;
    old_x = cur_x;
    cur_x = tmp;
    tmp = old_y - q * cur_y;
    old_y = cur_y;
    cur_y = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  x = old_x;
  y = old_y;
  return old_r;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithResult res{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& u = res.u;
  IntMatrix& d = res.d;
  IntMatrix& v = res.v;

  // combine rows (t, i) unimodularly so that d(t, t) becomes gcd(d(t,t), d(i,t))
  // and d(i, t) becomes zero; mirror the operation on u
  auto clear_row_entry = [&](std::size_t t, std::size_t i) {
    const Int a = d(t, t), b = d(i, t);
    if (b == 0) return;
    if (a != 0 && b % a == 0) {
      Int q = b / a;
      d.row_axpy(i, t, -q);
      u.row_axpy(i, t, -q);
      return;
    }
    Int x, y;
    Int g = ext_gcd(a, b, x, y);
    const Int au = a / g, bv = b / g;  // det [[x, y], [-bv, au]] = 1
    for (std::size_t k = 0; k < n; ++k) {
      Int top = d(t, k), bottom = d(i, k);
      d(t, k) = x * top + y * bottom;
      d(i, k) = au * bottom - bv * top;
    }
    for (std::size_t k = 0; k < m; ++k) {
      Int top = u(t, k), bottom = u(i, k);
      u(t, k) = x * top + y * bottom;
      u(i, k) = au * bottom - bv * top;
    }
  };
  auto clear_col_entry = [&](std::size_t t, std::size_t j) {
    const Int a = d(t, t), b = d(t, j);
    if (b == 0) return;
    if (a != 0 && b % a == 0) {
      Int q = b / a;
      d.col_axpy(j, t, -q);
      v.col_axpy(j, t, -q);
      return;
    }
    Int x, y;
    Int g = ext_gcd(a, b, x, y);
    const Int au = a / g, bv = b / g;
    for (std::size_t k = 0; k < m; ++k) {
      Int left = d(k, t), right = d(k, j);
      d(k, t) = x * left + y * right;
      d(k, j) = au * right - bv * left;
    }
    for (std::size_t k = 0; k < n; ++k) {
      Int left = v(k, t), right = v(k, j);
      v(k, t) = x * left + y * right;
      v(k, j) = au * right - bv * left;
    }
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero magnitude in the trailing submatrix becomes the pivot
      std::size_t pi = t, pj = t;
      bool found = false;
      Int best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          Int mag = abs_val(d(i, j));
          if (!found || mag < best) {
            found = true;
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (!found) {
        t = steps;  // trailing submatrix is zero: done overall
        break;
      }
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      for (std::size_t i = t + 1; i < m; ++i) clear_row_entry(t, i);
      // clearing the row may refill the column when a gcd combination fires,
      // in which case the pivot strictly shrank and another sweep runs
      for (std::size_t j = t + 1; j < n; ++j) clear_col_entry(t, j);
      bool clean = true;
      for (std::size_t i = t + 1; i < m && clean; ++i) clean = d(i, t) == 0;
      if (!clean) continue;

      // pivot row/column are clear; enforce that the pivot divides the rest
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n && divides; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.row_axpy(t, i, Int(1));
            u.row_axpy(t, i, Int(1));
            divides = false;
          }
      if (divides) break;
    }
    if (t >= steps) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return res;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithResult s = smith_normal_form(a);
  std::size_t rank = 0;
  const std::size_t lim = std::min(a.rows(), a.cols());
  while (rank < lim && s.d(rank, rank) != 0) ++rank;
  return s.v.columns(rank, a.cols() - rank);
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::optional<IntMatrix> solve_linear(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw Error("solve_linear: row mismatch");
  SmithResult s = smith_normal_form(a);
  IntMatrix c = s.u * b;
  IntMatrix y(a.cols(), b.cols());
  const std::size_t lim = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Int diag = (i < lim) ? s.d(i, i) : Int(0);
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (diag == 0) {
        if (c(i, j) != 0) return std::nullopt;
      } else {
        if (c(i, j) % diag != 0) return std::nullopt;
        y(i, j) = c(i, j) / diag;
      }
    }
  }
  return s.v * y;
}

bool in_column_span(const IntMatrix& a, const IntMatrix& b) {
  return solve_linear(a, b).has_value();
}

IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const IntMatrix& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  IntMatrix out(rows, cols);
  std::size_t r = 0, c = 0;
  for (const IntMatrix& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

PresentedAbelianGroup PresentedAbelianGroup::free_group(std::size_t rank) {
  return {rank, IntMatrix(rank, 0)};
}

PresentedAbelianGroup PresentedAbelianGroup::cyclic(const Int& order) {
  IntMatrix r(1, 1);
  r(0, 0) = order;
  return {1, r};
}

PresentedAbelianGroup PresentedAbelianGroup::from_invariants(std::size_t free_rank,
                                                             const std::vector<Int>& torsion) {
  const std::size_t rank = free_rank + torsion.size();
  IntMatrix rel(rank, torsion.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) rel(i, i) = torsion[i];
  return {rank, rel};
}

GroupHom GroupHom::identity(const PresentedAbelianGroup& g) {
  return {g, g, IntMatrix::identity(g.rank)};
}

GroupHom GroupHom::zero(const PresentedAbelianGroup& source, const PresentedAbelianGroup& target) {
  return {source, target, IntMatrix(target.rank, source.rank)};
}

bool GroupHom::well_defined() const {
  if (matrix.rows() != target.rank || matrix.cols() != source.rank) return false;
  return in_column_span(target.relations, matrix * source.relations);
}

GroupHom GroupHom::after(const GroupHom& inner) const {
  if (!inner.target.same_presentation(source)) throw Error("compose: middle groups differ");
  return {inner.source, target, matrix * inner.matrix};
}

bool GroupHom::equal_mod_relations(const GroupHom& other) const {
  if (matrix.rows() != other.matrix.rows() || matrix.cols() != other.matrix.cols())
    throw Error("equal_mod_relations: shape mismatch");
  return in_column_span(target.relations, matrix - other.matrix);
}

bool elements_equal(const PresentedAbelianGroup& g, const IntMatrix& x, const IntMatrix& y) {
  if (x.rows() != g.rank || y.rows() != g.rank || x.cols() != y.cols())
    throw Error("elements_equal: shape mismatch");
  return in_column_span(g.relations, x - y);
}

std::optional<Int> AbelianInvariants::order() const {
  if (free_rank > 0) return std::nullopt;
  Int n = 1;
  for (const Int& d : torsion) n *= d;
  return n;
}

std::string AbelianInvariants::to_string() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) {
    os << "Z";
    first = false;
  } else if (free_rank > 1) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (const Int& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

AbelianInvariants cokernel_invariants(std::size_t rank, const IntMatrix& relations) {
  if (relations.rows() != rank) throw Error("cokernel_invariants: relations row count != rank");
  SmithResult s = smith_normal_form(relations);
  AbelianInvariants inv;
  const std::size_t lim = std::min(relations.rows(), relations.cols());
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < lim; ++i) {
    const Int& d = s.d(i, i);
    if (d == 0) break;
    ++nonzero;
    if (d >= 2) inv.torsion.push_back(d);
  }
  inv.free_rank = rank - nonzero;
  return inv;
}

AbelianInvariants group_invariants(const PresentedAbelianGroup& g) {
  return cokernel_invariants(g.rank, g.relations);
}

AbelianInvariants homology(const GroupHom& d_out, const GroupHom& d_in) {
  if (!d_in.target.same_presentation(d_out.source))
    throw Error("homology: d_in target is not the d_out source");
  IntMatrix composite = d_out.matrix * d_in.matrix;
  if (!in_column_span(d_out.target.relations, composite))
    throw CompositionNotZero("homology: d_out ∘ d_in is nonzero in the target group");

  const std::size_t r = d_out.source.rank;
  // preimage lattice of the target relation span, projected to source coordinates
  IntMatrix big = IntMatrix::hstack(d_out.matrix, d_out.target.relations);
  IntMatrix kgen = kernel_basis(big).top_rows(r);
  // subgroup to divide out: image of d_in together with the source relations
  IntMatrix lgen = IntMatrix::hstack(d_in.matrix, d_out.source.relations);
  auto coords = solve_linear(kgen, lgen);
  if (!coords) throw Error("homology: internal error, image escapes the kernel lattice");
  IntMatrix syzygies = kernel_basis(kgen);
  return cokernel_invariants(kgen.cols(), IntMatrix::hstack(*coords, syzygies));
}

}  // namespace zcohom
