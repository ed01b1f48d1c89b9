#ifndef SALLY_SERIES_HPP
#define SALLY_SERIES_HPP

#include <stdexcept>
#include <vector>

#include "sally/field.hpp"
#include "sally/linalg.hpp"
#include "sally/semigroup.hpp"

namespace sally {

// Truncated power series f = sum c_z t^z, 0 <= z <= B, with support inside the
// semigroup. Used for non-monomial principal reductions of k[[t^S]].
struct Series {
  std::vector<GF> c;  // index = exponent, size B+1

  long order() const {
    for (size_t z = 0; z < c.size(); ++z)
      if (!c[z].is_zero()) return static_cast<long>(z);
    return -1;  // zero series
  }
  bool is_zero() const { return order() < 0; }
};

inline Series series_monomial(const Semigroup& sg, long p, long v) {
  Series s;
  s.c.assign(sg->bound + 1, GF());
  s.c[v] = GF(1, p);
  return s;
}

// t^shift * f, truncated at the table bound
inline Series series_shift(const Series& f, long shift) {
  Series s;
  s.c.assign(f.c.size(), GF());
  for (size_t z = 0; z + shift < f.c.size(); ++z)
    if (!f.c[z].is_zero()) s.c[z + shift] = f.c[z];
  return s;
}

inline Series series_mul(const Series& a, const Series& b) {
  Series s;
  s.c.assign(a.c.size(), GF());
  for (size_t x = 0; x < a.c.size(); ++x) {
    if (a.c[x].is_zero()) continue;
    for (size_t y = 0; x + y < b.c.size(); ++y)
      if (!b.c[y].is_zero()) s.c[x + y] = s.c[x + y] + a.c[x] * b.c[y];
  }
  return s;
}

// R-submodule of k[[t^S]] spanned by the generators, stored as a row-echelon
// k-basis of its truncation to exponents <= B. `conductor` certifies that the
// module contains t^z for every z >= conductor (also beyond the table), which
// keeps colengths and comparisons on truncated data exact.
struct SeriesModule {
  Semigroup sg;
  long p = 0;
  std::vector<Series> gens;
  std::vector<std::vector<GF>> rows;  // reduced row echelon, full 0..B columns
  long conductor = 0;

  long rank() const { return static_cast<long>(rows.size()); }
};

namespace series_detail {

inline long s_dim(const Semigroup& sg) {
  long n = 0;
  for (long z = 0; z <= sg->bound; ++z)
    if (sg->contains(z)) ++n;
  return n;
}

// reduce v against reduced echelon rows in place; returns true if zeroed
inline bool reduce(std::vector<GF>& v, const std::vector<std::vector<GF>>& rows) {
  for (auto& r : rows) {
    size_t piv = 0;
    while (piv < r.size() && r[piv].is_zero()) ++piv;
    if (piv == r.size() || v[piv].is_zero()) continue;
    GF f = v[piv];
    for (size_t z = piv; z < v.size(); ++z) v[z] = v[z] - f * r[z];
  }
  for (auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace series_detail

inline SeriesModule series_module(Semigroup sg, long p, std::vector<Series> gens) {
  SeriesModule m;
  m.sg = std::move(sg);
  m.p = p;
  long B = m.sg->bound;
  long cond = B + 1;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    cond = std::min(cond, g.order() + m.sg->frobenius + 1);
    m.gens.push_back(g);
  }
  if (m.gens.empty()) throw std::invalid_argument("series module needs a nonzero generator");
  if (cond > B)
    throw std::runtime_error("series truncation bound too small: need " + std::to_string(cond));
  m.conductor = cond;

  std::vector<std::vector<GF>> mat;
  for (auto& g : m.gens) {
    long v = g.order();
    for (long s = 0; v + s <= B; ++s)
      if (m.sg->contains(s)) mat.push_back(series_shift(g, s).c);
  }
  // certified tail: pure powers from the conductor on
  for (long z = cond; z <= B; ++z) mat.push_back(series_monomial(m.sg, p, z).c);
  row_echelon(mat);
  m.rows = std::move(mat);
  return m;
}

// lambda(R/M)
inline long series_colength(const SeriesModule& m) {
  return series_detail::s_dim(m.sg) - m.rank();
}

inline bool series_contains(const SeriesModule& m, const Series& f) {
  std::vector<GF> v = f.c;
  return series_detail::reduce(v, m.rows);
}

inline bool series_module_equal(const SeriesModule& a, const SeriesModule& b) {
  return a.rows == b.rows;
}

// M * I for a monomial ideal I: shift every generator by I's valuations.
inline SeriesModule series_mul_monomial(const SeriesModule& m, const SemigroupIdeal& i) {
  std::vector<Series> gens;
  for (auto& g : m.gens)
    for (long v : i.valuation_gens) gens.push_back(series_shift(g, v));
  return series_module(m.sg, m.p, std::move(gens));
}

// lambda(R/(M : I)) for a monomial ideal I: linear conditions on the
// S-supported coefficient vector of a candidate g, one block per valuation.
inline long series_colon_colength(const SeriesModule& m, const SemigroupIdeal& i) {
  long B = m.sg->bound;
  std::vector<long> basis;  // exponents of the R-basis
  for (long z = 0; z <= B; ++z)
    if (m.sg->contains(z)) basis.push_back(z);

  // condition matrix: rows indexed by (valuation, residue exponent < conductor)
  std::vector<std::vector<GF>> cond;
  for (long v : i.valuation_gens) {
    std::vector<std::vector<GF>> resid(basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
      std::vector<GF> w = series_shift(series_monomial(m.sg, m.p, basis[j]), v).c;
      series_detail::reduce(w, m.rows);
      resid[j] = std::move(w);
    }
    for (long z = 0; z < m.conductor; ++z) {
      std::vector<GF> row(basis.size());
      bool nonzero = false;
      for (size_t j = 0; j < basis.size(); ++j) {
        row[j] = resid[j][z];
        if (!row[j].is_zero()) nonzero = true;
      }
      if (nonzero) cond.push_back(std::move(row));
    }
  }
  size_t rk = cond.empty() ? 0 : row_echelon(cond);
  long dim = static_cast<long>(basis.size() - rk);  // dim of (M : I) truncated
  return static_cast<long>(basis.size()) - dim;
}

// lambda(R/(M intersect I)) for a monomial ideal I: the intersection is the
// part of M supported inside val(I), so its dimension is rank(M) minus the
// rank of M's projection onto the complementary exponents.
inline long series_intersection_colength(const SeriesModule& m, const SemigroupIdeal& i) {
  long B = m.sg->bound;
  std::vector<long> outside;
  for (long z = 0; z <= B; ++z)
    if (m.sg->contains(z) && !i.val[z]) outside.push_back(z);
  std::vector<std::vector<GF>> proj;
  for (auto& r : m.rows) {
    std::vector<GF> row(outside.size());
    bool nonzero = false;
    for (size_t j = 0; j < outside.size(); ++j) {
      row[j] = r[outside[j]];
      if (!row[j].is_zero()) nonzero = true;
    }
    if (nonzero) proj.push_back(std::move(row));
  }
  size_t rk = proj.empty() ? 0 : row_echelon(proj);
  long dim = m.rank() - static_cast<long>(rk);
  return series_detail::s_dim(m.sg) - dim;
}

}  // namespace sally

#endif
