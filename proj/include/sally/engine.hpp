#ifndef SALLY_ENGINE_HPP
#define SALLY_ENGINE_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sally/ideal.hpp"
#include "sally/semigroup.hpp"
#include "sally/series.hpp"

namespace sally {

// One sampled reduction J of I with every length the independence report
// tracks. Produced engine-side because the two back ends represent a sampled
// J differently (ideal of combinations vs. truncated power series).
struct SampleLengths {
  std::string description;
  long long reduction_number = 0;
  long long colen_J = 0;                // lambda(R/J)
  long long len_I_mod_J = 0;            // lambda(I/J)
  std::vector<long long> sally;         // lambda(I^n/J^{n-1}I), n = 2..nmax
  long long colen_J_colon_I = 0;        // lambda(R/(J:I))
  std::vector<long long> step;          // lambda(I^n/JI^{n-1}), n = 1..nmax
  std::vector<long long> inter;         // lambda(R/(J inter I^n)), n = 1..nmax
};

// ---------------------------------------------------------------------------
// Groebner back end: homogeneous ideals in a polynomial ring, any exact field.
template <class F>
struct PolyEngine {
  using Id = Ideal<F>;
  using Elem = Polynomial<F>;

  Ring ring;
  unsigned degree_cap = 40;

  explicit PolyEngine(Ring r, unsigned cap = 40) : ring(std::move(r)), degree_cap(cap) {}

  std::string name() const { return "groebner"; }
  unsigned dim() const { return static_cast<unsigned>(ring->nvars()); }
  bool ring_gorenstein() const { return true; }  // polynomial ring is regular

  Id unit() const { return Id::unit(ring); }
  Id ideal(std::vector<Elem> gens) const { return Id(ring, std::move(gens), {}, degree_cap); }
  Id maximal() const {
    std::vector<Elem> gens;
    for (size_t i = 0; i < ring->nvars(); ++i) gens.push_back(poly_var<F>(ring, i));
    return ideal(std::move(gens));
  }
  std::vector<Elem> gens(const Id& a) const { return a.gens(); }

  Id sum(const Id& a, const Id& b) const { return ideal_sum(a, b); }
  Id product(const Id& a, const Id& b) const { return ideal_product(a, b); }
  Id power(const Id& a, unsigned n) const { return ideal_power(a, n); }
  Id intersection(const Id& a, const Id& b) const { return ideal_intersection(a, b); }
  Id colon(const Id& a, const Id& b) const { return ideal_colon(a, b); }

  long long colength(const Id& a) const { return a.length(); }
  long long inter_colength(const Id& a, const Id& b) const {
    return intersection_length(a, b);
  }
  bool equal(const Id& a, const Id& b) const { return a.equals(b); }
  bool contains(const Id& a, const Id& b) const { return a.contains_ideal(b); }
  bool contains_elem(const Id& a, const Elem& f) const { return a.contains(f); }
  bool is_unit(const Id& a) const { return a.contains(poly_const<F>(ring, 1)); }

  Elem elem_mul(const Elem& x, const Elem& y) const { return x * y; }
  Elem elem_pow(const Elem& x, unsigned n) const {
    Elem r = poly_const<F>(ring, 1);
    for (unsigned i = 0; i < n; ++i) r = r * x;
    return r;
  }
  std::string elem_str(const Elem& x) const { return to_string(x); }

  bool nf_zero(const Elem& f, const Id& j) const { return contains_elem(j, f); }

  // scalar c with f = c*alpha modulo j; requires proportional normal forms
  std::string nf_ratio(const Elem& f, const Elem& alpha, const Id& j) const {
    Elem nf = normal_form(truncate(f, j), j.gb());
    Elem na = normal_form(truncate(alpha, j), j.gb());
    if (nf.is_zero()) return (F::from_int(0, ring->field)).str();
    if (na.is_zero() || nf.terms.size() != na.terms.size())
      throw std::logic_error("normal forms not proportional in a length-one module");
    F c = nf.lt().c / na.lt().c;
    for (size_t i = 0; i < nf.terms.size(); ++i)
      if (nf.terms[i].m != na.terms[i].m || nf.terms[i].c != c * na.terms[i].c)
        throw std::logic_error("normal forms not proportional in a length-one module");
    return c.str();
  }

  // classes in (I + K)/K spanning it, as elements of I: multiply generators of
  // I by standard monomials of K and select a maximal independent family
  std::vector<Elem> v_basis(const Id& i, const Id& k) const {
    long long want = colength(k) - colength(sum(i, k));
    std::vector<Elem> basis;
    if (want == 0) return basis;
    unsigned bound = k.artinian_bound();
    const auto& gb = k.gb();
    std::map<std::vector<uint16_t>, size_t> coord;
    std::vector<std::vector<std::pair<size_t, F>>> picked;
    auto try_add = [&](const Elem& cand) {
      Elem nf = normal_form(truncate(cand, k), gb);
      if (nf.is_zero()) return false;
      std::vector<std::pair<size_t, F>> vec;
      for (auto& t : nf.terms) {
        auto it = coord.emplace(t.m.e, coord.size()).first;
        vec.push_back({it->second, t.c});
      }
      std::vector<std::vector<F>> mat;
      size_t ncols = coord.size();
      const F one = F::from_int(1, ring->field);
      const F zero = one - one;
      for (auto& pv : picked) {
        std::vector<F> row(ncols, zero);
        for (auto& [c, v] : pv) row[c] = v;
        mat.push_back(std::move(row));
      }
      std::vector<F> row(ncols, zero);
      for (auto& [c, v] : vec) row[c] = v;
      mat.push_back(std::move(row));
      if (matrix_rank(std::move(mat)) != picked.size() + 1) return false;
      picked.push_back(std::move(vec));
      basis.push_back(cand);
      return true;
    };
    for (unsigned extra = 0; extra < bound && basis.size() < static_cast<size_t>(want);
         ++extra) {
      std::vector<Monomial> mons = k.standard_monomials(extra);
      for (auto& g : i.gens()) {
        for (auto& m : mons) {
          Elem cand(ring);
          cand.terms.push_back({m, F::from_int(1, ring->field)});
          cand = cand * g;
          try_add(cand);
          if (basis.size() == static_cast<size_t>(want)) break;
        }
        if (basis.size() == static_cast<size_t>(want)) break;
      }
    }
    if (basis.size() != static_cast<size_t>(want))
      throw std::logic_error("failed to span (I + K)/K from generator multiples");
    return basis;
  }

  std::vector<Elem> min_degree_gens(const Id& i) const {
    unsigned d = 0;
    bool first = true;
    for (auto& g : i.gens()) {
      if (first || g.degree() < d) { d = g.degree(); first = false; }
    }
    std::vector<Elem> out;
    for (auto& g : i.gens())
      if (g.degree() == d) out.push_back(g);
    return out;
  }

  // candidate minimal reduction: dim() random combinations of the minimal
  // degree generators (unverified)
  Id random_reduction_candidate(const Id& i, std::mt19937_64& rng) const {
    auto mg = min_degree_gens(i);
    std::vector<Elem> combos;
    for (unsigned k = 0; k < dim(); ++k) {
      Elem f = poly_zero<F>(ring);
      for (auto& g : mg) {
        long c = static_cast<long>(rng() % 997);
        f = f + scale(g, F::from_int(c, ring->field));
      }
      if (!f.is_zero()) combos.push_back(f);
    }
    return ideal(std::move(combos));
  }

 private:
  // drop terms at or above the certified truncation bound of j's basis; they
  // lie in the ideal, so normal forms stay correct for ratio comparisons
  Elem truncate(const Elem& f, const Id& j) const {
    auto trunc = j.gb().truncation;
    if (!trunc) return f;
    std::vector<Term<F>> kept;
    for (auto& t : f.terms)
      if (t.m.deg < *trunc) kept.push_back(t);
    return make_poly(ring, std::move(kept));
  }
};

// ---------------------------------------------------------------------------
// Numerical semigroup back end: monomial ideals of k[[t^S]] as valuation sets.
// Sampling of non-monomial reductions runs over GF(p) truncated power series.
struct SgEngine {
  using Id = SemigroupIdeal;
  using Elem = long;  // a valuation

  Semigroup sg;
  long p = 32003;

  explicit SgEngine(Semigroup s, long prime = 32003) : sg(std::move(s)), p(prime) {}

  std::string name() const { return "semigroup"; }
  unsigned dim() const { return 1; }
  bool ring_gorenstein() const { return sg_is_symmetric(sg); }

  Id unit() const { return sg_unit_ideal(sg); }
  Id ideal(std::vector<Elem> vals) const { return sg_ideal(sg, std::move(vals)); }
  Id maximal() const { return sg_maximal_ideal(sg); }
  std::vector<Elem> gens(const Id& a) const { return a.valuation_gens; }

  Id sum(const Id& a, const Id& b) const { return sg_ideal_ops(a, b, SgOp::Sum); }
  Id product(const Id& a, const Id& b) const { return sg_ideal_ops(a, b, SgOp::Product); }
  Id power(const Id& a, unsigned n) const { return sg_power(a, n); }
  Id intersection(const Id& a, const Id& b) const {
    return sg_ideal_ops(a, b, SgOp::Intersection);
  }
  Id colon(const Id& a, const Id& b) const { return sg_ideal_ops(a, b, SgOp::Colon); }

  long long colength(const Id& a) const { return sg_colength(a); }
  long long inter_colength(const Id& a, const Id& b) const {
    return colength(a) + colength(b) - colength(sum(a, b));
  }
  bool equal(const Id& a, const Id& b) const { return a.equals(b); }
  bool contains(const Id& a, const Id& b) const { return a.contains_ideal(b); }
  bool contains_elem(const Id& a, Elem v) const { return a.contains(v); }
  bool is_unit(const Id& a) const { return a.is_unit(); }

  Elem elem_mul(Elem x, Elem y) const { return x + y; }
  Elem elem_pow(Elem x, unsigned n) const { return x * static_cast<long>(n); }
  std::string elem_str(Elem x) const { return "t^" + std::to_string(x); }

  bool nf_zero(Elem v, const Id& j) const { return j.contains(v); }

  std::string nf_ratio(Elem v, Elem alpha, const Id& j) const {
    if (j.contains(v)) return "0";
    if (v == alpha) return "1";
    throw std::logic_error("distinct valuations outside J in a length-one module");
  }

  std::vector<Elem> v_basis(const Id& i, const Id& k) const {
    std::vector<Elem> out;
    for (long z = 0; z <= sg->bound && z < k.conductor; ++z)
      if (i.val[z] && !k.val[z]) out.push_back(z);
    return out;
  }

  std::vector<Elem> min_degree_gens(const Id& i) const { return i.valuation_gens; }
};

// Engine-side sampled-reduction lengths. Returns nothing when the candidate
// fails to be a reduction within `bound` powers.
template <class F>
std::optional<SampleLengths> sampled_lengths(const PolyEngine<F>& e,
                                             const typename PolyEngine<F>::Id& i,
                                             std::mt19937_64& rng, unsigned nmax,
                                             unsigned bound) {
  auto j = e.random_reduction_candidate(i, rng);
  if (j.gens().size() < e.dim()) return std::nullopt;
  SampleLengths out;
  out.description = "(";
  for (size_t k = 0; k < j.gens().size(); ++k)
    out.description += (k ? ", " : "") + e.elem_str(j.gens()[k]);
  out.description += ")";
  try {
    long long r = -1;
    for (unsigned n = 0; n <= bound; ++n) {
      if (e.colength(e.product(j, e.power(i, n))) == e.colength(e.power(i, n + 1))) {
        r = n;
        break;
      }
    }
    if (r < 0) return std::nullopt;
    out.reduction_number = r;
    out.colen_J = e.colength(j);
    out.len_I_mod_J = out.colen_J - e.colength(i);
    out.colen_J_colon_I = e.colength(e.colon(j, i));
    for (unsigned n = 1; n <= nmax; ++n) {
      auto in = e.power(i, n);
      long long ci = e.colength(in);
      if (n >= 2)
        out.sally.push_back(e.colength(e.product(e.power(j, n - 1), i)) - ci);
      out.step.push_back(e.colength(e.product(j, e.power(i, n - 1))) - ci);
      out.inter.push_back(e.inter_colength(j, in));
    }
  } catch (const NotArtinian&) {
    return std::nullopt;
  } catch (const GBDegreeCapExceeded&) {
    return std::nullopt;
  }
  return out;
}

inline std::optional<SampleLengths> sampled_lengths(const SgEngine& e, const SemigroupIdeal& i,
                                                    std::mt19937_64& rng, unsigned nmax,
                                                    unsigned bound) {
  // principal reduction (f), f a random combination of the generator monomials
  // with invertible lowest coefficient
  auto vals = i.valuation_gens;
  Series f;
  f.c.assign(e.sg->bound + 1, GF());
  SampleLengths out;
  out.description = "(";
  for (size_t k = 0; k < vals.size(); ++k) {
    long c = 1 + static_cast<long>(rng() % (e.p - 1));
    f.c[vals[k]] = f.c[vals[k]] + GF(c, e.p);
    out.description += (k ? " + " : "") + std::to_string(c) + "*t^" + std::to_string(vals[k]);
  }
  out.description += ")";
  if (f.is_zero() || f.order() != vals.front()) return std::nullopt;

  auto J = series_module(e.sg, e.p, {f});
  auto module_of = [&](const Series& g, const SemigroupIdeal& mono) {
    std::vector<Series> gens;
    for (long v : mono.valuation_gens) gens.push_back(series_shift(g, v));
    return series_module(e.sg, e.p, std::move(gens));
  };
  try {
    long long r = -1;
    for (unsigned n = 0; n <= bound; ++n) {
      const SemigroupIdeal in = e.power(i, n);
      long long lhs = series_colength(module_of(f, in));
      if (lhs == e.colength(e.power(i, n + 1))) { r = n; break; }
    }
    if (r < 0) return std::nullopt;
    out.reduction_number = r;
    out.colen_J = series_colength(J);
    out.len_I_mod_J = out.colen_J - e.colength(i);
    out.colen_J_colon_I = series_colon_colength(J, i);
    Series fpow = series_monomial(e.sg, e.p, 0);  // f^0 = 1
    for (unsigned n = 1; n <= nmax; ++n) {
      auto in = e.power(i, n);
      long long ci = e.colength(in);
      if (n >= 2) {
        Series fn1 = series_mul(fpow, f);  // f^{n-1}
        // defer: fpow updated below; here fpow = f^{n-2} before update
        out.sally.push_back(series_colength(module_of(fn1, i)) - ci);
      }
      out.step.push_back(series_colength(module_of(f, e.power(i, n - 1))) - ci);
      out.inter.push_back(series_intersection_colength(J, in));
      if (n >= 2) fpow = series_mul(fpow, f);
    }
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
  return out;
}

}  // namespace sally

#endif
