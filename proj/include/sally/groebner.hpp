#ifndef SALLY_GROEBNER_HPP
#define SALLY_GROEBNER_HPP

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "sally/polynomial.hpp"

namespace sally {

struct GBDegreeCapExceeded : std::runtime_error {
  unsigned degree;
  explicit GBDegreeCapExceeded(unsigned d)
      : std::runtime_error("Groebner degree cap exceeded at degree " + std::to_string(d) +
                           "; raise --bound-gb-degree or use the length-based check"),
        degree(d) {}
};

struct GBOptions {
  unsigned degree_cap = 40;  // hard abort threshold for untruncated runs
  // When set, the ideal is certified to contain m^truncation, every input is
  // homogeneous, and elements of degree >= truncation may be discarded: pairs
  // are processed in nondecreasing degree, so the basis below the bound is the
  // true reduced basis below the bound.
  std::optional<unsigned> truncation;
};

template <class F>
struct GroebnerBasis {
  Ring ring;
  std::vector<Polynomial<F>> elems;  // monic, sorted by leading monomial ascending
  std::optional<unsigned> truncation;

  bool contains_one() const {
    return !elems.empty() && elems.front().lt().m.is_one();
  }
};

// Full normal form: no term of the result is divisible by any leading
// term of the basis.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis) {
  Polynomial<F> rem(f.ring);
  Polynomial<F> work = f;
  while (!work.is_zero()) {
    const Term<F>& lt = work.lt();
    const Polynomial<F>* red = nullptr;
    for (auto& g : basis) {
      if (!g.is_zero() && divides(g.lt().m, lt.m)) { red = &g; break; }
    }
    if (red) {
      F s = -(lt.c / red->lt().c);
      work = add_scaled(work, s, quotient(lt.m, red->lt().m), *red);
    } else {
      rem.terms.push_back(lt);
      work.terms.erase(work.terms.begin());
    }
  }
  return rem;
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
  check_same_ring(f.ring, gb.ring);
  return normal_form(f, gb.elems);
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  check_same_ring(f.ring, g.ring);
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("s_polynomial of zero polynomial");
  Monomial l = lcm(f.lt().m, g.lt().m);
  Polynomial<F> a =
      add_scaled(poly_zero<F>(f.ring), f.lt().c.inv(), quotient(l, f.lt().m), f);
  return add_scaled(a, -g.lt().c.inv(), quotient(l, g.lt().m), g);
}

namespace detail {

struct Pair {
  unsigned i, j;
  Monomial l;  // lcm of leading monomials
};

template <class F>
struct PairCmp {
  const MonomialOrder* ord;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.l.deg != b.l.deg) return a.l.deg > b.l.deg;  // min-heap on degree
    int c = compare(a.l, b.l, *ord);
    if (c) return c > 0;
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
  }
};

}  // namespace detail

// Buchberger with the coprime and chain criteria, normal pair selection
// (smallest lcm first). Output is the unique reduced basis, deterministic.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& generators,
                            const GBOptions& opts = {}) {
  Ring ring;
  for (auto& g : generators)
    if (!g.is_zero()) { ring = g.ring; break; }
  GroebnerBasis<F> out;
  if (!ring) {  // the zero ideal
    out.ring = generators.empty() ? Ring() : generators.front().ring;
    out.truncation = opts.truncation;
    return out;
  }
  out.ring = ring;
  out.truncation = opts.truncation;

  std::vector<Polynomial<F>> basis;
  auto discard = [&](unsigned deg) {
    return opts.truncation && deg >= *opts.truncation;
  };

  std::priority_queue<detail::Pair, std::vector<detail::Pair>, detail::PairCmp<F>> pairs(
      detail::PairCmp<F>{&ring->order});

  auto add_elem = [&](Polynomial<F> p) {
    check_same_ring(ring, p.ring);
    clear_content(p);
    make_monic(p);
    unsigned idx = static_cast<unsigned>(basis.size());
    for (unsigned i = 0; i < idx; ++i) {
      if (basis[i].is_monomial() && p.is_monomial()) continue;  // S-pair is 0
      if (coprime(basis[i].lt().m, p.lt().m)) continue;
      Monomial l = lcm(basis[i].lt().m, p.lt().m);
      if (!discard(l.deg)) pairs.push({i, idx, std::move(l)});
    }
    basis.push_back(std::move(p));
  };

  // seed with the reduced generators, smallest leading term first for
  // deterministic indices
  std::vector<Polynomial<F>> gens;
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    check_same_ring(ring, g.ring);
    if (!opts.truncation || g.lt().m.deg < *opts.truncation) gens.push_back(g);
  }
  std::sort(gens.begin(), gens.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
    return compare(a.lt().m, b.lt().m, ring->order) < 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (auto& g : gens) {
    Polynomial<F> r = normal_form(g, basis);
    if (!r.is_zero() && !discard(r.lt().m.deg)) add_elem(std::move(r));
  }

  auto chain_eliminable = [&](const detail::Pair& pr) {
    // Buchberger's chain criterion: some k with lt(k) | lcm and both
    // (i,k), (k,j) lcms strictly smaller than lcm(i,j)
    for (unsigned k = 0; k < basis.size(); ++k) {
      if (k == pr.i || k == pr.j) continue;
      const Monomial& lk = basis[k].lt().m;
      if (!divides(lk, pr.l)) continue;
      if (lcm(lk, basis[pr.i].lt().m) != pr.l && lcm(lk, basis[pr.j].lt().m) != pr.l)
        return true;
    }
    return false;
  };

  while (!pairs.empty()) {
    detail::Pair pr = pairs.top();
    pairs.pop();
    if (discard(pr.l.deg)) continue;
    if (!opts.truncation && pr.l.deg > opts.degree_cap) throw GBDegreeCapExceeded(pr.l.deg);
    if (chain_eliminable(pr)) continue;
    Polynomial<F> s = s_polynomial(basis[pr.i], basis[pr.j]);
    Polynomial<F> r = normal_form(s, basis);
    if (r.is_zero()) continue;
    if (discard(r.lt().m.deg)) continue;
    if (!opts.truncation && r.lt().m.deg > opts.degree_cap)
      throw GBDegreeCapExceeded(r.lt().m.deg);
    add_elem(std::move(r));
  }

  // minimalize: drop elements whose leading term another leading term divides
  std::vector<char> keep(basis.size(), 1);
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (divides(basis[j].lt().m, basis[i].lt().m) &&
          (basis[j].lt().m != basis[i].lt().m || j < i)) {
        keep[i] = 0;
        break;
      }
    }
  }
  std::vector<Polynomial<F>> minimal;
  for (size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(basis[i]));

  // reduce tails
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<F>> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = normal_form(minimal[i], others);
    make_monic(minimal[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Polynomial<F>& a, const Polynomial<F>& b) {
              return compare(a.lt().m, b.lt().m, ring->order) < 0;
            });
  out.elems = std::move(minimal);
  return out;
}

template <class F>
bool in_ideal(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
  return normal_form(f, gb).is_zero();
}

}  // namespace sally

#endif
