#ifndef SALLY_SEMIGROUP_HPP
#define SALLY_SEMIGROUP_HPP

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace sally {

// Numerical semigroup S = <a1,...,ak> with gcd 1, modelling the local ring
// k[[t^{a1},...,t^{ak}]]. Membership is a boolean table up to a truncation
// bound B chosen so every set in play is provably full beyond B.
struct NumericalSemigroup {
  std::vector<long> generators;   // as given, deduplicated, ascending
  long frobenius = -1;            // largest integer not in S; -1 when S = N
  long bound = 0;                 // B: table covers 0..B inclusive
  std::vector<char> member;       // member[z] for 0 <= z <= B

  bool contains(long z) const {
    if (z < 0) return false;
    if (z > frobenius) return true;
    return member[z] != 0;
  }
  long multiplicity() const { return generators.front(); }
  std::vector<long> gaps() const {
    std::vector<long> g;
    for (long z = 1; z <= frobenius; ++z)
      if (!member[z]) g.push_back(z);
    return g;
  }
  // generators not expressible as a sum of two nonzero elements of S
  std::vector<long> minimal_generators() const {
    std::vector<long> out;
    for (long g : generators) {
      bool sum = false;
      for (long x = 1; x < g && !sum; ++x)
        if (contains(x) && contains(g - x)) sum = true;
      if (!sum) out.push_back(g);
    }
    return out;
  }
  long embedding_dimension() const {
    return static_cast<long>(minimal_generators().size());
  }
  // number of pseudo-Frobenius elements: gaps z with z + s in S for all
  // nonzero s in S (Cohen-Macaulay type of the ring)
  long type() const {
    if (frobenius < 0) return 1;  // regular
    long t = 0;
    for (long z = 1; z <= frobenius; ++z) {
      if (member[z]) continue;
      bool pf = true;
      for (long g : generators)
        if (!contains(z + g)) { pf = false; break; }
      if (pf) ++t;
    }
    return t;
  }
};

using Semigroup = std::shared_ptr<const NumericalSemigroup>;

// n_max: the largest ideal power the analysis will touch; sizes the table.
inline Semigroup sg_closure(std::vector<long> generators, long n_max = 8) {
  if (generators.empty()) throw std::invalid_argument("semigroup needs generators");
  for (long g : generators)
    if (g <= 0) throw std::invalid_argument("semigroup generators must be positive");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  long g = 0;
  for (long a : generators) g = std::gcd(g, a);
  if (g != 1)
    throw std::invalid_argument(
        "semigroup generators have gcd " + std::to_string(g) +
        " != 1; the ring k[[t^S]] would not have the intended form");

  auto s = std::make_shared<NumericalSemigroup>();
  s->generators = generators;
  long maxg = generators.back();
  long ming = generators.front();

  // first pass: table large enough to pin the Frobenius number
  long probe = ming * maxg + maxg + 1;
  std::vector<char> tab(probe + 1, 0);
  tab[0] = 1;
  for (long z = 1; z <= probe; ++z)
    for (long a : generators)
      if (z >= a && tab[z - a]) { tab[z] = 1; break; }
  s->frobenius = -1;
  for (long z = probe; z >= 1; --z)
    if (!tab[z]) { s->frobenius = z; break; }

  s->bound = s->frobenius + (n_max + 2) * maxg + 1;
  s->member.assign(s->bound + 1, 0);
  s->member[0] = 1;
  for (long z = 1; z <= s->bound; ++z)
    for (long a : generators)
      if (z >= a && s->member[z - a]) { s->member[z] = 1; break; }
  return s;
}

// Monomial (S-graded) ideal of k[[t^S]] as its valuation set val = gens + S.
// `conductor` certifies the tail: every integer >= conductor lies in val,
// which keeps equality and length checks on truncated tables exact.
struct SemigroupIdeal {
  Semigroup sg;
  std::vector<long> valuation_gens;
  std::vector<char> val;  // val[z] for 0 <= z <= sg->bound
  long conductor = 0;

  bool contains(long z) const {
    if (z >= conductor) return true;
    return z >= 0 && z <= sg->bound && val[z];
  }
  bool contains_ideal(const SemigroupIdeal& o) const {
    for (long z = 0; z <= sg->bound; ++z)
      if (o.val[z] && !val[z]) return false;
    return true;
  }
  bool equals(const SemigroupIdeal& o) const { return val == o.val; }
  bool is_unit() const { return val[0] != 0; }
};

namespace sg_detail {

inline void check_conductor(long conductor, long bound) {
  if (conductor > bound)
    throw std::runtime_error("semigroup truncation bound " + std::to_string(bound) +
                             " too small: tail undetermined, need at least " +
                             std::to_string(conductor) + "; raise n_max");
}

inline void check_same(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  if (a.sg != b.sg)
    throw std::invalid_argument("semigroup ideals live over different semigroups");
}

}  // namespace sg_detail

inline SemigroupIdeal sg_ideal(Semigroup sg, std::vector<long> valuation_gens) {
  for (long v : valuation_gens)
    if (v < 0 || !sg->contains(v))
      throw std::invalid_argument("valuation " + std::to_string(v) +
                                  " is not an element of the semigroup");
  if (valuation_gens.empty())
    throw std::invalid_argument("semigroup ideal needs at least one valuation");
  std::sort(valuation_gens.begin(), valuation_gens.end());
  valuation_gens.erase(std::unique(valuation_gens.begin(), valuation_gens.end()),
                       valuation_gens.end());
  SemigroupIdeal i;
  i.sg = std::move(sg);
  i.valuation_gens = valuation_gens;
  i.conductor = valuation_gens.front() + i.sg->frobenius + 1;
  sg_detail::check_conductor(i.conductor, i.sg->bound);
  i.val.assign(i.sg->bound + 1, 0);
  for (long g : valuation_gens)
    for (long z = g; z <= i.sg->bound; ++z)
      if (i.sg->contains(z - g)) i.val[z] = 1;
  return i;
}

inline SemigroupIdeal sg_unit_ideal(Semigroup sg) { return sg_ideal(std::move(sg), {0}); }

inline SemigroupIdeal sg_maximal_ideal(Semigroup sg) {
  std::vector<long> gens = sg->generators;
  return sg_ideal(std::move(sg), std::move(gens));
}

enum class SgOp { Sum, Product, Intersection, Colon };

inline SemigroupIdeal sg_ideal_ops(const SemigroupIdeal& a, const SemigroupIdeal& b,
                                   SgOp op) {
  sg_detail::check_same(a, b);
  const long B = a.sg->bound;
  SemigroupIdeal r;
  r.sg = a.sg;
  r.val.assign(B + 1, 0);
  switch (op) {
    case SgOp::Sum:
      for (long z = 0; z <= B; ++z) r.val[z] = a.val[z] || b.val[z];
      r.conductor = std::min(a.conductor, b.conductor);
      r.valuation_gens = a.valuation_gens;
      r.valuation_gens.insert(r.valuation_gens.end(), b.valuation_gens.begin(),
                              b.valuation_gens.end());
      break;
    case SgOp::Product: {
      // z >= c_a + min val(b) splits as (z - w0) + w0 with z - w0 >= c_a
      long a0 = *std::min_element(a.valuation_gens.begin(), a.valuation_gens.end());
      long b0 = *std::min_element(b.valuation_gens.begin(), b.valuation_gens.end());
      r.conductor = std::min(a.conductor + b0, b.conductor + a0);
    }
      sg_detail::check_conductor(r.conductor, B);
      for (long x = 0; x <= B; ++x) {
        if (!a.val[x]) continue;
        for (long y = 0; x + y <= B; ++y)
          if (b.val[y]) r.val[x + y] = 1;
      }
      for (long x : a.valuation_gens)
        for (long y : b.valuation_gens)
          if (x + y <= B) r.valuation_gens.push_back(x + y);
      break;
    case SgOp::Intersection:
      for (long z = 0; z <= B; ++z) r.val[z] = a.val[z] && b.val[z];
      r.conductor = std::max(a.conductor, b.conductor);
      break;
    case SgOp::Colon:
      // {v in S : v + w in val(a) for every w in val(b)}; membership is
      // decided exactly because a is full from its conductor on
      r.conductor = std::max(a.conductor, a.sg->frobenius + 1);
      sg_detail::check_conductor(r.conductor, B);
      for (long v = 0; v <= B; ++v) {
        if (!a.sg->contains(v)) continue;
        bool ok = true;
        for (long w = 0; w <= B && ok; ++w) {
          if (!b.val[w]) continue;
          if (v + w < a.conductor && !a.contains(v + w)) ok = false;
        }
        if (ok) r.val[v] = 1;
      }
      break;
  }
  if (op != SgOp::Product) {
    // recover a generating set: values not reachable from a smaller value
    for (long z = 0; z <= B; ++z) {
      if (!r.val[z]) continue;
      bool reach = false;
      for (long g : a.sg->generators)
        if (z >= g && r.val[z - g]) { reach = true; break; }
      if (!reach) r.valuation_gens.push_back(z);
    }
  }
  std::sort(r.valuation_gens.begin(), r.valuation_gens.end());
  r.valuation_gens.erase(std::unique(r.valuation_gens.begin(), r.valuation_gens.end()),
                         r.valuation_gens.end());
  return r;
}

inline SemigroupIdeal sg_power(const SemigroupIdeal& a, unsigned n) {
  SemigroupIdeal r = sg_unit_ideal(a.sg);
  for (unsigned k = 0; k < n; ++k) r = sg_ideal_ops(r, a, SgOp::Product);
  return r;
}

// lambda(a/b) for b contained in a: the count of valuations in a but not b.
inline long sg_length(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  sg_detail::check_same(a, b);
  long n = 0;
  for (long z = 0; z <= a.sg->bound; ++z) {
    if (b.val[z] && !a.val[z])
      throw std::invalid_argument("sg_length: submodule not contained (valuation " +
                                  std::to_string(z) + ")");
    if (a.val[z] && !b.val[z]) ++n;
  }
  return n;
}

// lambda(R/a)
inline long sg_colength(const SemigroupIdeal& a) {
  return sg_length(sg_unit_ideal(a.sg), a);
}

// z in S  <=>  frobenius - z not in S  (Gorenstein criterion for k[[t^S]])
inline bool sg_is_symmetric(const Semigroup& s) {
  if (s->frobenius < 0) return true;
  for (long z = 0; z <= s->frobenius; ++z)
    if (s->contains(z) == s->contains(s->frobenius - z)) return false;
  return true;
}

// embedding dimension = e + d - n with d = 1, and m^n not inside J = (t^e)
inline bool sg_is_stretched(const Semigroup& s, long n) {
  long e = s->multiplicity();
  if (s->embedding_dimension() != e + 1 - n) return false;
  SemigroupIdeal mn = sg_power(sg_maximal_ideal(s), static_cast<unsigned>(n));
  SemigroupIdeal j = sg_ideal(s, {e});
  return !j.contains_ideal(mn);
}

}  // namespace sally

#endif
