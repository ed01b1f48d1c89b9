#ifndef SALLY_IDEAL_HPP
#define SALLY_IDEAL_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "sally/groebner.hpp"
#include "sally/hilbert.hpp"
#include "sally/linalg.hpp"
#include "sally/polynomial.hpp"

namespace sally {

struct ContainmentError : std::runtime_error {
  explicit ContainmentError(const std::string& msg) : std::runtime_error(msg) {}
};

template <class F>
std::vector<Polynomial<F>> homogeneous_components(const Polynomial<F>& f) {
  std::map<unsigned, Polynomial<F>> by_deg;
  for (auto& t : f.terms) {
    auto it = by_deg.find(t.m.deg);
    if (it == by_deg.end()) it = by_deg.emplace(t.m.deg, Polynomial<F>(f.ring)).first;
    it->second.terms.push_back(t);
  }
  std::vector<Polynomial<F>> out;
  for (auto& [d, p] : by_deg) out.push_back(std::move(p));
  return out;
}

// Homogeneous ideal with a lazily computed reduced Groebner basis.
// Copies share state, so the one-shot GB cache fills exactly once per ideal.
template <class F>
class Ideal {
 public:
  Ideal() = default;

  // mbound: certified degree b with m^b contained in the ideal; enables sound
  // degree-truncated Groebner runs along power/product chains.
  Ideal(Ring ring, std::vector<Polynomial<F>> gens, std::optional<unsigned> mbound = {},
        unsigned degree_cap = 40)
      : impl_(std::make_shared<Impl>()) {
    impl_->ring = std::move(ring);
    impl_->degree_cap = degree_cap;
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      check_same_ring(impl_->ring, g.ring);
      if (!is_homogeneous(g))
        throw std::invalid_argument("non-homogeneous generator rejected: " + to_string(g) +
                                    " (graded convention: all input ideals are homogeneous)");
      impl_->gens.push_back(std::move(g));
    }
    for (auto& g : impl_->gens)
      if (g.degree() == 0) { impl_->mbound = 0; break; }  // unit ideal
    if (mbound && !impl_->mbound) impl_->mbound = mbound;
    prune(impl_->gens);
  }

  static Ideal unit(Ring ring) {
    Ideal i(std::move(ring), {});
    i.impl_->mbound = 0;
    return i;
  }

  bool valid() const { return impl_ != nullptr; }
  const Ring& ring() const { return impl_->ring; }
  const std::vector<Polynomial<F>>& gens() const { return impl_->gens; }
  unsigned degree_cap() const { return impl_->degree_cap; }
  std::optional<unsigned> mbound() const {
    std::lock_guard<std::mutex> lk(impl_->mu);
    return impl_->mbound;
  }

  bool is_unit_marker() const {
    auto mb = mbound();
    return mb && *mb == 0;
  }

  bool is_zero_ideal() const { return impl_->gens.empty() && !is_unit_marker(); }

  const GroebnerBasis<F>& gb() const {
    std::lock_guard<std::mutex> lk(impl_->mu);
    if (!impl_->gb) {
      GBOptions opts;
      opts.degree_cap = impl_->degree_cap;
      if (impl_->mbound && *impl_->mbound > 0) opts.truncation = impl_->mbound;
      std::vector<Polynomial<F>> gens = impl_->gens;
      if (impl_->mbound && *impl_->mbound == 0)
        gens.push_back(poly_const<F>(impl_->ring, 1));
      auto basis = buchberger(gens, opts);
      if (!basis.ring) basis.ring = impl_->ring;
      impl_->gb = std::make_shared<GroebnerBasis<F>>(std::move(basis));
    }
    return *impl_->gb;
  }

  std::vector<Monomial> lead_terms() const {
    std::vector<Monomial> lt;
    for (auto& g : gb().elems) lt.push_back(g.lt().m);
    return lt;
  }

  // λ(R/I); throws NotArtinian when the quotient has infinite length.
  long long length() const {
    gb();  // fill the cache before taking the lock
    std::lock_guard<std::mutex> lk(impl_->mu);
    if (!impl_->length) {
      if (impl_->gb->contains_one()) {
        impl_->length = 0;
        impl_->mbound = 0;
      } else {
        std::vector<Monomial> lt;
        for (auto& g : impl_->gb->elems) lt.push_back(g.lt().m);
        impl_->length = count_standard_monomials(lt, impl_->ring->nvars(),
                                                 impl_->gb->truncation, &impl_->ring->vars);
        unsigned limit =
            impl_->gb->truncation ? *impl_->gb->truncation : untruncated_limit(lt);
        long long top = top_standard_degree(lt, impl_->ring->nvars(), limit);
        unsigned tight = static_cast<unsigned>(top + 1);
        if (!impl_->mbound || tight < *impl_->mbound) impl_->mbound = tight;
      }
    }
    return *impl_->length;
  }

  // Membership is exact even with a truncated basis: residue terms of degree
  // at or above the certified bound lie in m^bound and hence in the ideal.
  bool contains(const Polynomial<F>& f) const {
    check_same_ring(impl_->ring, f.ring);
    if (is_unit_marker()) return true;
    Polynomial<F> nf = normal_form(f, gb());
    if (nf.is_zero()) return true;
    auto trunc = gb().truncation;
    if (!trunc) return false;
    for (auto& t : nf.terms)
      if (t.m.deg < *trunc) return false;
    return true;
  }

  bool contains_ideal(const Ideal& other) const {
    if (other.is_unit_marker()) return contains(poly_const<F>(impl_->ring, 1));
    for (auto& g : other.gens())
      if (!contains(g)) return false;
    return true;
  }

  std::optional<Polynomial<F>> containment_witness(const Ideal& other) const {
    for (auto& g : other.gens())
      if (!contains(g)) return g;
    return std::nullopt;
  }

  bool equals(const Ideal& other) const {
    check_same_ring(impl_->ring, other.impl_->ring);
    const auto& ga = gb();
    const auto& gob = other.gb();
    if (ga.truncation == gob.truncation) {
      if (ga.elems.size() != gob.elems.size()) return false;
      for (size_t i = 0; i < ga.elems.size(); ++i)
        if (ga.elems[i] != gob.elems[i]) return false;
      return true;
    }
    return contains_ideal(other) && other.contains_ideal(*this);
  }

  // Least b with m^b inside the ideal (computed, not just certified).
  unsigned artinian_bound() const {
    length();
    return *mbound();
  }

  // Standard monomials of a fixed degree, ascending in the ring order.
  std::vector<Monomial> standard_monomials(unsigned deg) const {
    std::vector<Monomial> lt = lead_terms();
    std::vector<Monomial> out;
    Monomial m(impl_->ring->nvars());
    enum_rec(m, 0, deg, lt, out);
    std::sort(out.begin(), out.end(), [&](const Monomial& x, const Monomial& y) {
      return compare(x, y, impl_->ring->order) < 0;
    });
    return out;
  }

  bool same_impl(const Ideal& o) const { return impl_ == o.impl_; }

 private:
  struct Impl {
    Ring ring;
    std::vector<Polynomial<F>> gens;
    unsigned degree_cap = 40;
    mutable std::mutex mu;
    std::shared_ptr<GroebnerBasis<F>> gb;
    std::optional<unsigned> mbound;
    std::optional<long long> length;
  };

  void enum_rec(Monomial& m, size_t var, unsigned left, const std::vector<Monomial>& lt,
                std::vector<Monomial>& out) const {
    if (var + 1 == m.e.size()) {
      m.e[var] = static_cast<uint16_t>(left);
      m.deg += left;
      bool standard = true;
      for (auto& l : lt)
        if (divides(l, m)) { standard = false; break; }
      if (standard) out.push_back(m);
      m.deg -= left;
      m.e[var] = 0;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m.e[var] = static_cast<uint16_t>(e);
      m.deg += e;
      enum_rec(m, var + 1, left - e, lt, out);
      m.deg -= e;
      m.e[var] = 0;
    }
  }

  unsigned untruncated_limit(const std::vector<Monomial>& lt) const {
    auto pure = pure_power_degrees(lt, impl_->ring->nvars());
    unsigned limit = 1;
    for (auto p : pure) limit += p ? p - 1 : 0;
    return limit;
  }

  // Drop duplicates and generators all of whose terms a monomial generator
  // divides.
  static void prune(std::vector<Polynomial<F>>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Polynomial<F>& a, const Polynomial<F>& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return a.terms.size() < b.terms.size();
    });
    std::vector<Polynomial<F>> out;
    std::vector<Monomial> monos;
    for (auto& g : gens) {
      bool redundant = false;
      for (auto& m : monos) {
        bool all = true;
        for (auto& t : g.terms)
          if (!divides(m, t.m)) { all = false; break; }
        if (all) { redundant = true; break; }
      }
      if (redundant) continue;
      bool dup = false;
      for (auto& h : out)
        if (h == g) { dup = true; break; }
      if (dup) continue;
      out.push_back(g);
      if (out.back().is_monomial()) monos.push_back(out.back().lt().m);
    }
    gens = std::move(out);
  }

  std::shared_ptr<Impl> impl_;
};

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  check_same_ring(a.ring(), b.ring());
  if (a.is_unit_marker() || b.is_unit_marker()) return Ideal<F>::unit(a.ring());
  std::vector<Polynomial<F>> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  std::optional<unsigned> mb = a.mbound();
  if (b.mbound() && (!mb || *b.mbound() < *mb)) mb = b.mbound();
  return Ideal<F>(a.ring(), std::move(gens), mb, a.degree_cap());
}

template <class F>
Ideal<F> ideal_product(const Ideal<F>& a, const Ideal<F>& b) {
  check_same_ring(a.ring(), b.ring());
  if (a.is_unit_marker()) return b;
  if (b.is_unit_marker()) return a;
  std::vector<Polynomial<F>> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (auto& ga : a.gens())
    for (auto& gb : b.gens()) gens.push_back(ga * gb);
  std::optional<unsigned> mb;
  if (a.mbound() && b.mbound()) mb = *a.mbound() + *b.mbound();
  return Ideal<F>(a.ring(), std::move(gens), mb, a.degree_cap());
}

// a^n by iterated products; each step multiplies the previous power's
// reduced basis (an already pruned generating set) by the base generators.
template <class F>
Ideal<F> ideal_power(const Ideal<F>& a, unsigned n) {
  if (n == 0) return Ideal<F>::unit(a.ring());
  Ideal<F> acc = a;
  for (unsigned k = 2; k <= n; ++k) {
    std::vector<Polynomial<F>> gens = acc.gb().elems;
    if (auto trunc = acc.gb().truncation) {
      // A truncated basis only generates the ideal below the certified bound;
      // the ideal also holds every monomial at the bound, so add the ones not
      // already under a computed leading term to recover a full generating set.
      unsigned t = std::min(*acc.mbound(), *trunc);
      const F one = F::from_int(1, acc.ring()->field);
      for (auto& m : acc.standard_monomials(t)) {
        Polynomial<F> p(acc.ring());
        p.terms.push_back({m, one});
        gens.push_back(std::move(p));
      }
    }
    Ideal<F> pruned(acc.ring(), std::move(gens), acc.mbound(), acc.degree_cap());
    acc = ideal_product(pruned, a);
  }
  return acc;
}

// Contraction to the subring omitting drop_vars, via a block elimination
// order with the dropped variables in the leading block.
template <class F>
std::vector<Polynomial<F>> eliminate(const std::vector<Polynomial<F>>& gens,
                                     const std::set<size_t>& drop_vars,
                                     unsigned degree_cap = 40) {
  if (gens.empty()) return {};
  Ring ring = gens.front().ring;
  size_t n = ring->nvars();
  if (drop_vars.empty()) {
    auto basis = buchberger(gens, GBOptions{degree_cap, {}});
    return basis.elems;
  }
  for (auto v : drop_vars)
    if (v >= n) throw std::invalid_argument("eliminate: variable index out of range");

  std::vector<size_t> perm;  // position in permuted ring -> original index
  for (auto v : drop_vars) perm.push_back(v);
  for (size_t i = 0; i < n; ++i)
    if (!drop_vars.count(i)) perm.push_back(i);

  std::vector<std::string> pvars;
  for (auto i : perm) pvars.push_back(ring->vars[i]);
  MonomialOrder ord{OrderKind::BlockElimination, static_cast<unsigned>(drop_vars.size())};
  Ring pring = std::make_shared<RingSpec>(pvars, ring->field, ord);

  std::vector<Polynomial<F>> pgens;
  for (auto& g : gens) {
    std::vector<Term<F>> ts;
    for (auto& t : g.terms) {
      Monomial m(n);
      for (size_t i = 0; i < n; ++i) m.e[i] = t.m.e[perm[i]];
      m.deg = t.m.deg;
      ts.push_back({std::move(m), t.c});
    }
    pgens.push_back(make_poly(pring, std::move(ts)));
  }
  auto basis = buchberger(pgens, GBOptions{degree_cap, {}});

  std::vector<std::string> kvars;
  for (size_t i = 0; i < n; ++i)
    if (!drop_vars.count(i)) kvars.push_back(ring->vars[i]);
  Ring kring = std::make_shared<RingSpec>(kvars, ring->field, ring->order);

  size_t k = drop_vars.size();
  std::vector<Polynomial<F>> out;
  for (auto& g : basis.elems) {
    bool free_of_block = true;
    for (auto& t : g.terms)
      for (size_t i = 0; i < k && free_of_block; ++i)
        if (t.m.e[i]) free_of_block = false;
    if (!free_of_block) continue;
    std::vector<Term<F>> ts;
    for (auto& t : g.terms) {
      Monomial m(kvars.size());
      for (size_t i = 0; i < kvars.size(); ++i) m.e[i] = t.m.e[k + i];
      m.deg = t.m.deg;
      ts.push_back({std::move(m), t.c});
    }
    out.push_back(make_poly(kring, std::move(ts)));
  }
  return out;
}

// a ∩ b by the tag-variable trick: eliminate t from t·a + (1-t)·b.
template <class F>
Ideal<F> ideal_intersection(const Ideal<F>& a, const Ideal<F>& b) {
  check_same_ring(a.ring(), b.ring());
  if (a.is_unit_marker()) return b;
  if (b.is_unit_marker()) return a;
  Ring ring = a.ring();
  std::vector<std::string> evars = {"@t"};
  evars.insert(evars.end(), ring->vars.begin(), ring->vars.end());
  Ring ering = std::make_shared<RingSpec>(evars, ring->field,
                                          MonomialOrder{OrderKind::BlockElimination, 1});

  auto lift = [&](const Polynomial<F>& f) {
    std::vector<Term<F>> ts;
    for (auto& t : f.terms) {
      Monomial m(evars.size());
      for (size_t i = 0; i < ring->nvars(); ++i) m.e[i + 1] = t.m.e[i];
      m.deg = t.m.deg;
      ts.push_back({std::move(m), t.c});
    }
    return make_poly(ering, std::move(ts));
  };
  Polynomial<F> t = poly_var<F>(ering, 0);
  Polynomial<F> one_minus_t = poly_const<F>(ering, 1) - t;

  std::vector<Polynomial<F>> egens;
  for (auto& g : a.gens()) egens.push_back(t * lift(g));
  for (auto& g : b.gens()) egens.push_back(one_minus_t * lift(g));

  auto elim = eliminate(egens, {0}, a.degree_cap());
  std::vector<Polynomial<F>> gens;
  for (auto& g : elim) {
    std::vector<Term<F>> ts;
    for (auto& tm : g.terms) ts.push_back({tm.m, tm.c});
    // the intersection is homogeneous, so each homogeneous component of a
    // generator lies in it as well
    for (auto& comp : homogeneous_components(make_poly(ring, std::move(ts))))
      gens.push_back(std::move(comp));
  }
  std::optional<unsigned> mb;
  if (a.mbound() && b.mbound()) mb = *a.mbound() + *b.mbound();  // contains a·b
  return Ideal<F>(ring, std::move(gens), mb, a.degree_cap());
}

// λ(R/(a∩b)) without any elimination: inclusion–exclusion on lengths.
template <class F>
long long intersection_length(const Ideal<F>& a, const Ideal<F>& b) {
  return a.length() + b.length() - ideal_sum(a, b).length();
}

// λ(a/b) for b ⊆ a.
template <class F>
long long module_length(const Ideal<F>& a, const Ideal<F>& b) {
  check_same_ring(a.ring(), b.ring());
  if (auto w = a.containment_witness(b))
    throw ContainmentError("module_length: generator " + to_string(*w) +
                           " of the submodule is not contained in the larger ideal");
  return b.length() - a.length();
}

// Exact division f / g for f a polynomial multiple of g.
template <class F>
Polynomial<F> exact_divide(const Polynomial<F>& f, const Polynomial<F>& g) {
  Polynomial<F> q(f.ring), r = f;
  while (!r.is_zero()) {
    if (!divides(g.lt().m, r.lt().m))
      throw std::domain_error("exact_divide: not divisible");
    F c = r.lt().c / g.lt().c;
    Monomial m = quotient(r.lt().m, g.lt().m);
    q.terms.push_back({m, c});
    r = add_scaled(r, -c, m, g);
  }
  return make_poly(f.ring, std::move(q.terms));
}

// (a : b) as the intersection over generators g of b of (a ∩ (g))/g — the
// tag-variable elimination route, kept as the cross-check oracle.
template <class F>
Ideal<F> ideal_colon_elimination(const Ideal<F>& a, const Ideal<F>& b) {
  check_same_ring(a.ring(), b.ring());
  if (b.is_zero_ideal()) throw std::invalid_argument("colon by the zero ideal");
  if (b.is_unit_marker() || a.is_unit_marker()) return a;
  if (a.contains_ideal(b)) return Ideal<F>::unit(a.ring());
  Ideal<F> result;
  for (auto& g : b.gens()) {
    Ideal<F> pg(a.ring(), {g}, {}, a.degree_cap());
    Ideal<F> meet = ideal_intersection(a, pg);
    std::vector<Polynomial<F>> qgens;
    for (auto& h : meet.gens()) qgens.push_back(exact_divide(h, g));
    Ideal<F> part(a.ring(), std::move(qgens), {}, a.degree_cap());
    result = result.valid() ? ideal_intersection(result, part) : part;
  }
  return result;
}

// (a : b) for Artinian homogeneous a by degreewise linear algebra on R/a:
// a coset f + a lies in the colon iff f·g ∈ a for every generator g of b,
// a linear condition on the standard-monomial coordinates of f.
template <class F>
Ideal<F> ideal_colon(const Ideal<F>& a, const Ideal<F>& b) {
  check_same_ring(a.ring(), b.ring());
  if (b.is_zero_ideal()) throw std::invalid_argument("colon by the zero ideal");
  if (b.is_unit_marker() || a.is_unit_marker()) return a;
  if (a.contains_ideal(b)) return Ideal<F>::unit(a.ring());
  unsigned bound = a.artinian_bound();
  Ring ring = a.ring();
  const F one = F::from_int(1, ring->field);
  const F zero = one - one;

  std::vector<Polynomial<F>> gens = a.gens();
  auto trunc = a.gb().truncation;

  for (unsigned deg = 1; deg < bound; ++deg) {
    std::vector<Monomial> cols = a.standard_monomials(deg);
    if (cols.empty()) continue;
    std::map<std::vector<uint16_t>, size_t> coord;
    std::vector<std::vector<std::pair<size_t, F>>> colvals(cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      Polynomial<F> mono(ring);
      mono.terms.push_back({cols[j], one});
      for (auto& g : b.gens()) {
        Polynomial<F> nf = normal_form(mono * g, a.gb());
        for (auto& t : nf.terms) {
          if (trunc && t.m.deg >= *trunc) continue;
          auto it = coord.emplace(t.m.e, coord.size()).first;
          colvals[j].push_back({it->second, t.c});
        }
      }
    }
    std::vector<std::vector<F>> mat(coord.size(), std::vector<F>(cols.size(), zero));
    for (size_t j = 0; j < cols.size(); ++j)
      for (auto& [r, c] : colvals[j]) mat[r][j] = mat[r][j] + c;
    for (auto& v : kernel_basis(std::move(mat), cols.size(), one)) {
      std::vector<Term<F>> ts;
      for (size_t j = 0; j < cols.size(); ++j)
        if (!v[j].is_zero()) ts.push_back({cols[j], v[j]});
      Polynomial<F> f = make_poly(ring, std::move(ts));
      if (!f.is_zero()) gens.push_back(std::move(f));
    }
  }
  return Ideal<F>(ring, std::move(gens), a.mbound(), a.degree_cap());
}

}  // namespace sally

#endif
