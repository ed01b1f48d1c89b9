#ifndef SALLY_POLYNOMIAL_HPP
#define SALLY_POLYNOMIAL_HPP

#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sally/field.hpp"
#include "sally/monomial.hpp"

namespace sally {

struct RingSpec {
  std::vector<std::string> vars;
  FieldSpec field;
  MonomialOrder order;

  RingSpec(std::vector<std::string> v, FieldSpec f, MonomialOrder o = {})
      : vars(std::move(v)), field(f), order(o) {
    validate(field);
    for (size_t i = 0; i < vars.size(); ++i)
      for (size_t j = i + 1; j < vars.size(); ++j)
        if (vars[i] == vars[j])
          throw std::invalid_argument("duplicate variable name: " + vars[i]);
  }

  size_t nvars() const { return vars.size(); }
  bool same_as(const RingSpec& o) const {
    return vars == o.vars && field == o.field && order == o.order;
  }
  std::string str() const {
    std::string s = field.str() + "[";
    for (size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
    return s + "] " + order.str();
  }
};

using Ring = std::shared_ptr<const RingSpec>;

inline void check_same_ring(const Ring& a, const Ring& b) {
  if (a.get() == b.get()) return;
  if (!a->same_as(*b))
    throw std::invalid_argument("ring mismatch: " + a->str() + " vs " + b->str());
}

template <class F>
struct Term {
  Monomial m;
  F c;
};

// Terms strictly descending in the ring's order; no zero coefficients.
template <class F>
struct Polynomial {
  Ring ring;
  std::vector<Term<F>> terms;

  Polynomial() = default;
  explicit Polynomial(Ring r) : ring(std::move(r)) {}

  bool is_zero() const { return terms.empty(); }
  const Term<F>& lt() const {
    if (terms.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms.front();
  }
  unsigned degree() const {  // total degree; 0 for the zero polynomial
    unsigned d = 0;
    for (auto& t : terms) d = std::max(d, t.m.deg);
    return d;
  }
  bool is_monomial() const { return terms.size() == 1; }

  bool operator==(const Polynomial& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (size_t i = 0; i < terms.size(); ++i)
      if (terms[i].m != o.terms[i].m || !(terms[i].c == o.terms[i].c)) return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
};

// Builds a canonical polynomial from an unsorted term list (merging
// duplicates, dropping zeros).
template <class F>
Polynomial<F> make_poly(Ring ring, std::vector<Term<F>> ts) {
  const MonomialOrder& ord = ring->order;
  std::sort(ts.begin(), ts.end(), [&](const Term<F>& a, const Term<F>& b) {
    return compare(a.m, b.m, ord) > 0;
  });
  Polynomial<F> p(std::move(ring));
  for (auto& t : ts) {
    if (t.c.is_zero()) continue;
    if (!p.terms.empty() && p.terms.back().m == t.m) {
      p.terms.back().c = p.terms.back().c + t.c;
      if (p.terms.back().c.is_zero()) p.terms.pop_back();
    } else {
      p.terms.push_back(std::move(t));
    }
  }
  return p;
}

template <class F>
Polynomial<F> poly_zero(Ring r) { return Polynomial<F>(std::move(r)); }

template <class F>
Polynomial<F> poly_const(Ring r, long n) {
  F c = F::from_int(n, r->field);
  Polynomial<F> p(r);
  if (!c.is_zero()) p.terms.push_back({Monomial(r->nvars()), c});
  return p;
}

template <class F>
Polynomial<F> poly_var(Ring r, size_t i, unsigned exp = 1) {
  Monomial m(r->nvars());
  m.e[i] = exp;
  m.deg = exp;
  Polynomial<F> p(r);
  if (exp == 0) return poly_const<F>(r, 1);
  p.terms.push_back({std::move(m), F::from_int(1, r->field)});
  return p;
}

// Merge-based addition of a + s*m*b; the workhorse behind add/sub/reduce.
template <class F>
Polynomial<F> add_scaled(const Polynomial<F>& a, const F& s, const Monomial& m,
                         const Polynomial<F>& b) {
  check_same_ring(a.ring, b.ring);
  const MonomialOrder& ord = a.ring->order;
  Polynomial<F> r(a.ring);
  r.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    Monomial bm = mul(m, b.terms[j].m);
    int c = compare(a.terms[i].m, bm, ord);
    if (c > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      F v = s * b.terms[j].c;
      if (!v.is_zero()) r.terms.push_back({std::move(bm), std::move(v)});
      ++j;
    } else {
      F v = a.terms[i].c + s * b.terms[j].c;
      if (!v.is_zero()) r.terms.push_back({std::move(bm), std::move(v)});
      ++i; ++j;
    }
  }
  for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) {
    F v = s * b.terms[j].c;
    if (!v.is_zero()) r.terms.push_back({mul(m, b.terms[j].m), std::move(v)});
  }
  return r;
}

template <class F>
Polynomial<F> operator+(const Polynomial<F>& a, const Polynomial<F>& b) {
  return add_scaled(a, F::from_int(1, a.ring->field), Monomial(a.ring->nvars()), b);
}

template <class F>
Polynomial<F> operator-(const Polynomial<F>& a, const Polynomial<F>& b) {
  return add_scaled(a, F::from_int(-1, a.ring->field), Monomial(a.ring->nvars()), b);
}

template <class F>
Polynomial<F> operator-(const Polynomial<F>& a) {
  Polynomial<F> r(a.ring);
  r.terms.reserve(a.terms.size());
  for (auto& t : a.terms) r.terms.push_back({t.m, -t.c});
  return r;
}

template <class F>
Polynomial<F> scale(const Polynomial<F>& a, const F& s) {
  Polynomial<F> r(a.ring);
  if (s.is_zero()) return r;
  r.terms.reserve(a.terms.size());
  for (auto& t : a.terms) r.terms.push_back({t.m, t.c * s});
  return r;
}

template <class F>
Polynomial<F> operator*(const Polynomial<F>& a, const Polynomial<F>& b) {
  check_same_ring(a.ring, b.ring);
  std::vector<Term<F>> ts;
  ts.reserve(a.terms.size() * b.terms.size());
  for (auto& ta : a.terms)
    for (auto& tb : b.terms) ts.push_back({mul(ta.m, tb.m), ta.c * tb.c});
  return make_poly(a.ring, std::move(ts));
}

template <class F>
bool is_homogeneous(const Polynomial<F>& f) {
  if (f.terms.empty()) return true;
  unsigned d = f.terms.front().m.deg;
  for (auto& t : f.terms)
    if (t.m.deg != d) return false;
  return true;
}

// Monic normalization. Over QQ the content is cleared first so integer
// growth stays bounded during reduction.
template <class F>
void make_monic(Polynomial<F>& f) {
  if (f.is_zero()) return;
  F lc = f.terms.front().c;
  for (auto& t : f.terms) t.c = t.c / lc;
}

inline void clear_content(Polynomial<Rat>& f) {
  using boost::multiprecision::cpp_int;
  if (f.is_zero()) return;
  cpp_int g = 0, l = 1;
  for (auto& t : f.terms) {
    g = gcd(g, numerator(t.c.v));
    l = lcm(l, denominator(t.c.v));
  }
  Rat s(boost::multiprecision::cpp_rational(l, g));
  for (auto& t : f.terms) t.c = t.c * s;
}
inline void clear_content(Polynomial<GF>&) {}

template <class F>
std::string to_string(const Polynomial<F>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : f.terms) {
    std::string cs = t.c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    bool unit_coeff = (cs == "1") && !t.m.is_one();
    if (!unit_coeff) os << cs;
    bool printed = !unit_coeff;
    for (size_t i = 0; i < t.m.e.size(); ++i) {
      if (!t.m.e[i]) continue;
      if (printed) os << "*";
      os << f.ring->vars[i];
      if (t.m.e[i] > 1) os << "^" << t.m.e[i];
      printed = true;
    }
  }
  return os.str();
}

}  // namespace sally

#endif
