#ifndef SALLY_INVARIANTS_HPP
#define SALLY_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sally/engine.hpp"

namespace sally {

// A computed quantity contradicting a proved identity means the implementation
// is wrong; these throw instead of returning bad data.
struct InvariantViolation : std::logic_error {
  explicit InvariantViolation(const std::string& msg) : std::logic_error(msg) {}
};

struct HypothesisError : std::runtime_error {
  std::string hypothesis;
  explicit HypothesisError(std::string h)
      : std::runtime_error("hypothesis not satisfied: " + h), hypothesis(std::move(h)) {}
};

inline long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace fit_detail {

// Solve the square system A x = b over the rationals (unique solution).
inline std::vector<Rat> solve(std::vector<std::vector<Rat>> a, const std::vector<Rat>& b) {
  size_t n = a.size();
  for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  row_echelon(a);
  std::vector<Rat> x(n);
  std::vector<char> seen(n, 0);
  for (auto& row : a) {
    size_t piv = 0;
    while (piv <= n && row[piv].is_zero()) ++piv;
    if (piv == n) throw std::runtime_error("inconsistent linear system in coefficient fit");
    x[piv] = row[n];
    seen[piv] = 1;
  }
  for (size_t i = 0; i < n; ++i)
    if (!seen[i]) throw std::runtime_error("singular linear system in coefficient fit");
  return x;
}

// Fit integers c_0..c_top with  value(n) = sum_i (-1)^i c_i C(n + off - i, top - i)
// using the top+1 sample points n_hi-top .. n_hi.
inline std::vector<long long> binomial_fit(const std::vector<long long>& values,
                                           long long n_hi, long long top, long long off) {
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  for (long long n = n_hi - top; n <= n_hi; ++n) {
    std::vector<Rat> row;
    for (long long i = 0; i <= top; ++i) {
      long long v = binom(n + off - i, top - i);
      row.push_back(Rat(i % 2 ? -v : v));
    }
    a.push_back(std::move(row));
    b.push_back(Rat(values[static_cast<size_t>(n)]));
  }
  auto x = solve(std::move(a), b);
  std::vector<long long> c;
  for (auto& xi : x) {
    using boost::multiprecision::cpp_rational;
    cpp_rational v = xi.v;
    if (denominator(v) != 1)
      throw std::runtime_error("coefficient fit produced a non-integer value");
    c.push_back(static_cast<long long>(numerator(v)));
  }
  return c;
}

inline long long binomial_eval(const std::vector<long long>& c, long long n, long long top,
                               long long off) {
  long long v = 0;
  for (long long i = 0; i <= top; ++i) {
    long long t = c[static_cast<size_t>(i)] * binom(n + off - i, top - i);
    v += i % 2 ? -t : t;
  }
  return v;
}

}  // namespace fit_detail

// ---------------------------------------------------------------------------

struct HilbertData {
  std::vector<long long> values;  // lambda(R/I^n), n = 0..N
  unsigned d = 0;
  std::vector<long long> e;       // e_0..e_d
  unsigned postulation = 0;       // least n0 with polynomial agreement for n >= n0
};

// least r <= bound with I^{r+1} = J I^r, via the colength shortcut
template <class E>
std::optional<unsigned> is_reduction(const E& e, const typename E::Id& j,
                                     const typename E::Id& i, unsigned bound) {
  for (auto& g : e.gens(j))
    if (!e.contains_elem(i, g))
      throw std::invalid_argument("reduction candidate generator " + e.elem_str(g) +
                                  " does not lie in I");
  for (unsigned r = 0; r <= bound; ++r)
    if (e.colength(e.product(j, e.power(i, r))) == e.colength(e.power(i, r + 1)))
      return r;
  return std::nullopt;
}

template <class E>
HilbertData hilbert_samuel(const E& e, const typename E::Id& i, unsigned N) {
  unsigned d = e.dim();
  if (N < d + 3) N = d + 3;
  HilbertData h;
  h.d = d;
  for (unsigned n = 0; n <= N; ++n) h.values.push_back(e.colength(e.power(i, n)));
  for (unsigned n = 2; n <= N; ++n)
    if (h.values[n] <= h.values[n - 1])
      throw std::invalid_argument("lambda(R/I^n) not strictly increasing: I is not a "
                                  "proper m-primary ideal");
  h.e = fit_detail::binomial_fit(h.values, N, d, static_cast<long long>(d) - 1);
  auto eval = [&](long long n) {
    return fit_detail::binomial_eval(h.e, n, d, static_cast<long long>(d) - 1);
  };
  for (long long n = N - d - 2; n <= static_cast<long long>(N) - d - 1; ++n)
    if (n >= 0 && eval(n) != h.values[static_cast<size_t>(n)])
      throw std::runtime_error(
          "Hilbert coefficient fit failed verification: N too small, try N = " +
          std::to_string(N + d + 2));
  unsigned post = N;
  while (post > 0 && eval(post - 1) == h.values[post - 1]) --post;
  h.postulation = post;
  return h;
}

// ---------------------------------------------------------------------------

enum class DepthClass { CohenMacaulay, ExactlyDMinus1, AtMostDMinus2 };

inline std::string to_string(DepthClass c) {
  switch (c) {
    case DepthClass::CohenMacaulay: return "CohenMacaulay";
    case DepthClass::ExactlyDMinus1: return "ExactlyDMinus1";
    default: return "AtMostDMinus2";
  }
}

struct InequalityAudit {
  bool northcott_holds = false;          // e0 - e1 <= lambda(R/I)
  bool huneke_ooishi_equality = false;   // e0 - e1 == lambda(R/I)
  bool i2_equals_ji = false;
  bool huneke_ooishi_iff_ok = false;     // equality <=> I^2 = JI
  long long sandwich_lower = 0;          // sum lambda((I^n+J)/J)
  long long sandwich_upper = 0;          // sum lambda(I^n/JI^{n-1})
  bool sandwich_holds = false;
  bool sandwich_right_equality = false;  // == e1; expected iff depth >= d-1
  bool e1_lower_bound_holds = false;            // e1 >= 2 e0 - lambda(R/I^2)
  bool narita_holds = true;              // e2 >= 0 (only meaningful when d >= 2)
};

struct SallyReport {
  unsigned d = 0;
  unsigned N = 0;
  unsigned r = 0;                         // reduction number r_J(I)
  long long lambda_R_I = 0;
  long long lambda_I_mod_J = 0;
  std::vector<long long> e;               // e_0..e_d
  std::vector<long long> s;               // s_0..s_{d-1}
  std::vector<long long> sally_lengths;   // [n] = lambda(I^n/J^{n-1}I), valid n >= 2
  std::vector<long long> step_lengths;    // [n] = lambda(I^n/JI^{n-1}), valid n >= 1
  std::vector<char> vv_flags;             // [k] = (J cap I^k == JI^{k-1}), k = 1..k_max
  DepthClass depth_class = DepthClass::AtMostDMinus2;
  InequalityAudit audit;
  HilbertData hilbert;
};

// J cap I^k = JI^{k-1} tested by the length shortcut (JI^{k-1} is always
// inside the intersection, so equal colengths mean equal ideals).
template <class E>
std::vector<char> vv_check(const E& e, const typename E::Id& i, const typename E::Id& j,
                           unsigned k_max) {
  std::vector<char> flags(k_max + 1, 0);
  for (unsigned k = 1; k <= k_max; ++k)
    flags[k] = e.inter_colength(j, e.power(i, k)) ==
               e.colength(e.product(j, e.power(i, k - 1)));
  return flags;
}

// same predicate through the explicit intersection (the cross-check oracle)
template <class E>
std::vector<char> vv_check_oracle(const E& e, const typename E::Id& i,
                                  const typename E::Id& j, unsigned k_max) {
  std::vector<char> flags(k_max + 1, 0);
  for (unsigned k = 1; k <= k_max; ++k)
    flags[k] = e.equal(e.intersection(j, e.power(i, k)),
                       e.product(j, e.power(i, k - 1)));
  return flags;
}

template <class E>
SallyReport sally_data(const E& e, const typename E::Id& i, const typename E::Id& j,
                       unsigned N = 0, unsigned reduction_bound = 25) {
  SallyReport rep;
  rep.d = e.dim();
  auto r = is_reduction(e, j, i, reduction_bound);
  if (!r)
    throw std::runtime_error("J is not a reduction of I within " +
                             std::to_string(reduction_bound) + " powers");
  rep.r = *r;
  rep.N = std::max<unsigned>(N, rep.r + rep.d + 3);
  rep.hilbert = hilbert_samuel(e, i, rep.N);
  rep.N = static_cast<unsigned>(rep.hilbert.values.size()) - 1;
  rep.e = rep.hilbert.e;
  rep.lambda_R_I = rep.hilbert.values[1];

  long long colen_j = e.colength(j);
  if (rep.e[0] != colen_j)
    throw InvariantViolation("e0 != lambda(R/J): " + std::to_string(rep.e[0]) + " vs " +
                             std::to_string(colen_j));
  rep.lambda_I_mod_J = colen_j - rep.lambda_R_I;

  rep.sally_lengths.assign(rep.N + 1, 0);
  rep.step_lengths.assign(rep.N + 1, 0);
  for (unsigned n = 1; n <= rep.N; ++n) {
    long long ci = rep.hilbert.values[n];
    rep.step_lengths[n] = e.colength(e.product(j, e.power(i, n - 1))) - ci;
    if (n >= 2) {
      rep.sally_lengths[n] = e.colength(e.product(e.power(j, n - 1), i)) - ci;
      // closed-form cross-check for the Sally component lengths
      long long closed = rep.e[0] * binom(n + rep.d - 2, rep.d) +
                         rep.lambda_R_I * binom(n + rep.d - 2, rep.d - 1) - ci;
      if (closed != rep.sally_lengths[n])
        throw InvariantViolation("Sally length closed form mismatch at n = " +
                                 std::to_string(n) + ": " + std::to_string(closed) +
                                 " vs " + std::to_string(rep.sally_lengths[n]));
    }
    if (n > rep.r && rep.step_lengths[n] != 0)
      throw InvariantViolation("lambda(I^n/JI^{n-1}) nonzero beyond the reduction number");
  }

  // Sally coefficients s_0..s_{d-1} fitted like the e's, then tied to them
  rep.s = fit_detail::binomial_fit(rep.sally_lengths, rep.N, rep.d - 1,
                                   static_cast<long long>(rep.d) - 2);
  for (long long n = rep.N - rep.d - 1; n <= static_cast<long long>(rep.N) - rep.d; ++n)
    if (n >= 2 && fit_detail::binomial_eval(rep.s, n, rep.d - 1,
                                            static_cast<long long>(rep.d) - 2) !=
                      rep.sally_lengths[static_cast<size_t>(n)])
      throw std::runtime_error("Sally coefficient fit failed verification: N too small");
  if (rep.e[1] != rep.lambda_I_mod_J + rep.s[0])
    throw InvariantViolation("e1 != lambda(I/J) + s0");
  for (unsigned idx = 2; idx <= rep.d && idx < rep.e.size(); ++idx)
    if (rep.e[idx] != rep.s[idx - 1])
      throw InvariantViolation("e_" + std::to_string(idx) + " != s_" +
                               std::to_string(idx - 1));

  unsigned k_max = std::max(rep.r, 1u);
  rep.vv_flags = vv_check(e, i, j, k_max);
  bool vv_all = true;
  for (unsigned k = 1; k <= k_max; ++k)
    if (!rep.vv_flags[k]) vv_all = false;
  long long step_sum = 0;
  for (unsigned n = 1; n <= rep.N; ++n) step_sum += rep.step_lengths[n];
  if (vv_all)
    rep.depth_class = DepthClass::CohenMacaulay;
  else if (rep.e[1] == step_sum)
    rep.depth_class = DepthClass::ExactlyDMinus1;
  else
    rep.depth_class = DepthClass::AtMostDMinus2;

  // inequality audit
  auto& a = rep.audit;
  a.northcott_holds = rep.e[0] - rep.e[1] <= rep.lambda_R_I;
  a.huneke_ooishi_equality = rep.e[0] - rep.e[1] == rep.lambda_R_I;
  a.i2_equals_ji = e.equal(e.power(i, 2), e.product(j, i));
  a.huneke_ooishi_iff_ok = a.huneke_ooishi_equality == a.i2_equals_ji;
  a.sandwich_lower = 0;
  for (unsigned n = 1; n <= rep.N; ++n)
    a.sandwich_lower += colen_j - e.colength(e.sum(e.power(i, n), j));
  a.sandwich_upper = step_sum;
  a.sandwich_holds = a.sandwich_lower <= rep.e[1] && rep.e[1] <= a.sandwich_upper;
  a.sandwich_right_equality = rep.e[1] == a.sandwich_upper;
  if (a.sandwich_right_equality != (rep.depth_class != DepthClass::AtMostDMinus2))
    throw InvariantViolation("Huckaba equality disagrees with the depth classification");
  a.e1_lower_bound_holds = rep.e[1] >= 2 * rep.e[0] - rep.hilbert.values[2];
  if (rep.d >= 2) a.narita_holds = rep.e[2] >= 0;
  if (!a.northcott_holds || !a.sandwich_holds || !a.e1_lower_bound_holds || !a.narita_holds ||
      !a.huneke_ooishi_iff_ok)
    throw InvariantViolation("a proved inequality failed on computed data");
  return rep;
}

// Numerator of the Hilbert-Poincare series of the associated graded ring,
// valid when depth >= d-1. Coefficient n is lambda(I^n/JI^{n-1}) -
// lambda(I^{n+1}/JI^n), with constant term lambda(R/I).
inline std::vector<long long> hp_numerator(const SallyReport& rep) {
  if (rep.depth_class == DepthClass::AtMostDMinus2)
    throw std::domain_error(
        "Hilbert-Poincare numerator formula requires depth >= d-1; the computed class is "
        "AtMostDMinus2");
  std::vector<long long> p = {rep.lambda_R_I};
  for (unsigned n = 1; n <= rep.r; ++n) {
    long long next = n + 1 <= rep.N ? rep.step_lengths[n + 1] : 0;
    p.push_back(rep.step_lengths[n] - next);
  }
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  long long p1 = 0, dp1 = 0;
  for (size_t n = 0; n < p.size(); ++n) {
    p1 += p[n];
    dp1 += static_cast<long long>(n) * p[n];
  }
  if (p1 != rep.e[0]) throw InvariantViolation("p(1) != e0");
  if (dp1 != rep.e[1]) throw InvariantViolation("p'(1) != e1");
  // expand p(t)/(1-t)^d and compare with lambda(I^n/I^{n+1})
  for (unsigned n = 0; n <= rep.r + rep.d + 2 && n + 1 < rep.hilbert.values.size(); ++n) {
    long long coef = 0;  // sum_k p_k C(n-k+d-1, d-1)
    for (size_t k = 0; k < p.size() && k <= n; ++k)
      coef += p[k] * binom(n - static_cast<long long>(k) + rep.d - 1, rep.d - 1);
    if (coef != rep.hilbert.values[n + 1] - rep.hilbert.values[n])
      throw InvariantViolation("Hilbert-Poincare series mismatch at degree " +
                               std::to_string(n));
  }
  return p;
}

template <class E>
long long v_dimension(const E& e, const typename E::Id& i, const typename E::Id& j,
                      unsigned n) {
  auto k = e.colon(j, e.power(i, n));
  return e.colength(k) - e.colength(e.sum(i, k));
}

// ---------------------------------------------------------------------------

struct FormTable {
  unsigned n = 0;    // the form takes n+1 arguments
  unsigned dim = 0;  // dim V
  std::vector<std::string> basis;
  std::string alpha;
  std::vector<std::string> tensor;  // dim^(n+1) entries, row-major
  bool alpha_i_inside = false;      // alpha*I inside JI^{n+1} (checked when dim >= 2)

  const std::string& at(const std::vector<unsigned>& idx) const {
    size_t flat = 0;
    for (auto k : idx) flat = flat * dim + k;
    return tensor[flat];
  }
};

template <class E>
FormTable multilinear_form(const E& e, const typename E::Id& i, const typename E::Id& j,
                           unsigned n) {
  auto in1 = e.power(i, n + 1);
  if (e.colength(e.product(j, e.power(i, n))) - e.colength(in1) != 1)
    throw HypothesisError("lambda(I^{n+1}/JI^n) = 1");
  if (e.contains(j, in1)) throw HypothesisError("I^{n+1} not contained in J");
  auto vv = vv_check(e, i, j, std::max(n, 1u));
  for (unsigned k = 1; k <= n; ++k)
    if (!vv[k]) throw HypothesisError("J cap I^" + std::to_string(k) + " = JI^" +
                                      std::to_string(k - 1));

  FormTable f;
  f.n = n;
  auto k_ideal = e.colon(j, e.power(i, n));
  auto vb = e.v_basis(i, k_ideal);
  f.dim = static_cast<unsigned>(vb.size());
  for (auto& b : vb) f.basis.push_back(e.elem_str(b));

  // alpha: first product of n+1 generators of I, in index order, that does
  // not vanish modulo J
  auto gens = e.gens(i);
  std::optional<typename E::Elem> alpha;
  std::vector<size_t> idx(n + 1, 0);
  auto advance = [&]() {
    size_t pos = idx.size();
    while (pos-- > 0) {
      if (++idx[pos] < gens.size()) {
        for (size_t q = pos + 1; q < idx.size(); ++q) idx[q] = idx[pos];
        return true;
      }
    }
    return false;
  };
  do {
    typename E::Elem prod = gens[idx[0]];
    for (size_t q = 1; q < idx.size(); ++q) prod = e.elem_mul(prod, gens[idx[q]]);
    if (!e.nf_zero(prod, j)) { alpha = prod; break; }
  } while (advance());
  if (!alpha)
    throw HypothesisError("I^{n+1} not contained in J");  // every product fell in J
  f.alpha = e.elem_str(*alpha);

  size_t total = 1;
  for (unsigned q = 0; q <= n; ++q) total *= f.dim;
  std::vector<unsigned> tup(n + 1, 0);
  for (size_t flat = 0; flat < total; ++flat) {
    size_t rem = flat;
    for (size_t q = tup.size(); q-- > 0;) {
      tup[q] = static_cast<unsigned>(rem % f.dim);
      rem /= f.dim;
    }
    typename E::Elem prod = vb[tup[0]];
    for (size_t q = 1; q < tup.size(); ++q) prod = e.elem_mul(prod, vb[tup[q]]);
    f.tensor.push_back(e.nf_ratio(prod, *alpha, j));
  }

  // symmetry: the entry depends only on the multiset of indices
  for (size_t flat = 0; flat < total; ++flat) {
    size_t rem = flat;
    for (size_t q = tup.size(); q-- > 0;) {
      tup[q] = static_cast<unsigned>(rem % f.dim);
      rem /= f.dim;
    }
    auto sorted = tup;
    std::sort(sorted.begin(), sorted.end());
    if (f.tensor[flat] != f.at(std::vector<unsigned>(sorted.begin(), sorted.end())))
      throw InvariantViolation("multilinear form is not symmetric");
  }
  // non-degeneracy: every basis vector pairs nontrivially in some slot filling
  for (unsigned b = 0; b < f.dim; ++b) {
    bool hit = false;
    for (size_t flat = 0; flat < total && !hit; ++flat) {
      size_t rem = flat;
      bool uses = false;
      for (size_t q = tup.size(); q-- > 0;) {
        tup[q] = static_cast<unsigned>(rem % f.dim);
        rem /= f.dim;
        if (tup[q] == b) uses = true;
      }
      if (uses && f.tensor[flat] != "0") hit = true;
    }
    if (!hit) throw InvariantViolation("multilinear form is degenerate");
  }
  if (f.dim >= 2) {
    auto jin1 = e.product(j, in1);
    f.alpha_i_inside = true;
    for (auto& g : gens)
      if (!e.contains_elem(jin1, e.elem_mul(*alpha, g))) f.alpha_i_inside = false;
    if (!f.alpha_i_inside)
      throw InvariantViolation("alpha*I not inside JI^{n+1} although dim V >= 2");
  }
  return f;
}

// ---------------------------------------------------------------------------

struct LengthOneWitness {
  bool principal = false;  // true: witness z found; false: I^{n+2} = JI^{n+1}
  std::string witness;
};

template <class E>
LengthOneWitness length_one_witness(const E& e, const typename E::Id& i, const typename E::Id& j,
                              unsigned n) {
  auto jin = e.product(j, e.power(i, n));
  if (e.colength(jin) - e.colength(e.power(i, n + 1)) != 1)
    throw HypothesisError("lambda(I^{n+1}/JI^n) = 1");
  unsigned scan_to = n + 2;
  for (unsigned t = n; t <= scan_to; ++t) {
    long long l = e.colength(e.product(j, e.power(i, t))) - e.colength(e.power(i, t + 1));
    if (l > 1)
      throw InvariantViolation("lambda(I^{t+1}/JI^t) > 1 beyond a length-one spot");
  }
  // candidates: products of up to n+1 generators
  auto gens = e.gens(i);
  std::vector<typename E::Elem> cands;
  std::vector<typename E::Elem> layer = gens;
  for (unsigned deg = 1; deg <= n + 1; ++deg) {
    for (auto& z : layer) cands.push_back(z);
    std::vector<typename E::Elem> next;
    if (deg < n + 1)
      for (auto& z : layer)
        for (auto& g : gens) next.push_back(e.elem_mul(z, g));
    layer = std::move(next);
  }
  for (auto& z : cands) {
    if (e.contains_elem(jin, e.elem_pow(z, n + 1))) continue;
    bool ok = true;
    for (unsigned t = n; t <= scan_to && ok; ++t) {
      auto rhs = e.sum(e.product(j, e.power(i, t)), e.ideal({e.elem_pow(z, t + 1)}));
      if (!e.equal(e.power(i, t + 1), rhs)) ok = false;
    }
    if (ok) return {true, e.elem_str(z)};
  }
  if (e.equal(e.power(i, n + 2), e.product(j, e.power(i, n + 1)))) return {false, ""};
  throw std::logic_error(
      "neither lemma branch certified: implementation bug, please report");
}

// ---------------------------------------------------------------------------

template <class E>
struct RatliffRushReport {
  std::vector<typename E::Id> closures;  // tilde(I^k), k = 1..k_max
  std::vector<char> stabilized;
  std::vector<char> contains_power;      // I^k inside tilde(I^k), always expected
  std::vector<char> equals_power;        // tilde(I^k) == I^k
  std::vector<long long> steps;          // lambda(tilde(I^k)/J tilde(I^{k-1}))
  long long step_sum = 0;
};

template <class E>
RatliffRushReport<E> ratliff_rush(const E& e, const typename E::Id& i,
                                  const typename E::Id& j, unsigned k_max,
                                  unsigned j_max = 10) {
  RatliffRushReport<E> out;
  for (unsigned k = 1; k <= k_max; ++k) {
    auto prev = e.colon(e.power(i, k + 1), i);
    bool stab = false;
    for (unsigned jj = 2; jj <= j_max; ++jj) {
      auto cur = e.colon(e.power(i, k + jj), e.power(i, jj));
      if (e.equal(cur, prev)) { stab = true; break; }
      prev = cur;
    }
    out.closures.push_back(prev);
    out.stabilized.push_back(stab);
    out.contains_power.push_back(e.contains(prev, e.power(i, k)));
    out.equals_power.push_back(e.equal(prev, e.power(i, k)));
  }
  auto prev_cl = e.unit();
  for (unsigned k = 1; k <= k_max; ++k) {
    long long step = e.colength(e.product(j, prev_cl)) - e.colength(out.closures[k - 1]);
    out.steps.push_back(step);
    out.step_sum += step;
    prev_cl = out.closures[k - 1];
  }
  return out;
}

// ---------------------------------------------------------------------------

struct IndependenceReport {
  std::vector<SampleLengths> samples;
  bool conclusive = false;       // at least two valid reductions
  bool invariant_lengths_constant = false;  // lambda(I/J), lambda(I^n/J^{n-1}I), lambda(R/J:I)
  bool step_lengths_constant = false;  // lambda(I^n/JI^{n-1}); assert only when depth >= d-1
  bool inter_varies = false;     // lambda(R/(J cap I^n)) recorded, never asserted
};

// deterministic entry for a user-supplied J, in the same shape as the samples
template <class E>
SampleLengths fixed_sample(const E& e, const typename E::Id& i, const typename E::Id& j,
                           unsigned nmax, unsigned bound) {
  SampleLengths out;
  out.description = "(";
  auto gs = e.gens(j);
  for (size_t k = 0; k < gs.size(); ++k)
    out.description += (k ? ", " : "") + e.elem_str(gs[k]);
  out.description += ")";
  auto r = is_reduction(e, j, i, bound);
  if (!r) throw std::runtime_error("supplied J is not a reduction of I");
  out.reduction_number = *r;
  out.colen_J = e.colength(j);
  out.len_I_mod_J = out.colen_J - e.colength(i);
  out.colen_J_colon_I = e.colength(e.colon(j, i));
  for (unsigned n = 1; n <= nmax; ++n) {
    auto in = e.power(i, n);
    long long ci = e.colength(in);
    if (n >= 2) out.sally.push_back(e.colength(e.product(e.power(j, n - 1), i)) - ci);
    out.step.push_back(e.colength(e.product(j, e.power(i, n - 1))) - ci);
    out.inter.push_back(e.inter_colength(j, in));
  }
  return out;
}

template <class E>
IndependenceReport sample_reductions(const E& e, const typename E::Id& i, unsigned trials,
                                     uint64_t seed, unsigned nmax, unsigned bound,
                                     bool depth_at_least_dm1,
                                     std::optional<SampleLengths> fixed = {}) {
  IndependenceReport rep;
  if (fixed) rep.samples.push_back(*fixed);
  std::mt19937_64 rng(seed);
  for (unsigned t = 0; t < trials; ++t) {
    auto s = sampled_lengths(e, i, rng, nmax, bound);
    if (s) rep.samples.push_back(*s);
  }
  rep.conclusive = rep.samples.size() >= 2;
  if (!rep.conclusive) return rep;
  const auto& ref = rep.samples.front();
  rep.invariant_lengths_constant = true;
  rep.step_lengths_constant = true;
  for (auto& s : rep.samples) {
    if (s.len_I_mod_J != ref.len_I_mod_J || s.sally != ref.sally ||
        s.colen_J_colon_I != ref.colen_J_colon_I)
      rep.invariant_lengths_constant = false;
    if (s.step != ref.step) rep.step_lengths_constant = false;
    if (s.inter != ref.inter) rep.inter_varies = true;
  }
  if (!rep.invariant_lengths_constant)
    throw InvariantViolation("a J-independent length varied across sampled reductions");
  if (depth_at_least_dm1 && !rep.step_lengths_constant)
    throw InvariantViolation(
        "lambda(I^n/JI^{n-1}) varied across sampled reductions despite depth >= d-1");
  return rep;
}

// ---------------------------------------------------------------------------

struct NaritaAudit {
  HilbertData rescaled;
  long long e0q = 0, e1q = 0, e2q = 0;
  bool relations_hold = false;  // e~0 = q^2 e0, e~1 = q e1 + q(q-1)/2 e0, e~2 = e2
  bool narita_nonneg = false;   // e2 >= 0
  bool s0_tilde_zero = false;   // e2 == 0: I^q has reduction number one behavior
};

template <class E>
NaritaAudit narita_rescale_check(const E& e, const typename E::Id& i, unsigned q,
                                 const HilbertData& base) {
  if (e.dim() != 2)
    throw std::invalid_argument("power rescaling audit is implemented only for d = 2");
  if (q < std::max<unsigned>(base.postulation, 1))
    throw std::invalid_argument("q must be at least the postulation index");
  NaritaAudit a;
  a.rescaled = hilbert_samuel(e, e.power(i, q), base.d + 3);
  a.e0q = a.rescaled.e[0];
  a.e1q = a.rescaled.e[1];
  a.e2q = a.rescaled.e[2];
  long long q2 = static_cast<long long>(q) * q;
  a.relations_hold = a.e0q == q2 * base.e[0] &&
                     a.e1q == static_cast<long long>(q) * base.e[1] +
                                  q * static_cast<long long>(q - 1) / 2 * base.e[0] &&
                     a.e2q == base.e[2];
  a.narita_nonneg = base.e[2] >= 0;
  a.s0_tilde_zero = base.e[2] == 0;
  if (!a.relations_hold || !a.narita_nonneg)
    throw InvariantViolation("power rescaling identities failed");
  return a;
}

// ---------------------------------------------------------------------------

struct TheoremFlags {
  long long n_one = -1;  // least n >= 0 with lambda(I^{n+1}/JI^n) = 1
  bool length_one_step_applicable = false;
  bool cm_criterion_holds = false;  // VV through n, I^{n+1} not in J, I^{n+2} = JI^{n+1}
  bool dim_v_cm_applicable = false;    // + dim V >= 2 (n >= 1)
  bool gorenstein_length_one_applicable = false;    // Gorenstein, I maximal, lambda(m^3/Jm^2) = 1
  bool depth_criterion_applicable = false;    // VV through n and lambda(I^{n+1}/JI^n) <= 1
  bool length_one_at_n1_applicable = false;   // lambda(I^2/JI) = 1
  bool consistent = false;          // applicable conclusions match depth_class
};

template <class E>
TheoremFlags cm_and_theorem_flags(const E& e, const typename E::Id& i,
                                  const typename E::Id& j, const SallyReport& rep) {
  TheoremFlags f;
  for (unsigned n = 0; n + 1 <= rep.N; ++n)
    if (rep.step_lengths[n + 1] == 1) { f.n_one = n; break; }

  auto vv_through = [&](unsigned n) {
    auto vv = vv_check(e, i, j, std::max(n, 1u));
    for (unsigned k = 1; k <= n; ++k)
      if (!vv[k]) return false;
    return true;
  };

  if (f.n_one >= 0) {
    unsigned n = static_cast<unsigned>(f.n_one);
    f.length_one_step_applicable = true;
    f.cm_criterion_holds =
        vv_through(n) && !e.contains(j, e.power(i, n + 1)) &&
        e.equal(e.power(i, n + 2), e.product(j, e.power(i, n + 1)));
    if (n >= 1)
      f.dim_v_cm_applicable = vv_through(n) && v_dimension(e, i, j, n) >= 2;
  }
  f.gorenstein_length_one_applicable = e.ring_gorenstein() && e.equal(i, e.maximal()) && rep.N >= 3 &&
                       rep.step_lengths.size() > 3 && rep.step_lengths[3] == 1;
  for (unsigned n = 0; n + 1 <= rep.N; ++n)
    if (rep.step_lengths[n + 1] <= 1 && vv_through(n)) { f.depth_criterion_applicable = true; break; }
  f.length_one_at_n1_applicable = rep.N >= 2 && rep.step_lengths[2] == 1;

  bool cm = rep.depth_class == DepthClass::CohenMacaulay;
  bool ge_dm1 = rep.depth_class != DepthClass::AtMostDMinus2;
  f.consistent = true;
  if (f.length_one_step_applicable && (f.cm_criterion_holds != cm)) f.consistent = false;
  if (f.dim_v_cm_applicable && !cm) f.consistent = false;
  if (f.gorenstein_length_one_applicable && !cm) f.consistent = false;
  if (f.depth_criterion_applicable && !ge_dm1) f.consistent = false;
  if (f.length_one_at_n1_applicable && !ge_dm1) f.consistent = false;
  if (!f.consistent)
    throw InvariantViolation("a theorem conclusion disagrees with the computed depth class");
  return f;
}

}  // namespace sally

#endif
