#ifndef SALLY_HILBERT_HPP
#define SALLY_HILBERT_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sally/monomial.hpp"

namespace sally {

// Standard-monomial counting for monomial ideals via the Hilbert-series
// numerator recursion (pivot on the busiest variable). All coefficients are
// tracked only up to a degree limit, which keeps the arrays small.

namespace hilbert_detail {

using Coeffs = std::vector<long long>;  // coeffs[d] = coefficient of t^d

inline void add_into(Coeffs& a, const Coeffs& b, unsigned shift, size_t limit) {
  if (a.size() < std::min(b.size() + shift, limit)) a.resize(std::min(b.size() + shift, limit), 0);
  for (size_t i = 0; i + shift < limit && i < b.size(); ++i) a[i + shift] += b[i];
}

inline void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.e < b.e;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool dominated = false;
    for (auto& h : out)
      if (divides(h, g)) { dominated = true; break; }
    if (!dominated) out.push_back(g);
  }
  gens = std::move(out);
}

// numerator of the Hilbert series of R/(gens), truncated at degree `limit`
inline Coeffs numerator(std::vector<Monomial> gens, size_t nvars, size_t limit) {
  minimalize(gens);
  if (gens.empty()) return {1};
  if (gens.front().deg == 0) return {0};  // unit ideal

  // pairwise coprime (minimal gens): numerator = prod (1 - t^deg)
  bool all_coprime = true;
  {
    std::vector<char> used(nvars, 0);
    for (auto& g : gens) {
      for (size_t i = 0; i < nvars && all_coprime; ++i)
        if (g.e[i]) {
          if (used[i]) all_coprime = false;
          used[i] = 1;
        }
      if (!all_coprime) break;
    }
  }
  if (all_coprime) {
    Coeffs r = {1};
    for (auto& g : gens) {
      Coeffs next(std::min<size_t>(r.size() + g.deg, limit), 0);
      for (size_t i = 0; i < r.size() && i < limit; ++i) {
        next[i] += r[i];
        if (i + g.deg < limit) next[i + g.deg] -= r[i];
      }
      r = std::move(next);
    }
    return r;
  }

  // pivot: most frequent variable, median positive exponent
  std::vector<unsigned> freq(nvars, 0);
  for (auto& g : gens)
    for (size_t i = 0; i < nvars; ++i)
      if (g.e[i]) ++freq[i];
  size_t piv = std::max_element(freq.begin(), freq.end()) - freq.begin();
  std::vector<uint16_t> exps;
  for (auto& g : gens)
    if (g.e[piv]) exps.push_back(g.e[piv]);
  std::sort(exps.begin(), exps.end());
  uint16_t m = exps[exps.size() / 2];
  // Keep x_piv^m outside the ideal: if a pure power x_piv^{m'} is already a
  // generator, m >= m' would leave the plus branch unchanged (no progress).
  for (auto& g : gens)
    if (g.e[piv] == g.deg && g.e[piv] <= m) m = g.e[piv] - 1;

  Monomial p(nvars);
  p.e[piv] = m;
  p.deg = m;

  // I = (I + (p)) ⊕ shifted (I : p)
  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (auto& g : gens) {
    Monomial q = g;
    uint16_t drop = std::min(q.e[piv], m);
    q.e[piv] -= drop;
    q.deg -= drop;
    colon.push_back(std::move(q));
  }
  Coeffs a = numerator(std::move(plus), nvars, limit);
  Coeffs b = numerator(std::move(colon), nvars, limit > m ? limit - m : 0);
  Coeffs r = std::move(a);
  add_into(r, b, m, limit);
  return r;
}

}  // namespace hilbert_detail

struct NotArtinian : std::runtime_error {
  std::vector<std::string> missing;
  NotArtinian(std::string msg, std::vector<std::string> vars)
      : std::runtime_error(std::move(msg)), missing(std::move(vars)) {}
};

// Minimal exponent e with x_i^e among the generators, per variable; 0 when absent.
inline std::vector<unsigned> pure_power_degrees(const std::vector<Monomial>& gens,
                                                size_t nvars) {
  std::vector<unsigned> pure(nvars, 0);
  for (auto& g : gens) {
    size_t var = nvars;
    bool is_pure = true;
    for (size_t i = 0; i < nvars; ++i)
      if (g.e[i]) {
        if (var != nvars) { is_pure = false; break; }
        var = i;
      }
    if (is_pure && var != nvars)
      if (!pure[var] || g.e[var] < pure[var]) pure[var] = g.e[var];
  }
  return pure;
}

// Hilbert function values H(R/I)(k) for k = 0..limit-1.
inline std::vector<long long> hilbert_function(const std::vector<Monomial>& lead_terms,
                                               size_t nvars, size_t limit) {
  auto coeffs = hilbert_detail::numerator(lead_terms, nvars, limit);
  coeffs.resize(limit, 0);
  for (size_t pass = 0; pass < nvars; ++pass)
    for (size_t i = 1; i < limit; ++i) coeffs[i] += coeffs[i - 1];
  return coeffs;
}

// Number of monomials of degree < truncation outside the monomial ideal.
// With truncation unset the ideal must be Artinian via pure powers, and the
// count is the full (finite) tally of standard monomials.
inline long long count_standard_monomials(const std::vector<Monomial>& lead_terms,
                                          size_t nvars,
                                          std::optional<unsigned> truncation,
                                          const std::vector<std::string>* var_names = nullptr) {
  size_t limit;
  if (truncation) {
    limit = *truncation;
  } else {
    auto pure = pure_power_degrees(lead_terms, nvars);
    std::vector<std::string> missing;
    for (size_t i = 0; i < nvars; ++i)
      if (!pure[i])
        missing.push_back(var_names ? (*var_names)[i] : "x" + std::to_string(i + 1));
    if (!missing.empty()) {
      std::string msg = "quotient is not Artinian: no pure-power leading term for";
      for (auto& v : missing) msg += " " + v;
      throw NotArtinian(std::move(msg), std::move(missing));
    }
    limit = 1;
    for (size_t i = 0; i < nvars; ++i) limit += pure[i] - 1;
  }
  if (limit == 0) return 0;
  auto h = hilbert_function(lead_terms, nvars, limit);
  long long total = 0;
  for (auto v : h) total += v;
  return total;
}

// Largest degree holding a standard monomial below the truncation bound;
// -1 when the quotient is zero. Used to tighten Artinian bounds.
inline long long top_standard_degree(const std::vector<Monomial>& lead_terms, size_t nvars,
                                     unsigned limit) {
  auto h = hilbert_function(lead_terms, nvars, limit);
  for (size_t k = h.size(); k-- > 0;)
    if (h[k] != 0) return static_cast<long long>(k);
  return -1;
}

}  // namespace sally

#endif
