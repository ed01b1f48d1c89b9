#ifndef SALLY_MONOMIAL_HPP
#define SALLY_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace sally {

// Exponent vector. Degree is cached; all mutation goes through the few
// helpers below so the cache never goes stale.
struct Monomial {
  std::vector<uint16_t> e;
  unsigned deg = 0;

  Monomial() = default;
  explicit Monomial(size_t nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<uint16_t> exps)
      : e(std::move(exps)), deg(std::accumulate(e.begin(), e.end(), 0u)) {}

  size_t nvars() const { return e.size(); }
  bool is_one() const { return deg == 0; }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

inline Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.e.size());
  for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
  r.deg = a.deg + b.deg;
  return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  // a | b
  if (a.deg > b.deg) return false;
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r(a.e.size());
  for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = b.e[i] - a.e[i];
  r.deg = b.deg - a.deg;
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.e.size());
  unsigned d = 0;
  for (size_t i = 0; i < a.e.size(); ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    d += r.e[i];
  }
  r.deg = d;
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

enum class OrderKind { GrevLex, Lex, BlockElimination };

struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
  unsigned block = 0;  // size of the leading block for BlockElimination

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && (kind != OrderKind::BlockElimination || block == o.block);
  }
  std::string str() const {
    switch (kind) {
      case OrderKind::GrevLex: return "grevlex";
      case OrderKind::Lex: return "lex";
      default: return "block(" + std::to_string(block) + ")";
    }
  }
};

namespace detail {

inline int cmp_grevlex(const uint16_t* a, const uint16_t* b, size_t lo, size_t hi,
                       unsigned dega, unsigned degb) {
  if (dega != degb) return dega < degb ? -1 : 1;
  // equal degree: the monomial whose trailing difference is negative is larger
  for (size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

inline int cmp_lex(const uint16_t* a, const uint16_t* b, size_t n) {
  for (size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace detail

// Returns -1, 0, 1 for m1 < m2, m1 == m2, m1 > m2.
inline int compare(const Monomial& m1, const Monomial& m2, const MonomialOrder& ord) {
  if (m1.e.size() != m2.e.size())
    throw std::invalid_argument("monomial comparison across different variable counts");
  size_t n = m1.e.size();
  switch (ord.kind) {
    case OrderKind::GrevLex:
      return detail::cmp_grevlex(m1.e.data(), m2.e.data(), 0, n, m1.deg, m2.deg);
    case OrderKind::Lex:
      return detail::cmp_lex(m1.e.data(), m2.e.data(), n);
    case OrderKind::BlockElimination: {
      size_t k = std::min<size_t>(ord.block, n);
      unsigned d1 = 0, d2 = 0;
      for (size_t i = 0; i < k; ++i) { d1 += m1.e[i]; d2 += m2.e[i]; }
      if (int c = detail::cmp_grevlex(m1.e.data(), m2.e.data(), 0, k, d1, d2)) return c;
      return detail::cmp_grevlex(m1.e.data(), m2.e.data(), k, n, m1.deg - d1, m2.deg - d2);
    }
  }
  return 0;
}

}  // namespace sally

#endif
