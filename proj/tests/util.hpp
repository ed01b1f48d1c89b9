#ifndef SALLY_TESTS_UTIL_HPP
#define SALLY_TESTS_UTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "sally/ideal.hpp"
#include "sally/parse.hpp"

namespace testutil {

using namespace sally;

inline Ring make_ring(std::vector<std::string> vars,
                      FieldSpec fs = {FieldKind::PrimeField, 32003},
                      MonomialOrder ord = {}) {
  return std::make_shared<RingSpec>(std::move(vars), fs, ord);
}

template <class F>
Polynomial<F> pp(const Ring& r, const std::string& s) {
  return parse_poly<F>(r, s);
}

// Random homogeneous polynomial of the given degree (possibly zero).
template <class F>
Polynomial<F> random_homog(const Ring& r, unsigned deg, std::mt19937_64& rng,
                           int max_terms = 4) {
  std::vector<Term<F>> ts;
  std::uniform_int_distribution<int> coeff(-9, 9);
  int nterms = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < nterms; ++t) {
    Monomial m(r->nvars());
    for (unsigned k = 0; k < deg; ++k) {
      size_t i = rng() % r->nvars();
      ++m.e[i];
    }
    m.deg = deg;
    ts.push_back({std::move(m), F::from_int(coeff(rng), r->field)});
  }
  return make_poly(r, std::move(ts));
}

// Random Artinian homogeneous ideal: pure powers of every variable plus a
// few random homogeneous elements.
template <class F>
Ideal<F> random_artinian(const Ring& r, std::mt19937_64& rng, unsigned maxexp = 3) {
  std::vector<Polynomial<F>> gens;
  for (size_t i = 0; i < r->nvars(); ++i)
    gens.push_back(poly_var<F>(r, i, 2 + static_cast<unsigned>(rng() % (maxexp - 1))));
  int extra = static_cast<int>(rng() % 3);
  for (int k = 0; k < extra; ++k) {
    auto f = random_homog<F>(r, 1 + static_cast<unsigned>(rng() % 3), rng);
    if (!f.is_zero()) gens.push_back(f);
  }
  return Ideal<F>(r, std::move(gens));
}

}  // namespace testutil

#endif
