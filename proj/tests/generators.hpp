#ifndef REESKIT_TESTS_GENERATORS_HPP
#define REESKIT_TESTS_GENERATORS_HPP

#include <random>
#include <string>
#include <vector>

#include "reeskit/polynomial.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline reeskit::Monomial monomial(Rng& rng, std::size_t nvars, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  reeskit::Monomial m(nvars);
  for (std::size_t i = 0; i < nvars; ++i) m.set(i, static_cast<reeskit::Exponent>(e(rng)));
  return m;
}

template <class F>
reeskit::Polynomial<F> polynomial(Rng& rng, const reeskit::RingPtr<F>& ring, std::size_t max_terms, unsigned max_exp, long coeff_bound = 5) {
  std::uniform_int_distribution<std::size_t> nt(1, max_terms);
  std::uniform_int_distribution<long> c(-coeff_bound, coeff_bound);
  std::vector<reeskit::Term<F>> terms;
  std::size_t count = nt(rng);
  for (std::size_t i = 0; i < count; ++i) {
    terms.push_back({ring->field().from_integer(c(rng)), monomial(rng, ring->nvars(), max_exp)});
  }
  return reeskit::Polynomial<F>::from_terms(ring, std::move(terms));
}

template <class F>
reeskit::Polynomial<F> nonzero_polynomial(Rng& rng, const reeskit::RingPtr<F>& ring, std::size_t max_terms, unsigned max_exp) {
  while (true) {
    auto p = polynomial(rng, ring, max_terms, max_exp);
    if (!p.is_zero()) return p;
  }
}

inline std::vector<std::string> names(std::size_t n, const std::string& stem = "x") {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

}  // namespace gen

#endif
