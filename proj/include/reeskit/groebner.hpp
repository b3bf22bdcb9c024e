#ifndef REESKIT_GROEBNER_HPP
#define REESKIT_GROEBNER_HPP

#include <algorithm>
#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "reeskit/polynomial.hpp"

namespace reeskit {

/// Resource guards and strategy switches for Buchberger's algorithm.
struct GbOptions {
  std::size_t max_pairs = 2'000'000;  // S-pairs reduced before aborting
  std::uint32_t max_degree = 64;       // largest total degree of a basis element
  bool use_criteria = true;            // product and chain criteria
};

enum class GbStatus { Complete, Aborted };

inline const char* to_string(GbStatus s) { return s == GbStatus::Complete ? "complete" : "aborted"; }

struct GbReport {
  std::size_t basis_size = 0;
  std::uint32_t max_degree = 0;
  std::vector<std::uint32_t> degrees;
  std::size_t pairs_generated = 0;
  std::size_t pairs_skipped = 0;
  std::size_t pairs_processed = 0;
  std::size_t pairs_reduced_to_zero = 0;
  double elapsed_ms = 0;
  GbStatus status = GbStatus::Complete;
  std::string diagnostic;
};

/// Thrown by every operation that needs a Gröbner basis when a guard trips.
class GuardExceeded : public Error {
 public:
  GuardExceeded(const std::string& what, GbReport report) : Error(what), report_(std::move(report)) {}
  const GbReport& report() const { return report_; }

 private:
  GbReport report_;
};

template <class F>
struct GbResult {
  std::vector<Polynomial<F>> basis;  // reduced, sorted by descending leading monomial
  GbReport report;
};

/// Remainder of p on division by `divisors` (ring order). At every step the
/// first divisor, in list order, whose leading monomial divides the current
/// leading monomial is used.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& p, const std::vector<Polynomial<F>>& divisors) {
  for (const auto& g : divisors) {
    Polynomial<F>::check_same_ring(p, g);
    if (g.is_zero()) throw Error("zero divisor polynomial in normal form");
  }
  const F& k = p.field();
  Polynomial<F> rest = p;
  Polynomial<F> rem(p.ring());
  while (!rest.is_zero()) {
    const auto& lt = rest.leading_term();
    const Polynomial<F>* hit = nullptr;
    for (const auto& g : divisors) {
      if (g.leading_monomial().divides(lt.mono)) {
        hit = &g;
        break;
      }
    }
    if (hit == nullptr) {
      rem.append_smaller(rest.pop_leading());
      continue;
    }
    auto c = k.neg(k.div(lt.coeff, hit->leading_coefficient()));
    auto m = lt.mono.quotient(hit->leading_monomial());
    rest = rest.add_scaled(*hit, c, m);
  }
  return rem;
}

/// Normal form with respect to an explicit order (both sides are re-sorted).
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& p, const std::vector<Polynomial<F>>& divisors, const MonomialOrder& order) {
  if (p.ring()->order() == order) return normal_form(p, divisors);
  auto ring = p.ring()->with_order(order);
  std::vector<Polynomial<F>> moved;
  for (const auto& g : divisors) moved.push_back(g.change_ring(ring));
  return normal_form(p.change_ring(ring), moved).change_ring(p.ring());
}

/// lcm/LT(f) * f - lcm/LT(g) * g, made monic.
template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  Polynomial<F>::check_same_ring(f, g);
  if (f.is_zero() || g.is_zero()) throw Error("S-polynomial of a zero polynomial");
  const F& k = f.field();
  auto l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  auto a = f.scaled(k.inv(f.leading_coefficient()), l.quotient(f.leading_monomial()));
  auto s = a.add_scaled(g, k.neg(k.inv(g.leading_coefficient())), l.quotient(g.leading_monomial()));
  return s.monic();
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g, const MonomialOrder& order) {
  if (f.ring()->order() == order) return s_polynomial(f, g);
  auto ring = f.ring()->with_order(order);
  return s_polynomial(f.change_ring(ring), g.change_ring(ring)).change_ring(f.ring());
}

/// Minimal, interreduced, monic basis sorted by descending leading monomial.
template <class F>
std::vector<Polynomial<F>> reduce_basis(std::vector<Polynomial<F>> basis) {
  std::vector<Polynomial<F>> g;
  for (auto& p : basis) {
    if (!p.is_zero()) g.push_back(p.monic());
  }
  if (g.empty()) return g;
  const auto& order = g.front().ring()->order();
  std::sort(g.begin(), g.end(), [&](const auto& a, const auto& b) { return order.compare(a.leading_monomial(), b.leading_monomial()) < 0; });
  std::vector<Polynomial<F>> minimal;
  for (auto& p : g) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const auto& q) { return q.leading_monomial().divides(p.leading_monomial()); });
    if (!redundant) minimal.push_back(std::move(p));
  }
  std::vector<Polynomial<F>> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    reduced.push_back(normal_form(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) { return order.compare(a.leading_monomial(), b.leading_monomial()) > 0; });
  return reduced;
}

namespace detail {

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
};

template <class F>
class Buchberger {
 public:
  Buchberger(const GbOptions& opts) : opts_(opts) {}

  GbResult<F> run(const std::vector<Polynomial<F>>& gens) {
    auto start = std::chrono::steady_clock::now();
    GbResult<F> result;
    try {
      for (const auto& p : gens) {
        if (p.is_zero()) continue;
        check_degree(p);
        add(p.monic());
      }
      while (!pairs_.empty()) {
        auto pair = select();
        if (report_.pairs_processed >= opts_.max_pairs) {
          abort("S-pair cap of " + std::to_string(opts_.max_pairs) + " reached");
        }
        ++report_.pairs_processed;
        auto h = normal_form(s_polynomial(basis_[pair.i], basis_[pair.j]), active_cache_);
        if (h.is_zero()) {
          ++report_.pairs_reduced_to_zero;
          continue;
        }
        check_degree(h);
        add(h.monic());
      }
    } catch (const GuardExceeded& e) {
      report_.status = GbStatus::Aborted;
      report_.diagnostic = e.what();
      report_.elapsed_ms = elapsed(start);
      result.report = report_;
      return result;
    }
    result.basis = reduce_basis(active_cache_);
    report_.basis_size = result.basis.size();
    for (const auto& g : result.basis) {
      report_.degrees.push_back(g.total_degree());
      report_.max_degree = std::max(report_.max_degree, g.total_degree());
    }
    report_.elapsed_ms = elapsed(start);
    result.report = report_;
    return result;
  }

 private:
  static double elapsed(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }

  [[noreturn]] void abort(const std::string& why) { throw GuardExceeded(why, report_); }

  void check_degree(const Polynomial<F>& p) {
    if (p.total_degree() > opts_.max_degree) {
      abort("degree cap of " + std::to_string(opts_.max_degree) + " exceeded (degree " + std::to_string(p.total_degree()) + ")");
    }
  }

  void refresh_active() {
    active_cache_.clear();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (active_[i]) active_cache_.push_back(basis_[i]);
    }
  }

  // Normal selection strategy: smallest lcm degree, then smallest lcm, then indices.
  CriticalPair select() {
    const auto& order = basis_.front().ring()->order();
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      int c = order.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::pair(a.i, a.j) < std::pair(b.i, b.j))) best = k;
    }
    CriticalPair p = pairs_[best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

  // Gebauer-Moeller installation of a new basis element.
  void add(Polynomial<F> h) {
    std::size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    active_.push_back(false);
    const Monomial& lh = basis_[hi].leading_monomial();

    std::vector<CriticalPair> fresh;
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g]) fresh.push_back({g, hi, Monomial::lcm(basis_[g].leading_monomial(), lh)});
    }
    report_.pairs_generated += fresh.size();

    if (!opts_.use_criteria) {
      pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());
      active_[hi] = true;
      refresh_active();
      return;
    }

    std::vector<CriticalPair> kept;
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      const auto& p = fresh[k];
      bool keep = basis_[p.i].leading_monomial().coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < fresh.size() && keep; ++q) {
          if (fresh[q].lcm.divides(p.lcm)) keep = false;
        }
        for (const auto& q : kept) {
          if (!keep) break;
          if (q.lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) {
        kept.push_back(p);
      } else {
        ++report_.pairs_skipped;
      }
    }
    std::vector<CriticalPair> accepted;
    for (const auto& p : kept) {
      if (basis_[p.i].leading_monomial().coprime(lh)) {
        ++report_.pairs_skipped;
      } else {
        accepted.push_back(p);
      }
    }
    std::vector<CriticalPair> survivors;
    for (const auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(Monomial::lcm(basis_[p.i].leading_monomial(), lh) == p.lcm) &&
                  !(Monomial::lcm(basis_[p.j].leading_monomial(), lh) == p.lcm);
      if (drop) {
        ++report_.pairs_skipped;
      } else {
        survivors.push_back(p);
      }
    }
    survivors.insert(survivors.end(), accepted.begin(), accepted.end());
    pairs_ = std::move(survivors);
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(basis_[g].leading_monomial())) active_[g] = false;
    }
    active_[hi] = true;
    refresh_active();
  }

  GbOptions opts_;
  GbReport report_;
  std::vector<Polynomial<F>> basis_;
  std::vector<bool> active_;
  std::vector<Polynomial<F>> active_cache_;
  std::vector<CriticalPair> pairs_;
};

}  // namespace detail

/// Buchberger's algorithm under the ring's order. On a guard breach the
/// result carries status Aborted and an empty basis; nothing partial escapes.
template <class F>
GbResult<F> buchberger(const std::vector<Polynomial<F>>& gens, const GbOptions& opts = {}) {
  for (std::size_t i = 1; i < gens.size(); ++i) Polynomial<F>::check_same_ring(gens[0], gens[i]);
  return detail::Buchberger<F>(opts).run(gens);
}

/// Reduced Gröbner basis; throws GuardExceeded when a guard trips.
template <class F>
std::vector<Polynomial<F>> groebner_basis(const std::vector<Polynomial<F>>& gens, const GbOptions& opts = {}) {
  auto result = buchberger(gens, opts);
  if (result.report.status == GbStatus::Aborted) throw GuardExceeded(result.report.diagnostic, result.report);
  return std::move(result.basis);
}

template <class F>
struct GroebnerCheck {
  bool is_groebner = true;
  std::size_t pairs_checked = 0;
  std::vector<std::pair<std::size_t, std::size_t>> offenders;
  std::vector<Polynomial<F>> remainders;  // nonzero remainder per offender
};

/// Buchberger's criterion: every S-pair of G reduces to zero modulo G.
template <class F>
GroebnerCheck<F> is_groebner(const std::vector<Polynomial<F>>& gens) {
  GroebnerCheck<F> check;
  for (const auto& g : gens) {
    if (g.is_zero()) throw Error("zero polynomial in a candidate Gröbner basis");
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      ++check.pairs_checked;
      auto r = normal_form(s_polynomial(gens[i], gens[j]), gens);
      if (!r.is_zero()) {
        check.is_groebner = false;
        check.offenders.emplace_back(i, j);
        check.remainders.push_back(std::move(r));
      }
    }
  }
  return check;
}

template <class F>
GroebnerCheck<F> is_groebner(const std::vector<Polynomial<F>>& gens, const MonomialOrder& order) {
  if (gens.empty() || gens.front().ring()->order() == order) return is_groebner(gens);
  auto ring = gens.front().ring()->with_order(order);
  std::vector<Polynomial<F>> moved;
  for (const auto& g : gens) moved.push_back(g.change_ring(ring));
  return is_groebner(moved);
}

}  // namespace reeskit

#endif  // REESKIT_GROEBNER_HPP
