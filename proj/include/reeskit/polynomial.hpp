#ifndef REESKIT_POLYNOMIAL_HPP
#define REESKIT_POLYNOMIAL_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "reeskit/ring.hpp"

namespace reeskit {

template <class F>
struct Term {
  typename F::Element coeff;
  Monomial mono;
};

// Sparse polynomial in canonical form: nonzero coefficients, distinct
// monomials, terms sorted strictly descending under the ring's order. The zero
// polynomial has no terms.
template <class F>
class Polynomial {
 public:
  using Element = typename F::Element;
  using RingPtr = typename Ring<F>::Ptr;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial from_terms(RingPtr ring, std::vector<Term<F>> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  static Polynomial constant(RingPtr ring, Element c) {
    Polynomial p(ring);
    if (!ring->field().is_zero(c)) p.terms_.push_back({std::move(c), Monomial(ring->nvars())});
    return p;
  }

  static Polynomial one(RingPtr ring) { return constant(ring, ring->field().one()); }

  static Polynomial monomial(RingPtr ring, Monomial m, Element c) {
    Polynomial p(ring);
    if (!ring->field().is_zero(c)) p.terms_.push_back({std::move(c), std::move(m)});
    return p;
  }

  static Polynomial monomial(RingPtr ring, Monomial m) {
    auto c = ring->field().one();
    return monomial(std::move(ring), std::move(m), std::move(c));
  }

  static Polynomial variable(RingPtr ring, std::size_t index) {
    auto m = Monomial::variable(ring->nvars(), index);
    return monomial(std::move(ring), std::move(m));
  }

  static Polynomial variable(RingPtr ring, const std::string& name) {
    auto i = ring->index_of(name);
    return variable(std::move(ring), i);
  }

  const RingPtr& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::vector<Term<F>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  const Term<F>& leading_term() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Element& leading_coefficient() const { return leading_term().coeff; }

  /// Leading term under an order other than the ring's.
  Term<F> leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    const Term<F>* best = &terms_.front();
    for (const auto& t : terms_) {
      if (order.compare(t.mono, best->mono) > 0) best = &t;
    }
    return *best;
  }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  /// Common weight of all terms, or nullopt when the polynomial is inhomogeneous.
  std::optional<long> weighted_degree(const std::string& grading) const {
    if (terms_.empty()) throw Error("weighted degree of the zero polynomial");
    long w = ring_->weight(grading, terms_.front().mono);
    for (const auto& t : terms_) {
      if (ring_->weight(grading, t.mono) != w) return std::nullopt;
    }
    return w;
  }

  bool is_homogeneous(const std::string& grading = "total") const {
    return terms_.empty() || weighted_degree(grading).has_value();
  }

  Polynomial monic() const {
    if (terms_.empty() || field().is_one(terms_.front().coeff)) return *this;
    return scaled(field().inv(terms_.front().coeff));
  }

  Polynomial scaled(const Element& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({field().mul(t.coeff, c), t.mono});
    return p;
  }

  /// c * m * this; multiplication by a monomial preserves the term order.
  Polynomial scaled(const Element& c, const Monomial& m) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({field().mul(t.coeff, c), t.mono * m});
    return p;
  }

  /// this + c * m * g, computed as a single merge.
  Polynomial add_scaled(const Polynomial& g, const Element& c, const Monomial& m) const {
    const auto& order = ring_->order();
    const F& k = field();
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        out.terms_.push_back(terms_[i++]);
        continue;
      }
      Monomial gm = g.terms_[j].mono * m;
      int cmp = i == terms_.size() ? -1 : order.compare(terms_[i].mono, gm);
      if (cmp > 0) {
        out.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        out.terms_.push_back({k.mul(g.terms_[j++].coeff, c), std::move(gm)});
      } else {
        auto s = k.add(terms_[i].coeff, k.mul(g.terms_[j].coeff, c));
        if (!k.is_zero(s)) out.terms_.push_back({std::move(s), std::move(gm)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  Polynomial operator-() const { return scaled(field().neg(field().one())); }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    check_same_ring(p, q);
    return p.add_scaled(q, p.field().one(), Monomial(p.ring_->nvars()));
  }

  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    check_same_ring(p, q);
    return p.add_scaled(q, p.field().neg(p.field().one()), Monomial(p.ring_->nvars()));
  }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    check_same_ring(p, q);
    if (p.is_zero() || q.is_zero()) return Polynomial(p.ring_);
    if (p.is_monomial()) return q.scaled(p.terms_[0].coeff, p.terms_[0].mono);
    if (q.is_monomial()) return p.scaled(q.terms_[0].coeff, q.terms_[0].mono);
    std::vector<Term<F>> prod;
    prod.reserve(p.size() * q.size());
    for (const auto& a : p.terms_) {
      for (const auto& b : q.terms_) prod.push_back({p.field().mul(a.coeff, b.coeff), a.mono * b.mono});
    }
    return from_terms(p.ring_, std::move(prod));
  }

  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  Polynomial pow(unsigned e) const {
    Polynomial result = one(ring_);
    Polynomial base = *this;
    for (; e; e >>= 1) {
      if (e & 1) result *= base;
      if (e > 1) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    if (!p.ring_->same_as(*q.ring_) || p.terms_.size() != q.terms_.size()) return false;
    for (std::size_t i = 0; i < p.terms_.size(); ++i) {
      if (!(p.terms_[i].mono == q.terms_[i].mono) || !p.field().equal(p.terms_[i].coeff, q.terms_[i].coeff)) return false;
    }
    return true;
  }

  /// Re-expresses the polynomial in another ring, matching variables by name.
  Polynomial change_ring(const RingPtr& target) const {
    if (target.get() == ring_.get()) return *this;
    std::vector<std::optional<std::size_t>> map(ring_->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i) map[i] = target->find(ring_->name(i));
    std::vector<Term<F>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target->nvars());
      for (std::size_t i = 0; i < t.mono.size(); ++i) {
        if (t.mono[i] == 0) continue;
        if (!map[i]) throw Error("variable '" + ring_->name(i) + "' does not exist in the target ring");
        m.set(*map[i], t.mono[i]);
      }
      out.push_back({t.coeff, std::move(m)});
    }
    return from_terms(target, std::move(out));
  }

  /// Variables (by index) that occur in some term.
  std::vector<std::size_t> support() const {
    std::vector<bool> seen(ring_->nvars(), false);
    for (const auto& t : terms_) {
      for (std::size_t i = 0; i < t.mono.size(); ++i) {
        if (t.mono[i] != 0) seen[i] = true;
      }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (seen[i]) out.push_back(i);
    }
    return out;
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += ring_->name(i);
      if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
  }

  /// Terms in descending order, explicit '*' and '^'.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    const F& k = field();
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& t = terms_[i];
      bool negative = k.is_negative(t.coeff);
      Element mag = negative ? k.neg(t.coeff) : t.coeff;
      if (i == 0) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (t.mono.is_one()) {
        out += k.to_string(mag);
      } else {
        if (!k.is_one(mag)) out += k.to_string(mag) + "*";
        out += monomial_string(t.mono);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

  // Low-level access for the division loop. Callers keep the canonical form:
  // appended terms must be smaller than every existing term.
  Term<F> pop_leading() {
    Term<F> t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
  }
  void append_smaller(Term<F> t) { terms_.push_back(std::move(t)); }

  /// Sorts, merges equal monomials and drops zero coefficients.
  void normalize() {
    const auto& order = ring_->order();
    for (const auto& t : terms_) {
      if (t.mono.size() != ring_->nvars()) throw Error("exponent vector arity does not match the ring");
    }
    std::sort(terms_.begin(), terms_.end(), [&](const Term<F>& a, const Term<F>& b) { return order.compare(a.mono, b.mono) > 0; });
    std::vector<Term<F>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = field().add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && field().is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && field().is_zero(out.back().coeff)) out.pop_back();
    terms_ = std::move(out);
  }

  static void check_same_ring(const Polynomial& p, const Polynomial& q) {
    if (!p.ring_ || !q.ring_ || !p.ring_->same_as(*q.ring_)) throw Error("ring mismatch");
  }

 private:
  RingPtr ring_;
  std::vector<Term<F>> terms_;
};

}  // namespace reeskit

#endif  // REESKIT_POLYNOMIAL_HPP
