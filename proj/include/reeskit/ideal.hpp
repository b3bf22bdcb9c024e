#ifndef REESKIT_IDEAL_HPP
#define REESKIT_IDEAL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "reeskit/groebner.hpp"

namespace reeskit {

// Finitely generated ideal. Generators are immutable; the reduced Gröbner
// basis under the ring's order is computed on first use and cached. Copies
// share the cache.
template <class F>
class Ideal {
 public:
  using Poly = Polynomial<F>;

  explicit Ideal(RingPtr<F> ring, std::vector<Poly> gens = {}) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (!g.ring()->same_as(*ring_)) throw Error("ring mismatch in ideal generators");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  static Ideal unit(RingPtr<F> ring) { return Ideal(ring, {Poly::one(ring)}); }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  /// Reduced Gröbner basis; throws GuardExceeded when the guard trips.
  const std::vector<Poly>& groebner(const GbOptions& opts = {}) const {
    std::lock_guard lock(cache_->mutex);
    if (!cache_->result) {
      auto result = buchberger(gens_, opts);
      if (result.report.status == GbStatus::Aborted) throw GuardExceeded(result.report.diagnostic, result.report);
      cache_->result = std::move(result);
    }
    return cache_->result->basis;
  }

  /// Report of the cached computation (computes it if needed).
  GbReport groebner_report(const GbOptions& opts = {}) const {
    groebner(opts);
    std::lock_guard lock(cache_->mutex);
    return cache_->result->report;
  }

  bool is_unit(const GbOptions& opts = {}) const {
    const auto& gb = groebner(opts);
    return gb.size() == 1 && gb[0].is_constant();
  }

  bool is_monomial() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Poly& p) { return p.is_monomial(); });
  }

  bool contains(const Poly& p, const GbOptions& opts = {}) const {
    Poly::check_same_ring(p, gens_.empty() ? p : gens_.front());
    if (p.is_zero()) return true;
    if (gens_.empty()) return false;
    return normal_form(p.change_ring(ring_), groebner(opts)).is_zero();
  }

  bool contains(const Ideal& other, const GbOptions& opts = {}) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Poly& p) { return contains(p, opts); });
  }

  /// Equality decided by comparing reduced Gröbner bases.
  bool equals(const Ideal& other, const GbOptions& opts = {}) const {
    if (!ring_->same_as(*other.ring_)) throw Error("ring mismatch in ideal comparison");
    const auto& a = groebner(opts);
    const auto& b = other.groebner(opts);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!(a[i] == b[i])) return false;
    }
    return true;
  }

  friend Ideal operator+(const Ideal& a, const Ideal& b) {
    auto gens = a.gens_;
    for (const auto& g : b.gens_) gens.push_back(g.change_ring(a.ring_));
    return Ideal(a.ring_, std::move(gens));
  }

  friend Ideal operator*(const Ideal& a, const Ideal& b) {
    std::vector<Poly> gens;
    for (const auto& f : a.gens_) {
      for (const auto& g : b.gens_) gens.push_back(f * g.change_ring(a.ring_));
    }
    return Ideal(a.ring_, std::move(gens));
  }

  /// Generators of the k-th power (all products of k generators, deduplicated).
  Ideal power(unsigned k) const {
    if (k == 0) return unit(ring_);
    Ideal result = *this;
    for (unsigned i = 1; i < k; ++i) result = (result * *this).deduplicated();
    return result;
  }

  Ideal deduplicated() const {
    std::vector<Poly> out;
    for (const auto& g : gens_) {
      auto m = g.monic();
      if (std::none_of(out.begin(), out.end(), [&](const Poly& q) { return q == m; })) out.push_back(m);
    }
    return Ideal(ring_, std::move(out));
  }

  Ideal change_ring(const RingPtr<F>& target) const {
    std::vector<Poly> gens;
    for (const auto& g : gens_) gens.push_back(g.change_ring(target));
    return Ideal(target, std::move(gens));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ", ";
      s += gens_[i].to_string();
    }
    return s + ")";
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<GbResult<F>> result;
  };

  RingPtr<F> ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

template <class F>
bool membership(const Polynomial<F>& p, const Ideal<F>& ideal, const GbOptions& opts = {}) {
  return ideal.contains(p, opts);
}

/// Quotient and remainder of p divided by a single polynomial g.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> divide(const Polynomial<F>& p, const Polynomial<F>& g) {
  Polynomial<F>::check_same_ring(p, g);
  if (g.is_zero()) throw Error("division by the zero polynomial");
  const F& k = p.field();
  std::vector<Term<F>> quotient;
  Polynomial<F> rest = p;
  Polynomial<F> rem(p.ring());
  while (!rest.is_zero()) {
    const auto& lt = rest.leading_term();
    if (!g.leading_monomial().divides(lt.mono)) {
      rem.append_smaller(rest.pop_leading());
      continue;
    }
    auto c = k.div(lt.coeff, g.leading_coefficient());
    auto m = lt.mono.quotient(g.leading_monomial());
    rest = rest.add_scaled(g, k.neg(c), m);
    quotient.push_back({c, m});
  }
  return {Polynomial<F>::from_terms(p.ring(), std::move(quotient)), rem};
}

namespace detail {

inline std::string fresh_prefix(const std::vector<std::string>& taken, const std::string& base) {
  std::string prefix = base;
  auto clash = [&](const std::string& p) {
    return std::any_of(taken.begin(), taken.end(), [&](const std::string& n) { return n.rfind(p, 0) == 0; });
  };
  while (clash(prefix)) prefix += "_";
  return prefix;
}

template <class F>
std::vector<Polynomial<F>> without_front(const std::vector<Polynomial<F>>& gb, const MonomialOrder& order) {
  std::vector<Polynomial<F>> out;
  for (const auto& g : gb) {
    bool clean = true;
    for (auto v : g.support()) {
      if (order.in_front(v)) {
        clean = false;
        break;
      }
    }
    if (clean) out.push_back(g);
  }
  return out;
}

inline OrderKind inner_kind(const MonomialOrder& o) { return o.kind() == OrderKind::Lex ? OrderKind::Lex : OrderKind::RevLex; }

}  // namespace detail

/// I ∩ k[keep], via a block elimination order with the other variables in front.
/// The result lives in the ambient ring of I.
template <class F>
Ideal<F> eliminate(const Ideal<F>& ideal, const std::vector<std::string>& keep, const GbOptions& opts = {}) {
  const auto& ring = ideal.ring();
  std::vector<bool> front(ring->nvars(), true);
  for (const auto& name : keep) front[ring->index_of(name)] = false;
  if (std::none_of(front.begin(), front.end(), [](bool b) { return b; })) return ideal;
  auto order = MonomialOrder::elimination(front, detail::inner_kind(ring->order()));
  auto elim_ring = ring->with_order(order);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.change_ring(elim_ring));
  auto gb = groebner_basis(gens, opts);
  std::vector<Polynomial<F>> kept;
  for (const auto& g : detail::without_front(gb, order)) kept.push_back(g.change_ring(ring));
  return Ideal<F>(ring, std::move(kept));
}

/// Ring homomorphism given by the image of each source variable.
template <class F>
class AlgebraMap {
 public:
  AlgebraMap(RingPtr<F> source, RingPtr<F> target, std::vector<Polynomial<F>> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->nvars()) throw Error("algebra map needs one image per source variable");
    for (auto& img : images_) {
      if (!img.ring() || !img.ring()->same_as(*target_)) throw Error("algebra map image is not in the target ring");
    }
  }

  static AlgebraMap identity(RingPtr<F> ring) {
    std::vector<Polynomial<F>> images;
    for (std::size_t i = 0; i < ring->nvars(); ++i) images.push_back(Polynomial<F>::variable(ring, i));
    return AlgebraMap(ring, ring, std::move(images));
  }

  const RingPtr<F>& source() const { return source_; }
  const RingPtr<F>& target() const { return target_; }
  const std::vector<Polynomial<F>>& images() const { return images_; }
  const Polynomial<F>& image(std::size_t i) const { return images_.at(i); }
  const Polynomial<F>& image(const std::string& name) const { return images_.at(source_->index_of(name)); }

  Polynomial<F> apply(const Polynomial<F>& p) const {
    if (!p.ring()->same_as(*source_)) throw Error("polynomial is not in the source ring of the map");
    Polynomial<F> out(target_);
    for (const auto& t : p.terms()) {
      auto term = Polynomial<F>::constant(target_, t.coeff);
      for (std::size_t i = 0; i < t.mono.size(); ++i) {
        if (t.mono[i] != 0) term *= images_[i].pow(t.mono[i]);
      }
      out += term;
    }
    return out;
  }

 private:
  RingPtr<F> source_;
  RingPtr<F> target_;
  std::vector<Polynomial<F>> images_;
};

/// ker(m) through the graph ideal (y_i - image_i) with the target variables
/// eliminated. Every returned generator is checked to map to zero.
template <class F>
Ideal<F> kernel_of_map(const AlgebraMap<F>& m, const GbOptions& opts = {}) {
  const auto& src = m.source();
  const auto& tgt = m.target();
  auto prefix = detail::fresh_prefix(src->names(), "_z");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < tgt->nvars(); ++i) names.push_back(prefix + std::to_string(i));
  for (const auto& n : src->names()) names.push_back(n);
  std::vector<bool> front(names.size(), false);
  for (std::size_t i = 0; i < tgt->nvars(); ++i) front[i] = true;
  auto order = MonomialOrder::elimination(front, detail::inner_kind(src->order()));
  auto joined = Ring<F>::generic(src->field(), names, order);

  std::vector<Polynomial<F>> graph;
  for (std::size_t i = 0; i < src->nvars(); ++i) {
    std::vector<Term<F>> terms;
    for (const auto& t : m.image(i).terms()) {
      Monomial mono(joined->nvars());
      for (std::size_t v = 0; v < t.mono.size(); ++v) {
        if (t.mono[v]) mono.set(v, t.mono[v]);
      }
      terms.push_back({t.coeff, std::move(mono)});
    }
    auto image = Polynomial<F>::from_terms(joined, std::move(terms));
    graph.push_back(Polynomial<F>::variable(joined, tgt->nvars() + i) - image);
  }
  auto gb = groebner_basis(graph, opts);
  std::vector<Polynomial<F>> kernel;
  for (const auto& g : detail::without_front(gb, order)) {
    auto back = g.change_ring(src);
    if (!m.apply(back).is_zero()) throw Error("internal error: kernel generator does not map to zero: " + back.to_string());
    kernel.push_back(std::move(back));
  }
  return Ideal<F>(src, std::move(kernel));
}

/// I ∩ J via t*I + (1 - t)*J with the tag variable t eliminated.
template <class F>
Ideal<F> ideal_intersection(const Ideal<F>& I, const Ideal<F>& J, const GbOptions& opts = {}) {
  const auto& ring = I.ring();
  if (!ring->same_as(*J.ring())) throw Error("ring mismatch in intersection");
  if (I.is_zero() || J.is_zero()) return Ideal<F>(ring);
  auto tag = detail::fresh_prefix(ring->names(), "_tag");
  std::vector<std::string> names{tag};
  for (const auto& n : ring->names()) names.push_back(n);
  std::vector<bool> front(names.size(), false);
  front[0] = true;
  auto order = MonomialOrder::elimination(front, detail::inner_kind(ring->order()));
  auto tagged = Ring<F>::generic(ring->field(), names, order);
  auto t = Polynomial<F>::variable(tagged, 0);
  auto one_minus_t = Polynomial<F>::one(tagged) - t;
  std::vector<Polynomial<F>> gens;
  for (const auto& f : I.generators()) gens.push_back(t * f.change_ring(tagged));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * g.change_ring(tagged));
  auto gb = groebner_basis(gens, opts);
  std::vector<Polynomial<F>> out;
  for (const auto& g : detail::without_front(gb, order)) out.push_back(g.change_ring(ring));
  Ideal<F> result(ring, std::move(out));
  if (!I.contains(result, opts) || !J.contains(result, opts)) throw Error("internal error: intersection not contained in both ideals");
  return result;
}

/// I : (g) = (I ∩ (g)) / g.
template <class F>
Ideal<F> ideal_colon(const Ideal<F>& I, const Polynomial<F>& g, const GbOptions& opts = {}) {
  const auto& ring = I.ring();
  if (g.is_zero()) return Ideal<F>::unit(ring);
  if (g.is_constant()) return I;
  auto principal = Ideal<F>(ring, {g.change_ring(ring)});
  auto meet = ideal_intersection(I, principal, opts);
  std::vector<Polynomial<F>> out;
  for (const auto& h : meet.generators()) {
    auto [q, r] = divide(h, g.change_ring(ring));
    if (!r.is_zero()) throw Error("internal error: intersection generator not divisible by " + g.to_string());
    out.push_back(std::move(q));
  }
  return Ideal<F>(ring, std::move(out));
}

/// I : J as the intersection of the principal colons I : g over generators g of J.
/// Checks J * (I : J) ⊆ I before returning.
template <class F>
Ideal<F> ideal_colon(const Ideal<F>& I, const Ideal<F>& J, const GbOptions& opts = {}) {
  const auto& ring = I.ring();
  if (J.is_zero()) return Ideal<F>::unit(ring);
  std::optional<Ideal<F>> acc;
  for (const auto& g : J.generators()) {
    auto c = ideal_colon(I, g, opts);
    acc = acc ? ideal_intersection(*acc, c, opts) : c;
  }
  Ideal<F> result(ring, acc->groebner(opts));
  for (const auto& a : result.generators()) {
    for (const auto& b : J.generators()) {
      if (!I.contains(a * b.change_ring(ring), opts)) throw Error("internal error: colon post-check failed");
    }
  }
  return result;
}

/// I : f^∞, iterating the colon until the reduced bases agree.
template <class F>
Ideal<F> ideal_saturation(const Ideal<F>& I, const Polynomial<F>& f, const GbOptions& opts = {}, unsigned max_rounds = 256) {
  if (f.is_zero()) throw Error("saturation by the zero polynomial");
  Ideal<F> current = I;
  for (unsigned round = 0; round < max_rounds; ++round) {
    auto next = ideal_colon(current, f, opts);
    if (next.equals(current, opts)) return next;
    current = Ideal<F>(I.ring(), next.groebner(opts));
  }
  throw GuardExceeded("saturation did not stabilise within " + std::to_string(max_rounds) + " rounds", {});
}

/// Monomial ideal of leading terms of the reduced Gröbner basis.
template <class F>
Ideal<F> initial_ideal(const Ideal<F>& I, const GbOptions& opts = {}) {
  std::vector<Polynomial<F>> lts;
  for (const auto& g : I.groebner(opts)) lts.push_back(Polynomial<F>::monomial(I.ring(), g.leading_monomial()));
  return Ideal<F>(I.ring(), std::move(lts));
}

template <class F>
Ideal<F> initial_ideal(const Ideal<F>& I, const MonomialOrder& order, const GbOptions& opts = {}) {
  if (I.ring()->order() == order) return initial_ideal(I, opts);
  auto ring = I.ring()->with_order(order);
  return initial_ideal(I.change_ring(ring), opts).change_ring(I.ring());
}

struct DimensionResult {
  int dimension = 0;                        // -1 for the unit ideal
  std::vector<std::size_t> independent_set;  // witness of the dimension
};

/// Krull dimension of k[x]/I for a monomial ideal I: the largest set of
/// variables containing the support of no generator, by branch and bound
/// over minimum hitting sets of the supports.
template <class F>
DimensionResult monomial_dim(const Ideal<F>& I) {
  std::size_t n = I.ring()->nvars();
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& g : I.generators()) {
    if (!g.is_monomial()) throw Error("monomial_dim needs a monomial ideal; got " + g.to_string());
    if (g.leading_monomial().is_one()) return {-1, {}};
    supports.push_back(g.leading_monomial().support());
  }
  std::sort(supports.begin(), supports.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });

  std::vector<bool> cover(n, false), best_cover(n, true);
  std::size_t best = n;
  auto search = [&](auto&& self, std::size_t size) -> void {
    if (size >= best) return;
    const std::vector<std::size_t>* open = nullptr;
    for (const auto& s : supports) {
      if (std::none_of(s.begin(), s.end(), [&](std::size_t v) { return cover[v]; })) {
        open = &s;
        break;
      }
    }
    if (open == nullptr) {
      best = size;
      best_cover = cover;
      return;
    }
    if (size + 1 >= best) return;
    for (auto v : *open) {
      cover[v] = true;
      self(self, size + 1);
      cover[v] = false;
    }
  };
  if (supports.empty()) {
    best = 0;
    best_cover.assign(n, false);
  } else {
    search(search, 0);
  }
  DimensionResult result;
  result.dimension = static_cast<int>(n - best);
  for (std::size_t v = 0; v < n; ++v) {
    if (!best_cover[v]) result.independent_set.push_back(v);
  }
  return result;
}

/// True when no generator of the monomial ideal has its support inside `vars`.
template <class F>
bool is_independent(const Ideal<F>& I, const std::vector<std::size_t>& vars) {
  std::vector<bool> in(I.ring()->nvars(), false);
  for (auto v : vars) in.at(v) = true;
  for (const auto& g : I.generators()) {
    auto s = g.leading_monomial().support();
    if (std::all_of(s.begin(), s.end(), [&](std::size_t v) { return in[v]; })) return false;
  }
  return true;
}

}  // namespace reeskit

#endif  // REESKIT_IDEAL_HPP
