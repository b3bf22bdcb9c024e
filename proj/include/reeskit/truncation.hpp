#ifndef REESKIT_TRUNCATION_HPP
#define REESKIT_TRUNCATION_HPP

#include <string>
#include <vector>

#include "reeskit/parse.hpp"
#include "reeskit/rees.hpp"

namespace reeskit {

class OutOfProvenRange : public Error {
 public:
  using Error::Error;
};

/// (f_1, ..., f_r)_{>=d} for a homogeneous regular sequence of degrees d_1 >= ... >= d_r.
struct TruncationInstance {
  int n = 0;
  std::vector<std::string> f;  // parse_poly syntax over x1..xn
  int d = 0;
  FieldSpec field;
};

/// True iff (f_1..f_{i-1}) : f_i = (f_1..f_{i-1}) for every i.
template <class F>
bool check_regular_sequence(const std::vector<Polynomial<F>>& f, const GbOptions& opts = {}) {
  if (f.empty()) return true;
  const auto& ring = f.front().ring();
  for (const auto& g : f) {
    if (g.is_zero() || !g.is_homogeneous()) throw Error("regular sequence check needs nonzero homogeneous polynomials");
  }
  for (std::size_t i = 1; i < f.size(); ++i) {
    Ideal<F> prev(ring, std::vector<Polynomial<F>>(f.begin(), f.begin() + i));
    auto colon = ideal_colon(prev, f[i], opts);
    if (!colon.equals(prev, opts)) return false;
  }
  return true;
}

struct HEntry {
  int i = 0, j = 0;        // pair, 1-based; (1,2) for the single small-d h
  std::string basis_word;  // the monomial w (or its (t,s) label in the redundant family)
};

template <class F>
struct HFamily {
  std::vector<Polynomial<F>> polys;  // in k[x,T]
  std::vector<HEntry> labels;
};

template <class F>
struct TruncationModel {
  ReesModel<F> rees;  // a_l = d - d_l, zero blocks kept
  RingPtr<F> x_ring;  // k[x1..xn]
  std::vector<Polynomial<F>> f;
  std::vector<int> degrees;
  int d = 0;

  explicit TruncationModel(F field) : rees(std::move(field)) {}

  int n() const { return rees.n; }
  int r() const { return static_cast<int>(f.size()); }
  const std::vector<int>& a() const { return rees.a; }
  /// d_1 + d_2 - d; zero when r = 1.
  int delta() const { return r() >= 2 ? std::max(0, degrees[0] + degrees[1] - d) : 0; }
  bool large_d() const { return r() < 2 || d >= degrees[0] + degrees[1]; }

  static TruncationModel make(F field, int n, const std::vector<std::string>& texts, int d, bool check_regular = true) {
    if (n < 2) throw Error("n must be at least 2");
    if (texts.empty()) throw Error("the f-list is empty");
    TruncationModel m(field);
    std::vector<std::string> names;
    for (int s = 1; s <= n; ++s) names.push_back(x_name(s));
    m.x_ring = Ring<F>::generic(field, names);
    for (const auto& t : texts) {
      auto p = parse_poly(m.x_ring, t);
      if (p.is_zero()) throw Error("f_i must be nonzero");
      auto deg = p.weighted_degree("total");
      if (!deg) throw Error("f_i must be homogeneous: " + t);
      if (*deg < 1) throw Error("f_i must have positive degree: " + t);
      m.degrees.push_back(static_cast<int>(*deg));
      m.f.push_back(std::move(p));
    }
    for (std::size_t i = 1; i < m.degrees.size(); ++i) {
      if (m.degrees[i] > m.degrees[i - 1]) throw Error("the f-list must have descending degrees");
    }
    if (static_cast<int>(m.f.size()) > n) throw Error("r must not exceed n");
    if (d < m.degrees.front()) throw Error("d must be at least deg f_1 = " + std::to_string(m.degrees.front()));
    if (check_regular && !check_regular_sequence(m.f)) throw Error("the f-list is not a regular sequence");
    m.d = d;
    std::vector<int> a;
    for (int di : m.degrees) a.push_back(d - di);
    m.rees = ReesModel<F>::make(field, n, a);
    names.push_back("t");
    m.chi_ring_ = Ring<F>::generic(field, names);
    return m;
  }

  static TruncationModel make(F field, const TruncationInstance& ti, bool check_regular = true) {
    return make(std::move(field), ti.n, ti.f, ti.d, check_regular);
  }

  Polynomial<F> f_in_target(int l) const { return f[l - 1].change_ring(rees.target_ring); }

  /// Generators x^{a_l,j} f_l, aligned with the T-variables of k[T] (descending).
  std::vector<Polynomial<F>> truncation_generators() const {
    std::vector<Polynomial<F>> out;
    for (const auto& v : rees.t_ring->variables()) {
      int l = v.label->block;
      auto e = x_exponents(a()[l - 1], v.label->index);
      out.push_back(Polynomial<F>::monomial(x_ring, Monomial(e)) * f[l - 1]);
    }
    return out;
  }

  /// χ: k[x,T] -> k[x,t], T_{l,j} -> x^{a_l,j} f_l t.
  AlgebraMap<F> chi() const {
    auto target = chi_target();
    auto t = Polynomial<F>::variable(target, "t");
    std::vector<Polynomial<F>> images;
    for (const auto& v : rees.s_ring->variables()) {
      if (v.label->block == 0) {
        images.push_back(Polynomial<F>::variable(target, v.name));
      } else {
        int l = v.label->block;
        auto mono = Polynomial<F>::monomial(target, x_monomial_in(target, a()[l - 1], v.label->index));
        images.push_back(mono * f[l - 1].change_ring(target) * t);
      }
    }
    return AlgebraMap<F>(rees.s_ring, target, std::move(images));
  }

  /// Fiber map: k[T] -> k[x,t], T_{l,j} -> x^{a_l,j} f_l t.
  AlgebraMap<F> fiber_map() const {
    auto target = chi_target();
    auto t = Polynomial<F>::variable(target, "t");
    std::vector<Polynomial<F>> images;
    for (const auto& v : rees.t_ring->variables()) {
      int l = v.label->block;
      auto mono = Polynomial<F>::monomial(target, x_monomial_in(target, a()[l - 1], v.label->index));
      images.push_back(mono * f[l - 1].change_ring(target) * t);
    }
    return AlgebraMap<F>(rees.t_ring, target, std::move(images));
  }

  /// h-polynomials. For d >= d_1 + d_2: one per pair i < j and monomial w of
  /// degree σ_{i,j}, from the syzygy -f_j e_i + f_i e_j. For r = 2 and smaller
  /// d: the single h from the column (-f_2, f_1). `redundant` switches to
  /// the (t,s)-indexed spanning family x^{σ,t,s}.
  HFamily<F> h_polynomials(bool redundant = false) const {
    HFamily<F> fam;
    if (r() < 2) return fam;
    const F& k = rees.field;
    if (large_d()) {
      for (int i = 1; i <= r(); ++i) {
        for (int j = i + 1; j <= r(); ++j) {
          int sigma = d - degrees[i - 1] - degrees[j - 1];
          for (const auto& [w, label] : sigma_words(sigma, redundant)) {
            auto wp = Polynomial<F>::monomial(x_ring, w);
            auto h = expand(wp * f[i - 1], j, Monomial(rees.s_ring->nvars()), k.one()) +
                     expand(wp * f[j - 1], i, Monomial(rees.s_ring->nvars()), k.neg(k.one()));
            fam.polys.push_back(std::move(h));
            fam.labels.push_back({i, j, label});
          }
        }
      }
      return fam;
    }
    if (r() > 2) throw OutOfProvenRange("r >= 3 with d < d_1 + d_2 is outside the proven range");
    int del = delta();
    auto h = split_expand(f[1], 1, del, k.neg(k.one())) + split_expand(f[0], 2, del, k.one());
    fam.polys.push_back(std::move(h));
    fam.labels.push_back({1, 2, "(-f2, f1)"});
    return fam;
  }

  /// Defining ideal of R(I) in k[x,T].
  Ideal<F> rees_presentation(const GbOptions& opts = {}) const {
    auto minors = rees.minors_C();
    auto hs = h_polynomials();
    if (large_d()) {
      auto gens = minors.generators();
      gens.insert(gens.end(), hs.polys.begin(), hs.polys.end());
      return checked(Ideal<F>(rees.s_ring, std::move(gens)));
    }
    int del = delta();
    Ideal<F> hL = Ideal<F>(rees.s_ring, hs.polys) * Ideal<F>(rees.s_ring, a_geq_generators(rees.s_ring, del));
    Ideal<F> current = hL + minors;
    auto x1 = Polynomial<F>::variable(rees.s_ring, x_name(1));
    for (int k = 0; k < del; ++k) current = Ideal<F>(rees.s_ring, ideal_colon(current, x1, opts).groebner(opts));
    return checked(current);
  }

  /// Defining ideal of F(I) in k[T].
  Ideal<F> fiber_presentation(const GbOptions& opts = {}) const {
    if (large_d()) {
      auto gens = rees.minors_B().generators();
      for (const auto& h : h_polynomials().polys) gens.push_back(h.change_ring(rees.t_ring));
      return Ideal<F>(rees.t_ring, std::move(gens));
    }
    // F(I) = R(I) / m R(I): set x = 0 in the Rees ideal.
    auto rees_ideal = rees_presentation(opts);
    std::vector<Polynomial<F>> images;
    for (const auto& v : rees.s_ring->variables()) {
      images.push_back(v.label->block == 0 ? Polynomial<F>(rees.t_ring) : Polynomial<F>::variable(rees.t_ring, v.name));
    }
    AlgebraMap<F> kill_x(rees.s_ring, rees.t_ring, std::move(images));
    std::vector<Polynomial<F>> gens;
    for (const auto& g : rees_ideal.groebner(opts)) {
      auto p = kill_x.apply(g);
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
    return Ideal<F>(rees.t_ring, std::move(gens));
  }

 private:
  RingPtr<F> chi_target() const { return chi_ring_; }

  static Monomial x_monomial_in(const RingPtr<F>& ring, int a_l, const MultiIndex& j) {
    auto e = x_exponents(a_l, j);
    Monomial m(ring->nvars());
    for (std::size_t i = 0; i < e.size(); ++i) m.set(i, e[i]);
    return m;
  }

  Monomial lift_x(const Monomial& xm) const {
    Monomial m(rees.s_ring->nvars());
    for (int s = 1; s <= n(); ++s) {
      if (xm[s - 1]) m.set(rees.s_ring->index_of(x_name(s)), xm[s - 1]);
    }
    return m;
  }

  /// Σ c_u u (deg u = a_l) rewritten as Σ c c_u x_factor T_{l,idx(u)} in k[x,T].
  Polynomial<F> expand(const Polynomial<F>& p, int l, const Monomial& x_factor, const typename F::Element& c) const {
    const F& k = rees.field;
    std::vector<Term<F>> terms;
    for (const auto& t : p.terms()) {
      if (static_cast<int>(t.mono.degree()) != a()[l - 1]) {
        throw Error("internal error: term of degree " + std::to_string(t.mono.degree()) + " cannot be expanded in block " + std::to_string(l));
      }
      std::vector<Exponent> e(t.mono.exponents().begin(), t.mono.exponents().end());
      auto name = t_name(l, index_of_exponents(e));
      terms.push_back({k.mul(c, t.coeff), Monomial::variable(rees.s_ring->nvars(), rees.s_ring->index_of(name)) * x_factor});
    }
    return Polynomial<F>::from_terms(rees.s_ring, std::move(terms));
  }

  /// Each term u of p splits as (first δ variables from x_1 upward) * (rest of degree a_l).
  Polynomial<F> split_expand(const Polynomial<F>& p, int l, int del, const typename F::Element& c) const {
    Polynomial<F> out(rees.s_ring);
    for (const auto& t : p.terms()) {
      Monomial xf(n()), rest = t.mono;
      int need = del;
      for (int s = 0; s < n() && need > 0; ++s) {
        int take = std::min<int>(need, rest[s]);
        xf.set(s, static_cast<Exponent>(take));
        rest.set(s, static_cast<Exponent>(rest[s] - take));
        need -= take;
      }
      auto single = Polynomial<F>::monomial(x_ring, rest, t.coeff);
      out += expand(single, l, lift_x(xf), c);
    }
    return out;
  }

  /// Basis words of m^σ: plain monomials, or x^{σ,t,s} for t in J'_σ, s in 1..n.
  std::vector<std::pair<Monomial, std::string>> sigma_words(int sigma, bool redundant) const {
    std::vector<std::pair<Monomial, std::string>> out;
    if (!redundant || sigma == 0) {
      for (const auto& j : multi_index_set(sigma, n(), false)) {
        Monomial w(x_exponents(sigma, j));
        out.push_back({w, Polynomial<F>(x_ring).monomial_string(w)});
      }
      return out;
    }
    for (const auto& t : multi_index_set(sigma, n(), true)) {
      for (int s = 1; s <= n(); ++s) {
        Monomial w(x_exponents(sigma, shifted_index(t, s)));
        std::string label = "t=(";
        for (std::size_t q = 0; q < t.size(); ++q) label += (q ? "," : "") + std::to_string(t[q]);
        out.push_back({w, label + "),s=" + std::to_string(s)});
      }
    }
    return out;
  }

  Ideal<F> checked(Ideal<F> ideal) const {
    auto map = chi();
    for (const auto& g : ideal.generators()) {
      if (!map.apply(g).is_zero()) throw Error("internal error: presentation generator does not vanish under χ: " + g.to_string());
    }
    return ideal;
  }

  RingPtr<F> chi_ring_;  // k[x1..xn, t]
};

}  // namespace reeskit

#endif  // REESKIT_TRUNCATION_HPP
