#ifndef REESKIT_REES_HPP
#define REESKIT_REES_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "reeskit/ideal.hpp"

namespace reeskit {

/// Multi-index stored as written, (j_{n-1}, ..., j_1).
using MultiIndex = std::vector<int>;

inline long binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// J_a (or J'_a when strict), ascending under τ (lex on the written entries).
inline std::vector<MultiIndex> multi_index_set(int a, int n, bool strict) {
  if (a < 0 || n < 1) throw Error("multi_index_set needs a >= 0 and n >= 1");
  std::vector<MultiIndex> out;
  MultiIndex cur(n - 1, 0);
  // entries written left to right are weakly decreasing: j_{n-1} >= ... >= j_1
  auto rec = [&](auto&& self, int pos, int cap) -> void {
    if (pos == n - 1) {
      if (!strict || n == 1 || cur.back() >= 1) out.push_back(cur);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      cur[pos] = v;
      self(self, pos + 1, v);
    }
  };
  if (strict && a == 0 && n > 1) return out;
  rec(rec, 0, a);
  return out;
}

/// j_i for i in 1..n-1 from the written form; j_0 = 0 and j_n = a.
inline int index_entry(const MultiIndex& j, int i, int a) {
  int n = static_cast<int>(j.size()) + 1;
  if (i <= 0) return 0;
  if (i >= n) return a;
  return j[n - 1 - i];
}

inline bool in_index_set(const MultiIndex& j, int a, bool strict) {
  int n = static_cast<int>(j.size()) + 1;
  for (int i = 1; i <= n; ++i) {
    if (index_entry(j, i, a) < index_entry(j, i - 1, a)) return false;
  }
  if (n > 1 && (j.front() > a || j.back() < (strict ? 1 : 0))) return false;
  return true;
}

/// Exponent vector (e_1, ..., e_n) of x^{a,j}: e_i = j_i - j_{i-1}.
inline std::vector<Exponent> x_exponents(int a, const MultiIndex& j) {
  if (!in_index_set(j, a, false)) throw Error("multi-index is not in J_a");
  int n = static_cast<int>(j.size()) + 1;
  std::vector<Exponent> e(n);
  for (int i = 1; i <= n; ++i) e[i - 1] = static_cast<Exponent>(index_entry(j, i, a) - index_entry(j, i - 1, a));
  return e;
}

/// Inverse of x_exponents: j_i = e_1 + ... + e_i.
inline MultiIndex index_of_exponents(const std::vector<Exponent>& e) {
  int n = static_cast<int>(e.size());
  MultiIndex j(n - 1);
  int acc = 0;
  for (int i = 1; i < n; ++i) {
    acc += e[i - 1];
    j[n - 1 - i] = acc;
  }
  return j;
}

/// Index of the renamed variable T_{l,j,s}: entries j_i with i < s drop by one.
inline MultiIndex shifted_index(const MultiIndex& j, int s) {
  int n = static_cast<int>(j.size()) + 1;
  if (s < 1 || s > n) throw Error("row out of range");
  if (n > 1 && j.back() < 1) throw Error("entry variable needs a strict multi-index");
  MultiIndex out = j;
  for (int i = 1; i < s; ++i) out[n - 1 - i] -= 1;
  return out;
}

inline std::string t_name(int l, const MultiIndex& j) {
  std::string s = "T_" + std::to_string(l);
  for (int v : j) s += "_" + std::to_string(v);
  return s;
}

inline std::string x_name(int s) { return "x" + std::to_string(s); }

/// Index (1^{n-s}, 0^{s-1}) of x_s as a block-0 variable.
inline MultiIndex x_index(int n, int s) {
  MultiIndex j(n - 1, 0);
  for (int i = 0; i < n - s; ++i) j[i] = 1;
  return j;
}

/// Name of T_{l,j,s}.
inline std::string entry_variable(int l, const MultiIndex& j, int s) {
  auto idx = shifted_index(j, s);
  if (l == 0) {
    int n = static_cast<int>(j.size()) + 1;
    for (int t = 1; t <= n; ++t) {
      if (x_index(n, t) == idx) return x_name(t);
    }
    throw Error("block 0 index is not an x-variable");
  }
  return t_name(l, idx);
}

struct ColumnLabel {
  int block = 0;
  MultiIndex index;
  auto operator<=>(const ColumnLabel&) const = default;
};

/// n-row matrix of variable names; columns ascending under τ left to right.
struct VarMatrix {
  int rows = 0;
  std::vector<ColumnLabel> columns;
  std::vector<std::vector<std::string>> entries;  // entries[s-1][c]

  std::size_t cols() const { return columns.size(); }
  const std::string& at(int s, std::size_t c) const { return entries.at(s - 1).at(c); }

  VarMatrix select_columns(const std::vector<std::size_t>& picks) const {
    VarMatrix m;
    m.rows = rows;
    m.entries.resize(rows);
    auto sorted = picks;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto c : sorted) {
      m.columns.push_back(columns.at(c));
      for (int s = 0; s < rows; ++s) m.entries[s].push_back(entries[s][c]);
    }
    return m;
  }

  /// Aligned grid, one bracketed line per row.
  std::string to_string() const {
    std::vector<std::size_t> width(cols(), 0);
    for (const auto& row : entries) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : entries) {
      out += "[ ";
      for (std::size_t c = 0; c < row.size(); ++c) {
        out += row[c];
        out += std::string(width[c] - row[c].size(), ' ');
        out += c + 1 < row.size() ? "  " : " ";
      }
      out += "]\n";
    }
    return out;
  }
};

inline VarMatrix build_matrix(int n, const std::vector<int>& a, bool with_x) {
  VarMatrix m;
  m.rows = n;
  m.entries.resize(n);
  auto add = [&](int l, const MultiIndex& j) {
    m.columns.push_back({l, j});
    for (int s = 1; s <= n; ++s) m.entries[s - 1].push_back(entry_variable(l, j, s));
  };
  if (with_x) add(0, MultiIndex(n - 1, 1));
  for (std::size_t l = 0; l < a.size(); ++l) {
    for (const auto& j : multi_index_set(a[l], n, true)) add(static_cast<int>(l) + 1, j);
  }
  return m;
}

/// Problem description in the powers setting: M = ⊕ m^{a_l}.
struct Instance {
  int n = 0;
  std::vector<int> a;  // ascending, zeros stripped
  int stripped_zeros = 0;
  FieldSpec field;

  int r() const { return static_cast<int>(a.size()); }

  static Instance powers(int n, std::vector<int> a, FieldSpec field = FieldSpec::rationals()) {
    if (n < 2) throw Error("n must be at least 2");
    if (a.empty()) throw Error("the a-list is empty");
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] < 0) throw Error("a_i must be non-negative");
      if (i && a[i] < a[i - 1]) throw Error("the a-list must be ascending");
    }
    Instance inst;
    inst.n = n;
    inst.field = field;
    for (int v : a) {
      if (v == 0) {
        ++inst.stripped_zeros;
      } else {
        inst.a.push_back(v);
      }
    }
    if (inst.a.empty()) throw Error("all a_i are zero; the Rees algebra is a polynomial ring");
    return inst;
  }

  std::string describe() const {
    std::string s = "n=" + std::to_string(n) + ", a=(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
  }
};

/// A 2x2 minor (c1,s)(c2,t) - (c2,s)(c1,t) with c1 < c2, s < t.
template <class F>
struct Minor {
  std::size_t c1, c2;
  int s, t;
  Polynomial<F> poly;
};

template <class F>
std::vector<Minor<F>> minors2_indexed(const VarMatrix& m, const RingPtr<F>& ring) {
  std::vector<Minor<F>> out;
  for (std::size_t c1 = 0; c1 < m.cols(); ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < m.cols(); ++c2) {
      for (int s = 1; s <= m.rows; ++s) {
        for (int t = s + 1; t <= m.rows; ++t) {
          auto v = [&](int row, std::size_t col) { return Polynomial<F>::variable(ring, m.at(row, col)); };
          auto p = v(s, c1) * v(t, c2) - v(s, c2) * v(t, c1);
          if (!p.is_zero()) out.push_back({c1, c2, s, t, std::move(p)});
        }
      }
    }
  }
  return out;
}

template <class F>
std::vector<Polynomial<F>> minors2(const VarMatrix& m, const RingPtr<F>& ring) {
  std::vector<Polynomial<F>> out;
  for (auto& mi : minors2_indexed(m, ring)) out.push_back(std::move(mi.poly));
  return out;
}

/// Monomials (c1,s)(c2,t) over all column pairs c1 < c2 and rows s < t, deduplicated.
template <class F>
std::vector<Monomial> predicted_initial_gens(const VarMatrix& m, const RingPtr<F>& ring) {
  std::vector<Monomial> out;
  for (std::size_t c1 = 0; c1 < m.cols(); ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < m.cols(); ++c2) {
      for (int s = 1; s <= m.rows; ++s) {
        for (int t = s + 1; t <= m.rows; ++t) {
          auto mono = Monomial::variable(ring->nvars(), ring->index_of(m.at(s, c1))) *
                      Monomial::variable(ring->nvars(), ring->index_of(m.at(t, c2)));
          if (std::find(out.begin(), out.end(), mono) == out.end()) out.push_back(mono);
        }
      }
    }
  }
  return out;
}

/// Rings, matrices and maps attached to (n, a). Blocks with a_l = 0 are
/// allowed here: they contribute the variable T_{l,0...0} and no column.
template <class F>
struct ReesModel {
  F field;
  int n = 0;
  std::vector<int> a;
  RingPtr<F> t_ring;       // k[T]
  RingPtr<F> s_ring;       // k[x, T]
  RingPtr<F> target_ring;  // k[x, t]
  VarMatrix B, C;

  explicit ReesModel(F f) : field(std::move(f)) {}

  int r() const { return static_cast<int>(a.size()); }

  static ReesModel make(F field, int n, std::vector<int> a) {
    if (n < 1) throw Error("n must be positive");
    ReesModel m(field);
    m.n = n;
    m.a = std::move(a);
    std::vector<VariableMeta> tvars, xvars;
    for (int l = 1; l <= m.r(); ++l) {
      for (const auto& j : multi_index_set(m.a[l - 1], n, false)) tvars.push_back({t_name(l, j), VariableLabel{l, j}, std::nullopt});
    }
    for (int s = 1; s <= n; ++s) xvars.push_back({x_name(s), VariableLabel{0, x_index(n, s)}, s});
    m.t_ring = build_ring(field, tvars);
    auto all = tvars;
    all.insert(all.end(), xvars.begin(), xvars.end());
    m.s_ring = build_ring(field, all);
    std::vector<std::string> tgt;
    for (int s = 1; s <= n; ++s) tgt.push_back(x_name(s));
    for (int l = 1; l <= m.r(); ++l) tgt.push_back("t" + std::to_string(l));
    m.target_ring = Ring<F>::generic(field, tgt);
    m.B = build_matrix(n, m.a, false);
    m.C = build_matrix(n, m.a, true);
    return m;
  }

  static ReesModel make(F field, const Instance& inst) { return make(std::move(field), inst.n, inst.a); }

  /// x^{a_l,j} in the target ring.
  Polynomial<F> x_monomial(int a_l, const MultiIndex& j) const {
    auto e = x_exponents(a_l, j);
    Monomial mono(target_ring->nvars());
    for (int i = 0; i < n; ++i) mono.set(i, e[i]);
    return Polynomial<F>::monomial(target_ring, mono);
  }

  Polynomial<F> t_var(int l) const { return Polynomial<F>::variable(target_ring, "t" + std::to_string(l)); }

  /// Label of a T-variable by name.
  const VariableLabel& label(const std::string& name) const { return *s_ring->variable(s_ring->index_of(name)).label; }

  /// φ: k[x,T] -> k[x,t], T_{l,j} -> x^{a_l,j} t_l, x_i -> x_i.
  AlgebraMap<F> phi() const {
    std::vector<Polynomial<F>> images;
    for (const auto& v : s_ring->variables()) {
      if (v.label->block == 0) {
        images.push_back(Polynomial<F>::variable(target_ring, v.name));
      } else {
        images.push_back(x_monomial(a[v.label->block - 1], v.label->index) * t_var(v.label->block));
      }
    }
    return AlgebraMap<F>(s_ring, target_ring, std::move(images));
  }

  /// ψ: the restriction of φ to k[T].
  AlgebraMap<F> psi() const {
    std::vector<Polynomial<F>> images;
    for (const auto& v : t_ring->variables()) images.push_back(x_monomial(a[v.label->block - 1], v.label->index) * t_var(v.label->block));
    return AlgebraMap<F>(t_ring, target_ring, std::move(images));
  }

  Ideal<F> minors_B() const { return Ideal<F>(t_ring, minors2(B, t_ring)); }
  Ideal<F> minors_C() const { return Ideal<F>(s_ring, minors2(C, s_ring)); }

  /// K: the first-row variables of B, in k[T].
  Ideal<F> K() const {
    std::vector<Polynomial<F>> g;
    for (std::size_t c = 0; c < B.cols(); ++c) g.push_back(Polynomial<F>::variable(t_ring, B.at(1, c)));
    return Ideal<F>(t_ring, std::move(g));
  }

  /// L: the first-row variables of C, in k[x,T].
  Ideal<F> L() const {
    std::vector<Polynomial<F>> g;
    for (std::size_t c = 0; c < C.cols(); ++c) g.push_back(Polynomial<F>::variable(s_ring, C.at(1, c)));
    return Ideal<F>(s_ring, std::move(g));
  }

  /// P: all variables T_{r,j}, in k[T].
  Ideal<F> P() const {
    std::vector<Polynomial<F>> g;
    for (const auto& j : multi_index_set(a.back(), n, false)) g.push_back(Polynomial<F>::variable(t_ring, t_name(r(), j)));
    return Ideal<F>(t_ring, std::move(g));
  }

  /// T_{r,(a_r,...,a_r)}.
  Polynomial<F> top_variable() const { return Polynomial<F>::variable(t_ring, t_name(r(), MultiIndex(n - 1, a.back()))); }

  /// Witness U: T_{l,0..0} for every l and T_{r,(a_r^k,0^{n-1-k})} for k = n-1..1.
  /// The C version uses the shifted sequence (1, a), which adds x_n.
  std::vector<std::size_t> dim_witness(bool for_C) const {
    const auto& ring = for_C ? s_ring : t_ring;
    std::vector<std::string> names;
    if (for_C) names.push_back(x_name(n));
    for (int l = 1; l <= r(); ++l) names.push_back(t_name(l, MultiIndex(n - 1, 0)));
    for (int k = n - 1; k >= 1; --k) {
      MultiIndex j(n - 1, 0);
      for (int i = 0; i < k; ++i) j[i] = a.back();
      names.push_back(t_name(r(), j));
    }
    std::vector<std::size_t> out;
    for (const auto& nm : names) out.push_back(ring->index_of(nm));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

/// Minimal monomial generators of the ideal of monomials with Deg >= δ in the
/// given ring, built from the positive-Deg variables.
template <class F>
std::vector<Polynomial<F>> a_geq_generators(const RingPtr<F>& ring, int delta) {
  if (delta < 1) throw Error("δ must be at least 1");
  const auto& w = ring->grading("Deg");
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0) pos.push_back(i);
  }
  std::vector<Polynomial<F>> out;
  Monomial cur(ring->nvars());
  auto rec = [&](auto&& self, std::size_t start, int sum, int min_w) -> void {
    if (sum >= delta) {
      if (sum - min_w < delta) out.push_back(Polynomial<F>::monomial(ring, cur));
      return;
    }
    for (std::size_t k = start; k < pos.size(); ++k) {
      auto v = pos[k];
      cur.set(v, cur[v] + 1);
      self(self, k, sum + w[v], std::min(min_w, w[v]));
      cur.set(v, cur[v] - 1);
    }
  };
  rec(rec, 0, 0, 1 << 30);
  return out;
}

}  // namespace reeskit

#endif  // REESKIT_REES_HPP
