#ifndef REESKIT_SPAIR_HPP
#define REESKIT_SPAIR_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "reeskit/rees.hpp"

namespace reeskit {

enum class EntryRole { TopLeft, BottomRight };

inline const char* to_string(EntryRole r) { return r == EntryRole::TopLeft ? "TL" : "BR"; }

/// Certificate that the S-pair of two minors h1 = ag - ef, h2 = ad - bc reduces
/// to zero through d*h1 - g*h2 = b*(cg - fG) - f*(de - bG), where cg - fG and
/// de - bG are (up to sign) minors of the same matrix or zero and both right
/// hand terms lie strictly below lcm(LT h1, LT h2) = adg.
/// case_label: 0 coprime leading terms, 1 shared TL/TL, 2 mixed, 3 shared
/// BR/BR, -1 unclassified.
struct SPairCertificate {
  int case_label = -1;
  bool equal_leading_terms = false;
  std::string minor1, minor2;
  std::string a, b, c, d, e, f, g, G;
  std::string m1, m2;
  std::string roles;
  bool verified = false;
  std::vector<std::string> checks;
};

/// Minors of a matrix keyed by their printed form and that of their negation.
template <class F>
class MinorTable {
 public:
  MinorTable(const VarMatrix& m, const RingPtr<F>& ring) : matrix_(&m), ring_(ring), minors_(minors2_indexed(m, ring)) {
    for (std::size_t i = 0; i < minors_.size(); ++i) {
      index_.emplace(minors_[i].poly.to_string(), i);
      index_.emplace((-minors_[i].poly).to_string(), i);
    }
    for (const auto& row : m.entries) {
      for (const auto& name : row) {
        if (std::find(entries_.begin(), entries_.end(), name) == entries_.end()) entries_.push_back(name);
      }
    }
  }

  const std::vector<Minor<F>>& minors() const { return minors_; }
  const std::vector<std::string>& entries() const { return entries_; }
  const VarMatrix& matrix() const { return *matrix_; }
  const RingPtr<F>& ring() const { return ring_; }

  /// ±minor or zero.
  bool is_minor_or_zero(const Polynomial<F>& p) const { return p.is_zero() || index_.count(p.to_string()) != 0; }

 private:
  const VarMatrix* matrix_;
  RingPtr<F> ring_;
  std::vector<Minor<F>> minors_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::string> entries_;
};

/// Writes p as a signed sum of minors, each with leading term equal to the
/// current leading term of the remainder and strictly below `bound`. Returns
/// the chain as text, or nullopt when some step has no matching minor.
template <class F>
std::optional<std::string> reduction_chain(const MinorTable<F>& table, Polynomial<F> p, const Monomial& bound) {
  const auto& order = table.ring()->order();
  const auto& k = table.ring()->field();
  std::string chain;
  Polynomial<F> sum(table.ring());
  const Polynomial<F> target = p;
  while (!p.is_zero()) {
    if (order.compare(p.leading_monomial(), bound) >= 0) return std::nullopt;
    const Minor<F>* hit = nullptr;
    for (const auto& m : table.minors()) {
      if (m.poly.leading_monomial() == p.leading_monomial()) {
        hit = &m;
        break;
      }
    }
    if (!hit) return std::nullopt;
    auto c = k.div(p.leading_coefficient(), hit->poly.leading_coefficient());
    p = p.add_scaled(hit->poly, k.neg(c), Monomial(p.ring()->nvars()));
    sum = sum + hit->poly.scaled(c);
    if (!chain.empty()) chain += " + ";
    chain += "(" + k.to_string(c) + ")*(" + hit->poly.to_string() + ")";
  }
  if (!(sum == target)) return std::nullopt;
  return chain.empty() ? std::string("0") : chain;
}

namespace detail {

template <class F>
std::vector<EntryRole> roles_of(const Minor<F>& m, const VarMatrix& mat, const std::string& v) {
  std::vector<EntryRole> out;
  if (mat.at(m.s, m.c1) == v) out.push_back(EntryRole::TopLeft);
  if (mat.at(m.t, m.c2) == v) out.push_back(EntryRole::BottomRight);
  return out;
}

inline int case_of(EntryRole r1, EntryRole r2) {
  if (r1 == EntryRole::TopLeft && r2 == EntryRole::TopLeft) return 1;
  if (r1 == EntryRole::BottomRight && r2 == EntryRole::BottomRight) return 3;
  return 2;
}

}  // namespace detail

template <class F>
SPairCertificate structured_spair_certificate(const MinorTable<F>& table, std::size_t i1, std::size_t i2) {
  const auto& mat = table.matrix();
  const auto& ring = table.ring();
  const auto& order = ring->order();
  const auto& h1 = table.minors().at(i1);
  const auto& h2 = table.minors().at(i2);
  SPairCertificate cert;
  cert.minor1 = h1.poly.to_string();
  cert.minor2 = h2.poly.to_string();
  // Predicted leading terms must be the diagonal products.
  auto diag = [&](const Minor<F>& m) {
    return Monomial::variable(ring->nvars(), ring->index_of(mat.at(m.s, m.c1))) *
           Monomial::variable(ring->nvars(), ring->index_of(mat.at(m.t, m.c2)));
  };
  if (!(h1.poly.leading_monomial() == diag(h1)) || !(h2.poly.leading_monomial() == diag(h2))) {
    cert.checks.push_back("leading term is not the diagonal product");
    return cert;
  }
  const auto& L1 = h1.poly.leading_monomial();
  const auto& L2 = h2.poly.leading_monomial();
  if (L1.coprime(L2)) {
    cert.case_label = 0;
    cert.verified = true;
    cert.checks.push_back("coprime leading terms");
    return cert;
  }
  cert.equal_leading_terms = L1 == L2;
  auto var = [&](const std::string& name) { return Polynomial<F>::variable(ring, name); };
  auto lcm = Monomial::lcm(L1, L2);
  auto H1 = h1.poly.monic();
  auto H2 = h2.poly.monic();

  std::vector<std::string> shared;
  for (auto v : L1.support()) {
    if (L2[v]) shared.push_back(ring->name(v));
  }
  for (const auto& a : shared) {
    auto other = [&](const Monomial& L) {
      auto q = L.quotient(Monomial::variable(ring->nvars(), ring->index_of(a)));
      return ring->name(q.support().front());
    };
    std::string g = other(L1), d = other(L2);
    std::string tail1[2] = {mat.at(h1.s, h1.c2), mat.at(h1.t, h1.c1)};
    std::string tail2[2] = {mat.at(h2.s, h2.c2), mat.at(h2.t, h2.c1)};
    auto r1 = detail::roles_of(h1, mat, a);
    auto r2 = detail::roles_of(h2, mat, a);
    if (cert.equal_leading_terms) {
      // S(h1,h2) = h1 - h2 has lower degree-2 terms only; certify it by an
      // explicit chain of minors whose leading terms stay below LT(h1).
      auto chain = reduction_chain(table, H1 - H2, lcm);
      if (!chain) continue;
      cert.case_label = detail::case_of(r1.front(), r2.front());
      cert.roles = std::string(to_string(r1.front())) + "/" + to_string(r2.front());
      cert.a = a;
      cert.g = g;
      cert.d = d;
      cert.m1 = (H1 - H2).to_string();
      cert.m2 = *chain;
      cert.checks.push_back("equal leading terms; h1 - h2 is a signed sum of minors with leading terms below LT(h1)");
      cert.verified = true;
      return cert;
    }
    auto lhs = var(d) * H1 - var(g) * H2;
    for (int o1 = 0; o1 < 2; ++o1) {
      for (int o2 = 0; o2 < 2; ++o2) {
        const auto& e = tail1[o1];
        const auto& f = tail1[1 - o1];
        const auto& b = tail2[o2];
        const auto& c = tail2[1 - o2];
        for (const auto& G : table.entries()) {
          auto m1 = var(c) * var(g) - var(f) * var(G);
          auto m2 = var(d) * var(e) - var(b) * var(G);
          if (!table.is_minor_or_zero(m1) || !table.is_minor_or_zero(m2)) continue;
          if (!(lhs == var(b) * m1 - var(f) * m2)) continue;
          if (!m1.is_zero() && order.compare((var(b) * m1).leading_monomial(), lcm) >= 0) continue;
          if (!m2.is_zero() && order.compare((var(f) * m2).leading_monomial(), lcm) >= 0) continue;
          cert.case_label = detail::case_of(r1.front(), r2.front());
          cert.roles = std::string(to_string(r1.front())) + "/" + to_string(r2.front());
          cert.a = a;
          cert.b = b;
          cert.c = c;
          cert.d = d;
          cert.e = e;
          cert.f = f;
          cert.g = g;
          cert.G = G;
          cert.m1 = m1.to_string();
          cert.m2 = m2.to_string();
          cert.checks.push_back("identity d*h1 - g*h2 = b*m1 - f*m2 holds exactly");
          cert.checks.push_back("m1, m2 are minors (up to sign) or zero");
          cert.checks.push_back("LT(b*m1), LT(f*m2) < lcm");
          cert.verified = true;
          return cert;
        }
      }
    }
  }
  cert.checks.push_back("no entry G completes the identity");
  return cert;
}

struct CertificateSummary {
  std::size_t pairs = 0, coprime = 0, case1 = 0, case2 = 0, case3 = 0, equal_lt = 0;
  std::vector<SPairCertificate> unclassified;
  bool ok() const { return unclassified.empty(); }
};

template <class F>
CertificateSummary certify_all_pairs(const MinorTable<F>& table) {
  CertificateSummary sum;
  const auto n = table.minors().size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto cert = structured_spair_certificate(table, i, j);
      ++sum.pairs;
      if (cert.equal_leading_terms) ++sum.equal_lt;
      switch (cert.case_label) {
        case 0: ++sum.coprime; break;
        case 1: ++sum.case1; break;
        case 2: ++sum.case2; break;
        case 3: ++sum.case3; break;
        default: sum.unclassified.push_back(std::move(cert));
      }
    }
  }
  return sum;
}

}  // namespace reeskit

#endif  // REESKIT_SPAIR_HPP
