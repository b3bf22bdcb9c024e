#ifndef REESKIT_ORDER_HPP
#define REESKIT_ORDER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "reeskit/monomial.hpp"

namespace reeskit {

enum class OrderKind { Lex, RevLex, BlockElimination };

// Monomial orders over a fixed variable sequence, where variable 0 is the
// largest. RevLex is the degree-compatible reverse lexicographic order:
// compare total degree, then look at the last (smallest) variable where the
// exponents differ; the monomial with the larger exponent there is smaller.
//
// BlockElimination compares the restriction to the front block first (by
// RevLex restricted to that block) and breaks ties with the inner order
// restricted to the remaining variables.
class MonomialOrder {
 public:
  MonomialOrder() = default;

  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex); }
  static MonomialOrder revlex() { return MonomialOrder(OrderKind::RevLex); }

  static MonomialOrder elimination(std::vector<bool> front, OrderKind inner = OrderKind::RevLex) {
    if (inner == OrderKind::BlockElimination) throw Error("nested block orders are not supported");
    MonomialOrder o(OrderKind::BlockElimination);
    o.front_ = std::move(front);
    o.inner_ = inner;
    return o;
  }

  OrderKind kind() const { return kind_; }
  OrderKind inner() const { return inner_; }
  const std::vector<bool>& front() const { return front_; }

  bool in_front(std::size_t i) const { return kind_ == OrderKind::BlockElimination && i < front_.size() && front_[i]; }

  /// Negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::Lex:
        return compare_lex(a, b, nullptr, false);
      case OrderKind::RevLex:
        return compare_revlex(a, b, nullptr, false);
      case OrderKind::BlockElimination: {
        int c = compare_revlex(a, b, &front_, true);
        if (c != 0) return c;
        return inner_ == OrderKind::Lex ? compare_lex(a, b, &front_, false) : compare_revlex(a, b, &front_, false);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const {
    switch (kind_) {
      case OrderKind::Lex:
        return "lex";
      case OrderKind::RevLex:
        return "revlex";
      case OrderKind::BlockElimination:
        return std::string("elimination(") + (inner_ == OrderKind::Lex ? "lex" : "revlex") + ")";
    }
    return "?";
  }

  bool operator==(const MonomialOrder&) const = default;

 private:
  explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

  // `mask` selects a block: positions with mask[i] == want are compared.
  static bool selected(const std::vector<bool>* mask, bool want, std::size_t i) {
    if (mask == nullptr) return true;
    bool in = i < mask->size() && (*mask)[i];
    return in == want;
  }

  static int compare_lex(const Monomial& a, const Monomial& b, const std::vector<bool>* mask, bool want) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!selected(mask, want, i) || a[i] == b[i]) continue;
      return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }

  static int compare_revlex(const Monomial& a, const Monomial& b, const std::vector<bool>* mask, bool want) {
    std::uint32_t da = 0, db = 0;
    if (mask == nullptr) {
      da = a.degree();
      db = b.degree();
    } else {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (selected(mask, want, i)) {
          da += a[i];
          db += b[i];
        }
      }
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (!selected(mask, want, i) || a[i] == b[i]) continue;
      return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  OrderKind kind_ = OrderKind::RevLex;
  OrderKind inner_ = OrderKind::RevLex;
  std::vector<bool> front_;
};

}  // namespace reeskit

#endif  // REESKIT_ORDER_HPP
