#ifndef REESKIT_RING_HPP
#define REESKIT_RING_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "reeskit/field.hpp"
#include "reeskit/order.hpp"

namespace reeskit {

/// Block/multi-index label of a variable. Block 0 holds the x-variables.
/// The index is stored as written, (j_{n-1}, ..., j_1).
struct VariableLabel {
  int block = 0;
  std::vector<int> index;

  auto operator<=>(const VariableLabel&) const = default;
};

struct VariableMeta {
  std::string name;
  std::optional<VariableLabel> label;
  std::optional<int> display_row;
};

inline bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// Immutable polynomial ring description: coefficient field, variable roster,
// monomial order and named integer gradings. Shared through shared_ptr.
template <class F>
class Ring {
 public:
  using Field = F;
  using Ptr = std::shared_ptr<const Ring>;

  /// Builds a ring whose labelled variables are sorted strictly descending by
  /// (block, index) lexicographically. Gradings "total", "std-x", "std-T" and
  /// "Deg" are populated from the labels.
  static Ptr build(F field, std::vector<VariableMeta> vars, MonomialOrder order = MonomialOrder::revlex()) {
    for (const auto& v : vars) {
      if (!v.label) throw Error("variable '" + v.name + "' has no block label");
    }
    std::stable_sort(vars.begin(), vars.end(), [](const VariableMeta& a, const VariableMeta& b) { return *a.label > *b.label; });
    for (std::size_t i = 1; i < vars.size(); ++i) {
      if (*vars[i - 1].label == *vars[i].label) {
        throw Error("duplicate variable label for '" + vars[i - 1].name + "' and '" + vars[i].name + "'");
      }
    }
    auto ring = std::shared_ptr<Ring>(new Ring(std::move(field), std::move(vars), std::move(order)));
    std::vector<int> sx, st, deg;
    for (const auto& v : ring->vars_) {
      const auto& label = *v.label;
      sx.push_back(label.block == 0 ? 1 : 0);
      st.push_back(label.block == 0 ? 0 : 1);
      // x-variables are the block-0 T-variables of the shifted sequence 1, a_1, ..., a_r.
      deg.push_back(label.index.empty() ? (label.block == 0 ? 1 : 0) : label.index.back());
    }
    ring->gradings_["std-x"] = std::move(sx);
    ring->gradings_["std-T"] = std::move(st);
    ring->gradings_["Deg"] = std::move(deg);
    return ring;
  }

  /// Unlabelled ring with variables kept in the given order (first is largest).
  static Ptr generic(F field, const std::vector<std::string>& names, MonomialOrder order = MonomialOrder::revlex()) {
    std::vector<VariableMeta> vars;
    for (const auto& n : names) vars.push_back({n, std::nullopt, std::nullopt});
    return std::shared_ptr<Ring>(new Ring(std::move(field), std::move(vars), std::move(order)));
  }

  Ptr with_order(MonomialOrder order) const {
    auto ring = std::shared_ptr<Ring>(new Ring(*this));
    ring->order_ = std::move(order);
    return ring;
  }

  Ptr with_grading(const std::string& name, std::vector<int> weights) const {
    if (weights.size() != nvars()) throw Error("grading '" + name + "' has wrong length");
    auto ring = std::shared_ptr<Ring>(new Ring(*this));
    ring->gradings_[name] = std::move(weights);
    return ring;
  }

  const F& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<VariableMeta>& variables() const { return vars_; }
  const VariableMeta& variable(std::size_t i) const { return vars_.at(i); }
  const std::string& name(std::size_t i) const { return vars_.at(i).name; }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& v : vars_) out.push_back(v.name);
    return out;
  }

  std::optional<std::size_t> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw Error("unknown variable '" + name + "'");
    return *i;
  }

  bool has_grading(const std::string& name) const { return gradings_.count(name) != 0; }

  const std::vector<int>& grading(const std::string& name) const {
    auto it = gradings_.find(name);
    if (it == gradings_.end()) throw Error("unknown grading '" + name + "'");
    return it->second;
  }

  std::vector<std::string> grading_names() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : gradings_) out.push_back(k);
    return out;
  }

  long weight(const std::string& grading_name, const Monomial& m) const {
    const auto& w = grading(grading_name);
    long total = 0;
    for (std::size_t i = 0; i < m.size(); ++i) total += static_cast<long>(w[i]) * m[i];
    return total;
  }

  /// Structural equality: same field, variable names and order.
  bool same_as(const Ring& other) const {
    if (this == &other) return true;
    if (field_.spec() != other.field_.spec() || !(order_ == other.order_) || vars_.size() != other.vars_.size()) return false;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i].name != other.vars_[i].name) return false;
    }
    return true;
  }

 private:
  Ring(F field, std::vector<VariableMeta> vars, MonomialOrder order)
      : field_(std::move(field)), vars_(std::move(vars)), order_(std::move(order)) {
    if (vars_.size() > 4096) throw Error("too many variables");
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!is_identifier(vars_[i].name)) throw Error("invalid variable name '" + vars_[i].name + "'");
      if (!index_.emplace(vars_[i].name, i).second) throw Error("duplicate variable '" + vars_[i].name + "'");
    }
    if (order_.kind() == OrderKind::BlockElimination && order_.front().size() != vars_.size()) {
      throw Error("elimination order block mask does not match the variable count");
    }
    gradings_["total"] = std::vector<int>(vars_.size(), 1);
  }

  F field_;
  std::vector<VariableMeta> vars_;
  MonomialOrder order_;
  std::unordered_map<std::string, std::size_t> index_;
  std::map<std::string, std::vector<int>> gradings_;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

/// build_ring: the τ-sorted ring over labelled variables.
template <class F>
RingPtr<F> build_ring(F field, std::vector<VariableMeta> vars, MonomialOrder order = MonomialOrder::revlex()) {
  return Ring<F>::build(std::move(field), std::move(vars), std::move(order));
}

}  // namespace reeskit

#endif  // REESKIT_RING_HPP
