#ifndef REESKIT_MONOMIAL_HPP
#define REESKIT_MONOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "reeskit/field.hpp"

namespace reeskit {

using Exponent = std::uint16_t;

// Dense exponent vector of fixed arity. Caches the total degree and a folded
// support bitmask so that most failed divisibility tests cost one AND.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) { refresh(); }

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1) {
    Monomial m(nvars);
    m.set(index, power);
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  void set(std::size_t i, Exponent value) {
    exps_[i] = value;
    refresh();
  }

  std::uint32_t degree() const { return degree_; }
  std::uint64_t support_mask() const { return mask_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_ || (mask_ & ~other.mask_) != 0) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  bool coprime(const Monomial& other) const {
    if ((mask_ & other.mask_) == 0) return true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    }
    return true;
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] != 0) out.push_back(i);
    }
    return out;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    m.refresh();
    return m;
  }

  /// this / divisor; the caller guarantees divisor | this.
  Monomial quotient(const Monomial& divisor) const {
    Monomial m(size());
    for (std::size_t i = 0; i < size(); ++i) m.exps_[i] = static_cast<Exponent>(exps_[i] - divisor.exps_[i]);
    m.refresh();
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      unsigned sum = unsigned(a.exps_[i]) + b.exps_[i];
      if (sum > std::numeric_limits<Exponent>::max()) throw Error("exponent overflow");
      m.exps_[i] = static_cast<Exponent>(sum);
    }
    m.refresh();
    return m;
  }

  bool operator==(const Monomial& other) const {
    return degree_ == other.degree_ && mask_ == other.mask_ && exps_ == other.exps_;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (Exponent e : exps_) h = (h ^ e) * 1099511628211ULL;
    return h;
  }

 private:
  void refresh() {
    degree_ = 0;
    mask_ = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      degree_ += exps_[i];
      if (exps_[i] != 0) mask_ |= std::uint64_t{1} << (i % 64);
    }
  }

  std::vector<Exponent> exps_;
  std::uint32_t degree_ = 0;
  std::uint64_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace reeskit

#endif  // REESKIT_MONOMIAL_HPP
