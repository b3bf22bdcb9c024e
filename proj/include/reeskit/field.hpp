#ifndef REESKIT_FIELD_HPP
#define REESKIT_FIELD_HPP

#include <gmpxx.h>

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace reeskit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, b = mulmod(b, b)) {
      if (e & 1) r = mulmod(r, b);
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  for (; (d & 1) == 0; d >>= 1) ++s;
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

enum class FieldKind { Rationals, PrimeField };

/// Description of a coefficient field: the rationals or F_p.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t characteristic = 0;

  static FieldSpec rationals() { return {}; }

  static FieldSpec prime(std::uint64_t p) {
    if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1ULL << 63)) throw Error("field characteristic too large");
    return {FieldKind::PrimeField, p};
  }

  /// Accepts "Q" or "Fp:<p>".
  static FieldSpec parse(std::string_view text) {
    if (text == "Q" || text == "QQ") return rationals();
    if (text.starts_with("Fp:")) {
      auto digits = text.substr(3);
      std::uint64_t p = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
        throw Error("malformed field characteristic in '" + std::string(text) + "'");
      }
      return prime(p);
    }
    throw Error("unknown field '" + std::string(text) + "' (expected Q or Fp:<prime>)");
  }

  std::string to_string() const {
    return kind == FieldKind::Rationals ? "Q" : "Fp:" + std::to_string(characteristic);
  }

  bool operator==(const FieldSpec&) const = default;
};

/// Exact rational arithmetic backed by GMP; values are always reduced fractions.
class Rationals {
 public:
  using Element = mpq_class;

  FieldSpec spec() const { return FieldSpec::rationals(); }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_integer(long v) const { return Element(v); }

  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw Error("zero denominator");
    Element q(num, den);
    q.canonicalize();
    return q;
  }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw Error("division by zero");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  /// True when printing should show a leading minus.
  bool is_negative(const Element& a) const { return sgn(a) < 0; }
  std::string to_string(const Element& a) const { return a.get_str(); }
};

/// The prime field F_p with canonical representatives in [0, p).
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(FieldSpec::prime(p).characteristic) {}

  FieldSpec spec() const { return {FieldKind::PrimeField, p_}; }
  std::uint64_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1 % p_; }

  Element from_integer(long v) const { return from_mpz(mpz_class(v)); }

  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    Element d = from_mpz(den);
    if (d == 0) throw Error("coefficient denominator vanishes in " + spec().to_string());
    return div(from_mpz(num), d);
  }

  bool is_zero(const Element& a) const { return a == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(Element a, Element b) const {
    Element s = a + b;
    return (s >= p_ || s < a) ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<unsigned __int128>(a) * b % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const {
    if (a == 0) throw Error("division by zero");
    // Fermat: a^(p-2)
    Element r = 1, b = a;
    for (std::uint64_t e = p_ - 2; e; e >>= 1, b = mul(b, b)) {
      if (e & 1) r = mul(r, b);
    }
    return r;
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_negative(const Element& a) const { return a > p_ / 2; }  // symmetric residues when printing
  std::string to_string(const Element& a) const { return std::to_string(a); }

 private:
  Element from_mpz(const mpz_class& v) const {
    mpz_class modulus(std::to_string(p_));
    mpz_class m = v % modulus;
    if (m < 0) m += modulus;
    return std::stoull(m.get_str());
  }

  std::uint64_t p_;
};

}  // namespace reeskit

#endif  // REESKIT_FIELD_HPP
