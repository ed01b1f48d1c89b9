#ifndef SALLY_FIELD_HPP
#define SALLY_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sally {

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::PrimeField;
  long p = 32003;  // used when kind == PrimeField

  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && (kind == FieldKind::Rationals || p == o.p);
  }
  std::string str() const {
    return kind == FieldKind::Rationals ? "QQ" : "GF(" + std::to_string(p) + ")";
  }
};

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

inline void validate(const FieldSpec& f) {
  if (f.kind == FieldKind::PrimeField && !is_prime(f.p))
    throw std::invalid_argument("field modulus " + std::to_string(f.p) + " is not prime");
}

// Element of GF(p). The modulus travels with the value so mixed-field
// arithmetic faults loudly instead of corrupting coefficients.
struct GF {
  int64_t v = 0;
  int64_t p = 0;  // p == 0 marks a default-constructed zero usable with any modulus

  GF() = default;
  GF(int64_t value, int64_t modulus) : p(modulus) {
    v = value % modulus;
    if (v < 0) v += modulus;
  }
  static GF from_int(long n, const FieldSpec& fs) { return GF(n, fs.p); }

  bool is_zero() const { return v == 0; }

  friend int64_t common_mod(const GF& a, const GF& b) {
    if (a.p && b.p && a.p != b.p) throw std::logic_error("GF modulus mismatch");
    return a.p ? a.p : b.p;
  }
  friend GF operator+(const GF& a, const GF& b) {
    int64_t m = common_mod(a, b);
    if (!m) return GF();
    return GF(a.v + b.v, m);
  }
  friend GF operator-(const GF& a, const GF& b) {
    int64_t m = common_mod(a, b);
    if (!m) return GF();
    return GF(a.v - b.v, m);
  }
  friend GF operator*(const GF& a, const GF& b) {
    int64_t m = common_mod(a, b);
    if (!m) return GF();
    return GF(a.v * b.v, m);
  }
  GF operator-() const { return p ? GF(-v, p) : GF(); }
  GF inv() const {
    if (v == 0) throw std::domain_error("division by zero in GF(p)");
    // extended Euclid
    int64_t a = v, b = p, x0 = 1, x1 = 0;
    while (b) {
      int64_t q = a / b;
      a -= q * b; std::swap(a, b);
      x0 -= q * x1; std::swap(x0, x1);
    }
    return GF(x0, p);
  }
  friend GF operator/(const GF& a, const GF& b) { return a * b.inv(); }
  bool operator==(const GF& o) const { return v == o.v; }
  bool operator!=(const GF& o) const { return v != o.v; }

  // balanced representative for display: -1 rather than p-1
  std::string str() const { return std::to_string(p && 2 * v > p ? v - p : v); }
};

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (cpp_rational maintains that canonical form).
struct Rat {
  boost::multiprecision::cpp_rational v;

  Rat() = default;
  explicit Rat(long n) : v(n) {}
  Rat(boost::multiprecision::cpp_rational x) : v(std::move(x)) {}
  static Rat from_int(long n, const FieldSpec&) { return Rat(n); }

  bool is_zero() const { return v == 0; }
  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v + b.v); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v - b.v); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v * b.v); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.v == 0) throw std::domain_error("division by zero in QQ");
    return Rat(a.v / b.v);
  }
  Rat operator-() const { return Rat(-v); }
  Rat inv() const {
    if (v == 0) throw std::domain_error("division by zero in QQ");
    return Rat(1 / v);
  }
  bool operator==(const Rat& o) const { return v == o.v; }
  bool operator!=(const Rat& o) const { return v != o.v; }

  std::string str() const { return v.str(); }
};

}  // namespace sally

#endif
