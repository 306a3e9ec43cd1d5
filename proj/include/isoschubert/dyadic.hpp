#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace isoschubert {

using Integer = mpz_class;

/// Exact rational num / 2^den2 kept in lowest terms (num odd whenever
/// den2 > 0). Zero is 0/2^0.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Dyadic(Integer v) : num_(std::move(v)) {}  // NOLINT
  Dyadic(Integer num, int den2) : num_(std::move(num)), den2_(den2) {
    normalize();
  }

  /// 2^e for any integer e.
  static Dyadic pow2(int e);

  const Integer& num() const { return num_; }
  int den2() const { return den2_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den2_ == 0; }
  /// Throws InternalError when not integral.
  Integer to_integer() const;

  Dyadic& operator+=(const Dyadic& o);
  Dyadic& operator-=(const Dyadic& o);
  Dyadic& operator*=(const Dyadic& o);
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }
  friend Dyadic operator-(Dyadic a) {
    a.num_ = -a.num_;
    return a;
  }
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.den2_ == b.den2_ && a.num_ == b.num_;
  }

  /// "n" or "n/2^e".
  std::string to_string() const;

 private:
  void normalize();

  Integer num_{0};
  int den2_{0};
};

inline bool is_zero(const Integer& v) { return v == 0; }
inline bool is_zero(const Dyadic& v) { return v.is_zero(); }

}  // namespace isoschubert
