#include "isoschubert/dyadic.hpp"

#include "isoschubert/partition.hpp"

namespace isoschubert {

Dyadic Dyadic::pow2(int e) {
  Dyadic d;
  if (e >= 0) {
    mpz_ui_pow_ui(d.num_.get_mpz_t(), 2, static_cast<unsigned long>(e));
  } else {
    d.num_ = 1;
    d.den2_ = -e;
  }
  return d;
}

void Dyadic::normalize() {
  if (num_ == 0) {
    den2_ = 0;
    return;
  }
  if (den2_ < 0) {
    num_ <<= static_cast<mp_bitcnt_t>(-den2_);
    den2_ = 0;
    return;
  }
  if (den2_ == 0) return;
  const auto tz = static_cast<int>(mpz_scan1(num_.get_mpz_t(), 0));
  const int shift = tz < den2_ ? tz : den2_;
  if (shift > 0) {
    mpz_tdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(),
                    static_cast<mp_bitcnt_t>(shift));
    den2_ -= shift;
  }
}

Integer Dyadic::to_integer() const {
  if (den2_ != 0) throw InternalError("non-integral coefficient " + to_string());
  return num_;
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
  if (den2_ == o.den2_) {
    num_ += o.num_;
  } else if (den2_ > o.den2_) {
    num_ += Integer(o.num_ << static_cast<mp_bitcnt_t>(den2_ - o.den2_));
  } else {
    num_ <<= static_cast<mp_bitcnt_t>(o.den2_ - den2_);
    num_ += o.num_;
    den2_ = o.den2_;
  }
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& o) { return *this += -o; }

Dyadic& Dyadic::operator*=(const Dyadic& o) {
  num_ *= o.num_;
  den2_ += o.den2_;
  normalize();
  return *this;
}

std::string Dyadic::to_string() const {
  std::string s = num_.get_str();
  if (den2_ > 0) s += "/2^" + std::to_string(den2_);
  return s;
}

}  // namespace isoschubert
