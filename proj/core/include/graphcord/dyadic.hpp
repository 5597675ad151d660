#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace graphcord {

// Exact rational with a power-of-two denominator: value = num / 2^den_exp.
// Graph-state amplitudes are all +-2^(-n/2), so every reduced-matrix entry,
// purity, and purity sum handled here is representable exactly as a Dyadic.
// Normal form: den_exp == 0 when num == 0, otherwise num is odd or den_exp == 0.
class Dyadic {
 public:
  constexpr Dyadic() = default;
  constexpr Dyadic(std::int64_t integer) : num_(integer) {}  // NOLINT(google-explicit-constructor)

  // num / 2^den_exp, brought to normal form.
  static constexpr Dyadic ratio(std::int64_t num, int den_exp) {
    if (den_exp < 0 || den_exp > 62) {
      throw std::domain_error("Dyadic::ratio: denominator exponent out of range");
    }
    Dyadic d;
    d.num_ = num;
    d.den_exp_ = den_exp;
    d.normalize();
    return d;
  }

  constexpr std::int64_t numerator() const { return num_; }
  constexpr int denominator_exponent() const { return den_exp_; }
  constexpr std::int64_t denominator() const { return std::int64_t{1} << den_exp_; }
  constexpr bool is_integer() const { return den_exp_ == 0; }
  constexpr bool is_zero() const { return num_ == 0; }

  double to_double() const { return std::ldexp(static_cast<double>(num_), -den_exp_); }

  std::string to_string() const {
    return std::to_string(num_) + "/" + std::to_string(denominator());
  }

  friend constexpr Dyadic operator+(Dyadic a, Dyadic b) {
    const int e = a.den_exp_ > b.den_exp_ ? a.den_exp_ : b.den_exp_;
    Dyadic r;
    r.num_ = (a.num_ << (e - a.den_exp_)) + (b.num_ << (e - b.den_exp_));
    r.den_exp_ = e;
    r.normalize();
    return r;
  }

  friend constexpr Dyadic operator-(Dyadic a, Dyadic b) { return a + (-b); }

  friend constexpr Dyadic operator*(Dyadic a, Dyadic b) {
    Dyadic r;
    r.num_ = a.num_ * b.num_;
    r.den_exp_ = a.den_exp_ + b.den_exp_;
    r.normalize();
    return r;
  }

  constexpr Dyadic operator-() const {
    Dyadic r = *this;
    r.num_ = -r.num_;
    return r;
  }

  Dyadic& operator+=(Dyadic o) { return *this = *this + o; }
  Dyadic& operator-=(Dyadic o) { return *this = *this - o; }

  friend constexpr bool operator==(Dyadic a, Dyadic b) = default;

  friend constexpr bool operator<(Dyadic a, Dyadic b) {
    const int e = a.den_exp_ > b.den_exp_ ? a.den_exp_ : b.den_exp_;
    const auto la = static_cast<__int128>(a.num_) << (e - a.den_exp_);
    const auto lb = static_cast<__int128>(b.num_) << (e - b.den_exp_);
    return la < lb;
  }
  friend constexpr bool operator>(Dyadic a, Dyadic b) { return b < a; }
  friend constexpr bool operator<=(Dyadic a, Dyadic b) { return !(b < a); }
  friend constexpr bool operator>=(Dyadic a, Dyadic b) { return !(a < b); }

 private:
  constexpr void normalize() {
    if (num_ == 0) {
      den_exp_ = 0;
      return;
    }
    while (den_exp_ > 0 && (num_ & 1) == 0) {
      num_ >>= 1;
      --den_exp_;
    }
  }

  std::int64_t num_ = 0;
  int den_exp_ = 0;
};

}  // namespace graphcord
