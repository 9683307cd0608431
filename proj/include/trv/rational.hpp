#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trv {

using i128 = __int128;

// All pipeline quantities fit comfortably in 128 bits (worst-case numerators
// stay below ~10^26 for n <= 699), but every add/mul is still checked so that
// an out-of-range input fails loudly instead of wrapping.
inline i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("i128 add");
  return r;
}

inline i128 checked_sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("i128 sub");
  return r;
}

inline i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("i128 mul");
  return r;
}

inline i128 gcd_i128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// floor(a/b) for b > 0
inline i128 floor_div(i128 a, i128 b) {
  i128 q = a / b, r = a % b;
  return (r != 0 && r < 0) ? q - 1 : q;
}

// ceil(a/b) for b > 0
inline i128 ceil_div(i128 a, i128 b) {
  i128 q = a / b, r = a % b;
  return (r != 0 && r > 0) ? q + 1 : q;
}

std::string i128_to_string(i128 v);

// Exact rational over 128-bit integers. Invariant: den > 0, gcd(num, den) = 1.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  Rat(i128 n) : num_(n), den_(1) {}
  Rat(int64_t n) : num_(n), den_(1) {}
  Rat(int n) : num_(n), den_(1) {}
  Rat(i128 n, i128 d) : num_(n), den_(d) { normalize(); }

  i128 num() const { return num_; }
  i128 den() const { return den_; }

  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  bool is_integer() const { return den_ == 1; }

  Rat operator-() const { return Rat(-num_, den_, raw_tag{}); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    i128 g = gcd_i128(a.den_, b.den_);
    i128 bd = b.den_ / g;
    i128 n = checked_add(checked_mul(a.num_, bd), checked_mul(b.num_, a.den_ / g));
    return Rat(n, checked_mul(a.den_, bd));
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    i128 g1 = gcd_i128(a.num_, b.den_);
    i128 g2 = gcd_i128(b.num_, a.den_);
    return Rat(checked_mul(a.num_ / g1, b.num_ / g2),
               checked_mul(a.den_ / g2, b.den_ / g1), norm_sign_tag{});
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat division by zero");
    i128 g1 = gcd_i128(a.num_, b.num_);
    i128 g2 = gcd_i128(b.den_, a.den_);
    return Rat(checked_mul(a.num_ / g1, b.den_ / g2),
               checked_mul(a.den_ / g2, b.num_ / g1), norm_sign_tag{});
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  i128 floor() const { return floor_div(num_, den_); }
  i128 ceil() const { return ceil_div(num_, den_); }

  Rat abs() const { return num_ < 0 ? -*this : *this; }

  std::string str() const;

 private:
  struct raw_tag {};
  struct norm_sign_tag {};
  Rat(i128 n, i128 d, raw_tag) : num_(n), den_(d) {}
  // gcd already cleared, only the sign may need fixing
  Rat(i128 n, i128 d, norm_sign_tag) : num_(n), den_(d) {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rat zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    i128 g = gcd_i128(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  i128 num_;
  i128 den_;
};

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }
// (x)_+ and (x)_-
inline Rat pos_part(const Rat& x) { return x.sign() > 0 ? x : Rat(0); }
inline Rat neg_part(const Rat& x) { return x.sign() < 0 ? x : Rat(0); }

}  // namespace trv
