#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tanaka {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct DimensionError : Error {
  using Error::Error;
};

using Rational = mpq_class;

Rational rat(long num, long den = 1);
// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

// Exact element of Q[i].
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(int re) : re_(re) {}
  Gaussian(long re) : re_(re) {}
  Gaussian(Rational re) : re_(std::move(re)) {}
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  Gaussian conj() const { return Gaussian(re_, -im_); }
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  Gaussian operator-() const { return Gaussian(-re_, -im_); }
  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

  // Exact serialization: "a/b" when real, otherwise "a/b+c/d*i" (real part always present).
  std::string str() const;
  // Compact notation used in rendered formulas: "i/2", "-3i/2", "(1+i)".
  std::string pretty() const;
  // Accepts both the exact and the compact notation.
  static Gaussian parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

// a += b * c without temporaries for the real case.
void fma_into(Gaussian& acc, const Gaussian& b, const Gaussian& c);

}  // namespace tanaka
