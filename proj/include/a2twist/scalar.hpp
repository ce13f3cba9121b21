#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace a2twist {

using Rational = mpq_class;

/// Exact element of Q(i). Both parts are kept canonical (lowest terms).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT: implicit from integers is intended
  GaussianRational(int v) : re_(v) {}   // NOLINT
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  /// i^k for any integer k.
  static GaussianRational i_pow(long k);
  static GaussianRational frac(long num, long den) { return GaussianRational(Rational(num, den)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return is_real() && re_ == 1; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  /// Throws std::domain_error on zero.
  GaussianRational inverse() const;
  /// Integer power; negative exponents go through inverse().
  GaussianRational pow(long e) const;

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator*=(const Rational& r) {
    re_ *= r;
    if (sgn(im_) != 0) im_ *= r;
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  /// this += a * b, without a temporary when both are real.
  void add_mul(const GaussianRational& a, const GaussianRational& b);
  void add_mul(const Rational& r, const GaussianRational& b) {
    re_ += r * b.re_;
    if (sgn(b.im_) != 0) im_ += r * b.im_;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Total bit size of numerators and denominators; used for pivot selection.
  std::size_t bit_size() const;

  /// "a/b+c/b·i" with a common denominator b; plain "a/b" when real.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.to_string(); }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Element of (1/4)Z stored in quarter units.
struct QuarterInt {
  std::int64_t q = 0;

  constexpr QuarterInt() = default;
  constexpr explicit QuarterInt(std::int64_t quarters) : q(quarters) {}
  static constexpr QuarterInt from_int(std::int64_t n) { return QuarterInt(4 * n); }
  static constexpr QuarterInt frac(std::int64_t num, std::int64_t den) {
    // den must divide 4
    return QuarterInt(num * (4 / den));
  }

  /// Residue of q mod 4 in [0, 4).
  constexpr int residue() const { return static_cast<int>(((q % 4) + 4) % 4); }
  constexpr bool is_integer() const { return residue() == 0; }
  constexpr bool is_half_odd() const { return residue() == 2; }
  constexpr bool is_one_quarter() const { return residue() == 1; }
  constexpr bool is_three_quarter() const { return residue() == 3; }
  constexpr bool is_half_integer() const { return residue() % 2 == 0; }

  Rational value() const {
    Rational r(static_cast<long>(q), 4);
    r.canonicalize();
    return r;
  }

  constexpr QuarterInt operator-() const { return QuarterInt(-q); }
  constexpr QuarterInt& operator+=(QuarterInt o) {
    q += o.q;
    return *this;
  }
  constexpr QuarterInt& operator-=(QuarterInt o) {
    q -= o.q;
    return *this;
  }
  friend constexpr QuarterInt operator+(QuarterInt a, QuarterInt b) { return QuarterInt(a.q + b.q); }
  friend constexpr QuarterInt operator-(QuarterInt a, QuarterInt b) { return QuarterInt(a.q - b.q); }
  friend constexpr auto operator<=>(QuarterInt a, QuarterInt b) = default;

  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, QuarterInt x);

}  // namespace a2twist
