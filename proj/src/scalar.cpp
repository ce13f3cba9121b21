#include "a2twist/scalar.hpp"

#include <numeric>
#include <sstream>

namespace a2twist {

GaussianRational GaussianRational::i_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return GaussianRational(1);
    case 1: return {Rational(0), Rational(1)};
    case 2: return GaussianRational(-1);
    default: return {Rational(0), Rational(-1)};
  }
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
  if (is_real()) return GaussianRational(Rational(1) / re_);
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(long e) const {
  GaussianRational base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  GaussianRational acc(1);
  while (k) {
    if (k & 1UL) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return acc;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    if (sgn(im_) != 0) im_ *= o.re_;
    return *this;
  }
  if (is_real()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

void GaussianRational::add_mul(const GaussianRational& a, const GaussianRational& b) {
  if (a.is_real() && b.is_real()) {
    re_ += a.re_ * b.re_;
    return;
  }
  *this += a * b;
}

std::size_t GaussianRational::bit_size() const {
  auto bits = [](const Rational& r) {
    return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
  };
  return bits(re_) + (is_real() ? 0 : bits(im_));
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.get_str();
  mpz_class den;
  mpz_lcm(den.get_mpz_t(), re_.get_den_mpz_t(), im_.get_den_mpz_t());
  mpz_class a = re_.get_num() * (den / re_.get_den());
  mpz_class c = im_.get_num() * (den / im_.get_den());
  auto part = [&](const mpz_class& n) {
    std::string s = n.get_str();
    if (den != 1) s += "/" + den.get_str();
    return s;
  };
  std::string out;
  if (a != 0) out = part(a);
  std::string ci = part(c) + "·i";
  if (out.empty()) return ci;
  if (c > 0) return out + "+" + ci;
  return out + ci;
}

std::string QuarterInt::to_string() const {
  std::int64_t g = std::gcd(q < 0 ? -q : q, std::int64_t{4});
  if (q == 0) return "0";
  if (g == 4) return std::to_string(q / 4);
  return std::to_string(q / g) + "/" + std::to_string(4 / g);
}

std::ostream& operator<<(std::ostream& os, QuarterInt x) { return os << x.to_string(); }

}  // namespace a2twist
