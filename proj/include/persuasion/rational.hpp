#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace persuasion {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin wrapper over GMP's mpq_class: the raw class does not
// canonicalize on construction (mpq_class(2,6) stays 2/6), so every entry
// point here does.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}          // NOLINT(google-explicit-constructor)
  Rational(int n) : q_(n) {}           // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : q_(num, den) { normalize(); }
  explicit Rational(const mpq_class& q) : q_(q) { normalize(); }
  Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    normalize();
  }

  // Parses "p/q" or "p" (optionally signed). Throws on malformed input.
  static Rational parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("malformed rational: empty");
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) {
        return Rational(mpz_class(text), mpz_class(1));
      }
      const std::string num = text.substr(0, slash);
      const std::string den = text.substr(slash + 1);
      if (num.empty() || den.empty()) throw std::invalid_argument("empty part");
      return Rational(mpz_class(num), mpz_class(den));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("malformed rational: \"" + text + "\"");
    }
  }

  static Rational pow2(int e) {  // 2^e for any sign of e
    mpz_class p = 1;
    p <<= (e >= 0 ? e : -e);
    return e >= 0 ? Rational(p, 1) : Rational(1, p);
  }

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  // Canonical "p/q" text; integers render without the "/q".
  std::string str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_str();
  }
  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.q_ != b.q_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.q_ < b.q_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.q_ <= b.q_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.q_ > b.q_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.q_ >= b.q_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  void normalize() {
    if (q_.get_den() == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
  }
  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// n-choose-k as an exact rational (integer-valued).
inline Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational(b, mpz_class(1));
}

}  // namespace persuasion
