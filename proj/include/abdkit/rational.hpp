#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "abdkit/errors.hpp"

namespace abdkit {

// Exact rational scalar.
//
// Thin value wrapper around GMP's mpq_class.  Every result is materialized
// and canonicalized (lowest terms, positive denominator, zero is 0/1), and
// the gmpxx expression templates never escape this class.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}                // NOLINT: implicit by design
  Rat(int n) : v_(static_cast<long>(n)) {}  // NOLINT
  Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw InputError("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Parses "p" or "p/q" with optional leading minus sign.
  static Rat parse(const std::string& s);

  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) throw InputError("division by zero");
    return Rat(mpq_class(v_ / o.v_));
  }
  Rat operator-() const { return Rat(mpq_class(-v_)); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; v_.canonicalize(); return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; v_.canonicalize(); return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; v_.canonicalize(); return *this; }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }
  bool operator>(const Rat& o) const { return v_ > o.v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  Rat inverse() const {
    if (is_zero()) throw InputError("inverse of zero");
    return Rat(mpq_class(1 / v_));
  }
  Rat abs() const { return sign() < 0 ? -*this : *this; }

  // "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

private:
  mpq_class v_;
};

inline Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw InputError("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw InputError("rational with zero denominator");
  q.canonicalize();
  return Rat(q);
}

inline std::string Rat::str() const {
  return v_.get_str();  // mpq prints "p" or "p/q" in canonical form
}

inline std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace abdkit
